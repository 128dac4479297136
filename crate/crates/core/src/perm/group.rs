//! Permutation groups indexed by a base and strong generating set.
//!
//! The chain is built by deterministic Schreier–Sims: base points are taken
//! in increasing numeric order after any caller-supplied prefix, and every
//! Schreier generator is sifted, so two runs on the same input produce the
//! same chain.

use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub(crate) base_point: usize,
    /// Strong generators fixing every earlier base point.
    pub(crate) gens: Vec<Perm>,
    pub(crate) orbit: Vec<usize>,
    /// `transversal[β]` maps the base point to `β`.
    pub(crate) transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Level {
        let mut level = Level {
            base_point,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: Vec::new(),
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        let mut transversal: Vec<Option<Perm>> = vec![None; degree];
        transversal[self.base_point] = Some(Perm::identity(degree));
        let mut orbit = vec![self.base_point];
        let mut k = 0;
        while k < orbit.len() {
            let beta = orbit[k];
            for s in &self.gens {
                let img = s.apply(beta);
                if transversal[img].is_none() {
                    let u = s.mul(transversal[beta].as_ref().unwrap());
                    transversal[img] = Some(u);
                    orbit.push(img);
                }
            }
            k += 1;
        }
        self.orbit = orbit;
        self.transversal = transversal;
    }
}

/// A permutation group given by generators, with a stabilizer chain.
///
/// Immutable after construction and safe to share across threads.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: Vec<Level>,
}

impl PermGroup {
    /// Builds the group generated by `gens`.
    pub fn from_generators(gens: &[Perm]) -> Result<PermGroup> {
        Self::with_base_prefix(gens, &[])
    }

    /// Builds the group with a base beginning with `prefix`.
    pub fn with_base_prefix(gens: &[Perm], prefix: &[usize]) -> Result<PermGroup> {
        let first = gens.first().ok_or(Error::EmptyGenerators)?;
        let degree = first.degree();
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        for &p in prefix {
            if p >= degree {
                return Err(Error::PointOutOfRange { point: p, degree });
            }
        }
        let chain = schreier_sims(degree, gens, prefix);
        Ok(PermGroup {
            degree,
            generators: gens.to_vec(),
            chain,
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            generators: vec![Perm::identity(degree)],
            chain: Vec::new(),
        }
    }

    /// The symmetric group on `degree` points.
    pub fn symmetric(degree: usize) -> PermGroup {
        if degree < 2 {
            return PermGroup::trivial(degree);
        }
        let t = Perm::from_cycles(degree, &[&[0, 1]]).unwrap();
        let c: Vec<usize> = (0..degree).collect();
        let c = Perm::from_cycles(degree, &[&c]).unwrap();
        PermGroup::from_generators(&[t, c]).unwrap()
    }

    /// The alternating group on `degree` points, generated by 3-cycles.
    pub fn alternating(degree: usize) -> PermGroup {
        if degree < 3 {
            return PermGroup::trivial(degree);
        }
        let gens: Vec<Perm> = (2..degree)
            .map(|k| Perm::from_cycles(degree, &[&[0, 1, k]]).unwrap())
            .collect();
        PermGroup::from_generators(&gens).unwrap()
    }

    pub fn cyclic(degree: usize) -> PermGroup {
        if degree < 2 {
            return PermGroup::trivial(degree);
        }
        let c: Vec<usize> = (0..degree).collect();
        PermGroup::from_generators(&[Perm::from_cycles(degree, &[&c]).unwrap()]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.iter().map(|l| l.base_point).collect()
    }

    /// Strong generators: the generators of the first chain level.
    pub fn strong_generators(&self) -> &[Perm] {
        self.chain.first().map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    /// Product of the fundamental orbit lengths.
    pub fn order(&self) -> u128 {
        self.chain.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Sifts `g` through the chain; returns the residue and the level where
    /// sifting stopped (`chain.len()` when it went all the way through).
    fn sift(&self, g: &Perm) -> (Perm, usize) {
        sift(&self.chain, g, 0)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.sift(g);
        j == self.chain.len() && h.is_identity()
    }

    /// Membership test returning the nontrivial sift residue as a witness of
    /// non-membership.
    pub fn membership_witness(&self, g: &Perm) -> Option<Perm> {
        let (h, j) = self.sift(g);
        if j == self.chain.len() && h.is_identity() {
            None
        } else {
            Some(h)
        }
    }

    pub fn orbit(&self, x: usize) -> Vec<usize> {
        orbit_under(&self.generators, self.degree, x)
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let o = self.orbit(x);
                for &y in &o {
                    seen[y] = true;
                }
                out.push(o);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    /// The point stabilizer `G_x`.
    pub fn stabilizer(&self, x: usize) -> Result<PermGroup> {
        self.pointwise_stabilizer(&[x])
    }

    /// The pointwise stabilizer of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        let mut distinct: Vec<usize> = Vec::with_capacity(points.len());
        for &p in points {
            if !distinct.contains(&p) {
                distinct.push(p);
            }
        }
        let rebased = PermGroup::with_base_prefix(&self.generators, &distinct)?;
        Ok(rebased.tail(distinct.len()))
    }

    /// The subgroup described by chain levels `from..`.
    fn tail(&self, from: usize) -> PermGroup {
        let chain: Vec<Level> = self.chain[from.min(self.chain.len())..].to_vec();
        let generators = match chain.first() {
            Some(l) if !l.gens.is_empty() => l.gens.clone(),
            _ => vec![Perm::identity(self.degree)],
        };
        PermGroup {
            degree: self.degree,
            generators,
            chain,
        }
    }

    /// Whether `G` acts transitively on ordered `k`-tuples of distinct points.
    ///
    /// Checked as: the pointwise stabilizer of `0..i` is transitive on the
    /// remaining points, for every `i < k`.
    pub fn is_k_transitive(&self, k: usize) -> Result<bool> {
        if k == 0 || k > self.degree {
            return Err(Error::InvalidArgument(format!(
                "k = {k} outside 1..={}",
                self.degree
            )));
        }
        Ok(self.transitive_prefix(k) >= k)
    }

    /// Largest `k ≤ cap` (and `≤ degree`) for which the action is
    /// `k`-transitive; 0 when intransitive.
    pub fn transitivity_degree(&self, cap: usize) -> usize {
        self.transitive_prefix(cap.min(self.degree))
    }

    fn transitive_prefix(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        let prefix: Vec<usize> = (0..k).collect();
        let rebased =
            PermGroup::with_base_prefix(&self.generators, &prefix).expect("prefix in range");
        let mut count = 0;
        for (i, level) in rebased.chain.iter().take(k).enumerate() {
            if level.orbit.len() == self.degree - i {
                count += 1;
            } else {
                break;
            }
        }
        count
    }

    /// Frobenius test: distinct point stabilizers meet trivially. Regular
    /// groups qualify. For 2-transitive groups one pair suffices since all
    /// pairs are conjugate.
    pub fn is_frobenius_action(&self) -> Result<bool> {
        if self.degree < 2 || !self.is_transitive() {
            return Err(Error::Intransitive {
                what: "Frobenius test",
            });
        }
        if self.is_k_transitive(2)? {
            return Ok(self.pointwise_stabilizer(&[0, 1])?.is_trivial());
        }
        for x in 0..self.degree {
            let gx = self.stabilizer(x)?;
            if gx.is_trivial() {
                continue;
            }
            for y in x + 1..self.degree {
                if !gx.stabilizer(y)?.is_trivial() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Enumerates every element. Fails when the order exceeds `cap`.
    pub fn elements(&self, cap: u128) -> Result<Vec<Perm>> {
        let order = self.order();
        if order > cap {
            return Err(Error::CapExceeded {
                what: "element enumeration",
                needed: order,
                cap,
            });
        }
        let mut out = vec![Perm::identity(self.degree)];
        // Elements are products u_0 ∘ u_1 ∘ ... ∘ u_{k-1}; build from the
        // bottom of the chain upwards.
        for level in self.chain.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &beta in &level.orbit {
                let u = level.transversal[beta].as_ref().unwrap();
                for g in &out {
                    next.push(u.mul(g));
                }
            }
            out = next;
        }
        Ok(out)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, a)| g[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Whether the action is regular: transitive with trivial stabilizers.
    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order() == self.degree as u128
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }
}

fn orbit_under(gens: &[Perm], degree: usize, x: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[x] = true;
    let mut orbit = vec![x];
    let mut k = 0;
    while k < orbit.len() {
        let y = orbit[k];
        for g in gens {
            let z = g.apply(y);
            if !seen[z] {
                seen[z] = true;
                orbit.push(z);
            }
        }
        k += 1;
    }
    orbit
}

fn sift(chain: &[Level], g: &Perm, start: usize) -> (Perm, usize) {
    let mut h = g.clone();
    for (i, level) in chain.iter().enumerate().skip(start) {
        let beta = h.apply(level.base_point);
        match &level.transversal[beta] {
            Some(u) => h = u.inv_mul(&h),
            None => return (h, i),
        }
    }
    (h, chain.len())
}

fn first_moved_point(g: &Perm) -> Option<usize> {
    (0..g.degree()).find(|&i| g.apply(i) != i)
}

fn schreier_sims(degree: usize, gens: &[Perm], prefix: &[usize]) -> Vec<Level> {
    let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
    let mut chain: Vec<Level> = Vec::new();
    for &p in prefix {
        if !chain.iter().any(|l| l.base_point == p) {
            chain.push(Level::new(p, degree));
        }
    }
    // Make sure each generator moves some base point.
    for g in &gens {
        if chain.iter().all(|l| g.apply(l.base_point) == l.base_point) {
            let p = first_moved_point(g).unwrap();
            chain.push(Level::new(p, degree));
        }
    }
    if chain.is_empty() {
        return chain;
    }
    // Distribute generators: level i gets generators fixing base points < i.
    for g in &gens {
        for level in chain.iter_mut() {
            level.gens.push(g.clone());
            if g.apply(level.base_point) != level.base_point {
                break;
            }
        }
    }
    for level in chain.iter_mut() {
        level.rebuild_orbit(degree);
    }

    let mut i = chain.len();
    while i > 0 {
        let level_idx = i - 1;
        match find_missing(&chain, level_idx) {
            None => i -= 1,
            Some((h, j)) => {
                if j == chain.len() {
                    let p = first_moved_point(&h).unwrap();
                    chain.push(Level::new(p, degree));
                }
                for level in chain.iter_mut().take(j + 1).skip(level_idx + 1) {
                    level.gens.push(h.clone());
                    level.rebuild_orbit(degree);
                }
                i = j + 1;
            }
        }
    }
    chain
}

/// Looks for a Schreier generator at `level_idx` that does not sift through
/// the lower levels.
fn find_missing(chain: &[Level], level_idx: usize) -> Option<(Perm, usize)> {
    let level = &chain[level_idx];
    for &beta in &level.orbit {
        let u_beta = level.transversal[beta].as_ref().unwrap();
        for s in &level.gens {
            let s_beta = s.apply(beta);
            let u_sb = level.transversal[s_beta].as_ref().unwrap();
            let schreier = u_sb.inv_mul(&s.mul(u_beta));
            if schreier.is_identity() {
                continue;
            }
            let (h, j) = sift(chain, &schreier, level_idx + 1);
            if j < chain.len() || !h.is_identity() {
                return Some((h, j));
            }
        }
    }
    None
}
