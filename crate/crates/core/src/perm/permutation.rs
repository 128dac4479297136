use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of the points `0..n`.
///
/// Products follow function composition: `a.compose(&b)` applies `b` first
/// and then `a`, so `(a ∘ b)(x) = a(b(x))`. Cycle notation is written with
/// 0-based points, e.g. `(0 1 2)(3 4)`, and the identity prints as `()`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    /// Image list without validation; callers guarantee bijectivity.
    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Perm {
        debug_assert!(Perm::from_images(images.iter().map(|&i| i as usize).collect()).is_ok());
        Perm { images }
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if touched[p] {
                    return Err(Error::NotAPermutation(format!(
                        "point {p} appears twice in {cycles:?}"
                    )));
                }
                touched[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm::from_images(images)
    }

    /// Parses cycle notation at a fixed degree.
    pub fn parse_with_degree(text: &str, degree: usize) -> Result<Perm> {
        let cycles = parse_cycles(text)?;
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Perm::from_cycles(degree, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.mul(other))
    }

    /// Unchecked `self ∘ other`.
    #[inline]
    pub fn mul(&self, other: &Perm) -> Perm {
        Perm {
            images: other
                .images
                .iter()
                .map(|&i| self.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// `self ∘ other ∘ self⁻¹`.
    pub fn conjugate(&self, other: &Perm) -> Perm {
        let mut out = vec![0u32; self.images.len()];
        for (i, &j) in other.images.iter().enumerate() {
            out[self.images[i] as usize] = self.images[j as usize];
        }
        Perm { images: out }
    }

    /// `self⁻¹ ∘ other`.
    pub(crate) fn inv_mul(&self, other: &Perm) -> Perm {
        let mut out = vec![0u32; self.images.len()];
        let inv = self.inverse();
        for (i, o) in out.iter_mut().enumerate() {
            *o = inv.images[other.images[i] as usize];
        }
        Perm { images: out }
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&a, &b)| self.images[b as usize] == other.images[a as usize])
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i as u32 == j)
            .map(|(i, _)| i)
    }

    /// Disjoint cycles of length at least two, each starting at its least
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Sorted cycle lengths, fixed points included as 1-cycles.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable();
        lens
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let text = text.trim();
    let mut cycles = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
        let close = open
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unbalanced parenthesis in {text:?}")))?;
        let body = &open[..close];
        let cycle = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad point {s:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Parses cycle notation, taking the degree to be one more than the largest
/// point mentioned.
impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Perm> {
        let cycles = parse_cycles(s)?;
        let degree = cycles.iter().flatten().map(|&p| p + 1).max().unwrap_or(0);
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Perm::from_cycles(degree, &refs)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}

/// Parses a group file: one permutation per line in cycle notation, `#`
/// starting a comment. All generators share the largest degree seen.
pub fn parse_generators(text: &str) -> Result<Vec<Perm>> {
    let mut all = Vec::new();
    for line in text.lines() {
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        all.push(parse_cycles(line)?);
    }
    let degree = all
        .iter()
        .flatten()
        .flatten()
        .map(|&p| p + 1)
        .max()
        .unwrap_or(1);
    all.iter()
        .map(|cycles| {
            let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
            Perm::from_cycles(degree, &refs)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse_with_degree(s, n).unwrap()
    }

    #[test]
    fn compose_identity_and_involution() {
        let c = p("(0 1 2)", 3);
        assert_eq!(c.compose(&Perm::identity(3)).unwrap(), c);
        let t = p("(0 1)", 3);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn compose_applies_right_factor_first() {
        // (0 1 2) ∘ (0 1): 0 -> 1 -> 2, 1 -> 0 -> 1, 2 -> 2 -> 0.
        let a = p("(0 1 2)", 3);
        let b = p("(0 1)", 3);
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.images().collect::<Vec<_>>(), vec![2, 1, 0]);
        assert_eq!(ab.to_string(), "(0 2)");
        assert_eq!(b.compose(&a).unwrap().to_string(), "(1 2)");
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = Perm::identity(3).compose(&Perm::identity(4)).unwrap_err();
        assert_eq!(
            err,
            Error::DegreeMismatch {
                expected: 3,
                found: 4
            }
        );
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(Perm::identity(4).to_string(), "()");
        let q: Perm = "(0 1 2)(3 4)".parse().unwrap();
        assert_eq!(q.degree(), 5);
        assert_eq!(q.to_string(), "(0 1 2)(3 4)");
        assert_eq!(q.cycle_type(), vec![2, 3]);
        assert_eq!(q.order(), 6);
        assert!(Perm::parse_with_degree("(0 5)", 3).is_err());
        assert!(Perm::parse_with_degree("(0 1)(1 2)", 3).is_err());
        assert!("(0 1".parse::<Perm>().is_err());
    }

    #[test]
    fn from_images_checks_bijection() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn group_file_parsing() {
        let gens = parse_generators("# S4\n(0 1)\n\n(0 1 2 3) # 4-cycle\n").unwrap();
        assert_eq!(gens.len(), 2);
        assert!(gens.iter().all(|g| g.degree() == 4));
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_and_conjugate(a in perm_strategy(7), b in perm_strategy(7)) {
            prop_assert!(a.mul(&a.inverse()).is_identity());
            prop_assert_eq!(a.conjugate(&b), a.mul(&b).mul(&a.inverse()));
            prop_assert_eq!(a.inv_mul(&b), a.inverse().mul(&b));
            prop_assert_eq!(a.commutes_with(&b), a.mul(&b) == b.mul(&a));
            prop_assert!(a.pow(a.order()).is_identity());
        }

        #[test]
        fn text_form_round_trips(a in perm_strategy(9)) {
            prop_assert_eq!(Perm::parse_with_degree(&a.to_string(), 9).unwrap(), a);
        }
    }
}
