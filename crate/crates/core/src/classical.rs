//! Concrete groups from the doubly transitive case analysis: `PSL(d, q)` on
//! projective points, centralizer-size arithmetic for `PSU(3, q)`, and the
//! point stabilizer of the Ree group `²G₂(q)` as a group of `7 × 7`
//! matrices.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{prime_power, FieldCtx, FieldElem, FqMatrix};
use crate::perm::{element_cap, Perm, PermGroup};

pub const DEFAULT_DEGREE_BOUND: usize = 4096;

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `|PSL(d, q)| = q^(d(d−1)/2) ∏_{i=2..d} (q^i − 1) / gcd(d, q − 1)`.
pub fn psl_order(d: u32, q: u64) -> u128 {
    let q = q as u128;
    let mut order = q.pow(d * (d - 1) / 2);
    for i in 2..=d {
        order *= q.pow(i) - 1;
    }
    order / gcd(d as u128, q - 1)
}

/// A point of `P(V)`: coordinates with the first nonzero one equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    pub coords: Vec<FieldElem>,
    pub index: usize,
}

/// Scales `v` so that its first nonzero coordinate is 1.
pub fn normalize(ctx: &FieldCtx, v: &[FieldElem]) -> Option<Vec<FieldElem>> {
    let lead = v.iter().find(|c| !c.is_zero())?;
    let s = ctx.inv(*lead).ok()?;
    Some(v.iter().map(|&c| ctx.mul(c, s)).collect())
}

/// Every projective point of `GF(q)^d`, ordered by the position of the
/// leading 1 and then by the tail coordinates. `[1:0:…:0]` has index 0.
pub fn projective_points(ctx: &FieldCtx, d: usize) -> Vec<ProjectivePoint> {
    let q = ctx.order() as usize;
    let mut out = Vec::new();
    for lead in 0..d {
        let tail = d - lead - 1;
        for k in 0..q.pow(tail as u32) {
            let mut coords = vec![FieldElem::ZERO; d];
            coords[lead] = FieldElem::ONE;
            let mut r = k;
            for c in coords.iter_mut().skip(lead + 1) {
                *c = ctx.elem(r % q).unwrap();
                r /= q;
            }
            let index = out.len();
            out.push(ProjectivePoint { coords, index });
        }
    }
    out
}

/// The action of `PSL(d, q)` on the `(q^d − 1)/(q − 1)` projective points,
/// as the image of the elementary transvections `I + t·E_ij` with `t`
/// running over a basis of `GF(q)` over its prime field. Scalars act
/// trivially, so the image is `PSL(d, q)`.
pub fn psl_action(d: usize, q: u64) -> Result<PermGroup> {
    psl_action_bounded(d, q, DEFAULT_DEGREE_BOUND)
}

pub fn psl_action_bounded(d: usize, q: u64, degree_bound: usize) -> Result<PermGroup> {
    if d < 2 {
        return Err(Error::ExcludedParameters(format!("d = {d} < 2")));
    }
    if d == 2 && (q == 2 || q == 3) {
        return Err(Error::ExcludedParameters(format!("(d, q) = (2, {q})")));
    }
    let ctx = FieldCtx::of_order(q)?;
    let degree = (q.pow(d as u32) - 1) / (q - 1);
    if degree as usize > degree_bound {
        return Err(Error::InvalidArgument(format!(
            "degree {degree} exceeds bound {degree_bound}"
        )));
    }
    let points = projective_points(&ctx, d);
    let index: HashMap<&[FieldElem], usize> = points
        .iter()
        .map(|p| (p.coords.as_slice(), p.index))
        .collect();
    let omega = ctx.primitive_element();
    let basis: Vec<FieldElem> = (0..ctx.degree())
        .map(|k| ctx.pow(omega, k as i64).unwrap())
        .collect();
    let mut gens = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            for &t in &basis {
                // (I + t E_ij) v adds t·v_j to coordinate i.
                let images: Vec<usize> = points
                    .iter()
                    .map(|p| {
                        let mut v = p.coords.clone();
                        v[i] = ctx.add(v[i], ctx.mul(t, p.coords[j]));
                        index[normalize(&ctx, &v).unwrap().as_slice()]
                    })
                    .collect();
                gens.push(Perm::from_images(images)?);
            }
        }
    }
    PermGroup::from_generators(&gens)
}

/// Whether the stabilizer of `[1:0:…:0]` in `PSL(d, q)` has trivial center.
pub fn psl_stabilizer_center_trivial(d: usize, q: u64) -> Result<bool> {
    let g = psl_action(d, q)?;
    let stab = g.stabilizer(0)?;
    Ok(stab.center_with_cap(element_cap())?.is_trivial())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsuRow {
    pub centralizer: u128,
    pub class_size: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsuClassTable {
    pub q: u64,
    /// `gcd(3, q + 1)`.
    pub d: u64,
    pub group_order: u128,
    pub rows: Vec<PsuRow>,
    /// Whether some class has size `q³ + 1`.
    pub has_class_of_degree: bool,
}

/// Evaluates the eight centralizer orders of `PSU(3, q)` and the matching
/// class sizes `|G| / |C|`, and reports whether `q³ + 1` appears among them.
/// No group is built.
pub fn psu_class_size_table(q: u64) -> Result<PsuClassTable> {
    if q < 3 {
        return Err(Error::ExcludedParameters(format!("q = {q} < 3")));
    }
    if prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    let d = gcd(3, q as u128 + 1);
    let qq = q as u128;
    let group_order = qq.pow(3) * (qq.pow(3) + 1) * (qq * qq - 1) / d;
    let centralizers = [
        qq.pow(3) * (qq + 1) / d,
        qq * qq,
        qq * (qq + 1).pow(2) * (qq - 1) / d,
        qq * (qq + 1) / d,
        (qq + 1).pow(2),
        (qq + 1).pow(2) / d,
        (qq * qq - qq + 1) / d,
        group_order,
    ];
    let mut rows = Vec::with_capacity(8);
    for c in centralizers {
        if !group_order.is_multiple_of(c) {
            return Err(Error::InvalidArgument(format!(
                "centralizer order {c} does not divide {group_order}"
            )));
        }
        rows.push(PsuRow {
            centralizer: c,
            class_size: group_order / c,
        });
    }
    let degree = qq.pow(3) + 1;
    Ok(PsuClassTable {
        q,
        d: d as u64,
        group_order,
        has_class_of_degree: rows.iter().any(|r| r.class_size == degree),
        rows,
    })
}

/// Exponent vector of the diagonal torus element `d(λ)` for
/// `q = 3^(2d+1)`, with `e = 3^(d+1)`:
/// `(1, e−1, −e+2, 0, e−2, −e+1, −1)`.
pub fn ree_exponents(q: u64) -> Result<[i64; 7]> {
    match prime_power(q) {
        Some((3, m)) if m >= 3 && m % 2 == 1 => {
            let d = (m - 1) / 2;
            let e = 3i64.pow(d as u32 + 1);
            Ok([1, e - 1, -e + 2, 0, e - 2, -e + 1, -1])
        }
        _ => Err(Error::InvalidArgument(format!(
            "q = {q} is not of the form 3^(2d+1) with d ≥ 1"
        ))),
    }
}

/// The diagonal matrix `d(λ)` over `ctx`, which must be `GF(3^(2d+1))`.
pub fn ree_diag(ctx: &Arc<FieldCtx>, lambda: FieldElem) -> Result<FqMatrix> {
    let exps = ree_exponents(ctx.order())?;
    if lambda.is_zero() {
        return Err(Error::ZeroElement);
    }
    let diag: Vec<FieldElem> = exps
        .iter()
        .map(|&e| ctx.pow(lambda, e))
        .collect::<Result<_>>()?;
    Ok(FqMatrix::diag(ctx.clone(), &diag))
}

const REE_A: [[i64; 7]; 7] = [
    [1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 0, 0],
    [2, 0, 0, 0, 1, 0, 0],
    [0, 1, 0, 2, 0, 1, 0],
    [1, 0, 1, 0, 2, 0, 1],
];

const REE_B: [[i64; 7]; 7] = [
    [1, 0, 0, 0, 0, 0, 0],
    [2, 1, 0, 0, 0, 0, 0],
    [1, 2, 1, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0, 0],
    [2, 0, 1, 2, 1, 0, 0],
    [1, 0, 1, 2, 1, 1, 0],
    [2, 1, 1, 0, 0, 1, 1],
];

/// The two lower unitriangular generators `a` and `b` of the Ree point
/// stabilizer, read into the prime subfield of a characteristic-3 field.
pub fn ree_fixed_matrices(ctx: &Arc<FieldCtx>) -> Result<(FqMatrix, FqMatrix)> {
    if ctx.characteristic() != 3 {
        return Err(Error::WrongCharacteristic {
            expected: 3,
            found: ctx.characteristic(),
        });
    }
    let rows = |m: &[[i64; 7]; 7]| -> Result<FqMatrix> {
        let refs: Vec<&[i64]> = m.iter().map(|r| r.as_slice()).collect();
        FqMatrix::from_int_rows(ctx.clone(), &refs)
    };
    Ok((rows(&REE_A)?, rows(&REE_B)?))
}

/// Lookup tables for fields of at most 256 elements, entries as bytes.
struct ByteField {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

impl ByteField {
    fn new(ctx: &FieldCtx) -> Result<ByteField> {
        let q = ctx.order() as usize;
        if q > 256 {
            return Err(Error::InvalidArgument(format!(
                "byte-packed closure needs q ≤ 256, got {q}"
            )));
        }
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in ctx.elements() {
            for b in ctx.elements() {
                add[a.index() * q + b.index()] = ctx.add(a, b).index() as u8;
                mul[a.index() * q + b.index()] = ctx.mul(a, b).index() as u8;
            }
        }
        Ok(ByteField { q, add, mul })
    }

    fn mat_mul(&self, n: usize, a: &[u8], b: &[u8], out: &mut [u8]) {
        out.fill(0);
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k] as usize;
                if x == 0 {
                    continue;
                }
                let row = &self.mul[x * self.q..(x + 1) * self.q];
                for j in 0..n {
                    let c = &mut out[i * n + j];
                    *c = self.add[*c as usize * self.q + row[b[k * n + j] as usize] as usize];
                }
            }
        }
    }
}

/// The full element set of a finite matrix group, one byte per entry.
pub struct MatrixGroupClosure {
    ctx: Arc<FieldCtx>,
    dim: usize,
    generators: Vec<FqMatrix>,
    packed: Vec<u8>,
}

impl MatrixGroupClosure {
    pub fn order(&self) -> usize {
        self.packed.len() / (self.dim * self.dim)
    }

    pub fn generators(&self) -> &[FqMatrix] {
        &self.generators
    }

    pub fn element(&self, i: usize) -> FqMatrix {
        let s = self.dim * self.dim;
        let entries = self.packed[i * s..(i + 1) * s]
            .iter()
            .map(|&b| self.ctx.elem(b as usize).unwrap())
            .collect();
        FqMatrix::from_entries(self.ctx.clone(), self.dim, entries).unwrap()
    }

    fn packed_elements(&self) -> impl Iterator<Item = &[u8]> {
        self.packed.chunks_exact(self.dim * self.dim)
    }

    pub fn contains(&self, m: &FqMatrix) -> bool {
        let key: Vec<u8> = m.entries().iter().map(|e| e.index() as u8).collect();
        m.dim() == self.dim && self.packed_elements().any(|e| e == key.as_slice())
    }

    /// True iff the identity is the only element commuting with every
    /// generator.
    pub fn center_trivial(&self) -> bool {
        let bf = ByteField::new(&self.ctx).expect("closure was built with byte tables");
        let n = self.dim;
        let gens: Vec<Vec<u8>> = self.generators.iter().map(pack).collect();
        let identity = pack(&FqMatrix::identity(self.ctx.clone(), n));
        let (mut lhs, mut rhs) = (vec![0u8; n * n], vec![0u8; n * n]);
        for e in self.packed_elements() {
            if e == identity.as_slice() {
                continue;
            }
            let central = gens.iter().all(|g| {
                bf.mat_mul(n, e, g, &mut lhs);
                bf.mat_mul(n, g, e, &mut rhs);
                lhs == rhs
            });
            if central {
                return false;
            }
        }
        true
    }
}

fn pack(m: &FqMatrix) -> Vec<u8> {
    m.entries().iter().map(|e| e.index() as u8).collect()
}

/// Breadth-first closure of `gens` under right multiplication, refused once
/// more than `cap` elements are found.
pub fn matrix_group_closure(gens: &[FqMatrix], cap: usize) -> Result<MatrixGroupClosure> {
    let first = gens.first().ok_or(Error::EmptyGenerators)?;
    let ctx = first.ctx().clone();
    let n = first.dim();
    for g in gens {
        if g.dim() != n {
            return Err(Error::DimensionMismatch(n, g.dim()));
        }
        if **g.ctx() != *ctx {
            return Err(Error::InvalidArgument(
                "generators over different fields".into(),
            ));
        }
        g.inverse()?;
    }
    let bf = ByteField::new(&ctx)?;
    let packed_gens: Vec<Vec<u8>> = gens.iter().map(pack).collect();
    let identity = pack(&FqMatrix::identity(ctx.clone(), n));
    let s = n * n;
    let mut packed = identity.clone();
    let mut seen: HashSet<Box<[u8]>> = HashSet::new();
    seen.insert(identity.into_boxed_slice());
    let mut product = vec![0u8; s];
    let mut k = 0;
    while k * s < packed.len() {
        for g in &packed_gens {
            bf.mat_mul(n, &packed[k * s..(k + 1) * s], g, &mut product);
            if !seen.contains(product.as_slice()) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "matrix group closure",
                        needed: seen.len() as u128 + 1,
                        cap: cap as u128,
                    });
                }
                seen.insert(product.clone().into_boxed_slice());
                packed.extend_from_slice(&product);
            }
        }
        k += 1;
    }
    Ok(MatrixGroupClosure {
        ctx,
        dim: n,
        generators: gens.to_vec(),
        packed,
    })
}

/// Generators `d(λ₀), a, b` of the Ree point stabilizer over `GF(q)`.
pub fn ree_stabilizer_generators(ctx: &Arc<FieldCtx>, lambda: FieldElem) -> Result<Vec<FqMatrix>> {
    let (a, b) = ree_fixed_matrices(ctx)?;
    Ok(vec![ree_diag(ctx, lambda)?, a, b])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psl_orders_and_degrees() {
        for (d, q, degree, order) in [(2, 5, 6, 60), (2, 4, 5, 60), (3, 2, 7, 168)] {
            let g = psl_action(d, q).unwrap();
            assert_eq!(g.degree(), degree);
            assert_eq!(g.order(), order);
            assert_eq!(psl_order(d as u32, q), order);
            assert!(g.is_k_transitive(2).unwrap());
        }
        assert_eq!(psl_order(2, 11), 660);
        assert_eq!(psl_order(3, 3), 5616);
    }

    #[test]
    fn psl_excluded_parameters() {
        assert!(matches!(
            psl_action(2, 2),
            Err(Error::ExcludedParameters(_))
        ));
        assert!(matches!(
            psl_action(2, 3),
            Err(Error::ExcludedParameters(_))
        ));
        assert!(matches!(
            psl_action(1, 5),
            Err(Error::ExcludedParameters(_))
        ));
        assert!(psl_action(2, 6).is_err());
        assert!(psl_action_bounded(3, 4, 10).is_err());
    }

    #[test]
    fn projective_point_normalization() {
        let f = FieldCtx::of_order(5).unwrap();
        let pts = projective_points(&f, 3);
        assert_eq!(pts.len(), 31);
        assert_eq!(
            pts[0].coords,
            vec![FieldElem::ONE, FieldElem::ZERO, FieldElem::ZERO]
        );
        let v = vec![f.from_int(0), f.from_int(3), f.from_int(4)];
        let w: Vec<FieldElem> = v.iter().map(|&c| f.mul(c, f.from_int(2))).collect();
        assert_eq!(normalize(&f, &v), normalize(&f, &w));
        assert_eq!(normalize(&f, &v).unwrap()[1], FieldElem::ONE);
        assert!(normalize(&f, &[FieldElem::ZERO; 3]).is_none());
    }

    #[test]
    fn psl_stabilizer_centers() {
        assert!(psl_stabilizer_center_trivial(2, 5).unwrap());
        assert!(psl_stabilizer_center_trivial(2, 4).unwrap());
        let g = psl_action(2, 4).unwrap();
        assert_eq!(g.stabilizer(0).unwrap().order(), 12);
        assert!(psl_stabilizer_center_trivial(3, 3).unwrap());
    }

    #[test]
    fn psu_table_at_three() {
        let t = psu_class_size_table(3).unwrap();
        assert_eq!(t.d, 1);
        assert_eq!(t.group_order, 6048);
        let cs: Vec<u128> = t.rows.iter().map(|r| r.centralizer).collect();
        assert_eq!(cs, vec![108, 9, 96, 12, 16, 16, 7, 6048]);
        let ks: Vec<u128> = t.rows.iter().map(|r| r.class_size).collect();
        assert_eq!(ks, vec![56, 672, 63, 504, 378, 378, 864, 1]);
        assert!(!t.has_class_of_degree);
    }

    #[test]
    fn psu_tables() {
        for q in [4u64, 5, 7, 8, 9, 11] {
            let t = psu_class_size_table(q).unwrap();
            assert_eq!(t.d, if (q + 1) % 3 == 0 { 3 } else { 1 });
            assert!(!t.has_class_of_degree, "q = {q}");
            for r in &t.rows {
                assert_eq!(t.group_order % r.centralizer, 0);
                assert_eq!(t.group_order % r.class_size, 0);
            }
        }
        assert!(psu_class_size_table(2).is_err());
        assert!(psu_class_size_table(6).is_err());
    }

    #[test]
    fn ree_diagonal() {
        assert_eq!(ree_exponents(27).unwrap(), [1, 8, -7, 0, 7, -8, -1]);
        assert!(ree_exponents(9).is_err());
        assert!(ree_exponents(3).is_err());
        let f = Arc::new(FieldCtx::of_order(27).unwrap());
        assert!(ree_diag(&f, FieldElem::ONE).unwrap().is_identity());
        for l in f.units() {
            assert_eq!(ree_diag(&f, l).unwrap().det(), FieldElem::ONE);
        }
        assert_eq!(
            ree_diag(&f, FieldElem::ZERO).unwrap_err(),
            Error::ZeroElement
        );
    }

    #[test]
    fn ree_matrices() {
        let f = Arc::new(FieldCtx::of_order(27).unwrap());
        let (a, b) = ree_fixed_matrices(&f).unwrap();
        let two = f.from_int(2);
        assert_eq!(a.get(2, 0), FieldElem::ONE);
        assert_eq!(a.get(4, 0), two);
        assert_eq!(a.get(6, 4), two);
        assert_eq!(b.get(1, 0), two);
        assert_eq!(b.get(6, 0), two);
        assert_eq!(b.get(3, 2), FieldElem::ONE);
        for m in [&a, &b] {
            assert!((0..7).all(|i| m.get(i, i) == FieldElem::ONE));
            assert!((0..7).all(|i| (i + 1..7).all(|j| m.get(i, j).is_zero())));
            assert!(m.mul(&m.inverse().unwrap()).unwrap().is_identity());
        }
        let f8 = Arc::new(FieldCtx::of_order(8).unwrap());
        assert!(matches!(
            ree_fixed_matrices(&f8),
            Err(Error::WrongCharacteristic { .. })
        ));
    }

    #[test]
    fn small_closures() {
        let f = Arc::new(FieldCtx::of_order(27).unwrap());
        let i = FqMatrix::identity(f.clone(), 7);
        let c = matrix_group_closure(&[i], 10).unwrap();
        assert_eq!(c.order(), 1);
        assert!(c.center_trivial());

        let l0 = f.primitive_element();
        let dl = ree_diag(&f, l0).unwrap();
        let c = matrix_group_closure(std::slice::from_ref(&dl), 100).unwrap();
        assert_eq!(c.order(), 26);
        assert!(!c.center_trivial());

        let (a, b) = ree_fixed_matrices(&f).unwrap();
        assert!(matches!(
            matrix_group_closure(&[dl, a, b], 1000),
            Err(Error::CapExceeded { needed: 1001, .. })
        ));
    }

    #[test]
    fn closure_is_order_independent_and_inverse_closed() {
        let f = Arc::new(FieldCtx::of_order(3).unwrap());
        let x = FqMatrix::from_int_rows(f.clone(), &[&[1, 1], &[0, 1]]).unwrap();
        let y = FqMatrix::from_int_rows(f.clone(), &[&[1, 0], &[1, 1]]).unwrap();
        let c1 = matrix_group_closure(&[x.clone(), y.clone()], 1000).unwrap();
        let c2 = matrix_group_closure(&[y, x], 1000).unwrap();
        assert_eq!(c1.order(), 24); // SL(2, 3)
        assert_eq!(c2.order(), 24);
        for i in 0..c1.order() {
            let e = c1.element(i);
            assert!(c1.contains(&e.inverse().unwrap()));
            assert!(c2.contains(&e));
        }
        assert!(!c1.center_trivial()); // −I is central
    }
}
