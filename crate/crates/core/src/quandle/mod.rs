//! Finite quandles given by Cayley tables.
//!
//! The operation is the left one: `table[x][y] = x ▷ y`, row `x` is the
//! left translation `φ_x: y ↦ x ▷ y`, and the axioms are
//!
//! * `x ▷ x = x`,
//! * each `φ_x` is a bijection,
//! * `x ▷ (y ▷ z) = (x ▷ y) ▷ (x ▷ z)`.

mod classify;
mod congruence;
mod iso;

pub use classify::ClassifierReport;
pub use congruence::Congruence;

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::perm::{Perm, PermGroup};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quandle {
    n: usize,
    /// Row-major, `table[x * n + y] = x ▷ y`.
    table: Vec<u32>,
}

impl std::fmt::Debug for Quandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Quandle({}; ", self.n)?;
        for x in 0..self.n {
            if x > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{:?}", self.row(x))?;
        }
        write!(f, ")")
    }
}

impl Quandle {
    /// Validates a table against the quandle axioms; a failure carries the
    /// offending point or triple.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Quandle> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidArgument("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in table {
            if row.len() != n {
                return Err(Error::DimensionMismatch(n, row.len()));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::PointOutOfRange {
                        point: v,
                        degree: n,
                    });
                }
                flat.push(v as u32);
            }
        }
        let q = Quandle { n, table: flat };
        q.validate()?;
        Ok(q)
    }

    pub(crate) fn from_flat_unchecked(n: usize, table: Vec<u32>) -> Quandle {
        debug_assert_eq!(table.len(), n * n);
        Quandle { n, table }
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for x in 0..n {
            if self.op(x, x) != x {
                return Err(Error::Idempotence {
                    x,
                    value: self.op(x, x),
                });
            }
        }
        for x in 0..n {
            let mut seen = vec![false; n];
            for y in 0..n {
                let v = self.op(x, y);
                if seen[v] {
                    return Err(Error::RowNotBijective { x });
                }
                seen[v] = true;
            }
        }
        if let Some((x, y, z)) = self.distributivity_violation() {
            return Err(Error::Distributivity { x, y, z });
        }
        Ok(())
    }

    fn distributivity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = self.op(x, y);
                for z in 0..n {
                    if self.op(x, self.op(y, z)) != self.op(xy, self.op(x, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// The trivial quandle `x ▷ y = y`.
    pub fn trivial(n: usize) -> Quandle {
        let table = (0..n).flat_map(|_| 0..n as u32).collect();
        Quandle { n, table }
    }

    /// The dihedral quandle `R_n`: `x ▷ y = 2x − y mod n`.
    pub fn dihedral(n: usize) -> Quandle {
        assert!(n >= 1);
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(((2 * x + n - y) % n) as u32);
            }
        }
        Quandle { n, table }
    }

    /// The Alexander quandle of type `(q, α)`: `x ▷ y = (1 − α)x + αy` over
    /// `GF(q)`, points indexed by element index (zero first). `α = 1` gives
    /// the trivial quandle.
    pub fn alexander(ctx: &FieldCtx, alpha: FieldElem) -> Result<Quandle> {
        if alpha.is_zero() {
            return Err(Error::ZeroElement);
        }
        let q = ctx.order() as usize;
        let one_minus = ctx.sub(FieldElem::ONE, alpha);
        let mut table = Vec::with_capacity(q * q);
        for x in ctx.elements() {
            let ax = ctx.mul(one_minus, x);
            for y in ctx.elements() {
                table.push(ctx.add(ax, ctx.mul(alpha, y)).index() as u32);
            }
        }
        Ok(Quandle { n: q, table })
    }

    /// The Alexander quandle of `A = Z/n_1 × … × Z/n_k` with automorphism
    /// `g`, given as an integer matrix acting on column vectors. Elements are
    /// indexed in mixed radix with the first coordinate least significant.
    pub fn alexander_general(orders: &[u64], g: &[Vec<i64>]) -> Result<Quandle> {
        let k = orders.len();
        if k == 0 || orders.contains(&0) {
            return Err(Error::InvalidArgument("orders must be positive".into()));
        }
        if g.len() != k || g.iter().any(|r| r.len() != k) {
            return Err(Error::DimensionMismatch(k, g.len()));
        }
        for i in 0..k {
            for j in 0..k {
                // Z/n_j -> Z/n_i is well defined iff n_i | g_ij * n_j.
                if (g[i][j] as i128 * orders[j] as i128).rem_euclid(orders[i] as i128) != 0 {
                    return Err(Error::InvalidArgument(format!(
                        "entry ({i},{j}) does not define a homomorphism"
                    )));
                }
            }
        }
        let size: u64 = orders.iter().product();
        if size > 1 << 16 {
            return Err(Error::InvalidArgument(format!(
                "group of order {size} too large"
            )));
        }
        let n = size as usize;
        let decode = |mut idx: usize| -> Vec<i64> {
            orders
                .iter()
                .map(|&o| {
                    let c = (idx as u64 % o) as i64;
                    idx /= o as usize;
                    c
                })
                .collect()
        };
        let encode = |v: &[i64]| -> usize {
            let mut idx = 0u64;
            for (c, &o) in v.iter().zip(orders).rev() {
                idx = idx * o + c.rem_euclid(o as i64) as u64;
            }
            idx as usize
        };
        let apply = |v: &[i64]| -> Vec<i64> {
            (0..k)
                .map(|i| {
                    let s: i64 = (0..k).map(|j| g[i][j] * v[j]).sum();
                    s.rem_euclid(orders[i] as i64)
                })
                .collect()
        };
        let gvals: Vec<usize> = (0..n).map(|x| encode(&apply(&decode(x)))).collect();
        let mut seen = vec![false; n];
        for &v in &gvals {
            if seen[v] {
                return Err(Error::InvalidArgument("g is not invertible".into()));
            }
            seen[v] = true;
        }
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            let xv = decode(x);
            let gx = decode(gvals[x]);
            for &gyv in &gvals {
                let gy = decode(gyv);
                let v: Vec<i64> = (0..k).map(|i| xv[i] - gx[i] + gy[i]).collect();
                table.push(encode(&v) as u32);
            }
        }
        Ok(Quandle { n, table })
    }

    /// The conjugation quandle on the conjugacy class of `rep` in `group`:
    /// `x ▷ y = x y x⁻¹`. Point 0 is `rep`; the class elements are returned
    /// alongside in point order.
    pub fn conjugation(
        group: &PermGroup,
        rep: &Perm,
        max_size: usize,
    ) -> Result<(Quandle, Vec<Perm>)> {
        let class = group.conjugacy_class_of(rep, max_size)?;
        let index: std::collections::HashMap<&Perm, usize> =
            class.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let n = class.len();
        let mut table = Vec::with_capacity(n * n);
        for x in &class {
            for y in &class {
                table.push(index[&x.conjugate(y)] as u32);
            }
        }
        let q = Quandle { n, table };
        debug_assert!(q.validate().is_ok());
        Ok((q, class))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `x ▷ y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y] as usize
    }

    pub fn row(&self, x: usize) -> Vec<usize> {
        self.table[x * self.n..(x + 1) * self.n]
            .iter()
            .map(|&v| v as usize)
            .collect()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|x| self.row(x)).collect()
    }

    /// The left translation `φ_x`.
    pub fn phi(&self, x: usize) -> Result<Perm> {
        if x >= self.n {
            return Err(Error::PointOutOfRange {
                point: x,
                degree: self.n,
            });
        }
        Ok(Perm::from_images_unchecked(
            self.table[x * self.n..(x + 1) * self.n].to_vec(),
        ))
    }

    /// `Inn(X) = ⟨φ_x : x ∈ X⟩`.
    pub fn inner_group(&self) -> PermGroup {
        let gens: Vec<Perm> = (0..self.n).map(|x| self.phi(x).unwrap()).collect();
        PermGroup::from_generators(&gens).expect("rows share the degree")
    }

    /// Text form: `quandle n` followed by the rows.
    pub fn to_qnd_string(&self) -> String {
        let mut s = format!("quandle {}\n", self.n);
        for x in 0..self.n {
            let row: Vec<String> = self.row(x).iter().map(|v| v.to_string()).collect();
            writeln!(s, "{}", row.join(" ")).unwrap();
        }
        s
    }

    pub fn parse_qnd(text: &str) -> Result<Quandle> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing header".into()))?;
        let n: usize = header
            .strip_prefix("quandle")
            .and_then(|rest| rest.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))?;
        let mut rows = Vec::with_capacity(n);
        for line in lines {
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad entry {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::Parse(format!(
                "expected {n} rows, found {}",
                rows.len()
            )));
        }
        Quandle::from_table(&rows)
    }

    /// SHA-256 of the text form, hex encoded.
    pub fn digest(&self) -> String {
        let hash = Sha256::digest(self.to_qnd_string().as_bytes());
        hash.iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_three_is_valid() {
        let rows: Vec<Vec<usize>> = (0..3)
            .map(|x| (0..3).map(|y| (2 * x + 3 - y) % 3).collect())
            .collect();
        assert_eq!(Quandle::from_table(&rows).unwrap(), Quandle::dihedral(3));
    }

    #[test]
    fn idempotence_failure_reported() {
        let mut rows = Quandle::dihedral(3).rows();
        rows[0][0] = 1;
        rows[0][2] = 0;
        assert_eq!(
            Quandle::from_table(&rows).unwrap_err(),
            Error::Idempotence { x: 0, value: 1 }
        );
    }

    #[test]
    fn row_bijectivity_failure_reported() {
        let rows = vec![vec![0, 0], vec![0, 1]];
        assert_eq!(
            Quandle::from_table(&rows).unwrap_err(),
            Error::RowNotBijective { x: 0 }
        );
    }

    /// Finds an idempotent 4×4 table with permutation rows that is not left
    /// distributive. (Both idempotent 4×4 Latin squares are quandles, so
    /// only the rows are required to be Latin.)
    fn non_distributive_latin_square() -> Vec<Vec<usize>> {
        let perms: Vec<Vec<usize>> = {
            let mut out = Vec::new();
            for a in 0..4 {
                for b in 0..4 {
                    for c in 0..4 {
                        for d in 0..4 {
                            let v = vec![a, b, c, d];
                            let mut s = v.clone();
                            s.sort();
                            if s == vec![0, 1, 2, 3] {
                                out.push(v);
                            }
                        }
                    }
                }
            }
            out
        };
        let rows_for = |x: usize| perms.iter().filter(move |p| p[x] == x);
        for r0 in rows_for(0) {
            for r1 in rows_for(1) {
                for r2 in rows_for(2) {
                    for r3 in rows_for(3) {
                        let t = vec![r0.clone(), r1.clone(), r2.clone(), r3.clone()];
                        let ld = (0..4).all(|x| {
                            (0..4).all(|y| (0..4).all(|z| t[x][t[y][z]] == t[t[x][y]][t[x][z]]))
                        });
                        if !ld {
                            return t;
                        }
                    }
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn distributivity_failure_has_real_witness() {
        let t = non_distributive_latin_square();
        match Quandle::from_table(&t).unwrap_err() {
            Error::Distributivity { x, y, z } => {
                assert_ne!(t[x][t[y][z]], t[t[x][y]][t[x][z]]);
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn alexander_constructions() {
        let f5 = FieldCtx::of_order(5).unwrap();
        let a52 = Quandle::alexander(&f5, f5.from_int(2)).unwrap();
        assert_eq!(a52.phi(0).unwrap().to_string(), "(1 2 4 3)");
        assert!(a52.validate().is_ok());
        let f7 = FieldCtx::of_order(7).unwrap();
        assert_eq!(
            Quandle::alexander(&f7, FieldElem::ONE).unwrap(),
            Quandle::trivial(7)
        );
        let f3 = FieldCtx::of_order(3).unwrap();
        assert_eq!(
            Quandle::alexander(&f3, f3.from_int(2)).unwrap(),
            Quandle::dihedral(3)
        );
        assert_eq!(
            Quandle::alexander(&f5, FieldElem::ZERO).unwrap_err(),
            Error::ZeroElement
        );
        for q in [4u64, 8, 9] {
            let f = FieldCtx::of_order(q).unwrap();
            for a in f.units() {
                assert!(Quandle::alexander(&f, a).unwrap().validate().is_ok());
            }
        }
    }

    #[test]
    fn general_alexander() {
        assert_eq!(
            Quandle::alexander_general(&[3], &[vec![-1]]).unwrap(),
            Quandle::dihedral(3)
        );
        let f5 = FieldCtx::of_order(5).unwrap();
        assert_eq!(
            Quandle::alexander_general(&[5], &[vec![2]]).unwrap(),
            Quandle::alexander(&f5, f5.from_int(2)).unwrap()
        );
        assert_eq!(
            Quandle::alexander_general(&[2, 2], &[vec![1, 0], vec![0, 1]]).unwrap(),
            Quandle::trivial(4)
        );
        // (Z/2)^2 with the order-3 automorphism is the 4-element Latin quandle.
        let q = Quandle::alexander_general(&[2, 2], &[vec![0, 1], vec![1, 1]]).unwrap();
        assert!(q.validate().is_ok());
        assert!(Quandle::alexander_general(&[4], &[vec![2]]).is_err());
        assert!(Quandle::alexander_general(&[2, 3], &[vec![1, 1], vec![0, 1]]).is_err());
    }

    #[test]
    fn conjugation_quandles() {
        let s3 = PermGroup::symmetric(3);
        let t = Perm::parse_with_degree("(0 1)", 3).unwrap();
        let (q, class) = Quandle::conjugation(&s3, &t, 100).unwrap();
        assert_eq!(q.size(), 3);
        assert_eq!(class[0], t);
        assert!(q.validate().is_ok());
        let (q, _) = Quandle::conjugation(&s3, &Perm::identity(3), 100).unwrap();
        assert_eq!(q, Quandle::trivial(1));
        let a5 = PermGroup::alternating(5);
        let c = Perm::parse_with_degree("(0 1 2 3 4)", 5).unwrap();
        let (q, _) = Quandle::conjugation(&a5, &c, 100).unwrap();
        assert_eq!(q.size(), 12);
        assert!(q.validate().is_ok());
        assert!(Quandle::conjugation(&a5, &t.clone(), 100).is_err());
    }

    #[test]
    fn translations() {
        assert!(Quandle::trivial(4).phi(2).unwrap().is_identity());
        assert_eq!(Quandle::dihedral(3).phi(0).unwrap().to_string(), "(1 2)");
        assert_eq!(
            Quandle::dihedral(5).phi(0).unwrap().to_string(),
            "(1 4)(2 3)"
        );
        assert!(Quandle::dihedral(3).phi(3).is_err());
        assert_eq!(Quandle::trivial(1).size(), 1);
    }

    #[test]
    fn inner_groups() {
        assert_eq!(Quandle::trivial(3).inner_group().order(), 1);
        assert_eq!(Quandle::dihedral(3).inner_group().order(), 6);
        let f5 = FieldCtx::of_order(5).unwrap();
        assert_eq!(
            Quandle::alexander(&f5, f5.from_int(2))
                .unwrap()
                .inner_group()
                .order(),
            20
        );
    }

    #[test]
    fn qnd_format() {
        let q = Quandle::dihedral(4);
        let text = q.to_qnd_string();
        assert!(text.starts_with("quandle 4\n0 3 2 1\n"));
        let with_comments = format!("# R_4\n{text}");
        assert_eq!(Quandle::parse_qnd(&with_comments).unwrap(), q);
        assert!(Quandle::parse_qnd("quandle 2\n0 1\n").is_err());
        assert!(Quandle::parse_qnd("quandl 1\n0\n").is_err());
        assert_eq!(q.digest().len(), 64);
        assert_ne!(q.digest(), Quandle::dihedral(3).digest());
    }
}
