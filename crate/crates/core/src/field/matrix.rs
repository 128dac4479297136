use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};

/// A square matrix over a finite field, stored row-major.
#[derive(Clone)]
pub struct FqMatrix {
    ctx: Arc<FieldCtx>,
    dim: usize,
    entries: Vec<FieldElem>,
}

impl PartialEq for FqMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.entries == other.entries && *self.ctx == *other.ctx
    }
}

impl Eq for FqMatrix {}

impl FqMatrix {
    pub fn from_entries(ctx: Arc<FieldCtx>, dim: usize, entries: Vec<FieldElem>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(dim * dim, entries.len()));
        }
        if let Some(e) = entries.iter().find(|e| e.index() as u64 >= ctx.order()) {
            return Err(Error::InvalidArgument(format!(
                "entry {} outside GF({})",
                e.index(),
                ctx.order()
            )));
        }
        Ok(FqMatrix { ctx, dim, entries })
    }

    /// Reads integer rows into the prime subfield.
    pub fn from_int_rows(ctx: Arc<FieldCtx>, rows: &[&[i64]]) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(dim, row.len()));
            }
            entries.extend(row.iter().map(|&k| ctx.from_int(k)));
        }
        Ok(FqMatrix { ctx, dim, entries })
    }

    pub fn identity(ctx: Arc<FieldCtx>, dim: usize) -> Self {
        let entries = vec![FieldElem::ONE; dim];
        Self::diag(ctx, &entries)
    }

    pub fn diag(ctx: Arc<FieldCtx>, diagonal: &[FieldElem]) -> Self {
        let dim = diagonal.len();
        let mut entries = vec![FieldElem::ZERO; dim * dim];
        for (i, &d) in diagonal.iter().enumerate() {
            entries[i * dim + i] = d;
        }
        FqMatrix { ctx, dim, entries }
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> FieldElem {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                self.get(i, j)
                    == if i == j {
                        FieldElem::ONE
                    } else {
                        FieldElem::ZERO
                    }
            })
        })
    }

    fn check_conformable(&self, other: &FqMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        if *self.ctx != *other.ctx {
            return Err(Error::InvalidArgument(
                "matrices over different fields".into(),
            ));
        }
        Ok(())
    }

    pub fn mul(&self, other: &FqMatrix) -> Result<FqMatrix> {
        self.check_conformable(other)?;
        let (n, f) = (self.dim, &self.ctx);
        let mut entries = vec![FieldElem::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let e = &mut entries[i * n + j];
                    *e = f.add(*e, f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(FqMatrix {
            ctx: self.ctx.clone(),
            dim: n,
            entries,
        })
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<FqMatrix> {
        let (n, f) = (self.dim, self.ctx.clone());
        let mut a = self.entries.clone();
        let mut inv = FqMatrix::identity(f.clone(), n).entries;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r * n + col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let scale = f.inv(a[col * n + col])?;
            for j in 0..n {
                a[col * n + j] = f.mul(a[col * n + j], scale);
                inv[col * n + j] = f.mul(inv[col * n + j], scale);
            }
            for r in 0..n {
                let factor = a[r * n + col];
                if r == col || factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
                    inv[r * n + j] = f.sub(inv[r * n + j], f.mul(factor, inv[col * n + j]));
                }
            }
        }
        Ok(FqMatrix {
            ctx: f,
            dim: n,
            entries: inv,
        })
    }

    /// Determinant by elimination.
    pub fn det(&self) -> FieldElem {
        let (n, f) = (self.dim, &self.ctx);
        let mut a = self.entries.clone();
        let mut det = FieldElem::ONE;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return FieldElem::ZERO;
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let pv = a[col * n + col];
            det = f.mul(det, pv);
            let pinv = f.inv(pv).unwrap();
            for r in col + 1..n {
                let factor = f.mul(a[r * n + col], pinv);
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
                }
            }
        }
        det
    }

    /// Row-major coefficient lists, rows separated by `;`.
    pub fn to_row_string(&self) -> String {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| format!("[{}]", self.ctx.format_elem(self.get(i, j))))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FqMatrix({})", self.to_row_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(q: u64) -> Arc<FieldCtx> {
        Arc::new(FieldCtx::of_order(q).unwrap())
    }

    #[test]
    fn identity_and_diagonals() {
        let f = gf(27);
        let a = FqMatrix::from_int_rows(f.clone(), &[&[1, 2], &[0, 1]]).unwrap();
        let i = FqMatrix::identity(f.clone(), 2);
        assert_eq!(i.mul(&a).unwrap(), a);
        let l = [f.elem(5).unwrap(), f.elem(11).unwrap()];
        let m = [f.elem(7).unwrap(), f.elem(20).unwrap()];
        let lm: Vec<FieldElem> = l.iter().zip(&m).map(|(&x, &y)| f.mul(x, y)).collect();
        assert_eq!(
            FqMatrix::diag(f.clone(), &l)
                .mul(&FqMatrix::diag(f.clone(), &m))
                .unwrap(),
            FqMatrix::diag(f.clone(), &lm)
        );
    }

    #[test]
    fn singular_and_mismatched() {
        let f = gf(5);
        let s = FqMatrix::from_int_rows(f.clone(), &[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(s.inverse().unwrap_err(), Error::SingularMatrix);
        assert_eq!(s.det(), FieldElem::ZERO);
        let i3 = FqMatrix::identity(f.clone(), 3);
        assert!(s.mul(&i3).is_err());
        assert!(FqMatrix::from_int_rows(f, &[&[1, 2], &[2]]).is_err());
    }

    #[test]
    fn determinant_of_small_matrix() {
        let f = gf(7);
        let a = FqMatrix::from_int_rows(f.clone(), &[&[2, 3], &[1, 4]]).unwrap();
        assert_eq!(a.det(), f.from_int(5));
    }

    proptest! {
        #[test]
        fn inverse_round_trips(entries in proptest::collection::vec(0usize..27, 16)) {
            let f = gf(27);
            let es: Vec<FieldElem> = entries.iter().map(|&e| f.elem(e).unwrap()).collect();
            let a = FqMatrix::from_entries(f.clone(), 4, es).unwrap();
            match a.inverse() {
                Ok(inv) => {
                    prop_assert!(a.mul(&inv).unwrap().is_identity());
                    prop_assert!(inv.mul(&a).unwrap().is_identity());
                    prop_assert!(!a.det().is_zero());
                }
                Err(e) => {
                    prop_assert_eq!(e, Error::SingularMatrix);
                    prop_assert!(a.det().is_zero());
                }
            }
        }
    }
}
