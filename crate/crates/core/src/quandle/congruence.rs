use crate::error::{Error, Result};
use crate::quandle::Quandle;

/// An equivalence relation on a quandle, as a block id per point. Ids are
/// numbered by first occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    pub block_of: Vec<usize>,
}

impl Congruence {
    /// Normalizes arbitrary labels into first-occurrence block ids.
    pub fn from_labels(labels: &[usize]) -> Congruence {
        let mut map = std::collections::HashMap::new();
        let block_of = labels
            .iter()
            .map(|l| {
                let next = map.len();
                *map.entry(*l).or_insert(next)
            })
            .collect();
        Congruence { block_of }
    }

    pub fn equality(n: usize) -> Congruence {
        Congruence {
            block_of: (0..n).collect(),
        }
    }

    pub fn full(n: usize) -> Congruence {
        Congruence {
            block_of: vec![0; n],
        }
    }

    pub fn block_count(&self) -> usize {
        self.block_of.iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_full(&self) -> bool {
        self.block_count() <= 1
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (p, &b) in self.block_of.iter().enumerate() {
            out[b].push(p);
        }
        out
    }

    /// First violation of two-sided compatibility, as `(a, b, c)` with
    /// `a ~ b` but `c ▷ a ≁ c ▷ b` or `a ▷ c ≁ b ▷ c`.
    pub fn violation(&self, q: &Quandle) -> Option<(usize, usize, usize)> {
        let n = q.size();
        let b = &self.block_of;
        // Comparing each point with the first point of its block suffices.
        let mut first = vec![usize::MAX; self.block_count()];
        for p in 0..n {
            if first[b[p]] == usize::MAX {
                first[b[p]] = p;
            }
        }
        for a in 0..n {
            let rep = first[b[a]];
            if rep == a {
                continue;
            }
            for c in 0..n {
                if b[q.op(c, a)] != b[q.op(c, rep)] || b[q.op(a, c)] != b[q.op(rep, c)] {
                    return Some((rep, a, c));
                }
            }
        }
        None
    }

    pub fn is_congruence(&self, q: &Quandle) -> bool {
        self.block_of.len() == q.size() && self.violation(q).is_none()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

impl Quandle {
    /// The smallest congruence identifying `a` and `b`.
    pub fn principal_congruence(&self, a: usize, b: usize) -> Result<Congruence> {
        let n = self.size();
        for p in [a, b] {
            if p >= n {
                return Err(Error::PointOutOfRange {
                    point: p,
                    degree: n,
                });
            }
        }
        if a == b {
            return Err(Error::InvalidArgument(
                "principal congruence needs a ≠ b".into(),
            ));
        }
        let mut uf = UnionFind((0..n).collect());
        uf.union(a, b);
        let mut queue = vec![(a, b)];
        while let Some((x, y)) = queue.pop() {
            for c in 0..n {
                for (u, v) in [
                    (self.op(c, x), self.op(c, y)),
                    (self.op(x, c), self.op(y, c)),
                ] {
                    if uf.union(u, v) {
                        queue.push((u, v));
                    }
                }
            }
        }
        let labels: Vec<usize> = (0..n).map(|p| uf.find(p)).collect();
        Ok(Congruence::from_labels(&labels))
    }

    /// Simple: at least two points and every principal congruence is full.
    /// The one-point quandle is not simple; the two-point trivial quandle is.
    pub fn is_simple(&self) -> bool {
        let n = self.size();
        if n < 2 {
            return false;
        }
        for a in 0..n {
            for b in a + 1..n {
                if !self.principal_congruence(a, b).unwrap().is_full() {
                    return false;
                }
            }
        }
        true
    }

    /// The quotient by a congruence, on block ids; the projection is
    /// checked to be a homomorphism.
    pub fn quotient(&self, c: &Congruence) -> Result<Quandle> {
        if c.block_of.len() != self.size() {
            return Err(Error::DimensionMismatch(self.size(), c.block_of.len()));
        }
        if let Some((a, b, x)) = c.violation(self) {
            return Err(Error::NotACongruence { a, b, c: x });
        }
        let blocks = c.blocks();
        let k = blocks.len();
        let mut table = Vec::with_capacity(k * k);
        for bx in &blocks {
            for by in &blocks {
                table.push(c.block_of[self.op(bx[0], by[0])] as u32);
            }
        }
        let quotient = Quandle::from_flat_unchecked(k, table);
        let n = self.size();
        for x in 0..n {
            for y in 0..n {
                assert_eq!(
                    c.block_of[self.op(x, y)],
                    quotient.op(c.block_of[x], c.block_of[y])
                );
            }
        }
        Ok(quotient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_congruences() {
        let r3 = Quandle::dihedral(3);
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            assert!(r3.principal_congruence(a, b).unwrap().is_full());
        }
        // In R_4 the pair (0, 2) only forces c ▷ 0 ~ c ▷ 2, i.e. 0 ~ 2 again;
        // 1 and 3 stay apart.
        let r4 = Quandle::dihedral(4);
        let c = r4.principal_congruence(0, 2).unwrap();
        assert_eq!(c.blocks(), vec![vec![0, 2], vec![1], vec![3]]);
        assert!(c.is_congruence(&r4));
        let c = r4.principal_congruence(1, 3).unwrap();
        assert_eq!(c.blocks(), vec![vec![0], vec![1, 3], vec![2]]);
        let t = Quandle::trivial(4);
        let c = t.principal_congruence(1, 3).unwrap();
        assert_eq!(c.blocks(), vec![vec![0], vec![1, 3], vec![2]]);
        assert!(r3.principal_congruence(1, 1).is_err());
    }

    #[test]
    fn simplicity() {
        assert!(Quandle::dihedral(3).is_simple());
        assert!(!Quandle::dihedral(4).is_simple());
        assert!(!Quandle::trivial(1).is_simple());
        assert!(Quandle::trivial(2).is_simple());
        assert!(!Quandle::trivial(3).is_simple());
        assert!(Quandle::dihedral(5).is_simple());
    }

    #[test]
    fn quotients() {
        let r4 = Quandle::dihedral(4);
        let parity = Congruence::from_labels(&[0, 1, 0, 1]);
        assert!(parity.is_congruence(&r4));
        assert_eq!(r4.quotient(&parity).unwrap(), Quandle::trivial(2));
        let c = r4.principal_congruence(0, 2).unwrap();
        assert_eq!(r4.quotient(&c).unwrap().size(), 3);
        assert_eq!(r4.quotient(&Congruence::equality(4)).unwrap(), r4);
        assert_eq!(
            r4.quotient(&Congruence::full(4)).unwrap(),
            Quandle::trivial(1)
        );
        let bad = Congruence::from_labels(&[0, 0, 1, 1]);
        assert!(matches!(
            r4.quotient(&bad),
            Err(Error::NotACongruence { .. })
        ));
    }
}
