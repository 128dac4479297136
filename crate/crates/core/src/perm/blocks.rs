use crate::error::{Error, Result};
use crate::perm::PermGroup;

/// A partition of the points into blocks of imprimitivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    /// Block id of each point; ids are numbered by first occurrence.
    pub block_of: Vec<usize>,
    pub block_count: usize,
}

impl BlockSystem {
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count];
        for (p, &b) in self.block_of.iter().enumerate() {
            out[b].push(p);
        }
        out
    }

    pub fn block_size(&self) -> usize {
        self.block_of.len() / self.block_count.max(1)
    }

    /// Trivial systems: one block, or all singletons.
    pub fn is_trivial(&self) -> bool {
        self.block_count <= 1 || self.block_count == self.block_of.len()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

impl PermGroup {
    /// The finest block system with `a` and `b` in a common block.
    pub fn minimal_block_system(&self, seed: (usize, usize)) -> Result<BlockSystem> {
        let n = self.degree();
        let (a, b) = seed;
        for p in [a, b] {
            if p >= n {
                return Err(Error::PointOutOfRange {
                    point: p,
                    degree: n,
                });
            }
        }
        if !self.is_transitive() {
            return Err(Error::Intransitive {
                what: "block system",
            });
        }
        let mut uf = UnionFind::new(n);
        let mut queue = Vec::new();
        if uf.union(a, b) {
            queue.push((a, b));
        }
        while let Some((x, y)) = queue.pop() {
            for g in self.generators() {
                let (gx, gy) = (g.apply(x), g.apply(y));
                if uf.union(gx, gy) {
                    queue.push((gx, gy));
                }
            }
        }
        let mut id = vec![usize::MAX; n];
        let mut block_of = vec![0; n];
        let mut count = 0;
        for (p, block) in block_of.iter_mut().enumerate() {
            let r = uf.find(p);
            if id[r] == usize::MAX {
                id[r] = count;
                count += 1;
            }
            *block = id[r];
        }
        Ok(BlockSystem {
            block_of,
            block_count: count,
        })
    }

    /// Primitivity: every minimal block system through `(0, β)` is the
    /// single block.
    pub fn is_primitive(&self) -> Result<bool> {
        let n = self.degree();
        if n < 2 || !self.is_transitive() {
            return Err(Error::Intransitive {
                what: "primitivity test",
            });
        }
        for beta in 1..n {
            if self.minimal_block_system((0, beta))?.block_count != 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
