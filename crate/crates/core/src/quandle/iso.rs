use crate::quandle::Quandle;

/// Per-point invariant: cycle type of `φ_x` plus the number of `y` with
/// `y ▷ x = x`.
fn profiles(q: &Quandle) -> Vec<(Vec<usize>, usize)> {
    (0..q.size())
        .map(|x| {
            let ct = q.phi(x).unwrap().cycle_type();
            let col = (0..q.size()).filter(|&y| q.op(y, x) == x).count();
            (ct, col)
        })
        .collect()
}

struct Search<'a> {
    a: &'a Quandle,
    b: &'a Quandle,
    fwd: Vec<Option<usize>>,
    bwd: Vec<Option<usize>>,
    assigned: Vec<usize>,
    candidates: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Assigns `x ↦ y` and closes under `f(u ▷ v) = f(u) ▷ f(v)`. Returns
    /// false on a conflict; the caller rolls back to its trail mark.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((u, fu)) = queue.pop() {
            match (self.fwd[u], self.bwd[fu]) {
                (Some(v), _) if v == fu => continue,
                (None, None) => {}
                _ => return false,
            }
            self.fwd[u] = Some(fu);
            self.bwd[fu] = Some(u);
            self.assigned.push(u);
            for k in 0..self.assigned.len() {
                let v = self.assigned[k];
                let fv = self.fwd[v].unwrap();
                for (s, t) in [
                    (self.a.op(u, v), self.b.op(fu, fv)),
                    (self.a.op(v, u), self.b.op(fv, fu)),
                ] {
                    match self.fwd[s] {
                        Some(fs) if fs != t => return false,
                        Some(_) => {}
                        None => queue.push((s, t)),
                    }
                }
            }
        }
        true
    }

    fn rollback(&mut self, mark: usize) {
        while self.assigned.len() > mark {
            let u = self.assigned.pop().unwrap();
            let fu = self.fwd[u].take().unwrap();
            self.bwd[fu] = None;
        }
    }

    fn run(&mut self) -> bool {
        let Some(x) = (0..self.a.size()).find(|&x| self.fwd[x].is_none()) else {
            return true;
        };
        let mark = self.assigned.len();
        for k in 0..self.candidates[x].len() {
            let y = self.candidates[x][k];
            if self.bwd[y].is_some() {
                continue;
            }
            if self.assign(x, y) && self.run() {
                return true;
            }
            self.rollback(mark);
        }
        false
    }
}

impl Quandle {
    /// A bijection `f` with `f(x ▷ y) = f(x) ▷ f(y)`, or `None`.
    ///
    /// Backtracking over images of one point at a time, restricted to points
    /// with the same translation cycle type and column profile, with each
    /// choice propagated through the operation.
    pub fn is_isomorphic(&self, other: &Quandle) -> Option<Vec<usize>> {
        let n = self.size();
        if n != other.size() {
            return None;
        }
        let (pa, pb) = (profiles(self), profiles(other));
        let mut sa = pa.clone();
        let mut sb = pb.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
        let candidates: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).filter(|&y| pb[y] == pa[x]).collect())
            .collect();
        let mut search = Search {
            a: self,
            b: other,
            fwd: vec![None; n],
            bwd: vec![None; n],
            assigned: Vec::new(),
            candidates,
        };
        if !search.run() {
            return None;
        }
        let f: Vec<usize> = search.fwd.iter().map(|v| v.unwrap()).collect();
        for x in 0..n {
            for y in 0..n {
                assert_eq!(f[self.op(x, y)], other.op(f[x], f[y]));
            }
        }
        Some(f)
    }
}
