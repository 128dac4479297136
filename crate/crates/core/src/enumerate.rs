//! Exhaustive searches for cyclic-type and connected quandles.
//!
//! Both searches normalize `φ_0`. Conjugating a quandle table by a bijection
//! `σ` that fixes 0 gives an isomorphic quandle whose `φ_0` is `σ φ_0 σ⁻¹`,
//! so `φ_0` may be fixed to any chosen representative of its cycle type.
//!
//! For cyclic type, `φ_0` is an `(n−1)`-cycle fixing 0 and its powers move 1
//! to every other nonzero point. Left distributivity gives
//! `φ_{φ_0^k(1)} = φ_0^k φ_1 φ_0^{−k}`, so the choice of `φ_1` fixes the
//! whole table, and because `φ_0` is then an automorphism, the identities
//! `φ_1 φ_y φ_1⁻¹ = φ_{φ_1(y)}` imply all others.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{euler_phi, prime_power};
use crate::perm::Perm;
use crate::quandle::Quandle;

pub const DEFAULT_CYCLIC_MAX: usize = 13;
pub const DEFAULT_CONNECTED_MAX: usize = 6;
pub const LONG_CONNECTED_MAX: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub n: usize,
    pub candidates_tested: u64,
    pub found_raw: usize,
    pub found_iso: usize,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    /// One representative per isomorphism class, sorted by table.
    pub quandles: Vec<Quandle>,
    pub stats: SearchStats,
}

/// Keeps the first quandle of each isomorphism class; input order decides
/// which representative survives.
pub fn reduce_isomorphic(quandles: Vec<Quandle>) -> Vec<Quandle> {
    let mut reps: Vec<Quandle> = Vec::new();
    for q in quandles {
        if !reps.iter().any(|r| r.is_isomorphic(&q).is_some()) {
            reps.push(q);
        }
    }
    reps
}

/// The standard cycle `(1 2 … n−1)` on `n` points.
pub fn standard_cycle(n: usize) -> Perm {
    let c: Vec<usize> = (1..n).collect();
    Perm::from_cycles(n, &[&c]).unwrap()
}

/// All cyclic-type quandles of size `n` up to isomorphism, for
/// `3 ≤ n ≤ 13`.
pub fn enumerate_cyclic(n: usize) -> Result<SearchResult> {
    enumerate_cyclic_with(n, &standard_cycle(n.max(3)), DEFAULT_CYCLIC_MAX)
}

/// As [`enumerate_cyclic`], with a caller-chosen `(n−1)`-cycle for `φ_0`
/// and size bound.
pub fn enumerate_cyclic_with(n: usize, phi0: &Perm, max_n: usize) -> Result<SearchResult> {
    if n < 3 || n > max_n || n > 32 {
        return Err(Error::OutOfBounds {
            n,
            min: 3,
            max: max_n.min(32),
        });
    }
    let cycles = phi0.cycles();
    if phi0.degree() != n || phi0.apply(0) != 0 || cycles.len() != 1 || cycles[0].len() != n - 1 {
        return Err(Error::InvalidArgument(format!(
            "{phi0} is not an (n-1)-cycle fixing 0 on {n} points"
        )));
    }
    let start = Instant::now();
    let ctx = CyclicCtx::new(phi0);

    // φ_1 is the cycle (0 a_1 … a_{n−2}) with (a_i) a permutation of the
    // points other than 0 and 1. Work is split on the first two entries.
    let others: Vec<u8> = (2..n as u8).collect();
    let prefixes: Vec<(u8, u8)> = others
        .iter()
        .flat_map(|&a| {
            others
                .iter()
                .filter(move |&&b| b != a)
                .map(move |&b| (a, b))
        })
        .collect();
    let prefixes = if n == 3 { vec![(2, 2)] } else { prefixes };

    let chunks: Vec<(u64, Vec<Vec<u8>>)> = prefixes
        .par_iter()
        .map(|&(a, b)| {
            let mut seq: Vec<u8> = vec![0, a];
            if n > 3 {
                seq.push(b);
            }
            let mut rest: Vec<u8> = others
                .iter()
                .copied()
                .filter(|&x| !seq.contains(&x))
                .collect();
            let mut tested = 0u64;
            let mut found = Vec::new();
            let mut phi1 = vec![0u8; n];
            let mut phi1_inv = vec![0u8; n];
            loop {
                tested += 1;
                let full: Vec<u8> = seq.iter().chain(rest.iter()).copied().collect();
                phi1[1] = 1;
                for i in 0..full.len() {
                    phi1[full[i] as usize] = full[(i + 1) % full.len()];
                }
                for z in 0..n {
                    phi1_inv[phi1[z] as usize] = z as u8;
                }
                if ctx.consistent(&phi1, &phi1_inv) {
                    found.push(phi1.clone());
                }
                if !next_permutation(&mut rest) {
                    break;
                }
            }
            (tested, found)
        })
        .collect();

    let candidates_tested: u64 = chunks.iter().map(|c| c.0).sum();
    let mut raw: Vec<Quandle> = chunks
        .into_iter()
        .flat_map(|c| c.1)
        .map(|phi1| {
            let q = Quandle::from_table(&ctx.rows(&phi1)).expect("consistent table is a quandle");
            debug_assert!(q.is_cyclic_type().unwrap());
            q
        })
        .collect();
    raw.sort();
    let found_raw = raw.len();
    let quandles = reduce_isomorphic(raw);
    Ok(SearchResult {
        stats: SearchStats {
            n,
            candidates_tested,
            found_raw,
            found_iso: quandles.len(),
            elapsed_ms: start.elapsed().as_millis(),
        },
        quandles,
    })
}

struct CyclicCtx {
    n: usize,
    /// `pow[k][z] = φ_0^k(z)` for `k` in `0..n−1`.
    pow: Vec<Vec<u8>>,
    /// `k` with `φ_0^k(1) = y`, for `y ≠ 0`.
    exponent: Vec<usize>,
}

impl CyclicCtx {
    fn new(phi0: &Perm) -> CyclicCtx {
        let n = phi0.degree();
        let mut pow = vec![(0..n as u8).collect::<Vec<u8>>()];
        for k in 1..n - 1 {
            let prev = &pow[k - 1];
            pow.push(prev.iter().map(|&z| phi0.apply(z as usize) as u8).collect());
        }
        let mut exponent = vec![usize::MAX; n];
        for (k, p) in pow.iter().enumerate() {
            exponent[p[1] as usize] = k;
        }
        CyclicCtx { n, pow, exponent }
    }

    /// `φ_y(z)` in the table induced by `φ_1`.
    #[inline]
    fn row_at(&self, phi1: &[u8], y: usize, z: usize) -> usize {
        if y == 0 {
            return self.pow[1][z] as usize;
        }
        let k = self.exponent[y];
        let back = (self.n - 1 - k) % (self.n - 1);
        self.pow[k][phi1[self.pow[back][z] as usize] as usize] as usize
    }

    /// `φ_1 φ_y φ_1⁻¹ = φ_{φ_1(y)}` for every `y`.
    fn consistent(&self, phi1: &[u8], phi1_inv: &[u8]) -> bool {
        let n = self.n;
        for y in (0..n).filter(|&y| y != 1) {
            let w = phi1[y] as usize;
            for z in 0..n {
                let lhs = phi1[self.row_at(phi1, y, phi1_inv[z] as usize)] as usize;
                if lhs != self.row_at(phi1, w, z) {
                    return false;
                }
            }
        }
        true
    }

    fn rows(&self, phi1: &[u8]) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|y| (0..self.n).map(|z| self.row_at(phi1, y, z)).collect())
            .collect()
    }
}

/// Lexicographic successor; false after the last permutation.
fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The predicted number of cyclic-type quandles of size `q` up to
/// isomorphism: `φ(q − 1) / m` for `q = p^m`.
pub fn cyclic_count_formula(q: u64) -> Result<u64> {
    let (_, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if q < 3 {
        return Err(Error::OutOfBounds {
            n: q as usize,
            min: 3,
            max: usize::MAX,
        });
    }
    Ok(euler_phi(q - 1) / m as u64)
}

/// Partitions of `total` into parts, largest first.
fn partitions(total: usize, max_part: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max_part.min(total)).rev() {
        for mut rest in partitions(total - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Row search state for the connected-quandle backtracking.
struct RowSearch {
    n: usize,
    rows: Vec<Option<Vec<u8>>>,
    /// Rows fixing each point, tried at branch time.
    candidates: Vec<Vec<Vec<u8>>>,
    found: Vec<Vec<Vec<u8>>>,
    tested: u64,
}

fn conj(a: &[u8], b: &[u8]) -> Vec<u8> {
    // a b a⁻¹: a(z) ↦ a(b(z)).
    let mut out = vec![0u8; a.len()];
    for z in 0..a.len() {
        out[a[z] as usize] = a[b[z] as usize];
    }
    out
}

impl RowSearch {
    /// Closes the known rows under `φ_{φ_x(y)} = φ_x φ_y φ_x⁻¹`. Returns
    /// the rows it filled in, or `None` on a contradiction.
    fn propagate(&mut self, mut fresh: Vec<usize>) -> Option<Vec<usize>> {
        let mut filled = Vec::new();
        while let Some(u) = fresh.pop() {
            for v in 0..self.n {
                if self.rows[v].is_none() {
                    continue;
                }
                for (x, y) in [(u, v), (v, u)] {
                    let (Some(rx), Some(ry)) = (&self.rows[x], &self.rows[y]) else {
                        continue;
                    };
                    let z = rx[y] as usize;
                    let expected = conj(rx, ry);
                    match &self.rows[z] {
                        Some(rz) if *rz != expected => return self.undo(filled),
                        Some(_) => {}
                        None => {
                            self.rows[z] = Some(expected);
                            filled.push(z);
                            fresh.push(z);
                        }
                    }
                }
            }
        }
        Some(filled)
    }

    fn undo(&mut self, filled: Vec<usize>) -> Option<Vec<usize>> {
        for z in filled {
            self.rows[z] = None;
        }
        None
    }

    fn run(&mut self) {
        let Some(x) = (0..self.n).find(|&x| self.rows[x].is_none()) else {
            self.found
                .push(self.rows.iter().map(|r| r.clone().unwrap()).collect());
            return;
        };
        for k in 0..self.candidates[x].len() {
            self.tested += 1;
            self.rows[x] = Some(self.candidates[x][k].clone());
            if let Some(filled) = self.propagate(vec![x]) {
                self.run();
                self.undo(filled);
            }
            self.rows[x] = None;
        }
    }
}

fn permutations_fixing(n: usize, x: usize) -> Vec<Vec<u8>> {
    let mut others: Vec<u8> = (0..n as u8).filter(|&p| p as usize != x).collect();
    let mut out = Vec::new();
    loop {
        let mut row = Vec::with_capacity(n);
        let mut it = others.iter();
        for p in 0..n {
            row.push(if p == x { x as u8 } else { *it.next().unwrap() });
        }
        out.push(row);
        if !next_permutation(&mut others) {
            break;
        }
    }
    out
}

fn connected_rows(rows: &[Vec<u8>]) -> bool {
    let n = rows.len();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0usize];
    let mut count = 1;
    while let Some(y) = stack.pop() {
        for r in rows {
            let z = r[y] as usize;
            if !seen[z] {
                seen[z] = true;
                count += 1;
                stack.push(z);
            }
        }
    }
    count == n
}

fn to_quandle(rows: &[Vec<u8>]) -> Quandle {
    let n = rows.len();
    let flat: Vec<u32> = rows.iter().flatten().map(|&v| v as u32).collect();
    let q = Quandle::from_flat_unchecked(n, flat);
    debug_assert!(Quandle::from_table(&q.rows()).is_ok());
    q
}

/// All connected quandles of size `n` up to isomorphism, by row-by-row
/// backtracking with `φ_0` fixed to a canonical cycle type and every choice
/// propagated through `φ_{x ▷ y} = φ_x φ_y φ_x⁻¹`. Sizes up to 6 are
/// allowed, 7 with `allow_long`.
pub fn enumerate_connected_bruteforce(n: usize, allow_long: bool) -> Result<SearchResult> {
    let max = if allow_long {
        LONG_CONNECTED_MAX
    } else {
        DEFAULT_CONNECTED_MAX
    };
    if n == 0 || n > max {
        return Err(Error::OutOfBounds { n, min: 1, max });
    }
    let start = Instant::now();
    if n == 1 {
        return Ok(SearchResult {
            quandles: vec![Quandle::trivial(1)],
            stats: SearchStats {
                n,
                candidates_tested: 1,
                found_raw: 1,
                found_iso: 1,
                elapsed_ms: start.elapsed().as_millis(),
            },
        });
    }
    let candidates: Vec<Vec<Vec<u8>>> = (0..n).map(|x| permutations_fixing(n, x)).collect();
    let results: Vec<(u64, Vec<Vec<Vec<u8>>>)> = partitions(n - 1, n - 1)
        .into_par_iter()
        .map(|parts| {
            let mut phi0 = vec![0u8; n];
            let mut p = 1;
            for len in parts {
                for i in 0..len {
                    phi0[p + i] = (p + (i + 1) % len) as u8;
                }
                p += len;
            }
            let mut search = RowSearch {
                n,
                rows: vec![None; n],
                candidates: candidates.clone(),
                found: Vec::new(),
                tested: 1,
            };
            search.rows[0] = Some(phi0);
            if search.propagate(vec![0]).is_some() {
                search.run();
            }
            (search.tested, search.found)
        })
        .collect();
    let candidates_tested = results.iter().map(|r| r.0).sum();
    let mut raw: Vec<Quandle> = results
        .into_iter()
        .flat_map(|r| r.1)
        .filter(|rows| connected_rows(rows))
        .map(|rows| to_quandle(&rows))
        .collect();
    raw.sort();
    let found_raw = raw.len();
    let quandles = reduce_isomorphic(raw);
    Ok(SearchResult {
        stats: SearchStats {
            n,
            candidates_tested,
            found_raw,
            found_iso: quandles.len(),
            elapsed_ms: start.elapsed().as_millis(),
        },
        quandles,
    })
}

/// Naive oracle: every table with idempotent permutation rows, kept when
/// left distributive. Returns all quandles of size `n ≤ 4` up to
/// isomorphism.
pub fn all_quandles_naive(n: usize) -> Result<Vec<Quandle>> {
    if n == 0 || n > 4 {
        return Err(Error::OutOfBounds { n, min: 1, max: 4 });
    }
    let candidates: Vec<Vec<Vec<u8>>> = (0..n).map(|x| permutations_fixing(n, x)).collect();
    let mut choice = vec![0usize; n];
    let mut found = Vec::new();
    loop {
        let rows: Vec<&Vec<u8>> = (0..n).map(|x| &candidates[x][choice[x]]).collect();
        let ld = (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    let (rx, ry) = (rows[x], rows[y]);
                    rx[ry[z] as usize] == rows[rx[y] as usize][rx[z] as usize]
                })
            })
        });
        if ld {
            let owned: Vec<Vec<u8>> = rows.into_iter().cloned().collect();
            found.push(to_quandle(&owned));
        }
        let mut i = 0;
        loop {
            if i == n {
                found.sort();
                return Ok(reduce_isomorphic(found));
            }
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    #[test]
    fn small_cyclic_searches() {
        let r = enumerate_cyclic(3).unwrap();
        assert_eq!(r.quandles.len(), 1);
        assert!(r.quandles[0].is_isomorphic(&Quandle::dihedral(3)).is_some());
        assert_eq!(enumerate_cyclic(6).unwrap().quandles.len(), 0);
        let r = enumerate_cyclic(5).unwrap();
        assert_eq!(r.stats.candidates_tested, 6);
        assert_eq!(r.quandles.len(), 2);
        assert!(r.stats.found_iso <= r.stats.found_raw);
    }

    #[test]
    fn gf9_has_two_classes() {
        let r = enumerate_cyclic(9).unwrap();
        assert_eq!(r.quandles.len(), 2);
        let f9 = FieldCtx::of_order(9).unwrap();
        for q in &r.quandles {
            assert!(f9
                .primitive_elements()
                .iter()
                .any(|&a| Quandle::alexander(&f9, a)
                    .unwrap()
                    .is_isomorphic(q)
                    .is_some()));
        }
    }

    #[test]
    fn cyclic_bounds() {
        assert!(matches!(
            enumerate_cyclic(2),
            Err(Error::OutOfBounds { .. })
        ));
        assert!(matches!(
            enumerate_cyclic(14),
            Err(Error::OutOfBounds { .. })
        ));
        let bad = Perm::parse_with_degree("(1 2)(3 4)", 5).unwrap();
        assert!(enumerate_cyclic_with(5, &bad, 13).is_err());
    }

    #[test]
    fn other_base_cycle_gives_same_count() {
        let phi0 = Perm::parse_with_degree("(1 5 3 7 2 6 4)", 8).unwrap();
        let a = enumerate_cyclic_with(8, &phi0, 13).unwrap();
        assert_eq!(
            a.quandles.len(),
            enumerate_cyclic(8).unwrap().quandles.len()
        );
    }

    #[test]
    fn count_formula() {
        assert_eq!(cyclic_count_formula(3).unwrap(), 1);
        assert_eq!(cyclic_count_formula(8).unwrap(), 2);
        assert_eq!(cyclic_count_formula(9).unwrap(), 2);
        assert_eq!(
            cyclic_count_formula(6).unwrap_err(),
            Error::NotPrimePower(6)
        );
        assert!(cyclic_count_formula(2).is_err());
    }

    #[test]
    fn connected_small_sizes() {
        assert_eq!(
            enumerate_connected_bruteforce(1, false)
                .unwrap()
                .quandles
                .len(),
            1
        );
        assert_eq!(
            enumerate_connected_bruteforce(2, false)
                .unwrap()
                .quandles
                .len(),
            0
        );
        assert_eq!(
            enumerate_connected_bruteforce(3, false)
                .unwrap()
                .quandles
                .len(),
            1
        );
        let r4 = enumerate_connected_bruteforce(4, false).unwrap();
        assert_eq!(r4.quandles.len(), 1);
        let f4 = FieldCtx::of_order(4).unwrap();
        let a4 = Quandle::alexander(&f4, f4.primitive_element()).unwrap();
        assert!(r4.quandles[0].is_isomorphic(&a4).is_some());
        assert!(enumerate_connected_bruteforce(7, false).is_err());
        assert!(enumerate_connected_bruteforce(8, true).is_err());
    }

    #[test]
    fn naive_oracle_counts() {
        // Isomorphism classes of all quandles of sizes 1..=4.
        let counts: Vec<usize> = (1..=4)
            .map(|n| all_quandles_naive(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 3, 7]);
    }

    #[test]
    fn connected_search_matches_naive_oracle() {
        for n in 1..=4 {
            let naive: Vec<Quandle> = all_quandles_naive(n)
                .unwrap()
                .into_iter()
                .filter(|q| q.is_connected())
                .collect();
            let search = enumerate_connected_bruteforce(n, false).unwrap().quandles;
            assert_eq!(naive.len(), search.len(), "n = {n}");
            for q in &naive {
                assert!(search.iter().any(|s| s.is_isomorphic(q).is_some()));
            }
        }
    }

    #[test]
    fn permutation_successor() {
        let mut v = vec![1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 6);
        assert_eq!(v, vec![3, 2, 1]);
    }
}
