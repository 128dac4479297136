//! Arithmetic in `GF(p^m)` in polynomial basis, and dense matrices over it.
//!
//! An element is stored as the integer `Σ c_i p^i` of its coefficient vector
//! `(c_0, …, c_{m-1})`, so equality of elements is equality of coefficient
//! vectors and the element order `0, 1, …, q−1` lists the prime subfield
//! first.

mod matrix;

pub use matrix::FqMatrix;

use std::fmt;

use crate::error::{Error, Result};

/// Default upper bound on the field order.
pub const DEFAULT_FIELD_BOUND: u64 = 1 << 20;

/// An element of some `GF(q)`; meaningful only together with its [`FieldCtx`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A finite field `GF(p^m)` with a fixed monic irreducible modulus.
pub struct FieldCtx {
    p: u64,
    m: usize,
    q: u64,
    /// Monic, low degree first, length `m + 1`.
    modulus: Vec<u32>,
    /// `exp[k] = g^k` for the least primitive element `g`.
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p, self.m, self.modulus)
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// `(p, m)` with `q = p^m`, or `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut r, mut m) = (q, 0);
    while r % p == 0 {
        r /= p;
        m += 1;
    }
    (r == 1).then_some((p, m))
}

pub fn euler_phi(n: u64) -> u64 {
    let (mut r, mut out, mut d) = (n, n, 2);
    while d * d <= r {
        if r % d == 0 {
            while r % d == 0 {
                r /= d;
            }
            out -= out / d;
        }
        d += 1;
    }
    if r > 1 {
        out -= out / r;
    }
    out
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Remainder of `a` modulo the monic `b` over `GF(p)`; low degree first.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bi) in b.iter().enumerate() {
                let sub = (lead as u64 * bi as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-`p`
/// digits of `k`.
fn monic_from_index(k: u64, deg: usize, p: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(deg + 1);
    let mut r = k;
    for _ in 0..deg {
        out.push((r % p) as u32);
        r /= p;
    }
    out.push(1);
    out
}

/// Irreducibility by trial division with every monic divisor of degree
/// `1..=deg/2`.
pub fn is_irreducible(poly: &[u32], p: u64) -> bool {
    let deg = poly.len() - 1;
    if deg == 0 || *poly.last().unwrap() != 1 {
        return false;
    }
    for d in 1..=deg / 2 {
        for k in 0..p.pow(d as u32) {
            let div = monic_from_index(k, d, p);
            if poly_rem(poly, &div, p as u32).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The least monic irreducible of degree `m`, coefficient vectors compared
/// with the constant term most significant.
pub fn least_irreducible(p: u64, m: usize) -> Vec<u32> {
    let count = p.pow(m as u32);
    (0..count)
        .map(|k| {
            // Reverse the digit order so that c_0 is the most significant.
            let mut coeffs = vec![0u32; m];
            let mut r = k;
            for i in (0..m).rev() {
                coeffs[i] = (r % p) as u32;
                r /= p;
            }
            coeffs.push(1);
            coeffs
        })
        .find(|poly| is_irreducible(poly, p))
        .expect("an irreducible polynomial exists in every degree")
}

/// Parses `"c0,c1,...,cm"` (low degree first).
pub fn parse_poly(text: &str) -> Result<Vec<u32>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad coefficient {s:?} in {text:?}")))
        })
        .collect()
}

impl FieldCtx {
    /// Builds `GF(p^m)`; without a modulus the least monic irreducible is
    /// used. The order must not exceed [`DEFAULT_FIELD_BOUND`].
    pub fn new(p: u64, m: usize, modulus: Option<Vec<u32>>) -> Result<FieldCtx> {
        Self::with_bound(p, m, modulus, DEFAULT_FIELD_BOUND)
    }

    pub fn with_bound(p: u64, m: usize, modulus: Option<Vec<u32>>, bound: u64) -> Result<FieldCtx> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidArgument(
                "extension degree must be ≥ 1".into(),
            ));
        }
        let q = (p as u128).pow(m as u32);
        if q > bound as u128 {
            return Err(Error::FieldTooLarge {
                q: q.min(u64::MAX as u128) as u64,
                bound,
            });
        }
        let q = q as u64;
        let modulus = match modulus {
            Some(poly) => {
                let poly: Vec<u32> = poly.into_iter().map(|c| (c as u64 % p) as u32).collect();
                if poly.len() != m + 1 || !is_irreducible(&poly, p) {
                    return Err(Error::ReducibleModulus(poly));
                }
                poly
            }
            None => least_irreducible(p, m),
        };
        let mut ctx = FieldCtx {
            p,
            m,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        ctx.build_tables();
        Ok(ctx)
    }

    /// Convenience constructor from the field order.
    pub fn of_order(q: u64) -> Result<FieldCtx> {
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        FieldCtx::new(p, m, None)
    }

    fn build_tables(&mut self) {
        let q1 = self.q - 1;
        let factors = prime_factors(q1);
        let generator = (1..self.q as u32)
            .map(FieldElem)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| self.slow_pow(g, q1 / r) != FieldElem::ONE)
            })
            .expect("the unit group is cyclic");
        let mut exp = Vec::with_capacity(q1 as usize);
        let mut log = vec![0u32; self.q as usize];
        let mut x = FieldElem::ONE;
        for k in 0..q1 {
            exp.push(x.0);
            log[x.index()] = k as u32;
            x = self.slow_mul(x, generator);
        }
        debug_assert_eq!(x, FieldElem::ONE);
        self.exp = exp;
        self.log = log;
    }

    fn slow_mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let p = self.p;
        let mut prod = vec![0u32; 2 * self.m];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p) as u32;
            }
        }
        let r = poly_rem(&prod, &self.modulus, p as u32);
        self.from_coeffs(&r)
    }

    fn slow_pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let (mut base, mut acc) = (a, FieldElem::ONE);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// All elements in index order (zero first).
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q as u32).map(FieldElem)
    }

    pub fn units(&self) -> impl Iterator<Item = FieldElem> {
        (1..self.q as u32).map(FieldElem)
    }

    pub fn elem(&self, index: usize) -> Result<FieldElem> {
        if (index as u64) < self.q {
            Ok(FieldElem(index as u32))
        } else {
            Err(Error::InvalidArgument(format!(
                "index {index} outside GF({})",
                self.q
            )))
        }
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, k: i64) -> FieldElem {
        FieldElem(k.rem_euclid(self.p as i64) as u32)
    }

    pub fn coeffs(&self, a: FieldElem) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.m);
        let mut r = a.0 as u64;
        for _ in 0..self.m {
            out.push((r % self.p) as u32);
            r /= self.p;
        }
        out
    }

    /// Builds an element from coefficients (low degree first); missing high
    /// coefficients are zero, extra ones must be zero.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> FieldElem {
        let mut idx = 0u64;
        for &c in coeffs.iter().take(self.m).rev() {
            idx = idx * self.p + (c as u64 % self.p);
        }
        FieldElem(idx as u32)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.p == 2 {
            return FieldElem(a.0 ^ b.0);
        }
        let p = self.p as u32;
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        FieldElem(out)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.p == 2 {
            return a;
        }
        let p = self.p as u32;
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        FieldElem(out)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        let q1 = self.q - 1;
        let k = (self.log[a.index()] as u64 + self.log[b.index()] as u64) % q1;
        FieldElem(self.exp[k as usize])
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let q1 = self.q - 1;
        let k = (q1 - self.log[a.index()] as u64) % q1;
        Ok(FieldElem(self.exp[k as usize]))
    }

    /// `a^e` for any integer exponent; `0^e` with `e ≤ 0` is an error.
    pub fn pow(&self, a: FieldElem, e: i64) -> Result<FieldElem> {
        if a.is_zero() {
            return if e > 0 {
                Ok(FieldElem::ZERO)
            } else {
                Err(Error::ZeroElement)
            };
        }
        let q1 = (self.q - 1) as i128;
        let k = (self.log[a.index()] as i128 * e as i128).rem_euclid(q1);
        Ok(FieldElem(self.exp[k as usize]))
    }

    /// Least `k ≥ 1` with `a^k = 1`, found by repeated multiplication over
    /// the divisors of `q − 1`.
    pub fn mult_order(&self, a: FieldElem) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let q1 = self.q - 1;
        let mut divisors: Vec<u64> = (1..=q1).filter(|d| q1.is_multiple_of(*d)).collect();
        divisors.sort_unstable();
        for d in divisors {
            let mut x = FieldElem::ONE;
            let (mut base, mut e) = (a, d);
            while e > 0 {
                if e & 1 == 1 {
                    x = self.mul(x, base);
                }
                base = self.mul(base, base);
                e >>= 1;
            }
            if x == FieldElem::ONE {
                return Ok(d);
            }
        }
        unreachable!("a^(q-1) = 1 for every unit")
    }

    /// Units of order exactly `q − 1`.
    pub fn primitive_elements(&self) -> Vec<FieldElem> {
        let q1 = self.q - 1;
        self.units()
            .filter(|&a| self.mult_order(a).unwrap() == q1)
            .collect()
    }

    /// The least primitive element in index order.
    pub fn primitive_element(&self) -> FieldElem {
        FieldElem(self.exp[if self.q == 2 { 0 } else { 1 }])
    }

    pub fn format_elem(&self, a: FieldElem) -> String {
        self.coeffs(a)
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}
