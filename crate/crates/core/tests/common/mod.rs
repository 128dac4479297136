#![allow(dead_code)]

use std::collections::HashSet;

use proptest::prelude::*;
use qlab::field::FieldCtx;
use qlab::perm::{element_cap, Perm, PermGroup};
use qlab::quandle::Quandle;

pub fn perm_strategy(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Perm::from_images(images).unwrap())
}

/// One to three random generators on 2 to 7 points.
pub fn generators_strategy() -> impl Strategy<Value = Vec<Perm>> {
    (2usize..=7).prop_flat_map(|n| proptest::collection::vec(perm_strategy(n), 1..=3))
}

/// Order of `⟨gens⟩` by closing the identity under right multiplication.
pub fn closure_order(gens: &[Perm]) -> usize {
    let id = Perm::identity(gens[0].degree());
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(g) = queue.pop() {
        for s in gens {
            let h = g.mul(s);
            if seen.insert(h.clone()) {
                queue.push(h);
            }
        }
    }
    seen.len()
}

/// `|G| = |x^G| · |G_x|` at every point.
pub fn orbit_stabilizer(gens: &[Perm]) -> Result<(), String> {
    let g = PermGroup::from_generators(gens).map_err(|e| e.to_string())?;
    for x in 0..g.degree() {
        let orbit = g.orbit(x).len() as u128;
        let stab = g.stabilizer(x).map_err(|e| e.to_string())?.order();
        if orbit * stab != g.order() {
            return Err(format!("point {x}: {orbit} * {stab} != {}", g.order()));
        }
    }
    Ok(())
}

pub fn bsgs_matches_closure(gens: &[Perm]) -> Result<(), String> {
    let g = PermGroup::from_generators(gens).map_err(|e| e.to_string())?;
    let expected = closure_order(gens) as u128;
    if g.order() != expected {
        return Err(format!(
            "chain order {} != closure order {expected}",
            g.order()
        ));
    }
    Ok(())
}

/// A nonregular transitive Frobenius group has trivial center. Other
/// groups pass vacuously.
pub fn frobenius_center(g: &PermGroup) -> Result<bool, String> {
    if g.degree() < 2 || !g.is_transitive() || g.is_regular() {
        return Ok(false);
    }
    if !g.is_frobenius_action().map_err(|e| e.to_string())? {
        return Ok(false);
    }
    let center = g
        .center_with_cap(element_cap())
        .map_err(|e| e.to_string())?;
    if !center.is_trivial() {
        return Err(format!("center of order {}", center.order()));
    }
    Ok(true)
}

/// `x ↦ ax + b` on `GF(p)` for a fixed unit `a`, with `a ≠ 1`.
pub fn affine_subgroup(p: usize, a: usize) -> PermGroup {
    let shift = Perm::from_images((0..p).map(|x| (x + 1) % p).collect()).unwrap();
    let scale = Perm::from_images((0..p).map(|x| (a * x) % p).collect()).unwrap();
    PermGroup::from_generators(&[shift, scale]).unwrap()
}

/// Nonregular transitive groups known to be Frobenius.
pub fn frobenius_test_groups() -> Vec<(String, PermGroup)> {
    let mut out = Vec::new();
    for p in [3usize, 5, 7, 11, 13] {
        for a in 2..p {
            out.push((format!("x -> {a}x + b mod {p}"), affine_subgroup(p, a)));
        }
    }
    out.push(("A4".into(), PermGroup::alternating(4)));
    for q in [4u64, 8, 9] {
        let f = FieldCtx::of_order(q).unwrap();
        let quandle = Quandle::alexander(&f, f.primitive_element()).unwrap();
        out.push((format!("Inn(A({q}))"), quandle.inner_group()));
    }
    out
}

/// The copy of `q` with points renamed by `sigma`.
pub fn relabel(q: &Quandle, sigma: &[usize]) -> Quandle {
    let n = q.size();
    let mut rows = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            rows[sigma[x]][sigma[y]] = sigma[q.op(x, y)];
        }
    }
    Quandle::from_table(&rows).unwrap()
}

/// Every Alexander quandle over the fields of order at most 13.
pub fn alexander_quandles() -> Vec<(String, Quandle)> {
    let mut out = Vec::new();
    for q in [3u64, 4, 5, 7, 8, 9, 11, 13] {
        let f = FieldCtx::of_order(q).unwrap();
        for a in f.units() {
            out.push((
                format!("A({q}, {})", f.format_elem(a)),
                Quandle::alexander(&f, a).unwrap(),
            ));
        }
    }
    out
}
