use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::census::{cyclic_census, Corpus, CorpusEntry};
use super::{table_witness, Check, CheckReport};
use crate::enumerate::{cyclic_count_formula, DEFAULT_CYCLIC_MAX};
use crate::error::{Error, Result};
use crate::field::{prime_power, FieldCtx};
use crate::quandle::Quandle;

pub const DEFAULT_AFFINE_QS: &[u64] = &[3, 4, 5, 7, 8, 9, 11, 13];

fn check_max_n(max_n: usize) -> Result<()> {
    if !(3..=DEFAULT_CYCLIC_MAX).contains(&max_n) {
        return Err(Error::OutOfBounds {
            n: max_n,
            min: 3,
            max: DEFAULT_CYCLIC_MAX,
        });
    }
    Ok(())
}

/// Cyclic-type quandles of size `n` exist exactly when `n` is a prime
/// power, for `3 ≤ n ≤ max_n`.
pub fn verify_ktw(max_n: usize) -> Result<CheckReport> {
    verify_ktw_with(max_n, |n| Ok(cyclic_census(n)?.to_vec()))
}

/// As [`verify_ktw`], reading the cyclic quandles of each size from
/// `source`.
pub fn verify_ktw_with(
    max_n: usize,
    source: impl Fn(usize) -> Result<Vec<Quandle>>,
) -> Result<CheckReport> {
    check_max_n(max_n)?;
    let mut check = Check::new(
        "thm-ktw",
        "a cyclic-type quandle of size n exists iff n is a prime power",
    );
    check.param("max_n", max_n);
    let mut counts = BTreeMap::new();
    for n in 3..=max_n {
        let found = source(n)?;
        let expected = prime_power(n as u64).is_some();
        counts.insert(n.to_string(), found.len());
        if found.is_empty() == expected {
            let mut w = json!({ "n": n, "found": found.len(), "prime_power": expected });
            if let Some(q) = found.first() {
                w["table"] = Value::String(q.to_qnd_string());
            }
            check.witness(w);
        }
    }
    check.param("classes_by_size", counts);
    Ok(check.finish())
}

/// Every cyclic-type quandle of size `n ≤ max_n` is simple and isomorphic to
/// `A(GF(n), α)` for a primitive `α`; there are `φ(n − 1)/m` of them, and
/// the primitive elements giving one class form a single Frobenius orbit.
pub fn verify_corollary(max_n: usize) -> Result<CheckReport> {
    check_max_n(max_n)?;
    let mut check = Check::new(
        "cor-affine",
        "every cyclic-type quandle is a simple Alexander quandle over GF(q) with primitive α",
    );
    check.param("max_n", max_n);
    for n in 3..=max_n {
        let census = cyclic_census(n)?;
        let Some((p, m)) = prime_power(n as u64) else {
            for q in census.iter() {
                check.witness(table_witness("cyclic quandle of non-prime-power size", q));
            }
            continue;
        };
        let ctx = FieldCtx::of_order(n as u64)?;
        let primitive = ctx.primitive_elements();
        let alexanders: Vec<Quandle> = primitive
            .iter()
            .map(|&a| Quandle::alexander(&ctx, a))
            .collect::<Result<_>>()?;

        let mut matches = Vec::new();
        for q in census.iter() {
            if !q.is_simple() {
                check.witness(table_witness("not simple", q));
            }
            match alexanders.iter().position(|a| a.is_isomorphic(q).is_some()) {
                Some(i) => matches.push(ctx.format_elem(primitive[i])),
                None => check.witness(table_witness(
                    "no Alexander quandle with primitive α matches",
                    q,
                )),
            }
        }

        // Group primitive elements by isomorphism of their quandles and
        // compare each group with the orbit α ↦ α^p.
        let mut orbit_sizes = Vec::new();
        let mut assigned = vec![false; primitive.len()];
        for i in 0..primitive.len() {
            if assigned[i] {
                continue;
            }
            let class: Vec<usize> = (i..primitive.len())
                .filter(|&j| !assigned[j] && alexanders[i].is_isomorphic(&alexanders[j]).is_some())
                .collect();
            for &j in &class {
                assigned[j] = true;
            }
            let mut orbit: Vec<usize> = (0..m)
                .map(|k| ctx.pow(primitive[i], (p as i64).pow(k as u32)).unwrap())
                .map(|a| primitive.iter().position(|&b| b == a).unwrap())
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            if orbit != class || class.len() != m {
                check.witness(json!({
                    "what": "isomorphism class of primitive elements is not a Frobenius orbit",
                    "n": n,
                    "class": class.iter().map(|&j| ctx.format_elem(primitive[j])).collect::<Vec<_>>(),
                }));
            }
            orbit_sizes.push(class.len());
        }

        let predicted = cyclic_count_formula(n as u64)?;
        if census.len() as u64 != predicted {
            check.witness(json!({ "what": "class count differs from φ(n−1)/m", "n": n, "found": census.len(), "predicted": predicted }));
        }
        check.param(
            format!("n={n}"),
            json!({ "classes": census.len(), "predicted": predicted, "alpha": matches, "galois_orbit_sizes": orbit_sizes }),
        );
    }
    Ok(check.finish())
}

/// For each `q` and every nonzero `α`, `A(GF(q), α)` is of cyclic type iff
/// `α` has multiplicative order `q − 1`.
pub fn verify_affine_cyclic(qs: &[u64]) -> Result<CheckReport> {
    let mut check = Check::new(
        "prop-affine-cyclic",
        "A(q, α) is of cyclic type iff α has order q − 1",
    );
    let mut swept = BTreeMap::new();
    for &q in qs {
        if q < 3 {
            return Err(Error::OutOfBounds {
                n: q as usize,
                min: 3,
                max: usize::MAX,
            });
        }
        let ctx = FieldCtx::of_order(q)?;
        let mut cyclic = 0;
        for a in ctx.units() {
            let quandle = Quandle::alexander(&ctx, a)?;
            let is_cyclic = quandle.is_cyclic_type()?;
            let primitive = ctx.mult_order(a)? == q - 1;
            cyclic += is_cyclic as usize;
            if is_cyclic != primitive {
                check.witness(json!({ "q": q, "alpha": ctx.format_elem(a), "cyclic_type": is_cyclic, "primitive": primitive }));
            }
        }
        swept.insert(q.to_string(), json!({ "units": q - 1, "cyclic": cyclic }));
    }
    check.param("swept", swept);
    Ok(check.finish())
}

/// Every cyclic-type quandle of size `q ≤ max_n` has an inner group of
/// order `q(q − 1)` acting as a Frobenius group.
pub fn verify_inner_order(max_n: usize) -> Result<CheckReport> {
    check_max_n(max_n)?;
    let mut check = Check::new(
        "inner-order-law",
        "a cyclic-type quandle of size q has |Inn| = q(q − 1), acting as a Frobenius group",
    );
    check.param("max_n", max_n);
    let mut checked = 0;
    for n in 3..=max_n {
        for q in cyclic_census(n)?.iter() {
            checked += 1;
            let inner = q.inner_group();
            let order = inner.order();
            let frobenius = inner.is_frobenius_action()?;
            if order != (n * (n - 1)) as u128 || !frobenius {
                let mut w = table_witness("inner group order or action", q);
                w["order"] = json!(order as u64);
                w["frobenius"] = json!(frobenius);
                check.witness(w);
            }
        }
    }
    check.param("quandles_checked", checked);
    Ok(check.finish())
}

/// The lemma sweeps over [`Corpus::standard`].
pub fn verify_lemmas(max_n: usize) -> Result<CheckReport> {
    check_max_n(max_n)?;
    let mut report = verify_lemmas_on(&Corpus::standard(max_n)?)?;
    report.parameters.insert("max_n".into(), json!(max_n));
    Ok(report)
}

const SWEEPS: [&str; 6] = [
    "lemma-nontrivial-center",
    "lemma-cyclic-stabilizer",
    "lemma-frobenius",
    "lemma-mccarron",
    "lemma-primitive-simple",
    "cyclic-type-shortcut",
];

/// Runs every lemma sweep over `corpus`. Witnesses name the sweep, the
/// corpus entry and its table.
pub fn verify_lemmas_on(corpus: &Corpus) -> Result<CheckReport> {
    let mut check = Check::new("lemma-suite", "lemma sweeps over the quandle corpus");
    let results: Vec<(Vec<bool>, Vec<Value>)> = corpus
        .entries
        .par_iter()
        .map(sweep_entry)
        .collect::<Result<_>>()?;
    let mut counts = BTreeMap::new();
    for (applied, witnesses) in results {
        for (sweep, hit) in SWEEPS.iter().zip(applied) {
            *counts.entry(*sweep).or_insert(0usize) += hit as usize;
        }
        for w in witnesses {
            check.witness(w);
        }
    }
    check.param("corpus_size", corpus.entries.len());
    check.param("quandles_per_sweep", counts);
    Ok(check.finish())
}

/// Which sweeps apply to `entry`, and the witnesses it produces.
fn sweep_entry(entry: &CorpusEntry) -> Result<(Vec<bool>, Vec<Value>)> {
    let q = &entry.quandle;
    let n = q.size();
    let inner = q.inner_group();
    let connected = inner.is_transitive();
    let cyclic = n >= 3 && q.is_cyclic_type()?;
    let mut applied = vec![false; SWEEPS.len()];
    let mut witnesses = Vec::new();
    let mut fail = |sweep: &str, extra: Value| {
        let mut w = json!({ "sweep": sweep, "quandle": entry.name, "table": q.to_qnd_string() });
        if !extra.is_null() {
            w["detail"] = extra;
        }
        witnesses.push(w);
    };

    applied[0] = true;
    for x in 0..n {
        if !q.phi_central_in_stabilizer(x)? {
            fail(SWEEPS[0], json!({ "point": x }));
        }
    }
    if cyclic {
        applied[1] = true;
        for x in 0..n {
            if !q.stabilizer_is_generated_by_phi(x)? {
                fail(SWEEPS[1], json!({ "point": x }));
            }
        }
        applied[2] = true;
        if !inner.is_frobenius_action()? {
            fail(SWEEPS[2], Value::Null);
        }
    }
    let degree = inner.transitivity_degree(5);
    if n >= 4 {
        applied[3] = true;
        if degree > 2 {
            fail(SWEEPS[3], json!({ "transitivity_degree": degree }));
        }
    } else if n == 3 && connected {
        applied[3] = true;
        if degree != 3 {
            fail(
                SWEEPS[3],
                json!({ "transitivity_degree": degree, "expected": 3 }),
            );
        }
    }
    if q.is_primitive() {
        applied[4] = true;
        if !q.is_simple() {
            fail(SWEEPS[4], Value::Null);
        }
    }
    if n >= 3 {
        applied[5] = true;
        if q.cyclic_type_shortcut()? != cyclic {
            fail(SWEEPS[5], Value::Null);
        }
    }
    Ok((applied, witnesses))
}
