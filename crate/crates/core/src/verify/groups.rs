use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::json;

use super::census::cyclic_census;
use super::{Check, CheckReport};
use crate::classical::{
    matrix_group_closure, psl_action, psl_stabilizer_center_trivial, psu_class_size_table,
    ree_stabilizer_generators,
};
use crate::error::{Error, Result};
use crate::field::{prime_power, FieldCtx};
use crate::perm::{element_cap, BurnsideBranch, PermGroup};

pub const DEFAULT_CASE1_PAIRS: &[(usize, u64)] = &[
    (2, 4),
    (2, 5),
    (2, 7),
    (2, 8),
    (2, 9),
    (2, 11),
    (3, 2),
    (3, 3),
];
pub const DEFAULT_CASE3_QS: &[u64] = &[3, 4, 5, 7, 8, 9, 11];
pub const DEFAULT_CLOSURE_CAP: usize = 2_000_000;

pub(crate) const CASE5_ID: &str = "case5-ree";
pub(crate) const CASE5_ANCHOR: &str =
    "the Ree point stabilizer over GF(27) has order 27^3 * 26 and trivial center";
const REE_ORDER: usize = 27 * 27 * 27 * 26;

/// The point stabilizer of `PSL(d, q)` on projective points has trivial
/// center for every admissible pair; `(2, 2)` and `(2, 3)` are skipped.
pub fn verify_case1(pairs: &[(usize, u64)]) -> Result<CheckReport> {
    let mut check = Check::new(
        "case1-psl",
        "point stabilizers of PSL(d, q) on projective points have trivial center",
    );
    let mut checked = Vec::new();
    let mut skipped = Vec::new();
    for &(d, q) in pairs {
        match psl_stabilizer_center_trivial(d, q) {
            Ok(true) => checked.push((d, q)),
            Ok(false) => {
                checked.push((d, q));
                check.witness(json!({ "d": d, "q": q, "stabilizer_center": "nontrivial" }));
            }
            Err(Error::ExcludedParameters(_)) => skipped.push((d, q)),
            Err(e) => return Err(e),
        }
    }
    check.param("checked", &checked);
    if !skipped.is_empty() {
        check.param("skipped", &skipped);
    }
    if checked.is_empty() {
        return Ok(check.skip("excluded parameter pairs"));
    }
    Ok(check.finish())
}

/// No class size computed from the `PSU(3, q)` centralizer orders equals
/// `q³ + 1`. Each table is attached as a parameter.
pub fn verify_case3(qs: &[u64]) -> Result<CheckReport> {
    let mut check = Check::new(
        "case3-psu",
        "no conjugacy class of PSU(3, q) has size q^3 + 1",
    );
    for &q in qs {
        let table = psu_class_size_table(q)?;
        let sizes: Vec<String> = table
            .rows
            .iter()
            .map(|r| r.class_size.to_string())
            .collect();
        if table.has_class_of_degree {
            check
                .witness(json!({ "q": q, "class_sizes": sizes, "degree": (q as u128).pow(3) + 1 }));
        }
        check.param(
            format!("q={q}"),
            json!({ "group_order": table.group_order.to_string(), "class_sizes": sizes }),
        );
    }
    Ok(check.finish())
}

/// The closure of `d(λ), a, b` over `GF(27)`, with `λ` primitive.
pub fn verify_case5() -> Result<CheckReport> {
    verify_case5_with(DEFAULT_CLOSURE_CAP, None)
}

/// As [`verify_case5`] with a closure cap and an optional unit `λ` given by
/// field index. A non-primitive `λ` still builds the closure and reports its
/// order, but the report is skipped.
pub fn verify_case5_with(cap: usize, lambda: Option<usize>) -> Result<CheckReport> {
    let mut check = Check::new(CASE5_ID, CASE5_ANCHOR);
    let ctx = Arc::new(FieldCtx::of_order(27)?);
    let lambda = match lambda {
        Some(i) => ctx.elem(i)?,
        None => ctx.primitive_element(),
    };
    let lambda_order = ctx.mult_order(lambda)?;
    check.param("lambda", ctx.format_elem(lambda));
    check.param("lambda_order", lambda_order);
    check.param("cap", cap);
    let closure = matrix_group_closure(&ree_stabilizer_generators(&ctx, lambda)?, cap)?;
    check.param("order", closure.order());
    if lambda_order != 26 {
        return Ok(check.skip("λ is not primitive; order reported without a verdict"));
    }
    let center_trivial = closure.center_trivial();
    check.param("center_trivial", center_trivial);
    if closure.order() != REE_ORDER {
        check.witness(json!({ "order": closure.order(), "expected": REE_ORDER }));
    }
    if !center_trivial {
        check.witness(json!({ "center": "nontrivial" }));
    }
    Ok(check.finish())
}

struct Named {
    name: &'static str,
    group: PermGroup,
    order: u128,
}

fn named(name: &'static str, group: PermGroup, order: u128) -> Named {
    Named { name, group, order }
}

/// A7, PSL(2, 11) on 12 points and PSL(2, 8) on 9 points have no class of
/// size 15, 11 and 28 respectively.
pub fn verify_small_simple_classes() -> Result<CheckReport> {
    let mut check = Check::new(
        "classes-small-simple",
        "A7 has no class of size 15, PSL(2,11) none of size 11, PSL(2,8) none of size 28",
    );
    let cases = [
        (named("A7", PermGroup::alternating(7), 2520), 7, 15),
        (named("PSL(2,11)", psl_action(2, 11)?, 660), 12, 11),
        (named("PSL(2,8)", psl_action(2, 8)?, 504), 9, 28),
    ];
    for (g, degree, forbidden) in cases {
        if g.group.order() != g.order || g.group.degree() != degree {
            check.witness(json!({ "group": g.name, "what": "construction", "order": g.group.order() as u64, "degree": g.group.degree() }));
            continue;
        }
        let sizes = g.group.conjugacy_class_sizes(element_cap())?;
        if sizes.contains(&forbidden) {
            let rep = g
                .group
                .conjugacy_classes(element_cap())?
                .into_iter()
                .find(|c| c.size == forbidden)
                .unwrap()
                .representative;
            check.witness(json!({ "group": g.name, "class_size": forbidden, "representative": rep.to_string() }));
        }
        check.param(
            g.name,
            json!({ "class_sizes": sizes, "forbidden": forbidden }),
        );
    }
    check.param("skipped", ["HS", "Co3"]);
    Ok(check.finish())
}

/// Nontrivial classes of small nonabelian simple groups never have
/// prime-power size.
pub fn verify_prime_power_class_property() -> Result<CheckReport> {
    let mut check = Check::new(
        "case2-ppclass",
        "nontrivial classes of nonabelian simple groups do not have prime-power size",
    );
    let groups = [
        named("A5", PermGroup::alternating(5), 60),
        named("A6", PermGroup::alternating(6), 360),
        named("A7", PermGroup::alternating(7), 2520),
        named("PSL(2,7)", psl_action(2, 7)?, 168),
        named("PSL(2,8)", psl_action(2, 8)?, 504),
        named("PSL(2,11)", psl_action(2, 11)?, 660),
        named("PSL(3,2)", psl_action(3, 2)?, 168),
    ];
    for g in groups {
        let cap = element_cap();
        if g.group.order() != g.order || !g.group.is_simple(cap)? {
            check.witness(
                json!({ "group": g.name, "what": "construction is not the expected simple group" }),
            );
            continue;
        }
        let classes = g.group.conjugacy_classes(cap)?;
        for c in classes.iter().filter(|c| !c.representative.is_identity()) {
            if prime_power(c.size as u64).is_some() {
                check.witness(json!({ "group": g.name, "representative": c.representative.to_string(), "class_size": c.size }));
            }
        }
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        check.param(g.name, sizes);
    }
    Ok(check.finish())
}

/// Burnside's dichotomy on the inner groups of all cyclic-type quandles up
/// to `max_n` (expected: regular elementary abelian) and on `S5`, `A5` and
/// `PSL(2, 7)` (expected: nonabelian simple).
pub fn verify_burnside(max_n: usize) -> Result<CheckReport> {
    let mut check = Check::new(
        "thm-burnside",
        "a minimal normal subgroup of a doubly transitive group is regular elementary abelian or nonabelian simple",
    );
    let mut samples: Vec<(String, PermGroup, BurnsideBranch)> = Vec::new();
    for n in 3..=max_n {
        for (i, q) in cyclic_census(n)?.iter().enumerate() {
            samples.push((
                format!("Inn(cyclic-{n}-{i})"),
                q.inner_group(),
                BurnsideBranch::RegularElementaryAbelian,
            ));
        }
    }
    samples.push((
        "S5".into(),
        PermGroup::symmetric(5),
        BurnsideBranch::NonregularNonabelianSimple,
    ));
    samples.push((
        "A5".into(),
        PermGroup::alternating(5),
        BurnsideBranch::NonregularNonabelianSimple,
    ));
    samples.push((
        "PSL(2,7)".into(),
        psl_action(2, 7)?,
        BurnsideBranch::NonregularNonabelianSimple,
    ));
    let mut found = BTreeMap::new();
    for (name, group, expected) in samples {
        let report = group.burnside_dichotomy_check(element_cap())?;
        if report.branch != expected {
            check.witness(json!({
                "group": name,
                "generators": group.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "branch": report.branch,
                "expected": expected,
            }));
        }
        found.insert(
            name,
            json!({ "minimal_normal_order": report.order as u64, "branch": report.branch }),
        );
    }
    check.param("samples", found);
    Ok(check.finish())
}

/// Instances beyond desk scale, reported as skipped.
pub fn verify_out_of_scale() -> Vec<CheckReport> {
    [
        ("classes-hs-co3", "class sizes of HS and Co3"),
        (
            "case2-sp62",
            "the primitive-stabilizer chain for Sp(6, 2) in its 2-transitive actions",
        ),
        (
            "case4-suzuki",
            "stabilizer centers of the Suzuki groups Sz(q)",
        ),
        (
            "case5-ree-large",
            "Ree point stabilizers over GF(3^(2d+1)) beyond GF(27)",
        ),
    ]
    .into_iter()
    .map(|(id, anchor)| Check::new(id, anchor).skip("beyond desk scale"))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Verdict;

    #[test]
    fn case1_skips_excluded_pairs() {
        let r = verify_case1(&[(2, 5), (3, 2), (2, 3)]).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.parameters["skipped"], json!([[2, 3]]));
        let r = verify_case1(&[(2, 3)]).unwrap();
        assert_eq!(r.verdict, Verdict::Skipped);
    }

    #[test]
    fn case3_tables() {
        let r = verify_case3(&[3, 5]).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(
            r.parameters["q=3"]["class_sizes"].as_array().unwrap().len(),
            8
        );
        assert!(verify_case3(&[2]).is_err());
    }

    #[test]
    fn case5_cap_and_nonprimitive_lambda() {
        let err = verify_case5_with(1000, None).unwrap_err();
        assert!(matches!(
            err,
            Error::CapExceeded {
                needed: 1001,
                cap: 1000,
                ..
            }
        ));
        // λ = 1 has order 1, so d(λ) is the identity.
        let r = verify_case5_with(DEFAULT_CLOSURE_CAP, Some(1)).unwrap();
        assert_eq!(r.verdict, Verdict::Skipped);
        assert_eq!(r.parameters["lambda_order"], 1);
        assert!(r.parameters["order"].as_u64().unwrap() > 0);
    }

    #[test]
    fn small_simple_classes() {
        let r = verify_small_simple_classes().unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
    }

    #[test]
    fn burnside_samples() {
        let r = verify_burnside(5).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert_eq!(r.parameters["samples"]["S5"]["minimal_normal_order"], 60);
        assert_eq!(
            r.parameters["samples"]["Inn(cyclic-5-0)"]["minimal_normal_order"],
            5
        );
    }

    #[test]
    fn out_of_scale_reports_are_skipped() {
        assert!(verify_out_of_scale()
            .iter()
            .all(|r| r.verdict == Verdict::Skipped && r.is_consistent()));
    }
}
