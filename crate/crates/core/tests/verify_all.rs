use qlab::quandle::Quandle;
use qlab::verify::{self, verify_all, CheckReport, Profile, Summary, Verdict};

fn outcomes(s: &Summary) -> Vec<(String, Verdict, String)> {
    s.reports
        .iter()
        .map(|r| {
            (
                r.check_id.clone(),
                r.verdict,
                serde_json::to_string(&r.parameters).unwrap(),
            )
        })
        .collect()
}

#[test]
fn quick_profile_is_deterministic_across_worker_counts() {
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let a = single.install(|| verify_all(Profile::Quick)).unwrap();
    let b = verify_all(Profile::Quick).unwrap();
    assert!(a.passed());
    assert_eq!(outcomes(&a), outcomes(&b));
    for r in &a.reports {
        assert!(r.is_consistent(), "{}", r.check_id);
        let back: CheckReport = serde_json::from_str(&r.to_json_line()).unwrap();
        assert_eq!(&back, r);
    }
    let skipped: Vec<&str> = a
        .reports
        .iter()
        .filter(|r| r.verdict == Verdict::Skipped)
        .map(|r| r.check_id.as_str())
        .collect();
    assert!(skipped.contains(&"case5-ree"));
    assert!(skipped.contains(&"classes-hs-co3"));
}

#[test]
fn injected_failure_fails_the_summary() {
    let fake = verify::verify_ktw_with(7, |n| {
        Ok(if n == 6 {
            vec![Quandle::dihedral(6)]
        } else {
            verify::cyclic_census(n)?.to_vec()
        })
    })
    .unwrap();
    let mut summary = verify_all(Profile::Quick).unwrap();
    summary.reports.push(fake);
    assert!(!summary.passed());
    assert_eq!(summary.count(Verdict::Fail), 1);
}
