//! Named, runnable checks with machine-readable reports.
//!
//! Every check returns a [`CheckReport`]. A report fails exactly when it
//! carries witnesses, and witnesses are small enough to reproduce the
//! failure on their own. Instances beyond desk scale are reported as
//! skipped rather than passed.

mod census;
mod groups;
mod quandles;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Result;

pub use census::{connected_census, cyclic_census, Corpus, CorpusEntry};
pub use groups::{
    verify_burnside, verify_case1, verify_case3, verify_case5, verify_case5_with,
    verify_out_of_scale, verify_prime_power_class_property, verify_small_simple_classes,
    DEFAULT_CASE1_PAIRS, DEFAULT_CASE3_QS, DEFAULT_CLOSURE_CAP,
};
pub use quandles::{
    verify_affine_cyclic, verify_corollary, verify_inner_order, verify_ktw, verify_ktw_with,
    verify_lemmas, verify_lemmas_on, DEFAULT_AFFINE_QS,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    /// The property under test, stated in words.
    pub paper_anchor: String,
    pub parameters: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub witnesses: Vec<Value>,
    pub elapsed: Duration,
}

impl CheckReport {
    /// Fail iff witnesses are present; skipped reports carry none.
    pub fn is_consistent(&self) -> bool {
        match self.verdict {
            Verdict::Fail => !self.witnesses.is_empty(),
            Verdict::Pass | Verdict::Skipped => self.witnesses.is_empty(),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Accumulates parameters and witnesses for one running check.
pub(crate) struct Check {
    id: &'static str,
    anchor: &'static str,
    start: Instant,
    parameters: BTreeMap<String, Value>,
    witnesses: Vec<Value>,
}

impl Check {
    pub(crate) fn new(id: &'static str, anchor: &'static str) -> Check {
        Check {
            id,
            anchor,
            start: Instant::now(),
            parameters: BTreeMap::new(),
            witnesses: Vec::new(),
        }
    }

    pub(crate) fn param(&mut self, key: impl Into<String>, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("parameter serializes");
        self.parameters.insert(key.into(), value);
    }

    pub(crate) fn witness(&mut self, value: Value) {
        self.witnesses.push(value);
    }

    fn report(self, verdict: Verdict) -> CheckReport {
        CheckReport {
            check_id: self.id.to_string(),
            paper_anchor: self.anchor.to_string(),
            parameters: self.parameters,
            verdict,
            witnesses: self.witnesses,
            elapsed: self.start.elapsed(),
        }
    }

    pub(crate) fn finish(self) -> CheckReport {
        let verdict = if self.witnesses.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        self.report(verdict)
    }

    pub(crate) fn skip(mut self, reason: &str) -> CheckReport {
        assert!(self.witnesses.is_empty());
        self.param("reason", reason);
        self.report(Verdict::Skipped)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// Sizes up to 9, no Ree closure.
    Quick,
    Full,
}

impl Profile {
    pub fn max_n(self) -> usize {
        match self {
            Profile::Quick => 9,
            Profile::Full => crate::enumerate::DEFAULT_CYCLIC_MAX,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub profile: Profile,
    pub reports: Vec<CheckReport>,
}

impl Summary {
    pub fn count(&self, verdict: Verdict) -> usize {
        self.reports.iter().filter(|r| r.verdict == verdict).count()
    }

    /// True iff no report failed.
    pub fn passed(&self) -> bool {
        self.count(Verdict::Fail) == 0
    }
}

type CheckFn = Box<dyn Fn() -> Result<CheckReport> + Send + Sync>;

/// Runs every check. Census data is computed once up front; the checks
/// then run in parallel and are reported in a fixed order.
pub fn verify_all(profile: Profile) -> Result<Summary> {
    let max_n = profile.max_n();
    for n in 3..=max_n {
        cyclic_census(n)?;
    }
    for n in 1..=crate::enumerate::DEFAULT_CONNECTED_MAX {
        connected_census(n)?;
    }
    let mut checks: Vec<CheckFn> = vec![
        Box::new(move || verify_ktw(max_n)),
        Box::new(move || verify_corollary(max_n)),
        Box::new(|| verify_affine_cyclic(DEFAULT_AFFINE_QS)),
        Box::new(move || verify_inner_order(max_n)),
        Box::new(move || verify_lemmas(max_n)),
        Box::new(|| verify_case1(DEFAULT_CASE1_PAIRS)),
        Box::new(|| verify_case3(DEFAULT_CASE3_QS)),
    ];
    checks.push(match profile {
        Profile::Full => Box::new(verify_case5),
        Profile::Quick => {
            Box::new(
                || Ok(Check::new(groups::CASE5_ID, groups::CASE5_ANCHOR).skip("quick profile")),
            )
        }
    });
    checks.push(Box::new(verify_small_simple_classes));
    checks.push(Box::new(verify_prime_power_class_property));
    checks.push(Box::new(move || verify_burnside(max_n)));
    let mut reports = checks
        .par_iter()
        .map(|check| check())
        .collect::<Result<Vec<_>>>()?;
    reports.extend(verify_out_of_scale());
    Ok(Summary { profile, reports })
}

/// A fixed-width table with one line per report.
pub fn render_table(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:<26} {:<8} {:>10}  property",
        "check", "verdict", "time"
    )
    .unwrap();
    for r in reports {
        let verdict = match r.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "skipped",
        };
        writeln!(
            out,
            "{:<26} {:<8} {:>10}  {}",
            r.check_id,
            verdict,
            format!("{:.2?}", r.elapsed),
            r.paper_anchor
        )
        .unwrap();
    }
    out
}

pub(crate) fn table_witness(label: &str, q: &crate::quandle::Quandle) -> Value {
    json!({ "what": label, "table": q.to_qnd_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_follows_witnesses() {
        let pass = Check::new("x", "y").finish();
        assert_eq!(pass.verdict, Verdict::Pass);
        let mut c = Check::new("x", "y");
        c.witness(json!({"pair": [0, 1]}));
        let fail = c.finish();
        assert_eq!(fail.verdict, Verdict::Fail);
        let skipped = Check::new("x", "y").skip("too big");
        assert_eq!(skipped.verdict, Verdict::Skipped);
        for r in [pass, fail, skipped] {
            assert!(r.is_consistent());
        }
    }

    #[test]
    fn report_round_trips() {
        let mut c = Check::new("case3-psu", "no class of size q^3 + 1");
        c.param("q", 5u64);
        c.param("sizes", vec![1u64, 2, 3]);
        c.witness(json!({"q": 5, "size": 126}));
        let r = c.finish();
        let back: CheckReport = serde_json::from_str(&r.to_json_line()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn table_lists_every_report() {
        let reports = vec![
            Check::new("a", "first").finish(),
            Check::new("b", "second").skip("no"),
        ];
        let t = render_table(&reports);
        assert_eq!(t.lines().count(), 3);
        assert!(t.contains("skipped"));
    }
}
