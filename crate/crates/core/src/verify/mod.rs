//! Named exhaustive checks over finite universes, with JSON and JUnit reports.
//!
//! A [`Suite`] is a list of [`Check`]s. Each check quantifies over objects
//! drawn from [`Params`] and returns an [`Outcome`]. Reports carry no timing
//! so that two runs with the same parameters serialize identically.

mod checks;

pub use checks::category_axioms;

use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::presheaf::{Counterexample, Outcome, UniverseSpec};
use crate::term::parse_object;
use crate::theta::ThetaObject;

/// Bounds for a suite run. There are no defaults here; callers choose them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    /// Evaluation objects at the top level `n`.
    pub universe: UniverseSpec,
    /// Simplicial checks use `[0], …, [delta_max]`.
    pub delta_max: usize,
    /// Objects with at most this many cells index the per-object
    /// constructions (cylinders, sampled presheaves).
    pub max_cells: usize,
}

impl Params {
    pub fn new(universe: UniverseSpec, delta_max: usize, max_cells: usize) -> Self {
        Self { universe, delta_max, max_cells }
    }

    pub fn level(&self) -> usize {
        self.universe.level
    }

    pub fn objects(&self) -> Vec<ThetaObject> {
        self.universe.objects()
    }

    /// Universe objects small enough to build constructions on.
    pub fn small(&self) -> Vec<ThetaObject> {
        small(&self.objects(), self.max_cells)
    }

    /// The universe one level down, with the same width bound.
    pub fn lower(&self) -> UniverseSpec {
        self.universe.at_level(self.level().saturating_sub(1))
    }

    /// Θ_1 objects `[0], …, [delta_max]`, or the level-1 part of an explicit
    /// universe.
    pub fn simplicial(&self) -> UniverseSpec {
        match &self.universe.objects {
            Some(_) => self.universe.at_level(1),
            None => UniverseSpec::new(1, self.delta_max),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.universe.to_json();
        v["delta_max"] = json!(self.delta_max);
        v["max_cells"] = json!(self.max_cells);
        v
    }
}

fn small(objs: &[ThetaObject], max_cells: usize) -> Vec<ThetaObject> {
    objs.iter().filter(|o| o.total_cells() <= max_cells).cloned().collect()
}

type Runner = dyn Fn(&Params) -> Result<Outcome> + Send + Sync;

#[derive(Clone)]
pub struct Check {
    pub id: String,
    /// The statement the check verifies.
    pub anchor: String,
    /// Checks needing a higher level than the universe offers are skipped.
    pub min_level: usize,
    run: Arc<Runner>,
}

impl std::fmt::Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} ({})", self.id, self.anchor)
    }
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        anchor: impl Into<String>,
        min_level: usize,
        run: impl Fn(&Params) -> Result<Outcome> + Send + Sync + 'static,
    ) -> Self {
        Self { id: id.into(), anchor: anchor.into(), min_level, run: Arc::new(run) }
    }

    pub fn run(&self, params: &Params) -> Report {
        let mut report = Report {
            check: self.id.clone(),
            anchor: self.anchor.clone(),
            universe: params.to_json(),
            status: Status::Skipped,
            cases: 0,
            counterexample: None,
            note: None,
        };
        if params.level() < self.min_level {
            report.note = Some(format!("needs level >= {}", self.min_level));
            return report;
        }
        if params.universe.is_empty() {
            report.note = Some("empty universe".into());
            return report;
        }
        match (self.run)(params) {
            Ok(out) => {
                report.cases = out.cases;
                report.status = match (&out.counterexample, out.cases) {
                    (Some(_), _) => Status::Fail,
                    (None, 0) => Status::VacuousPass,
                    (None, _) => Status::Pass,
                };
                report.counterexample = out.counterexample;
            }
            Err(e) => {
                report.status = Status::Fail;
                report.counterexample =
                    Some(Counterexample { objects: Vec::new(), elements: Vec::new(), detail: format!("error: {e}") });
            }
        }
        report
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    VacuousPass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::VacuousPass => "vacuous-pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub anchor: String,
    pub universe: Value,
    pub status: Status,
    pub cases: usize,
    pub counterexample: Option<Counterexample>,
    pub note: Option<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass | Status::VacuousPass)
    }

    /// Key-sorted JSON.
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Key-sorted JSON array of reports.
pub fn reports_to_json(reports: &[Report]) -> Value {
    Value::Array(reports.iter().map(Report::to_json).collect())
}

#[derive(Clone, Debug)]
pub struct Suite {
    checks: Vec<Check>,
}

impl Default for Suite {
    fn default() -> Self {
        Self::standard()
    }
}

impl Suite {
    pub fn standard() -> Self {
        Self { checks: checks::standard() }
    }

    pub fn empty() -> Self {
        Self { checks: Vec::new() }
    }

    /// Adds a check; an existing check with the same id is replaced.
    pub fn register(&mut self, check: Check) {
        self.checks.retain(|c| c.id != check.id);
        self.checks.push(check);
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn get(&self, id: &str) -> Result<&Check> {
        self.checks.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCheck(id.to_string()))
    }

    pub fn run_check(&self, id: &str, params: &Params) -> Result<Report> {
        Ok(self.get(id)?.run(params))
    }

    /// Runs every check in parallel; reports are ordered by check id.
    pub fn run_all(&self, params: &Params) -> Vec<Report> {
        let mut checks: Vec<&Check> = self.checks.iter().collect();
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        checks.par_iter().map(|c| c.run(params)).collect()
    }

    /// Re-runs a failed check on a universe made only of the objects named in
    /// its counterexample.
    pub fn replay(&self, report: &Report, params: &Params) -> Result<Report> {
        let Some(cx) = &report.counterexample else {
            return self.run_check(&report.check, params);
        };
        let n = params.level();
        let mut objs = Vec::new();
        for s in &cx.objects {
            for level in [n, n.saturating_sub(1), 1] {
                if let Ok(o) = parse_object(s, level) {
                    objs.push(o);
                }
            }
        }
        objs.sort();
        objs.dedup();
        let mut narrowed = params.clone();
        narrowed.universe = UniverseSpec::explicit(n, objs);
        self.run_check(&report.check, &narrowed)
    }
}

pub fn list_checks() -> Vec<Check> {
    let mut v = checks::standard();
    v.sort_by(|a, b| a.id.cmp(&b.id));
    v
}

pub fn run_check(id: &str, params: &Params) -> Result<Report> {
    Suite::standard().run_check(id, params)
}

pub fn run_all(params: &Params) -> Vec<Report> {
    Suite::standard().run_all(params)
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// A JUnit XML document with one test case per report.
pub fn junit(suite_name: &str, reports: &[Report]) -> String {
    let failures = reports.iter().filter(|r| r.status == Status::Fail).count();
    let skipped = reports.iter().filter(|r| r.status == Status::Skipped).count();
    let mut out = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<testsuite name=\"{}\" tests=\"{}\" failures=\"{failures}\" skipped=\"{skipped}\">",
        xml_escape(suite_name),
        reports.len()
    );
    for r in reports {
        let _ = write!(out, "  <testcase classname=\"{}\" name=\"{}\"", xml_escape(suite_name), xml_escape(&r.check));
        match r.status {
            Status::Fail => {
                let detail = r.counterexample.as_ref().map(|c| serde_json::to_string(c).expect("json")).unwrap_or_default();
                let _ = writeln!(out, ">\n    <failure message=\"{}\">{}</failure>\n  </testcase>", xml_escape(&r.anchor), xml_escape(&detail));
            }
            Status::Skipped => {
                let note = r.note.clone().unwrap_or_default();
                let _ = writeln!(out, ">\n    <skipped message=\"{}\"/>\n  </testcase>", xml_escape(&note));
            }
            Status::VacuousPass => {
                let _ = writeln!(out, ">\n    <system-out>vacuous: no cases</system-out>\n  </testcase>");
            }
            Status::Pass => out.push_str("/>\n"),
        }
    }
    out.push_str("</testsuite>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> Params {
        Params::new(UniverseSpec::new(2, 1), 2, 3)
    }

    #[test]
    fn registry_is_well_formed() {
        let checks = list_checks();
        assert!(checks.len() >= 20);
        let mut ids: Vec<_> = checks.iter().map(|c| c.id.clone()).collect();
        ids.dedup();
        assert_eq!(ids.len(), checks.len());
        assert!(checks.iter().all(|c| !c.anchor.is_empty()));
        for id in [
            "delta-axioms",
            "theta-axioms",
            "pi-i-adjunction",
            "i-fully-faithful",
            "yoneda",
            "boundary-pushout-globe",
            "boundary-i-shriek",
            "boundary-suspension",
            "sigma-representable",
            "sigma-hom-adjunction",
            "cylinder-iso",
            "jtheta-iso",
            "mu-triangle",
            "ehd-hd1",
            "ehd-hd2",
            "cylinder-axioms",
            "spine-mono",
            "spine-simplicial-agreement",
            "nerve-thin-globe",
            "i-shriek-restriction",
        ] {
            assert!(ids.iter().any(|i| i == id), "{id}");
        }
    }

    #[test]
    fn unknown_check() {
        assert!(matches!(run_check("no-such-check", &tiny()), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn empty_universe_is_flagged() {
        let p = Params::new(UniverseSpec::empty(2), 2, 5);
        for r in run_all(&p) {
            assert!(matches!(r.status, Status::Skipped | Status::VacuousPass), "{}", r.check);
            assert!(r.note.is_some() || r.status == Status::VacuousPass);
        }
    }

    #[test]
    fn low_level_skips() {
        let p = Params::new(UniverseSpec::new(1, 2), 2, 5);
        let r = run_check("sigma-hom-adjunction", &p).unwrap();
        assert_eq!(r.status, Status::Pass);
        let r = run_check("mu-triangle", &Params::new(UniverseSpec::new(0, 0), 2, 5)).unwrap();
        assert_eq!(r.status, Status::Skipped);
    }

    #[test]
    fn junit_counts() {
        let mut suite = Suite::empty();
        suite.register(Check::new("ok", "always", 0, |_| Ok(Outcome::pass(1))));
        suite.register(Check::new("bad", "never", 0, |_| Ok(Outcome::fail(&[], &[], "x < y"))));
        let reports = suite.run_all(&tiny());
        assert_eq!(reports[0].check, "bad");
        let xml = junit("thetan", &reports);
        assert!(xml.contains("tests=\"2\" failures=\"1\""));
        assert!(xml.contains("x &lt; y"));
    }
}
