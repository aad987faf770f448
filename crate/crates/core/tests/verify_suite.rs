use thetan::theta::enumerate_theta_hom;
use thetan::verify::{category_axioms, list_checks, reports_to_json, run_all, run_check, Check, Params, Status, Suite};
use thetan::{Element, ThetaMorphism, UniverseSpec};

fn params(max_width: usize) -> Params {
    Params::new(UniverseSpec::new(2, max_width), max_width + 1, 5)
}

/// Composition that swaps the result for another map of the same hom set
/// whenever the first factor is a particular non-identity endomorphism.
fn corrupted_suite() -> Suite {
    let mut s = Suite::empty();
    s.register(Check::new("corrupted-composition", "composition with a planted defect", 0, |p| {
        Ok(category_axioms(
            &p.objects(),
            &|a, b| enumerate_theta_hom(a, b).unwrap().to_vec(),
            &ThetaMorphism::identity,
            &|g, f| {
                let gf = g.after(f).unwrap();
                let bad = f.src() == f.dst() && f.src().width() == 1 && !f.is_identity() && !g.is_identity();
                if bad {
                    let hs = enumerate_theta_hom(gf.src(), gf.dst()).unwrap();
                    hs.iter().find(|h| **h != gf).cloned().unwrap_or(gf)
                } else {
                    gf
                }
            },
            &|f| Element::Mor(f.clone()),
        ))
    }));
    s
}

#[test]
fn planted_defect_is_caught_and_replays() {
    let suite = corrupted_suite();
    let p = params(1);
    let report = suite.run_check("corrupted-composition", &p).unwrap();
    assert_eq!(report.status, Status::Fail);
    let cx = report.counterexample.clone().expect("counterexample");
    assert!(!cx.objects.is_empty());
    let replayed = suite.replay(&report, &p).unwrap();
    assert_eq!(replayed.status, Status::Fail, "{:?}", replayed);
    assert!(replayed.universe["objects"].as_array().unwrap().len() <= cx.objects.len() * 3);
}

#[test]
fn standard_checks_pass_on_a_small_universe() {
    for r in run_all(&params(1)) {
        assert!(r.passed(), "{} failed: {:?}", r.check, r.counterexample);
        assert_ne!(r.status, Status::VacuousPass, "{}", r.check);
    }
}

#[test]
fn reports_are_deterministic() {
    let a = serde_json::to_string(&reports_to_json(&run_all(&params(1)))).unwrap();
    let b = serde_json::to_string(&reports_to_json(&run_all(&params(1)))).unwrap();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    let ids: Vec<_> = v.as_array().unwrap().iter().map(|r| r["check"].as_str().unwrap().to_string()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert_eq!(ids.len(), list_checks().len());
}

#[test]
fn documented_runs() {
    let delta = Params::new(UniverseSpec::new(2, 2), 3, 5);
    assert_eq!(run_check("delta-axioms", &delta).unwrap().status, Status::Pass);
    assert_eq!(run_check("cylinder-iso", &params(2)).unwrap().status, Status::Pass);
}

#[test]
fn empty_universe_is_not_a_pass() {
    for r in run_all(&Params::new(UniverseSpec::empty(2), 3, 5)) {
        assert!(matches!(r.status, Status::Skipped | Status::VacuousPass), "{}", r.check);
    }
}
