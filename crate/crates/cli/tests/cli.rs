use std::process::{Command, Output};

use serde_json::Value;

fn thetan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thetan")).args(args).output().expect("run thetan")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn hom_lists_five_endomorphisms_of_the_two_globe() {
    let out = thetan(&["hom", "--n", "2", "--src", "[1;1]", "--dst", "[1;1]"]);
    assert!(out.status.success());
    assert_eq!(json(&out).as_array().unwrap().len(), 5);
}

#[test]
fn census_of_a_pasting_shape() {
    let out = thetan(&["obj", "--parse", "[3;1,0,2]", "--census"]);
    assert!(out.status.success());
    assert_eq!(json(&out), serde_json::json!({"0": 4, "1": 6, "2": 3}));
}

#[test]
fn malformed_terms_report_a_position() {
    let out = thetan(&["obj", "--parse", "[3;1,,2]"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("position 5"), "{err}");
}

#[test]
fn unknown_verbs_and_checks_are_usage_errors() {
    assert_eq!(thetan(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(thetan(&["verify", "--suite", "no-such-check"]).status.code(), Some(2));
}

#[test]
fn printed_objects_reparse() {
    let out = thetan(&["eval", "--presheaf", "terminal", "--max-width", "2"]);
    let sizes = json(&out)["sizes"].as_object().unwrap().clone();
    assert_eq!(sizes.len(), 13);
    for name in sizes.keys() {
        let again = thetan(&["obj", "--parse", name]);
        assert!(again.status.success());
        assert_eq!(json(&again)["object"].as_str().unwrap(), name);
    }
}

#[test]
fn printed_morphisms_reparse() {
    let src = thetan::parse_object("[2;1,0]", 2).unwrap();
    let dst = thetan::parse_object("[2;1,1]", 2).unwrap();
    let out = thetan(&["hom", "--src", "[2;1,0]", "--dst", "[2;1,1]"]);
    let maps = json(&out);
    let expected = thetan::theta::enumerate_theta_hom(&src, &dst).unwrap();
    assert_eq!(maps.as_array().unwrap().len(), expected.len());
    for (v, f) in maps.as_array().unwrap().iter().zip(expected.iter()) {
        assert_eq!(&thetan::ThetaMorphism::from_json(v, &src, &dst).unwrap(), f);
    }
}

#[test]
fn json_keys_are_sorted() {
    let out = thetan(&["verify", "--suite", "delta-axioms", "--max-width", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let keys: Vec<&str> = ["\"anchor\"", "\"cases\"", "\"check\"", "\"counterexample\"", "\"note\"", "\"status\"", "\"universe\""]
        .into_iter()
        .collect();
    let positions: Vec<usize> = keys.iter().map(|k| text.find(k).expect(k)).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{text}");
}

#[test]
fn junit_report_is_written() {
    let path = std::env::temp_dir().join(format!("thetan-junit-{}.xml", std::process::id()));
    let p = path.to_str().unwrap();
    let out = thetan(&["verify", "--suite", "spine-mono", "--max-width", "1", "--junit", p]);
    assert!(out.status.success());
    let xml = std::fs::read_to_string(&path).unwrap();
    assert!(xml.contains("<testcase classname=\"thetan\" name=\"spine-mono\"/>"), "{xml}");
    let _ = std::fs::remove_file(&path);
}

#[test]
fn cylinder_and_spine_exports() {
    let out = thetan(&["cylinder", "--obj", "[1;1]"]);
    let v = json(&out);
    assert_eq!(v["pieces"].as_array().unwrap().len(), 2);
    let dot = thetan(&["export", "--obj", "[3;1,0,2]", "--what", "spine"]);
    let text = String::from_utf8(dot.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches(" -> ").count(), 6);
    let spine = thetan(&["spine", "--obj", "[3;1,0,2]"]);
    assert_eq!(json(&spine)["vertices"].as_array().unwrap().len(), 7);
}

#[test]
fn evaluation_spot_counts() {
    let out = thetan(&["eval", "--presheaf", "cylinder", "--obj", "[1;1]", "--at", "[1;0]"]);
    assert_eq!(json(&out)["elements"].as_array().unwrap().len(), 12);
    let out = thetan(&["eval", "--presheaf", "boundary", "--obj", "[1;1]", "--at", "[1;0]"]);
    assert_eq!(json(&out)["elements"].as_array().unwrap().len(), 4);
    let out = thetan(&["nerve", "--at", "[2;0,1]"]);
    assert_eq!(json(&out)["elements"].as_array().unwrap().len(), 8);
}
