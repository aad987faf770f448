//! Exit gate: runs each acceptance criterion and prints one line per
//! criterion. Exits non-zero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use thetan::constructions::cylinder::cylinder_i;
use thetan::presheaf::check::count_natural_maps;
use thetan::presheaf::suspension::suspension_presheaf;
use thetan::presheaf::{boundary, pushout, representable, Element, NatTransformation};
use thetan::theta::globe;
use thetan::verify::{run_check, Params};
use thetan::{parse_object, ThetaMorphism, ThetaObject, UniverseSpec};

fn default_params() -> Params {
    Params::new(UniverseSpec::new(2, 2), 3, 5)
}

/// Runs the named checks; returns a failure description if any does not
/// pass.
fn checks(ids: &[&str], params: &Params) -> Result<String, String> {
    let mut cases = 0;
    for id in ids {
        let r = run_check(id, params).map_err(|e| e.to_string())?;
        if r.status != thetan::verify::Status::Pass {
            return Err(format!("{id}: {} {:?}", r.status.as_str(), r.counterexample));
        }
        cases += r.cases;
    }
    Ok(format!("{} checks, {cases} cases", ids.len()))
}

fn expect(what: &str, got: usize, want: usize) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    if took <= limit {
        Ok(())
    } else {
        Err(format!("took {took:?}, limit {limit:?}"))
    }
}

fn category_axioms() -> Result<String, String> {
    let start = Instant::now();
    let detail = checks(&["delta-axioms", "theta-axioms"], &default_params())?;
    within(Duration::from_secs(60), start)?;
    Ok(detail)
}

fn cylinder_iso() -> Result<String, String> {
    let start = Instant::now();
    let u = UniverseSpec::new(2, 2);
    let all_cells = u.objects().iter().map(ThetaObject::total_cells).max().unwrap_or(0);
    let detail = checks(&["cylinder-iso"], &Params::new(u, 3, all_cells))?;
    within(Duration::from_secs(300), start)?;
    let one = parse_object("[1]", 1).unwrap();
    let c = cylinder_i(&one).map_err(|e| e.to_string())?;
    expect("|𝓘([1])([1])|", c.presheaf().size(&one), 9)?;
    expect("|(Δ[1] × Δ[1])_1|", c.product.presheaf.size(&one), 9)?;
    let (d1, d2) = (globe(1, 2).unwrap(), globe(2, 2).unwrap());
    let c = cylinder_i(&d2).map_err(|e| e.to_string())?;
    expect("|𝓘(D_2)(D_1)|", c.presheaf().size(&d1), 12)?;
    expect("|(D_2 × I)(D_1)|", c.product.presheaf.size(&d1), 12)?;
    Ok(detail)
}

fn jtheta() -> Result<String, String> {
    let p = default_params();
    for (text, level) in [("[0]", 1), ("[1]", 1), ("[2]", 1), ("[0]", 2), ("[1;0]", 2), ("[1;1]", 2), ("[2;0,0]", 2)] {
        let o = parse_object(text, level).map_err(|e| e.to_string())?;
        let covered = if level == 1 {
            p.simplicial().objects().contains(&o) && o.total_cells() <= p.max_cells
        } else {
            p.small().contains(&o)
        };
        if !covered {
            return Err(format!("{text} at level {level} is outside the checked range"));
        }
    }
    checks(&["jtheta-iso", "mu-triangle"], &p)
}

fn ehd() -> Result<String, String> {
    checks(&["cylinder-axioms", "ehd-hd1", "ehd-hd2"], &default_params())
}

fn spheres() -> Result<String, String> {
    let detail = checks(&["boundary-i-shriek", "boundary-suspension", "boundary-pushout-globe"], &default_params())?;
    let d1 = globe(1, 2).unwrap();
    let (bd, incl) = boundary(&d1);
    let other = representable(&d1);
    let po = pushout(&incl, &NatTransformation::inclusion("∂ ⊂ Θ", &bd, &other)).map_err(|e| e.to_string())?;
    expect("pushout at D_1", po.presheaf.size(&d1), 4)?;
    expect("∂Θ_2[D_2](D_1)", boundary(&globe(2, 2).unwrap()).0.size(&d1), 4)?;
    Ok(detail)
}

fn adjunctions() -> Result<String, String> {
    let detail = checks(&["pi-i-adjunction", "sigma-hom-adjunction", "i-shriek-restriction"], &default_params())?;
    let d2 = globe(2, 2).unwrap();
    let y = representable(&d2);
    let ends = [Element::Mor(ThetaMorphism::vertex(&d2, 0).unwrap()), Element::Mor(ThetaMorphism::vertex(&d2, 1).unwrap())];
    let sx = suspension_presheaf(&representable(&parse_object("[1]", 1).unwrap()));
    let yc = y.clone();
    let fixed = move |o: &ThetaObject, e: &Element| match e {
        Element::Base(eps) => Some(yc.restrict(&ThetaMorphism::to_terminal(o), &ends[*eps as usize])),
        _ => None,
    };
    let n = count_natural_maps(&sx, &y, &UniverseSpec::new(2, 2).objects(), &fixed, usize::MAX);
    expect("bipointed maps Σ(Θ_1[[1]]) -> (Θ_2[D_2], s, t)", n, 3)?;
    Ok(detail)
}

fn nerves() -> Result<String, String> {
    checks(&["nerve-j-count", "nerve-thin-globe", "nerve-equivalence-naturality"], &default_params())
}

fn determinism() -> Result<String, String> {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_thetan"))
            .args(["verify", "--suite", "all"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if !a.status.success() {
        return Err(format!("verify exited with {:?}", a.status.code()));
    }
    if a.stdout != b.stdout {
        return Err("reports differ between runs".into());
    }
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Result<String, String>); 8] = [
        ("category axioms for Δ and Θ_2", category_axioms),
        ("cylinder isomorphism 𝓘(c) ≅ c × I", cylinder_iso),
        ("𝓙(θ) ≅ 𝓙′(θ) and σ = μ ∘ φ", jtheta),
        ("elementary homotopy datum", ehd),
        ("sphere presentations", spheres),
        ("adjunction bijections", adjunctions),
        ("nerve formulas", nerves),
        ("determinism of verify --suite all", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {} PASS  {name} ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
