use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use thetan::constructions::cylinder::{cylinder_i, CylinderDecomposition};
use thetan::constructions::jcylinder::{cylinder_j, cylinder_jprime};
use thetan::constructions::nerve::{nerve, nerve_j, ThinCategory};
use thetan::constructions::spine::spine;
use thetan::presheaf::census::face_graph_dot;
use thetan::presheaf::suspension::suspension_presheaf;
use thetan::presheaf::{self, Presheaf, UniverseSpec};
use thetan::theta::enumerate_theta_hom;
use thetan::verify::{self, junit, reports_to_json, Params, Suite};
use thetan::{parse_object, Error, ThetaObject};

#[derive(Parser)]
#[command(name = "thetan", version, about = "Query Θ_n, its presheaves and cylinder constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Level n of Θ_n.
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Clone)]
struct Bounds {
    /// Width bound for universe objects at every depth.
    #[arg(long, default_value_t = 2)]
    max_width: usize,
    /// Cell bound for objects indexing per-object constructions.
    #[arg(long, default_value_t = 5)]
    max_cells: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Representable,
    Boundary,
    Terminal,
    Spine,
    Cylinder,
    Product,
    J,
    JPrime,
    Suspension,
    NerveJ,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Export {
    Spine,
    Cylinder,
    Faces,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an object and describe it.
    Obj {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        parse: String,
        /// Print only the generating-cell counts by dimension.
        #[arg(long)]
        census: bool,
    },
    /// List the morphisms between two objects.
    Hom {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        src: String,
        #[arg(long)]
        dst: String,
    },
    /// Evaluate a presheaf built from an object.
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Kind::Representable)]
        presheaf: Kind,
        /// The object the presheaf is built from (unused for terminal and nerve-j).
        #[arg(long)]
        obj: Option<String>,
        /// Evaluation object; without it, sizes over the universe are printed.
        #[arg(long)]
        at: Option<String>,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Dump the decomposition c^0, …, c^p with α, β, σ, γ.
    Cylinder {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        obj: String,
    },
    /// The spine diagram of an object.
    Spine {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        obj: String,
    },
    /// Sizes of the thin nerve of a globe, of i[m], or of J when no object is given.
    Nerve {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        obj: Option<String>,
        #[arg(long)]
        at: Option<String>,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Run the verification suite.
    Verify {
        #[command(flatten)]
        common: Common,
        /// A check id, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        bounds: Bounds,
        /// Largest [m] for simplicial checks; defaults to max-width + 1.
        #[arg(long)]
        delta_max: Option<usize>,
        /// Also write a JUnit XML report here.
        #[arg(long)]
        junit: Option<String>,
        /// List the check ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Graphviz export of a diagram shape or face graph.
    Export {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long)]
        obj: String,
        #[arg(long, value_enum, default_value_t = Export::Spine)]
        what: Export,
        #[command(flatten)]
        bounds: Bounds,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn term(s: &str, n: usize) -> Result<ThetaObject, Failure> {
    parse_object(s, n).map_err(|e| match e {
        Error::Parse { pos, .. } => Failure::Usage(format!("{e}\n  {s}\n  {}^", " ".repeat(pos))),
        other => other.into(),
    })
}

// Write errors (a closed pipe) are ignored.
fn out(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(v: &Value) {
    out(&format!("{}\n", serde_json::to_string_pretty(v).expect("json")));
}

fn emit(format: Format, v: &Value, table: impl FnOnce() -> Vec<String>) -> Outcome {
    match format {
        Format::Json => print_json(v),
        Format::Table => table().iter().for_each(|l| out(&format!("{l}\n"))),
        Format::Dot => return Err(Failure::Usage("dot output is only available for cylinder, spine and export".into())),
    }
    Ok(())
}

fn universe(n: usize, b: &Bounds) -> UniverseSpec {
    UniverseSpec::new(n, b.max_width)
}

fn build(kind: Kind, obj: Option<&str>, n: usize) -> Result<Presheaf, Failure> {
    let need = |o: Option<&str>, level: usize| match o {
        Some(s) => term(s, level),
        None => Err(Failure::Usage("this presheaf needs --obj".into())),
    };
    Ok(match kind {
        Kind::Terminal => presheaf::terminal(n),
        Kind::NerveJ => nerve_j(n),
        Kind::Representable => presheaf::representable(&need(obj, n)?),
        Kind::Boundary => presheaf::boundary(&need(obj, n)?).0,
        Kind::Spine => spine(&need(obj, n)?)?.presheaf().clone(),
        Kind::Cylinder => cylinder_i(&need(obj, n)?)?.presheaf().clone(),
        Kind::Product => cylinder_i(&need(obj, n)?)?.product.presheaf,
        Kind::J => cylinder_j(&presheaf::representable(&need(obj, n)?))?.presheaf().clone(),
        Kind::JPrime => cylinder_jprime(&need(obj, n)?)?.presheaf().clone(),
        Kind::Suspension => {
            if n == 0 {
                return Err(Failure::Usage("suspension needs --n >= 1".into()));
            }
            suspension_presheaf(&presheaf::representable(&need(obj, n - 1)?))
        }
    })
}

fn sizes(x: &Presheaf, u: &UniverseSpec) -> (Value, Vec<String>) {
    let objs = u.objects();
    let v = Value::Object(objs.iter().map(|o| (o.to_string(), json!(x.size(o)))).collect());
    let lines = objs.iter().map(|o| format!("{o}\t{}", x.size(o))).collect();
    (v, lines)
}

fn evaluate(x: &Presheaf, at: Option<&str>, n: usize, b: &Bounds, format: Format) -> Outcome {
    match at {
        Some(s) => {
            let o = term(s, n)?;
            let elems = x.eval(&o);
            emit(format, &x.dump(&o), || elems.iter().map(|e| e.to_string()).collect())
        }
        None => {
            let (v, lines) = sizes(x, &universe(n, b));
            emit(format, &json!({"presheaf": x.name(), "sizes": v}), || lines)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Obj { common, parse, census } => {
            let o = term(&parse, common.n)?;
            let c = o.census();
            if census {
                return emit(common.format, &c.to_json(), || c.counts.iter().map(|(d, k)| format!("{d}\t{k}")).collect());
            }
            let v = json!({
                "object": o.to_string(),
                "level": o.level(),
                "width": o.width(),
                "census": c.to_json(),
                "total_cells": o.total_cells(),
                "structure": o.to_json(),
            });
            emit(common.format, &v, || {
                vec![
                    format!("object\t{o}"),
                    format!("level\t{}", o.level()),
                    format!("width\t{}", o.width()),
                    format!("total_cells\t{}", o.total_cells()),
                ]
            })
        }
        Command::Hom { common, src, dst } => {
            let (a, b) = (term(&src, common.n)?, term(&dst, common.n)?);
            let hs = enumerate_theta_hom(&a, &b)?;
            let v = Value::Array(hs.iter().map(|f| f.to_json()).collect());
            emit(common.format, &v, || hs.iter().map(|f| f.to_string()).collect())
        }
        Command::Eval { common, presheaf, obj, at, bounds } => {
            let x = build(presheaf, obj.as_deref(), common.n)?;
            evaluate(&x, at.as_deref(), common.n, &bounds, common.format)
        }
        Command::Cylinder { common, obj } => {
            let c = term(&obj, common.n)?;
            if common.format == Format::Dot {
                out(&cylinder_i(&c)?.colimit.diagram().to_dot());
                return Ok(());
            }
            let dec = CylinderDecomposition::new(&c)?;
            emit(common.format, &dec.to_json(), || {
                let mut lines: Vec<String> =
                    dec.pieces.iter().enumerate().map(|(i, p)| format!("c^{i}\t{p}")).collect();
                lines.push(format!("interval\t{}", dec.interval));
                lines
            })
        }
        Command::Spine { common, obj } => {
            let t = term(&obj, common.n)?;
            let s = spine(&t)?;
            if common.format == Format::Dot {
                out(&s.diagram().to_dot());
                return Ok(());
            }
            let shape = &s.shape;
            let v = json!({
                "object": t.to_string(),
                "vertices": shape.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "edges": shape.edges.iter().map(|(a, b, f)| json!({"from": a, "to": b, "map": f.to_json()})).collect::<Vec<_>>(),
                "legs": shape.legs.iter().map(|l| l.to_json()).collect::<Vec<_>>(),
            });
            emit(common.format, &v, || {
                let mut lines: Vec<String> = shape.vertices.iter().enumerate().map(|(i, v)| format!("v{i}\t{v}")).collect();
                lines.extend(shape.edges.iter().map(|(a, b, f)| format!("v{a} -> v{b}\t{f}")));
                lines
            })
        }
        Command::Nerve { common, obj, at, bounds } => {
            let x = match obj {
                Some(s) => {
                    let t = term(&s, common.n)?;
                    nerve(format!("N({t})"), &ThinCategory::from_theta(&t)?)
                }
                None => nerve_j(common.n),
            };
            evaluate(&x, at.as_deref(), common.n, &bounds, common.format)
        }
        Command::Verify { common, suite, bounds, delta_max, junit: junit_path, list } => {
            if list {
                let checks = verify::list_checks();
                let v = Value::Array(checks.iter().map(|c| json!({"id": c.id, "anchor": c.anchor})).collect());
                return emit(common.format, &v, || checks.iter().map(|c| format!("{}\t{}", c.id, c.anchor)).collect());
            }
            let params = Params::new(universe(common.n, &bounds), delta_max.unwrap_or(bounds.max_width + 1), bounds.max_cells);
            let s = Suite::standard();
            let reports = if suite == "all" { s.run_all(&params) } else { vec![s.run_check(&suite, &params)?] };
            if let Some(path) = junit_path {
                fs::write(&path, junit("thetan", &reports))
                    .map_err(|e| Failure::Usage(format!("cannot write {path}: {e}")))?;
            }
            emit(common.format, &reports_to_json(&reports), || {
                reports.iter().map(|r| format!("{}\t{}\t{}", r.check, r.status.as_str(), r.cases)).collect()
            })?;
            if reports.iter().all(|r| r.passed() || r.status == verify::Status::Skipped) {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Export { n, format, obj, what, bounds } => {
            if format != Format::Dot {
                return Err(Failure::Usage("export writes --format dot".into()));
            }
            let t = term(&obj, n)?;
            let dot = match what {
                Export::Spine => spine(&t)?.diagram().to_dot(),
                Export::Cylinder => cylinder_i(&t)?.colimit.diagram().to_dot(),
                Export::Faces => face_graph_dot(&presheaf::representable(&t), &universe(n, &bounds).objects()),
            };
            out(&dot);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
