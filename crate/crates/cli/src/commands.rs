use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde_json::{json, Value};

use semimatroid::ingest::{self, Document};
use semimatroid::{
    check_axioms, invariants, CheckError, IdentityId, IdentityReport, Invariant, Route, Semimatroid, SparsePoly,
};

use crate::{Format, Global, RouteArg};

/// `Ok(pass)` or a diagnostic for an input that could not be processed.
pub type Outcome = Result<bool, String>;

/// Rendered output for one input file.
struct Rendered {
    text: String,
    machine: Value,
    pass: bool,
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn apply_order(g: &Global, sm: Semimatroid) -> Result<Semimatroid, String> {
    match &g.order {
        Some(order) => sm.with_order(order).map_err(|e| e.to_string()),
        None => Ok(sm),
    }
}

fn load(g: &Global, path: &Path) -> Result<Semimatroid, String> {
    let sm = ingest::load(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    apply_order(g, sm)
}

fn in_order<T, F>(g: &Global, items: &[PathBuf], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&Path) -> T + Sync,
{
    if g.jobs > 1 {
        items.par_iter().map(|p| f(p)).collect()
    } else {
        items.iter().map(|p| f(p)).collect()
    }
}

/// Print every file's result in input order and fold the verdicts.
fn report(g: &Global, files: &[PathBuf], results: Vec<Result<Rendered, String>>) -> Outcome {
    let many = files.len() > 1;
    let mut pass = true;
    for (path, r) in files.iter().zip(results) {
        match r {
            Ok(r) => {
                pass &= r.pass;
                match g.format {
                    Format::Text if many => {
                        println!("== {}", path.display());
                        println!("{}", r.text);
                    }
                    Format::Text => println!("{}", r.text),
                    Format::Machine => {
                        let mut doc = r.machine;
                        doc["file"] = json!(path.display().to_string());
                        println!("{doc}");
                    }
                }
            }
            Err(msg) => {
                eprintln!("error: {msg}");
                pass = false;
            }
        }
    }
    Ok(pass)
}

fn labels(sm: &Semimatroid, set: semimatroid::SubsetMask) -> Value {
    json!(sm.ground().labels_of(set))
}

fn summary(sm: &Semimatroid) -> (String, Value) {
    let text = format!(
        "{} elements, rank {}, {} central sets, {} bases",
        sm.len(),
        sm.rank(),
        sm.central().len(),
        sm.bases().len()
    );
    let machine = json!({
        "elements": sm.ground().labels_of(sm.elements()),
        "rank": sm.rank(),
        "central_sets": sm.central().len(),
        "bases": sm.bases().len(),
    });
    (text, machine)
}

pub fn check(g: &Global, files: &[PathBuf]) -> Outcome {
    let results = in_order(g, files, |path| -> Result<Rendered, String> {
        let text = read(path)?;
        let doc = Document::parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let checked = match &doc {
            Document::Explicit(d) => {
                let raw = d.to_raw().map_err(|e| format!("{}: {e}", path.display()))?;
                check_axioms(&raw).map_err(|e| (e, raw))
            }
            Document::Arrangement(_) => {
                return doc
                    .build()
                    .map(|sm| valid(&sm))
                    .map_err(|e| format!("{}: {e}", path.display()))
            }
        };
        match checked {
            Ok(sm) => Ok(valid(&sm)),
            Err((CheckError::Input(e), _)) => Err(format!("{}: {e}", path.display())),
            Err((CheckError::Axioms(vs), raw)) => {
                let g = &raw.ground;
                let mut text = format!("invalid: {} violation(s)", vs.len());
                let mut listed = Vec::new();
                for v in &vs {
                    let sets: Vec<String> = v.witness.iter().map(|&s| g.fmt_set(s)).collect();
                    text.push_str(&format!("\n  {} {}", v.axiom, sets.join(" ")));
                    let witness: Vec<Vec<String>> = v.witness.iter().map(|&s| g.labels_of(s)).collect();
                    listed.push(json!({"axiom": v.axiom, "witness": witness}));
                }
                Ok(Rendered {
                    text,
                    machine: json!({"valid": false, "violations": listed}),
                    pass: false,
                })
            }
        }
    });
    report(g, files, results)
}

fn valid(sm: &Semimatroid) -> Rendered {
    let (text, mut machine) = summary(sm);
    machine["valid"] = json!(true);
    Rendered {
        text: format!("valid: {text}"),
        machine,
        pass: true,
    }
}

fn route_of(r: RouteArg) -> Option<Route> {
    match r {
        RouteArg::Sum => Some(Route::SubsetSum),
        RouteArg::Dc => Some(Route::DeletionContraction),
        RouteArg::Activities => Some(Route::Activities),
        RouteArg::ViaZ => Some(Route::ViaZ),
        RouteArg::All => None,
    }
}

pub fn invariant(g: &Global, files: &[PathBuf], inv: Invariant, route: RouteArg) -> Outcome {
    let results = in_order(g, files, |path| -> Result<Rendered, String> {
        let sm = load(g, path)?;
        let routes: Vec<Route> = match route_of(route) {
            Some(r) => vec![r],
            None => inv.routes().to_vec(),
        };
        let values = routes
            .iter()
            .map(|&r| invariants::evaluate(&sm, inv, r).map(|p| (r, p)))
            .collect::<Result<Vec<(Route, SparsePoly)>, _>>()
            .map_err(|e| e.to_string())?;
        let first = &values[0].1;
        let agree = values.iter().all(|(_, p)| p == first);
        let ground = sm.ground();
        let mut text = first.to_text(ground);
        if !agree {
            text = format!("routes disagree for {inv}");
            for (r, p) in &values {
                text.push_str(&format!("\n  {r}: {}", p.to_text(ground)));
            }
        }
        let by_route: serde_json::Map<String, Value> = values
            .iter()
            .map(|(r, p)| (r.name().to_string(), json!(p.to_text(ground))))
            .collect();
        Ok(Rendered {
            text,
            machine: json!({
                "invariant": inv.name(),
                "polynomial": first.to_text(ground),
                "routes": by_route,
                "routes_agree": agree,
            }),
            pass: agree,
        })
    });
    report(g, files, results)
}

pub fn activities(g: &Global, files: &[PathBuf]) -> Outcome {
    let results = in_order(g, files, |path| -> Result<Rendered, String> {
        let sm = load(g, path)?;
        let gr = sm.ground();
        let mut lines = Vec::new();
        let mut bases = Vec::new();
        for rec in sm.all_activities() {
            lines.push(format!(
                "basis {}  IA {}  EA {}",
                gr.fmt_set(rec.basis),
                gr.fmt_set(rec.internally_active),
                gr.fmt_set(rec.externally_active)
            ));
            bases.push(json!({
                "basis": labels(&sm, rec.basis),
                "internally_active": labels(&sm, rec.internally_active),
                "externally_active": labels(&sm, rec.externally_active),
            }));
        }
        let (pass, intervals) = match sm.interval_decomposition() {
            Ok(d) => {
                let mut ivs = Vec::new();
                for iv in &d.intervals {
                    lines.push(format!(
                        "interval [{}, {}] size {}",
                        gr.fmt_set(iv.lower),
                        gr.fmt_set(iv.upper),
                        iv.size()
                    ));
                    ivs.push(json!({"lower": labels(&sm, iv.lower), "upper": labels(&sm, iv.upper)}));
                }
                lines.push(format!("partition: ok ({} central sets)", sm.central().len()));
                (true, ivs)
            }
            Err(e) => {
                lines.push(format!("partition: FAILED {e}"));
                (false, Vec::new())
            }
        };
        Ok(Rendered {
            text: lines.join("\n"),
            machine: json!({"bases": bases, "intervals": intervals, "partition": pass}),
            pass,
        })
    });
    report(g, files, results)
}

fn run_identities(g: &Global, sm: &Semimatroid, ids: &[IdentityId]) -> Result<Vec<IdentityReport>, String> {
    let out = if g.jobs > 1 {
        ids.par_iter().map(|&id| semimatroid::check_identity(sm, id)).collect()
    } else {
        semimatroid::check_many(sm, ids)
    };
    out.map_err(|e| e.to_string())
}

pub fn verify(g: &Global, files: &[PathBuf], ids: &[IdentityId]) -> Outcome {
    let ids: Vec<IdentityId> = if ids.is_empty() { IdentityId::ALL.to_vec() } else { ids.to_vec() };
    // Files run one after another so that identity-level parallelism
    // gets the whole pool.
    let results: Vec<Result<Rendered, String>> = files
        .iter()
        .map(|path| {
            let sm = load(g, path)?;
            let reports = run_identities(g, &sm, &ids)?;
            let ground = sm.ground();
            let mut lines = Vec::new();
            let mut listed = Vec::new();
            for r in &reports {
                if r.passed() {
                    lines.push(format!("PASS {}", r.id));
                } else {
                    lines.push(format!("FAIL {}", r.id));
                    lines.push(format!("  lhs:  {}", r.lhs.to_text(ground)));
                    lines.push(format!("  rhs:  {}", r.rhs.to_text(ground)));
                    lines.push(format!("  diff: {}", r.diff.to_text(ground)));
                }
                listed.push(json!({
                    "identity": r.id.name(),
                    "verdict": if r.passed() { "pass" } else { "fail" },
                    "lhs": r.lhs.to_text(ground),
                    "rhs": r.rhs.to_text(ground),
                    "diff": r.diff.to_text(ground),
                }));
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            lines.push(format!("{passed}/{} identities pass", reports.len()));
            Ok(Rendered {
                text: lines.join("\n"),
                machine: json!({"reports": listed, "all_pass": passed == reports.len()}),
                pass: passed == reports.len(),
            })
        })
        .collect();
    report(g, files, results)
}

fn emit_or_summarize(g: &Global, sm: &Semimatroid, emit: bool) -> Outcome {
    if emit {
        let doc = ingest::emit(sm);
        let text = match g.format {
            Format::Text => serde_json::to_string_pretty(&doc),
            Format::Machine => serde_json::to_string(&doc),
        };
        println!("{}", text.map_err(|e| e.to_string())?);
    } else {
        let (text, machine) = summary(sm);
        match g.format {
            Format::Text => println!("{text}"),
            Format::Machine => println!("{machine}"),
        }
    }
    Ok(true)
}

pub fn random(g: &Global, spec: semimatroid::RandomSpec, emit: bool) -> Outcome {
    let sm = semimatroid::random_instance(spec).map_err(|e| e.to_string())?;
    emit_or_summarize(g, &apply_order(g, sm)?, emit)
}

pub fn from_arrangement(g: &Global, file: &Path, emit: bool) -> Outcome {
    let doc = Document::parse(&read(file)?).map_err(|e| e.to_string())?;
    let Document::Arrangement(arr) = doc else {
        return Err(format!("{}: not an arrangement document", file.display()));
    };
    let sm = ingest::from_arrangement(&arr).map_err(|e| e.to_string())?;
    emit_or_summarize(g, &sm, emit)
}
