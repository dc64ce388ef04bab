use std::fs;
use std::io::{self, Read};
use std::path::Path;

use satgraph::checks::{run_suite, Suite};
use satgraph::construct::{build_fixture, build_h, h_edge_count};
use satgraph::hunt::heuristic_hunt;
use satgraph::registry::predicted_sat;
use satgraph::saturate::check_saturated_with;
use satgraph::search::{sat_bruteforce_with, SearchOptions};
use satgraph::{graph6, CliquePattern, Error, Result};
use serde_json::json;

use crate::report::{exit, Outcome};
use crate::Format;

fn io_err(path: &Path, e: io::Error) -> Error {
    Error::Argument(format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| io_err(path, e))
}

pub fn construct(
    n: Option<usize>,
    pattern: Option<&CliquePattern>,
    fixture: Option<usize>,
    out: Option<&Path>,
) -> Result<Outcome> {
    let result = if let Some(k) = fixture {
        let f = build_fixture(k)?;
        let g6 = graph6::encode(&f.graph);
        if let Some(path) = out {
            write_file(path, &format!("{g6}\n"))?;
        }
        let (a, b) = f.probe;
        json!({
            "fixture": k,
            "n": f.graph.n(),
            "e": f.graph.edge_count(),
            "h_edge_count": null,
            "graph6": g6,
            "vertices": f.names,
            "probe": [a, b],
            "probe_names": [f.name_of(a), f.name_of(b)],
        })
    } else {
        let (n, pattern) = match (n, pattern) {
            (Some(n), Some(p)) => (n, p),
            _ => return Err(Error::Argument("--n and --pattern are required without --fixture".into())),
        };
        let g = build_h(n, pattern)?;
        let g6 = graph6::encode(&g);
        if let Some(path) = out {
            write_file(path, &format!("{g6}\n"))?;
        }
        json!({
            "n": n,
            "pattern": pattern,
            "e": g.edge_count(),
            "h_edge_count": h_edge_count(n, pattern)?,
            "graph6": g6,
        })
    };
    Ok(Outcome::new(result, exit::OK))
}

pub fn check(source: &str, pattern: &CliquePattern, census: bool) -> Result<Outcome> {
    let text = if source == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Argument(format!("stdin: {e}")))?;
        buf
    } else {
        let path = Path::new(source);
        fs::read_to_string(path).map_err(|e| io_err(path, e))?
    };
    let mut graphs = graph6::decode_lines(&text)?;
    if graphs.len() != 1 {
        return Err(Error::Argument(format!(
            "expected exactly one graph6 line, found {}",
            graphs.len()
        )));
    }
    let g = graphs.pop().expect("one graph");
    let report = check_saturated_with(&g, pattern, census);
    let code = if report.is_saturated { exit::OK } else { exit::NEGATIVE };
    Ok(Outcome::new(report, code))
}

pub fn satnum(
    n: usize,
    pattern: &CliquePattern,
    out: Option<&Path>,
    format: Format,
    assume_lemmas: bool,
) -> Result<Outcome> {
    let result = sat_bruteforce_with(n, pattern, SearchOptions { assume_lemmas })?;
    let verdict = predicted_sat(n, pattern);
    let in_range = verdict.threshold_met(n);
    let agreement = verdict.value.map(|v| v == result.sat_value);
    match (verdict.value, in_range) {
        (None, _) => eprintln!("no closed form covers {pattern}; nothing to compare"),
        (Some(v), Some(true)) => eprintln!(
            "predicted {v}, found {}: agreement={} (n inside proved range {})",
            result.sat_value,
            v == result.sat_value,
            verdict.threshold.map(|t| t.describe()).unwrap_or_default()
        ),
        (Some(v), _) => eprintln!(
            "predicted {v}, found {}: agreement={} (caveat: n={n} is outside or not known to be inside the proved range {})",
            result.sat_value,
            v == result.sat_value,
            verdict.threshold.map(|t| t.describe()).unwrap_or_default()
        ),
    }
    if !result.exhaustive {
        eprintln!("warning: --assume-lemmas skips graphs; the value is an upper bound");
    }

    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
        for (i, g6) in result.extremal_canonical.iter().enumerate() {
            write_file(&dir.join(format!("extremal_{i}.g6")), &format!("{g6}\n"))?;
        }
    }
    if let Format::Csv = format {
        let mut csv = String::from("n,pattern,sat_value,predicted,agreement,graph6\n");
        for g6 in &result.extremal_canonical {
            csv.push_str(&format!(
                "{n},\"{pattern}\",{},{},{},{g6}\n",
                result.sat_value,
                verdict.value.map(|v| v.to_string()).unwrap_or_default(),
                agreement.map(|a| a.to_string()).unwrap_or_default(),
            ));
        }
        match out {
            Some(dir) => write_file(&dir.join("satnum.csv"), &csv)?,
            None => eprint!("{csv}"),
        }
    }

    let mut payload = serde_json::to_value(&result).expect("result serializes");
    payload["predicted"] = serde_json::to_value(&verdict).expect("verdict serializes");
    payload["threshold_met"] = json!(in_range);
    payload["agreement"] = json!(agreement);
    Ok(Outcome::new(payload, exit::OK))
}

pub fn verify_paper(suite: Suite, max_n: usize) -> Result<Outcome> {
    let outcomes = run_suite(suite, max_n);
    for o in &outcomes {
        eprintln!("{}", o.line());
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let code = if failed == 0 { exit::OK } else { exit::NEGATIVE };
    Ok(Outcome::new(
        json!({ "passed": outcomes.len() - failed, "failed": failed, "checks": outcomes }),
        code,
    ))
}

pub fn hunt(n: usize, pattern: &CliquePattern, budget: u64, seed: u64, out: Option<&Path>) -> Result<Outcome> {
    let result = heuristic_hunt(n, pattern, budget, seed)?;
    if let Some(path) = out {
        write_file(path, &format!("{}\n", result.best_graph))?;
    }
    let code = if result.beats_construction {
        eprintln!(
            "ALARM: saturated graph with {} edges beats H({n};{pattern}) with {} edges: {}",
            result.best_edges, result.target_edges, result.best_graph
        );
        // written even without --out so the candidate is never lost
        if out.is_none() {
            let path = format!("hunt-counterexample-n{n}-seed{seed}.g6");
            write_file(Path::new(&path), &format!("{}\n", result.best_graph))?;
            eprintln!("candidate written to {path}");
        }
        exit::COUNTEREXAMPLE
    } else {
        exit::OK
    };
    Ok(Outcome::new(result, code))
}
