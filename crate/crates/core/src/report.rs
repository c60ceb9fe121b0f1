//! Command execution and machine-readable reports for the `qx` binary.
//!
//! Every command produces one JSON envelope
//! `{command, parameters, results, tolerances, seed, runtime_ms, version}`.
//! Floats are rounded to 10 significant digits before output. Apart from
//! `runtime_ms`, identical inputs give byte-identical JSON.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::PathBuf;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::bounds::{self, BoundReport, DEFAULT_SLACK};
use crate::constructions::{build_extremal, ExtremalSpec, Strategy};
use crate::error::{Error, Result};
use crate::forbidden::{find_kst, ForbiddenPattern};
use crate::graph::{encode_graph6, parse_edge_list, read_graph6_lines, Graph};
use crate::search::{self, Verdict, SEARCH_TOL};
use crate::spectral::{self, MatrixKind};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exit status for a run whose report contains a verified bound violation.
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Stdin,
    Path(PathBuf),
}

impl Input {
    /// `-` means standard input.
    pub fn parse(arg: &str) -> Input {
        if arg == "-" {
            Input::Stdin
        } else {
            Input::Path(PathBuf::from(arg))
        }
    }

    fn read_to_string(&self) -> Result<String> {
        let mut text = String::new();
        match self {
            Input::Stdin => {
                std::io::stdin().read_to_string(&mut text)?;
            }
            Input::Path(p) => {
                File::open(p)?.read_to_string(&mut text)?;
            }
        }
        Ok(text)
    }

    fn reader(&self) -> Result<Box<dyn BufRead>> {
        Ok(match self {
            Input::Stdin => Box::new(BufReader::new(std::io::stdin())),
            Input::Path(p) => Box::new(BufReader::new(File::open(p)?)),
        })
    }

    fn describe(&self) -> String {
        match self {
            Input::Stdin => "-".into(),
            Input::Path(p) => p.display().to_string(),
        }
    }
}

/// Reads graphs from graph6 lines, or from one edge list when the first
/// nonblank line is an `n m` header.
pub fn read_graphs(input: &Input) -> Result<Vec<Graph>> {
    let text = input.read_to_string()?;
    parse_graphs(&text)
}

pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    if first.split_whitespace().count() == 2 {
        return Ok(vec![parse_edge_list(text)?]);
    }
    read_graph6_lines(text.as_bytes())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Qindex { input: Input },
    Spectrum { input: Input, matrix: MatrixKind },
    FreeCheck { input: Input, t: usize, s: usize },
    /// Every combination of the listed values.
    Bounds { n: Vec<usize>, s: Vec<usize>, t: Vec<usize> },
    Construct { n: usize, s: usize, t: usize, seed: u64, strategy: Strategy, allow_uncertified: bool },
    Verify { n: usize, t: usize, s: usize, stream: Option<Input> },
    Prop4 { m: usize, s: usize },
    Hunt { n: usize, t: usize, s: usize, budget: usize, seed: u64 },
    Ledger { s: usize, n: usize },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Qindex { .. } => "qindex",
            Command::Spectrum { .. } => "spectrum",
            Command::FreeCheck { .. } => "free-check",
            Command::Bounds { .. } => "bounds",
            Command::Construct { .. } => "construct",
            Command::Verify { .. } => "verify",
            Command::Prop4 { .. } => "prop4",
            Command::Hunt { .. } => "hunt",
            Command::Ledger { .. } => "ledger",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub tol: f64,
    pub format: Format,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig { command, tol: spectral::DEFAULT_TOL, format: Format::Json }
    }

    /// Parameter checks done before any computation.
    pub fn validate(&self) -> Result<()> {
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::InvalidTolerance(self.tol));
        }
        match &self.command {
            Command::FreeCheck { t, s, .. } => ForbiddenPattern::new(*t, *s).map(|_| ()),
            Command::Verify { n, t, s, stream } => {
                ForbiddenPattern::new(*t, *s)?;
                if stream.is_none() && *n > search::MAX_BUILTIN_ORDER {
                    return Err(Error::UseStreamSource { n: *n, max: search::MAX_BUILTIN_ORDER });
                }
                if *n == 0 {
                    return Err(Error::EmptyOrder);
                }
                Ok(())
            }
            Command::Hunt { t, s, budget, .. } => {
                ForbiddenPattern::new(*t, *s)?;
                if *budget == 0 {
                    return Err(Error::InvalidBudget);
                }
                Ok(())
            }
            Command::Bounds { n, s, t } if n.is_empty() || s.is_empty() || t.is_empty() => {
                Err(Error::Unsupported("empty parameter range".into()))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub envelope: Value,
}

impl Outcome {
    /// Whether any report inside the results carries `bound_violated`.
    pub fn has_violation(&self) -> bool {
        fn walk(v: &Value) -> bool {
            match v {
                Value::Object(m) => m.iter().any(|(k, v)| {
                    (k == "verdict" && v == "bound_violated") || walk(v)
                }),
                Value::Array(a) => a.iter().any(walk),
                _ => false,
            }
        }
        walk(&self.envelope["results"])
    }

    pub fn exit_code(&self) -> i32 {
        if self.has_violation() {
            EXIT_VIOLATION
        } else {
            0
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize to JSON")
}

pub fn execute(config: &RunConfig) -> Result<Outcome> {
    config.validate()?;
    let started = Instant::now();
    let tol = config.tol;
    let mut seed = Value::Null;

    let (parameters, results) = match &config.command {
        Command::Qindex { input } => {
            let rows = read_graphs(input)?
                .iter()
                .map(|g| {
                    let q = spectral::q_index(g, tol)?;
                    let lambda = spectral::adjacency_radius(g, tol)?;
                    Ok(json!({
                        "graph6": encode_graph6(g),
                        "n": g.order(),
                        "edges": g.size(),
                        "max_degree": g.max_degree(),
                        "q": q.value,
                        "q_residual": q.residual,
                        "q_method": q.method,
                        "lambda": lambda.value,
                        "lambda_residual": lambda.residual,
                        "merris_bound": bounds::merris_bound(g).ok(),
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            (json!({ "input": input.describe() }), Value::Array(rows))
        }
        Command::Spectrum { input, matrix } => {
            let rows = read_graphs(input)?
                .iter()
                .map(|g| {
                    json!({
                        "graph6": encode_graph6(g),
                        "matrix": matrix,
                        "eigenvalues": spectral::full_spectrum(g, *matrix),
                    })
                })
                .collect();
            (json!({ "input": input.describe(), "matrix": matrix }), Value::Array(rows))
        }
        Command::FreeCheck { input, t, s } => {
            let pat = ForbiddenPattern::new(*t, *s)?;
            let rows = read_graphs(input)?
                .iter()
                .map(|g| {
                    let witness = if *t > g.order() { None } else { find_kst(g, pat)? };
                    Ok(json!({
                        "graph6": encode_graph6(g),
                        "verdict": if witness.is_none() { "free" } else { "contains" },
                        "witness": witness,
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            (json!({ "input": input.describe(), "t": t, "s": s }), Value::Array(rows))
        }
        Command::Bounds { n, s, t } => {
            let mut rows = Vec::new();
            for &nn in n {
                for &ss in s {
                    for &tt in t {
                        rows.push(to_value(&BoundReport::evaluate(nn, ss, tt)));
                    }
                }
            }
            let results = if rows.len() == 1 { rows.pop().expect("one row") } else { Value::Array(rows) };
            (json!({ "n": n, "s": s, "t": t }), results)
        }
        Command::Construct { n, s, t, seed: k, strategy, allow_uncertified } => {
            seed = json!(k);
            let mut spec = ExtremalSpec::new(*n, *s, *t);
            spec.seed = *k;
            spec.strategy = *strategy;
            spec.allow_uncertified = *allow_uncertified;
            let b = build_extremal(&spec)?;
            let q = spectral::q_index(&b.graph, tol)?.value;
            let conj = bounds::conjecture_bound(*n, *s, *t).ok();
            let results = json!({
                "graph6": encode_graph6(&b.graph),
                "regular_part": encode_graph6(&b.regular_part),
                "certificate": b.certificate,
                "strategy": b.strategy,
                "generator_seed": b.seed,
                "attempts": b.attempts,
                "q": q,
                "q_bound_t2": (*t == 2).then(|| bounds::q_bound_t2(*n, *s)),
                "conjecture_bound": conj,
                "q_minus_conjecture_bound": conj.map(|c| q - c),
            });
            (json!({ "n": n, "s": s, "t": t, "strategy": strategy }), results)
        }
        Command::Verify { n, t, s, stream } => {
            let pat = ForbiddenPattern::new(*t, *s)?;
            let report = match stream {
                Some(input) => search::exhaustive_max_q_stream(*n, pat, input.reader()?)?,
                None => search::exhaustive_max_q(*n, pat)?,
            };
            let source = stream.as_ref().map(Input::describe).unwrap_or_else(|| "builtin".into());
            (json!({ "n": n, "t": t, "s": s, "source": source }), to_value(&report))
        }
        Command::Prop4 { m, s } => {
            let report = search::proposition4_scan(*m, *s)?;
            let mut results = to_value(&report);
            results["verdict"] = json!(if report.violations.is_empty() {
                Verdict::BoundHolds
            } else {
                Verdict::BoundViolated
            });
            (json!({ "m": m, "s": s }), results)
        }
        Command::Hunt { n, t, s, budget, seed: k } => {
            seed = json!(k);
            let pat = ForbiddenPattern::new(*t, *s)?;
            let report = search::heuristic_max_q(*n, pat, *budget, *k)?;
            (json!({ "n": n, "t": t, "s": s, "budget": budget }), to_value(&report))
        }
        Command::Ledger { s, n } => {
            let ledger = bounds::verify_theorem3_steps(*s, *n)?;
            let mut results = to_value(&ledger);
            results["all_hold"] = json!(ledger.all_hold());
            (json!({ "s": s, "n": n }), results)
        }
    };

    let envelope = json!({
        "command": config.command.name(),
        "parameters": parameters,
        "results": round_floats(results),
        "tolerances": { "eigen_tol": tol, "search_tol": SEARCH_TOL, "slack": DEFAULT_SLACK },
        "seed": seed,
        "runtime_ms": started.elapsed().as_millis() as u64,
        "version": VERSION,
    });
    Ok(Outcome { envelope })
}

/// Rounds every float to 10 significant digits.
pub fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if !n.is_i64() && !n.is_u64() => {
            let x = n.as_f64().expect("float");
            let r: f64 = format!("{x:.9e}").parse().expect("formatted float parses");
            json!(r)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_floats).collect()),
        Value::Object(m) => Value::Object(m.into_iter().map(|(k, v)| (k, round_floats(v))).collect()),
        other => other,
    }
}

pub fn render(outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(&outcome.envelope).expect("JSON value serializes");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(&outcome.envelope["results"]),
        Format::Text => render_text(&outcome.envelope),
    }
}

/// Flattens nested objects into dotted keys; arrays of scalars are joined
/// with spaces.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, v, out);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let joined: Vec<String> = a.iter().map(scalar).collect();
            out.push((prefix.to_string(), joined.join(" ")));
        }
        Value::Array(a) => {
            for (i, v) in a.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), v, out);
            }
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One row per array element (or a single row), columns from the union of
/// flattened keys in first-seen order.
fn render_csv(results: &Value) -> String {
    let items: Vec<&Value> = match results {
        Value::Array(a) => a.iter().collect(),
        other => vec![other],
    };
    let rows: Vec<Vec<(String, String)>> = items
        .iter()
        .map(|v| {
            let mut row = Vec::new();
            flatten("", v, &mut row);
            row
        })
        .collect();
    let mut columns: Vec<String> = Vec::new();
    for row in &rows {
        for (k, _) in row {
            if !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    let mut out = columns.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(",");
    out.push('\n');
    for row in &rows {
        let map: Map<String, Value> = row.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
        let line: Vec<String> = columns
            .iter()
            .map(|c| csv_field(map.get(c).and_then(Value::as_str).unwrap_or("")))
            .collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

fn render_text(envelope: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", envelope, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:width$}  {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_keeps_ten_significant_digits() {
        let v = round_floats(json!({ "x": 13.178908345800274, "k": 3, "y": [1e-12 / 3.0] }));
        assert_eq!(v["x"], json!(13.17890835));
        assert_eq!(v["k"], json!(3));
        assert_eq!(v["y"][0], json!(3.333333333e-13));
    }

    #[test]
    fn bounds_report_for_threshold_case() {
        let cfg = RunConfig::new(Command::Bounds { n: vec![13], s: vec![1], t: vec![2] });
        let out = execute(&cfg).unwrap();
        let r = &out.envelope["results"];
        assert_eq!(r["q_bound_t2"], json!(13.17890835));
        assert_eq!(r["applicability"]["q_bound_t2"], json!(true));
        assert_eq!(out.exit_code(), 0);
    }

    #[test]
    fn csv_sweep_has_one_row_per_triple() {
        let cfg = RunConfig {
            command: Command::Bounds { n: vec![10, 11, 12], s: vec![1, 2], t: vec![2] },
            tol: 1e-10,
            format: Format::Csv,
        };
        let csv = render(&execute(&cfg).unwrap(), Format::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 1 + 6);
        assert!(lines[0].starts_with("n,s,t,"));
    }

    #[test]
    fn violation_detection_walks_results() {
        let out = Outcome { envelope: json!({ "results": [{ "verdict": "bound_holds" }, { "inner": { "verdict": "bound_violated" } }] }) };
        assert!(out.has_violation());
        assert_eq!(out.exit_code(), EXIT_VIOLATION);
        let out = Outcome { envelope: json!({ "results": { "verdict": "bound_inapplicable" } }) };
        assert!(!out.has_violation());
    }

    #[test]
    fn validation_runs_before_work() {
        let cfg = RunConfig::new(Command::Verify { n: 12, t: 2, s: 1, stream: None });
        assert!(matches!(execute(&cfg), Err(Error::UseStreamSource { .. })));
        let cfg = RunConfig::new(Command::Hunt { n: 8, t: 2, s: 1, budget: 0, seed: 1 });
        assert_eq!(execute(&cfg).unwrap_err(), Error::InvalidBudget);
        let mut cfg = RunConfig::new(Command::Ledger { s: 1, n: 13 });
        cfg.tol = -1.0;
        assert_eq!(execute(&cfg).unwrap_err(), Error::InvalidTolerance(-1.0));
    }

    #[test]
    fn parse_graphs_detects_edge_lists() {
        let g = parse_graphs("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].size(), 2);
        assert_eq!(parse_graphs("DQc\n@\n").unwrap().len(), 2);
    }
}
