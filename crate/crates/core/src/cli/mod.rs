//! The `rectwind` command line.
//!
//! Every subcommand reads its payload from flags, from `--input file.json`,
//! or both (flags win). Output is one JSON document, or a plain-text table
//! with `--format table`. Exit codes: 0 success, 1 malformed input, 2 a
//! mathematical precondition failed (for instance a root on the boundary).

mod bench;
mod format;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

pub use bench::{bench_chains, BenchRow, BenchTable, MAX_BENCH_DEGREE};
pub use format::{
    bivariate_json, chain_json, complex_poly_json, parse_bivariate, parse_complex_poly, parse_json,
    parse_real_poly, rational_from_value, rational_json, real_poly_json,
};

use crate::bounds::bound_check;
use crate::cauchy::cauchy_index_traced;
use crate::error::{Error, Result};
use crate::exact::{rational_to_string, BiPoly, ComplexUniPoly, Domain, Poly, Rational, UniPoly};
use crate::subres::{coefficient_degree_check, subresultants_naive, subresultants_structured, SubresSeq};
use crate::winding::{
    count_all_roots, count_roots_in_rectangle, isolate_roots, sufficient_radius, winding_number_traced,
    EdgeTrace, Rectangle,
};

/// Default cap on `bounds --d` without `--allow-large`.
pub const BOUNDS_DEFAULT_CAP: u64 = 16;

#[derive(Parser, Debug)]
#[command(name = "rectwind", version, about = "Exact complex root counting in rectangles")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Include chains, sign tables and ε-weights in the output.
    #[arg(long, global = true)]
    trace: bool,
    /// JSON file with the payload; explicit flags override its fields.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Naive,
    Structured,
}

#[derive(Args, Debug, Default)]
struct PolyRect {
    /// Complex polynomial as JSON `[[re, im], ...]`, ascending.
    #[arg(long)]
    poly: Option<String>,
    /// Rectangle `x0 x1 y0 y1`.
    #[arg(long, num_args = 4, value_names = ["X0", "X1", "Y0", "Y1"], allow_hyphen_values = true)]
    rect: Option<Vec<String>>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of roots inside a rectangle, with multiplicity.
    Count(PolyRect),
    /// Number of roots in the whole plane.
    CountAll {
        #[arg(long)]
        poly: Option<String>,
    },
    /// Boxes separating the roots inside a rectangle.
    Isolate {
        #[command(flatten)]
        target: PolyRect,
        #[arg(long, allow_hyphen_values = true)]
        min_width: Option<String>,
    },
    /// Winding number on a rectangle boundary, with its edge indices.
    Winding(PolyRect),
    /// Cauchy index of Q/P on [a, b].
    Index {
        #[arg(long)]
        q: Option<String>,
        #[arg(long)]
        p: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Signed subresultant sequence of (P, Q), univariate or bivariate.
    Subres {
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        q: Option<String>,
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// Also check Y-degrees of bivariate coefficients against this total degree bound.
        #[arg(long)]
        degree_bound: Option<usize>,
    },
    /// β(d), γ(d) and their bounds.
    Bounds {
        #[arg(long)]
        d: Option<u64>,
        /// Allow d above the default cap.
        #[arg(long)]
        allow_large: bool,
    },
    /// Time structured against determinant subresultants.
    Bench {
        #[arg(long)]
        max_deg: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let format = cli.format;
    match execute(cli) {
        Ok((doc, table)) => Outcome {
            code: 0,
            stdout: match format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable")),
                Format::Table => table,
            },
            stderr: String::new(),
        },
        Err(e) => {
            let doc = json!({"error": {"kind": e.kind(), "message": e.to_string()}});
            Outcome {
                code: if e.is_usage() { 1 } else { 2 },
                stdout: format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable")),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

/// Payload fields from `--input`, looked up when a flag is absent.
struct Payload(Map<String, Value>);

impl Payload {
    fn load(path: Option<&PathBuf>) -> Result<Self> {
        let Some(path) = path else {
            return Ok(Self(Map::new()));
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
        match parse_json(&text)? {
            Value::Object(m) => Ok(Self(m)),
            _ => Err(Error::Parse("input file must hold a JSON object".into())),
        }
    }

    /// JSON value of a field: the flag text parsed as JSON, else the file entry.
    fn json(&self, flag: &Option<String>, key: &str) -> Result<Value> {
        match flag {
            Some(s) => parse_json(s),
            None => self.0.get(key).cloned().ok_or_else(|| missing(key)),
        }
    }

    fn rational(&self, flag: &Option<String>, key: &str) -> Result<Rational> {
        match flag {
            Some(s) => rational_from_value(&Value::String(s.clone())),
            None => rational_from_value(self.0.get(key).ok_or_else(|| missing(key))?),
        }
    }

    fn uint(&self, flag: Option<u64>, key: &str, default: Option<u64>) -> Result<u64> {
        if let Some(v) = flag {
            return Ok(v);
        }
        match self.0.get(key) {
            Some(v) => v
                .as_u64()
                .ok_or_else(|| Error::Parse(format!("{key} must be a non-negative integer"))),
            None => default.ok_or_else(|| missing(key)),
        }
    }

    fn string(&self, key: &str) -> Option<String> {
        self.0.get(key).and_then(Value::as_str).map(str::to_owned)
    }

    fn rect(&self, flag: &Option<Vec<String>>) -> Result<Rectangle> {
        let vals: Vec<Rational> = match flag {
            Some(v) => v
                .iter()
                .map(|s| rational_from_value(&Value::String(s.clone())))
                .collect::<Result<_>>()?,
            None => match self.0.get("rect") {
                Some(Value::Array(a)) if a.len() == 4 => a.iter().map(rational_from_value).collect::<Result<_>>()?,
                Some(_) => return Err(Error::Parse("rect must be [x0, x1, y0, y1]".into())),
                None => return Err(missing("rect")),
            },
        };
        let [x0, x1, y0, y1]: [Rational; 4] = vals.try_into().expect("four values");
        Rectangle::new(x0, x1, y0, y1)
    }
}

fn missing(key: &str) -> Error {
    Error::InvalidArgument(format!("missing required field `{key}` (flag or input file)"))
}

fn execute(cli: Cli) -> Result<(Value, String)> {
    let payload = Payload::load(cli.input.as_ref())?;
    let trace = cli.trace;
    match cli.command {
        Command::Count(t) => {
            let f = parse_complex_poly(&payload.json(&t.poly, "poly")?)?;
            let rect = payload.rect(&t.rect)?;
            let count = count_roots_in_rectangle(&f, &rect)?;
            let mut doc = json!({"command": "count", "rectangle": rect, "count": count});
            if trace {
                doc["trace"] = winding_trace(&f, &rect).1;
            }
            let table = format!("rectangle  {rect}\ncount      {count}\n");
            Ok((doc, table))
        }
        Command::CountAll { poly } => {
            let f = parse_complex_poly(&payload.json(&poly, "poly")?)?;
            let count = count_all_roots(&f)?;
            let radius = sufficient_radius(&f)?;
            let doc = json!({"command": "count-all", "count": count, "radius": rational_json(&radius)});
            let table = format!("radius  {}\ncount   {count}\n", rational_to_string(&radius));
            Ok((doc, table))
        }
        Command::Isolate { target, min_width } => {
            let f = parse_complex_poly(&payload.json(&target.poly, "poly")?)?;
            let rect = payload.rect(&target.rect)?;
            let w = match min_width {
                Some(s) => rational_from_value(&Value::String(s))?,
                None => match payload.0.get("min_width") {
                    Some(v) => rational_from_value(v)?,
                    None => rect.width().min(rect.height()) / Rational::from_integer(1024.into()),
                },
            };
            let boxes = isolate_roots(&f, &rect, &w)?;
            let mut table = String::from("x0\tx1\ty0\ty1\tmultiplicity\tcertified\n");
            for b in &boxes {
                let r = &b.rectangle;
                let _ = writeln!(
                    table,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    rational_to_string(&r.x0),
                    rational_to_string(&r.x1),
                    rational_to_string(&r.y0),
                    rational_to_string(&r.y1),
                    b.multiplicity,
                    b.squarefree_certified
                );
            }
            let doc = json!({
                "command": "isolate",
                "rectangle": rect,
                "min_width": rational_json(&w),
                "boxes": boxes,
            });
            Ok((doc, table))
        }
        Command::Winding(t) => {
            let f = parse_complex_poly(&payload.json(&t.poly, "poly")?)?;
            let rect = payload.rect(&t.rect)?;
            let (report, traces) = winding_trace(&f, &rect);
            let integer = if report["vanishes_on_boundary"] == Value::Bool(true) {
                Value::Null
            } else {
                report["integer"].clone()
            };
            let mut doc = json!({"command": "winding", "rectangle": rect, "winding": report, "count": integer});
            if trace {
                doc["trace"] = traces;
            }
            let table = format!(
                "value      {}\nbottom     {}\nright      {}\ntop        {}\nleft       {}\nboundary   {}\n",
                doc["winding"]["value"].as_str().unwrap_or(""),
                doc["winding"]["bottom"].as_str().unwrap_or(""),
                doc["winding"]["right"].as_str().unwrap_or(""),
                doc["winding"]["top"].as_str().unwrap_or(""),
                doc["winding"]["left"].as_str().unwrap_or(""),
                doc["winding"]["vanishes_on_boundary"],
            );
            Ok((doc, table))
        }
        Command::Index { q, p, a, b } => {
            let qp = parse_real_poly(&payload.json(&q, "q")?)?;
            let pp = parse_real_poly(&payload.json(&p, "p")?)?;
            let a = payload.rational(&a, "a")?;
            let b = payload.rational(&b, "b")?;
            let (value, chain) = cauchy_index_traced(&qp, &pp, &a, &b);
            let mut doc = json!({
                "command": "index",
                "q": real_poly_json(&qp),
                "p": real_poly_json(&pp),
                "a": rational_json(&a),
                "b": rational_json(&b),
                "index": value,
            });
            if trace {
                doc["trace"] = match &chain {
                    Some(c) => chain_json(c, &a.clone().min(b.clone()), &a.clone().max(b.clone())),
                    None => Value::Null,
                };
            }
            Ok((doc, format!("index  {value}\n")))
        }
        Command::Subres { p, q, method, degree_bound } => {
            let pv = payload.json(&p, "p")?;
            let qv = payload.json(&q, "q")?;
            let method = match method {
                Some(m) => m,
                None => match payload.string("method").as_deref() {
                    None | Some("structured") => Method::Structured,
                    Some("naive") => Method::Naive,
                    Some(other) => return Err(Error::InvalidArgument(format!("unknown method {other}"))),
                },
            };
            let bivariate = pv.as_array().is_some_and(|a| a.iter().any(Value::is_array));
            if bivariate {
                let (pp, qq) = (parse_bivariate(&pv)?, parse_bivariate(&qv)?);
                let seq = compute(&pp, &qq, method)?;
                let mut doc = subres_doc(&seq, method, bivariate_json, real_poly_json);
                if let Some(d) = degree_bound {
                    doc["degree_report"] = serde_json::to_value(coefficient_degree_check(&pp, &qq, d)?)
                        .expect("serializable");
                }
                let table = subres_table(&seq, |p: &BiPoly| bivariate_json(p).to_string());
                Ok((doc, table))
            } else {
                let (pp, qq) = (parse_real_poly(&pv)?, parse_real_poly(&qv)?);
                let seq = compute(&pp, &qq, method)?;
                let doc = subres_doc(&seq, method, real_poly_json, rational_json);
                let table = subres_table(&seq, |p: &UniPoly| p.to_string());
                Ok((doc, table))
            }
        }
        Command::Bounds { d, allow_large } => {
            let d = payload.uint(d, "d", None)?;
            if d > BOUNDS_DEFAULT_CAP && !allow_large {
                return Err(Error::InvalidArgument(format!(
                    "d = {d} exceeds {BOUNDS_DEFAULT_CAP}; pass --allow-large"
                )));
            }
            let report = bound_check(d)?;
            let doc = json!({"command": "bounds", "report": report});
            let table = format!("d      {}\nbeta   {}\ngamma  {}\n", report.d, report.beta, report.gamma);
            Ok((doc, table))
        }
        Command::Bench { max_deg, trials, seed } => {
            let max_deg = payload.uint(max_deg.map(|v| v as u64), "max_deg", Some(8))? as usize;
            let trials = payload.uint(trials.map(|v| v as u64), "trials", Some(10))? as usize;
            let seed = payload.uint(seed, "seed", Some(0))?;
            let table = bench_chains(max_deg, trials, seed)?;
            let mut text = String::from("degree\ttrials\tstructured_ms\tnaive_ms\tidentical\tbits_subres\tbits_prem\n");
            for r in &table.rows {
                let _ = writeln!(
                    text,
                    "{}\t{}\t{:.3}\t{:.3}\t{}\t{}\t{}",
                    r.degree, r.trials, r.structured_ms, r.naive_ms, r.identical, r.max_bits_subres, r.max_bits_prem
                );
            }
            let doc = json!({"command": "bench", "table": table});
            Ok((doc, text))
        }
    }
}

fn compute<D: Domain>(p: &Poly<D>, q: &Poly<D>, method: Method) -> Result<SubresSeq<D>> {
    match method {
        Method::Naive => subresultants_naive(p, q),
        Method::Structured => subresultants_structured(p, q),
    }
}

fn subres_doc<D: Domain>(
    seq: &SubresSeq<D>,
    method: Method,
    poly: impl Fn(&Poly<D>) -> Value,
    coeff: impl Fn(&D) -> Value,
) -> Value {
    let sresp: Vec<Value> = (0..=seq.p)
        .rev()
        .map(|j| json!({"j": j, "poly": poly(seq.sresp(j)), "sres": coeff(seq.sres(j))}))
        .collect();
    json!({
        "command": "subres",
        "method": match method { Method::Naive => "naive", Method::Structured => "structured" },
        "p_degree": seq.p,
        "q_degree": seq.q,
        "degrees": seq.degrees,
        "leading": seq.leading.iter().map(&coeff).collect::<Vec<_>>(),
        "sequence": sresp,
    })
}

fn subres_table<D: Domain>(seq: &SubresSeq<D>, show: impl Fn(&Poly<D>) -> String) -> String {
    let mut out = String::new();
    for j in (0..=seq.p).rev() {
        let _ = writeln!(out, "sResP_{j}  {}", show(seq.sresp(j)));
    }
    out
}

fn edge_json(t: &EdgeTrace) -> Value {
    let (lo, hi) = if t.from <= t.to { (&t.from, &t.to) } else { (&t.to, &t.from) };
    json!({
        "edge": t.edge,
        "variable": t.var,
        "re": real_poly_json(&t.re),
        "im": real_poly_json(&t.im),
        "from": rational_json(&t.from),
        "to": rational_json(&t.to),
        "index": t.index,
        "chain": t.chain.as_ref().map(|c| chain_json(c, lo, hi)),
    })
}

/// The winding report as JSON (plus `integer` when `4w ≡ 0 mod 4`) and the
/// per-edge traces.
fn winding_trace(f: &ComplexUniPoly, rect: &Rectangle) -> (Value, Value) {
    let (report, traces) = winding_number_traced(f.plane(), rect);
    let mut r = serde_json::to_value(&report).expect("serializable");
    r["integer"] = report.to_integer().map_or(Value::Null, Value::from);
    (r, Value::Array(traces.iter().map(edge_json).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Outcome {
        run(std::iter::once("rectwind").chain(args.iter().copied()))
    }

    fn doc(o: &Outcome) -> Value {
        serde_json::from_str(&o.stdout).unwrap()
    }

    const Z2_MINUS_1: &str = r#"[["-1","0"],["0","0"],["1","0"]]"#;

    #[test]
    fn count_two_real_roots() {
        let o = call(&["count", "--poly", Z2_MINUS_1, "--rect", "-2", "2", "-2", "2"]);
        assert_eq!(o.code, 0, "{o:?}");
        assert_eq!(doc(&o)["count"], 2);
    }

    #[test]
    fn winding_on_edge_and_count_refusal() {
        let poly = r#"[["-1","0"],["1","0"]]"#;
        let o = call(&["winding", "--poly", poly, "--rect", "-1", "1", "-1", "1"]);
        assert_eq!(o.code, 0);
        let d = doc(&o);
        assert_eq!(d["winding"]["value"], "1/2");
        assert_eq!(d["winding"]["vanishes_on_boundary"], true);
        assert_eq!(d["count"], Value::Null);
        let o = call(&["count", "--poly", poly, "--rect", "-1", "1", "-1", "1"]);
        assert_eq!(o.code, 2);
        assert_eq!(doc(&o)["error"]["kind"], "RootOnBoundary");
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(call(&["count", "--poly", Z2_MINUS_1, "--rect", "2", "-2", "-2", "2"]).code, 1);
        assert_eq!(call(&["count", "--poly", r#"[["0.5","0"]]"#, "--rect", "-2", "2", "-2", "2"]).code, 1);
        assert_eq!(call(&["frobnicate"]).code, 1);
        assert_eq!(call(&["count"]).code, 1);
        assert_eq!(call(&["--help"]).code, 0);
    }

    #[test]
    fn index_with_trace() {
        let o = call(&["index", "--q", r#"["1"]"#, "--p", r#"["-2","0","1"]"#, "--a", "1", "--b", "2", "--trace"]);
        assert_eq!(o.code, 0);
        let d = doc(&o);
        assert_eq!(d["index"], "1");
        assert!(d["trace"]["epsilon"].is_array());
    }

    #[test]
    fn subres_both_methods_agree() {
        let args = |m: &'static str| ["subres", "--p", r#"["-2","0","1"]"#, "--q", r#"["0","2"]"#, "--method", m];
        let (a, b) = (call(&args("naive")), call(&args("structured")));
        assert_eq!(doc(&a)["sequence"], doc(&b)["sequence"]);
        assert_eq!(doc(&a)["sequence"][2]["sres"], "8");
    }

    #[test]
    fn bounds_cap() {
        assert_eq!(doc(&call(&["bounds", "--d", "4"]))["report"]["beta"], "15");
        assert_eq!(call(&["bounds", "--d", "40"]).code, 1);
    }

    #[test]
    fn table_format() {
        let o = call(&["--format", "table", "count-all", "--poly", Z2_MINUS_1]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("count   2"));
    }
}
