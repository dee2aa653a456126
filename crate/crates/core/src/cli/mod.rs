//! Output side of the `padovan` command: every command renders to a
//! `String`, so identical inputs give byte-identical output.

pub mod bench;
pub mod suites;

use std::fmt::Display;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::Result;
use crate::exact_arith::{render_rational, BivariatePoly, Integer, Rational};
use crate::matrix3::Mat3;
use crate::padovan_matrices::{b_power_closed, mp, q_power};
use crate::report::{Report, SCHEMA_VERSION};
use crate::sequences::{
    biperiodic_terms, fibonacci_terms, lucas_terms, padovan_terms, BiPeriodicParams, PadovanConvention,
};
use crate::spectra::{
    eigen_recurrence_extended, isolate_roots, mp1_char_poly, mp1_verdict, real_root_intervals, surd_roots,
    RootClass,
};

use self::bench::BenchResult;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Pretty,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "pretty" => Ok(Self::Pretty),
            other => Err(format!("unknown format `{other}` (expected json, csv or pretty)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqKind {
    Padovan,
    Fibonacci,
    Lucas,
    Biperiodic,
}

impl FromStr for SeqKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "padovan" => Ok(Self::Padovan),
            "fibonacci" => Ok(Self::Fibonacci),
            "lucas" => Ok(Self::Lucas),
            "biperiodic" => Ok(Self::Biperiodic),
            other => Err(format!(
                "unknown sequence `{other}` (expected padovan, fibonacci, lucas or biperiodic)"
            )),
        }
    }
}

/// A value as it appears in JSON: integers are bare numbers of any size,
/// anything else (fractions, polynomials) is a string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Int(Integer),
    Text(String),
}

impl Cell {
    fn json(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => Value::String(s.clone()).to_string(),
        }
    }
}

impl Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cell::Int(n) => write!(f, "{n}"),
            Cell::Text(s) => f.write_str(s),
        }
    }
}

impl From<&Integer> for Cell {
    fn from(n: &Integer) -> Self {
        Cell::Int(n.clone())
    }
}

impl From<&Rational> for Cell {
    fn from(r: &Rational) -> Self {
        if r.is_integer() {
            Cell::Int(r.to_integer())
        } else {
            Cell::Text(render_rational(r))
        }
    }
}

impl From<&BivariatePoly> for Cell {
    fn from(p: &BivariatePoly) -> Self {
        Cell::Text(p.to_string())
    }
}

fn json_list(cells: &[Cell]) -> String {
    let items: Vec<String> = cells.iter().map(Cell::json).collect();
    format!("[{}]", items.join(","))
}

fn csv_field(cell: &Cell) -> String {
    let text = cell.to_string();
    if text.contains([',', '"', ' ']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text
    }
}

pub fn render_sequence(cells: &[Cell], format: Format) -> String {
    match format {
        Format::Json => json_list(cells),
        Format::Csv => cells.iter().map(csv_field).collect::<Vec<_>>().join(","),
        Format::Pretty => cells
            .iter()
            .enumerate()
            .map(|(n, c)| format!("{n:>4}  {c}"))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

pub fn render_matrix<R>(m: &Mat3<R>, format: Format) -> String
where
    for<'x> Cell: From<&'x R>,
    R: crate::exact_arith::Scalar,
{
    let rows: Vec<Vec<Cell>> = m.rows().iter().map(|r| r.iter().map(Cell::from).collect()).collect();
    match format {
        Format::Json => format!("[{}]", rows.iter().map(|r| json_list(r)).collect::<Vec<_>>().join(",")),
        Format::Csv => rows
            .iter()
            .map(|r| r.iter().map(csv_field).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Pretty => m.to_string(),
    }
}

#[derive(Clone, Debug)]
pub struct SeqRequest {
    pub kind: SeqKind,
    pub n: u64,
    pub conv: PadovanConvention,
    pub a: Rational,
    pub b: Rational,
    pub symbolic: bool,
}

/// Terms `0..=n` of the requested sequence.
pub fn sequence_cells(req: &SeqRequest) -> Result<Vec<Cell>> {
    let ints = |v: Vec<Integer>| v.iter().map(Cell::from).collect();
    Ok(match req.kind {
        SeqKind::Padovan => ints(padovan_terms(req.n, req.conv)),
        SeqKind::Fibonacci => ints(fibonacci_terms(req.n)),
        SeqKind::Lucas => ints(lucas_terms(req.n)),
        SeqKind::Biperiodic if req.symbolic => biperiodic_terms(req.n, &BiPeriodicParams::symbolic())
            .iter()
            .map(Cell::from)
            .collect(),
        SeqKind::Biperiodic => {
            let params = BiPeriodicParams::numeric(req.a.clone(), req.b.clone())?;
            biperiodic_terms(req.n, &params).iter().map(Cell::from).collect()
        }
    })
}

pub fn cmd_seq(req: &SeqRequest, format: Format) -> Result<String> {
    Ok(render_sequence(&sequence_cells(req)?, format))
}

pub fn cmd_qpow(n: u64, format: Format) -> String {
    render_matrix(&q_power(n), format)
}

pub fn cmd_mp(n: usize, a: &Rational, b: &Rational, symbolic: bool, format: Format) -> Result<String> {
    if symbolic {
        return Ok(render_matrix(&mp(n, &BiPeriodicParams::symbolic()), format));
    }
    let params = BiPeriodicParams::numeric(a.clone(), b.clone())?;
    Ok(render_matrix(&mp(n, &params), format))
}

/// `B^n`, `n` of either sign.
pub fn cmd_b(n: i64, a: &Rational, symbolic: bool, format: Format) -> Result<String> {
    if symbolic {
        return Ok(render_matrix(&b_power_closed(n, &BivariatePoly::a()), format));
    }
    BiPeriodicParams::numeric(a.clone(), Rational::from_integer(1.into()))?;
    Ok(render_matrix(&b_power_closed(n, a), format))
}

/// Verdict for `M(1)`, its real roots, and the eigenvalues of `M(0..=n)`
/// when all three roots are real.
pub fn spectrum_json(a: &Rational, b: &Rational, n: usize, tol: f64) -> Result<Value> {
    BiPeriodicParams::numeric(a.clone(), b.clone())?;
    let verdict = mp1_verdict(a);
    let poly = mp1_char_poly(a);
    let mut out = json!({
        "schema": SCHEMA_VERSION,
        "params": { "a": render_rational(a), "b": render_rational(b) },
        "n": n,
        "char_poly": poly.to_string(),
        "verdict": verdict.to_json(),
    });
    if verdict.classification == RootClass::ThreeDistinctReal {
        let roots = isolate_roots(a, tol)?;
        out["roots"] = json!(roots.iter().map(|r| r.to_json()).collect::<Vec<_>>());
        let rec = eigen_recurrence_extended(n, a, b, tol)?;
        out["eigen"] = json!(rec.triples.iter().map(|t| t.to_json()).collect::<Vec<_>>());
    } else {
        let roots = real_root_intervals(&poly, tol);
        out["roots"] = json!(roots.iter().map(|r| r.to_json()).collect::<Vec<_>>());
    }
    if let Some(exact) = surd_roots(&poly) {
        out["exact_roots"] = json!(exact.iter().map(ToString::to_string).collect::<Vec<_>>());
    }
    Ok(out)
}

pub fn cmd_spectrum(a: &Rational, b: &Rational, n: usize, tol: f64, format: Format) -> Result<String> {
    let value = spectrum_json(a, b, n, tol)?;
    Ok(match format {
        Format::Json => value.to_string(),
        Format::Pretty => spectrum_pretty(&value),
        Format::Csv => {
            let mut lines = vec!["n,lambda_0,lambda_1,lambda_2".to_string()];
            for t in value["eigen"].as_array().into_iter().flatten() {
                let vals: Vec<String> = t["values"].as_array().into_iter().flatten().map(Value::to_string).collect();
                lines.push(format!("{},{}", t["n"], vals.join(",")));
            }
            lines.join("\n")
        }
    })
}

fn spectrum_pretty(v: &Value) -> String {
    let verdict = &v["verdict"];
    let mut out = vec![
        format!("a = {}, b = {}", str_of(&v["params"]["a"]), str_of(&v["params"]["b"])),
        format!("char poly of M(1): {}", str_of(&v["char_poly"])),
        format!("discriminant: {}", str_of(&verdict["discriminant"])),
        format!("classification: {}", str_of(&verdict["classification"])),
        format!("diagonalizable over R: {}", verdict["diagonalizable_over_R"]),
        format!("in proven region (a >= 2): {}", verdict["in_paper_proven_region"]),
    ];
    if let Some(exact) = v["exact_roots"].as_array() {
        let roots: Vec<String> = exact.iter().map(str_of).collect();
        out.push(format!("exact roots: {}", roots.join(", ")));
    }
    for r in v["roots"].as_array().into_iter().flatten() {
        out.push(format!("root in [{}, {}] ~ {}", str_of(&r["lo"]), str_of(&r["hi"]), r["refined"]));
    }
    for t in v["eigen"].as_array().into_iter().flatten() {
        let vals: Vec<String> = t["values"].as_array().into_iter().flatten().map(Value::to_string).collect();
        out.push(format!("M({}) eigenvalues: {}", t["n"], vals.join(", ")));
    }
    out.join("\n")
}

fn str_of(v: &Value) -> String {
    v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string())
}

pub fn render_reports(reports: &[Report], format: Format, with_timing: bool) -> String {
    match format {
        Format::Json => reports
            .iter()
            .map(|r| r.to_json(with_timing).to_string())
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Csv => {
            let mut lines = vec!["proposition,status,max_n,checks,failures,elapsed_ms".to_string()];
            for r in reports {
                let ms = if with_timing { r.elapsed_ms } else { 0 };
                lines.push(format!("{},{},{},{},{},{ms}", r.proposition, r.status(), r.max_n, r.checks, r.failure_count));
            }
            lines.join("\n")
        }
        Format::Pretty => reports
            .iter()
            .map(|r| {
                let mut line = format!("{:<6} {:<7} max_n={:<4} checks={}", r.proposition, r.status(), r.max_n, r.checks);
                if with_timing {
                    line.push_str(&format!(" ({} ms)", r.elapsed_ms));
                }
                for f in &r.failures {
                    line.push_str(&format!("\n    {}", f.to_json()));
                }
                line
            })
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

pub fn render_bench(results: &[BenchResult], format: Format, with_timing: bool) -> String {
    let ms = |r: &BenchResult| if with_timing { r.elapsed_ms } else { 0 };
    match format {
        Format::Json => results
            .iter()
            .map(|r| {
                let mut v = serde_json::to_value(r).expect("plain struct");
                v["elapsed_ms"] = json!(ms(r));
                v.to_string()
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Csv => {
            let mut lines = vec!["method,n,elapsed_ms,result_digits,checksum,products".to_string()];
            for r in results {
                let products = r.products.map(|p| p.to_string()).unwrap_or_default();
                lines.push(format!("{},{},{},{},{},{products}", r.method, r.n, ms(r), r.result_digits, r.checksum));
            }
            lines.join("\n")
        }
        Format::Pretty => results
            .iter()
            .map(|r| {
                let products = r.products.map(|p| format!(", {p} products")).unwrap_or_default();
                format!(
                    "{:<7} n={} digits={} checksum={}{products} ({} ms)",
                    r.method, r.n, r.result_digits, r.checksum, ms(r)
                )
            })
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

/// True when every value in `results` agrees on digits and checksum.
pub fn bench_agrees(results: &[BenchResult]) -> bool {
    results
        .windows(2)
        .all(|w| w[0].checksum == w[1].checksum && w[0].result_digits == w[1].result_digits)
}
