//! Command-line front end.
//!
//! Input format:
//!
//! ```text
//! n 3
//! params a b c alpha
//! f1 = a*x1^2 + alpha*x2*x3
//! f2 = b*x2^2 + alpha*x1*x3
//! f3 = c*x3^2 + alpha*x1*x2
//! ```
//!
//! Blank lines and `#` comments are ignored.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, ValueEnum};
use serde_json::{json, Map, Value};

use crate::algebra::{parse_polynomial, Coefficient, PolySystem};
use crate::oracles::{run_oracles, Agreement, OracleOutcome, OracleStatus};
use crate::schur::{degree_vector, resultant_from_table, DegreeVector};
use crate::traces::{build_trace_table_with_bound, TraceTable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_TOO_LARGE: i32 = 3;
pub const EXIT_DISAGREE: i32 = 4;

/// Default cap on trace-table cells, `Π (d_i + 1)`.
pub const DEFAULT_MAX_TABLE: u64 = 1_000_000;
pub const MAX_TABLE_ENV: &str = "RESKIT_MAX_TABLE";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Resultant,
    Traces,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "reskit", version, about = "Resultants of homogeneous polynomial systems")]
struct Args {
    /// System description file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, value_enum, default_value_t = Command::Resultant)]
    command: Command,
    /// Worker threads for the trace table; 0 picks automatically.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Seed for random parameter specializations in `verify`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// A parsed input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub n: usize,
    pub polynomial_texts: Vec<String>,
    pub params: Vec<String>,
}

impl JobSpec {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut n: Option<usize> = None;
        let mut params = Vec::new();
        let mut polys: Vec<Option<String>> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let at = |msg: String| format!("line {}: {msg}", lineno + 1);
            let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            if n.is_none() {
                if head != "n" {
                    return Err(at("expected `n <integer>` first".into()));
                }
                let v: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| at(format!("invalid variable count `{}`", rest.trim())))?;
                if v == 0 {
                    return Err(at("n must be at least 1".into()));
                }
                n = Some(v);
                polys = vec![None; v];
                continue;
            }
            if head == "params" {
                params.extend(rest.split_whitespace().map(str::to_string));
                continue;
            }
            let Some((lhs, rhs)) = line.split_once('=') else {
                return Err(at(format!("expected `f<i> = <polynomial>`, got `{line}`")));
            };
            let lhs = lhs.trim();
            let idx = lhs
                .strip_prefix('f')
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|&i| i >= 1 && i <= polys.len())
                .ok_or_else(|| at(format!("unknown polynomial name `{lhs}`")))?;
            if polys[idx - 1].is_some() {
                return Err(at(format!("f{idx} given twice")));
            }
            polys[idx - 1] = Some(rhs.trim().to_string());
        }
        let n = n.ok_or("empty input: expected `n <integer>`")?;
        let polynomial_texts = polys
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.ok_or(format!("missing f{}", i + 1)))
            .collect::<Result<_, _>>()?;
        Ok(JobSpec { n, polynomial_texts, params })
    }

    pub fn system(&self) -> Result<PolySystem, String> {
        let polys = self
            .polynomial_texts
            .iter()
            .enumerate()
            .map(|(i, t)| {
                parse_polynomial(t, self.n, &self.params).map_err(|e| format!("f{}: {e}", i + 1))
            })
            .collect::<Result<Vec<_>, _>>()?;
        PolySystem::new(polys).map_err(|e| e.to_string())
    }
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(code: i32, msg: impl std::fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let limit = std::env::var(MAX_TABLE_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_TABLE);
    run_with_limit(args, stdin, limit)
}

pub fn run_with_limit<I, T>(args: I, stdin: &mut dyn Read, max_table: u64) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: rendered, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: rendered },
            };
        }
    };

    let mut text = String::new();
    let read = if args.input == "-" {
        stdin.read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(&args.input).map(|t| text = t)
    };
    if let Err(e) = read {
        return Outcome::fail(EXIT_INPUT, format!("cannot read {}: {e}", args.input));
    }

    let job = match JobSpec::parse(&text) {
        Ok(j) => j,
        Err(e) => return Outcome::fail(EXIT_INPUT, e),
    };
    let system = match job.system() {
        Ok(s) => s,
        Err(e) => return Outcome::fail(EXIT_INPUT, e),
    };
    if let Some(i) = system.polys().iter().position(|p| p.is_zero()) {
        return Outcome::fail(EXIT_INPUT, format!("f{} is the zero polynomial", i + 1));
    }
    let d = degree_vector(&system);
    if d.table_size() > max_table {
        return Outcome::fail(
            EXIT_TOO_LARGE,
            format!(
                "trace table would hold {} entries, limit is {max_table} (set {MAX_TABLE_ENV} to raise it)",
                d.table_size()
            ),
        );
    }

    let pool = match rayon::ThreadPoolBuilder::new().num_threads(args.threads).build() {
        Ok(p) => p,
        Err(e) => return Outcome::fail(EXIT_INPUT, format!("thread pool: {e}")),
    };
    pool.install(|| execute(&args, &job, &system, &d))
}

fn execute(args: &Args, job: &JobSpec, system: &PolySystem, d: &DegreeVector) -> Outcome {
    let table = match build_trace_table_with_bound(system, d.as_index()) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_INPUT, e),
    };
    if args.command == Command::Traces {
        return Outcome {
            code: EXIT_OK,
            stdout: traces_report(args.format, job, system, d, &table),
            stderr: String::new(),
        };
    }
    let value = match resultant_from_table(&table, d) {
        Ok(v) => v,
        Err(e) => return Outcome::fail(EXIT_INPUT, e),
    };
    match args.command {
        Command::Resultant => Outcome {
            code: EXIT_OK,
            stdout: resultant_report(args.format, job, system, d, &value, &[]),
            stderr: String::new(),
        },
        Command::Verify => {
            let outcomes = run_oracles(system, &value, &job.params, args.seed);
            let disagree = outcomes.iter().any(|o| {
                matches!(o.status, OracleStatus::Compared { agreement: Agreement::Disagree, .. })
            });
            let inconclusive =
                outcomes.iter().any(|o| matches!(o.status, OracleStatus::Inconclusive(_)));
            let code = if disagree {
                EXIT_DISAGREE
            } else if inconclusive {
                EXIT_INCONCLUSIVE
            } else {
                EXIT_OK
            };
            Outcome {
                code,
                stdout: resultant_report(args.format, job, system, d, &value, &outcomes),
                stderr: String::new(),
            }
        }
        Command::Traces => unreachable!(),
    }
}

fn header(job: &JobSpec, system: &PolySystem, d: &DegreeVector) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("n".into(), json!(job.n));
    m.insert("degrees".into(), json!(system.degrees()));
    m.insert("degreeVector".into(), json!(d.entries()));
    m
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn text_header(system: &PolySystem, d: &DegreeVector) -> String {
    format!(
        "degrees: {}\ndegree vector: {} (total {})\n",
        join(&system.degrees()),
        join(d.entries()),
        d.total()
    )
}

fn traces_report(
    format: Format,
    job: &JobSpec,
    system: &PolySystem,
    d: &DegreeVector,
    table: &TraceTable,
) -> String {
    match format {
        Format::Json => {
            let mut m = header(job, system, d);
            let traces: Map<String, Value> = table
                .iter()
                .map(|(k, c)| (k.to_string(), json!(c.display(&job.params).to_string())))
                .collect();
            m.insert("traces".into(), Value::Object(traces));
            format!("{}\n", serde_json::to_string_pretty(&Value::Object(m)).unwrap())
        }
        Format::Text => {
            let mut out = text_header(system, d);
            for (k, c) in table.iter() {
                writeln!(out, "T[{k}] = {}", c.display(&job.params)).unwrap();
            }
            out
        }
    }
}

fn status_words(o: &OracleOutcome) -> (&'static str, String) {
    match &o.status {
        OracleStatus::Compared { agreement, oracle_value } => {
            let word = match agreement {
                Agreement::Equal | Agreement::Negated => "AGREE",
                Agreement::BothZero => "AGREE (both zero)",
                Agreement::Disagree => "DISAGREE",
            };
            (word, oracle_value.clone())
        }
        OracleStatus::NotApplicable(why) => ("n/a", why.clone()),
        OracleStatus::Inconclusive(why) => ("INCONCLUSIVE", why.clone()),
    }
}

fn specialization_text(o: &OracleOutcome, params: &[String]) -> Option<String> {
    o.specialization.as_ref().map(|vals| {
        params
            .iter()
            .zip(vals)
            .map(|(p, v)| format!("{p}={v}"))
            .collect::<Vec<_>>()
            .join(", ")
    })
}

fn resultant_report(
    format: Format,
    job: &JobSpec,
    system: &PolySystem,
    d: &DegreeVector,
    value: &Coefficient,
    oracles: &[OracleOutcome],
) -> String {
    let shown = value.display(&job.params).to_string();
    match format {
        Format::Json => {
            let mut m = header(job, system, d);
            m.insert("resultant".into(), json!(shown));
            let signs: Map<String, Value> = oracles
                .iter()
                .map(|o| {
                    let v = match o.sign() {
                        Some(s) => json!(s),
                        None => json!("n/a"),
                    };
                    (o.name.to_string(), v)
                })
                .collect();
            m.insert("signVsOracles".into(), Value::Object(signs));
            if !oracles.is_empty() {
                let details: Vec<Value> = oracles
                    .iter()
                    .map(|o| {
                        let (status, detail) = status_words(o);
                        json!({
                            "name": o.name,
                            "status": status,
                            "detail": detail,
                            "specialization": specialization_text(o, &job.params),
                        })
                    })
                    .collect();
                m.insert("oracles".into(), Value::Array(details));
            }
            format!("{}\n", serde_json::to_string_pretty(&Value::Object(m)).unwrap())
        }
        Format::Text => {
            let mut out = text_header(system, d);
            writeln!(out, "resultant: {shown}").unwrap();
            for o in oracles {
                let (status, detail) = status_words(o);
                write!(out, "oracle {}: {status}", o.name).unwrap();
                match o.sign() {
                    Some(s) => write!(out, " sign={s:+}").unwrap(),
                    None => write!(out, " sign=n/a").unwrap(),
                }
                write!(out, " ({detail})").unwrap();
                if let Some(sp) = specialization_text(o, &job.params) {
                    write!(out, " at {sp}").unwrap();
                }
                out.push('\n');
            }
            out
        }
    }
}
