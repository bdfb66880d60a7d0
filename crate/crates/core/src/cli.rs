//! Command-line front end. [`run`] is a pure function from arguments to an
//! [`Outcome`]; the `twistfm` binary only prints it.
//!
//! Exit status is 0 on success, 1 for errors raised by the engine and 2 for
//! usage errors, which include arguments that fail validation before any
//! computation starts (non-prime `--p` for `verify`, non-coprime `--i`,
//! missing base files).

use std::ffi::OsString;
use std::path::Path;

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::{Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use serde_json::{json, Map, Value};

use crate::catalog::{catalog_get, catalog_list, s_of_p_over, CatalogEntry, DEFAULT_BASE};
use crate::error::{Error, Result};
use crate::partners::{
    classify_partners, enumerate_partners, is_prime, rigidity_check, verify_main_theorem, AutBound,
    ClassificationMode, PartnerIndexSet, Symmetries,
};
use crate::surface::{format_rational, EllipticSurface};
use crate::wc::{relative_jacobian_power, TwistedSurface, WCDoc};

#[derive(Debug, Parser)]
#[command(
    name = "twistfm",
    version,
    about = "Twisted rational elliptic surfaces and their Fourier-Mukai partners"
)]
pub struct Cli {
    /// Emit canonical JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build S(p) (or J^i(S(p))) over a base with a section.
    Construct {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        i: Option<i64>,
        #[arg(long, default_value = DEFAULT_BASE)]
        base: String,
    },
    /// Invariants of a base, of S(p), or of J^i(S(p)).
    Invariants {
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        i: Option<i64>,
        #[arg(long, default_value = DEFAULT_BASE)]
        base: String,
    },
    /// List the Fourier-Mukai partners J^b(S(p)).
    Partners {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value = DEFAULT_BASE)]
        base: String,
    },
    /// Partition the partner indices into candidate classes.
    Classify {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value = DEFAULT_BASE)]
        base: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Bound)]
        mode: ModeArg,
        #[arg(long = "aut-bound", default_value_t = 6, value_parser = PossibleValuesParser::new(["2", "4", "6"]).map(|s| s.parse::<u64>().unwrap()))]
        aut_bound: u64,
    },
    /// Möbius symmetries of a base's marked configuration.
    Rigidity {
        #[arg(long, default_value = DEFAULT_BASE)]
        base: String,
    },
    /// Certify at least N pairwise non-isomorphic partners of S(p).
    Verify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
    },
    /// Show the built-in base configurations.
    Catalog {
        #[arg(long)]
        name: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Inversion,
    Bound,
}

impl From<ModeArg> for ClassificationMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Inversion => ClassificationMode::InversionOrbits,
            ModeArg::Bound => ClassificationMode::PaperBound,
        }
    }
}

/// What a single invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(Error),
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(doc) => Outcome {
            code: 0,
            stdout: if cli.json {
                render_json(&doc)
            } else {
                render_table(&doc)
            },
            stderr: String::new(),
        },
        Err(Failure::Usage(e)) => error_outcome(2, &e),
        Err(Failure::Engine(e)) => error_outcome(1, &e),
    }
}

fn error_outcome(code: i32, e: &Error) -> Outcome {
    let doc = json!({ "error": e.code(), "detail": e.to_string() });
    Outcome {
        code,
        stdout: String::new(),
        stderr: render_json(&doc),
    }
}

/// Keys come out sorted because `serde_json::Map` is ordered.
pub fn render_json(doc: &Value) -> String {
    let mut s = serde_json::to_string(doc).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn render_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

fn render_table(doc: &Value) -> String {
    let mut out = String::new();
    let Value::Object(map) = doc else {
        out.push_str(&render_scalar(doc));
        out.push('\n');
        return out;
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    for (k, v) in map {
        match v {
            Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
                out.push_str(&format!("{k}:\n"));
                for item in items {
                    let Value::Object(row) = item else {
                        unreachable!()
                    };
                    let cells: Vec<String> = row
                        .iter()
                        .map(|(rk, rv)| format!("{rk}={}", render_scalar(rv)))
                        .collect();
                    out.push_str(&format!("  - {}\n", cells.join("  ")));
                }
            }
            _ => out.push_str(&format!("{k:<width$}  {}\n", render_scalar(v))),
        }
    }
    out
}

/// Catalog name, or a path to a surface JSON document that passes catalog
/// validation.
fn resolve_base(spec: &str) -> std::result::Result<EllipticSurface, Failure> {
    if let Ok(entry) = catalog_get(spec) {
        return Ok(entry.surface()?);
    }
    let text = read_file(spec)?;
    Ok(CatalogEntry::from_json(&text)?.surface()?)
}

/// Like [`resolve_base`] but accepts any valid surface document.
fn resolve_surface(spec: &str) -> std::result::Result<EllipticSurface, Failure> {
    if let Ok(entry) = catalog_get(spec) {
        return Ok(entry.surface()?);
    }
    let text = read_file(spec)?;
    Ok(EllipticSurface::from_json(&text)?)
}

fn read_file(spec: &str) -> std::result::Result<String, Failure> {
    let path = Path::new(spec);
    if !path.is_file() {
        return Err(Failure::Usage(Error::UnknownEntry {
            name: spec.to_string(),
        }));
    }
    std::fs::read_to_string(path).map_err(|e| {
        Failure::Engine(Error::Io {
            path: spec.to_string(),
            message: e.to_string(),
        })
    })
}

fn check_p(p: u64) -> std::result::Result<(), Failure> {
    if p == 0 {
        return Err(Failure::Usage(Error::Parse {
            what: "positive twist order",
            input: "0".into(),
        }));
    }
    Ok(())
}

fn check_index(i: i64, p: u64) -> std::result::Result<(), Failure> {
    if i != 0 && i.unsigned_abs().gcd(&p) != 1 {
        return Err(Failure::Usage(Error::NotCoprime {
            index: i,
            lambda: p,
        }));
    }
    Ok(())
}

fn build(base: &str, p: u64, i: Option<i64>) -> std::result::Result<TwistedSurface, Failure> {
    check_p(p)?;
    if let Some(i) = i {
        check_index(i, p)?;
    }
    let base = resolve_base(base)?;
    let s = s_of_p_over(&base, p)?;
    Ok(match i {
        Some(i) => relative_jacobian_power(&s, i)?,
        None => s,
    })
}

fn invariants_doc(s: &EllipticSurface) -> Result<Map<String, Value>> {
    let lambda = match s.lambda() {
        Ok(l) => json!(l.value()),
        Err(Error::UnknownLambda { .. }) => Value::Null,
        Err(e) => return Err(e),
    };
    let mut m = Map::new();
    m.insert("name".into(), json!(s.name()));
    m.insert("euler_number".into(), json!(s.euler_number()));
    m.insert("chi".into(), json!(s.chi()?));
    m.insert(
        "canonical_degree".into(),
        json!(format_rational(&s.canonical_degree()?)),
    );
    m.insert(
        "kodaira_dimension".into(),
        json!(s.kodaira_dimension()?.to_string()),
    );
    m.insert("rational".into(), json!(s.is_rational()?));
    m.insert("lambda".into(), lambda);
    m.insert("multiplicities".into(), json!(s.config().multiplicities()));
    Ok(m)
}

fn surface_doc(t: &TwistedSurface) -> Result<Value> {
    let mut m = invariants_doc(t.surface())?;
    let Value::Object(doc) = serde_json::to_value(t.surface())? else {
        unreachable!("surfaces serialize to objects")
    };
    m.extend(doc);
    m.insert("base".into(), json!(t.base().name()));
    m.insert(
        "class".into(),
        serde_json::to_value(WCDoc::from(t.class()))?,
    );
    m.insert("class_order".into(), json!(t.class().order()));
    Ok(Value::Object(m))
}

fn execute(cmd: &Command) -> std::result::Result<Value, Failure> {
    match cmd {
        Command::Construct { p, i, base } => {
            let t = build(base, *p, *i)?;
            Ok(surface_doc(&t)?)
        }
        Command::Invariants { p, i, base } => {
            let s = match p {
                Some(p) => build(base, *p, *i)?.into_surface(),
                None => resolve_surface(base)?,
            };
            Ok(Value::Object(invariants_doc(&s)?))
        }
        Command::Partners { p, base } => {
            let t = build(base, *p, None)?;
            let lambda = t.surface().lambda()?.value();
            let partners = enumerate_partners(&t)?;
            let indices: Vec<u64> = if lambda == 1 {
                vec![0]
            } else {
                PartnerIndexSet::new(lambda).indices().to_vec()
            };
            let rows = indices
                .iter()
                .zip(&partners)
                .map(|(b, partner)| {
                    let mut row = invariants_doc(partner.surface())?;
                    row.insert("index".into(), json!(b));
                    Ok(Value::Object(row))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(json!({
                "base": t.base().name(),
                "lambda": lambda,
                "index_count": partners.len(),
                "partners": rows,
            }))
        }
        Command::Classify {
            p,
            base,
            mode,
            aut_bound,
        } => {
            let aut = AutBound::new(*aut_bound).map_err(Failure::Usage)?;
            let t = build(base, *p, None)?;
            let c = classify_partners(&t, (*mode).into(), aut)?;
            Ok(json!({
                "base": t.base().name(),
                "lambda": c.lambda,
                "index_count": c.index_count,
                "mode": c.mode.to_string(),
                "aut_bound": c.aut_bound.value(),
                "classes": c.classes,
                "class_count": c.classes.len(),
                "M_min": c.certified_lower_bound,
            }))
        }
        Command::Rigidity { base } => {
            let s = resolve_surface(base)?;
            let report = rigidity_check(s.config());
            let (order, maps) = match &report.symmetries {
                Symmetries::Continuous => (Value::Null, Vec::new()),
                Symmetries::Finite(maps) => (
                    json!(maps.len()),
                    maps.iter().map(|m| m.to_string()).collect(),
                ),
            };
            Ok(json!({
                "name": s.name(),
                "marked_points": s.config().len(),
                "rigid": report.rigid,
                "group_order": order,
                "symmetries": maps,
            }))
        }
        Command::Verify { p, n } => {
            if !is_prime(*p) {
                return Err(Failure::Usage(Error::NotPrime { value: *p }));
            }
            if *n == 0 {
                return Err(Failure::Usage(Error::Parse {
                    what: "positive class count",
                    input: "0".into(),
                }));
            }
            Ok(serde_json::to_value(verify_main_theorem(*p, *n)?).map_err(Error::from)?)
        }
        Command::Catalog { name } => {
            let entries = match name {
                Some(n) => vec![catalog_get(n)?],
                None => catalog_list(),
            };
            let rows = entries
                .iter()
                .map(|e| {
                    Ok(json!({
                        "name": e.name,
                        "provenance": e.provenance.to_string(),
                        "euler_number": e.config.euler_number(),
                        "fibers": e.config.to_string(),
                        "rigid": rigidity_check(&e.config).rigid,
                        "surface": serde_json::to_value(e.surface()?)?,
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(json!({ "entries": rows }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("twistfm").chain(args.iter().copied()))
    }

    fn json_of(o: &Outcome) -> Value {
        serde_json::from_str(&o.stdout).unwrap()
    }

    #[test]
    fn construct_eleven() {
        let o = run_args(&[
            "construct",
            "--p",
            "11",
            "--base",
            "persson-III*-I2-I1",
            "--json",
        ]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v = json_of(&o);
        assert_eq!(v["rational"], json!(true));
        assert_eq!(v["lambda"], json!(11));
        assert_eq!(v["canonical_degree"], json!("-1/11"));
        let kinds: Vec<String> = v["fibers"]
            .as_array()
            .unwrap()
            .iter()
            .map(|f| format!("{}x{}", f["kind"].as_str().unwrap(), f["multiplicity"]))
            .collect();
        assert_eq!(kinds, ["III*x1", "I(2)x1", "I(0)x11", "I(1)x1"]);
    }

    #[test]
    fn verify_eleven() {
        let o = run_args(&["verify", "--p", "11", "--n", "2", "--json"]);
        assert_eq!(o.code, 0);
        let v = json_of(&o);
        assert_eq!(v["verdict"], json!("certified"));
        assert_eq!(v["M_min"], json!(2));
        assert_eq!(v["N"], json!(2));
    }

    #[test]
    fn verify_not_prime_is_usage_error() {
        let o = run_args(&["verify", "--p", "12", "--n", "2"]);
        assert_eq!(o.code, 2);
        let err: Value = serde_json::from_str(&o.stderr).unwrap();
        assert_eq!(err["error"], json!("not_prime"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["verify", "--p", "11"]).code, 2);
        assert_eq!(run_args(&["frobnicate"]).code, 2);
        assert_eq!(
            run_args(&["classify", "--p", "11", "--aut-bound", "5"]).code,
            2
        );
        assert_eq!(run_args(&["construct", "--p", "11", "--i", "22"]).code, 2);
        assert_eq!(run_args(&["construct", "--p", "0"]).code, 2);
        assert_eq!(
            run_args(&["construct", "--p", "5", "--base", "/no/such/file.json"]).code,
            2
        );
    }

    #[test]
    fn engine_errors_exit_one() {
        let o = run_args(&["classify", "--p", "5", "--base", "II*-I1-I1", "--json"]);
        assert_eq!(o.code, 1);
        let err: Value = serde_json::from_str(&o.stderr).unwrap();
        assert_eq!(err["error"], json!("not_rigid"));
    }

    #[test]
    fn output_is_deterministic_and_sorted() {
        let a = run_args(&["classify", "--p", "31", "--mode", "inversion", "--json"]);
        let b = run_args(&["classify", "--p", "31", "--mode", "inversion", "--json"]);
        assert_eq!(a, b);
        let v = json_of(&a);
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(a.stdout.starts_with("{\"M_min\":"));
    }

    #[test]
    fn table_output() {
        let o = run_args(&["invariants", "--p", "7"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("canonical_degree"));
        assert!(o.stdout.contains("-1/7"));
        let o = run_args(&["partners", "--p", "5"]);
        assert!(o.stdout.contains("index=4"));
    }

    #[test]
    fn help_exits_zero() {
        let o = run_args(&["--help"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("verify"));
    }
}
