//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for bad input, 2 when a check fails.
//! Arguments starting with `{` are read as JSON, anything else as text.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::bracket::{self, PdCode};
use crate::error::{Error, Result};
use crate::oracle::{self, Arrangement, OracleConfig, DEFAULT_BUDGET};
use crate::oriented::{self, OrientedElement};
use crate::skein::{self, Basis, SkeinElement};
use crate::torus::{IntVec2, UnorientedClass};
use crate::verify::{self, SweepBounds};

#[derive(Parser, Debug)]
#[command(name = "skein", version, about = "Exact products in the skein algebra of the torus")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest crossing count the state sums will attempt.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u32).range(1..=63))]
    budget: u32,
    /// Worker threads; 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Product by the product-to-sum rule.
    Mul {
        #[arg(long, default_value = "standard")]
        basis: Basis,
        x: String,
        y: String,
    },
    /// Product by superposition and smoothing.
    OracleMul {
        x: String,
        y: String,
        /// Write one line per smoothing state to this file.
        #[arg(long)]
        dump_states: Option<PathBuf>,
    },
    /// Oriented product, by the monomial rule and by the oracle.
    GammaMul { x: String, y: String },
    /// Expands `(a,b)_T` in the standard basis.
    Cheb { class: String },
    /// Rewrites an element in the given basis.
    Convert {
        #[arg(long, default_value = "chebyshev")]
        basis: Basis,
        x: String,
    },
    /// Sum over all orientations.
    Psi {
        #[arg(long, default_value = "standard")]
        basis: Basis,
        x: String,
    },
    /// Inverse of `psi` on orientation-symmetric elements.
    PsiInv {
        #[arg(long, default_value = "chebyshev")]
        basis: Basis,
        x: String,
    },
    /// Kauffman bracket of a planar diagram.
    Bracket {
        /// `X(i,j,k,l) ...` with optional `O` for free loops, or JSON.
        #[arg(long)]
        pd: String,
    },
    /// Sweeps all class pairs in a box and compares fast and oracle products.
    Verify {
        #[arg(long, default_value_t = 3)]
        max_coord: u32,
        #[arg(long, default_value_t = 10)]
        max_det: u32,
        #[arg(long, default_value_t = 3)]
        max_multiplicity: u32,
    },
}

/// Runs the tool on `args` (including the program name) with the process
/// streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::CheckFailed(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            2
        }
        Err(e @ Error::Internal(_)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

enum Outcome {
    Ok,
    CheckFailed(String),
}

fn parse_json(s: &str) -> Result<Option<Value>> {
    if s.trim_start().starts_with('{') {
        serde_json::from_str(s)
            .map(Some)
            .map_err(|e| Error::Json(e.to_string()))
    } else {
        Ok(None)
    }
}

fn read_skein(s: &str, basis: Basis) -> Result<SkeinElement> {
    match parse_json(s)? {
        Some(v) => SkeinElement::from_json(&v),
        None => SkeinElement::parse(s, basis),
    }
}

/// Oriented input: JSON, `g(a,b)` sums, or a bare `(a,b)` for `γ_{a,b}`.
fn read_oriented(s: &str) -> Result<OrientedElement> {
    if let Some(v) = parse_json(s)? {
        return OrientedElement::from_json(&v);
    }
    match s.parse::<IntVec2>() {
        Ok(v) => Ok(OrientedElement::gamma(v)),
        Err(_) => OrientedElement::parse(s),
    }
}

fn read_vec(s: &str) -> Result<IntVec2> {
    match parse_json(s)? {
        Some(v) => IntVec2::from_json(&v),
        None => s.trim().trim_end_matches("_T").parse(),
    }
}

fn emit(out: &mut dyn Write, json: bool, text: impl ToString, value: impl FnOnce() -> Value) -> Result<()> {
    let line = if json { value().to_string() } else { text.to_string() };
    writeln!(out, "{line}").map_err(|e| Error::Internal(e.to_string()))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    let g = &cli.global;
    let config = OracleConfig {
        budget: g.budget,
        workers: g.workers,
    };
    match &cli.command {
        Command::Mul { basis, x, y } => {
            let x = read_skein(x, *basis)?.in_basis(*basis)?;
            let y = read_skein(y, *basis)?.in_basis(*basis)?;
            let r = match basis {
                Basis::Standard => skein::mul(&x, &y)?,
                Basis::ChebyshevT => skein::mul_t(&x, &y)?,
            };
            emit(out, g.json, &r, || r.to_json())?;
        }
        Command::OracleMul { x, y, dump_states } => {
            let x = read_skein(x, Basis::Standard)?.in_basis(Basis::Standard)?;
            let y = read_skein(y, Basis::Standard)?.in_basis(Basis::Standard)?;
            let mut dump = match dump_states {
                Some(p) => Some(BufWriter::new(
                    File::create(p).map_err(|e| Error::Json(format!("{}: {e}", p.display())))?,
                )),
                None => None,
            };
            let mut r = SkeinElement::zero(Basis::Standard);
            for (cx, px) in x.terms() {
                for (cy, py) in y.terms() {
                    let prod = oracle::unoriented_product(cx, cy, &config)?;
                    r.add_assign(&prod.scale(&(px * py)));
                    if let Some(w) = dump.as_mut() {
                        dump_pair(cx, cy, &config, w)?;
                    }
                }
            }
            if let Some(mut w) = dump {
                w.flush().map_err(|e| Error::Internal(e.to_string()))?;
            }
            emit(out, g.json, &r, || r.to_json())?;
        }
        Command::GammaMul { x, y } => {
            let x = read_oriented(x)?;
            let y = read_oriented(y)?;
            let fast = oriented::mul(&x, &y);
            let mut slow = OrientedElement::zero();
            for (u, cu) in x.terms() {
                for (v, cv) in y.terms() {
                    let p = oracle::oriented_product(u, v, &config)?;
                    slow.add_assign(&p.scale(&(cu * cv)));
                }
            }
            if fast != slow {
                return Ok(Outcome::CheckFailed(format!(
                    "monomial rule gives {fast}, oracle gives {slow}"
                )));
            }
            emit(out, g.json, &fast, || fast.to_json())?;
        }
        Command::Cheb { class } => {
            let r = skein::chebyshev_of(read_vec(class)?);
            emit(out, g.json, &r, || r.to_json())?;
        }
        Command::Convert { basis, x } => {
            let r = read_skein(x, basis.other())?.in_basis(*basis)?;
            emit(out, g.json, &r, || r.to_json())?;
        }
        Command::Psi { basis, x } => {
            let x = read_skein(x, *basis)?;
            let r = match x.basis() {
                Basis::Standard => oriented::psi(&x)?,
                Basis::ChebyshevT => oriented::psi_t(&x)?,
            };
            emit(out, g.json, &r, || r.to_json())?;
        }
        Command::PsiInv { basis, x } => {
            let r = oriented::psi_inverse(&read_oriented(x)?)?.in_basis(*basis)?;
            emit(out, g.json, &r, || r.to_json())?;
        }
        Command::Bracket { pd } => {
            let d = match parse_json(pd)? {
                Some(v) => PdCode::from_json(&v)?,
                None => PdCode::parse(pd)?,
            };
            let r = bracket::kauffman_bracket_with_budget(&d, g.budget)?;
            emit(out, g.json, &r, || r.to_json())?;
        }
        Command::Verify {
            max_coord,
            max_det,
            max_multiplicity,
        } => {
            let bounds = SweepBounds {
                max_coord: *max_coord,
                max_det: *max_det,
                max_multiplicity: *max_multiplicity,
            };
            let report = verify::run(&bounds, &config)?;
            emit(out, g.json, &report, || {
                json!({
                    "passed": report.passed(),
                    "checks": report.checks.iter()
                        .map(|c| json!({"name": c.name, "cases": c.cases}))
                        .collect::<Vec<_>>(),
                    "failure": report.failure.as_ref()
                        .map(|f| json!({"check": f.check, "detail": f.detail})),
                })
            })?;
            if let Some(f) = report.failure {
                return Ok(Outcome::CheckFailed(format!("{}: {}", f.check, f.detail)));
            }
        }
    }
    Ok(Outcome::Ok)
}

fn dump_pair(
    x: UnorientedClass,
    y: UnorientedClass,
    config: &OracleConfig,
    w: &mut dyn Write,
) -> Result<()> {
    let io = |e: io::Error| Error::Internal(e.to_string());
    writeln!(w, "# {x} * {y}").map_err(io)?;
    if let (UnorientedClass::Curve(u), UnorientedClass::Curve(v)) = (x, y) {
        if crate::torus::det2(u, v) != 0 {
            let arr = Arrangement::build(u, v, config.budget)?;
            oracle::dump_states(&arr, w)?;
        }
    }
    Ok(())
}
