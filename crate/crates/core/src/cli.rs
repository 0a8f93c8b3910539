//! Command-line front end: `semigroup-diffops <command> [gens…] [flags]`.
//!
//! Exit codes: 0 on success, 2 for usage or input errors, 1 when an internal
//! invariant or a `--verify` cross-check fails.

use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::ideals::PlaneIdeal;
use crate::overrings::class_count;
use crate::report::{
    decomposition_text, operator_table, overring_text, staircase_svg, staircase_text, Report,
};
use crate::semigroup::NumericalSemigroup;
use crate::sigma::{PlanePoint, SigmaMonoid};
use crate::verify;
use crate::weyl::WeylOperator;

#[derive(Debug, Parser)]
#[command(
    name = "semigroup-diffops",
    version,
    about = "Differential operators on numerical semigroup rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Generators of the semigroup
    #[arg(required = true, allow_negative_numbers = true)]
    gens: Vec<i64>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Run the brute-force cross-checks and fail on any mismatch
    #[arg(long)]
    verify: bool,
    /// Side of the square window used by the checks
    #[arg(long = "box", value_name = "N")]
    window: Option<u32>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariants of S and Σ, optionally with more sections
    Analyze {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        blowup_chain: bool,
        #[arg(long)]
        operators: bool,
        #[arg(long)]
        overrings: bool,
    },
    /// Σ: minimal generators, gaps and T(Σ)
    Sigma {
        #[command(flatten)]
        common: Common,
    },
    /// Generators of D(C[S]) with their symbols
    Operators {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        unicode: bool,
        /// Check whether an operator maps C[S] into itself
        #[arg(long, value_name = "EXPR")]
        check: Option<String>,
    },
    /// Irreducible decomposition of the ideal generated by points a,b
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(last = true, required = true, value_name = "A,B")]
        points: Vec<String>,
    },
    /// Overrings, ideal class fibers and the bijection verdict
    Overrings {
        #[command(flatten)]
        common: Common,
    },
    /// Picture of Σ near the origin
    Staircase {
        #[arg(required = true, allow_negative_numbers = true)]
        gens: Vec<i64>,
        #[arg(long, default_value_t = 12, allow_negative_numbers = true)]
        width: i64,
        #[arg(long, default_value_t = 12, allow_negative_numbers = true)]
        height: i64,
        #[arg(long)]
        svg: bool,
    },
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Invariant(_) => 1,
        _ => 2,
    }
}

fn semigroup(gens: &[i64]) -> Result<NumericalSemigroup> {
    NumericalSemigroup::from_generators(gens)
}

fn parse_point(text: &str) -> Result<PlanePoint> {
    let bad = || Error::Parse(format!("expected a point a,b but got {text:?}"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    Ok(PlanePoint::new(a, b))
}

fn emit(report: &Report, json: bool) -> String {
    if json {
        let mut text = report.to_json();
        text.push('\n');
        text
    } else {
        report.to_text()
    }
}

fn check_sigma(s: &NumericalSemigroup, window: Option<u32>) -> Result<()> {
    let sigma = SigmaMonoid::new(s);
    verify::check_sigma(
        &sigma,
        window.unwrap_or_else(|| verify::default_window(&sigma)),
    )
}

fn dispatch(command: Command) -> Result<String> {
    match command {
        Command::Analyze {
            common,
            blowup_chain,
            operators,
            overrings,
        } => {
            let s = semigroup(&common.gens)?;
            let mut report = Report::new(&s, &common.gens);
            if blowup_chain {
                report = report.with_blowup_chain(&s);
            }
            if operators {
                report = report.with_operators(&s)?;
            }
            if overrings {
                report = report.with_overrings(&s);
            }
            report.check_consistency()?;
            if common.verify {
                check_sigma(&s, common.window)?;
                if operators {
                    verify::check_operators(&SigmaMonoid::new(&s))?;
                }
                if overrings {
                    check_overrings(&s, &report)?;
                }
            }
            Ok(emit(&report, common.json))
        }
        Command::Sigma { common } => {
            let s = semigroup(&common.gens)?;
            let report = Report::new(&s, &common.gens);
            report.check_consistency()?;
            if common.verify {
                check_sigma(&s, common.window)?;
            }
            if common.json {
                return Ok(emit(&report, true));
            }
            let sig = &report.sigma;
            let mut text = format!(
                "Σ for <{}>: mu = {}\n",
                join(&report.semigroup.generators),
                sig.mu
            );
            text += &format!("generators: {}\n", join(&sig.minimal_generators));
            text += &format!("gaps ({}): {}\n", sig.gaps.len(), join(&sig.gaps));
            if !s.is_full() {
                text += &format!("T(Σ) ({}): {}\n", sig.t_sigma.len(), join(&sig.t_sigma));
            }
            Ok(text)
        }
        Command::Operators {
            common,
            unicode,
            check,
        } => {
            let s = semigroup(&common.gens)?;
            let report = Report::new(&s, &common.gens).with_operators(&s)?;
            if common.verify {
                verify::check_operators(&SigmaMonoid::new(&s))?;
            }
            let mut text = if common.json {
                emit(&report, true)
            } else {
                let rows = report.operators.as_deref().unwrap_or_default();
                format!(
                    "Generators of D(C[S]) for S = {}:\n{}",
                    s,
                    operator_table(rows, unicode)
                )
            };
            if let Some(expr) = check {
                let op: WeylOperator = expr.parse()?;
                let verdict = if op.preserves_semigroup_ring(&s) {
                    "preserves"
                } else {
                    "does not preserve"
                };
                let shown = if unicode {
                    op.to_unicode()
                } else {
                    op.to_string()
                };
                text += &format!("{shown} {verdict} C[S]\n");
            }
            Ok(text)
        }
        Command::Decompose { common, points } => {
            let s = semigroup(&common.gens)?;
            let points = points
                .iter()
                .flat_map(|p| p.split_whitespace().map(str::to_owned).collect::<Vec<_>>())
                .map(|p| parse_point(&p))
                .collect::<Result<Vec<_>>>()?;
            let report =
                Report::new(&s, &common.gens).with_decomposition(&s, &points, common.window)?;
            report.check_consistency()?;
            let d = report
                .decomposition
                .as_ref()
                .expect("decomposition was computed");
            if common.verify {
                check_sigma(&s, None)?;
                let sigma = SigmaMonoid::new(&s);
                let ideal = PlaneIdeal::new(&sigma, &points)?;
                verify::check_decomposition(&ideal, &d.components, 2 * d.window)?;
            }
            Ok(if common.json {
                emit(&report, true)
            } else {
                decomposition_text(d)
            })
        }
        Command::Overrings { common } => {
            let s = semigroup(&common.gens)?;
            let report = Report::new(&s, &common.gens).with_overrings(&s);
            if common.verify {
                check_overrings(&s, &report)?;
            }
            let o = report.overrings.as_ref().expect("overrings were computed");
            Ok(if common.json {
                emit(&report, true)
            } else {
                overring_text(o)
            })
        }
        Command::Staircase {
            gens,
            width,
            height,
            svg,
        } => {
            let s = semigroup(&gens)?;
            let dim = |v: i64, name: &str| {
                u32::try_from(v)
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| Error::Parse(format!("{name} must be positive, got {v}")))
            };
            let (w, h) = (dim(width, "width")?, dim(height, "height")?);
            let sigma = SigmaMonoid::new(&s);
            Ok(if svg {
                staircase_svg(&sigma, w, h)
            } else {
                staircase_text(&sigma, w, h)
            })
        }
    }
}

fn check_overrings(s: &NumericalSemigroup, report: &Report) -> Result<()> {
    let o = report.overrings.as_ref().expect("overrings were computed");
    if o.class_count != class_count(s) {
        return Err(Error::Invariant(
            "fibers do not partition the ideal classes".into(),
        ));
    }
    if !o.bijection.consistent() {
        return Err(Error::Invariant(format!(
            "bijection conditions disagree: {:?}",
            o.bijection
        )));
    }
    Ok(())
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
