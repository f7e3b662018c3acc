//! The `domdim` command line.
//!
//! Exit codes: 0 success, 1 a reproduced value differs from its stored
//! expectation, 2 invalid input or a failed check, 3 inconclusive (a cap was
//! reached or a decomposition could not be decided).

use crate::algebra::Algebra;
use crate::domdim::{
    default_cap, domdim_algebra, domdim_module, endo_algebra, global_gradient, injective_profile, is_morita,
    is_self_injective, is_tilting, muller_domdim, prinj_projective_classes, TiltingFailure,
};
use crate::error::{Error, Result};
use crate::exactla::Rational;
use crate::io::{load_algebra, load_module};
use crate::report::Report;
use crate::repro::{repro_linear_quiver, repro_liu_schulz};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Debug, Parser)]
#[command(name = "domdim", version, about = "Dominant dimensions, tilting modules and gradients of finite-dimensional algebras")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Resolution length cap; overrides ALG_CAP and the default of twice the algebra dimension.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension, Cartan matrix, dominant dimension and Morita test of an algebra.
    Inspect { algebra: PathBuf },
    /// Dominant dimension of an algebra, or of a module over it.
    Domdim {
        algebra: PathBuf,
        #[arg(long)]
        module: Option<PathBuf>,
    },
    /// Tilting module checks.
    Tilting {
        #[command(subcommand)]
        command: TiltingCommand,
    },
    /// The gradient of a tilting module at each indecomposable projective.
    Gradient { algebra: PathBuf, tilting: PathBuf },
    /// The endomorphism algebra of a module.
    Endo {
        algebra: PathBuf,
        module: PathBuf,
        #[arg(long)]
        cartan: bool,
    },
    /// Recompute stored reference values.
    Repro {
        #[command(subcommand)]
        command: ReproCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum TiltingCommand {
    /// Decide whether a module is tilting.
    Check { algebra: PathBuf, module: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum ReproCommand {
    /// The local Liu–Schulz algebra and the modules `I_j`.
    LiuSchulz {
        #[arg(long, default_value = "2")]
        q: String,
    },
    /// The linear quiver with radical square zero and its canonical tilting modules.
    LinearQuiver {
        #[arg(long)]
        n: usize,
    },
}

/// The cap to use: `--cap`, then `ALG_CAP`, then `None` (the per-algebra default).
fn requested_cap(flag: Option<usize>) -> Result<Option<usize>> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var("ALG_CAP") {
        Ok(s) => s.trim().parse().map(Some).map_err(|_| Error::Parse(format!("ALG_CAP={s} is not a number"))),
        Err(_) => Ok(None),
    }
}

struct Ctx {
    cap: Option<usize>,
}

impl Ctx {
    fn cap(&self, a: &Algebra) -> usize {
        self.cap.unwrap_or_else(|| default_cap(a))
    }
}

fn hashed(rep: &mut Report, path: &Path) -> Result<()> {
    let bytes = std::fs::read(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    rep.input(path.display().to_string(), &bytes);
    Ok(())
}

fn algebra_input(rep: &mut Report, path: &Path) -> Result<Arc<Algebra>> {
    hashed(rep, path)?;
    let a = load_algebra(path)?;
    let v = a.validate();
    if !v.is_valid() {
        return Err(Error::InvalidAlgebra(v.failures.join("; ")));
    }
    Ok(a)
}

fn module_input(rep: &mut Report, path: &Path, a: &Arc<Algebra>) -> Result<crate::modrep::Module> {
    hashed(rep, path)?;
    let m = load_module(path, Some(a))?;
    m.validate()?;
    Ok(m)
}

fn failure_json(f: &TiltingFailure) -> Value {
    match f {
        TiltingFailure::SelfExtension { degree, dim } => json!({"kind": "self_extension", "degree": degree, "dim": dim}),
        TiltingFailure::NotMono { step } => json!({"kind": "not_mono", "step": step}),
        TiltingFailure::TooLong => json!({"kind": "too_long"}),
    }
}

/// A computation outcome: the report and whether it passed its own checks.
struct Outcome {
    report: Report,
    code: i32,
}

fn inspect(ctx: &Ctx, path: &Path) -> Result<Outcome> {
    let mut rep = Report::new("inspect");
    hashed(&mut rep, path)?;
    let a = load_algebra(path)?;
    let v = a.validate();
    rep.set("field", a.field().to_string());
    rep.set("dim", a.dim());
    rep.set("idempotents", a.num_idempotents());
    if !v.is_valid() {
        rep.set("valid", false);
        rep.set("failures", &v.failures);
        return Ok(Outcome { report: rep, code: EXIT_INVALID });
    }
    rep.set("valid", true);
    let cap = ctx.cap(&a);
    rep.set("radical_dim", a.radical()?.dim());
    rep.set("cartan", a.cartan_matrix());
    rep.set("projective_classes", a.class_reps()?.len());
    rep.set("prinj_projective_classes", prinj_projective_classes(&a)?);
    rep.set("self_injective", is_self_injective(&a)?);
    rep.set("dm", domdim_algebra(&a, cap)?);
    rep.set("morita", is_morita(&a, cap)?);
    Ok(Outcome { report: rep, code: EXIT_OK })
}

fn domdim_cmd(ctx: &Ctx, path: &Path, module: Option<&Path>) -> Result<Outcome> {
    let mut rep = Report::new(if module.is_some() { "domdim --module" } else { "domdim" });
    let a = algebra_input(&mut rep, path)?;
    let cap = ctx.cap(&a);
    rep.set("cap", cap);
    match module {
        Some(mp) => {
            let m = module_input(&mut rep, mp, &a)?;
            let dm = domdim_module(&m, cap)?;
            let len = dm.finite().map_or(cap, |d| d + 1).min(cap);
            rep.set("dm", dm);
            rep.set("module_dim", m.dim());
            rep.set("injective_resolution_socles", injective_profile(&m, len)?);
        }
        None => {
            rep.set("dm", domdim_algebra(&a, cap)?);
            rep.set("dm_opposite", domdim_algebra(&a.opposite(), cap)?);
            match muller_domdim(&a, cap) {
                Ok(d) => rep.set("dm_muller", d),
                Err(Error::CornerUnavailable) => rep.set("dm_muller", Value::Null),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(Outcome { report: rep, code: EXIT_OK })
}

fn tilting_check(ctx: &Ctx, path: &Path, mp: &Path) -> Result<Outcome> {
    let mut rep = Report::new("tilting check");
    let a = algebra_input(&mut rep, path)?;
    let t = module_input(&mut rep, mp, &a)?;
    let tr = is_tilting(&a, &t, ctx.cap(&a))?;
    rep.set("is_tilting", tr.is_tilting);
    rep.set("pd", tr.pd);
    rep.set("self_orthogonality_checked_to", tr.selforth_checked_to);
    rep.set("coresolution_dims", tr.coresolution.iter().map(|m| m.dim()).collect::<Vec<_>>());
    rep.set("failure", tr.failure.as_ref().map(failure_json));
    let code = if tr.is_tilting { EXIT_OK } else { EXIT_INVALID };
    Ok(Outcome { report: rep, code })
}

fn gradient_cmd(ctx: &Ctx, path: &Path, tp: &Path) -> Result<Outcome> {
    let mut rep = Report::new("gradient");
    let a = algebra_input(&mut rep, path)?;
    let t = module_input(&mut rep, tp, &a)?;
    let cap = ctx.cap(&a);
    let tr = is_tilting(&a, &t, cap)?;
    if !tr.is_tilting {
        rep.set("is_tilting", false);
        rep.set("failure", tr.failure.as_ref().map(failure_json));
        return Ok(Outcome { report: rep, code: EXIT_INVALID });
    }
    let g = global_gradient(&a, &t, cap)?;
    rep.set("is_tilting", true);
    rep.set(
        "per_projective",
        g.per_projective.iter().map(|(c, d)| json!({"class": c, "gradient": d})).collect::<Vec<_>>(),
    );
    rep.set("global", g.global);
    rep.set("heart_classes", &g.heart_classes);
    Ok(Outcome { report: rep, code: EXIT_OK })
}

fn endo_cmd(ctx: &Ctx, path: &Path, mp: &Path, cartan: bool) -> Result<Outcome> {
    let mut rep = Report::new(if cartan { "endo --cartan" } else { "endo" });
    let a = algebra_input(&mut rep, path)?;
    let m = module_input(&mut rep, mp, &a)?;
    let b = endo_algebra(&m)?;
    rep.set("dim", b.dim());
    rep.set("summand_dims", b.objects.iter().map(|o| o.dim()).collect::<Vec<_>>());
    if cartan {
        rep.set("cartan", b.algebra.cartan_matrix());
    }
    rep.set("dm", domdim_algebra(&b.algebra, ctx.cap.unwrap_or_else(|| default_cap(&b.algebra)))?);
    Ok(Outcome { report: rep, code: EXIT_OK })
}

fn repro(ctx: &Ctx, cmd: &ReproCommand) -> Result<Outcome> {
    let report = match cmd {
        ReproCommand::LiuSchulz { q } => {
            let q = Rational::parse(q.trim()).ok_or_else(|| Error::Parse(format!("--q {q} is not a rational number")))?;
            repro_liu_schulz(&q, ctx.cap)?
        }
        ReproCommand::LinearQuiver { n } => repro_linear_quiver(*n, ctx.cap)?,
    };
    let code = if report.all_checks_pass() { EXIT_OK } else { EXIT_MISMATCH };
    Ok(Outcome { report, code })
}

fn has_lower_bound(v: &Value) -> bool {
    match v {
        Value::Object(m) => m.get("kind") == Some(&json!("at_least")) || m.values().any(has_lower_bound),
        Value::Array(xs) => xs.iter().any(has_lower_bound),
        _ => false,
    }
}

fn dispatch(ctx: &Ctx, cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Inspect { algebra } => inspect(ctx, algebra),
        Command::Domdim { algebra, module } => domdim_cmd(ctx, algebra, module.as_deref()),
        Command::Tilting { command: TiltingCommand::Check { algebra, module } } => tilting_check(ctx, algebra, module),
        Command::Gradient { algebra, tilting } => gradient_cmd(ctx, algebra, tilting),
        Command::Endo { algebra, module, cartan } => endo_cmd(ctx, algebra, module, *cartan),
        Command::Repro { command } => repro(ctx, command),
    }
}

/// Runs the command line `argv` (including the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_INVALID
                }
            };
        }
    };
    let cap = match requested_cap(cli.cap) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INVALID;
        }
    };
    let start = Instant::now();
    match dispatch(&Ctx { cap }, &cli.command) {
        Ok(Outcome { mut report, mut code }) => {
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_millis() as u64);
            }
            if code == EXIT_OK && report.results.values().any(has_lower_bound) {
                code = EXIT_INCONCLUSIVE;
            }
            let text = match cli.format {
                Format::Json => report.to_json(),
                Format::Markdown => report.to_markdown(),
            };
            let _ = write!(out, "{text}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_inconclusive() {
                EXIT_INCONCLUSIVE
            } else {
                EXIT_INVALID
            }
        }
    }
}

/// Entry point used by the binary.
pub fn cli_main() -> i32 {
    let argv: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(&argv, &mut stdout.lock(), &mut stderr.lock())
}

