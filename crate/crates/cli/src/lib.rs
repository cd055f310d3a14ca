//! The `kac` command line: algebra and module queries plus verification suites.

pub mod config;
pub mod report;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use kac_core::algebra::{parse_algebra, LieSuperalgebra, Parity};
use kac_core::analysis::{is_simple, simple_top_of_kac, OracleConfig, Verdict, DEFAULT_SEED};
use kac_core::induction::{coinduced_module, kac_module, opposite_kac_module, Convention, Side};
use kac_core::linalg::format_rational;
use kac_core::module::{simple_g0_module, FinDimModule};
use kac_core::roots::{
    atypicality_product, format_weight, is_typical, parse_weight, root_data, Weight,
};
use kac_core::uea::{central_scalar, omega};

use config::{Grid, OutputFormat, Settings, Suite, SuiteConfig, DEFAULT_MAX_DIM};
use report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "kac",
    version,
    about = "Kac modules over type-I Lie superalgebras, in exact arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    output: Option<OutputFormat>,
    /// Seed for the randomized parts of the oracles.
    #[arg(long, global = true, env = "KAC_SEED")]
    seed: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Basis, grading and optionally the structure checks of an algebra.
    Algebra {
        spec: String,
        #[arg(long)]
        check: bool,
    },
    /// Roots, the Weyl vector and 2ρ₁.
    Roots { spec: String },
    /// Typicality of a weight.
    Typical {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// The element Ω of U(g₀), optionally its scalar on V(λ).
    Omega {
        spec: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Kac and opposite Kac modules.
    Kac {
        #[command(subcommand)]
        which: KacCommand,
    },
    /// Coinduced modules.
    Coind {
        #[command(flatten)]
        target: ModuleArgs,
        #[arg(long, value_enum, default_value = "ge0")]
        side: SideArg,
        #[arg(long, value_enum, default_value = "super")]
        convention: ConventionArg,
    },
    /// Simplicity oracle on K(V), K′(V) or a module read from a descriptor.
    Simple {
        spec: Option<String>,
        #[arg(allow_hyphen_values = true)]
        weight: Option<String>,
        #[arg(long)]
        opposite: bool,
        /// JSON module descriptor to test instead.
        #[arg(long, conflicts_with_all = ["spec", "weight", "opposite"])]
        module: Option<PathBuf>,
    },
    /// The simple top L(V) of K(V).
    Top {
        #[command(flatten)]
        target: ModuleArgs,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum KacCommand {
    /// K(V) induced from g≥0.
    Build {
        #[command(flatten)]
        target: ModuleArgs,
    },
    /// K′(V) induced from g≤0.
    Oppo {
        #[command(flatten)]
        target: ModuleArgs,
    },
}

#[derive(Args, Debug)]
struct ModuleArgs {
    spec: String,
    /// Highest weight of V, e.g. `1,0|2`.
    #[arg(allow_hyphen_values = true)]
    weight: String,
    /// Make the highest weight vector of V odd.
    #[arg(long)]
    odd: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    suite: Option<Suite>,
    #[arg(long)]
    algebra: Option<String>,
    /// Coordinate range of the weight grid, e.g. `-3..3`.
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    #[arg(long)]
    max_dim: Option<usize>,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Ge0,
    Le0,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConventionArg {
    Super,
    Usual,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<kac_core::Error> for Failure {
    fn from(e: kac_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

struct Context<'a> {
    out: &'a mut dyn Write,
    format: OutputFormat,
    seed: u64,
}

impl Context<'_> {
    fn emit(&mut self, text: &str, value: serde_json::Value) -> std::io::Result<()> {
        match self.format {
            OutputFormat::Text => write!(self.out, "{text}"),
            OutputFormat::Json => writeln!(
                self.out,
                "{}",
                serde_json::to_string_pretty(&value).expect("json")
            ),
        }
    }
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            EXIT_FAILED
        }
    }
}

fn algebra(spec: &str) -> std::result::Result<Arc<LieSuperalgebra>, Failure> {
    parse_algebra(spec).map_err(|e| Failure::Usage(format!("unknown algebra {spec:?}: {e}")))
}

fn weight(g: &LieSuperalgebra, text: &str) -> std::result::Result<Weight, Failure> {
    parse_weight(g, text).map_err(|e| Failure::Usage(format!("malformed weight {text:?}: {e}")))
}

fn g0_module(
    args: &ModuleArgs,
) -> std::result::Result<(Arc<LieSuperalgebra>, Weight, FinDimModule), Failure> {
    let g = algebra(&args.spec)?;
    let lambda = weight(&g, &args.weight)?;
    let parity = if args.odd { Parity::Odd } else { Parity::Even };
    let v = simple_g0_module(&g, &lambda, parity)?;
    Ok((g, lambda, v))
}

fn describe_module(name: &str, m: &FinDimModule) -> String {
    let g = m.algebra();
    let mut text = format!("{name}: dim {}\n", m.dim());
    let even = m.parities().iter().filter(|p| **p == Parity::Even).count();
    text.push_str(&format!(
        "  parities: {even} even, {} odd\n",
        m.dim() - even
    ));
    if let Some(ws) = m.weights() {
        for (k, w) in ws.iter().enumerate() {
            let z = m
                .zdegrees()
                .map(|z| format!(" degree {}", z[k]))
                .unwrap_or_default();
            text.push_str(&format!(
                "  {k}: {} {}{z}\n",
                format_weight(g, w),
                m.parity(k)
            ));
        }
    }
    text
}

fn emit_module(ctx: &mut Context, name: &str, m: &FinDimModule) -> Outcome {
    match ctx.format {
        OutputFormat::Text => write!(ctx.out, "{}", describe_module(name, m)),
        OutputFormat::Json => writeln!(ctx.out, "{}", m.to_json()),
    }
    .map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(EXIT_OK)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Outcome {
    let mut ctx = Context {
        out,
        format: cli.output.unwrap_or_default(),
        seed: cli.seed.unwrap_or(DEFAULT_SEED),
    };
    let io = |e: std::io::Error| Failure::Usage(e.to_string());
    match cli.command {
        Command::Algebra { spec, check } => {
            let g = algebra(&spec)?;
            let mut text = format!("{}: dim {}, rank {}\n", g.spec(), g.dim(), g.rank());
            let mut layers = Vec::new();
            for k in [-1i8, 0, 1] {
                let labels: Vec<&str> = g
                    .indices_of_degree(k)
                    .into_iter()
                    .map(|i| g.label(i))
                    .collect();
                text.push_str(&format!("  g_{k}: {}\n", labels.join(", ")));
                layers.push(json!({"degree": k, "basis": labels}));
            }
            let mut value = json!({"algebra": g.spec().to_string(), "dim": g.dim(), "rank": g.rank(), "layers": layers});
            let mut clean = true;
            if check {
                let r = g.check_structure();
                clean = r.is_clean();
                text.push_str(&format!(
                    "structure: {} triples, {} jacobi, {} grading, {} odd-square, {} operator failures\n",
                    r.triples_checked, r.jacobi_failures, r.grading_failures, r.odd_square_failures, r.operator_failures
                ));
                value["structure"] = json!({
                    "triples_checked": r.triples_checked,
                    "jacobi_failures": r.jacobi_failures,
                    "grading_failures": r.grading_failures,
                    "odd_square_failures": r.odd_square_failures,
                    "operator_failures": r.operator_failures,
                    "clean": clean,
                });
            }
            ctx.emit(&text, value).map_err(io)?;
            Ok(if clean { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Roots { spec } => {
            let g = algebra(&spec)?;
            let data = root_data(&g)?;
            let fmt = |ws: Vec<&Weight>| {
                ws.into_iter()
                    .map(|w| format_weight(&g, w))
                    .collect::<Vec<_>>()
            };
            let even = fmt(data.positive(Parity::Even).map(|r| &r.weight).collect());
            let odd = fmt(data.positive(Parity::Odd).map(|r| &r.weight).collect());
            let rho = format_weight(&g, &data.rho);
            let rho1 = format_weight(&g, &data.rho1_doubled);
            let text = format!(
                "even positive roots: {}\nodd positive roots: {}\nrho: {rho}\n2rho_1: {rho1}\n",
                even.join("  "),
                odd.join("  ")
            );
            let value = json!({"algebra": g.spec().to_string(), "even_positive": even, "odd_positive": odd, "rho": rho, "two_rho_one": rho1});
            ctx.emit(&text, value).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Typical { spec, weight: w } => {
            let g = algebra(&spec)?;
            let lambda = weight(&g, &w)?;
            let typical = is_typical(&g, &lambda)?;
            let product = format_rational(&atypicality_product(&g, &lambda)?);
            let text = format!("typical: {typical}\nproduct: {product}\n");
            ctx.emit(&text, json!({"weight": format_weight(&g, &lambda), "typical": typical, "product": product}))
                .map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Omega { spec, weight: w } => {
            let g = algebra(&spec)?;
            let z = omega(&g)?;
            let mut text = format!("{}\n", z.format(&g));
            let mut value = json!({"algebra": g.spec().to_string(), "omega": z.format(&g)});
            if let Some(w) = w {
                let lambda = weight(&g, &w)?;
                let v = simple_g0_module(&g, &lambda, Parity::Even)?;
                let matrix = z.action_matrix(&v)?;
                let rows: Vec<Vec<String>> = matrix
                    .to_dense()
                    .iter()
                    .map(|r| r.iter().map(format_rational).collect())
                    .collect();
                text.push_str(&format!(
                    "on V({}), dim {}:\n",
                    format_weight(&g, &lambda),
                    v.dim()
                ));
                for r in &rows {
                    text.push_str(&format!("  [{}]\n", r.join(" ")));
                }
                let scalar = central_scalar(&z, &v).ok().map(|c| format_rational(&c));
                if let Some(c) = &scalar {
                    text.push_str(&format!("scalar: {c}\n"));
                }
                value["matrix"] = json!(rows);
                value["scalar"] = json!(scalar);
            }
            ctx.emit(&text, value).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Kac { which } => match which {
            KacCommand::Build { target } => {
                let (g, _, v) = g0_module(&target)?;
                emit_module(&mut ctx, "K(V)", &kac_module(&g, &v)?)
            }
            KacCommand::Oppo { target } => {
                let (g, _, v) = g0_module(&target)?;
                emit_module(&mut ctx, "K′(V)", &opposite_kac_module(&g, &v)?)
            }
        },
        Command::Coind {
            target,
            side,
            convention,
        } => {
            let (g, _, v) = g0_module(&target)?;
            let side = match side {
                SideArg::Ge0 => Side::NonNegative,
                SideArg::Le0 => Side::NonPositive,
            };
            let convention = match convention {
                ConventionArg::Super => Convention::Super,
                ConventionArg::Usual => Convention::Usual,
            };
            emit_module(
                &mut ctx,
                "Coind(V)",
                &coinduced_module(&g, &v, side, convention)?,
            )
        }
        Command::Simple {
            spec,
            weight: w,
            opposite,
            module,
        } => {
            let m = match (module, spec, w) {
                (Some(path), _, _) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| {
                        Failure::Usage(format!("cannot read {}: {e}", path.display()))
                    })?;
                    FinDimModule::from_json(&text)?
                }
                (None, Some(spec), Some(w)) => {
                    let g = algebra(&spec)?;
                    let v = simple_g0_module(&g, &weight(&g, &w)?, Parity::Even)?;
                    if opposite {
                        opposite_kac_module(&g, &v)?
                    } else {
                        kac_module(&g, &v)?
                    }
                }
                _ => {
                    return Err(Failure::Usage(
                        "give an algebra and a weight, or --module".into(),
                    ))
                }
            };
            let cert = is_simple(&m, &OracleConfig::with_seed(ctx.seed));
            let verdict = serde_json::to_value(cert.verdict).expect("verdict");
            let verdict = verdict.as_str().unwrap_or_default().to_string();
            let witness = cert.witness.as_ref().map(ToString::to_string);
            let text = format!(
                "dim: {}\nverdict: {verdict}\n{}",
                m.dim(),
                witness
                    .as_ref()
                    .map(|w| format!("witness: {w}\n"))
                    .unwrap_or_default()
            );
            ctx.emit(
                &text,
                json!({"dim": m.dim(), "verdict": verdict, "witness": witness}),
            )
            .map_err(io)?;
            Ok(if cert.verdict == Verdict::Inconclusive {
                EXIT_FAILED
            } else {
                EXIT_OK
            })
        }
        Command::Top { target } => {
            let (g, lambda, v) = g0_module(&target)?;
            let t = simple_top_of_kac(&g, &v, &OracleConfig::with_seed(ctx.seed))
                .map_err(|e| Failure::Verification(e.to_string()))?;
            match ctx.format {
                OutputFormat::Text => {
                    let text = format!(
                        "K(V({})): dim {}, maximal submodule dim {}, target twist {}\n{}",
                        format_weight(&g, &lambda),
                        t.kac.dim(),
                        t.maximal.dim(),
                        t.twist,
                        describe_module("L(V)", &t.top)
                    );
                    write!(ctx.out, "{text}").map_err(io)?;
                }
                OutputFormat::Json => writeln!(ctx.out, "{}", t.top.to_json()).map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify(args) => verify(&mut ctx, args, cli.output, cli.seed),
    }
}

fn verify(
    ctx: &mut Context,
    args: VerifyArgs,
    output: Option<OutputFormat>,
    seed: Option<u64>,
) -> Outcome {
    let file = match &args.config {
        Some(path) => SuiteConfig::load(path).map_err(Failure::Usage)?,
        None => SuiteConfig::default(),
    };
    let spec = args.algebra.or(file.algebra).ok_or_else(|| {
        Failure::Usage("no algebra given (use --algebra or a config file)".into())
    })?;
    let g = algebra(&spec)?;
    let grid: Grid = match args.grid.or(file.weight_grid) {
        Some(text) => text.parse().map_err(Failure::Usage)?,
        None => Settings::default().grid,
    };
    let suites: Vec<Suite> = match args.suite {
        Some(s) => vec![s],
        None if !file.suites.is_empty() => file.suites,
        None => return Err(Failure::Usage("no suite given".into())),
    };
    let settings = Settings {
        grid,
        seed: seed.or(file.seed).unwrap_or(DEFAULT_SEED),
        max_dim: args.max_dim.or(file.max_dim).unwrap_or(DEFAULT_MAX_DIM),
    };
    let format = output.or(file.output).unwrap_or_default();
    let mut reports: Vec<Report> = Vec::new();
    for suite in suites {
        let report = suites::run_suite(suite, &g, &settings).map_err(|r| Failure::Usage(r.0))?;
        reports.push(report);
    }
    let io = |e: std::io::Error| Failure::Usage(e.to_string());
    match format {
        OutputFormat::Text => {
            for r in &reports {
                write!(ctx.out, "{}", r.to_text()).map_err(io)?;
            }
        }
        OutputFormat::Json if reports.len() == 1 => {
            writeln!(ctx.out, "{}", reports[0].to_json()).map_err(io)?
        }
        OutputFormat::Json => writeln!(
            ctx.out,
            "{}",
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        )
        .map_err(io)?,
    }
    Ok(exit_code(&reports))
}

/// `0` when every report passed, `1` otherwise.
pub fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().all(Report::passed) {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}
