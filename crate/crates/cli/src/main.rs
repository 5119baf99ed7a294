use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mixedf4::fields::Mode;
use mixedf4::involution::CoeffTable;
use mixedf4::moufang::UElem;
use mixedf4::rewrite::{tau_normal_form, RewriteOptions};
use mixedf4::roots::{f4, NUM_ROOTS};
use mixedf4::{Error, Result};
use mixedf4_cli::checks::{run_named, Ctx, B3_CHECKS};
use mixedf4_cli::tau::run_tau;
use mixedf4_cli::{run_verify, FieldConfig, Report, RunConfig, Status, Suite};

#[derive(Parser)]
#[command(name = "mixedf4", version, about = "Exact verification of the mixed F4 Moufang set")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// TOML run configuration; flags override its values.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    mode: Option<ModeArg>,
    #[arg(long, global = true, value_name = "N")]
    samples: Option<usize>,
    #[arg(long, global = true, value_name = "S")]
    seed: Option<u64>,
    #[arg(long = "step-bound", global = true, value_name = "N")]
    step_bound: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Mixed,
    Algebraic,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and report one line per check.
    Verify {
        /// Suites to run (repeat or separate by commas); default all.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        /// Write the JSON report here.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// τ of one element of U, read as JSON {"a": [4], "b": [4]} from a file or "-".
    Tau { input: PathBuf },
    /// The normal form n·u·n = b·n·u′ of one element, as JSON lines.
    Rewrite {
        input: PathBuf,
        /// Emit one line per rewrite step before the result.
        #[arg(long)]
        trace: bool,
    },
    /// The coefficient table c_r of the involution.
    Coeffs,
    /// The B3 cross-validation checks.
    B3check,
    /// The roots of F4 with their expansion, length and σ-image.
    Roots,
}

fn config(common: &Common) -> Result<RunConfig> {
    let mut cfg = match &common.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    match (common.mode, common.config.is_some()) {
        (Some(ModeArg::Algebraic), _) => cfg.field = cfg.field.algebraic(),
        (Some(ModeArg::Mixed), false) => cfg.field = FieldConfig::default_for(Mode::Mixed),
        (Some(ModeArg::Mixed), true) if cfg.field.mode != Mode::Mixed => {
            return Err(Error::Config("the configured field is not mixed".into()))
        }
        _ => {}
    }
    if let Some(n) = common.samples {
        cfg.samples = n;
    }
    if let Some(s) = common.seed {
        cfg.seed = s;
    }
    if let Some(b) = common.step_bound {
        cfg.step_bound = b;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn read_input(path: &Path) -> Result<serde_json::Value> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)?
    };
    Ok(serde_json::from_str(&text)?)
}

fn print_report(report: &Report) {
    for line in report.text_lines() {
        println!("{line}");
    }
    let s = &report.summary;
    println!("{} passed, {} failed, {} skipped", s.pass, s.fail, s.skip);
}

fn run(cli: Cli) -> Result<bool> {
    let mut cfg = config(&cli.common)?;
    let opts = RewriteOptions { step_bound: cfg.step_bound, trace: false };
    match cli.command {
        Command::Verify { suite, json } => {
            if !suite.is_empty() {
                cfg.suites = suite.iter().map(|s| Suite::parse(s.trim())).collect::<Result<_>>()?;
            }
            let report = run_verify(cfg)?;
            print_report(&report);
            if let Some(p) = json {
                std::fs::write(p, report.to_json())?;
            }
            Ok(report.passed())
        }
        Command::Tau { input } => {
            let spec = cfg.field.build()?;
            let p = UElem::from_json(&spec, &read_input(&input)?)?;
            let run = run_tau(&spec, &p, opts)?;
            println!("{}", serde_json::to_string_pretty(&run.to_json(&spec))?);
            Ok(run.verdict() == Status::Pass)
        }
        Command::Rewrite { input, trace } => {
            let spec = cfg.field.build()?;
            let p = UElem::from_json(&spec, &read_input(&input)?)?;
            let nf = tau_normal_form(&spec, &p.to_u1(), RewriteOptions { trace, ..opts })?;
            for step in &nf.trace {
                println!("{}", serde_json::to_string(&step.to_json(&spec))?);
            }
            let out = serde_json::json!({
                "steps": nf.steps,
                "b": nf.b.to_json(&spec),
                "uprime": UElem::from_u1(&nf.uprime).to_json(&spec),
            });
            println!("{}", serde_json::to_string(&out)?);
            Ok(true)
        }
        Command::Coeffs => {
            let spec = cfg.field.build()?;
            let table = CoeffTable::compute(&spec);
            let rs = f4();
            for r in 0..NUM_ROOTS {
                let label = rs.r_position(r).map(|k| format!("r{}", k + 1)).unwrap_or_default();
                println!("{:<14} {:<4} {:?}  c = {}", rs.root(r).to_string(), label, rs.expansion(r), spec.format(table.get(r)));
            }
            Ok(true)
        }
        Command::B3check => {
            let ctx = Ctx::new(cfg.clone())?;
            let report = Report::new(cfg, run_named(&ctx, &B3_CHECKS));
            print_report(&report);
            Ok(report.passed())
        }
        Command::Roots => {
            let rs = f4();
            for r in 0..NUM_ROOTS {
                let label = rs.r_position(r).map(|k| format!("r{}", k + 1)).unwrap_or_default();
                println!(
                    "{:<14} {:<4} {:<5} {:<8} {:?}  σ = {}",
                    rs.root(r).to_string(),
                    label,
                    if rs.is_long(r) { "long" } else { "short" },
                    if rs.is_positive(r) { "positive" } else { "negative" },
                    rs.expansion(r),
                    rs.root(rs.sigma(r))
                );
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
