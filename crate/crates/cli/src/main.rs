use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use monodromy_core::fixtures::{selftest, Ctx};
use monodromy_core::{analyze, analyze_local, AnalyzeOptions, LocalScene, NondegConfig, Polynomial};

const EXIT_INVALID: u8 = 1;
const EXIT_HYPOTHESIS: u8 = 2;
const EXIT_SELFTEST: u8 = 3;

#[derive(Parser)]
#[command(name = "monodromy", version, about = "Monodromy at infinity from Newton polyhedra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a polynomial at infinity.
    Analyze(AnalyzeArgs),
    /// Atypical eigenvalues and hypothesis checks at a bifurcation point.
    Local(LocalArgs),
    /// Run the built-in fixture suite.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct NondegArgs {
    /// Modular trials per face of dimension at least 2.
    #[arg(long = "nondeg-trials", default_value_t = 64)]
    trials: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl NondegArgs {
    fn config(&self) -> NondegConfig {
        NondegConfig { trials: self.trials, seed: self.seed, ..NondegConfig::default() }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Polynomial text, e.g. "x^2 + y^3".
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    poly: Option<String>,
    /// File holding the polynomial text.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Ambient dimension.
    #[arg(long)]
    n: usize,
    /// Laurent polynomial on the torus; only the zeta function is computed.
    #[arg(long)]
    laurent: bool,
    #[arg(long)]
    json: bool,
    #[arg(long = "skip-nondeg")]
    skip_nondeg: bool,
    #[command(flatten)]
    nondeg: NondegArgs,
}

#[derive(Args)]
struct LocalArgs {
    /// Scene file: {"n": int, "interior": [poly], "boundary": [poly]}.
    #[arg(long)]
    scene: PathBuf,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    nondeg: NondegArgs,
}

#[derive(Args)]
struct SelftestArgs {
    /// Only cases whose name or tag contains this string.
    #[arg(long)]
    filter: Option<String>,
    #[arg(long)]
    json: bool,
    #[arg(long = "inject-fault", hide = true)]
    inject_fault: bool,
}

/// Writes to stdout; a closed pipe downstream is not an error.
fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn cmd_analyze(a: &AnalyzeArgs) -> Result<u8> {
    let text = match (&a.poly, &a.file) {
        (Some(p), _) => p.clone(),
        (None, Some(f)) => std::fs::read_to_string(f).with_context(|| format!("reading {}", f.display()))?,
        (None, None) => bail!("one of --poly or --file is required"),
    };
    let poly = Polynomial::parse(text.trim(), a.n, a.laurent).context("invalid polynomial")?;
    let opts = AnalyzeOptions { laurent: a.laurent, skip_nondeg: a.skip_nondeg, nondeg: a.nondeg.config() };
    let report = analyze(&poly, &opts)?;
    if a.json {
        emit(&(serde_json::to_string_pretty(&report)? + "\n"))?;
    } else {
        emit(&report.to_string())?;
    }
    Ok(if report.hypotheses_failed() { EXIT_HYPOTHESIS } else { 0 })
}

fn cmd_local(a: &LocalArgs) -> Result<u8> {
    let text = std::fs::read_to_string(&a.scene).with_context(|| format!("reading {}", a.scene.display()))?;
    let scene = LocalScene::from_json(&text).context("invalid scene")?;
    let report = analyze_local(&scene, &a.nondeg.config())?;
    if a.json {
        emit(&(serde_json::to_string_pretty(&report)? + "\n"))?;
    } else {
        emit(&report.to_string())?;
    }
    Ok(0)
}

fn cmd_selftest(a: &SelftestArgs) -> Result<u8> {
    let outcomes = selftest(a.filter.as_deref(), &Ctx { fault: a.inject_fault });
    if outcomes.is_empty() {
        bail!("no self-test case matches the filter");
    }
    if a.json {
        emit(&(serde_json::to_string_pretty(&outcomes)? + "\n"))?;
    } else {
        let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
        let mut text = String::new();
        for o in &outcomes {
            let status = if o.passed { "pass" } else { "FAIL" };
            text += &format!("{:width$}  {status}  {}\n", o.name, o.detail);
        }
        emit(&text)?;
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    if !a.json {
        emit(&format!("{} passed, {failed} failed\n", outcomes.len() - failed))?;
    }
    Ok(if failed > 0 { EXIT_SELFTEST } else { 0 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INVALID } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Local(a) => cmd_local(a),
        Command::Selftest(a) => cmd_selftest(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}
