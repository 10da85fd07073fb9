use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use iteradd::parse::{parse_field, parse_poly, ParseError};
use iteradd::report::{CertificateOutput, FactorOutput, OutputFormat, PeriodicOutput, Report, SplitOutput};
use iteradd::verify;
use iteradd_core::splitting::{ladder_exponent, Route, SplitEntry};
use iteradd_core::{AffinePoly, Engine, EngineConfig, FactorMethod, FieldCtx, Method, SplittingReport};
use num_rational::Ratio;

#[derive(Parser)]
#[command(name = "iteradd", version, about = "Splitting degrees, certificates and dynamics of iterated additive polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: OutputFormat,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(flatten)]
    caps: Caps,
}

#[derive(Args)]
struct Caps {
    /// Largest splitting degree searched.
    #[arg(long, global = true, env = "ITERADD_SEARCH_CAP", default_value_t = 1_000_000)]
    search_cap: u64,
    /// Largest dense degree for Frobenius powers and the dense route.
    #[arg(long, global = true, env = "ITERADD_DENSE_CAP", default_value_t = 1 << 14)]
    dense_cap: u64,
    /// Largest extension dimension over F_p used for matrices.
    #[arg(long, global = true, env = "ITERADD_MATRIX_CAP", default_value_t = 4096)]
    matrix_cap: usize,
    /// Largest q^n for which periodic points are checked by enumeration.
    #[arg(long, global = true, env = "ITERADD_ORBIT_CAP", default_value_t = 1 << 12)]
    orbit_cap: u64,
    /// Largest dense degree accepted by the factorization oracle.
    #[arg(long, global = true, env = "ITERADD_ORACLE_CAP", default_value_t = 1 << 12)]
    oracle_cap: u64,
    /// Seed for randomized factorization and the verify corpus.
    #[arg(long, global = true, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct Target {
    /// `p=<int> r=<int> [mod=c0,...,1]`
    #[arg(long)]
    field: String,
    /// e.g. `x^8 + a*x` or `{(0,'a'),(3,'1')}`
    #[arg(long)]
    poly: String,
}

#[derive(Subcommand)]
enum Command {
    /// Splitting degrees s_F(n).
    Split {
        #[command(flatten)]
        target: Target,
        /// `N`, `A..B` or `A..=B`.
        #[arg(long, default_value = "1")]
        n: String,
        #[arg(long, value_enum, default_value = "auto")]
        method: SplitMethod,
    },
    /// Companion certificate, c_A and the closed formula.
    Certificate {
        #[command(flatten)]
        target: Target,
    },
    /// Periodic points of z -> A(z) on F_{q^n}.
    Periodic {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value = "1")]
        n: String,
    },
    /// Irreducible factor counts N_B(n) and average degrees of iterates.
    FactorStats {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value = "1")]
        n: String,
        #[arg(long, value_enum, default_value = "kernel")]
        method: StatsMethod,
    },
    /// Run the property suites.
    Verify {
        /// Run only this suite.
        #[arg(long)]
        suite: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SplitMethod {
    Modexp,
    Matrix,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatsMethod {
    Kernel,
    Oracle,
    Both,
}

enum Failure {
    Input(String),
    Cap(String),
    Exceptional(String),
    Check(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Input(_) => 2,
            Failure::Cap(_) => 3,
            Failure::Exceptional(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Cap(m) | Failure::Exceptional(m) | Failure::Check(m) => m,
        }
    }
}

impl From<iteradd_core::Error> for Failure {
    fn from(e: iteradd_core::Error) -> Failure {
        use iteradd_core::Error as E;
        match e {
            E::CapExceeded { .. } | E::OracleTooLarge { .. } => Failure::Cap(e.to_string()),
            E::ExceptionalForm => Failure::Exceptional(e.to_string()),
            E::CheckFailed(_) => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Failure {
        match e {
            ParseError::Core(inner) => inner.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn parse_range(s: &str) -> Result<(u64, u64), Failure> {
    let bad = || Failure::Input(format!("bad n or range `{s}`"));
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
    let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = s.split_once("..") {
        (num(a)?, num(b)?.checked_sub(1).ok_or_else(bad)?)
    } else {
        let n = num(s)?;
        (n, n)
    };
    if lo == 0 || lo > hi {
        return Err(Failure::Input(format!("n-range `{s}` is empty or starts at 0")));
    }
    Ok((lo, hi))
}

fn engine(field: &FieldCtx, caps: &Caps) -> Result<Engine, Failure> {
    if caps.search_cap == 0 || caps.dense_cap == 0 || caps.matrix_cap == 0 || caps.orbit_cap == 0 {
        return Err(Failure::Input("caps must be positive".into()));
    }
    let config = EngineConfig {
        search_cap: caps.search_cap,
        dense_cap: caps.dense_cap,
        matrix_cap: caps.matrix_cap,
        orbit_cap: caps.orbit_cap,
        oracle_cap: caps.oracle_cap,
        seed: caps.seed,
        ..EngineConfig::default()
    };
    Ok(Engine::new(field, config))
}

fn load(target: &Target) -> Result<(FieldCtx, AffinePoly), Failure> {
    let field = parse_field(&target.field)?;
    let parsed = parse_poly(&field, &target.poly)?;
    let b = parsed.require_affine()?.clone();
    if b.additive.is_zero() {
        return Err(Failure::Input("polynomial must be nonconstant".into()));
    }
    Ok((field, b))
}

fn cmd_split(target: &Target, n: &str, method: SplitMethod, caps: &Caps) -> Result<SplitOutput, Failure> {
    let (field, b) = load(target)?;
    let (lo, hi) = parse_range(n)?;
    let eng = engine(&field, caps)?;
    let method = match method {
        SplitMethod::Modexp => Method::Modexp,
        SplitMethod::Matrix => Method::Matrix,
        SplitMethod::Auto => Method::Auto,
    };
    let mut rep = if b.is_exceptional() {
        let entries = (lo..=hi)
            .map(|n| SplitEntry { n, s: 1, ratio: Ratio::new(1, n), ladder: Some(0), route: Route::Exceptional })
            .collect::<Vec<_>>();
        SplittingReport {
            poly: b.clone(),
            min_ratio: Ratio::new(1, hi),
            max_ratio: Ratio::new(1, lo),
            entries,
            violations: Vec::new(),
        }
    } else if lo == hi && lo > 1 {
        let s1 = eng.split_degree(&b, 1, method)?;
        let (s, route) = eng.split_degree_routed(&b, lo, method)?;
        let ratio = Ratio::new(s, lo);
        let entry = SplitEntry { n: lo, s, ratio, ladder: ladder_exponent(s1, s, field.p()), route };
        SplittingReport { poly: b.clone(), entries: vec![entry], min_ratio: ratio, max_ratio: ratio, violations: Vec::new() }
    } else {
        eng.ratio_scan(&b, hi, method)?
    };
    rep.entries.retain(|e| e.n >= lo);
    if let (Some(min), Some(max)) = (rep.entries.iter().map(|e| e.ratio).min(), rep.entries.iter().map(|e| e.ratio).max()) {
        rep.min_ratio = min;
        rep.max_ratio = max;
    }
    Ok(SplitOutput::new(&field, &rep))
}

fn cmd_certificate(target: &Target, caps: &Caps) -> Result<CertificateOutput, Failure> {
    let (field, b) = load(target)?;
    if !b.is_additive() {
        return Err(Failure::Input("certificate needs an additive polynomial (no constant term)".into()));
    }
    if b.is_exceptional() {
        return Err(iteradd_core::Error::ExceptionalForm.into());
    }
    let eng = engine(&field, caps)?;
    let cert = eng.companion(&b.additive)?;
    let lin = match b.additive.q_associate() {
        Some(f) => Some(eng.linearized_formula(&f)?),
        None => None,
    };
    Ok(CertificateOutput::new(&b, &cert, lin.as_ref()))
}

fn cmd_periodic(target: &Target, n: &str, caps: &Caps) -> Result<PeriodicOutput, Failure> {
    let (field, b) = load(target)?;
    if !b.is_additive() {
        return Err(Failure::Input("periodic needs an additive polynomial (no constant term)".into()));
    }
    let (lo, hi) = parse_range(n)?;
    let eng = engine(&field, caps)?;
    let ns: Vec<u64> = (lo..=hi).collect();
    let rep = eng.proportion_scan(&b.additive, &ns)?;
    Ok(PeriodicOutput::new(&b, &rep))
}

fn cmd_factor_stats(target: &Target, n: &str, method: StatsMethod, caps: &Caps) -> Result<FactorOutput, Failure> {
    let (field, b) = load(target)?;
    let (lo, hi) = parse_range(n)?;
    let eng = engine(&field, caps)?;
    let (method, name) = match method {
        StatsMethod::Kernel => (FactorMethod::Kernel, "kernel"),
        StatsMethod::Oracle => (FactorMethod::Oracle, "oracle"),
        StatsMethod::Both => (FactorMethod::Both, "both"),
    };
    let mut scan = eng.rho_scan_range(&b, lo, hi, method)?;
    scan.reports.retain(|r| r.n >= lo);
    Ok(FactorOutput::new(&b, name, &scan))
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let text = match &cli.command {
        Command::Split { target, n, method } => cmd_split(target, n, *method, &cli.caps)?.render(cli.format),
        Command::Certificate { target } => cmd_certificate(target, &cli.caps)?.render(cli.format),
        Command::Periodic { target, n } => cmd_periodic(target, n, &cli.caps)?.render(cli.format),
        Command::FactorStats { target, n, method } => {
            cmd_factor_stats(target, n, *method, &cli.caps)?.render(cli.format)
        }
        Command::Verify { suite } => {
            let summary = verify::run(cli.caps.seed, suite.as_deref()).map_err(Failure::Input)?;
            let text = match cli.format {
                OutputFormat::Json => serde_json::to_string_pretty(&summary).expect("serializable") + "\n",
                _ => summary.table(),
            };
            emit(&text, &cli.out)?;
            if !summary.ok() {
                return Err(Failure::Check("verification failed".into()));
            }
            return Ok(());
        }
    };
    emit(&text, &cli.out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
