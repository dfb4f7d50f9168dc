//! Argument parsing and dispatch.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wzcheck_core::congruence::{Range, SumFamily, WeightKind};
use wzcheck_core::identities::Theorem;
use wzcheck_core::wz::CertificateId;

use crate::output::{self, Format};
use crate::record::{Record, Summary};
use crate::runner::{self, CongruenceRun, IdentityRun, WzRun, DEFAULT_MAX_TERMS};
use crate::CliError;

/// Environment variable naming a directory for report files.
pub const OUT_DIR_ENV: &str = "WZCHECK_OUT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "wzcheck",
    version,
    about = "Exact verification of WZ-certified series identities and supercongruences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Report format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Record per-item wall time (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the finite-sum identities on a parameter grid.
    VerifyIdentity(IdentityArgs),
    /// Check the WZ and Zeilberger certificates.
    VerifyWz(WzArgs),
    /// Check the supercongruences for a list of primes.
    VerifyCongruences(CongruenceArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::VerifyIdentity(_) => "verify-identity",
            Command::VerifyWz(_) => "verify-wz",
            Command::VerifyCongruences(_) => "verify-congruences",
        }
    }

    fn output(&self) -> &OutputArgs {
        match self {
            Command::VerifyIdentity(a) => &a.out,
            Command::VerifyWz(a) => &a.out,
            Command::VerifyCongruences(a) => &a.out,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TheoremChoice {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Both,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    #[arg(long, value_enum, default_value = "both")]
    pub theorem: TheoremChoice,
    #[arg(long, default_value_t = 6)]
    pub lmax: i64,
    #[arg(long, default_value_t = 4)]
    pub smax: i64,
    /// Checks M in [s, s + mextent].
    #[arg(long, default_value_t = 20)]
    pub mextent: i64,
    /// Also replay the telescoping proof at every point.
    #[arg(long)]
    pub replay: bool,
    /// Also check the s = 0 closed forms.
    #[arg(long)]
    pub special: bool,
    /// Include the summands in each record.
    #[arg(long)]
    pub trace: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CertificateChoice {
    Wz,
    Zeilberger,
    Both,
}

#[derive(Debug, Args)]
pub struct WzArgs {
    #[arg(long, value_enum, default_value = "both")]
    pub certificate: CertificateChoice,
    /// Symbolic check of the rational certificate.
    #[arg(long)]
    pub symbolic: bool,
    /// Pointwise recurrence check on the grid.
    #[arg(long)]
    pub grid: bool,
    /// Term-ratio consistency on sampled points.
    #[arg(long)]
    pub ratios: bool,
    /// Report-only probes just outside the domain.
    #[arg(long)]
    pub edges: bool,
    #[arg(long, default_value_t = 5)]
    pub lmax: i64,
    #[arg(long, default_value_t = 4)]
    pub smax: i64,
    /// Checks n in [s, s + nextent].
    #[arg(long, default_value_t = 10)]
    pub nextent: i64,
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    /// Test hook: double G so every check must fail.
    #[arg(long, hide = true)]
    pub mutate_g: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyChoice {
    B,
    C,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WeightChoice {
    Linear,
    Cube,
    MixedB,
    MixedC,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RangeChoice {
    Half,
    Full,
    Both,
}

#[derive(Debug, Args)]
pub struct CongruenceArgs {
    #[arg(long, value_delimiter = ',', default_value = "3,5,7,11,13")]
    pub primes: Vec<u64>,
    #[arg(long, default_value_t = 2)]
    pub rmax: u32,
    #[arg(long, value_enum, default_value = "both")]
    pub family: FamilyChoice,
    #[arg(long, value_enum, default_value = "all")]
    pub weight: WeightChoice,
    /// Defaults to the ranges where a congruence is stated.
    #[arg(long, value_enum)]
    pub range: Option<RangeChoice>,
    /// Run family C linear and cube sums at p = 3 as report-only records.
    #[arg(long)]
    pub force_p3: bool,
    /// Largest p^r to sum over.
    #[arg(long, default_value_t = DEFAULT_MAX_TERMS)]
    pub max_terms: u64,
    /// Include the exact sum in each record.
    #[arg(long)]
    pub show_sum: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

impl IdentityArgs {
    pub fn to_run(&self) -> IdentityRun {
        let theorems = match self.theorem {
            TheoremChoice::One => vec![Theorem::One],
            TheoremChoice::Two => vec![Theorem::Two],
            TheoremChoice::Both => Theorem::ALL.to_vec(),
        };
        IdentityRun {
            theorems,
            ell_max: self.lmax,
            s_max: self.smax,
            m_extent: self.mextent,
            replay: self.replay,
            special: self.special,
            trace: self.trace,
            timing: self.out.timing,
        }
    }
}

impl WzArgs {
    pub fn to_run(&self) -> WzRun {
        let certificates = match self.certificate {
            CertificateChoice::Wz => vec![CertificateId::Wz],
            CertificateChoice::Zeilberger => vec![CertificateId::Zeilberger],
            CertificateChoice::Both => CertificateId::ALL.to_vec(),
        };
        let all = !(self.symbolic || self.grid || self.ratios || self.edges);
        WzRun {
            certificates,
            symbolic: all || self.symbolic,
            grid: all || self.grid,
            ratios: all || self.ratios,
            edges: all || self.edges,
            ell_max: self.lmax,
            s_max: self.smax,
            n_extent: self.nextent,
            samples: self.samples,
            mutate_g: self.mutate_g,
            timing: self.out.timing,
        }
    }
}

impl CongruenceArgs {
    pub fn to_run(&self) -> CongruenceRun {
        let families = match self.family {
            FamilyChoice::B => vec![SumFamily::B],
            FamilyChoice::C => vec![SumFamily::C],
            FamilyChoice::Both => vec![SumFamily::B, SumFamily::C],
        };
        let weights = match self.weight {
            WeightChoice::Linear => Some(vec![WeightKind::Linear]),
            WeightChoice::Cube => Some(vec![WeightKind::Cube]),
            WeightChoice::MixedB => Some(vec![WeightKind::MixedB]),
            WeightChoice::MixedC => Some(vec![WeightKind::MixedC]),
            WeightChoice::All => None,
        };
        let ranges = self.range.map(|r| match r {
            RangeChoice::Half => vec![Range::Half],
            RangeChoice::Full => vec![Range::Full],
            RangeChoice::Both => vec![Range::Half, Range::Full],
        });
        CongruenceRun {
            primes: self.primes.clone(),
            r_max: self.rmax,
            families,
            weights,
            ranges,
            force_p3: self.force_p3,
            max_terms: self.max_terms,
            show_sum: self.show_sum,
            timing: self.out.timing,
        }
    }
}

/// Runs the selected subcommand and returns its records.
pub fn records(command: &Command) -> Result<Vec<Record>, CliError> {
    match command {
        Command::VerifyIdentity(a) => runner::run_identities(&a.to_run()),
        Command::VerifyWz(a) => runner::run_wz(&a.to_run()),
        Command::VerifyCongruences(a) => runner::run_congruences(&a.to_run()),
    }
}

fn destination(command: &Command) -> Option<PathBuf> {
    let out = command.output();
    if let Some(p) = &out.output {
        return Some(p.clone());
    }
    std::env::var_os(OUT_DIR_ENV)
        .filter(|d| !d.is_empty())
        .map(|d| PathBuf::from(d).join(format!("{}.{}", command.name(), out.format.extension())))
}

/// Runs, writes the report and returns the process exit status.
pub fn run(cli: &Cli) -> Result<i32, CliError> {
    let records = records(&cli.command)?;
    let format = cli.command.output().format;
    match destination(&cli.command) {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)?;
            }
            let mut w = BufWriter::new(File::create(&path)?);
            output::write(&mut w, format, cli.command.name(), &records)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            output::write(&mut w, format, cli.command.name(), &records)?;
            w.flush()?;
        }
    }
    let summary = Summary::of(&records);
    eprintln!(
        "{}: {} records, {} passed, {} failed ({} asserted), {} skipped, {} not applicable",
        cli.command.name(),
        summary.total,
        summary.passed,
        summary.failed,
        summary.asserted_failures,
        summary.skipped,
        summary.not_applicable
    );
    Ok(summary.exit_code())
}
