//! The `matula` command line.
//!
//! Exit status: 0 on success, 2 for usage errors, 1 when a computation fails
//! (bad input, capacity, parse errors, unreadable files), 3 when `verify` or
//! `selftest` finds a mismatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bfile::BFile;
use crate::error::Error;
use crate::oracle;
use crate::stats::{Exponent, StatName, StatParams, StatValue, StatsEngine};
use crate::tree::{decode, RootedTree};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "matula",
    version,
    about = "Rooted trees and their statistics via Matula numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Paren,
    Json,
    Dot,
}

#[derive(Debug, clap::Args)]
struct ParamArgs {
    /// Exponent for A_ALPHA / R_ALPHA: an integer (exact), a fraction such as -1/2, or a decimal
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<Exponent>,
    /// Distance for POLARITY, level for LEVEL_COUNT
    #[arg(long)]
    k: Option<u32>,
}

impl ParamArgs {
    fn params(&self) -> StatParams {
        StatParams {
            alpha: self.alpha,
            k: self.k,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the rooted tree with Matula number N
    Decode {
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Paren)]
        format: Format,
    },
    /// Print the Matula number of a paren-encoded tree such as "(()())"
    Encode { tree: String },
    /// Print one statistic of the tree with Matula number N
    Stat {
        name: StatName,
        n: u64,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Print "n value" for every n in LO..=HI
    Table {
        name: StatName,
        lo: u64,
        hi: u64,
        /// Bare b-file output: no header, integer statistics only
        #[arg(long)]
        bfile: bool,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Compare a statistic against an OEIS b-file
    Verify {
        name: StatName,
        path: PathBuf,
        /// Check only the first K entries
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Check the recursions against the explicit-tree oracle and against
    /// alternative factor splits
    Selftest {
        #[arg(long, default_value_t = 5000)]
        max_n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Error(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Mismatch) => EXIT_MISMATCH,
        Err(Failure::Error(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Decode { n, format } => {
            let tree = decode(n)?;
            match format {
                Format::Paren => writeln!(out, "{tree}")?,
                Format::Json => writeln!(out, "{}", tree.to_json()?)?,
                Format::Dot => write!(out, "{}", tree.to_dot()?)?,
            }
        }
        Command::Encode { tree } => {
            let tree = RootedTree::parse_canonical_string(&tree).map_err(Error::from)?;
            writeln!(out, "{}", tree.encode()?)?;
        }
        Command::Stat { name, n, params } => {
            let value = StatsEngine::new().stat(name, n, &params.params())?;
            writeln!(out, "{value}")?;
        }
        Command::Table {
            name,
            lo,
            hi,
            bfile,
            params,
        } => table(out, name, lo, hi, bfile, &params.params())?,
        Command::Verify {
            name,
            path,
            limit,
            params,
        } => verify(out, name, &path, limit, &params.params())?,
        Command::Selftest { max_n, seed } => selftest(out, max_n, seed)?,
    }
    Ok(())
}

fn table(
    out: &mut dyn Write,
    name: StatName,
    lo: u64,
    hi: u64,
    bfile: bool,
    params: &StatParams,
) -> Outcome {
    if lo == 0 || lo > hi {
        return Err(Error::InvalidInput(format!("bad range {lo}..{hi}")).into());
    }
    let mut engine = StatsEngine::new();
    if !bfile {
        writeln!(out, "# {name} for n = {lo}..{hi}")?;
    }
    for n in lo..=hi {
        let value = engine.stat(name, n, params)?;
        if bfile && !matches!(value, StatValue::Integer(_)) {
            return Err(Error::InvalidInput(format!(
                "{name}({n}) = {value} is not an integer; b-files hold integers only"
            ))
            .into());
        }
        writeln!(out, "{n} {value}")?;
    }
    Ok(())
}

fn verify(
    out: &mut dyn Write,
    name: StatName,
    path: &std::path::Path,
    limit: Option<usize>,
    params: &StatParams,
) -> Outcome {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Error(format!("{}: {e}", path.display())))?;
    let bfile = BFile::parse(&text).map_err(|e| Failure::Error(e.to_string()))?;
    let entries = &bfile.entries()[..limit.unwrap_or(usize::MAX).min(bfile.len())];
    let mut engine = StatsEngine::new();
    for (index, expected) in entries {
        let n = u64::try_from(*index)
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| {
                Error::InvalidInput(format!("b-file index {index} is not a Matula number"))
            })?;
        let value = engine.stat(name, n, params)?;
        let Some(computed) = value.as_integer() else {
            return Err(
                Error::InvalidInput(format!("{name}({n}) = {value} is not an integer")).into(),
            );
        };
        if computed != expected {
            writeln!(
                out,
                "mismatch at n = {n}: computed {computed}, b-file has {expected}"
            )?;
            return Err(Failure::Mismatch);
        }
    }
    match (entries.first(), entries.last()) {
        (Some((first, _)), Some((last, _))) => writeln!(
            out,
            "ok: {} terms of {name} verified for n = {first}..{last}",
            entries.len()
        )?,
        _ => writeln!(out, "ok: b-file is empty")?,
    }
    Ok(())
}

fn selftest(out: &mut dyn Write, max_n: u64, seed: u64) -> Outcome {
    let mut engine = StatsEngine::new();
    let checks = oracle::standard_checks().len() as u64;
    let mut mismatches = Vec::new();
    for n in 1..=max_n {
        mismatches.extend(oracle::compare_all(&mut engine, n, &decode(n)?)?);
    }
    writeln!(
        out,
        "oracle: {} values compared for n = 1..{max_n}, {} mismatches",
        checks * max_n,
        mismatches.len()
    )?;
    for m in mismatches.iter().take(20) {
        writeln!(
            out,
            "  {}({}) {:?}: recursion {}, oracle {}",
            m.name, m.n, m.params, m.recursive, m.oracle
        )?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut composites, mut failures) = (0u64, Vec::new());
    for n in 4..=max_n {
        if engine.primes().is_prime(n)? {
            continue;
        }
        composites += 1;
        if !oracle::random_split_check_with(&mut engine, n, &mut rng)? {
            failures.push(n);
        }
    }
    writeln!(
        out,
        "splits: {composites} composite numbers checked with seed {seed}, {} failures",
        failures.len()
    )?;
    for n in failures.iter().take(20) {
        writeln!(out, "  split check failed for n = {n}")?;
    }

    if mismatches.is_empty() && failures.is_empty() {
        writeln!(out, "selftest passed")?;
        Ok(())
    } else {
        writeln!(out, "selftest FAILED")?;
        Err(Failure::Mismatch)
    }
}
