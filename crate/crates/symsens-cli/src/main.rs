use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use symsens_cli::render::{self, Analysis, OutputFormat, SymmetryFailure};
use symsens_cli::{scan, ttfile};
use symsens_core::counting::CountSeries;
use symsens_core::distribution::{
    table_listing, verify_unit_part_criterion_with_cap, verify_turan_with_cap, ENUMERATION_CAP,
};
use symsens_core::{compress, CompactTruthTable, CompressOutcome, Error};

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFICATION: u8 = 2;
const EXIT_SIZE: u8 = 3;

/// Sensitivity analysis of symmetric Boolean functions.
#[derive(Parser)]
#[command(name = "symsens", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one function: composition, per-weight sensitivities, s(f)
    ///
    /// INPUT is either a compact truth table as a bit string of length
    /// n+1 >= 2 (e.g. "1110", value at weight 0 first) or the path of a
    /// truth-table file ("n=3" header plus a "bits=" or "hex=" line).
    /// Files are checked for symmetry first; a non-symmetric table is
    /// reported with a witness pair of equal-weight inputs and exit code 2.
    Analyze {
        input: String,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List all 2^(n+1) symmetric functions of n variables (n <= 6)
    Table {
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Histogram of sensitivities over all 2^(n+1) symmetric functions
    Census {
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Also check the unit-part criterion for s = n and the lower
        /// bound on non-trivial sensitivities; failures exit with code 2
        #[arg(long)]
        verify: bool,
        /// Raise the enumeration cap (default 24); the scan visits
        /// 2^(n+1) tables, so this needs --i-know-the-cost
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        i_know_the_cost: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact counts T_n, N_n, a_n and the ratio a_n / 2^(n+1) for n = 1..max-n
    Count {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Size { .. } => EXIT_SIZE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Analyze { input, format, out } => analyze(&input, format, out.as_deref()),
        Command::Table { n, format, out } => table(n, format, out.as_deref()),
        Command::Census {
            n,
            format,
            verify,
            cap,
            i_know_the_cost,
            out,
        } => census(n, format, verify, cap, i_know_the_cost, out.as_deref()),
        Command::Count { max_n, format, out } => count(max_n, format, out.as_deref()),
    }
}

fn emit(output: &str, out: Option<&std::path::Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, output)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{output}");
            Ok(())
        }
    }
}

fn looks_like_bit_string(input: &str) -> bool {
    input.len() >= 2 && input.bytes().all(|b| b == b'0' || b == b'1')
}

fn analyze(
    input: &str,
    format: OutputFormat,
    out: Option<&std::path::Path>,
) -> Result<u8, Failure> {
    let compact: CompactTruthTable = if looks_like_bit_string(input) {
        input.parse()?
    } else {
        let text = fs::read_to_string(input).map_err(|e| {
            Failure::usage(format!(
                "{input:?} is neither a bit string of length >= 2 nor a readable file: {e}"
            ))
        })?;
        let full = ttfile::parse_truth_table(&text)?;
        match compress(&full) {
            CompressOutcome::Symmetric(compact) => compact,
            CompressOutcome::NotSymmetric(witness) => {
                let failure = SymmetryFailure::of(&full, witness);
                emit(&render::render_symmetry_failure(&failure, format), out)?;
                return Ok(EXIT_VERIFICATION);
            }
        }
    };
    let analysis = Analysis::of(compact);
    emit(&render::render_analysis(&analysis, format), out)?;
    Ok(0)
}

fn table(n: usize, format: OutputFormat, out: Option<&std::path::Path>) -> Result<u8, Failure> {
    let rows = table_listing(n).map_err(|e| match e {
        Error::Size { n, cap } => Failure {
            code: EXIT_SIZE,
            message: format!(
                "a table for n = {n} would have 2^{} rows; listings stop at n = {cap}, \
                 use `symsens census {n}` for the histogram instead",
                n + 1
            ),
        },
        other => other.into(),
    })?;
    emit(&render::render_listing(&rows, format), out)?;
    Ok(0)
}

fn census(
    n: usize,
    format: OutputFormat,
    verify: bool,
    cap: Option<usize>,
    i_know_the_cost: bool,
    out: Option<&std::path::Path>,
) -> Result<u8, Failure> {
    let cap = match cap {
        Some(value) => {
            if !i_know_the_cost {
                return Err(Failure::usage(
                    "--cap raises the enumeration bound past its default; \
                     add --i-know-the-cost to confirm",
                ));
            }
            value
        }
        None => ENUMERATION_CAP,
    };
    let requested_cap = cap;
    let histogram = scan::parallel_census(n, cap).map_err(|e| match e {
        Error::Size { n, cap } if cap == requested_cap => Failure {
            code: EXIT_SIZE,
            message: format!(
                "census at n = {n} scans 2^{} = {:.2e} compact tables (cap {cap}); \
                 rerun with --cap {n} --i-know-the-cost to accept the cost",
                n + 1,
                2f64.powi(n as i32 + 1),
            ),
        },
        Error::Size { n, .. } => Failure {
            code: EXIT_SIZE,
            message: format!(
                "enumeration indices are 64-bit, so the census supports at most \
                 n = {}; n = {n} cannot be scanned exhaustively (the exact counts \
                 from `symsens count` have no such limit)",
                symsens_core::distribution::SCAN_VARS_LIMIT,
            ),
        },
        other => other.into(),
    })?;
    emit(&render::render_histogram(&histogram, format), out)?;
    if !verify {
        return Ok(0);
    }
    let unit_part = verify_unit_part_criterion_with_cap(n, cap)?;
    let turan = verify_turan_with_cap(n, cap)?;
    eprintln!(
        "unit-part criterion n={n}: {} ({} functions with s = n)",
        pass_fail(unit_part.holds),
        unit_part.max_sensitivity_count
    );
    eprintln!(
        "turan n={n}: {} (bound {}, minimum non-trivial sensitivity {}, witness {})",
        pass_fail(turan.holds),
        turan.bound,
        turan.min_nontrivial,
        turan.witness
    );
    let census_max_sens = histogram.count(n).clone();
    let counting_says = symsens_core::counting::max_sensitivity_count(n)?;
    let counts_agree = unit_part.max_sensitivity_count == census_max_sens
        && counting_says == census_max_sens;
    eprintln!(
        "counts n={n}: {} (census {census_max_sens}, recurrence {counting_says})",
        pass_fail(counts_agree),
    );
    if unit_part.holds && turan.holds && counts_agree {
        Ok(0)
    } else {
        Ok(EXIT_VERIFICATION)
    }
}

fn count(max_n: usize, format: OutputFormat, out: Option<&std::path::Path>) -> Result<u8, Failure> {
    let series = CountSeries::compute(max_n)?;
    emit(&render::render_count_series(&series, format), out)?;
    Ok(0)
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
