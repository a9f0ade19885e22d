//! Command-line verification driver for the k2cyclo library.
//!
//! Subcommands: `verify` runs named check suites, `table` sweeps parameter
//! grids, `nonclosure` emits a certificate, `recheck` re-verifies one.
//! Exit codes: 0 = every check passed, 1 = at least one failure,
//! 2 = usage error.

mod report;
mod suites;
mod tables;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use k2cyclo::k2tame::{verify_certificate, NonClosureCertificate};

use report::{render_csv, render_json, render_text, SuiteReport};
use suites::{nonclosure_limits_from_env, run_suite, SUITES};
use tables::{counts_table, genus_table, parse_range, zset_table, Table};

#[derive(Parser)]
#[command(
    name = "k2cyclo",
    about = "Exact verification of cyclotomic elements in K2 of fields",
    long_about = "Runs exact-arithmetic check suites, parameter sweeps, and \
                  certificate generation for cyclotomic elements in K2.\n\n\
                  Environment: K2CYCLO_TRIAL_BOUND and K2CYCLO_MAX_K override \
                  the factoring effort caps used by certificate generation."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites (all of them by default).
    Verify(VerifyArgs),
    /// Emit a parameter-sweep table.
    Table(TableArgs),
    /// Generate a non-closure certificate as JSON.
    Nonclosure(NonclosureArgs),
    /// Re-verify a certificate file independently.
    Recheck(RecheckArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated suite names; omit to run every suite.
    #[arg(long, value_delimiter = ',')]
    suites: Vec<String>,
    /// Seed for the randomized suites.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads for parallel sweeps (0 = library default).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Zset,
    Counts,
    Genus,
}

#[derive(Args)]
struct TableArgs {
    /// Which table to emit.
    #[arg(value_enum)]
    kind: TableKind,
    /// Range of symbol primes l, written `a..b` (inclusive) or `a`.
    #[arg(long)]
    l: Option<String>,
    /// Range of characteristics p (`0` means characteristic zero where
    /// meaningful).
    #[arg(long)]
    p: Option<String>,
    /// Range of generator counts n, or of curve indices for genus tables.
    #[arg(long)]
    n: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (accepted for symmetry; tables are cheap).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Args)]
struct NonclosureArgs {
    /// Cyclotomic index n (requires p^2 | n, n not in {1, 4, 8, 12}).
    #[arg(long)]
    n: u64,
    /// The power prime p.
    #[arg(long)]
    p: u64,
    /// Number of certified entries to generate.
    #[arg(long, default_value_t = 3)]
    count: usize,
    /// Write the certificate here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RecheckArgs {
    /// Certificate file produced by `nonclosure`.
    file: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Table(args) => cmd_table(args),
        Command::Nonclosure(args) => cmd_nonclosure(args),
        Command::Recheck(args) => cmd_recheck(args),
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn with_jobs<T>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, String>
where
    T: Send,
{
    if jobs == 0 {
        Ok(f())
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| format!("cannot build a {jobs}-thread pool: {e}"))?;
        Ok(pool.install(f))
    }
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let requested: Vec<String> = if args.suites.is_empty() {
        SUITES.iter().map(|s| s.to_string()).collect()
    } else {
        args.suites.clone()
    };
    for name in &requested {
        if !SUITES.contains(&name.as_str()) {
            return usage_error(&format!(
                "unknown suite {name:?}; available: {}",
                SUITES.join(", ")
            ));
        }
    }

    let seed = args.seed;
    let outcome = with_jobs(args.jobs, move || {
        let mut reports: Vec<SuiteReport> = Vec::new();
        for name in &requested {
            match run_suite(name, seed) {
                Ok(r) => reports.push(r),
                Err(e) => return Err(e),
            }
        }
        Ok(reports)
    });
    let reports = match outcome {
        Ok(Ok(r)) => r,
        Ok(Err(e)) | Err(e) => return usage_error(&e),
    };

    let rendered = match args.format {
        Format::Text => render_text(&reports),
        Format::Json => render_json(&reports),
        Format::Csv => render_csv(&reports),
    };
    print!("{rendered}");
    let failures: usize = reports.iter().map(SuiteReport::failures).sum();
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_table(args: TableArgs) -> ExitCode {
    let parse = |flag: &str, value: &Option<String>| -> Result<(u64, u64), String> {
        match value {
            Some(v) => parse_range(v),
            None => Err(format!("table {} requires --{flag}", kind_name(args.kind))),
        }
    };
    let built: Result<Table, String> = (|| match args.kind {
        TableKind::Zset => {
            let l = parse("l", &args.l)?;
            let p = parse("p", &args.p)?;
            Ok(zset_table(l, p))
        }
        TableKind::Counts => {
            let l = parse("l", &args.l)?;
            let p = parse("p", &args.p)?;
            let n = parse("n", &args.n)?;
            Ok(counts_table(l, p, n))
        }
        TableKind::Genus => {
            let n = parse("n", &args.n)?;
            let p = parse("p", &args.p)?;
            Ok(genus_table(n, p))
        }
    })();
    let table = match built {
        Ok(t) => t,
        Err(e) => return usage_error(&e),
    };
    let rendered = match args.format {
        Format::Text => table.render_text(),
        Format::Json => table.render_json(),
        Format::Csv => table.render_csv(),
    };
    print!("{rendered}");
    ExitCode::SUCCESS
}

fn kind_name(kind: TableKind) -> &'static str {
    match kind {
        TableKind::Zset => "zset",
        TableKind::Counts => "counts",
        TableKind::Genus => "genus",
    }
}

fn cmd_nonclosure(args: NonclosureArgs) -> ExitCode {
    let limits = match nonclosure_limits_from_env() {
        Ok(l) => l,
        Err(e) => return usage_error(&e),
    };
    let cert = match k2cyclo::k2tame::nonclosure_sequence(args.n, args.p, args.count, &limits) {
        Ok(c) => c,
        // Effort caps ran out on valid inputs: an operational failure, not a
        // usage error.
        Err(e @ k2cyclo::k2tame::K2Error::LimitsExhausted { .. }) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
        Err(e) => return usage_error(&format!("certificate generation failed: {e}")),
    };
    let mut json = serde_json::to_string_pretty(&cert).expect("certificate serializes");
    json.push('\n');
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &json) {
                return usage_error(&format!("cannot write {}: {e}", path.display()));
            }
            eprintln!(
                "wrote certificate with {} entries to {}",
                cert.entries().len(),
                path.display()
            );
        }
        None => print!("{json}"),
    }
    ExitCode::SUCCESS
}

fn cmd_recheck(args: RecheckArgs) -> ExitCode {
    let text = match std::fs::read_to_string(&args.file) {
        Ok(t) => t,
        Err(e) => return usage_error(&format!("cannot read {}: {e}", args.file.display())),
    };
    let cert: NonClosureCertificate = match serde_json::from_str(&text) {
        Ok(c) => c,
        Err(e) => return usage_error(&format!("malformed certificate: {e}")),
    };
    match verify_certificate(&cert) {
        Ok(()) => {
            println!(
                "certificate ok: n = {}, p = {}, {} entries",
                cert.n(),
                cert.p(),
                cert.entries().len()
            );
            ExitCode::SUCCESS
        }
        Err(violation) => {
            println!("certificate violation: {violation}");
            ExitCode::from(1)
        }
    }
}
