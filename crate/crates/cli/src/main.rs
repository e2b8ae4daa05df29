//! `stirsum`: exact power sums, Stirling cycle numbers, Catalan numbers
//! and identity-verification sweeps with machine-readable output.
//!
//! Exit codes: 0 on success (all sweep cases pass), 1 when a verification
//! sweep found failures, 2 for usage errors.

mod output;
mod sweep;

use clap::{Args, Parser, Subcommand, ValueEnum};
use output::Format;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;
use stirsum_core::{catalan, powersum};

#[derive(Parser)]
#[command(
    name = "stirsum",
    version,
    about = "Exact power-sum, Stirling, harmonic and Catalan identity toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one row of the unsigned Stirling cycle-number triangle
    Stirling(StirlingArgs),
    /// Evaluate the power sum S_p(n) = 1^p + 2^p + ... + n^p
    Powersum(PowersumArgs),
    /// Evaluate Catalan numbers
    Catalan(CatalanArgs),
    /// Print the closed-form polynomial for S_p, coefficients ascending
    Faulhaber(FaulhaberArgs),
    /// Sweep an identity over a parameter rectangle and report the outcome
    Verify(VerifyArgs),
}

#[derive(Args)]
struct OutputOpts {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the payload to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct StirlingArgs {
    /// Row index n; prints the cycle numbers for 0..=n cycles
    #[arg(long)]
    row: u32,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Direct,
    Binomial,
    Stirling,
}

impl MethodArg {
    fn core(self) -> powersum::Method {
        match self {
            MethodArg::Direct => powersum::Method::Direct,
            MethodArg::Binomial => powersum::Method::BinomialRecursion,
            MethodArg::Stirling => powersum::Method::StirlingRecursion,
        }
    }

    fn name(self) -> &'static str {
        match self {
            MethodArg::Direct => "direct",
            MethodArg::Binomial => "binomial",
            MethodArg::Stirling => "stirling",
        }
    }
}

#[derive(Args)]
struct PowersumArgs {
    /// Exponent p
    #[arg(long)]
    p: u32,
    /// Upper summation limit n
    #[arg(long)]
    n: u64,
    /// Evaluation method
    #[arg(long, value_enum)]
    method: MethodArg,
    /// Print S_p(1..=n) instead of the single value
    #[arg(long)]
    table: bool,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Clone, Copy, ValueEnum)]
enum CatalanMethodArg {
    /// C(2p, p) / (p+1)
    Closed,
    /// Cycle-count average over Stirling row p+1 (p >= 1)
    Stirling,
}

impl CatalanMethodArg {
    fn name(self) -> &'static str {
        match self {
            CatalanMethodArg::Closed => "closed",
            CatalanMethodArg::Stirling => "stirling",
        }
    }
}

#[derive(Args)]
struct CatalanArgs {
    /// Index p
    #[arg(long)]
    p: u32,
    /// Evaluation method
    #[arg(long, value_enum)]
    method: CatalanMethodArg,
    /// Print C_1 ..= C_p instead of the single value
    #[arg(long)]
    upto: bool,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args)]
struct FaulhaberArgs {
    /// Exponent p; the polynomial has degree p+1
    #[arg(long)]
    p: u32,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity to sweep
    #[arg(long, value_enum)]
    identity: sweep::Identity,
    /// Inclusive upper bound for p
    #[arg(long)]
    p_max: u32,
    /// Inclusive upper bound for n (identities swept over n)
    #[arg(long)]
    n_max: Option<u64>,
    /// Inclusive upper bound for r (identities swept over r)
    #[arg(long)]
    r_max: Option<u64>,
    /// Stop at the first failing cell
    #[arg(long)]
    fail_fast: bool,
    /// Worker threads for the sweep
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[command(flatten)]
    out: OutputOpts,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Stirling(args) => {
            let values = stirsum_core::stirling_row(args.row);
            let payload = output::indexed_values(args.out.format, "k", 0, &values);
            output::emit(&args.out.output, &payload)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Powersum(args) => {
            let payload = if args.table {
                if args.n == 0 {
                    return Err("--table requires --n >= 1".into());
                }
                let values: Vec<_> = (1..=args.n)
                    .map(|k| powersum::powersum(args.p, k, args.method.core()))
                    .collect();
                output::indexed_values(args.out.format, "n", 1, &values)
            } else {
                let value = powersum::powersum(args.p, args.n, args.method.core());
                output::powersum_single(args.out.format, args.p, args.n, args.method.name(), &value)
            };
            output::emit(&args.out.output, &payload)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalan(args) => {
            if matches!(args.method, CatalanMethodArg::Stirling) && args.p == 0 {
                return Err(
                    "--method stirling requires --p >= 1; C_0 is only available from --method closed"
                        .into(),
                );
            }
            let eval = |p: u32| match args.method {
                CatalanMethodArg::Closed => catalan::catalan_closed(p),
                CatalanMethodArg::Stirling => catalan::catalan_stirling(p),
            };
            let payload = if args.upto {
                if args.p == 0 {
                    return Err("--upto requires --p >= 1".into());
                }
                let values: Vec<_> = (1..=args.p).map(eval).collect();
                output::indexed_values(args.out.format, "p", 1, &values)
            } else {
                output::catalan_single(args.out.format, args.p, args.method.name(), &eval(args.p))
            };
            output::emit(&args.out.output, &payload)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Faulhaber(args) => {
            let poly = powersum::faulhaber_polynomial(args.p);
            let payload = output::faulhaber(args.out.format, poly.coeffs());
            output::emit(&args.out.output, &payload)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let spec = sweep::SweepSpec {
                identity: args.identity,
                p_max: args.p_max,
                n_max: args.n_max,
                r_max: args.r_max,
                fail_fast: args.fail_fast,
                jobs: args.jobs,
            };
            let started = Instant::now();
            let report = sweep::run(&spec)?;
            let elapsed = started.elapsed();
            let payload = output::report(args.out.format, &report);
            output::emit(&args.out.output, &payload)?;
            if args.out.format == Format::Text {
                eprintln!("elapsed: {elapsed:?}");
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
