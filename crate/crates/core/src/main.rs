use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use padovan_core::cli::bench::{self, BenchMethod};
use padovan_core::cli::suites::{run_suites, select, SuiteOptions};
use padovan_core::cli::{
    bench_agrees, cmd_b, cmd_mp, cmd_qpow, cmd_seq, cmd_spectrum, render_bench, render_reports, Format, SeqKind,
    SeqRequest,
};
use padovan_core::exact_arith::parse_rational;
use padovan_core::sequences::PadovanConvention;
use padovan_core::spectra::DEFAULT_TOL;
use padovan_core::Rational;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exact Padovan and bi-periodic Padovan sequences, matrices and spectra.
#[derive(Parser, Debug)]
#[command(name = "padovan", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Output format: json, csv or pretty.
    #[arg(long, global = true, default_value = "json")]
    format: Format,
    /// Root isolation width.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Args, Debug, Clone)]
struct Params {
    /// Even-step coefficient, `p/q` or an integer.
    #[arg(long, default_value = "2", value_parser = rational_arg, allow_hyphen_values = true)]
    a: Rational,
    /// Odd-step coefficient, `p/q` or an integer.
    #[arg(long, default_value = "1", value_parser = rational_arg, allow_hyphen_values = true)]
    b: Rational,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print terms 0..=n of a sequence.
    Seq {
        /// padovan, fibonacci, lucas or biperiodic.
        #[arg(long, default_value = "padovan")]
        kind: SeqKind,
        /// Last index printed.
        #[arg(long)]
        n: u64,
        /// Padovan initial values: classic (1,1,1) or shifted (1,0,1).
        #[arg(long, default_value = "classic")]
        conv: PadovanConvention,
        #[command(flatten)]
        params: Params,
        /// Bi-periodic terms as polynomials in a, b.
        #[arg(long)]
        symbolic: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Print a matrix.
    Matrix {
        #[command(subcommand)]
        op: MatrixOp,
    },
    /// Spectrum of M(1) and eigenvalues of M(0..=n).
    Spectrum {
        #[command(flatten)]
        params: Params,
        /// Largest power of M(1) to diagonalize.
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run verification suites and print one report per suite.
    Verify {
        /// all, 2.1, 2.2, 2.3, 2.4, 2.5, 2.6, 2.8, 2.9, binet or qn.
        #[arg(long, default_value = "all")]
        prop: String,
        /// Depth of every selected suite (each has its own default).
        #[arg(long)]
        max_n: Option<u64>,
        #[command(flatten)]
        params: Params,
        /// Report elapsed_ms as 0 so output is reproducible byte for byte.
        #[arg(long)]
        no_timing: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Compute p(n) by one or all methods and compare them.
    Bench {
        /// Index of the Padovan number to compute.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// naive, matpow, cayley or all.
        #[arg(long, default_value = "all")]
        method: String,
        /// Report elapsed_ms as 0.
        #[arg(long)]
        no_timing: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand, Debug)]
enum MatrixOp {
    /// Q^n.
    Qpow {
        /// Exponent.
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        common: Common,
    },
    /// M(n) of the bi-periodic sequence.
    Mp {
        /// Index of the matrix.
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        params: Params,
        /// Entries as polynomials in a, b.
        #[arg(long)]
        symbolic: bool,
        #[command(flatten)]
        common: Common,
    },
    /// B^n for any integer n.
    B {
        /// Exponent, may be negative.
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[command(flatten)]
        params: Params,
        /// Entries as polynomials in a.
        #[arg(long)]
        symbolic: bool,
        #[command(flatten)]
        common: Common,
    },
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

enum Outcome {
    Pass(String),
    Fail(String),
}

fn run(cli: Cli) -> padovan_core::Result<Outcome> {
    Ok(match cli.command {
        Command::Seq {
            kind,
            n,
            conv,
            params,
            symbolic,
            common,
        } => {
            let req = SeqRequest {
                kind,
                n,
                conv,
                a: params.a,
                b: params.b,
                symbolic,
            };
            Outcome::Pass(cmd_seq(&req, common.format)?)
        }
        Command::Matrix { op } => Outcome::Pass(match op {
            MatrixOp::Qpow { n, common } => cmd_qpow(n, common.format),
            MatrixOp::Mp {
                n,
                params,
                symbolic,
                common,
            } => cmd_mp(n, &params.a, &params.b, symbolic, common.format)?,
            MatrixOp::B {
                n,
                params,
                symbolic,
                common,
            } => cmd_b(n, &params.a, symbolic, common.format)?,
        }),
        Command::Spectrum { params, n, common } => {
            Outcome::Pass(cmd_spectrum(&params.a, &params.b, n, common.tol, common.format)?)
        }
        Command::Verify {
            prop,
            max_n,
            params,
            no_timing,
            common,
        } => {
            let suites = select(&prop).map_err(usage)?;
            let opts = SuiteOptions {
                max_n,
                a: params.a,
                b: params.b,
                tol: common.tol,
            };
            let reports = run_suites(&suites, &opts)?;
            let text = render_reports(&reports, common.format, !no_timing);
            if reports.iter().all(|r| r.passed()) {
                Outcome::Pass(text)
            } else {
                Outcome::Fail(text)
            }
        }
        Command::Bench {
            n,
            method,
            no_timing,
            common,
        } => {
            let methods: Vec<BenchMethod> = if method == "all" {
                BenchMethod::ALL.to_vec()
            } else {
                vec![method.parse().map_err(usage)?]
            };
            let results: Vec<_> = methods.iter().map(|&m| bench::run(m, n)).collect();
            let text = render_bench(&results, common.format, !no_timing);
            let bounded = results
                .iter()
                .filter(|r| r.method == BenchMethod::Matpow)
                .all(|r| r.products.unwrap_or(0) <= bench::product_bound(n));
            if bench_agrees(&results) && bounded {
                Outcome::Pass(text)
            } else {
                Outcome::Fail(text)
            }
        }
    })
}

fn usage(msg: String) -> padovan_core::Error {
    padovan_core::Error::Usage(msg)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(Outcome::Pass(text)) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Fail(text)) => {
            println!("{text}");
            ExitCode::from(EXIT_FAIL)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
