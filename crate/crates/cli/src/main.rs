use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use domcheck::exact::DEFAULT_CAP;
use domcheck::harness::{run_check, run_gen, Format, Methods, RunConfig};
use domcheck::selection::transversal_bound;
use domcheck::threshold::large_degree_threshold;

/// Exact checks of `γ(G) ≤ γ_e(G)` on regular graphs, with constructive
/// dominating sets built from minimum maximal matchings.
#[derive(Parser)]
#[command(name = "domcheck", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every graph6 record of the input and stream a report to stdout.
    Check {
        /// graph6 file, one graph per line, or `-` for stdin.
        #[arg(long, default_value = "-")]
        input: String,
        /// Largest order the exact solvers accept (at most 64).
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Comma-separated constructions: t1, t1d, t2, t3.
        #[arg(long, default_value = "t1,t1d,t2,t3")]
        methods: Methods,
        /// Monte Carlo samples per graph for t1.
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value = "jsonl")]
        format: Format,
        /// Stop after the first counterexample or certificate violation.
        #[arg(long)]
        fail_fast: bool,
    },
    /// Emit random regular graphs in graph6.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the transversal bound factor and the large-degree verdict for Δ.
    Bound {
        #[arg(long)]
        delta: u32,
    },
}

fn open_input(path: &str) -> Result<Box<dyn BufRead>> {
    if path == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let file = File::open(PathBuf::from(path)).with_context(|| format!("cannot open {path}"))?;
    Ok(Box::new(BufReader::new(file)))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Check {
            input,
            cap,
            methods,
            trials,
            seed,
            jobs,
            format,
            fail_fast,
        } => {
            let config = RunConfig {
                input,
                cap,
                seed,
                trials,
                methods,
                jobs,
                format,
                fail_fast,
            };
            config.validate()?;
            let reader = open_input(&config.input)?;
            let stdout = io::stdout().lock();
            let summary = run_check(&config, reader, BufWriter::new(stdout))?;
            if format == Format::Csv || summary.exit_code != 0 {
                eprintln!("{summary}");
            }
            Ok(summary.exit_code as u8)
        }
        Command::Gen {
            n,
            delta,
            count,
            seed,
        } => {
            run_gen(n, delta, count, seed, BufWriter::new(io::stdout().lock()))?;
            Ok(0)
        }
        Command::Bound { delta } => {
            if delta == 0 {
                bail!("delta must be positive");
            }
            let factor = transversal_bound(delta);
            let verdict = large_degree_threshold(delta);
            let mut out = io::stdout().lock();
            writeln!(out, "delta: {delta}")?;
            writeln!(out, "transversal_bound: {factor}")?;
            writeln!(
                out,
                "large_degree_threshold: {} (lhs {:.6} in [{:.9}, {:.9}], rhs {} = {:.6})",
                verdict.holds,
                verdict.lhs_f64(),
                ratio_f64(&verdict.lhs_lower),
                ratio_f64(&verdict.lhs_upper),
                verdict.rhs,
                verdict.rhs_f64()
            )?;
            Ok(0)
        }
    }
}

fn ratio_f64(r: &num_rational::BigRational) -> f64 {
    num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
