use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qtbounds::constabounds::Family;
use qtbounds::context::{BoundConfig, BoundContext};
use qtbounds::lally::LallyBasis;
use qtbounds::linalg::DEFAULT_BUDGET;
use qtbounds::par::Execution;
use qtbounds_cli::golden::run_paper_examples;
use qtbounds_cli::report::code_report;
use qtbounds_cli::sweep::{ratios, run_sweep, summarize, write_csv, SweepConfig};
use qtbounds_cli::{load_spec, Evaluator};

#[derive(Parser)]
#[command(
    name = "qtbounds",
    version,
    about = "Minimum-distance bounds for quasi-twisted codes"
)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// Comma-separated families forming the spectral union (b1..b5).
    #[arg(long, global = true, default_value = "b1,b2,b3,b4", value_parser = parse_families)]
    families: Families,
    /// Most eigenvalue subsets scanned for B1.
    #[arg(long, global = true, default_value_t = 1 << 16)]
    subset_cap: u64,
    /// Step budget for each exact distance.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    enum_budget: u64,
    /// Worker threads; 1 runs sequentially.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Basis::Conway)]
    lally_basis: Basis,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Conway,
    Lex,
}

#[derive(Subcommand)]
enum Cmd {
    /// All bounds for one code given as TOML.
    Bounds {
        spec: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Random codes compared against the exact distance.
    Sweep {
        #[command(flatten)]
        sweep: SweepArgs,
        /// CSV output; stdout when omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Write the JSON summary here.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Mean bound-to-distance ratios by code rate.
    Ratios {
        #[command(flatten)]
        sweep: SweepArgs,
        #[arg(long, default_value_t = 10)]
        buckets: usize,
    },
    /// Check the built-in corpus of codes with known values.
    Examples,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 2)]
    q: u32,
    #[arg(long, default_value_t = 1)]
    lambda: u32,
    /// Comma-separated co-indices m.
    #[arg(long, value_delimiter = ',', default_value = "3,5,7")]
    m: Vec<u32>,
    #[arg(long, default_value_t = 2)]
    ell_min: usize,
    #[arg(long, default_value_t = 4)]
    ell_max: usize,
    /// Codes per (m, ell, r).
    #[arg(long, default_value_t = 20)]
    count: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone)]
struct Families(Vec<Family>);

fn parse_families(s: &str) -> Result<Families, String> {
    s.split(',')
        .map(|x| Family::parse(x).ok_or_else(|| format!("unknown family `{x}`")))
        .collect::<Result<_, _>>()
        .map(Families)
}

impl Opts {
    fn config(&self) -> BoundConfig {
        BoundConfig {
            union: self.families.0.clone(),
            subset_cap: self.subset_cap,
            budget: self.enum_budget,
            exec: if self.jobs == Some(1) {
                Execution::Sequential
            } else {
                Execution::Parallel
            },
            ..BoundConfig::default()
        }
    }

    fn basis(&self) -> LallyBasis {
        match self.lally_basis {
            Basis::Conway => LallyBasis::Conway,
            Basis::Lex => LallyBasis::LexSmallest,
        }
    }

    fn evaluator(&self) -> Evaluator {
        let config = BoundConfig {
            exec: Execution::Sequential,
            ..self.config()
        };
        let families = config.union.clone();
        Evaluator::new(config, families).with_lally_basis(self.basis())
    }
}

impl SweepArgs {
    fn config(&self, exec: Execution) -> SweepConfig {
        SweepConfig {
            q: self.q,
            lambda: self.lambda,
            ms: self.m.clone(),
            ell_min: self.ell_min,
            ell_max: self.ell_max,
            count: self.count,
            seed: self.seed,
            exec,
        }
    }
}

enum Failure {
    Golden,
    Input(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.into())
    }
}

fn output(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    let opts = &cli.opts;
    #[cfg(feature = "parallel")]
    if let Some(n) = opts.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    match &cli.cmd {
        Cmd::Bounds { spec, json } => {
            let code = load_spec(spec)?;
            let ctx = BoundContext::new(code.tower().clone(), opts.config());
            let report = code_report(&code, &ctx, &ctx.config().union, opts.basis())?;
            let mut out = io::stdout().lock();
            if *json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                writeln!(out, "{report}")?;
            }
        }
        Cmd::Sweep {
            sweep,
            out,
            summary,
        } => {
            let cfg = sweep.config(opts.config().exec);
            let res = run_sweep(&cfg, &opts.evaluator())?;
            let mut w = output(out)?;
            write_csv(&res.rows, &mut w)?;
            w.flush()?;
            let s = summarize(&res);
            match summary {
                Some(p) => serde_json::to_writer_pretty(BufWriter::new(File::create(p)?), &s)?,
                None => eprintln!("{}", serde_json::to_string_pretty(&s)?),
            }
        }
        Cmd::Ratios { sweep, buckets } => {
            let res = run_sweep(&sweep.config(opts.config().exec), &opts.evaluator())?;
            println!(
                "{:>11} {:>6} {:>7} {:>7} {:>7}",
                "rate", "codes", "L/d", "S/d", "J/d"
            );
            for b in ratios(&res.rows, *buckets) {
                println!(
                    "{:>5.2}-{:<5.2} {:>6} {:>7.3} {:>7.3} {:>7.3}",
                    b.lo, b.hi, b.count, b.mean_l, b.mean_s, b.mean_j
                );
            }
        }
        Cmd::Examples => {
            let mut ok = true;
            for rep in run_paper_examples(&opts.config()) {
                println!("{}", rep.name);
                for c in &rep.checks {
                    let got = match &c.actual {
                        Ok(v) => v.to_string(),
                        Err(e) => format!("error: {e}"),
                    };
                    let mark = if c.passed() { "ok  " } else { "FAIL" };
                    println!("  {mark} {} = {got} (expected {})", c.quantity, c.expected);
                }
                ok &= rep.passed();
            }
            if !ok {
                return Err(Failure::Golden);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Golden) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
