use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use overlap_gap::bench::{run_benchmark, PairFamily};
use overlap_gap::sequences::format_set;
use overlap_gap::verify::{run_suite, Suite, DEFAULT_SEED};
use overlap_gap::{
    decide_og_finite, decide_og_finite_one_sided, exact_gap_sets, gap_sequence,
    one_sided_gap_sequence, ExtensionSide, FinitenessVerdict, GapSequence, Left, Literal, Outcome,
    Right, Witness,
};

const DEFAULT_MAX_N: usize = 1_000_000;
const MAX_N_VAR: &str = "OVERLAP_GAP_MAX_N";

#[derive(Parser)]
#[command(
    name = "overlap-gap",
    version,
    about = "Overlap gaps between infinite words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate log, rog and og for n = 0..=N.
    Table {
        left: String,
        right: String,
        #[arg(long, default_value_t = 20)]
        n: usize,
        /// Treat both words as left-infinite.
        #[arg(long)]
        one_sided: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Decide whether og has finite image (exit 0 finite, 1 infinite, 3 undecided).
    Decide {
        left: String,
        right: String,
        #[arg(long)]
        one_sided: bool,
    },
    /// Exact LOG, ROG and OG for a pair with conjugate periods.
    Sets { left: String, right: String },
    /// Run property suites and emit one JSON line per property.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Write JSON lines here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Time the naive and linear kernels.
    Bench {
        #[arg(long)]
        len: usize,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = Family::Periodic)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Periodic,
    Uniform,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
        .map_err(|e| format!("{e} (expected one of {})", Suite::NAMES.join(", ")))
}

/// A failure with its exit code.
struct Fail(u8, String);

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail(2, e.to_string())
    }
}

fn parse_pair(left: &str, right: &str) -> Result<(Left<char>, Right<char>), Fail> {
    Ok((
        Literal::parse(left)?.into_left()?,
        Literal::parse(right)?.into_right()?,
    ))
}

fn parse_one_sided(left: &str, right: &str) -> Result<(Left<char>, Left<char>), Fail> {
    Ok((
        Literal::parse(left)?.into_left()?,
        Literal::parse(right)?.into_left()?,
    ))
}

fn max_n() -> Result<usize, Fail> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Fail(2, format!("{MAX_N_VAR}: not a number: `{v}`"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn write_csv(out: &mut impl Write, seq: &GapSequence) -> io::Result<()> {
    writeln!(out, "n,log,rog,og")?;
    for r in &seq.records {
        writeln!(out, "{},{},{},{}", r.n, r.log, r.rog, r.og)?;
    }
    Ok(())
}

fn write_md(out: &mut impl Write, seq: &GapSequence) -> io::Result<()> {
    let row = |name: &str, xs: Vec<usize>| {
        let cells: Vec<String> = xs.iter().map(ToString::to_string).collect();
        format!("| {name} | {} |", cells.join(" | "))
    };
    let ns: Vec<usize> = seq.records.iter().map(|r| r.n).collect();
    writeln!(out, "{}", row("n", ns))?;
    writeln!(out, "|---|{}", "---|".repeat(seq.records.len()))?;
    writeln!(out, "{}", row("log", seq.logs().collect()))?;
    writeln!(out, "{}", row("rog", seq.rogs().collect()))?;
    writeln!(out, "{}", row("og", seq.ogs().collect()))?;
    Ok(())
}

fn print_verdict(verdict: &FinitenessVerdict<char>) -> u8 {
    let outcome = verdict.outcome();
    let label = match outcome {
        Outcome::Finite => "finite",
        Outcome::Infinite => "infinite",
        Outcome::Undecided => "undecided",
    };
    println!("{label}");
    match &verdict.witness {
        Some(Witness::CommonPeriod {
            period,
            left_preperiod,
            right_preperiod,
        }) => {
            println!("witness: ({period})~{left_preperiod} {right_preperiod}~({period})");
        }
        Some(Witness::Extension { word, side }) => {
            let side = match side {
                ExtensionSide::RightExtendsLeft => "right = left",
                ExtensionSide::LeftExtendsRight => "left = right",
            };
            println!("witness: {side} + {word}");
        }
        None => {}
    }
    if let Some(reason) = &verdict.reason {
        println!("reason: {reason}");
    }
    if let Some(e) = &verdict.evidence {
        println!(
            "max og: {} up to n={}, {} up to n={}",
            e.max_og[0], e.horizons[0], e.max_og[1], e.horizons[1]
        );
    }
    match outcome {
        Outcome::Finite => 0,
        Outcome::Infinite => 1,
        Outcome::Undecided => 3,
    }
}

fn run(cli: Cli) -> Result<u8, Fail> {
    match cli.command {
        Command::Table {
            left,
            right,
            n,
            one_sided,
            format,
        } => {
            let cap = max_n()?;
            if n > cap {
                return Err(Fail(
                    2,
                    format!("horizon {n} exceeds the cap {cap} (set {MAX_N_VAR})"),
                ));
            }
            let seq = if one_sided {
                let (l, r) = parse_one_sided(&left, &right)?;
                one_sided_gap_sequence(&l, &r, n)
            } else {
                let (l, r) = parse_pair(&left, &right)?;
                gap_sequence(&l, &r, n)
            };
            let mut out = BufWriter::new(io::stdout().lock());
            match format {
                Format::Csv => write_csv(&mut out, &seq)?,
                Format::Md => write_md(&mut out, &seq)?,
            }
            out.flush()?;
            Ok(0)
        }
        Command::Decide {
            left,
            right,
            one_sided,
        } => Ok(if one_sided {
            let (l, r) = parse_one_sided(&left, &right)?;
            print_verdict(&decide_og_finite_one_sided(&l, &r))
        } else {
            let (l, r) = parse_pair(&left, &right)?;
            print_verdict(&decide_og_finite(&l, &r))
        }),
        Command::Sets { left, right } => {
            let (l, r) = parse_pair(&left, &right)?;
            let sets = exact_gap_sets(&l, &r).map_err(|e| Fail(1, e.to_string()))?;
            println!("LOG = {}", sets.log);
            println!("ROG = {}", format_set(&sets.rog));
            println!("OG = {}", format_set(&sets.og));
            Ok(0)
        }
        Command::Verify {
            suite,
            seed,
            output,
        } => {
            let reports = run_suite(suite, seed);
            let mut out: Box<dyn Write> = match output {
                Some(path) => Box::new(BufWriter::new(File::create(path)?)),
                None => Box::new(io::stdout().lock()),
            };
            for r in &reports {
                writeln!(out, "{}", r.to_json_line())?;
                eprintln!("{r}");
            }
            out.flush()?;
            Ok(if reports.iter().all(|r| r.passed()) {
                0
            } else {
                1
            })
        }
        Command::Bench {
            len,
            trials,
            family,
            seed,
        } => {
            let family = match family {
                Family::Periodic => PairFamily::Periodic,
                Family::Uniform => PairFamily::Uniform,
            };
            let report = run_benchmark(len, trials, family, seed);
            println!("len: {len}, trials: {trials}");
            println!("naive median: {:.3} ms", report.naive_median_ms);
            println!("linear median: {:.3} ms", report.linear_median_ms);
            println!("speedup: {:.1}x", report.speedup());
            println!("agree: {}", report.agree);
            if report.agree {
                Ok(0)
            } else {
                Err(Fail(1, "kernels disagree".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
