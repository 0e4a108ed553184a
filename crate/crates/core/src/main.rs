use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::ops::RangeInclusive;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, ValueEnum};

use recol::io::{
    emit_stats, parse_graph, write_coloring, BatchStats, BatchSummary, Format, ParsedGraph,
    RunStats,
};
use recol::oracle::{brute_force_chromatic, verify_coloring, ORACLE_MAX_VERTICES};
use recol::{best_coloring_certificate, solve, SolveError, SolveResult, SolverConfig};

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Col,
    Edges,
    Auto,
}

/// Anytime graph coloring by data reduction.
#[derive(Debug, Parser)]
#[command(name = "recol", version)]
struct Cli {
    /// Graph file, or `-` for stdin.
    input: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    format: FormatArg,
    /// Wall-clock budget per run, in seconds.
    #[arg(long, value_name = "SECS", default_value_t = 60.0)]
    time_limit: f64,
    #[arg(long, value_name = "N", default_value_t = 0)]
    seed: u64,
    /// Write the best coloring here.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Write the JSON run report here.
    #[arg(long, value_name = "FILE")]
    stats: Option<PathBuf>,
    /// Re-check the answer with the independent oracle.
    #[arg(long)]
    verify: bool,
    /// Number of runs in batch mode (seeds start at --seed unless --seeds is given).
    #[arg(long, value_name = "K")]
    runs: Option<u64>,
    /// Inclusive seed range for batch mode, e.g. `0..9`.
    #[arg(long, value_name = "A..B", value_parser = parse_seed_range)]
    seeds: Option<RangeInclusive<u64>>,
    /// Run batch seeds on separate threads.
    #[arg(long)]
    parallel: bool,
    /// Stop each run after this many rounds.
    #[arg(long, value_name = "N")]
    max_rounds: Option<u64>,
    /// Leave wall-clock fields out of the stats report.
    #[arg(long)]
    no_timing: bool,
}

fn parse_seed_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (a, b) = s.split_once("..").ok_or("expected A..B")?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: u64 = a.trim().parse().map_err(|e| format!("bad start: {e}"))?;
    let b: u64 = b.trim().parse().map_err(|e| format!("bad end: {e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok(a..=b)
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| run(&cli)));
    match outcome {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(f)) => {
            eprintln!("recol: {}", f.message);
            ExitCode::from(f.code)
        }
        Err(_) => {
            eprintln!("recol: internal invariant violated");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

fn seeds(cli: &Cli) -> Result<Vec<u64>, Failure> {
    let list: Vec<u64> = match (&cli.seeds, cli.runs) {
        (Some(r), runs) => {
            let list: Vec<u64> = r.clone().collect();
            if runs.is_some_and(|k| k != list.len() as u64) {
                return Err(Failure::new(
                    EXIT_USAGE,
                    "--runs disagrees with the size of --seeds",
                ));
            }
            list
        }
        (None, Some(0)) => return Err(Failure::new(EXIT_USAGE, "--runs must be at least 1")),
        (None, Some(k)) => (0..k).map(|i| cli.seed.wrapping_add(i)).collect(),
        (None, None) => vec![cli.seed],
    };
    Ok(list)
}

fn load(cli: &Cli) -> Result<ParsedGraph, Failure> {
    let format = match cli.format {
        FormatArg::Col => Some(Format::Col),
        FormatArg::Edges => Some(Format::Edges),
        FormatArg::Auto => None,
    };
    let reader: Box<dyn Read> = if cli.input.as_os_str() == "-" {
        Box::new(io::stdin().lock())
    } else {
        let f = File::open(&cli.input)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", cli.input.display())))?;
        Box::new(f)
    };
    let parsed = parse_graph(BufReader::with_capacity(1 << 16, reader), format)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", cli.input.display())))?;
    for w in &parsed.warnings {
        eprintln!("recol: warning: {w}");
    }
    if parsed.graph.num_vertices() == 0 {
        return Err(Failure::new(EXIT_PARSE, "input graph has no vertices"));
    }
    Ok(parsed)
}

fn instance_name(path: &Path) -> String {
    if path.as_os_str() == "-" {
        return "stdin".to_owned();
    }
    path.file_name().map_or_else(
        || path.display().to_string(),
        |s| s.to_string_lossy().into_owned(),
    )
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn solve_error(e: SolveError) -> Failure {
    match e {
        SolveError::InvalidConfig(_) => Failure::new(EXIT_USAGE, e.to_string()),
        SolveError::EmptyGraph => Failure::new(EXIT_PARSE, e.to_string()),
        _ => Failure::new(EXIT_INTERNAL, e.to_string()),
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let time_limit = Duration::try_from_secs_f64(cli.time_limit)
        .ok()
        .filter(|d| !d.is_zero())
        .ok_or_else(|| {
            Failure::new(
                EXIT_USAGE,
                "--time-limit must be a positive number of seconds",
            )
        })?;
    let seeds = seeds(cli)?;
    let batch = cli.runs.is_some() || cli.seeds.is_some();
    let parsed = load(cli)?;
    let graph = &parsed.graph;
    let instance = instance_name(&cli.input);

    let config_for = |seed| SolverConfig {
        time_limit,
        seed,
        max_rounds: cli.max_rounds,
        ..SolverConfig::default()
    };
    let results: Vec<Result<SolveResult, SolveError>> = if cli.parallel && seeds.len() > 1 {
        std::thread::scope(|s| {
            let handles: Vec<_> = seeds
                .iter()
                .map(|&seed| {
                    let config = config_for(seed);
                    s.spawn(move || solve(graph, &config))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().unwrap_or_else(|p| panic::resume_unwind(p)))
                .collect()
        })
    } else {
        seeds
            .iter()
            .map(|&seed| solve(graph, &config_for(seed)))
            .collect()
    };
    let results = results
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(solve_error)?;

    for r in &results {
        best_coloring_certificate(graph, r).map_err(solve_error)?;
    }
    let best = results
        .iter()
        .min_by_key(|r| r.ans)
        .expect("at least one run");

    if cli.verify {
        if !verify_coloring(graph, &best.best_coloring)
            || best.best_coloring.num_colors() != best.ans
        {
            return Err(Failure::new(
                EXIT_INTERNAL,
                "verification failed: coloring is not proper",
            ));
        }
        if graph.num_vertices() <= ORACLE_MAX_VERTICES {
            let chi = brute_force_chromatic(graph).expect("size checked");
            if best.ans < chi {
                return Err(Failure::new(
                    EXIT_INTERNAL,
                    format!(
                        "verification failed: {} colors claimed, χ = {chi}",
                        best.ans
                    ),
                ));
            }
            eprintln!("recol: verified proper {}-coloring (χ = {chi})", best.ans);
        } else {
            eprintln!("recol: verified proper {}-coloring", best.ans);
        }
    }

    if let Some(path) = &cli.output {
        let mut out = create(path)?;
        write_coloring(&best.best_coloring, &parsed.labels, &mut out)
            .map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    }

    let timing = !cli.no_timing;
    let runs: Vec<RunStats> = results
        .iter()
        .map(|r| RunStats::from_result(&instance, graph, r, timing))
        .collect();
    let stdout = io::stdout();
    let mut stdout = stdout.lock();
    let report = |e: io::Error| Failure::new(EXIT_USAGE, e.to_string());
    if batch {
        let answers: Vec<usize> = results.iter().map(|r| r.ans).collect();
        let summary = BatchSummary::from_answers(&instance, graph, &answers);
        writeln!(stdout, "{}", summary.row()).map_err(report)?;
        if let Some(path) = &cli.stats {
            emit_stats(&BatchStats::new(summary, runs), create(path)?).map_err(report)?;
        }
    } else {
        let r = &results[0];
        let lb = r
            .lower_bound
            .map_or_else(|| "-".to_owned(), |lb| lb.to_string());
        writeln!(
            stdout,
            "{instance}\t{}\t{}\t{}\t{lb}\t{:.3}",
            graph.num_vertices(),
            graph.num_edges(),
            r.ans,
            r.time_to_best.as_secs_f64()
        )
        .map_err(report)?;
        if let Some(path) = &cli.stats {
            emit_stats(&runs[0], create(path)?).map_err(report)?;
        }
    }
    Ok(())
}
