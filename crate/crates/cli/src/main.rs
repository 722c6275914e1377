use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use zsym_cli::report::Report;
use zsym_cli::scenarios::{self, Params, Scenario, SCENARIOS};
use zsym_core::lie::{AlgebraFile, AlgebraLabel, LieError};
use zsym_core::sampling::DEFAULT_SEED;

#[derive(Parser)]
#[command(
    name = "zsym",
    version,
    about = "Exact verification of Z2^k-symmetric structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List scenario names.
    List,
    /// Run one scenario.
    Run {
        scenario: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Record wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Load an algebra file and verify it.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run every scenario.
    RunAll {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        timing: bool,
    },
}

fn execute(s: &Scenario, params: &Params, timing: bool) -> Report {
    let start = Instant::now();
    let mut report = s.run(params);
    if timing {
        report.elapsed_ms = start.elapsed().as_millis() as u64;
    }
    report
}

/// Writes to stdout, ignoring a closed pipe.
fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit(reports: &[Report], json: bool) {
    if json {
        let lines: Vec<String> = reports.iter().map(Report::to_json).collect();
        if lines.len() == 1 {
            out(&format!("{}\n", lines[0]));
        } else {
            out(&format!("[{}]\n", lines.join(",")));
        }
    } else {
        let text: String = reports.iter().map(Report::render).collect();
        out(&text);
    }
}

fn exit_for(reports: &[Report]) -> ExitCode {
    if reports.iter().all(Report::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool")
}

fn check_file(path: &Path, json: bool) -> ExitCode {
    let file = match AlgebraFile::read(path) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let label = AlgebraLabel::new(format!("file:{}", path.display())).expect("nonempty");
    let loaded = match file.to_algebra(label) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut r = Report::new("check");
    match loaded {
        Ok(alg) => {
            r.expect("antisymmetric", true, true);
            r.expect("Jacobi violations", 0, 0);
            r.record("dimension", "-", alg.dim(), true);
            r.record(
                "center",
                "-",
                format!("dim {} {}", alg.center().dim(), alg.center()),
                true,
            );
            r.record(
                "derived subalgebra dimension",
                "-",
                alg.derived_subalgebra().dim(),
                true,
            );
        }
        Err(e @ LieError::NotAntisymmetric { .. }) => r.record("antisymmetric", true, e, false),
        Err(e @ LieError::Jacobi { .. }) => {
            r.expect("antisymmetric", true, true);
            r.record("Jacobi violations", 0, e, false);
        }
        Err(e) => r.record("structure tensor", "valid", e, false),
    }
    let r = r.finish();
    emit(std::slice::from_ref(&r), json);
    exit_for(std::slice::from_ref(&r))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::List => {
            let text: String = SCENARIOS
                .iter()
                .map(|s| format!("{:<28} {}\n", s.name, s.claim))
                .collect();
            out(&text);
            ExitCode::SUCCESS
        }
        Command::Run {
            scenario,
            seed,
            json,
            jobs,
            timing,
        } => {
            let Some(s) = scenarios::find(&scenario) else {
                eprintln!("error: unknown scenario {scenario:?}; try `zsym list`");
                return ExitCode::from(2);
            };
            let report = pool(jobs).install(|| execute(s, &Params { seed }, timing));
            emit(std::slice::from_ref(&report), json);
            exit_for(std::slice::from_ref(&report))
        }
        Command::RunAll {
            seed,
            json,
            jobs,
            timing,
        } => {
            let params = Params { seed };
            let reports: Vec<Report> = pool(jobs).install(|| {
                SCENARIOS
                    .par_iter()
                    .map(|s| execute(s, &params, timing))
                    .collect()
            });
            emit(&reports, json);
            exit_for(&reports)
        }
        Command::Check { file, json } => check_file(&file, json),
    }
}
