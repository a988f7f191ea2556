use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use equitor::cli::{parse_job, run, Task};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Table,
    Json,
}

/// Equivariant Betti numbers of symmetric monomial ideals.
#[derive(Debug, Parser)]
#[command(version)]
struct Args {
    /// Job document (JSON); reads stdin when absent or `-`.
    job: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "table")]
    format: Format,

    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,

    /// Replace the job's task list, e.g. `--task betti --task propagate:5`.
    #[arg(long = "task")]
    tasks: Vec<String>,
}

fn read_input(path: Option<&PathBuf>) -> std::io::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    if let Some(t) = args.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let text = match read_input(args.job.as_ref()) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read job: {e}");
            return ExitCode::from(1);
        }
    };
    let mut job = match parse_job(&text) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if !args.tasks.is_empty() {
        match args.tasks.iter().map(|t| t.parse::<Task>()).collect() {
            Ok(tasks) => job.spec.tasks = tasks,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
        }
    }
    let report = match run(&job) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match args.format {
        Format::Table => print!("{}", report.render_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    if report.verified() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}
