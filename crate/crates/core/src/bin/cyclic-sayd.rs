use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cyclic_sayd::config::{parse_config, side_ambient, ComputationConfig, PipelineSpec};
use cyclic_sayd::cyclic::PrecocyclicObject;
use cyclic_sayd::harness::{run_all, Suite};
use cyclic_sayd::linalg::Matrix;
use cyclic_sayd::report::Report;

/// Largest ambient dimension for which `explain` prints matrices.
const EXPLAIN_CAP: usize = 64;

#[derive(Parser)]
#[command(name = "cyclic-sayd", version, about = "Exact Hochschild and cyclic cohomology with SAYD coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute HH and HC for a JSON config (`-` reads stdin)
    Compute {
        config: String,
        #[command(flatten)]
        run: RunFlags,
        #[arg(long, value_enum)]
        pipeline: Option<PipelineSpec>,
    },
    /// Run invariance suites; all of them when no --suite is given
    Verify {
        #[arg(long = "suite")]
        suites: Vec<Suite>,
        #[command(flatten)]
        run: RunFlags,
    },
    /// Print the spaces and, for small instances, the matrices a config builds
    Explain {
        config: String,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum)]
        pipeline: Option<PipelineSpec>,
    },
}

#[derive(Args)]
struct RunFlags {
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// also write the report here
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn load(path: &str) -> Result<ComputationConfig, String> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("reading stdin: {e}"))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))?
    };
    parse_config(&text).map_err(|e| e.to_string())
}

fn emit(report: &Report, flags: &RunFlags) -> ExitCode {
    let rendered = match flags.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    };
    print!("{rendered}");
    if let Some(path) = &flags.out {
        if let Err(e) = std::fs::write(path, &rendered) {
            return usage_error(format!("writing {}: {e}", path.display()));
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn override_config(cfg: &mut ComputationConfig, max_degree: Option<usize>, budget: Option<usize>, pipeline: Option<PipelineSpec>) {
    if let Some(n) = max_degree {
        cfg.max_degree = n;
    }
    if let Some(b) = budget {
        cfg.budget = b;
    }
    if let Some(p) = pipeline {
        cfg.pipeline = p;
    }
}

fn matrix_text(m: &Matrix) -> String {
    let mut out = String::new();
    for row in m.to_dense() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
        let _ = writeln!(out, "      {}", cells.join(" "));
    }
    out
}

fn explain_object(obj: &PrecocyclicObject, show: bool) -> String {
    let mut out = String::new();
    for (n, d) in obj.dims.iter().enumerate() {
        let _ = writeln!(out, "    C^{n}: dim {d}");
        if show {
            let _ = writeln!(out, "    tau_{n}:");
            out.push_str(&matrix_text(&obj.cyclic[n]));
            if let Some(faces) = obj.cofaces.get(n) {
                for (i, f) in faces.iter().enumerate() {
                    let _ = writeln!(out, "    delta_{i}: C^{n} -> C^{}", n + 1);
                    out.push_str(&matrix_text(f));
                }
            }
        }
    }
    out
}

fn explain(cfg: &ComputationConfig) -> ExitCode {
    let comp = match cfg.build() {
        Ok(c) => c,
        Err(e) => return usage_error(e),
    };
    println!("{} (N = {}, algebra dim {}, coefficient dim {})", comp.name, comp.max_degree, comp.algebra.dim(), comp.trace.coeff().dim());
    for (label, side) in &comp.sides {
        let ambient = side_ambient(side, comp.max_degree).unwrap_or(usize::MAX);
        let show = ambient <= EXPLAIN_CAP;
        println!("  {label}: largest ambient {ambient}{}", if show { "" } else { " (matrices omitted above 64)" });
        match side.build(comp.max_degree, comp.budget) {
            Ok(obj) => print!("{}", explain_object(&obj, show)),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute { config, run, pipeline } => {
            let mut cfg = match load(&config) {
                Ok(c) => c,
                Err(e) => return usage_error(e),
            };
            override_config(&mut cfg, run.max_degree, run.budget, pipeline);
            let comp = match cfg.build() {
                Ok(c) => c,
                Err(e) => return usage_error(e),
            };
            let report = Report::timed(|| (vec![comp.run()], vec![]));
            emit(&report, &run)
        }
        Command::Verify { suites, run } => {
            let suites = if suites.is_empty() { Suite::ALL.to_vec() } else { suites };
            let n = run.max_degree.unwrap_or(cyclic_sayd::cyclic::DEFAULT_MAX_DEGREE);
            if n == 0 {
                return usage_error("--max-degree must be at least 1");
            }
            let budget = run.budget.unwrap_or(cyclic_sayd::cyclic::DEFAULT_BUDGET);
            let report = Report::timed(|| (vec![], run_all(&suites, n, budget)));
            emit(&report, &run)
        }
        Command::Explain { config, max_degree, pipeline } => {
            let mut cfg = match load(&config) {
                Ok(c) => c,
                Err(e) => return usage_error(e),
            };
            override_config(&mut cfg, max_degree, None, pipeline);
            explain(&cfg)
        }
    }
}
