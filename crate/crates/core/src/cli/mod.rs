//! The `hallgpd` command line: structure-constant tables, verification
//! suites and direct access to the groupoid engine.
//!
//! Exit codes: 0 when every selected check passes, 1 when a check fails,
//! 2 on usage, configuration or input errors. Reports go to stdout or
//! `--out`; wall-clock timings go to stderr so reports are reproducible.

pub mod bundled;
pub mod groupoid_cmd;
pub mod suites;
pub mod tables;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{Budget, PrimeField};
use crate::hall::HallAlgebra;
use crate::quiver::Quiver;
use crate::report::CheckReport;

pub use suites::{run_suite, Suite, SuiteConfig};

#[derive(Debug, Parser)]
#[command(
    name = "hallgpd",
    version,
    about = "Exact Hall algebra tables and verification suites"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write product and coproduct tables for every class within the bound.
    Tables {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a verification suite and report every failing instance.
    Verify {
        suite: Suite,
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Seed for the random span instances.
        #[arg(long, default_value_t = crate::groupoid::random::DEFAULT_SEED)]
        seed: u64,
        /// Run a single instance, by the id printed in a failure.
        #[arg(long)]
        only: Option<String>,
        /// Bound for suites that enumerate tuples of objects over `A₀`.
        #[arg(long, default_value_t = 2)]
        object_dim: usize,
        /// Number of random span pairs in the engine suite.
        #[arg(long, default_value_t = 50)]
        engine_instances: usize,
        /// Largest set size in the finite-sets suite.
        #[arg(long, default_value_t = 8)]
        finite_sets_max: usize,
    },
    /// Groupoid engine operations on JSON files.
    Groupoid {
        #[command(subcommand)]
        op: groupoid_cmd::GroupoidOp,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct AlgebraArgs {
    /// Quiver file, or the name of a bundled quiver.
    #[arg(long, default_value = "a2.json")]
    pub quiver: String,
    /// Prime field size.
    #[arg(long, default_value_t = 2)]
    pub q: u64,
    /// Largest total dimension.
    #[arg(long, default_value_t = 3)]
    pub max_dim: usize,
    /// Enumeration budget per search.
    #[arg(long, default_value_t = 1 << 22)]
    pub budget: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
}

impl AlgebraArgs {
    pub fn algebra(&self) -> Result<HallAlgebra> {
        if self.budget == 0 {
            return Err(Error::Input("--budget must be positive".into()));
        }
        let quiver = Quiver::from_json(&bundled::read(&self.quiver)?)?;
        Ok(HallAlgebra::new(
            Arc::new(quiver),
            PrimeField::new(self.q)?,
            Budget(self.budget),
        ))
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub quiver: String,
    pub q: u64,
    pub max_dim: usize,
    pub object_dim: usize,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckReport>,
}

impl VerifyReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,instances,failures,first_instance,first_detail\n");
        for c in &self.checks {
            let (id, detail) = c.failures.first().map_or((String::new(), String::new()), |f| {
                (f.instance.clone(), f.detail.clone())
            });
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                c.check,
                c.instances,
                c.failures.len(),
                csv_field(&id),
                csv_field(&detail)
            ));
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn emit(output: &OutputArgs, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Runs a parsed command and returns its exit code.
pub fn execute(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Tables { algebra, output } => {
            let h = algebra.algebra()?;
            let started = Instant::now();
            let t = tables::tables(&h, algebra.max_dim)?;
            let text = match output.format {
                Format::Json => to_json(&t),
                Format::Csv => t.to_csv(),
            };
            emit(&output, &text, stdout)?;
            writeln!(stderr, "tables: {} ms", started.elapsed().as_millis())?;
            Ok(0)
        }
        Command::Verify {
            suite,
            algebra,
            output,
            seed,
            only,
            object_dim,
            engine_instances,
            finite_sets_max,
        } => {
            let h = algebra.algebra()?;
            let cfg = SuiteConfig {
                max_dim: algebra.max_dim,
                object_dim,
                seed,
                engine_instances,
                equivalence_instances: 20,
                finite_sets_max,
            };
            let mut checks = Vec::new();
            for s in suite.expand() {
                let started = Instant::now();
                let reports = run_suite(&h, s, &cfg, only.as_deref())?;
                let instances: usize = reports.iter().map(|r| r.instances).sum();
                writeln!(
                    stderr,
                    "{s}: {instances} instances, {} ms",
                    started.elapsed().as_millis()
                )?;
                checks.extend(reports);
            }
            let passed = checks.iter().all(CheckReport::passed);
            let report = VerifyReport {
                suite: suite.to_string(),
                quiver: h.quiver().id(),
                q: h.q(),
                max_dim: cfg.max_dim,
                object_dim: cfg.object_dim,
                seed,
                passed,
                checks,
            };
            let text = match output.format {
                Format::Json => to_json(&report),
                Format::Csv => report.to_csv(),
            };
            emit(&output, &text, stdout)?;
            Ok(if passed { 0 } else { 1 })
        }
        Command::Groupoid { op, output } => {
            let text = groupoid_cmd::run(&op)?;
            emit(&output, &text, stdout)?;
            Ok(0)
        }
    }
}

/// Parses `args` and runs the command; usage and input errors give 2.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
