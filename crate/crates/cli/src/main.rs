//! `minicode`: build codes from q-ary functions, compute weight
//! enumerators, decide minimality, and rerun the worked examples.
//!
//! Exit status: 0 success or minimal, 1 not minimal or a repro mismatch,
//! 2 usage, input or guard errors (including an exhausted budget),
//! 3 inconclusive.

mod input;
mod repro;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use minicode_core::code;
use minicode_core::families::TheoremId;
use minicode_core::minimality::{self, CheckOptions, MinimalityReport, Verdict, Witness, BUDGET_ENV};
use minicode_core::witness::TheoremWitness;
use minicode_core::Error;

use input::Input;

const NOT_MINIMAL: u8 = 1;
const ERROR: u8 = 2;
const INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "minicode", version, about = "Minimal linear codes from q-ary functions")]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the generator matrix and defining set of C_f.
    Build {
        /// Preset name or function file.
        input: String,
        /// Output prefix; writes PREFIX.gen.txt and PREFIX.def.txt.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the weight enumerator and code parameters.
    Wdist {
        /// Preset name, function file or matrix file.
        input: String,
        /// The matrix file holds a generator matrix rather than D.
        #[arg(long)]
        generator: bool,
        /// Also write the enumerator as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Decide minimality of the code.
    Check {
        input: String,
        #[arg(long)]
        generator: bool,
        /// definition, ab, dhz, rank or witness:<theorem>.
        #[arg(long, default_value = "rank")]
        criterion: String,
        /// Cap on elementary operations for the rank criterion.
        #[arg(long, env = BUDGET_ENV)]
        budget: Option<u64>,
        /// Where to write the certificate when the verdict is minimal.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Rerun the worked examples against their published values.
    Repro {
        /// Glob over case names.
        #[arg(long)]
        filter: Option<String>,
        /// Include the length-6560 cases.
        #[arg(long)]
        heavy: bool,
        #[arg(long, env = BUDGET_ENV)]
        budget: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(ERROR);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(ERROR)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Build { input, output } => build(&input, output),
        Command::Wdist {
            input,
            generator,
            json,
        } => wdist(&input, generator, json.as_deref()),
        Command::Check {
            input,
            generator,
            criterion,
            budget,
            certificate,
        } => check(&input, generator, &criterion, options(budget), certificate.as_deref()),
        Command::Repro {
            filter,
            heavy,
            budget,
        } => {
            let report = repro::run(filter.as_deref(), heavy, &options(budget))?;
            print!("{}", report.text);
            Ok(if report.failed() { NOT_MINIMAL } else { 0 })
        }
    }
}

fn options(budget: Option<u64>) -> CheckOptions {
    budget.map_or_else(CheckOptions::default, |budget| CheckOptions { budget })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn build(input: &str, output: Option<PathBuf>) -> Result<u8> {
    let input = Input::load(input, false)?;
    if input.function().is_none() {
        bail!("build takes a preset or a function file");
    }
    let d = input.defining_set()?;
    let prefix = output.unwrap_or_else(|| PathBuf::from(input.name()));
    let with = |ext: &str| {
        let mut p = prefix.clone().into_os_string();
        p.push(ext);
        PathBuf::from(p)
    };
    let (gen, def) = (with(".gen.txt"), with(".def.txt"));
    write(&gen, &d.generator_matrix().to_text(d.field()))?;
    write(&def, &d.to_matrix().to_text(d.field()))?;
    println!("n={} k={}", d.n(), d.k());
    println!("generator: {}", gen.display());
    println!("defining set: {}", def.display());
    Ok(0)
}

fn wdist(input: &str, generator: bool, json: Option<&Path>) -> Result<u8> {
    let d = Input::load(input, generator)?.defining_set()?;
    let we = code::weight_distribution(&d)?;
    println!("{we}");
    println!("{}", we.params()?);
    if let Some(path) = json {
        write(path, &we.to_json())?;
    }
    Ok(0)
}

fn check(input: &str, generator: bool, criterion: &str, opts: CheckOptions, cert_path: Option<&Path>) -> Result<u8> {
    let input = Input::load(input, generator)?;
    let d = input.defining_set()?;
    if let Some(thm) = criterion.strip_prefix("witness:") {
        let thm: TheoremId = thm.parse()?;
        let Some(f) = input.function() else {
            bail!("the witness criterion needs a preset or a function file");
        };
        println!("criterion: witness:{thm}");
        let tw = match TheoremWitness::new(thm, f) {
            Ok(tw) => tw,
            Err(Error::HypothesisFailed { condition, .. }) => {
                println!("verdict: inconclusive");
                println!("hypotheses of {thm} fail: {condition}");
                return Ok(INCONCLUSIVE);
            }
            Err(e) => return Err(e.into()),
        };
        let cert = tw.certificate()?;
        if !minimality::verify_certificate(&d, &cert.to_index_certificate(&d)?)? {
            bail!("witness certificate for {thm} does not verify");
        }
        let repaired = cert.classes.iter().filter(|c| c.zero_vector_replaced).count();
        println!("verdict: minimal");
        println!("classes: {}", cert.class_count);
        if repaired > 0 {
            println!("zero vectors replaced: {repaired}");
        }
        if let Some(path) = cert_path {
            write(path, &cert.to_json())?;
            println!("certificate: {}", path.display());
        }
        return Ok(0);
    }
    let report = match criterion {
        "definition" => minimality::is_minimal_definition(&d)?,
        "ab" => minimality::ab_condition(&d)?,
        "dhz" => minimality::dhz_criterion(&d)?,
        "rank" => minimality::rank_criterion_code(&d, &opts)?,
        other => bail!("unknown criterion `{other}` (definition, ab, dhz, rank, witness:<theorem>)"),
    };
    print_report(&report);
    if let (Some(path), Some(cert)) = (cert_path, report.certificate()) {
        write(path, &cert.to_json())?;
        println!("certificate: {}", path.display());
    }
    Ok(match report.verdict {
        Verdict::Minimal => 0,
        Verdict::NotMinimal => NOT_MINIMAL,
        Verdict::Inconclusive => INCONCLUSIVE,
    })
}

fn print_report(report: &MinimalityReport) {
    println!("criterion: {}", report.criterion);
    println!("verdict: {}", report.verdict);
    println!("classes checked: {}", report.classes_checked);
    match &report.witness {
        Some(Witness::Cover(c)) => println!("cover: c{} covers c{}", c.a, c.b),
        Some(Witness::WeightIdentity { a, b, lhs, rhs }) => {
            println!("weight identity: a={a} b={b} sum={lhs} (q-1)wt(a)-wt(b)={rhs}")
        }
        Some(Witness::Ratio { q, w_min, w_max }) => {
            println!("ratio: w_min/w_max = {w_min}/{w_max}, bound ({q}-1)/{q}")
        }
        Some(Witness::Span { y, basis, .. }) => {
            println!("span: y={y} H(y, D) has rank {}, short of k-1", basis.dim())
        }
        _ => {}
    }
}
