use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use koszul::algebra::json::{parse_elements, AlgebraDoc, SourceDoc};
use koszul::verify::{self, CheckSpec, TableKind, VerificationReport};
use koszul::{Formula, Koszul};

#[derive(Parser)]
#[command(name = "koszul", version, about = "Exact higher Koszul brackets and their identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run identity checks and report pass/fail per check.
    Verify {
        /// `default` for every registered check, or a JSON file with a list
        /// of check specs.
        #[arg(long, default_value = "default")]
        suite: String,
        /// Only run these check ids (repeatable).
        #[arg(long = "check")]
        checks: Vec<String>,
        /// Seed for every check; overrides the seeds of a suite file.
        #[arg(long)]
        seed: Option<u64>,
        /// Random tuples per comparison; overrides a suite file.
        #[arg(long)]
        samples: Option<usize>,
        /// Worker threads.
        #[arg(long, default_value_t = koszul::par::default_jobs())]
        jobs: usize,
        /// Write the reports as JSON to this file.
        #[arg(long)]
        json: Option<PathBuf>,
        /// List the registered check ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Evaluate one bracket `Psi^n(a_1, .., a_n)`.
    Eval {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        source: PathBuf,
        #[arg(long, default_value = "recursive")]
        formula: String,
        #[arg(long)]
        n: usize,
        /// JSON list of the `n` arguments.
        #[arg(long)]
        args: PathBuf,
        #[arg(long, value_enum, default_value_t = EvalFormat::Json)]
        format: EvalFormat,
    },
    /// Print a table of exact coefficients.
    Tables {
        /// bernoulli, bernoulli2d, gaugeK or stirling.
        #[arg(long)]
        what: String,
        #[arg(long, default_value_t = 12)]
        max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalFormat {
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Text,
}

const DEFAULT_SEED: u64 = 1;
const DEFAULT_SAMPLES: usize = 20;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_suite(suite: &str, seed: Option<u64>, samples: Option<usize>) -> Result<Vec<CheckSpec>> {
    if suite == "default" {
        return Ok(verify::default_suite(
            seed.unwrap_or(DEFAULT_SEED),
            samples.unwrap_or(DEFAULT_SAMPLES),
        ));
    }
    let path = Path::new(suite);
    let mut specs = CheckSpec::parse_suite(&read(path)?)
        .with_context(|| format!("malformed suite file {}", path.display()))?;
    for spec in &mut specs {
        if let Some(s) = seed {
            spec.seed = s;
        }
        if let Some(n) = samples {
            spec.samples = n;
        }
    }
    Ok(specs)
}

fn print_report(r: &VerificationReport) {
    let status = if r.passed() { "pass" } else { "FAIL" };
    println!(
        "{status}  {:<22} {:>6} samples  {:>9.2?}",
        r.check_id, r.samples_run, r.elapsed
    );
    if let Some(e) = &r.error {
        println!("      error: {e}");
    }
    if let Some(c) = &r.counterexample {
        let compact = |v: serde_json::Result<String>| v.unwrap_or_default();
        println!("      {}", c.label);
        println!("      inputs: {}", compact(serde_json::to_string(&c.inputs)));
        println!("      lhs:    {}", compact(serde_json::to_string(&c.lhs)));
        println!("      rhs:    {}", compact(serde_json::to_string(&c.rhs)));
    }
}

fn run_verify(
    suite: &str,
    checks: &[String],
    seed: Option<u64>,
    samples: Option<usize>,
    jobs: usize,
    json: Option<&Path>,
) -> Result<bool> {
    let mut specs = load_suite(suite, seed, samples)?;
    if !checks.is_empty() {
        let known = verify::check_ids();
        for c in checks {
            if !known.contains(&c.as_str()) {
                bail!("unknown check {c:?}; see `koszul verify --list`");
            }
        }
        specs.retain(|s| checks.contains(&s.check_id));
    }
    let reports = verify::run_suite(&specs, jobs.max(1));
    for r in &reports {
        print_report(r);
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    println!("{passed} of {} checks passed", reports.len());
    if let Some(path) = json {
        let text = serde_json::to_string_pretty(&reports)?;
        fs::write(path, text + "\n").with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(verify::all_passed(&reports))
}

fn run_eval(
    algebra: &Path,
    source: &Path,
    formula: &str,
    n: usize,
    args: &Path,
    format: EvalFormat,
) -> Result<()> {
    let sig = AlgebraDoc::parse(&read(algebra)?)
        .with_context(|| format!("malformed algebra in {}", algebra.display()))?;
    let src = SourceDoc::parse(&sig, &read(source)?)
        .with_context(|| format!("malformed source in {}", source.display()))?;
    let inputs = parse_elements(&sig, &read(args)?)
        .with_context(|| format!("malformed arguments in {}", args.display()))?;
    let formula: Formula = formula.parse()?;
    if inputs.len() != n {
        bail!("--n {n} but {} holds {} arguments", args.display(), inputs.len());
    }
    let ev = Koszul::default().evaluate(&src, formula, &inputs)?;
    match format {
        EvalFormat::Json => println!("{}", serde_json::to_string_pretty(&ev.to_json())?),
        EvalFormat::Latex => println!("{}", ev.to_latex()),
    }
    Ok(())
}

fn run_tables(what: &str, max: usize, format: TableFormat) -> Result<()> {
    let kind: TableKind = what.parse()?;
    match format {
        TableFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(&verify::emit_tables(kind, max)?)?
        ),
        TableFormat::Text => print!("{}", verify::render_table_text(kind, max)?),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify { list: true, .. } => {
            for id in verify::check_ids() {
                println!("{id}");
            }
            Ok(true)
        }
        Command::Verify {
            suite,
            checks,
            seed,
            samples,
            jobs,
            json,
            list: false,
        } => run_verify(&suite, &checks, seed, samples, jobs, json.as_deref()),
        Command::Eval {
            algebra,
            source,
            formula,
            n,
            args,
            format,
        } => run_eval(&algebra, &source, &formula, n, &args, format).map(|_| true),
        Command::Tables { what, max, format } => run_tables(&what, max, format).map(|_| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
