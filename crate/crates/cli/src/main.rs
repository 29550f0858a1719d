//! `ringlab`: analyze finite rings, check predicates, run the theorem
//! verifier and search catalogs.
//!
//! Exit codes: 0 success, 1 a predicate or theorem failed, 2 bad input
//! (parse errors, unknown ids, unreadable catalogs), 3 over budget,
//! 4 construction error.

mod formula;
mod report;

use std::fmt::Display;
use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use ringlab_core::dsl::{parse, parse_catalog, CatalogEntry, Config, EvalError, Evaluator};
use ringlab_core::predicates::{evaluate, Predicate};
use ringlab_core::ring::{DEFAULT_MAX_ORDER, HARD_MAX_ORDER};
use ringlab_core::verifier::{default_catalog, Status, TheoremReport, Verifier};
use ringlab_core::FiniteRing;

use formula::parse_formula;
use report::{AnalysisReport, Counterexample, Element};

/// Rings larger than this are not dumped by `elements` without `--force`.
const DISPLAY_BUDGET: usize = 64;

#[derive(Parser)]
#[command(name = "ringlab", version, about = "Finite ring laboratory: unit classes, constructions and theorem checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Budget {
    /// Largest ring order to construct.
    #[arg(long, env = "RINGLAB_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print order, structural subsets and the full predicate table of a ring.
    Analyze {
        /// Ring expression, e.g. "M(2, Z2)".
        expr: String,
        #[arg(long)]
        json: bool,
        /// Include failing elements and certificates.
        #[arg(long)]
        witnesses: bool,
        #[command(flatten)]
        budget: Budget,
    },
    /// Decide one predicate; exits 0 when it holds and 1 when it fails.
    Check {
        /// Predicate id such as 2UNJ or tripotent.
        predicate: String,
        expr: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: Budget,
    },
    /// Run theorem checks over a catalog.
    Verify {
        /// Every registered check.
        #[arg(long, conflicts_with = "theorem", required_unless_present = "theorem")]
        all: bool,
        /// One check by id, e.g. prop-3.8.
        #[arg(long)]
        theorem: Option<String>,
        /// Catalog file; the built-in catalog when omitted.
        #[arg(long)]
        catalog: Option<String>,
        /// One JSON report per line.
        #[arg(long)]
        json: bool,
        /// Worker threads.
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: Option<u16>,
        /// Omit wall times so output is reproducible byte for byte.
        #[arg(long)]
        no_timing: bool,
        #[command(flatten)]
        budget: Budget,
    },
    /// List catalog entries satisfying a formula such as "2UNJ and not UJ".
    Search {
        /// Predicate ids joined by not, and, or and parentheses.
        #[arg(long = "where")]
        formula: String,
        /// Catalog file; the built-in catalog when omitted.
        #[arg(long)]
        catalog: Option<String>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: Budget,
    },
    /// Print the element enumeration and optionally a Cayley table.
    Elements {
        expr: String,
        #[arg(long, value_enum)]
        table: Option<Table>,
        /// Allow rings above the display budget of 64 elements.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        budget: Budget,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    Add,
    Mul,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Display) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            expr,
            json,
            witnesses,
            budget,
        } => analyze(&expr, json, witnesses, budget),
        Command::Check {
            predicate,
            expr,
            json,
            budget,
        } => check(&predicate, &expr, json, budget),
        Command::Verify {
            theorem,
            catalog,
            json,
            jobs,
            no_timing,
            budget,
            ..
        } => verify(theorem.as_deref(), catalog.as_deref(), json, jobs, no_timing, budget),
        Command::Search {
            formula,
            catalog,
            json,
            budget,
        } => search(&formula, catalog.as_deref(), json, budget),
        Command::Elements {
            expr,
            table,
            force,
            budget,
        } => elements(&expr, table, force, budget),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn config(budget: Budget) -> Result<Config, Failure> {
    if budget.max_order == 0 || budget.max_order > HARD_MAX_ORDER {
        return Err(fail(
            2,
            format!("--max-order must be between 1 and {HARD_MAX_ORDER}, got {}", budget.max_order),
        ));
    }
    Ok(Config::with_max_order(budget.max_order))
}

fn eval_failure(e: EvalError) -> Failure {
    if e.is_budget() {
        fail(3, e)
    } else {
        fail(4, e)
    }
}

fn build(text: &str, config: Config) -> Result<Arc<FiniteRing>, Failure> {
    let expr = parse(text).map_err(|e| fail(2, e))?;
    Evaluator::new(config).eval(&expr).map_err(eval_failure)
}

fn json_line(value: &impl Serialize) -> String {
    serde_json::to_string(value).expect("reports serialize")
}

fn analyze(text: &str, json: bool, witnesses: bool, budget: Budget) -> Outcome {
    let ring = build(text, config(budget)?)?;
    let report = AnalysisReport::new(&ring, witnesses);
    if json {
        println!("{}", json_line(&report));
    } else {
        print!("{}", report.render());
    }
    Ok(0)
}

#[derive(Serialize)]
struct CheckResult {
    ring: String,
    predicate: Predicate,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
}

fn check(predicate: &str, text: &str, json: bool, budget: Budget) -> Outcome {
    let p: Predicate = predicate.parse().map_err(|e| fail(2, e))?;
    let ring = build(text, config(budget)?)?;
    let v = evaluate(&ring, p);
    let result = CheckResult {
        ring: ring.label().to_string(),
        predicate: p,
        holds: v.holds,
        witness: v.counterexample().map(|c| Counterexample::new(&ring, c)),
        note: v.note,
    };
    if json {
        println!("{}", json_line(&result));
    } else if let Some(w) = &result.witness {
        println!("{p} {}: fails at {w}", result.ring);
    } else {
        println!("{p} {}: holds", result.ring);
    }
    Ok(if v.holds { 0 } else { 1 })
}

fn load_catalog(path: Option<&str>) -> Result<Vec<CatalogEntry>, Failure> {
    match path {
        None => Ok(default_catalog()),
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| fail(2, format!("{path}: {e}")))?;
            parse_catalog(&text).map_err(|e| fail(2, format!("{path}: {e}")))
        }
    }
}

fn with_jobs<T: Send>(jobs: Option<u16>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n as usize)
                .build()
                .map_err(|e| fail(2, e))?;
            Ok(pool.install(f))
        }
    }
}

fn render_report(r: &TheoremReport) -> String {
    let mut out = format!(
        "{:<20} {:<4}  pass {:>3}  skip {:>3}  fail {:>2}",
        r.theorem,
        r.aggregate.as_str(),
        r.count(Status::Pass),
        r.count(Status::Skip),
        r.count(Status::Fail),
    );
    if let Some(ms) = r.ms {
        out.push_str(&format!("  {ms}ms"));
    }
    out.push('\n');
    for res in r.results.iter().filter(|x| x.status != Status::Pass) {
        out.push_str(&format!("    {} {}", res.status.as_str(), res.ring));
        if let Some(note) = &res.note {
            out.push_str(&format!(": {note}"));
        }
        out.push('\n');
        if let Some(w) = &res.witness {
            let elements: Vec<String> = w.elements.iter().map(|e| format!("{} {} = {}", e.role, e.index, e.label)).collect();
            out.push_str(&format!("      witness in {}: {}; {}\n", w.ring, w.claim, elements.join(", ")));
        }
    }
    out
}

fn verify(
    theorem: Option<&str>,
    catalog: Option<&str>,
    json: bool,
    jobs: Option<u16>,
    no_timing: bool,
    budget: Budget,
) -> Outcome {
    let catalog = load_catalog(catalog)?;
    let mut verifier = Verifier::new(config(budget)?);
    if no_timing {
        verifier = verifier.without_timing();
    }
    let reports = with_jobs(jobs, || match theorem {
        Some(id) => verifier.run_theorem(id, &catalog).map(|r| vec![r]),
        None => Ok(verifier.run_all(&catalog)),
    })?
    .map_err(|e| fail(2, e))?;

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for r in &reports {
        let text = if json {
            format!("{}\n", json_line(r))
        } else {
            render_report(r)
        };
        out.write_all(text.as_bytes()).map_err(|e| fail(2, e))?;
    }
    let failed = reports.iter().filter(|r| r.aggregate == Status::Fail).count();
    if !json {
        let outcomes: Vec<_> = reports.iter().flat_map(|r| &r.results).collect();
        let count = |s| outcomes.iter().filter(|x| x.status == s).count();
        writeln!(
            out,
            "{} theorem(s), {} failing; outcomes: {} pass, {} skip, {} fail",
            reports.len(),
            failed,
            count(Status::Pass),
            count(Status::Skip),
            count(Status::Fail)
        )
        .map_err(|e| fail(2, e))?;
    }
    Ok(if failed > 0 { 1 } else { 0 })
}

#[derive(Serialize)]
struct SearchResult {
    formula: String,
    matches: Vec<String>,
    skipped: Vec<Skipped>,
}

#[derive(Serialize)]
struct Skipped {
    ring: String,
    reason: String,
}

fn search(text: &str, catalog: Option<&str>, json: bool, budget: Budget) -> Outcome {
    let formula = parse_formula(text).map_err(|e| fail(2, e))?;
    let catalog = load_catalog(catalog)?;
    let evaluator = Evaluator::new(config(budget)?);
    let verdicts: Vec<Result<bool, String>> = catalog
        .par_iter()
        .map(|entry| {
            let ring = evaluator.eval(&entry.expr).map_err(|e| e.to_string())?;
            Ok(formula.eval(&mut |p| evaluate(&ring, p).holds))
        })
        .collect();
    let mut result = SearchResult {
        formula: formula.to_string(),
        matches: Vec::new(),
        skipped: Vec::new(),
    };
    for (entry, v) in catalog.iter().zip(verdicts) {
        match v {
            Ok(true) => result.matches.push(entry.text()),
            Ok(false) => {}
            Err(reason) => result.skipped.push(Skipped {
                ring: entry.text(),
                reason,
            }),
        }
    }
    if json {
        println!("{}", json_line(&result));
    } else {
        for m in &result.matches {
            println!("{m}");
        }
        for s in &result.skipped {
            eprintln!("skipped {}: {}", s.ring, s.reason);
        }
    }
    Ok(0)
}

fn elements(text: &str, table: Option<Table>, force: bool, budget: Budget) -> Outcome {
    let mut config = config(budget)?;
    if !force {
        config.max_order = config.max_order.min(DISPLAY_BUDGET);
    }
    let ring = build(text, config).map_err(|f| {
        if f.code == 3 && !force {
            fail(3, format!("{}; display budget is {DISPLAY_BUDGET} elements, pass --force to print larger rings", f.message))
        } else {
            f
        }
    })?;
    let mut out = String::new();
    out.push_str(&format!("{} ({} elements)\n", ring.label(), ring.order()));
    for a in ring.elements() {
        out.push_str(&format!("{:>5}  {}\n", a, Element::new(&ring, a).label));
    }
    if let Some(t) = table {
        let (name, op): (&str, fn(&FiniteRing, usize, usize) -> usize) = match t {
            Table::Add => ("+", FiniteRing::add),
            Table::Mul => ("*", FiniteRing::mul),
        };
        let width = (ring.order() - 1).to_string().len().max(name.len());
        out.push_str(&format!("\n{name:>width$} |"));
        for b in ring.elements() {
            out.push_str(&format!(" {b:>width$}"));
        }
        out.push('\n');
        out.push_str(&format!("{}-+{}\n", "-".repeat(width), "-".repeat((width + 1) * ring.order())));
        for a in ring.elements() {
            out.push_str(&format!("{a:>width$} |"));
            for b in ring.elements() {
                out.push_str(&format!(" {:>width$}", op(&ring, a, b)));
            }
            out.push('\n');
        }
    }
    print!("{out}");
    Ok(0)
}
