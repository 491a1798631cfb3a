use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use gtverify::bsgs::PermGroup;
use gtverify::config::{set_budget, Budget};
use gtverify::corpus;
use gtverify::embedding::{satisfies, Property};
use gtverify::error::{Error, Result};
use gtverify::formation::PPrimeConvention;
use gtverify::groupfile::GroupSpec;
use gtverify::perm::Permutation;
use gtverify::report::{to_json, VerdictReport};
use gtverify::subgroup::Subgroup;
use gtverify::suite::{self, CorpusEntry, SuiteOutcome};
use gtverify::theorems::{describe, verify_all, GroupContext, TheoremId};

#[derive(Parser)]
#[command(name = "gtverify", version, about = "Permutation-group engine and verifier for partial Π / partial 𝓛-Π embedding results")]
struct Cli {
    /// Element-enumeration budget (overrides GT_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide an embedding property for one subgroup.
    Check(CheckArgs),
    /// Verify a theorem on one group over every applicable parameter.
    Verify(VerifyArgs),
    /// Theorem sweep plus property suite over a corpus.
    Suite(SuiteArgs),
    /// Built-in corpus utilities.
    #[command(subcommand)]
    Corpus(CorpusCmd),
}

#[derive(Args)]
struct CheckArgs {
    /// `builtin:<id>` or a group file.
    #[arg(long)]
    group: String,
    /// Generators in cycle notation; separate several with `;`.
    #[arg(long, value_delimiter = ';', required = true)]
    subgroup: Vec<String>,
    /// `partial-pi` or `partial-l-pi`.
    #[arg(long, value_parser = parse_property)]
    property: Property,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    group: String,
    /// A, B, C, small, p-soluble, dividing, furthermore, ele or leq.
    #[arg(long)]
    theorem: TheoremId,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    d: Option<u64>,
    /// Treatment of p′-chief factors in the p-supersoluble hypercentre.
    #[arg(long, default_value = "always-central", value_parser = parse_convention)]
    convention: PPrimeConvention,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct SuiteArgs {
    /// Directory of `*.grp` files; the built-in corpus when absent.
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Restrict the property suite to these checks (comma separated).
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<String>>,
    /// Restrict the theorem sweep (comma separated); `none` skips it.
    #[arg(long, value_delimiter = ',')]
    theorems: Option<Vec<String>>,
    #[arg(long, default_value = "always-central", value_parser = parse_convention)]
    convention: PPrimeConvention,
    #[arg(long)]
    json: Option<PathBuf>,
    /// Print every report line, not only counterexamples.
    #[arg(long)]
    verbose: bool,
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// List built-in groups with order and degree.
    List,
    /// Write every built-in group as a group file.
    Export {
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_property(s: &str) -> std::result::Result<Property, String> {
    s.parse()
}

fn parse_convention(s: &str) -> std::result::Result<PPrimeConvention, String> {
    match s {
        "always-central" => Ok(PPrimeConvention::AlwaysCentral),
        "quotient-p-supersoluble" => Ok(PPrimeConvention::QuotientPSupersoluble),
        _ => Err(format!("unknown convention {s:?}; use always-central or quotient-p-supersoluble")),
    }
}

/// Either a usage problem (exit 2) or a failure while computing (exit 1).
enum Failure {
    Usage(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Input(_) | Error::Syntax { .. } | Error::UnknownGroup(_) | Error::OrderMismatch { .. } => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Run(other),
        }
    }
}

fn load_group(spec: &str) -> Result<(String, PermGroup)> {
    if let Some(id) = spec.strip_prefix("builtin:") {
        corpus::self_test(id)?;
        return Ok((id.to_string(), corpus::build(id)?));
    }
    let s = GroupSpec::read(Path::new(spec))?;
    Ok((s.name.clone(), s.to_group()?))
}

fn write_json(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_reports(path: Option<&PathBuf>, reports: &[VerdictReport]) -> Result<()> {
    if let Some(p) = path {
        let text = to_json(reports).map_err(|e| Error::Io(e.to_string()))?;
        write_json(p, &text)?;
    }
    Ok(())
}

fn run_check(a: CheckArgs) -> std::result::Result<bool, Failure> {
    let (name, pg) = load_group(&a.group)?;
    let perms = a
        .subgroup
        .iter()
        .map(|s| Permutation::parse(pg.degree(), s))
        .collect::<Result<Vec<_>>>()?;
    let gc = GroupContext::new(&name, pg)?;
    let h = Subgroup::from_perms(gc.group(), &perms)?;
    let v = satisfies(&gc.lat, &h, a.property);
    if !v.revalidate(&gc.g, &h) {
        return Err(Failure::Run(Error::Precondition("verdict witnesses failed revalidation".into())));
    }
    println!("{}", if v.holds { "HOLDS" } else { "FAILS" });
    println!("group {name} (order {}), subgroup {}", gc.order(), describe(&h));
    if v.normal {
        println!("  subgroup is normal");
    }
    for w in &v.witnesses {
        println!(
            "  factor {}/{}: |G : N_G(X)| = {} for |X| = {}, primes {:?}: {}",
            w.upper.order(),
            w.lower.order(),
            w.index,
            w.x.order(),
            w.primes,
            if w.passes { "ok" } else { "fails" }
        );
    }
    if let Some(p) = &a.json {
        let witnesses: Vec<_> = v
            .witnesses
            .iter()
            .map(|w| {
                json!({
                    "lower": w.lower.describe(),
                    "upper": w.upper.describe(),
                    "x": w.x.describe(),
                    "index": w.index,
                    "primes": w.primes,
                    "passes": w.passes,
                })
            })
            .collect();
        let doc = json!({
            "group": name,
            "subgroup": h.describe(),
            "property": v.property,
            "holds": v.holds,
            "normal": v.normal,
            "witnesses": witnesses,
        });
        write_json(p, &serde_json::to_string_pretty(&doc).expect("json value serializes"))?;
    }
    Ok(false)
}

fn run_verify(a: VerifyArgs) -> std::result::Result<bool, Failure> {
    let (name, pg) = load_group(&a.group)?;
    if let Some(p) = a.p {
        if !gtverify::arith::is_prime(p) {
            return Err(Failure::Usage(format!("--p {p} is not prime")));
        }
    }
    let gc = GroupContext::new(&name, pg)?.with_convention(a.convention);
    let reports = verify_all(&gc, a.theorem, a.p, a.d);
    if reports.is_empty() {
        println!("no applicable parameters for theorem {} on {name}", a.theorem);
    }
    for r in &reports {
        println!("{}", r.summary_line());
        for c in &r.clauses {
            let status = match c.holds {
                Some(true) => "ok",
                Some(false) => "FALSE",
                None => "skipped",
            };
            println!("    {:<8} {} {}", status, c.name, c.detail);
        }
        for s in &r.skipped {
            println!("    skipped {}: {}", s.clause, s.reason);
        }
    }
    write_reports(a.json.as_ref(), &reports)?;
    Ok(reports.iter().any(|r| r.is_counterexample()))
}

fn print_outcome(title: &str, out: &SuiteOutcome, verbose: bool) {
    println!("== {title}");
    print!("{}", out.stats_table());
    for r in &out.reports {
        if verbose || r.is_counterexample() {
            println!("{}", r.summary_line());
            for w in &r.witnesses {
                println!("    witness: {w}");
            }
        }
    }
    for w in &out.warnings {
        println!("warning: {w}");
    }
}

fn run_suite(a: SuiteArgs) -> std::result::Result<bool, Failure> {
    let entries: Vec<CorpusEntry> = match &a.corpus {
        Some(dir) => suite::load_corpus_dir(dir)?,
        None => suite::builtin_corpus()?,
    };
    if entries.is_empty() {
        return Err(Failure::Usage("corpus is empty".into()));
    }
    let theorems: Vec<TheoremId> = match &a.theorems {
        None => TheoremId::ALL.to_vec(),
        Some(v) if v.iter().any(|s| s == "none") => Vec::new(),
        Some(v) => v
            .iter()
            .map(|s| s.parse().map_err(|e: String| Failure::Usage(e)))
            .collect::<std::result::Result<_, _>>()?,
    };
    let mut reports = Vec::new();
    let mut bad = false;
    if !theorems.is_empty() {
        let sweep = suite::run_theorem_sweep(&entries, &theorems, a.convention, None, None)?;
        print_outcome("theorem sweep", &sweep, a.verbose);
        bad |= sweep.has_counterexample();
        reports.extend(sweep.reports);
    }
    let props = suite::run_property_suite(&entries, a.checks.as_deref(), a.seed, a.convention)?;
    print_outcome("property suite", &props, a.verbose);
    bad |= props.has_counterexample();
    reports.extend(props.reports);
    println!("{} reports, {}", reports.len(), if bad { "COUNTEREXAMPLES FOUND" } else { "no counterexamples" });
    write_reports(a.json.as_ref(), &reports)?;
    Ok(bad)
}

fn run_corpus(c: CorpusCmd) -> std::result::Result<bool, Failure> {
    match c {
        CorpusCmd::List => {
            for id in corpus::DEFAULT_CORPUS {
                let g = corpus::build(id)?;
                println!("{id:<18} order {:<6} degree {}", g.order(), g.degree());
            }
        }
        CorpusCmd::Export { out } => {
            std::fs::create_dir_all(&out).map_err(|e| Error::Io(e.to_string()))?;
            for id in corpus::DEFAULT_CORPUS {
                let spec = GroupSpec::from_group(id, &corpus::build(id)?);
                write_json(&out.join(format!("{id}.grp")), &spec.serialize())?;
            }
            println!("wrote {} group files to {}", corpus::DEFAULT_CORPUS.len(), out.display());
        }
    }
    Ok(false)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.budget {
        set_budget(Budget::from_env().with_elements(n));
    }
    let res = match cli.cmd {
        Cmd::Check(a) => run_check(a),
        Cmd::Verify(a) => run_verify(a),
        Cmd::Suite(a) => run_suite(a),
        Cmd::Corpus(c) => run_corpus(c),
    };
    match res {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
