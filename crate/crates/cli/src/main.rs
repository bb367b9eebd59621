use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use orbitwist_core::cache::{self, IrrepCache};
use orbitwist_core::catalog::{self, Case};
use orbitwist_core::modp::{self, bockstein, double_transgress, parse_poly, poly_transgress};
use orbitwist_core::suite::{self, Scope, Status, SuiteOptions, VerificationReport};
use orbitwist_core::{extraspecial, io, Cochain, TwistData};
use serde_json::json;

#[derive(Parser)]
#[command(name = "orbitwist", version, about = "Twisted Drinfeld doubles and twisted orbifold K-theory of [*/G]")]
struct Cli {
    /// Directory for cached character tables.
    #[arg(long, global = true, env = cache::CACHE_ENV)]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification battery on catalog cases.
    Verify(VerifyArgs),
    /// The twisted stringy product.
    #[command(subcommand)]
    Stringy(StringyCommand),
    /// The twisted Drinfeld double.
    #[command(subcommand)]
    Double(DoubleCommand),
    /// Polynomial-level transgression over F_p.
    Transgress(TransgressArgs),
    /// The extra-special construction.
    #[command(subcommand)]
    Extraspecial(ExtraspecialCommand),
    /// Manage the character-table cache.
    #[command(subcommand)]
    Cache(CacheCommand),
    /// Built-in (group, cocycle) cases.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Args)]
struct VerifyArgs {
    /// Case id, or `all`.
    #[arg(long)]
    case: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Wall-clock budget such as `600s` or `10m`; checks started after it
    /// runs out are reported as skipped.
    #[arg(long, value_parser = humantime::parse_duration)]
    budget: Option<Duration>,
    /// Worker threads (defaults to all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Ring-isomorphism pairs for cases checked by sampling.
    #[arg(long)]
    pairs: Option<u64>,
    /// Product-associativity triples for cases checked by sampling.
    #[arg(long)]
    triples: Option<u64>,
    /// Include per-check wall-clock timings (makes output run-dependent).
    #[arg(long)]
    timings: bool,
    /// Neither read nor write the character-table cache.
    #[arg(long)]
    no_cache: bool,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

/// A (group, cocycle) pair given either by files or by catalog id.
#[derive(Args)]
struct Source {
    #[arg(long, requires = "cocycle", conflicts_with = "case")]
    group: Option<PathBuf>,
    #[arg(long, requires = "group")]
    cocycle: Option<PathBuf>,
    #[arg(long)]
    case: Option<String>,
}

impl Source {
    fn load(&self) -> Result<(String, Cochain)> {
        match (&self.case, &self.group, &self.cocycle) {
            (Some(id), _, _) => Ok((id.clone(), Case::by_id(id)?.cocycle)),
            (None, Some(g), Some(c)) => {
                let group = Arc::new(io::load_group(g)?);
                let omega = io::load_cocycle(c, group)?;
                if omega.degree() != 3 {
                    bail!("{}: expected a 3-cocycle, got degree {}", c.display(), omega.degree());
                }
                Ok((omega.group().name().to_string(), omega))
            }
            _ => bail!("give either --case or both --group and --cocycle"),
        }
    }
}

#[derive(Subcommand)]
enum StringyCommand {
    /// Ring-isomorphism and associativity checks; JSON report.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        pairs: Option<u64>,
        #[arg(long)]
        triples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Full multiplication table over the sector-irreducible basis, as CSV.
    Table {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum DoubleCommand {
    /// Algebra axioms, quasitriangularity and the simple-module census.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Sampled associativity triples (exhaustive for |G| <= 8 by default).
        #[arg(long)]
        triples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct TransgressArgs {
    #[command(subcommand)]
    command: Option<TransgressCommand>,
    #[arg(long, default_value_t = 3)]
    p: u64,
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Class such as "x1 y2 y3 - x2 y1 y3 + x3 y1 y2".
    #[arg(long)]
    poly: Option<String>,
    /// Comma-separated coordinates of g.
    #[arg(long, value_delimiter = ',')]
    g: Vec<u64>,
    /// Optional second element: prints τ_g τ_h instead of τ_g.
    #[arg(long, value_delimiter = ',')]
    h: Vec<u64>,
}

#[derive(Subcommand)]
enum TransgressCommand {
    /// Basis of ker β in a degree, flagged by whether some τ_g is nonzero.
    Search {
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        degree: u32,
    },
}

#[derive(Subcommand)]
enum ExtraspecialCommand {
    /// Compare the simple objects of D(H) and D^ω((Z_p)^3); JSON report.
    Compare {
        #[arg(long, default_value_t = 3)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the constructed ω in the cocycle file format.
    EmitCocycle {
        #[arg(long, default_value_t = 3)]
        p: usize,
        /// Cocycle file (stdout if omitted).
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also write the group file it refers to.
        #[arg(long)]
        group_output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CacheCommand {
    /// Delete every cached character table.
    Clear,
    /// Print the cache directory.
    Path,
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    /// Write a case's group and cocycle files.
    Emit {
        #[arg(long)]
        case: String,
        #[arg(long)]
        group_output: PathBuf,
        #[arg(long)]
        cocycle_output: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` means the command ran but a check failed.
fn run(cli: Cli) -> Result<bool> {
    let cache_dir = cli.cache_dir.clone().unwrap_or_else(cache::default_dir);
    match cli.command {
        Command::Verify(args) => verify(args, &cache_dir),
        Command::Stringy(StringyCommand::Verify { source, pairs, triples, seed }) => {
            let (label, omega) = source.load()?;
            let options = SuiteOptions { seed, pairs, triples, scope: Scope::Stringy, ..SuiteOptions::default() };
            let report = suite::run_cocycle(&label, "stringy product", &omega, &options, None);
            out(&serde_json::to_string_pretty(&report)?)?;
            Ok(report.passed())
        }
        Command::Stringy(StringyCommand::Table { source, seed }) => {
            let (_, omega) = source.load()?;
            let data = TwistData::new(&omega, seed)?;
            out(&data.star_table_csv()?)?;
            Ok(true)
        }
        Command::Double(DoubleCommand::Verify { source, triples, seed }) => {
            let (label, omega) = source.load()?;
            let options = SuiteOptions {
                seed,
                algebra_triples: triples,
                scope: Scope::Double,
                cache: IrrepCache::at(&cache_dir),
                ..SuiteOptions::default()
            };
            let report = suite::run_cocycle(&label, "twisted double", &omega, &options, None);
            out(&serde_json::to_string_pretty(&double_summary(&report, &omega))?)?;
            Ok(report.passed())
        }
        Command::Transgress(args) => transgress(args),
        Command::Extraspecial(ExtraspecialCommand::Compare { p, seed }) => {
            let report = extraspecial::compare_doubles(p, seed)?;
            out(&serde_json::to_string_pretty(&report)?)?;
            Ok(report.counts_match && report.dims_match && report.omega_is_cocycle && report.omega_nontrivial)
        }
        Command::Extraspecial(ExtraspecialCommand::EmitCocycle { p, output, group_output }) => {
            let bundle = extraspecial::build_bundle(p)?;
            if let Some(path) = group_output {
                io::save_group(&path, &bundle.g)?;
            }
            emit(output.as_deref(), &io::cocycle_to_json(&bundle.omega))?;
            Ok(true)
        }
        Command::Cache(CacheCommand::Clear) => {
            let removed = IrrepCache::at(&cache_dir).clear()?;
            eprintln!("removed {removed} cache entries from {}", cache_dir.display());
            Ok(true)
        }
        Command::Cache(CacheCommand::Path) => {
            out(&format!("{}\n", cache_dir.display()))?;
            Ok(true)
        }
        Command::Catalog(CatalogCommand::List) => {
            let mut text = String::new();
            for id in catalog::CASE_IDS {
                let case = Case::by_id(id)?;
                text += &format!("{id:<24} |G| = {:<3} {}\n", case.group().order(), case.description);
            }
            out(&text)?;
            Ok(true)
        }
        Command::Catalog(CatalogCommand::Emit { case, group_output, cocycle_output }) => {
            let case = Case::by_id(&case)?;
            io::save_group(&group_output, case.group())?;
            io::save_cocycle(&cocycle_output, &case.cocycle)?;
            Ok(true)
        }
    }
}

fn verify(args: VerifyArgs, cache_dir: &Path) -> Result<bool> {
    let options = SuiteOptions {
        seed: args.seed,
        budget: args.budget,
        jobs: args.jobs,
        pairs: args.pairs,
        triples: args.triples,
        algebra_triples: None,
        scope: Scope::All,
        timings: args.timings,
        cache: if args.no_cache { IrrepCache::disabled() } else { IrrepCache::at(cache_dir) },
    };
    let reports = suite::run_suite(&args.case, &options)?;
    for r in &reports {
        let count = |s: Status| r.checks.iter().filter(|c| c.status == s).count();
        eprintln!(
            "{:<24} {}  ({} pass, {} fail, {} skipped)",
            r.case,
            if r.passed() { "PASS" } else { "FAIL" },
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skipped)
        );
        for c in r.checks.iter().filter(|c| c.status == Status::Fail) {
            let why = c.counterexample.as_deref().or(c.reason.as_deref()).unwrap_or("");
            eprintln!("    {} failed: {why}", c.name);
        }
    }
    let text = serde_json::to_string_pretty(&reports)?;
    emit(args.output.as_deref(), &text)?;
    Ok(reports.iter().all(VerificationReport::passed))
}

/// The double report reshaped as
/// `{associativity, unit, quasitriangular, census, dims, ...}`.
fn double_summary(report: &VerificationReport, omega: &Cochain) -> serde_json::Value {
    let check = |name: &str| serde_json::to_value(report.check(name)).unwrap_or_default();
    let dims = report
        .check("census")
        .and_then(|c| c.diagnostics.get("dims").cloned())
        .unwrap_or_default();
    json!({
        "schema_version": report.schema_version,
        "group": omega.group().name(),
        "order": omega.group().order(),
        "cocycle_hash": omega.content_hash(),
        "seed": report.seed,
        "passed": report.passed(),
        "cocycle": check("cocycle"),
        "associativity": check("double_associativity"),
        "unit": check("double_unit"),
        "quasitriangular": check("quasitriangular"),
        "census": check("census"),
        "simple_modules": check("simple_modules"),
        "dims": dims,
    })
}

fn transgress(args: TransgressArgs) -> Result<bool> {
    if let Some(TransgressCommand::Search { p, n, degree }) = args.command {
        let entries = modp::transgression_search(p, n, degree)?;
        out(&serde_json::to_string_pretty(&entries)?)?;
        return Ok(true);
    }
    let text = args.poly.context("--poly is required (or use `transgress search`)")?;
    let q = parse_poly(args.p, args.n, &text)?;
    let check_len = |v: &[u64], name: &str| -> Result<()> {
        if v.len() != args.n {
            bail!("--{name} needs {} coordinates, got {}", args.n, v.len());
        }
        Ok(())
    };
    check_len(&args.g, "g")?;
    let g: Vec<u64> = args.g.iter().map(|a| a % args.p).collect();
    let mut text = format!("q = {q}\nbeta(q) = {}\n", bockstein(&q)?);
    let image = if args.h.is_empty() {
        let t = poly_transgress(&q, &g)?;
        text += &format!("tau_g(q) = {t}\n");
        t
    } else {
        check_len(&args.h, "h")?;
        let h: Vec<u64> = args.h.iter().map(|a| a % args.p).collect();
        let t = double_transgress(&q, &g, &h)?;
        text += &format!("tau_g tau_h(q) = {t}\n");
        t
    };
    text += &format!("beta(image) = {}\n", bockstein(&image)?);
    out(&text)?;
    Ok(true)
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => out(text),
    }
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn out(text: &str) -> Result<()> {
    let mut stdout = std::io::stdout().lock();
    let newline = if text.ends_with('\n') { "" } else { "\n" };
    let written = stdout.write_all(text.as_bytes()).and_then(|()| stdout.write_all(newline.as_bytes()));
    match written.and_then(|()| stdout.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}
