//! `projrep`: multipliers, twisted degrees and the verification suite over
//! the built-in catalog or permutation groups read from JSON.
//!
//! Exit status is 0 on success, 1 when a check that applies fails and 2 on
//! usage or input errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use projrep::catalog::{catalog, find, CatalogEntry};
use projrep::cohomology::{schur_multiplier_capped, SchurMultiplier, DEFAULT_H2_CAP};
use projrep::config::{Tolerances, DEFAULT_SEED};
use projrep::error::Error;
use projrep::group::{PiSet, DEFAULT_ORDER_CAP};
use projrep::io::{degrees_report, load_group, CayleyJson, GroupJson, MultiplierJson};
use projrep::twisted::{c_regular_classes, TwistedAlgebra};
use projrep::verify::{
    decompose_check, run_entry, run_group, CheckKind, CheckOptions, CheckResult, Instance,
    SuiteOptions, Verdict,
};

#[derive(Debug, Parser)]
#[command(name = "projrep", version, about = "Projective representations of finite groups")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct Global {
    /// Comparison and integrality tolerance.
    #[arg(long, global = true, env = "PROJREP_TOL")]
    tol: Option<f64>,
    #[arg(long, global = true, env = "PROJREP_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Largest order for the exact multiplier computation.
    #[arg(long, global = true, env = "PROJREP_H2_CAP", default_value_t = DEFAULT_H2_CAP)]
    h2_cap: usize,
    /// Largest group order accepted from the catalog or a file.
    #[arg(long, global = true, env = "PROJREP_ORDER_CAP", default_value_t = DEFAULT_ORDER_CAP)]
    order_cap: usize,
    /// Write `results.jsonl` (and `summary.csv` for checks) here instead
    /// of printing to stdout.
    #[arg(long, global = true, env = "PROJREP_OUT")]
    out: Option<PathBuf>,
    /// Worker threads; 0 uses all cores.
    #[arg(long, global = true, env = "PROJREP_JOBS", default_value_t = 0)]
    jobs: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the built-in groups after constructing each one.
    Catalog,
    /// Schur multiplier invariants and basis cocycles.
    Multiplier { group: String },
    /// Degrees of the irreducible projective representations.
    Degrees {
        group: String,
        /// Coclass index; all coclasses when absent.
        #[arg(long)]
        coclass: Option<usize>,
    },
    /// Conjugacy classes with their regularity flags.
    RegularClasses {
        group: String,
        #[arg(long)]
        coclass: usize,
    },
    /// Run the verification suite on a group or on the whole catalog.
    Verify {
        /// Catalog name, JSON file or `all`.
        group: String,
        /// Checks to run; all when absent.
        #[arg(long, value_delimiter = ',')]
        check: Vec<String>,
        /// Restrict prime checks to `p` and π-checks to `{p}`.
        #[arg(long, conflicts_with = "pi")]
        p: Option<u64>,
        /// Restrict π-checks to this set and prime checks to its members.
        #[arg(long, value_delimiter = ',')]
        pi: Vec<u64>,
        #[arg(long)]
        coclass: Option<usize>,
        /// Largest π enumerated when `--pi` is absent.
        #[arg(long, default_value_t = 2)]
        max_pi_len: usize,
    },
    /// Decompose irreducibles along the π-series.
    Decompose {
        group: String,
        #[arg(long)]
        coclass: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        pi: Vec<u64>,
        /// Only this irreducible; all when absent.
        #[arg(long)]
        irrep: Option<usize>,
    },
    /// Permutation generators as JSON, or the Cayley table.
    Export {
        group: String,
        #[arg(long)]
        cayley: bool,
    },
}

/// Resolved settings shared by every subcommand.
struct Run {
    global: Global,
    check: CheckOptions,
}

/// A group ready for computation.
struct Target {
    name: String,
    entry: Option<CatalogEntry>,
    multiplier: Arc<SchurMultiplier>,
}

impl Run {
    fn new(global: Global) -> Result<Self> {
        let mut tol = Tolerances::default();
        if let Some(t) = global.tol {
            tol = tol.with_comparison(t)?;
        }
        if global.h2_cap == 0 || global.order_cap == 0 {
            bail!(Error::Config("caps must be positive".into()));
        }
        let check = CheckOptions {
            tol,
            seed: global.seed,
            h2_cap: global.h2_cap,
        };
        Ok(Run { global, check })
    }

    fn config(&self) -> Value {
        json!({
            "seed": self.check.seed,
            "tolerances": self.check.tol,
            "h2_cap": self.check.h2_cap,
            "order_cap": self.global.order_cap,
        })
    }

    /// `body` with the run configuration attached.
    fn record(&self, mut v: Value) -> Result<Value> {
        match v.as_object_mut() {
            Some(map) => {
                map.insert("config".into(), self.config());
                Ok(v)
            }
            None => Ok(json!({ "config": self.config(), "value": v })),
        }
    }

    /// A catalog name, or a path to a permutation group file.
    fn target(&self, name: &str) -> Result<Target> {
        let path = Path::new(name);
        if name.ends_with(".json") || path.is_file() {
            let g = Arc::new(load_group(path, self.global.order_cap)?);
            let m = if g.order() <= self.check.h2_cap {
                schur_multiplier_capped(&g, self.check.h2_cap)?
            } else {
                SchurMultiplier::trivial_only(&g)
            };
            return Ok(Target {
                name: g.name().to_string(),
                entry: None,
                multiplier: Arc::new(m),
            });
        }
        let entry = find(name)?;
        self.within_cap(&entry)?;
        let g = entry.build()?;
        let m = entry.multiplier(&g, self.check.h2_cap)?;
        Ok(Target {
            name: entry.name.clone(),
            entry: Some(entry),
            multiplier: Arc::new(m),
        })
    }

    fn within_cap(&self, entry: &CatalogEntry) -> Result<()> {
        if entry.order > self.global.order_cap {
            bail!(Error::ClosureTooLarge {
                cap: self.global.order_cap
            });
        }
        Ok(())
    }

    fn emit(&self, records: &[Value]) -> Result<()> {
        let mut text = String::new();
        for r in records {
            text.push_str(&serde_json::to_string(r)?);
            text.push('\n');
        }
        match &self.global.out {
            Some(dir) => {
                fs::create_dir_all(dir)
                    .with_context(|| format!("creating {}", dir.display()))?;
                fs::write(dir.join("results.jsonl"), text)?;
            }
            None => std::io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(())
    }

    fn emit_checks(&self, results: &[CheckResult]) -> Result<bool> {
        let records = results
            .iter()
            .map(|r| self.record(serde_json::to_value(r)?))
            .collect::<Result<Vec<_>>>()?;
        self.emit(&records)?;
        let rows = summarize(results);
        if let Some(dir) = &self.global.out {
            let mut w = csv::Writer::from_path(dir.join("summary.csv"))?;
            w.write_record(["group", "check", "verdict", "pass", "fail", "inapplicable"])?;
            for row in &rows {
                w.write_record([
                    row.group.as_str(),
                    row.check.as_str(),
                    verdict_name(row.verdict()),
                    &row.pass.to_string(),
                    &row.fail.to_string(),
                    &row.inapplicable.to_string(),
                ])?;
            }
            w.flush()?;
        }
        let count = |v: Verdict| results.iter().filter(|r| r.verdict == v).count();
        eprintln!(
            "{} checks: {} pass, {} fail, {} inapplicable",
            results.len(),
            count(Verdict::Pass),
            count(Verdict::Fail),
            count(Verdict::Inapplicable)
        );
        for r in results.iter().filter(|r| r.verdict == Verdict::Fail) {
            eprintln!(
                "FAIL {} {} coclass {:?}: {}",
                r.inputs.group,
                r.check,
                r.inputs.coclass,
                r.reason.as_deref().unwrap_or("")
            );
        }
        Ok(count(Verdict::Fail) == 0)
    }
}

struct SummaryRow {
    group: String,
    check: String,
    pass: usize,
    fail: usize,
    inapplicable: usize,
}

impl SummaryRow {
    fn verdict(&self) -> Verdict {
        if self.fail > 0 {
            Verdict::Fail
        } else if self.pass > 0 {
            Verdict::Pass
        } else {
            Verdict::Inapplicable
        }
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Inapplicable => "inapplicable",
    }
}

/// One row per `(group, check)` in order of first appearance.
fn summarize(results: &[CheckResult]) -> Vec<SummaryRow> {
    let mut rows: Vec<SummaryRow> = Vec::new();
    for r in results {
        let i = match rows
            .iter()
            .position(|s| s.group == r.inputs.group && s.check == r.check)
        {
            Some(i) => i,
            None => {
                rows.push(SummaryRow {
                    group: r.inputs.group.clone(),
                    check: r.check.clone(),
                    pass: 0,
                    fail: 0,
                    inapplicable: 0,
                });
                rows.len() - 1
            }
        };
        match r.verdict {
            Verdict::Pass => rows[i].pass += 1,
            Verdict::Fail => rows[i].fail += 1,
            Verdict::Inapplicable => rows[i].inapplicable += 1,
        }
    }
    rows
}

fn prime_set(primes: &[u64]) -> Result<PiSet> {
    if primes.is_empty() {
        bail!(Error::Config("empty prime set".into()));
    }
    for &p in primes {
        if p < 2 || PiSet::of(p) != PiSet::single(p) {
            bail!(Error::Config(format!("{p} is not a prime")));
        }
    }
    Ok(PiSet::new(primes.iter().copied()))
}

fn run(cli: Cli) -> Result<bool> {
    let run = Run::new(cli.global)?;
    match cli.command {
        Command::Catalog => {
            let records = catalog()
                .iter()
                .map(|e| {
                    let check = match e.self_check() {
                        Ok(_) => "ok".to_string(),
                        Err(err) => err.to_string(),
                    };
                    run.record(json!({
                        "name": e.name,
                        "order": e.order,
                        "solvable": e.solvable,
                        "multiplier_plan": e.multiplier_plan(run.check.h2_cap),
                        "self_check": check,
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            run.emit(&records)?;
            Ok(true)
        }
        Command::Multiplier { group } => {
            let t = run.target(&group)?;
            run.emit(&[run.record(serde_json::to_value(MultiplierJson::of(&t.multiplier))?)?])?;
            Ok(true)
        }
        Command::Degrees { group, coclass } => {
            let t = run.target(&group)?;
            let indices: Vec<usize> = match coclass {
                Some(k) => vec![k],
                None => (0..t.multiplier.num_coclasses()).collect(),
            };
            let records = indices
                .iter()
                .map(|&k| {
                    let mut d = degrees_report(&t.multiplier, k, run.check.tol, run.check.seed)?;
                    d.group = t.name.clone();
                    run.record(serde_json::to_value(d)?)
                })
                .collect::<Result<Vec<_>>>()?;
            run.emit(&records)?;
            Ok(true)
        }
        Command::RegularClasses { group, coclass } => {
            let t = run.target(&group)?;
            let c = t.multiplier.coclass_by_index(coclass)?;
            let a = TwistedAlgebra::from_cocycle(c.representative(), run.check.tol);
            let data = c_regular_classes(&a)?;
            run.emit(&[run.record(json!({
                "group": t.name,
                "coclass": c.exponents(),
                "cocycle_hash": c.representative().hash(),
                "c_regular_count": data.count(),
                "classes": data.classes,
            }))?])?;
            Ok(true)
        }
        Command::Verify {
            group,
            check,
            p,
            pi,
            coclass,
            max_pi_len,
        } => {
            let checks = check
                .iter()
                .map(|c| c.parse::<CheckKind>())
                .collect::<Result<Vec<_>, _>>()?;
            let pi = match (p, pi.is_empty()) {
                (Some(p), _) => Some(prime_set(&[p])?),
                (None, false) => Some(prime_set(&pi)?),
                (None, true) => None,
            };
            let opts = SuiteOptions {
                check: run.check,
                checks,
                primes: pi.as_ref().map(|s| s.primes().collect()),
                pi,
                max_pi_len,
                coclasses: coclass.map(|k| vec![k]),
            };
            let results: Vec<CheckResult> = if group.eq_ignore_ascii_case("all") {
                let entries: Vec<CatalogEntry> = catalog()
                    .into_iter()
                    .filter(|e| {
                        let keep = run.within_cap(e).is_ok();
                        if !keep {
                            eprintln!("skipping {}: order above the cap", e.name);
                        }
                        keep
                    })
                    .collect();
                entries
                    .par_iter()
                    .map(|e| run_entry(e, &opts))
                    .collect::<Vec<_>>()
                    .into_iter()
                    .flatten()
                    .collect()
            } else {
                let t = run.target(&group)?;
                match &t.entry {
                    Some(e) => run_entry(e, &opts),
                    None => run_group(&t.name, &t.multiplier, &opts),
                }
            };
            run.emit_checks(&results)
        }
        Command::Decompose {
            group,
            coclass,
            pi,
            irrep,
        } => {
            let pi = prime_set(&pi)?;
            let t = run.target(&group)?;
            let c = t.multiplier.coclass_by_index(coclass)?;
            let inst = Instance::new(&t.name, t.multiplier.clone(), c, run.check)?;
            let indices: Vec<usize> = match irrep {
                Some(k) if k < inst.irreps.len() => vec![k],
                Some(k) => bail!(Error::Config(format!(
                    "irreducible {k} out of range ({} irreducibles)",
                    inst.irreps.len()
                ))),
                None => (0..inst.irreps.len()).collect(),
            };
            let results: Vec<CheckResult> = indices
                .par_iter()
                .map(|&k| decompose_check(&inst, &pi, k))
                .collect();
            run.emit_checks(&results)
        }
        Command::Export { group, cayley } => {
            let t = run.target(&group)?;
            let g = t.multiplier.group();
            let body = if cayley {
                serde_json::to_value(CayleyJson::of(g))?
            } else {
                match GroupJson::of(g) {
                    Some(spec) => serde_json::to_value(spec)?,
                    None => bail!(Error::Config(format!("{} has no permutation form", t.name))),
                }
            };
            let text = serde_json::to_string_pretty(&body)? + "\n";
            match &run.global.out {
                Some(dir) => {
                    fs::create_dir_all(dir)?;
                    fs::write(dir.join(format!("{}.json", file_stem(&t.name))), text)?;
                }
                None => std::io::stdout().lock().write_all(text.as_bytes())?,
            }
            Ok(true)
        }
    }
}

/// Group name with characters unsafe in file names replaced.
fn file_stem(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '_' || c == '-' { c } else { '_' })
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.global.jobs;
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(cli)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
