use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{
    pi_decompose, verify_a5_negative_control, verify_basic, verify_cor35, verify_ito_michler,
    verify_lemma31, verify_pi_ito_michler, verify_pi_theorem, CheckOptions, CheckResult,
    Instance,
};
use crate::catalog::CatalogEntry;
use crate::cohomology::SchurMultiplier;
use crate::error::{Error, Result};
use crate::group::{is_solvable, normal_subgroups, pi_series, PiSet};
use crate::projrep::irreducibles_on;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Basic,
    Lemma31,
    ItoMichler,
    PiItoMichler,
    Cor35,
    PiTheorem,
    Decompose,
    A5Control,
}

impl CheckKind {
    pub const ALL: [CheckKind; 8] = [
        CheckKind::Basic,
        CheckKind::Lemma31,
        CheckKind::ItoMichler,
        CheckKind::PiItoMichler,
        CheckKind::Cor35,
        CheckKind::PiTheorem,
        CheckKind::Decompose,
        CheckKind::A5Control,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Basic => "basic",
            CheckKind::Lemma31 => "lemma31",
            CheckKind::ItoMichler => "ito_michler",
            CheckKind::PiItoMichler => "pi_ito_michler",
            CheckKind::Cor35 => "cor35",
            CheckKind::PiTheorem => "pi_theorem",
            CheckKind::Decompose => "pi_decompose",
            CheckKind::A5Control => "a5_negative_control",
        }
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == key || (key == "decompose" && *k == CheckKind::Decompose))
            .ok_or_else(|| Error::Config(format!("unknown check `{s}`")))
    }
}

/// Which checks to run and on which primes.
#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub check: CheckOptions,
    /// Empty means all.
    pub checks: Vec<CheckKind>,
    /// Primes for the `p`-checks; all prime divisors when absent.
    pub primes: Option<Vec<u64>>,
    /// π for the π-checks; all subsets up to `max_pi_len` when absent.
    pub pi: Option<PiSet>,
    pub max_pi_len: usize,
    /// Only these coclass indices; all when absent.
    pub coclasses: Option<Vec<usize>>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            check: CheckOptions::default(),
            checks: Vec::new(),
            primes: None,
            pi: None,
            max_pi_len: 2,
            coclasses: None,
        }
    }
}

impl SuiteOptions {
    fn wants(&self, k: CheckKind) -> bool {
        self.checks.is_empty() || self.checks.contains(&k)
    }
}

/// Non-empty subsets of `set` with at most `max_len` primes, by size and
/// then lexicographically.
pub fn pi_subsets(set: &PiSet, max_len: usize) -> Vec<PiSet> {
    let primes: Vec<u64> = set.primes().collect();
    let mut out: Vec<Vec<u64>> = (1u32..1 << primes.len())
        .map(|mask| {
            primes
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &p)| p)
                .collect::<Vec<_>>()
        })
        .filter(|s| s.len() <= max_len)
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.into_iter().map(PiSet::new).collect()
}

/// All selected checks for every selected coclass of the entry, in a
/// fixed order.
pub fn run_entry(entry: &CatalogEntry, opts: &SuiteOptions) -> Vec<CheckResult> {
    let setup = entry.build().and_then(|g| {
        let m = entry.multiplier(&g, opts.check.h2_cap)?;
        Ok(Arc::new(m))
    });
    match setup {
        Ok(m) => run_group(&entry.name, &m, opts),
        Err(e) => vec![setup_failure(&entry.name, entry.order, e)],
    }
}

/// All selected checks for every selected coclass of the multiplier's
/// group, in a fixed order.
pub fn run_group(name: &str, mult: &Arc<SchurMultiplier>, opts: &SuiteOptions) -> Vec<CheckResult> {
    let order = mult.group().order();
    let coclasses: Vec<_> = match &opts.coclasses {
        Some(idx) => {
            let mut out = Vec::new();
            for &i in idx {
                match mult.coclass_by_index(i) {
                    Ok(c) => out.push(c),
                    Err(e) => return vec![setup_failure(name, order, e)],
                }
            }
            out
        }
        None => mult.coclasses(),
    };
    coclasses
        .into_par_iter()
        .map(|c| match Instance::new(name, mult.clone(), c, opts.check) {
            Ok(inst) => run_instance(&inst, opts),
            Err(e) => vec![setup_failure(name, order, e)],
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn setup_failure(name: &str, order: usize, e: Error) -> CheckResult {
    let inputs = super::CheckInputs {
        group: name.to_string(),
        order,
        coclass: vec![],
        cocycle_hash: String::new(),
        p: None,
        pi: None,
    };
    CheckResult::new("setup", inputs).errored(e)
}

/// The selected checks on one instance.
pub fn run_instance(inst: &Instance, opts: &SuiteOptions) -> Vec<CheckResult> {
    let order = inst.group.order() as u64;
    let all_primes = PiSet::of(order);
    let primes: Vec<u64> = match &opts.primes {
        Some(ps) => ps.clone(),
        None => all_primes.primes().collect(),
    };
    let pis: Vec<PiSet> = match &opts.pi {
        Some(pi) => vec![pi.clone()],
        None => pi_subsets(&all_primes, opts.max_pi_len),
    };
    let mut tasks: Vec<Box<dyn Fn() -> Vec<CheckResult> + Send + Sync + '_>> = Vec::new();
    if opts.wants(CheckKind::Basic) {
        tasks.push(Box::new(move || vec![verify_basic(inst)]));
    }
    if opts.wants(CheckKind::Lemma31) {
        tasks.push(Box::new(move || lemma_checks(inst)));
    }
    for &p in &primes {
        if opts.wants(CheckKind::ItoMichler) {
            tasks.push(Box::new(move || vec![verify_ito_michler(inst, p)]));
        }
        if opts.wants(CheckKind::Cor35) {
            tasks.push(Box::new(move || vec![verify_cor35(inst, p)]));
        }
    }
    for pi in &pis {
        if opts.wants(CheckKind::PiTheorem) {
            tasks.push(Box::new(move || vec![verify_pi_theorem(inst, pi)]));
        }
        if opts.wants(CheckKind::PiItoMichler) {
            tasks.push(Box::new(move || vec![verify_pi_ito_michler(inst, pi)]));
        }
    }
    if opts.wants(CheckKind::Decompose) {
        let decompose_pis: Vec<PiSet> = match &opts.pi {
            Some(pi) => vec![pi.clone()],
            None => all_primes.primes().map(PiSet::single).collect(),
        };
        for pi in decompose_pis {
            for k in 0..inst.irreps.len() {
                let pi = pi.clone();
                tasks.push(Box::new(move || vec![decompose_check(inst, &pi, k)]));
            }
        }
    }
    if opts.wants(CheckKind::A5Control) && inst.group.order() == 60 && !is_solvable(&inst.group)
    {
        tasks.push(Box::new(move || vec![verify_a5_negative_control(inst)]));
    }
    tasks
        .par_iter()
        .map(|t| t())
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// The `lemma31` check on every proper non-trivial normal subgroup and every
/// irreducible over it.
fn lemma_checks(inst: &Instance) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for n in normal_subgroups(&inst.group) {
        if n.is_trivial() || n.is_whole() {
            continue;
        }
        match irreducibles_on(&n, inst.table(), 1e-12, inst.tol(), inst.seed()) {
            Ok(reps) => {
                for (k, v) in reps.iter().enumerate() {
                    let mut r = verify_lemma31(inst, &n, v);
                    r.witness("irreducible_index", k);
                    out.push(r);
                }
            }
            Err(e) => {
                let mut r = CheckResult::new("lemma31", inst.inputs(None, None));
                r.witness("n_order", n.order());
                out.push(r.errored(e));
            }
        }
    }
    out
}

/// `pi_decompose` on the `k`-th irreducible.
pub fn decompose_check(inst: &Instance, pi: &PiSet, k: usize) -> CheckResult {
    let mut r = CheckResult::new("pi_decompose", inst.inputs(None, Some(pi)));
    r.witness("irreducible_index", k);
    let series = pi_series(&inst.group, pi);
    if !series.separable {
        return r.inapplicable(format!("group is not {pi}-separable"));
    }
    let v = &inst.irreps[k];
    match pi_decompose(v, &inst.coclass, &series, inst.seed()) {
        Ok((cert, report)) => {
            r.lhs = json!(report.criterion_lhs);
            r.rhs = json!(report.criterion_rhs);
            r.require("restrictions_irreducible", cert.restrictions_irreducible());
            r.require("reconstructs", cert.reconstructs());
            r.require("pi_report_holds", report.holds());
            r.witness("certificate", &cert);
            r.witness("report", &report);
        }
        Err(e) => return r.errored(e),
    }
    r
}
