//! Executable equivalence checks on `(group, coclass, p or π)` inputs and
//! the Clifford decomposition along normal series.
//!
//! Every check returns a [`CheckResult`]; numeric failures inside a check
//! become a `Fail` verdict with the error as reason, and unmet hypotheses
//! an `Inapplicable` one.

mod basic;
mod decomposition;
mod ito;
mod lemma;
mod suite;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cohomology::{Coclass, SchurMultiplier};
use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::group::{hall_subgroup, quotient_group, GroupRef, PiSet, Subgroup};
use crate::projrep::{split_regular, ProjRep};
use crate::twisted::{c_regular_classes, center_basis, wedderburn_with, TwistedAlgebra};

pub use basic::verify_basic;
pub use decomposition::{
    decompose_along_series, pi_decompose, DecompositionCertificate, FactorRecord, PiReport,
};
pub use ito::{
    ito_michler_conditions, verify_a5_negative_control, verify_cor35, verify_ito_michler,
    verify_pi_ito_michler, verify_pi_theorem, ItoMichlerConditions,
};
pub use lemma::verify_lemma31;
pub use suite::{
    decompose_check, pi_subsets, run_entry, run_group, run_instance, CheckKind, SuiteOptions,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckInputs {
    pub group: String,
    pub order: usize,
    pub coclass: Vec<u64>,
    pub cocycle_hash: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi: Option<Vec<u64>>,
}

/// Outcome of one check. For equivalences `verdict` is `Pass` exactly
/// when `lhs` and `rhs` agree and every side condition held.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub inputs: CheckInputs,
    pub lhs: Value,
    pub rhs: Value,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub witnesses: BTreeMap<String, Value>,
}

impl CheckResult {
    pub fn new(check: &str, inputs: CheckInputs) -> Self {
        CheckResult {
            check: check.to_string(),
            inputs,
            lhs: Value::Null,
            rhs: Value::Null,
            verdict: Verdict::Pass,
            reason: None,
            witnesses: BTreeMap::new(),
        }
    }

    pub fn witness(&mut self, key: &str, value: impl Serialize) {
        self.witnesses.insert(
            key.to_string(),
            serde_json::to_value(value).unwrap_or(Value::Null),
        );
    }

    /// Record both sides of an equivalence; the verdict becomes `Fail` if
    /// they differ.
    pub fn equivalence(&mut self, lhs: bool, rhs: bool) {
        self.lhs = Value::Bool(lhs);
        self.rhs = Value::Bool(rhs);
        if lhs != rhs {
            self.fail(format!("lhs = {lhs} but rhs = {rhs}"));
        }
    }

    /// Mark failed, keeping the first reason.
    pub fn fail(&mut self, reason: impl Into<String>) {
        if self.verdict != Verdict::Fail {
            self.verdict = Verdict::Fail;
            self.reason = Some(reason.into());
        }
    }

    /// Record a side condition that must hold.
    pub fn require(&mut self, name: &str, ok: bool) {
        self.witness(name, ok);
        if !ok {
            self.fail(format!("{name} does not hold"));
        }
    }

    pub fn inapplicable(mut self, reason: impl Into<String>) -> Self {
        self.verdict = Verdict::Inapplicable;
        self.reason = Some(reason.into());
        self
    }

    pub fn errored(mut self, e: Error) -> Self {
        self.verdict = Verdict::Fail;
        self.reason = Some(e.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Thresholds and seed shared by all checks of a run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CheckOptions {
    pub tol: Tolerances,
    pub seed: u64,
    pub h2_cap: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            tol: Tolerances::default(),
            seed: crate::config::DEFAULT_SEED,
            h2_cap: crate::cohomology::DEFAULT_H2_CAP,
        }
    }
}

/// A group with a coclass, its twisted algebra, degrees and irreducible
/// representations.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub group: GroupRef,
    pub multiplier: Arc<SchurMultiplier>,
    pub coclass: Coclass,
    pub options: CheckOptions,
    pub algebra: TwistedAlgebra,
    /// Ascending.
    pub degrees: Vec<usize>,
    pub regular_classes: usize,
    /// One per Wedderburn block, in block order.
    pub irreps: Vec<ProjRep>,
    pub residual: f64,
}

impl Instance {
    pub fn new(
        name: &str,
        multiplier: Arc<SchurMultiplier>,
        coclass: Coclass,
        options: CheckOptions,
    ) -> Result<Self> {
        let group = multiplier.group().clone();
        let algebra = TwistedAlgebra::from_cocycle(coclass.representative(), options.tol);
        let classes = c_regular_classes(&algebra)?;
        let centre = center_basis(&algebra, &classes)?;
        let w = wedderburn_with(&algebra, &centre, options.seed)?;
        let irreps = split_regular(&algebra, &w, options.seed)?;
        let residual = irreps.iter().map(|r| r.residual()).fold(w.residual, f64::max);
        Ok(Instance {
            name: name.to_string(),
            group,
            multiplier,
            coclass,
            options,
            degrees: w.degrees(),
            regular_classes: classes.count(),
            irreps,
            residual,
            algebra,
        })
    }

    pub fn table(&self) -> &Arc<Vec<Complex64>> {
        self.algebra.table()
    }

    pub fn tol(&self) -> Tolerances {
        self.options.tol
    }

    pub fn seed(&self) -> u64 {
        self.options.seed
    }

    pub fn inputs(&self, p: Option<u64>, pi: Option<&PiSet>) -> CheckInputs {
        CheckInputs {
            group: self.name.clone(),
            order: self.group.order(),
            coclass: self.coclass.exponents().to_vec(),
            cocycle_hash: self.coclass.representative().hash(),
            p,
            pi: pi.map(|s| s.primes().collect()),
        }
    }

    /// `Π(Irr(G|c))`.
    pub fn degree_primes(&self) -> PiSet {
        degree_primes(&self.degrees)
    }

    /// Whether the restriction of the coclass to `h` is trivial, by the
    /// numeric degree-one test.
    pub fn trivial_on(&self, h: &Subgroup) -> Result<bool> {
        crate::projrep::trivial_on(h, self.table(), 1e-12, self.tol(), self.seed())
    }
}

pub fn degree_primes(degrees: &[usize]) -> PiSet {
    degrees
        .iter()
        .fold(PiSet::new([]), |acc, &d| acc.union(&PiSet::of(d as u64)))
}

/// Standalone copy of a subgroup; local index `i` is `elements()[i]`.
pub fn local_group(h: &Subgroup) -> GroupRef {
    let (g, _) = h.to_group(format!("{}<{}>", h.parent().name(), h.order()));
    Arc::new(g)
}

/// Map a subgroup of the standalone copy of `h` back into the parent.
pub fn lift_subgroup(h: &Subgroup, local: &Subgroup) -> Subgroup {
    let e: Vec<usize> = local.elements().iter().map(|&i| h.elements()[i]).collect();
    Subgroup::from_elements(h.parent(), &e).expect("image of a subgroup")
}

/// Hall π-subgroup of a subgroup.
pub fn hall_in(h: &Subgroup, pi: &PiSet) -> Result<Subgroup> {
    let local = local_group(h);
    Ok(lift_subgroup(h, &hall_subgroup(&local, pi)?))
}

/// Push a table on `J`, constant on cosets of `N ⊴ J`, down to `J/N`.
/// Returns the quotient, its table and the largest deviation from
/// constancy.
pub fn descend_table(
    j: &Subgroup,
    n: &Subgroup,
    table: &[Complex64],
) -> Result<(GroupRef, Vec<Complex64>, f64)> {
    if !n.is_subgroup_of(j) {
        return Err(Error::NotSubgroup("kernel is not in the subgroup".into()));
    }
    let ambient = j.parent().order();
    let local = local_group(j);
    let kernel: Vec<usize> = n.elements().iter().map(|&x| j.position(x).unwrap()).collect();
    let kernel = Subgroup::from_elements(&local, &kernel)?;
    let q = quotient_group(&local, &kernel)?;
    let m = q.group.order();
    let at = |a: usize, b: usize| table[j.elements()[a] * ambient + j.elements()[b]];
    let mut out = Vec::with_capacity(m * m);
    for &a in &q.section {
        for &b in &q.section {
            out.push(at(a, b));
        }
    }
    let k = j.order();
    let mut deviation = 0.0f64;
    for a in 0..k {
        for b in 0..k {
            let v = out[q.projection[a] * m + q.projection[b]];
            deviation = deviation.max((at(a, b) - v).norm());
        }
    }
    Ok((q.group, out, deviation))
}
