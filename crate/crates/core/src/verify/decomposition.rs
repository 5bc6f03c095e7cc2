use std::sync::Arc;

use serde::Serialize;

use super::hall_in;
use crate::cohomology::{pi_part, Coclass};
use crate::error::{Error, Result};
use crate::group::{NormalSeries, PiSet, PiTag, Subgroup};
use crate::linalg::ONE;
use crate::projrep::{
    clifford_correspondent, clifford_extend, decompose, factor_over_extension, hom_dimension,
    induce_rep_over, inertia_group, is_irreducible, restrict_rep, tensor_all, trivial_on,
    ProjRep,
};

#[derive(Debug, Clone, Serialize)]
pub struct FactorRecord {
    /// `i` in `1..=l`.
    pub step: usize,
    pub tag: PiTag,
    pub degree: usize,
    /// `|J ∩ N_i|`.
    pub restriction_order: usize,
    pub restriction_irreducible: bool,
    /// The factor's table is a coboundary on `J`.
    pub table_trivial: bool,
}

/// `V = ind_J^G(Y₁ ⊗ … ⊗ Y_l)` with each `Y_i|_{J∩N_i}` irreducible.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionCertificate {
    pub series_orders: Vec<usize>,
    /// `|J_0| ≥ |J_1| ≥ …`, ending at `|J|`.
    pub inertia_orders: Vec<usize>,
    pub degree: usize,
    pub index: usize,
    pub records: Vec<FactorRecord>,
    /// `dim Hom(ind(⊗Y_i), V)`.
    pub reconstruction_dimension: f64,
    pub reconstruction_residual: f64,
    #[serde(skip)]
    pub subgroup: Subgroup,
    #[serde(skip)]
    pub factors: Vec<ProjRep>,
}

impl DecompositionCertificate {
    pub fn restrictions_irreducible(&self) -> bool {
        self.records.iter().all(|r| r.restriction_irreducible)
    }

    pub fn reconstructs(&self) -> bool {
        (self.reconstruction_dimension - 1.0).abs() < 1e-6 && self.reconstruction_residual < 1e-6
    }
}

/// Walk the series: at step `i` restrict the current `W_i` to
/// `M_{i+1} = J_i ∩ N_{i+1}`, take the first constituent in character
/// order, pass to its inertia group `J_{i+1}` inside `J_i` and split the
/// Clifford correspondent as `Y_{i+1} ⊗ W_{i+1}`. The last factor is the
/// final `W`.
pub fn decompose_along_series(
    v: &ProjRep,
    series: &NormalSeries,
    seed: u64,
) -> Result<DecompositionCertificate> {
    let g = v.group().clone();
    let whole = Subgroup::whole(&g);
    if !v.domain().is_whole() {
        return Err(Error::NotSubgroup("representation must live on the whole group".into()));
    }
    if !series.separable || series.terms.first().map(|t| !t.is_trivial()).unwrap_or(true) {
        return Err(Error::NotNormal);
    }
    let l = series.len();
    let mut j = whole.clone();
    let mut w = v.clone();
    let mut ys: Vec<ProjRep> = Vec::with_capacity(l);
    let mut inertia_orders = vec![j.order()];
    for i in 0..l.saturating_sub(1) {
        let m = j.intersect(&series.terms[i + 1]);
        let parts = decompose(&restrict_rep(&w, &m)?, seed.wrapping_add(i as u64))?;
        let vi = parts[0].rep.clone();
        let jn = inertia_group(&vi, &j)?;
        let ext = clifford_extend(&vi, &jn)?;
        let x = clifford_correspondent(&w, &ext)?;
        let wn = factor_over_extension(&x, &ext)?;
        ys = ys
            .iter()
            .map(|y| restrict_rep(y, &jn))
            .collect::<Result<Vec<_>>>()?;
        ys.push(ext.extension);
        j = jn;
        w = wn;
        inertia_orders.push(j.order());
    }
    ys.push(w);

    let mut records = Vec::with_capacity(l);
    for (k, y) in ys.iter().enumerate() {
        let m = j.intersect(&series.terms[k + 1]);
        let res = restrict_rep(y, &m)?;
        records.push(FactorRecord {
            step: k + 1,
            tag: series.tags[k],
            degree: y.degree(),
            restriction_order: m.order(),
            restriction_irreducible: is_irreducible(&res),
            table_trivial: trivial_on(&j, y.table(), y.table_tolerance(), *y.tolerances(), seed)?,
        });
    }

    let product = tensor_all(&ys)?;
    let induced = induce_rep_over(&product, &whole, v.table(), v.table_tolerance())
        .map_err(|e| Error::ReconstructionFailure(format!("induction: {e}")))?;
    if induced.degree() != v.degree() {
        return Err(Error::ReconstructionFailure(format!(
            "induced degree {} for a degree {} input",
            induced.degree(),
            v.degree()
        )));
    }
    let dimension = hom_dimension(&induced, v)?;
    let residual = induced.full_residual();
    let cert = DecompositionCertificate {
        series_orders: series.orders(),
        inertia_orders,
        degree: v.degree(),
        index: g.order() / j.order(),
        records,
        reconstruction_dimension: dimension,
        reconstruction_residual: residual,
        subgroup: j,
        factors: ys,
    };
    if !cert.reconstructs() {
        return Err(Error::ReconstructionFailure(format!(
            "intertwiner dimension {dimension}, residual {residual:.3e}"
        )));
    }
    Ok(cert)
}

/// The π-split `V = ind_J^G(V_π ⊗ V_π′)` and its checks.
#[derive(Debug, Clone, Serialize)]
pub struct PiReport {
    pub pi: Vec<u64>,
    pub subgroup_order: usize,
    pub index: usize,
    pub degree: usize,
    pub pi_degree: usize,
    pub pi_prime_degree: usize,
    /// `V_π` carries `res c_π|_J`, up to a coboundary.
    pub pi_coclass_matches: bool,
    pub pi_prime_coclass_matches: bool,
    pub hall_order: usize,
    pub hall_prime_order: usize,
    pub pi_on_hall_irreducible: bool,
    pub pi_prime_on_hall_prime_irreducible: bool,
    /// `V_π′|_H` and `V_π|_{H′}` are ordinary up to a coboundary.
    pub pi_prime_on_hall_ordinary: bool,
    pub pi_on_hall_prime_ordinary: bool,
    /// `dim(V)_π = |G:J|_π·dim V_π`.
    pub degree_identity_pi: bool,
    /// `dim(V)_π′ = |G:J|_π′·dim V_π′`.
    pub degree_identity_pi_prime: bool,
    /// `Π(V) ⊆ π′`.
    pub criterion_lhs: bool,
    /// `H` Hall in `G`, `c_π = 1`, `V_π` linear and `(V_π⊗V_π′)|_{H′}`
    /// irreducible.
    pub criterion_rhs: bool,
}

impl PiReport {
    pub fn holds(&self) -> bool {
        self.pi_coclass_matches
            && self.pi_prime_coclass_matches
            && self.pi_on_hall_irreducible
            && self.pi_prime_on_hall_prime_irreducible
            && self.pi_prime_on_hall_ordinary
            && self.pi_on_hall_prime_ordinary
            && self.degree_identity_pi
            && self.degree_identity_pi_prime
            && self.criterion_lhs == self.criterion_rhs
    }
}

fn tensor_tagged(
    cert: &DecompositionCertificate,
    tag: PiTag,
    v: &ProjRep,
) -> Result<ProjRep> {
    let chosen: Vec<ProjRep> = cert
        .records
        .iter()
        .zip(&cert.factors)
        .filter(|(r, _)| r.tag == tag)
        .map(|(_, y)| y.clone())
        .collect();
    if chosen.is_empty() {
        let n = v.group().order();
        return ProjRep::trivial(
            cert.subgroup.clone(),
            Arc::new(vec![ONE; n * n]),
            0.0,
            *v.tolerances(),
        );
    }
    tensor_all(&chosen)
}

/// Whether `table/reference` is a coboundary on `h`.
fn same_class_on(
    h: &Subgroup,
    table: &[num_complex::Complex64],
    reference: &[num_complex::Complex64],
    table_tol: f64,
    v: &ProjRep,
    seed: u64,
) -> Result<bool> {
    let quotient: Vec<_> = table.iter().zip(reference).map(|(a, b)| a / b).collect();
    trivial_on(h, &quotient, table_tol, *v.tolerances(), seed)
}

/// [`decompose_along_series`] on the π-series, grouping the π-tagged
/// factors into `V_π` and the π′-tagged ones into `V_π′`.
pub fn pi_decompose(
    v: &ProjRep,
    coclass: &Coclass,
    series: &NormalSeries,
    seed: u64,
) -> Result<(DecompositionCertificate, PiReport)> {
    let g = v.group().clone();
    let order = g.order() as u64;
    let pi = series.pi.intersection(&PiSet::of(order));
    let pi_prime = pi.complement_in(order);
    let cert = decompose_along_series(v, series, seed)?;
    let j = &cert.subgroup;
    let v_pi = tensor_tagged(&cert, PiTag::Pi, v)?;
    let v_pi_prime = tensor_tagged(&cert, PiTag::PiPrime, v)?;

    let (c_pi, c_pi_prime) = pi_part(coclass, &pi);
    let t_pi = c_pi.representative().to_complex();
    let t_pi_prime = c_pi_prime.representative().to_complex();
    let tt = v_pi.table_tolerance().max(v_pi_prime.table_tolerance());
    let pi_coclass_matches = same_class_on(j, v_pi.table(), &t_pi, tt, v, seed)?;
    let pi_prime_coclass_matches = same_class_on(j, v_pi_prime.table(), &t_pi_prime, tt, v, seed)?;

    let h = hall_in(j, &pi)?;
    let hp = hall_in(j, &pi_prime)?;
    let pi_on_hall_irreducible = is_irreducible(&restrict_rep(&v_pi, &h)?);
    let pi_prime_on_hall_prime_irreducible = is_irreducible(&restrict_rep(&v_pi_prime, &hp)?);
    let pi_prime_on_hall_ordinary = trivial_on(&h, v_pi_prime.table(), tt, *v.tolerances(), seed)?;
    let pi_on_hall_prime_ordinary = trivial_on(&hp, v_pi.table(), tt, *v.tolerances(), seed)?;

    let d = v.degree() as u64;
    let index = cert.index as u64;
    let degree_identity_pi = pi.part(d) == pi.part(index) * v_pi.degree() as u64;
    let degree_identity_pi_prime =
        pi_prime.part(d) == pi_prime.part(index) * v_pi_prime.degree() as u64;

    let u = crate::projrep::tensor_reps(&v_pi, &v_pi_prime)?;
    let criterion_lhs = pi.part(d) == 1;
    let criterion_rhs = h.order() as u64 == pi.part(order)
        && c_pi.is_trivial()
        && v_pi.degree() == 1
        && is_irreducible(&restrict_rep(&u, &hp)?);

    let report = PiReport {
        pi: pi.primes().collect(),
        subgroup_order: j.order(),
        index: cert.index,
        degree: v.degree(),
        pi_degree: v_pi.degree(),
        pi_prime_degree: v_pi_prime.degree(),
        pi_coclass_matches,
        pi_prime_coclass_matches,
        hall_order: h.order(),
        hall_prime_order: hp.order(),
        pi_on_hall_irreducible,
        pi_prime_on_hall_prime_irreducible,
        pi_prime_on_hall_ordinary,
        pi_on_hall_prime_ordinary,
        degree_identity_pi,
        degree_identity_pi_prime,
        criterion_lhs,
        criterion_rhs,
    };
    Ok((cert, report))
}
