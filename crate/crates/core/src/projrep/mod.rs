//! Unitary projective representations `φ(x)φ(y) = α(x,y)·φ(xy)` and the
//! Clifford toolkit built on them.
//!
//! A representation lives on a subgroup `H` of an ambient group `G`.
//! Element indices and the cocycle table are those of `G`; matrices are
//! stored in the order of `H.elements()`, which is also the element order
//! of the standalone copy `H.to_group()`.

mod clifford;
mod induce;
mod intertwine;
mod regular;

use std::cmp::Ordering;
use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::group::{ConjClass, GroupRef, Subgroup};
use crate::linalg::{kron, max_abs_diff, unitarity_defect, CMat, ONE};

pub use clifford::{
    clifford_correspondent, clifford_extend, factor_over_extension, inertia_group,
    CliffordExtension,
};
pub use induce::{induce_rep, induce_rep_over};
pub use intertwine::{
    commutant_dimension, decompose, hom_dimension, intertwiner_space, is_irreducible,
    isomorphic, Constituent, Intertwiners,
};
pub use regular::{irreducible_reps, irreducibles_on, local_algebra, split_regular, trivial_on};

#[derive(Debug, Clone)]
pub struct ProjRep {
    domain: Subgroup,
    table: Arc<Vec<Complex64>>,
    table_tol: f64,
    mats: Vec<CMat>,
    degree: usize,
    tol: Tolerances,
}

impl ProjRep {
    /// Validates shapes, `φ(1) = 1`, unitarity and the cocycle relation on
    /// generators.
    pub fn new(
        domain: Subgroup,
        table: Arc<Vec<Complex64>>,
        table_tol: f64,
        mats: Vec<CMat>,
        tol: Tolerances,
    ) -> Result<Self> {
        let n = domain.parent().order();
        if table.len() != n * n {
            return Err(Error::InvalidTable("cocycle table has the wrong size".into()));
        }
        if mats.len() != domain.order() {
            return Err(Error::NotARepresentation(format!(
                "{} matrices for a subgroup of order {}",
                mats.len(),
                domain.order()
            )));
        }
        let d = mats[0].nrows();
        if d == 0 || mats.iter().any(|m| m.shape() != (d, d)) {
            return Err(Error::NotARepresentation("matrices must be square of one size".into()));
        }
        let r = Self::unchecked(domain, table, table_tol, mats, tol);
        let res = r.residual();
        if res > r.representation_tol() {
            return Err(Error::NotARepresentation(format!("residual {res:.3e}")));
        }
        Ok(r)
    }

    pub(crate) fn unchecked(
        domain: Subgroup,
        table: Arc<Vec<Complex64>>,
        table_tol: f64,
        mats: Vec<CMat>,
        tol: Tolerances,
    ) -> Self {
        let degree = mats[0].nrows();
        ProjRep {
            domain,
            table,
            table_tol,
            mats,
            degree,
            tol,
        }
    }

    /// Degree-one identity representation; needs a table trivial on the
    /// domain.
    pub fn trivial(
        domain: Subgroup,
        table: Arc<Vec<Complex64>>,
        table_tol: f64,
        tol: Tolerances,
    ) -> Result<Self> {
        let mats = vec![CMat::identity(1, 1); domain.order()];
        Self::new(domain, table, table_tol, mats, tol)
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    /// The ambient group.
    pub fn group(&self) -> &GroupRef {
        self.domain.parent()
    }

    pub fn table(&self) -> &Arc<Vec<Complex64>> {
        &self.table
    }

    pub fn table_tolerance(&self) -> f64 {
        self.table_tol
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// By position in the domain.
    pub fn matrices(&self) -> &[CMat] {
        &self.mats
    }

    /// `φ(x)` for an ambient index `x` of the domain.
    pub fn matrix(&self, x: usize) -> &CMat {
        let i = self
            .domain
            .position(x)
            .unwrap_or_else(|| panic!("element {x} is outside the domain"));
        &self.mats[i]
    }

    #[inline]
    pub fn alpha(&self, x: usize, y: usize) -> Complex64 {
        self.table[x * self.group().order() + y]
    }

    /// Threshold for representation identities, loosened for numerically
    /// read tables.
    pub fn representation_tol(&self) -> f64 {
        self.tol.representation.max(100.0 * self.table_tol)
    }

    /// `max(‖φ(1) − 1‖, unitarity, ‖φ(x)φ(s) − α(x,s)φ(xs)‖)` over domain
    /// elements `x` and generators `s`; with the cocycle identity this
    /// gives the relation on all pairs.
    pub fn residual(&self) -> f64 {
        let g = self.group();
        let d = self.degree;
        let mut worst = max_abs_diff(&self.mats[0], &CMat::identity(d, d));
        for m in &self.mats {
            worst = worst.max(unitarity_defect(m));
        }
        for s in self.domain.generators() {
            let ps = self.matrix(s);
            for &x in self.domain.elements() {
                let lhs = self.matrix(x) * ps;
                let rhs = self.matrix(g.mul(x, s)) * self.alpha(x, s);
                worst = worst.max(max_abs_diff(&lhs, &rhs));
            }
        }
        worst
    }

    /// The relation on all pairs of domain elements.
    pub fn full_residual(&self) -> f64 {
        let g = self.group();
        let mut worst = 0.0f64;
        for &x in self.domain.elements() {
            for &y in self.domain.elements() {
                let lhs = self.matrix(x) * self.matrix(y);
                let rhs = self.matrix(g.mul(x, y)) * self.alpha(x, y);
                worst = worst.max(max_abs_diff(&lhs, &rhs));
            }
        }
        worst
    }

    /// Largest difference between the two tables on the domain.
    pub fn table_distance(&self, other: &ProjRep) -> f64 {
        let n = self.group().order();
        let mut worst = 0.0f64;
        for &x in self.domain.elements() {
            for &y in self.domain.elements() {
                worst = worst.max((self.table[x * n + y] - other.table[x * n + y]).norm());
            }
        }
        worst
    }

    /// Traces by position in the domain.
    pub fn traces(&self) -> Vec<Complex64> {
        self.mats.iter().map(|m| m.trace()).collect()
    }

    /// Same matrices with a different table, which must agree on the
    /// domain within the comparison tolerance.
    pub fn with_table(&self, table: Arc<Vec<Complex64>>, table_tol: f64) -> Result<ProjRep> {
        let mut r = self.clone();
        r.table = table;
        r.table_tol = table_tol.max(self.table_tol);
        if self.table_distance(&r) > self.tol.comparison {
            return Err(Error::CocycleMismatch);
        }
        Ok(r)
    }

    /// Same data on a different ambient `Arc` of an identical group.
    pub fn rebase(&self, parent: &GroupRef) -> ProjRep {
        let mut r = self.clone();
        r.domain = self.domain.rebase(parent);
        r
    }

    pub fn to_json(&self) -> RepJson {
        let gens = self.domain.generators();
        RepJson {
            degree: self.degree,
            domain_order: self.domain.order(),
            generators: gens.clone(),
            matrices: gens
                .iter()
                .map(|&s| {
                    let m = self.matrix(s);
                    MatrixJson {
                        re: (0..self.degree)
                            .map(|i| (0..self.degree).map(|j| m[(i, j)].re).collect())
                            .collect(),
                        im: (0..self.degree)
                            .map(|i| (0..self.degree).map(|j| m[(i, j)].im).collect())
                            .collect(),
                    }
                })
                .collect(),
            residual: self.residual(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixJson {
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RepJson {
    pub degree: usize,
    pub domain_order: usize,
    pub generators: Vec<usize>,
    pub matrices: Vec<MatrixJson>,
    pub residual: f64,
}

/// Same matrices on `h ≤ domain`.
pub fn restrict_rep(r: &ProjRep, h: &Subgroup) -> Result<ProjRep> {
    if !h.is_subgroup_of(r.domain()) {
        return Err(Error::NotSubgroup("restriction target is not in the domain".into()));
    }
    let mats = h.elements().iter().map(|&x| r.matrix(x).clone()).collect();
    Ok(ProjRep::unchecked(
        h.clone(),
        r.table.clone(),
        r.table_tol,
        mats,
        r.tol,
    ))
}

/// Kronecker product; the cocycle is the pointwise product.
pub fn tensor_reps(a: &ProjRep, b: &ProjRep) -> Result<ProjRep> {
    if a.domain() != b.domain() && a.domain().elements() != b.domain().elements() {
        return Err(Error::NotSubgroup("tensor factors live on different subgroups".into()));
    }
    let table: Vec<Complex64> = a.table.iter().zip(b.table.iter()).map(|(x, y)| x * y).collect();
    let mats = a.mats.iter().zip(&b.mats).map(|(x, y)| kron(x, y)).collect();
    Ok(ProjRep::unchecked(
        a.domain.clone(),
        Arc::new(table),
        a.table_tol + b.table_tol,
        mats,
        a.tol,
    ))
}

/// Tensor product of a nonempty list.
pub fn tensor_all(reps: &[ProjRep]) -> Result<ProjRep> {
    let mut it = reps.iter();
    let first = it
        .next()
        .ok_or_else(|| Error::NotARepresentation("empty tensor product".into()))?
        .clone();
    it.try_fold(first, |acc, r| tensor_reps(&acc, r))
}

/// `α̃(x,g) = α(x,g)/α(g, x^g)` from an ambient table.
pub fn alpha_tilde(g: &GroupRef, table: &[Complex64], x: usize, y: usize) -> Complex64 {
    let n = g.order();
    let xy = g.conj(x, y);
    table[x * n + y] / table[y * n + xy]
}

/// `x ↦ α̃(x,g)·φ(x^g)` on a domain normalized by `g`.
pub fn conjugate_rep(r: &ProjRep, g: usize) -> Result<ProjRep> {
    let grp = r.group();
    let n = r.domain();
    if n.elements().iter().any(|&x| !n.contains(grp.conj(x, g))) {
        return Err(Error::NotNormal);
    }
    let mats = n
        .elements()
        .iter()
        .map(|&x| r.matrix(grp.conj(x, g)) * alpha_tilde(grp, &r.table, x, g))
        .collect();
    Ok(ProjRep::unchecked(
        n.clone(),
        r.table.clone(),
        r.table_tol,
        mats,
        r.tol,
    ))
}

/// Classes of `h` with the regularity flag for the table restricted to
/// `h`: `x` is regular when `α̃(x,y) = 1` for all `y ∈ C_H(x)`.
pub fn regular_classes_in(
    h: &Subgroup,
    table: &[Complex64],
    tol: f64,
) -> Vec<(ConjClass, bool)> {
    let g = h.parent();
    h.classes()
        .into_iter()
        .map(|cl| {
            let x = cl.representative;
            let regular = h
                .elements()
                .iter()
                .filter(|&&y| g.mul(x, y) == g.mul(y, x))
                .all(|&y| (alpha_tilde(g, table, x, y) - ONE).norm() <= tol);
            (cl, regular)
        })
        .collect()
}

/// Traces at class representatives of the domain.
#[derive(Debug, Clone, Serialize)]
pub struct Character {
    pub representatives: Vec<usize>,
    pub values: Vec<(f64, f64)>,
    pub c_regular: Vec<bool>,
}

impl Character {
    pub fn value(&self, i: usize) -> Complex64 {
        Complex64::new(self.values[i].0, self.values[i].1)
    }
}

/// Traces on the classes of the domain; they must vanish off the regular
/// classes.
pub fn character(r: &ProjRep) -> Result<Character> {
    let tol = r.representation_tol().max(r.tol.comparison);
    let classes = regular_classes_in(r.domain(), &r.table, tol.max(100.0 * r.table_tol));
    let mut out = Character {
        representatives: Vec::new(),
        values: Vec::new(),
        c_regular: Vec::new(),
    };
    for (cl, regular) in classes {
        let t = r.matrix(cl.representative).trace();
        if !regular && t.norm() > tol * r.degree() as f64 {
            return Err(Error::CrossCheckMismatch(format!(
                "trace {t} on the non-regular class of {}",
                cl.representative
            )));
        }
        out.representatives.push(cl.representative);
        out.values.push((t.re, t.im));
        out.c_regular.push(regular);
    }
    Ok(out)
}

/// Degree first, then traces at class representatives compared
/// lexicographically up to `tol`.
pub fn compare_by_character(a: &ProjRep, b: &ProjRep, tol: f64) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for cl in a.domain().classes() {
            let x = a.matrix(cl.representative).trace();
            let y = b.matrix(cl.representative).trace();
            if (x.re - y.re).abs() > tol {
                return x.re.total_cmp(&y.re);
            }
            if (x.im - y.im).abs() > tol {
                return x.im.total_cmp(&y.im);
            }
        }
        Ordering::Equal
    })
}
