use std::sync::Arc;

use num_complex::Complex64;

use super::{
    alpha_tilde, conjugate_rep, hom_dimension, intertwiner_space, is_irreducible, restrict_rep,
    tensor_reps, ProjRep,
};
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::linalg::{hermitian_eigen, max_abs_diff, CMat, ONE};

/// Modulus below which a trace or entry is not used to fix a phase.
const PHASE_FLOOR: f64 = 1e-3;

/// `{g ∈ K : φ^g ≅ φ}` for `φ` irreducible on `N ⊴ K`. The table of `φ`
/// must be valid on `K`.
pub fn inertia_group(r: &ProjRep, within: &Subgroup) -> Result<Subgroup> {
    let g = r.group();
    let n = r.domain();
    if !n.is_subgroup_of(within) || !n.is_normalized_by(within) {
        return Err(Error::NotNormal);
    }
    let traces = r.traces();
    let order = n.order() as f64;
    let members: Vec<usize> = within
        .elements()
        .iter()
        .copied()
        .filter(|&y| {
            let s: Complex64 = n
                .elements()
                .iter()
                .zip(&traces)
                .map(|(&x, t)| {
                    let conj = r.matrix(g.conj(x, y)).trace() * alpha_tilde(g, r.table(), x, y);
                    t * conj.conj()
                })
                .sum();
            (s.re / order - 1.0).abs() < 0.5
        })
        .collect();
    Subgroup::from_elements(g, &members).map_err(|_| {
        Error::CrossCheckMismatch("inertia set is not a subgroup".into())
    })
}

/// An extension `Y` of `V = φ` from `N` to its inertia group `J`.
#[derive(Debug, Clone)]
pub struct CliffordExtension {
    pub base: ProjRep,
    pub inertia: Subgroup,
    /// Left transversal of `N` in `J`, identity first.
    pub transversal: Vec<usize>,
    /// Unitary `T_t` with `φ(x)·T_t = T_t·φ^t(x)`.
    pub intertwiners: Vec<CMat>,
    /// `Y` with its numerically read cocycle `β`.
    pub extension: ProjRep,
    /// `α/β` on `J`, trivial on `N × J`; ones outside `J`.
    pub delta: Arc<Vec<Complex64>>,
    /// Largest deviation of `Y(g)Y(h)Y(gh)*` from a scalar.
    pub scalar_defect: f64,
}

/// Scale to a unitary and fix the phase: trace positive real, else the
/// first entry of modulus at least `PHASE_FLOOR` positive real.
fn normalize_intertwiner(x: &CMat) -> Result<CMat> {
    let d = x.nrows();
    let frob = x.norm();
    if frob == 0.0 {
        return Err(Error::InertiaMismatch);
    }
    let u = x * Complex64::new((d as f64).sqrt() / frob, 0.0);
    let tr = u.trace();
    let pivot = if tr.norm() >= PHASE_FLOOR {
        tr
    } else {
        let mut found = None;
        'rows: for i in 0..d {
            for j in 0..d {
                if u[(i, j)].norm() >= PHASE_FLOOR {
                    found = Some(u[(i, j)]);
                    break 'rows;
                }
            }
        }
        found.ok_or(Error::PhaseInstability)?
    };
    Ok(u * (pivot.conj() / pivot.norm()))
}

/// `Y(xt) = α(x,t)⁻¹·φ(x)·T_t` for `x ∈ N` and transversal elements `t`;
/// `β(g,h)` is read off `Y(g)Y(h)Y(gh)*`.
pub fn clifford_extend(r: &ProjRep, j: &Subgroup) -> Result<CliffordExtension> {
    let g = r.group();
    let n = g.order();
    let nsub = r.domain();
    if !nsub.is_subgroup_of(j) || !nsub.is_normalized_by(j) {
        return Err(Error::NotNormal);
    }
    let d = r.degree();
    let transversal = nsub.left_transversal(j);
    let mut intertwiners = Vec::with_capacity(transversal.len());
    for &t in &transversal {
        if t == 0 {
            intertwiners.push(CMat::identity(d, d));
            continue;
        }
        let conj = conjugate_rep(r, t)?;
        let space = intertwiner_space(&conj, r)?;
        if space.dimension != 1 {
            return Err(Error::InertiaMismatch);
        }
        intertwiners.push(normalize_intertwiner(&space.basis[0])?);
    }
    // coset index of each element of J
    let mut coset = vec![usize::MAX; n];
    for (k, &t) in transversal.iter().enumerate() {
        for &x in nsub.elements() {
            coset[g.mul(x, t)] = k;
        }
    }
    let alpha = |x: usize, y: usize| r.table()[x * n + y];
    let ymats: Vec<CMat> = j
        .elements()
        .iter()
        .map(|&y| {
            let k = coset[y];
            let t = transversal[k];
            let x = g.mul(y, g.inv(t));
            r.matrix(x) * &intertwiners[k] * alpha(x, t).conj()
        })
        .collect();
    let ymat = |y: usize| &ymats[j.position(y).expect("element of J")];
    let mut beta = vec![ONE; n * n];
    let mut scalar_defect = 0.0f64;
    for &a in j.elements() {
        for &b in j.elements() {
            let m = ymat(a) * ymat(b) * ymat(g.mul(a, b)).adjoint();
            let s = m.trace() / Complex64::new(d as f64, 0.0);
            scalar_defect = scalar_defect.max(max_abs_diff(&m, &(CMat::identity(d, d) * s)));
            scalar_defect = scalar_defect.max((s.norm() - 1.0).abs());
            beta[a * n + b] = s / s.norm();
        }
    }
    let tol = r.tolerances();
    if scalar_defect > tol.numeric_cocycle {
        return Err(Error::NumericDegeneracy(format!(
            "extension is not projective: defect {scalar_defect:.3e}"
        )));
    }
    let mut identity_defect = 0.0f64;
    for &a in j.elements() {
        for &b in j.elements() {
            let ab = g.mul(a, b);
            for &c in j.elements() {
                let lhs = beta[a * n + b] * beta[ab * n + c];
                let rhs = beta[b * n + c] * beta[a * n + g.mul(b, c)];
                identity_defect = identity_defect.max((lhs - rhs).norm());
            }
        }
    }
    if identity_defect > tol.numeric_cocycle {
        return Err(Error::NotACocycle);
    }
    let mut delta = vec![ONE; n * n];
    for &a in j.elements() {
        for &b in j.elements() {
            delta[a * n + b] = alpha(a, b) / beta[a * n + b];
        }
    }
    let n_defect = nsub
        .elements()
        .iter()
        .flat_map(|&x| j.elements().iter().map(move |&y| (x, y)))
        .map(|(x, y)| (delta[x * n + y] - ONE).norm())
        .fold(0.0f64, f64::max);
    if n_defect > tol.numeric_cocycle {
        return Err(Error::CrossCheckMismatch(format!(
            "obstruction cocycle not trivial on N: {n_defect:.3e}"
        )));
    }
    let table_tol = (10.0 * scalar_defect.max(identity_defect)).max(r.table_tolerance());
    let extension = ProjRep::new(j.clone(), Arc::new(beta), table_tol, ymats, *tol)?;
    Ok(CliffordExtension {
        base: r.clone(),
        inertia: j.clone(),
        transversal,
        intertwiners,
        extension,
        delta: Arc::new(delta),
        scalar_defect,
    })
}

/// The part of `x|_J` lying over `V`: the image of the `V`-isotypic
/// projector `(dim V/|N|)·Σ conj(tr φ(n))·x(n)`, which is `J`-stable.
pub fn clifford_correspondent(x: &ProjRep, ext: &CliffordExtension) -> Result<ProjRep> {
    let v = &ext.base;
    let nsub = v.domain();
    let d = x.degree();
    let mut p = CMat::zeros(d, d);
    for &m in nsub.elements() {
        p += x.matrix(m) * v.matrix(m).trace().conj();
    }
    p *= Complex64::new(v.degree() as f64 / nsub.order() as f64, 0.0);
    let (values, vectors) = hermitian_eigen(&p);
    let k = values.iter().filter(|&&l| l > 0.5).count();
    if k == 0 {
        return Err(Error::ReconstructionFailure(
            "the base does not occur in the restriction".into(),
        ));
    }
    let u = vectors.columns(d - k, k).into_owned();
    let mats = ext
        .inertia
        .elements()
        .iter()
        .map(|&y| u.adjoint() * x.matrix(y) * &u)
        .collect();
    ProjRep::new(
        ext.inertia.clone(),
        x.table().clone(),
        x.table_tolerance(),
        mats,
        *x.tolerances(),
    )
}

/// `W = Hom_N(Y, X)` with `w ↦ X(g)·w·Y(g)*`, kept inflated on `J` with
/// table `δ`; checks that `W` is constant on `N`-cosets, irreducible, and
/// that `X ≅ Y ⊗ W`.
pub fn factor_over_extension(x: &ProjRep, ext: &CliffordExtension) -> Result<ProjRep> {
    let j = &ext.inertia;
    if x.domain().elements() != j.elements() {
        return Err(Error::FactorizationFailure("X must live on the inertia group".into()));
    }
    let y = &ext.extension;
    let nsub = ext.base.domain();
    let yn = restrict_rep(y, nsub)?;
    let xn = restrict_rep(x, nsub)?;
    let space = intertwiner_space(&yn, &xn)
        .map_err(|e| Error::FactorizationFailure(format!("Hom_N(Y, X): {e}")))?;
    let m = space.dimension;
    if m == 0 || m * y.degree() != x.degree() {
        return Err(Error::FactorizationFailure(format!(
            "{m} copies of a degree {} base in degree {}",
            y.degree(),
            x.degree()
        )));
    }
    let z = &space.basis;
    let mats: Vec<CMat> = j
        .elements()
        .iter()
        .map(|&g| {
            let xg = x.matrix(g);
            let yg = y.matrix(g).adjoint();
            CMat::from_fn(m, m, |a, b| (z[a].adjoint() * xg * &z[b] * &yg).trace())
        })
        .collect();
    let table_tol = y.table_tolerance().max(x.table_tolerance());
    let w = ProjRep::new(j.clone(), ext.delta.clone(), table_tol, mats, *x.tolerances())
        .map_err(|e| Error::FactorizationFailure(format!("W is not a δ-representation: {e}")))?;
    let g = x.group();
    let tol = w.representation_tol();
    for &t in &ext.transversal {
        for &n in nsub.elements() {
            let gn = g.mul(n, t);
            if max_abs_diff(w.matrix(gn), w.matrix(t)) > tol * m as f64 {
                return Err(Error::FactorizationFailure(
                    "W is not constant on N-cosets".into(),
                ));
            }
        }
    }
    if !is_irreducible(&w) {
        return Err(Error::FactorizationFailure("W is reducible".into()));
    }
    let yw = tensor_reps(y, &w)?.with_table(x.table().clone(), table_tol)?;
    let dim = hom_dimension(&yw, x)?;
    if (dim - 1.0).abs() > 1e-6 {
        return Err(Error::FactorizationFailure(format!(
            "Hom(Y ⊗ W, X) has dimension {dim}"
        )));
    }
    Ok(w)
}
