use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{compare_by_character, ProjRep};
use crate::config::{DEFAULT_SEED, MAX_RETRIES};
use crate::error::{Error, Result};
use crate::linalg::{
    cluster, hermitian_eigen, max_abs_diff, null_space, orthonormalize, random_hermitian,
    random_matrix, CMat, CVec,
};

/// Commutant solves by explicit linear algebra up to this degree.
const COMMUTANT_SOLVE_LIMIT: usize = 12;

fn check_compatible(r1: &ProjRep, r2: &ProjRep) -> Result<()> {
    if r1.domain().elements() != r2.domain().elements() {
        return Err(Error::NotSubgroup("representations live on different subgroups".into()));
    }
    let tol = r1
        .tolerances()
        .comparison
        .max(100.0 * (r1.table_tolerance() + r2.table_tolerance()));
    if r1.table_distance(r2) > tol {
        return Err(Error::CocycleMismatch);
    }
    Ok(())
}

/// `|H|⁻¹ Σ tr φ₁(h)·conj(tr φ₂(h))`, the dimension of `Hom_H(φ₁, φ₂)`
/// before rounding.
pub fn hom_dimension(r1: &ProjRep, r2: &ProjRep) -> Result<f64> {
    check_compatible(r1, r2)?;
    Ok(raw_inner(&r1.traces(), &r2.traces()))
}

fn raw_inner(t1: &[Complex64], t2: &[Complex64]) -> f64 {
    let s: Complex64 = t1.iter().zip(t2).map(|(a, b)| a * b.conj()).sum();
    s.re / t1.len() as f64
}

fn rounded(value: f64, tol: f64) -> Result<usize> {
    let k = value.round();
    if (value - k).abs() > tol || k < 0.0 {
        return Err(Error::NumericDegeneracy(format!(
            "intertwiner dimension {value} is not integral"
        )));
    }
    Ok(k as usize)
}

/// Solutions of `X·φ₁(h) = φ₂(h)·X`, orthonormal for the trace form.
#[derive(Debug, Clone)]
pub struct Intertwiners {
    pub dimension: usize,
    pub basis: Vec<CMat>,
}

/// `X ↦ |H|⁻¹ Σ φ₂(h)*·X·φ₁(h)`, the projection onto intertwiners.
fn reynolds(r1: &ProjRep, r2: &ProjRep, x: &CMat) -> CMat {
    let mut acc = CMat::zeros(x.nrows(), x.ncols());
    for (a, b) in r1.matrices().iter().zip(r2.matrices()) {
        acc += b.adjoint() * x * a;
    }
    acc / Complex64::new(r1.matrices().len() as f64, 0.0)
}

/// Dimension from characters; basis from Reynolds projections of random
/// matrices, checked on the generators.
pub fn intertwiner_space(r1: &ProjRep, r2: &ProjRep) -> Result<Intertwiners> {
    let dim = rounded(hom_dimension(r1, r2)?, r1.tolerances().integrality.max(1e-6))?;
    if dim == 0 {
        return Ok(Intertwiners {
            dimension: 0,
            basis: vec![],
        });
    }
    let (d1, d2) = (r1.degree(), r2.degree());
    let tol = r1.representation_tol().max(r2.representation_tol());
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for attempt in 0..MAX_RETRIES {
        let mut cols = Vec::new();
        for _ in 0..dim + attempt {
            let p = reynolds(r1, r2, &random_matrix(d2, d1, &mut rng));
            cols.push(CVec::from_column_slice(p.as_slice()));
        }
        let q = orthonormalize(&CMat::from_columns(&cols), 1e-6);
        if q.ncols() != dim {
            continue;
        }
        let basis: Vec<CMat> = (0..dim)
            .map(|k| CMat::from_column_slice(d2, d1, q.column(k).as_slice()))
            .collect();
        let worst = r1
            .domain()
            .generators()
            .iter()
            .flat_map(|&s| {
                basis
                    .iter()
                    .map(move |x| max_abs_diff(&(x * r1.matrix(s)), &(r2.matrix(s) * x)))
            })
            .fold(0.0f64, f64::max);
        if worst <= tol * (d1.max(d2) as f64) {
            return Ok(Intertwiners {
                dimension: dim,
                basis,
            });
        }
    }
    Err(Error::NumericDegeneracy(format!(
        "intertwiner space of dimension {dim} not recovered"
    )))
}

/// Dimension of `{X : X·φ(s) = φ(s)·X for generators s}`: a null space
/// solve for small degrees, the character norm otherwise.
pub fn commutant_dimension(r: &ProjRep) -> usize {
    let d = r.degree();
    let norm = raw_inner(&r.traces(), &r.traces());
    if d > COMMUTANT_SOLVE_LIMIT {
        return norm.round().max(0.0) as usize;
    }
    let id = CMat::identity(d, d);
    let mut gram = CMat::zeros(d * d, d * d);
    for s in r.domain().generators() {
        let m = r.matrix(s);
        // vec(Xφ − φX) = (φᵀ ⊗ 1 − 1 ⊗ φ)·vec(X)
        let k = m.transpose().kronecker(&id) - id.kronecker(m);
        gram += k.adjoint() * k;
    }
    null_space(&gram, r.tolerances().rank.max(r.representation_tol())).ncols()
}

pub fn is_irreducible(r: &ProjRep) -> bool {
    commutant_dimension(r) == 1
}

/// For irreducible inputs: intertwiner dimension 1.
pub fn isomorphic(r1: &ProjRep, r2: &ProjRep) -> Result<bool> {
    if r1.degree() != r2.degree() {
        return Ok(false);
    }
    Ok(rounded(hom_dimension(r1, r2)?, 1e-6)? == 1)
}

/// One isotypic component.
#[derive(Debug, Clone)]
pub struct Constituent {
    pub rep: ProjRep,
    pub multiplicity: usize,
    /// Orthogonal projection onto the isotypic component.
    pub projector: CMat,
    /// One isometry per copy; each `U` carries its own basis of the copy.
    pub embeddings: Vec<CMat>,
}

/// Isotypic splitting from the eigenspaces of a random Hermitian element
/// of the commutant, each of which is an irreducible submodule.
/// Constituents are ordered by degree, then by character.
pub fn decompose(r: &ProjRep, seed: u64) -> Result<Vec<Constituent>> {
    let d = r.degree();
    let tol = r.tolerances();
    let rep_tol = r.representation_tol();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..MAX_RETRIES {
        let m = random_hermitian(d, &mut rng);
        let c = reynolds(r, r, &m);
        let (values, vectors) = hermitian_eigen(&c);
        let clusters = cluster(&values, tol.cluster_gap.max(1e3 * rep_tol));
        let mut pieces: Vec<(ProjRep, CMat)> = Vec::new();
        for range in clusters {
            let u = vectors.columns(range.start, range.len()).into_owned();
            let mats: Vec<CMat> = r.matrices().iter().map(|p| u.adjoint() * p * &u).collect();
            let sub = ProjRep::unchecked(
                r.domain().clone(),
                r.table().clone(),
                r.table_tolerance(),
                mats,
                *tol,
            );
            let invariant = r.domain().generators().iter().all(|&s| {
                max_abs_diff(&(r.matrix(s) * &u), &(&u * sub.matrix(s))) <= rep_tol * d as f64
            });
            let norm = raw_inner(&sub.traces(), &sub.traces());
            if !invariant || (norm - 1.0).abs() > 1e-6 || sub.residual() > rep_tol * d as f64 {
                continue 'attempt;
            }
            pieces.push((sub, u));
        }
        let mut groups: Vec<Constituent> = Vec::new();
        for (sub, u) in pieces {
            let t = sub.traces();
            let found = groups
                .iter_mut()
                .find(|g| g.rep.degree() == sub.degree() && raw_inner(&g.rep.traces(), &t) > 0.5);
            match found {
                Some(g) => {
                    g.multiplicity += 1;
                    g.projector += &u * u.adjoint();
                    g.embeddings.push(u);
                }
                None => groups.push(Constituent {
                    rep: sub,
                    multiplicity: 1,
                    projector: &u * u.adjoint(),
                    embeddings: vec![u],
                }),
            }
        }
        let total: usize = groups.iter().map(|g| g.multiplicity * g.rep.degree()).sum();
        if total != d {
            continue;
        }
        groups.sort_by(|a, b| compare_by_character(&a.rep, &b.rep, tol.comparison));
        return Ok(groups);
    }
    Err(Error::NumericDegeneracy(format!(
        "no splitting commutant element after {MAX_RETRIES} attempts"
    )))
}
