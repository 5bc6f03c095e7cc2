//! The twisted group algebra `ℂ^αG` and its Wedderburn decomposition.

use std::cmp::Ordering;
use std::sync::Arc;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cohomology::{complex_cocycle_defect, Cocycle};
use crate::config::{Tolerances, MAX_RETRIES};
use crate::error::{Error, Result};
use crate::group::{conjugacy_classes, GroupRef};
use crate::linalg::{cluster, hermitian_eigen, random_complex, CMat, CVec, ONE, ZERO};

/// Basis `{gσ}` with `gσ·hσ = α(g,h)·ghσ`, `α` of unit modulus.
#[derive(Debug, Clone)]
pub struct TwistedAlgebra {
    group: GroupRef,
    alpha: Arc<Vec<Complex64>>,
    /// Accuracy of the table: exact root-of-unity tables versus tables
    /// read numerically off representations.
    table_tol: f64,
    tol: Tolerances,
}

impl TwistedAlgebra {
    pub fn from_cocycle(c: &Cocycle, tol: Tolerances) -> Self {
        TwistedAlgebra {
            group: c.group().clone(),
            alpha: Arc::new(c.to_complex()),
            table_tol: tol.cocycle,
            tol,
        }
    }

    pub fn ordinary(group: &GroupRef, tol: Tolerances) -> Self {
        let n = group.order();
        TwistedAlgebra {
            group: group.clone(),
            alpha: Arc::new(vec![ONE; n * n]),
            table_tol: tol.cocycle,
            tol,
        }
    }

    /// A table known only to `tol.numeric_cocycle`; checked for shape,
    /// unit modulus, normalization and the cocycle identity.
    pub fn from_numeric(group: &GroupRef, alpha: Vec<Complex64>, tol: Tolerances) -> Result<Self> {
        Self::with_table_tolerance(group, alpha, tol.numeric_cocycle, tol)
    }

    /// As [`TwistedAlgebra::from_numeric`] with an explicit table accuracy.
    pub fn with_table_tolerance(
        group: &GroupRef,
        alpha: Vec<Complex64>,
        table_tol: f64,
        tol: Tolerances,
    ) -> Result<Self> {
        let n = group.order();
        if alpha.len() != n * n {
            return Err(Error::InvalidTable("cocycle table has the wrong size".into()));
        }
        let t = table_tol;
        if alpha.iter().any(|a| (a.norm() - 1.0).abs() > t) {
            return Err(Error::NotACocycle);
        }
        if (0..n).any(|x| (alpha[x] - ONE).norm() > t || (alpha[x * n] - ONE).norm() > t) {
            return Err(Error::NotACocycle);
        }
        if complex_cocycle_defect(group, &alpha) > t {
            return Err(Error::NotACocycle);
        }
        Ok(TwistedAlgebra {
            group: group.clone(),
            alpha: Arc::new(alpha),
            table_tol: t,
            tol,
        })
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    pub fn table(&self) -> &Arc<Vec<Complex64>> {
        &self.alpha
    }

    pub fn table_tolerance(&self) -> f64 {
        self.table_tol
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    #[inline]
    pub fn alpha(&self, x: usize, y: usize) -> Complex64 {
        self.alpha[x * self.group.order() + y]
    }

    /// `α̃(x,g) = α(x,g)/α(g, x^g)`, so that `(gσ)⁻¹·xσ·gσ = α̃(x,g)·x^gσ`.
    pub fn alpha_tilde(&self, x: usize, g: usize) -> Complex64 {
        let xg = self.group.conj(x, g);
        self.alpha(x, g) / self.alpha(g, xg)
    }

    pub fn one(&self) -> CVec {
        self.basis(0)
    }

    pub fn basis(&self, g: usize) -> CVec {
        let mut v = CVec::zeros(self.dim());
        v[g] = ONE;
        v
    }

    pub fn multiply(&self, a: &CVec, b: &CVec) -> CVec {
        let n = self.dim();
        let mut out = CVec::zeros(n);
        for x in 0..n {
            if a[x] == ZERO {
                continue;
            }
            for y in 0..n {
                if b[y] == ZERO {
                    continue;
                }
                out[self.group.mul(x, y)] += a[x] * b[y] * self.alpha(x, y);
            }
        }
        out
    }

    /// Conjugate-linear anti-involution with `(gσ)* = conj(α(g,g⁻¹))·g⁻¹σ`.
    pub fn star(&self, a: &CVec) -> CVec {
        let n = self.dim();
        let mut out = CVec::zeros(n);
        for g in 0..n {
            let gi = self.group.inv(g);
            out[gi] += a[g].conj() * self.alpha(g, gi).conj();
        }
        out
    }

    /// Matrix of `v ↦ a·v`.
    pub fn left_matrix(&self, a: &CVec) -> CMat {
        let n = self.dim();
        let mut m = CMat::zeros(n, n);
        for g in 0..n {
            if a[g] == ZERO {
                continue;
            }
            for h in 0..n {
                m[(self.group.mul(g, h), h)] += a[g] * self.alpha(g, h);
            }
        }
        m
    }

    /// Matrix of `v ↦ v·a`.
    pub fn right_matrix(&self, a: &CVec) -> CMat {
        let n = self.dim();
        let mut m = CMat::zeros(n, n);
        for g in 0..n {
            if a[g] == ZERO {
                continue;
            }
            for h in 0..n {
                m[(self.group.mul(h, g), h)] += a[g] * self.alpha(h, g);
            }
        }
        m
    }

    pub fn left_element(&self, g: usize) -> CMat {
        self.left_matrix(&self.basis(g))
    }

    pub fn right_element(&self, g: usize) -> CMat {
        self.right_matrix(&self.basis(g))
    }

    /// `α·δζ` for a unit 1-cochain `ζ` with `ζ(1) = 1`.
    pub fn rebased(&self, zeta: &[Complex64]) -> Result<TwistedAlgebra> {
        let g = &self.group;
        let n = g.order();
        let mut alpha = (*self.alpha).clone();
        for x in 0..n {
            for y in 0..n {
                alpha[x * n + y] *= zeta[x] * zeta[y] / zeta[g.mul(x, y)];
            }
        }
        if zeta.len() != n || (0..n).any(|x| (zeta[x].norm() - 1.0).abs() > self.table_tol) {
            return Err(Error::InvalidTable("1-cochain must have unit values".into()));
        }
        if complex_cocycle_defect(g, &alpha) > 10.0 * self.table_tol {
            return Err(Error::NotACocycle);
        }
        Ok(TwistedAlgebra {
            group: g.clone(),
            alpha: Arc::new(alpha),
            table_tol: self.table_tol,
            tol: self.tol,
        })
    }

    /// Threshold separating zero from unit-size quantities built from the
    /// table (class sums, `α̃` values).
    fn structural_tol(&self) -> f64 {
        (100.0 * self.table_tol).max(self.tol.rank)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RegularClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub centralizer_order: usize,
    pub c_regular: bool,
    #[serde(skip)]
    pub sum: CVec,
}

#[derive(Debug, Clone, Serialize)]
pub struct RegularClassData {
    pub classes: Vec<RegularClass>,
}

impl RegularClassData {
    pub fn regular(&self) -> impl Iterator<Item = &RegularClass> {
        self.classes.iter().filter(|c| c.c_regular)
    }

    pub fn count(&self) -> usize {
        self.regular().count()
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.regular().map(|c| c.representative).collect()
    }

    pub fn flags(&self) -> Vec<bool> {
        self.classes.iter().map(|c| c.c_regular).collect()
    }

    /// `x ↦ ` whether the class of `x` is regular.
    pub fn element_flags(&self, order: usize) -> Vec<bool> {
        let mut f = vec![false; order];
        for c in &self.classes {
            for &x in &c.members {
                f[x] = c.c_regular;
            }
        }
        f
    }
}

/// Twisted class sums `|G_x|⁻¹ Σ_g α̃(x,g)·x^gσ`, flagged nonzero and
/// cross-checked against `α̃(x,·) = 1` on `C_G(x)`.
pub fn c_regular_classes(a: &TwistedAlgebra) -> Result<RegularClassData> {
    let g = a.group();
    let n = g.order();
    let tol = a.structural_tol();
    let mut classes = Vec::new();
    for cl in conjugacy_classes(g) {
        let x = cl.representative;
        let mut sum = CVec::zeros(n);
        let mut centralizer_ok = true;
        for h in 0..n {
            let t = a.alpha_tilde(x, h);
            let y = g.conj(x, h);
            sum[y] += t;
            if y == x && (t - ONE).norm() > tol {
                centralizer_ok = false;
            }
        }
        sum /= Complex64::new(cl.centralizer_order as f64, 0.0);
        let nonzero = sum.iter().any(|z| z.norm() > tol);
        if nonzero != centralizer_ok {
            return Err(Error::CrossCheckMismatch(format!(
                "class of {x}: class sum nonzero = {nonzero}, centralizer criterion = {centralizer_ok}"
            )));
        }
        classes.push(RegularClass {
            representative: x,
            members: cl.members.clone(),
            centralizer_order: cl.centralizer_order,
            c_regular: nonzero,
            sum,
        });
    }
    Ok(RegularClassData { classes })
}

/// Dimension of `{z : z·gσ = gσ·z for all generators}`.
pub fn center_dimension(a: &TwistedAlgebra) -> usize {
    let n = a.dim();
    let mut gram = CMat::zeros(n, n);
    for &s in a.group().generators() {
        let d = a.left_element(s) - a.right_element(s);
        gram += d.adjoint() * d;
    }
    let (values, _) = hermitian_eigen(&gram);
    let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    values
        .iter()
        .filter(|&&v| v < a.structural_tol().max(a.tol.rank) * scale)
        .count()
}

/// Nonzero twisted class sums; their number is checked against the
/// commutant dimension.
pub fn center_basis(a: &TwistedAlgebra, data: &RegularClassData) -> Result<Vec<CVec>> {
    let basis: Vec<CVec> = data.regular().map(|c| c.sum.clone()).collect();
    let dim = center_dimension(a);
    if dim != basis.len() {
        return Err(Error::CrossCheckMismatch(format!(
            "{} regular classes but center of dimension {dim}",
            basis.len()
        )));
    }
    Ok(basis)
}

#[derive(Debug, Clone)]
pub struct WedderburnBlock {
    pub degree: usize,
    /// Central primitive idempotent over the basis `{gσ}`.
    pub idempotent: CVec,
    /// Orthonormal basis of `ℂ^αG·e` inside the regular module.
    pub basis: CMat,
}

#[derive(Debug, Clone)]
pub struct WedderburnData {
    pub blocks: Vec<WedderburnBlock>,
    pub residual: f64,
    pub seed: u64,
    pub attempts: usize,
}

impl WedderburnData {
    /// Ascending.
    pub fn degrees(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.degree).collect()
    }
}

/// Central primitive idempotents as spectral projectors of a random
/// Hermitian central element.
pub fn wedderburn(a: &TwistedAlgebra, seed: u64) -> Result<WedderburnData> {
    let data = c_regular_classes(a)?;
    let centre = center_basis(a, &data)?;
    wedderburn_with(a, &centre, seed)
}

pub fn wedderburn_with(a: &TwistedAlgebra, centre: &[CVec], seed: u64) -> Result<WedderburnData> {
    let n = a.dim();
    let k = centre.len();
    let tol = a.tolerances();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=MAX_RETRIES {
        let mut z = CVec::zeros(n);
        for s in centre {
            z += s * random_complex(&mut rng);
        }
        let h = &z + a.star(&z);
        let lh = a.left_matrix(&h);
        let (values, vectors) = hermitian_eigen(&lh);
        let clusters = cluster(&values, tol.cluster_gap);
        if clusters.len() != k {
            continue;
        }
        let mut blocks = Vec::with_capacity(k);
        for r in clusters {
            let size = r.len();
            let v = vectors.columns(r.start, size).into_owned();
            // e = P·1, where P = V V* is the left action of e
            let e: CVec = &v * v.row(0).adjoint();
            let degree_f = (size as f64).sqrt();
            let degree = degree_f.round() as usize;
            if (degree_f - degree as f64).abs() > tol.integrality {
                return Err(Error::DegreeNotIntegral { value: degree_f });
            }
            let trace_degree = (n as f64 * e[0].re).sqrt();
            if (trace_degree - degree as f64).abs() > tol.integrality {
                return Err(Error::DegreeNotIntegral {
                    value: trace_degree,
                });
            }
            blocks.push(WedderburnBlock {
                degree,
                idempotent: e,
                basis: v,
            });
        }
        let total: usize = blocks.iter().map(|b| b.degree * b.degree).sum();
        if total != n {
            return Err(Error::DegreeNotIntegral { value: total as f64 });
        }
        blocks.sort_by(|x, y| compare_blocks(x, y, tol.integrality));
        let residual = idempotent_residual(a, &blocks);
        if residual > tol.rank.max(100.0 * a.table_tol) {
            return Err(Error::NumericDegeneracy(format!(
                "idempotent residual {residual:.3e}"
            )));
        }
        return Ok(WedderburnData {
            blocks,
            residual,
            seed,
            attempts: attempt,
        });
    }
    Err(Error::NumericDegeneracy(format!(
        "no separating central element after {MAX_RETRIES} attempts"
    )))
}

fn compare_blocks(x: &WedderburnBlock, y: &WedderburnBlock, tol: f64) -> Ordering {
    x.degree.cmp(&y.degree).then_with(|| {
        for (p, q) in x.idempotent.iter().zip(y.idempotent.iter()) {
            if (p.re - q.re).abs() > tol {
                return p.re.total_cmp(&q.re);
            }
            if (p.im - q.im).abs() > tol {
                return p.im.total_cmp(&q.im);
            }
        }
        Ordering::Equal
    })
}

/// `max(‖eᵢ² − eᵢ‖, ‖eᵢeⱼ‖, ‖Σeᵢ − 1‖)`, pairwise products only for
/// small block counts.
fn idempotent_residual(a: &TwistedAlgebra, blocks: &[WedderburnBlock]) -> f64 {
    let n = a.dim();
    let inf = |v: &CVec| v.iter().fold(0.0f64, |m, z| m.max(z.norm()));
    let mut worst = 0.0f64;
    let mut sum = CVec::zeros(n);
    for b in blocks {
        let sq = a.multiply(&b.idempotent, &b.idempotent);
        worst = worst.max(inf(&(sq - &b.idempotent)));
        sum += &b.idempotent;
    }
    worst = worst.max(inf(&(sum - a.one())));
    if blocks.len() <= 32 {
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                let p = a.multiply(&blocks[i].idempotent, &blocks[j].idempotent);
                worst = worst.max(inf(&p));
            }
        }
    }
    worst
}

/// Whether a unit-modulus cocycle table is a coboundary: exactly when the
/// twisted algebra has a one-dimensional module.
pub fn is_trivial_coclass_numeric(
    group: &GroupRef,
    alpha: Vec<Complex64>,
    tol: Tolerances,
    seed: u64,
) -> Result<bool> {
    let a = TwistedAlgebra::from_numeric(group, alpha, tol)?;
    let w = wedderburn(&a, seed)?;
    Ok(w.blocks.iter().any(|b| b.degree == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{cocycle_from_extension, schur_multiplier};
    use crate::group::{build_group, Permutation};

    fn perm_group(n: usize, gens: &[&[&[usize]]]) -> GroupRef {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|c| Permutation::from_cycles(n, c).unwrap())
            .collect();
        Arc::new(build_group(n, &gens).unwrap())
    }

    fn klein_twisted() -> TwistedAlgebra {
        let q8 = perm_group(
            8,
            &[&[&[1, 2, 3, 4], &[5, 6, 7, 8]], &[&[1, 5, 3, 7], &[2, 8, 4, 6]]],
        );
        let centre: Vec<usize> = (0..8)
            .filter(|&z| (0..8).all(|y| q8.mul(z, y) == q8.mul(y, z)))
            .collect();
        let z = crate::group::Subgroup::from_elements(&q8, &centre).unwrap();
        let (_, c) = cocycle_from_extension(&q8, &z).unwrap();
        TwistedAlgebra::from_cocycle(&c, Tolerances::default())
    }

    #[test]
    fn ordinary_s3() {
        let s3 = perm_group(3, &[&[&[1, 2]], &[&[1, 2, 3]]]);
        let a = TwistedAlgebra::ordinary(&s3, Tolerances::default());
        let data = c_regular_classes(&a).unwrap();
        assert_eq!(data.count(), 3);
        assert_eq!(center_basis(&a, &data).unwrap().len(), 3);
        let w = wedderburn(&a, 1).unwrap();
        assert_eq!(w.degrees(), vec![1, 1, 2]);
        assert!(w.residual < 1e-8);
    }

    #[test]
    fn twisted_klein() {
        let a = klein_twisted();
        for x in 1..4 {
            for g in 1..4 {
                if g != x {
                    assert!((a.alpha_tilde(x, g) + ONE).norm() < 1e-12);
                }
            }
            assert!((a.alpha_tilde(x, 0) - ONE).norm() < 1e-12);
        }
        let data = c_regular_classes(&a).unwrap();
        assert_eq!(data.representatives(), vec![0]);
        let w = wedderburn(&a, 5).unwrap();
        assert_eq!(w.degrees(), vec![2]);
        assert!(!is_trivial_coclass_numeric(
            a.group(),
            (**a.table()).clone(),
            Tolerances::default(),
            1
        )
        .unwrap());
    }

    #[test]
    fn star_is_an_anti_involution() {
        let a = klein_twisted();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let x = CVec::from_fn(4, |_, _| random_complex(&mut rng));
        let y = CVec::from_fn(4, |_, _| random_complex(&mut rng));
        let lhs = a.star(&a.multiply(&x, &y));
        let rhs = a.multiply(&a.star(&y), &a.star(&x));
        assert!((lhs - rhs).norm() < 1e-12);
        assert!((a.star(&a.star(&x)) - &x).norm() < 1e-12);
        let lx = a.left_matrix(&x);
        assert!((lx.adjoint() - a.left_matrix(&a.star(&x))).norm() < 1e-12);
    }

    #[test]
    fn coboundary_tables_are_trivial() {
        let g = perm_group(4, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]]);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut zeta: Vec<Complex64> = (0..4)
            .map(|_| Complex64::from_polar(1.0, rand::Rng::random_range(&mut rng, 0.0..6.0)))
            .collect();
        zeta[0] = ONE;
        let t = crate::cohomology::complex_coboundary(&g, &zeta);
        assert!(is_trivial_coclass_numeric(&g, t, Tolerances::default(), 3).unwrap());
        assert!(
            is_trivial_coclass_numeric(&g, vec![ONE; 16], Tolerances::default(), 3).unwrap()
        );
    }

    #[test]
    fn d4_twisted_degrees() {
        let d4 = perm_group(4, &[&[&[1, 2, 3, 4]], &[&[1, 3]]]);
        let m = schur_multiplier(&d4).unwrap();
        let c = m.coclass_by_index(1).unwrap();
        let a = TwistedAlgebra::from_cocycle(c.representative(), Tolerances::default());
        let w = wedderburn(&a, 11).unwrap();
        assert_eq!(w.degrees(), vec![2, 2]);
        assert_eq!(c_regular_classes(&a).unwrap().count(), 2);
    }
}
