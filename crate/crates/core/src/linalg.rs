//! Dense complex linear algebra helpers on top of `nalgebra`.

use std::ops::Range;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use rand::Rng;

pub type CMat = DMatrix<Complex64>;
pub type CVec = DVector<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
pub fn hermitian_eigen(m: &CMat) -> (Vec<f64>, CMat) {
    let h = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let n = h.nrows();
    if n == 0 {
        return (vec![], CMat::zeros(0, 0));
    }
    let eig = SymmetricEigen::new(h);
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = idx.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = CMat::zeros(n, n);
    for (k, &i) in idx.iter().enumerate() {
        vectors.set_column(k, &eig.eigenvectors.column(i));
    }
    (values, vectors)
}

/// Split sorted values where consecutive gaps exceed `rel_gap·max(1, max|λ|)`.
pub fn cluster(values: &[f64], rel_gap: f64) -> Vec<Range<usize>> {
    if values.is_empty() {
        return vec![];
    }
    let scale = values.iter().fold(1.0f64, |a, v| a.max(v.abs()));
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..values.len() {
        if values[i] - values[i - 1] > rel_gap * scale {
            out.push(start..i);
            start = i;
        }
    }
    out.push(start..values.len());
    out
}

/// Smallest gap between clusters relative to the scale; `inf` for one
/// cluster.
pub fn separation(values: &[f64], clusters: &[Range<usize>]) -> f64 {
    let scale = values.iter().fold(1.0f64, |a, v| a.max(v.abs()));
    clusters
        .windows(2)
        .map(|w| (values[w[1].start] - values[w[0].end - 1]) / scale)
        .fold(f64::INFINITY, f64::min)
}

/// Orthonormal basis of the null space of `a`, from the eigenvectors of
/// `a*a` with eigenvalue below `tol·max(1, ‖a*a‖)`.
pub fn null_space(a: &CMat, tol: f64) -> CMat {
    let g = a.adjoint() * a;
    let (values, vectors) = hermitian_eigen(&g);
    let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let k = values.iter().take_while(|&&v| v < tol * scale).count();
    vectors.columns(0, k).into_owned()
}

/// Columns of `a` made orthonormal; near-dependent columns are dropped.
pub fn orthonormalize(a: &CMat, tol: f64) -> CMat {
    let mut basis: Vec<CVec> = Vec::new();
    for j in 0..a.ncols() {
        let mut v: CVec = a.column(j).into_owned();
        let norm0 = v.norm();
        if norm0 < tol {
            continue;
        }
        for _ in 0..2 {
            for b in &basis {
                let c = b.dotc(&v);
                v -= b * c;
            }
        }
        let nv = v.norm();
        if nv > tol * norm0.max(1.0) {
            basis.push(v / Complex64::new(nv, 0.0));
        }
    }
    if basis.is_empty() {
        return CMat::zeros(a.nrows(), 0);
    }
    CMat::from_columns(&basis)
}

pub fn random_complex<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn random_matrix<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> CMat {
    CMat::from_fn(rows, cols, |_, _| random_complex(rng))
}

pub fn random_hermitian<R: Rng>(n: usize, rng: &mut R) -> CMat {
    let a = random_matrix(n, n, rng);
    &a + a.adjoint()
}

/// Entrywise maximum modulus.
pub fn max_abs(a: &CMat) -> f64 {
    a.iter().fold(0.0, |m, z| m.max(z.norm()))
}

pub fn max_abs_diff(a: &CMat, b: &CMat) -> f64 {
    if a.shape() != b.shape() {
        return f64::INFINITY;
    }
    a.iter()
        .zip(b.iter())
        .fold(0.0, |m, (x, y)| m.max((x - y).norm()))
}

pub fn kron(a: &CMat, b: &CMat) -> CMat {
    a.kronecker(b)
}

/// `‖a*a − 1‖∞`.
pub fn unitarity_defect(a: &CMat) -> f64 {
    let n = a.ncols();
    max_abs_diff(&(a.adjoint() * a), &CMat::identity(n, n))
}

/// Block diagonal sum.
pub fn direct_sum(a: &CMat, b: &CMat) -> CMat {
    let (ra, ca) = a.shape();
    let (rb, cb) = b.shape();
    let mut out = CMat::zeros(ra + rb, ca + cb);
    out.view_mut((0, 0), (ra, ca)).copy_from(a);
    out.view_mut((ra, ca), (rb, cb)).copy_from(b);
    out
}

/// Unit scalar `u` with `a ≈ u·b`, if any.
pub fn proportional_phase(a: &CMat, b: &CMat, tol: f64) -> Option<Complex64> {
    let mut best = (0.0, ZERO);
    for (x, y) in a.iter().zip(b.iter()) {
        if y.norm() > best.0 {
            best = (y.norm(), x / y);
        }
    }
    if best.0 < tol {
        return None;
    }
    let u = best.1;
    (max_abs_diff(a, &(b * u)) < tol).then_some(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn eigen_is_sorted_and_reconstructs() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let h = random_hermitian(6, &mut rng);
        let (vals, vecs) = hermitian_eigen(&h);
        assert!(vals.windows(2).all(|w| w[0] <= w[1]));
        let d = CMat::from_diagonal(&DVector::from_iterator(
            6,
            vals.iter().map(|&v| Complex64::new(v, 0.0)),
        ));
        assert!(max_abs_diff(&(&vecs * d * vecs.adjoint()), &h) < 1e-10);
        assert!(unitarity_defect(&vecs) < 1e-10);
    }

    #[test]
    fn clusters_split_on_gaps() {
        let c = cluster(&[0.0, 1e-12, 1.0, 1.0 + 1e-13, 3.0], 1e-8);
        assert_eq!(c, vec![0..2, 2..4, 4..5]);
        assert!(cluster(&[], 1e-8).is_empty());
    }

    #[test]
    fn null_space_of_rank_one() {
        let v = CVec::from_vec(vec![ONE, Complex64::new(0.0, 1.0), ZERO]);
        let a = &v * v.adjoint();
        let ns = null_space(&a, 1e-10);
        assert_eq!(ns.ncols(), 2);
        assert!(max_abs(&(&a * &ns)) < 1e-10);
    }

    #[test]
    fn orthonormalize_drops_dependent_columns() {
        let a = CMat::from_column_slice(3, 3, &[ONE, ONE, ZERO, ONE, ONE, ZERO, ZERO, ONE, ONE]);
        let q = orthonormalize(&a, 1e-10);
        assert_eq!(q.ncols(), 2);
        assert!(unitarity_defect(&q) < 1e-12);
    }

    #[test]
    fn phase_detection() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let b = random_matrix(3, 3, &mut rng);
        let u = Complex64::from_polar(1.0, 0.7);
        let a = &b * u;
        let found = proportional_phase(&a, &b, 1e-9).unwrap();
        assert!((found - u).norm() < 1e-12);
        assert!(proportional_phase(&random_matrix(3, 3, &mut rng), &b, 1e-9).is_none());
    }
}
