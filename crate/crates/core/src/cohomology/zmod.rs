//! Diagonal normal forms of matrices over `ℤ/m`.
//!
//! `D = P·A·Q` with `P`, `Q` invertible over `ℤ/m` and `D` diagonal. The
//! diagonal is not reduced to a divisibility chain; callers only need the
//! cyclic factors `ℤ/gcd(dₖ, m)`.

pub type Mat = Vec<Vec<u64>>;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// `(g, s, t)` with `s·a + t·b = g = gcd(a, b)`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = ext_gcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}

/// Inverse of `a` modulo `m`, if it is a unit.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (g, s, _) = ext_gcd((a % m) as i64, m as i64);
    (g == 1).then(|| s.rem_euclid(m as i64) as u64)
}

/// Solve `x ≡ rᵢ (mod mᵢ)` for pairwise coprime moduli.
pub fn crt(residues: &[(u64, u64)]) -> (u64, u64) {
    let mut x = 0u64;
    let mut modulus = 1u64;
    for &(r, m) in residues {
        // x + modulus·k ≡ r (mod m)
        let inv = inv_mod(modulus % m, m).expect("coprime moduli");
        let diff = (r % m + m - x % m) % m;
        let k = diff * inv % m;
        x += modulus * k;
        modulus *= m;
        x %= modulus;
    }
    (x, modulus)
}

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| {
            let mut r = vec![0; n];
            r[i] = 1;
            r
        })
        .collect()
}

#[inline]
fn neg(a: u64, m: u64) -> u64 {
    (m - a % m) % m
}

#[inline]
fn signed(a: i64, m: u64) -> u64 {
    a.rem_euclid(m as i64) as u64
}

#[derive(Debug, Clone)]
pub struct Diagonalized {
    pub modulus: u64,
    pub rows: usize,
    pub cols: usize,
    /// `dₖ` for `k < cols`; zero past the rank.
    pub diag: Vec<u64>,
    pub p: Option<Mat>,
    pub p_inv: Option<Mat>,
    pub q: Mat,
    pub q_inv: Mat,
}

impl Diagonalized {
    /// `ℤ/gₖ` with `gₖ = gcd(dₖ, m)`; the kernel is `⊕ ℤ/gₖ`.
    pub fn kernel_orders(&self) -> Vec<u64> {
        self.diag.iter().map(|&d| gcd(d, self.modulus)).collect()
    }

    /// `ℤ/gcd(dₖ, m)` for `k < rows`; the cokernel is their sum.
    pub fn cokernel_orders(&self) -> Vec<u64> {
        (0..self.rows)
            .map(|k| {
                let d = if k < self.cols { self.diag[k] } else { 0 };
                gcd(d, self.modulus)
            })
            .collect()
    }

    /// Generators of the kernel, each of additive order `gₖ > 1`.
    pub fn kernel_generators(&self) -> Vec<(Vec<u64>, u64)> {
        let m = self.modulus;
        self.kernel_orders()
            .into_iter()
            .enumerate()
            .filter(|&(_, g)| g > 1)
            .map(|(k, g)| {
                let scale = m / g;
                let v = (0..self.cols).map(|i| self.q[i][k] * scale % m).collect();
                (v, g)
            })
            .collect()
    }

    /// `Q⁻¹ x`.
    pub fn to_diagonal_coords(&self, x: &[u64]) -> Vec<u64> {
        mat_vec(&self.q_inv, x, self.modulus)
    }
}

pub fn mat_vec(a: &Mat, x: &[u64], m: u64) -> Vec<u64> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(0u64, |acc, (&r, &v)| (acc + r * v) % m)
        })
        .collect()
}

/// Diagonalize `a` (rows of length `cols`) over `ℤ/m`. Row transforms are
/// tracked only on request.
pub fn diagonalize(a: &[Vec<u64>], cols: usize, m: u64, track_rows: bool) -> Diagonalized {
    assert!(m >= 1);
    let mut a: Mat = a
        .iter()
        .filter(|r| r.iter().any(|&v| v % m != 0) || track_rows)
        .map(|r| r.iter().map(|&v| v % m).collect())
        .collect();
    let rows = a.len();
    let mut p = track_rows.then(|| identity(rows));
    let mut p_inv = track_rows.then(|| identity(rows));
    let mut q = identity(cols);
    let mut q_inv = identity(cols);
    let mut diag = vec![0u64; cols];

    let steps = rows.min(cols);
    for k in 0..steps {
        // pivot with minimal gcd with m
        let mut best: Option<(u64, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, &v) in row.iter().enumerate().skip(k) {
                if v != 0 {
                    let g = gcd(v, m);
                    if best.is_none_or(|(bg, _, _)| g < bg) {
                        best = Some((g, i, j));
                        if g == 1 {
                            break;
                        }
                    }
                }
            }
            if matches!(best, Some((1, _, _))) {
                break;
            }
        }
        let Some((_, pi, pj)) = best else {
            break;
        };
        if pi != k {
            a.swap(pi, k);
            if let (Some(p), Some(pinv)) = (p.as_mut(), p_inv.as_mut()) {
                p.swap(pi, k);
                for row in pinv.iter_mut() {
                    row.swap(pi, k);
                }
            }
        }
        if pj != k {
            for row in a.iter_mut() {
                row.swap(pj, k);
            }
            for row in q.iter_mut() {
                row.swap(pj, k);
            }
            q_inv.swap(pj, k);
        }

        loop {
            let mut dirty = false;
            for i in k + 1..rows {
                let b = a[i][k];
                if b == 0 {
                    continue;
                }
                dirty = true;
                let av = a[k][k];
                if b.is_multiple_of(av) {
                    let f = b / av;
                    row_axpy(&mut a, i, k, neg(f, m), m);
                    if let (Some(p), Some(pinv)) = (p.as_mut(), p_inv.as_mut()) {
                        row_axpy(p, i, k, neg(f, m), m);
                        // P⁻¹ ← P⁻¹·E⁻¹: col_k += f·col_i
                        col_axpy(pinv, k, i, f % m, m);
                    }
                } else {
                    let (g, s, t) = ext_gcd(av as i64, b as i64);
                    let (ag, bg) = (av as i64 / g, b as i64 / g);
                    let mm = [
                        [signed(s, m), signed(t, m)],
                        [signed(-bg, m), signed(ag, m)],
                    ];
                    row_mix(&mut a, k, i, mm, m);
                    if let (Some(p), Some(pinv)) = (p.as_mut(), p_inv.as_mut()) {
                        row_mix(p, k, i, mm, m);
                        let inv = [
                            [signed(ag, m), signed(bg, m)],
                            [signed(-t, m), signed(s, m)],
                        ];
                        col_mix(pinv, k, i, inv, m);
                    }
                }
            }
            for j in k + 1..cols {
                let b = a[k][j];
                if b == 0 {
                    continue;
                }
                dirty = true;
                let av = a[k][k];
                if b.is_multiple_of(av) {
                    let f = b / av;
                    col_axpy(&mut a, j, k, neg(f, m), m);
                    col_axpy(&mut q, j, k, neg(f, m), m);
                    // Q⁻¹ ← E⁻¹·Q⁻¹: row_k += f·row_j
                    row_axpy(&mut q_inv, k, j, f % m, m);
                } else {
                    let (g, s, t) = ext_gcd(av as i64, b as i64);
                    let (ag, bg) = (av as i64 / g, b as i64 / g);
                    // new col_k = s·col_k + t·col_j, new col_j = -b/g·col_k + a/g·col_j
                    let nn = [
                        [signed(s, m), signed(t, m)],
                        [signed(-bg, m), signed(ag, m)],
                    ];
                    col_mix(&mut a, k, j, nn, m);
                    col_mix(&mut q, k, j, nn, m);
                    let inv = [
                        [signed(ag, m), signed(bg, m)],
                        [signed(-t, m), signed(s, m)],
                    ];
                    row_mix(&mut q_inv, k, j, inv, m);
                }
            }
            if !dirty {
                break;
            }
            let col_clean = (k + 1..rows).all(|i| a[i][k] == 0);
            let row_clean = (k + 1..cols).all(|j| a[k][j] == 0);
            if col_clean && row_clean {
                break;
            }
        }
        diag[k] = a[k][k];
    }

    Diagonalized {
        modulus: m,
        rows,
        cols,
        diag,
        p,
        p_inv,
        q,
        q_inv,
    }
}

/// `row_dst += f·row_src`.
fn row_axpy(a: &mut Mat, dst: usize, src: usize, f: u64, m: u64) {
    if f == 0 {
        return;
    }
    let (d, s) = two_rows(a, dst, src);
    for (x, &y) in d.iter_mut().zip(s.iter()) {
        *x = (*x + f * y) % m;
    }
}

/// `col_dst += f·col_src`.
fn col_axpy(a: &mut Mat, dst: usize, src: usize, f: u64, m: u64) {
    if f == 0 {
        return;
    }
    for row in a.iter_mut() {
        row[dst] = (row[dst] + f * row[src]) % m;
    }
}

/// `(row_x, row_y) ← (c₀₀·row_x + c₀₁·row_y, c₁₀·row_x + c₁₁·row_y)`.
fn row_mix(a: &mut Mat, x: usize, y: usize, c: [[u64; 2]; 2], m: u64) {
    let (rx, ry) = two_rows(a, x, y);
    for (u, v) in rx.iter_mut().zip(ry.iter_mut()) {
        let (ou, ov) = (*u, *v);
        *u = (c[0][0] * ou + c[0][1] * ov) % m;
        *v = (c[1][0] * ou + c[1][1] * ov) % m;
    }
}

/// Same as [`row_mix`] on columns.
fn col_mix(a: &mut Mat, x: usize, y: usize, c: [[u64; 2]; 2], m: u64) {
    for row in a.iter_mut() {
        let (ou, ov) = (row[x], row[y]);
        row[x] = (c[0][0] * ou + c[0][1] * ov) % m;
        row[y] = (c[1][0] * ou + c[1][1] * ov) % m;
    }
}

fn two_rows(a: &mut Mat, x: usize, y: usize) -> (&mut Vec<u64>, &mut Vec<u64>) {
    assert_ne!(x, y);
    if x < y {
        let (lo, hi) = a.split_at_mut(y);
        (&mut lo[x], &mut hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(x);
        (&mut hi[0], &mut lo[y])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat_mul(a: &Mat, b: &Mat, m: u64) -> Mat {
        let n = b[0].len();
        a.iter()
            .map(|row| {
                (0..n)
                    .map(|j| {
                        row.iter()
                            .enumerate()
                            .fold(0, |acc, (k, &v)| (acc + v * b[k][j]) % m)
                    })
                    .collect()
            })
            .collect()
    }

    fn check(a: &Mat, cols: usize, m: u64) {
        let d = diagonalize(a, cols, m, true);
        let p = d.p.as_ref().unwrap();
        let pinv = d.p_inv.as_ref().unwrap();
        assert_eq!(mat_mul(p, pinv, m), identity(d.rows));
        assert_eq!(mat_mul(&d.q, &d.q_inv, m), identity(cols));
        let reduced: Mat = a.iter().map(|r| r.iter().map(|v| v % m).collect()).collect();
        let prod = mat_mul(&mat_mul(p, &reduced, m), &d.q, m);
        for (i, row) in prod.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let expected = if i == j { d.diag[j] } else { 0 };
                assert_eq!(v, expected, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn crt_and_inverses() {
        assert_eq!(inv_mod(3, 8), Some(3));
        assert_eq!(inv_mod(2, 8), None);
        assert_eq!(crt(&[(1, 4), (2, 3)]), (5, 12));
    }

    #[test]
    fn small_examples() {
        check(&vec![vec![2, 4], vec![6, 3]], 2, 12);
        check(&vec![vec![0, 0], vec![0, 0]], 2, 5);
        check(&vec![vec![4, 6, 9]], 3, 36);
    }

    #[test]
    fn kernel_of_multiplication_by_two() {
        // 2x = 0 over Z/8 has kernel Z/2
        let d = diagonalize(&[vec![2]], 1, 8, false);
        assert_eq!(d.kernel_orders(), vec![2]);
        let gens = d.kernel_generators();
        assert_eq!(gens, vec![(vec![4], 2)]);
    }

    proptest! {
        #[test]
        fn transforms_are_consistent(
            m in 2u64..40,
            rows in 1usize..6,
            cols in 1usize..6,
            seed in proptest::collection::vec(0u64..1000, 36),
        ) {
            let a: Mat = (0..rows)
                .map(|i| (0..cols).map(|j| seed[i * 6 + j] % m).collect())
                .collect();
            check(&a, cols, m);
        }

        #[test]
        fn kernel_generators_are_in_kernel(
            m in 2u64..8,
            seed in proptest::collection::vec(0u64..1000, 20),
        ) {
            let a: Mat = (0..4).map(|i| (0..5).map(|j| seed[i * 5 + j] % m).collect()).collect();
            let d = diagonalize(&a, 5, m, false);
            let mut size = 1u64;
            for (v, g) in d.kernel_generators() {
                size *= g;
                prop_assert!(mat_vec(&a, &v, m).iter().all(|&x| x == 0));
            }
            // brute-force kernel size
            let mut count = 0u64;
            let total = m.pow(5);
            for code in 0..total {
                let mut x = [0u64; 5];
                let mut c = code;
                for xi in x.iter_mut() {
                    *xi = c % m;
                    c /= m;
                }
                if mat_vec(&a, &x, m).iter().all(|&y| y == 0) {
                    count += 1;
                }
            }
            prop_assert_eq!(count, size);
        }
    }
}
