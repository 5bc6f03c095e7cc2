use std::sync::Arc;

use num_complex::Complex64;

use super::ProjRep;
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::linalg::CMat;

/// `ind_H^K ψ` over a left transversal `T` of `H` in `K` (identity first):
/// block `(t′, t)` of `Φ(g)` is `α(g,t)·α(t′,h)⁻¹·ψ(h)` where `gt = t′h`.
/// Uses the table of `r`, which must be valid on `K`.
pub fn induce_rep(r: &ProjRep, target: &Subgroup) -> Result<ProjRep> {
    induce_rep_over(r, target, r.table(), r.table_tolerance())
}

/// As [`induce_rep`] with the scalars taken from `table`, which must
/// agree with the table of `r` on its domain.
pub fn induce_rep_over(
    r: &ProjRep,
    target: &Subgroup,
    table: &Arc<Vec<Complex64>>,
    table_tol: f64,
) -> Result<ProjRep> {
    let h = r.domain();
    if !h.is_subgroup_of(target) {
        return Err(Error::NotSubgroup("inducing subgroup is not contained in the target".into()));
    }
    let r = r.with_table(table.clone(), table_tol)?;
    let g = target.parent();
    let n = g.order();
    let alpha = |x: usize, y: usize| table[x * n + y];
    let transversal = h.left_transversal(target);
    let k = transversal.len();
    let d = r.degree();
    // coset[y] = (j, h) with y = t_j·h
    let mut coset = vec![(usize::MAX, 0usize); n];
    for (j, &t) in transversal.iter().enumerate() {
        for &x in h.elements() {
            coset[g.mul(t, x)] = (j, x);
        }
    }
    let mats = target
        .elements()
        .iter()
        .map(|&x| {
            let mut m = CMat::zeros(k * d, k * d);
            for (j, &t) in transversal.iter().enumerate() {
                let (jp, hh) = coset[g.mul(x, t)];
                let tp = transversal[jp];
                let s = alpha(x, t) * alpha(tp, hh).conj();
                m.view_mut((jp * d, j * d), (d, d))
                    .copy_from(&(r.matrix(hh) * s));
            }
            m
        })
        .collect();
    Ok(ProjRep::unchecked(
        target.clone(),
        table.clone(),
        table_tol,
        mats,
        *r.tolerances(),
    ))
}
