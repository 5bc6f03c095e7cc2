use std::sync::Arc;

use num_complex::Complex64;

use super::{decompose, ProjRep};
use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::linalg::CMat;
use crate::twisted::{wedderburn, TwistedAlgebra, WedderburnData};

/// One irreducible per Wedderburn block, split off the left regular
/// action on the block.
pub fn split_regular(a: &TwistedAlgebra, w: &WedderburnData, seed: u64) -> Result<Vec<ProjRep>> {
    let g = a.group();
    let n = g.order();
    let whole = Subgroup::whole(g);
    let mut out = Vec::with_capacity(w.blocks.len());
    for (i, block) in w.blocks.iter().enumerate() {
        let b = &block.basis;
        let k = b.ncols();
        let mats: Vec<CMat> = (0..n)
            .map(|x| {
                // rows of L_x·B: (L_x B)[xh] = α(x,h)·B[h]
                let mut lb = CMat::zeros(n, k);
                for h in 0..n {
                    let row = b.row(h) * a.alpha(x, h);
                    lb.set_row(g.mul(x, h), &row);
                }
                b.adjoint() * lb
            })
            .collect();
        let module = ProjRep::unchecked(
            whole.clone(),
            a.table().clone(),
            a.table_tolerance(),
            mats,
            *a.tolerances(),
        );
        let parts = decompose(&module, seed.wrapping_add(i as u64))?;
        if parts.len() != 1
            || parts[0].rep.degree() != block.degree
            || parts[0].multiplicity != block.degree
        {
            return Err(Error::NumericDegeneracy(format!(
                "block {i} of degree {} did not split into equal irreducibles",
                block.degree
            )));
        }
        let rep = parts.into_iter().next().unwrap().rep;
        out.push(ProjRep::new(
            rep.domain().clone(),
            rep.table().clone(),
            rep.table_tolerance(),
            rep.matrices().to_vec(),
            *a.tolerances(),
        )?);
    }
    Ok(out)
}

/// All irreducible representations of the algebra, one per block, in
/// block order.
pub fn irreducible_reps(a: &TwistedAlgebra, seed: u64) -> Result<Vec<ProjRep>> {
    let w = wedderburn(a, seed)?;
    split_regular(a, &w, seed)
}

/// Irreducibles of `h` for an ambient table, through the standalone copy
/// of `h`.
pub fn irreducibles_on(
    h: &Subgroup,
    table: &Arc<Vec<Complex64>>,
    table_tol: f64,
    tol: Tolerances,
    seed: u64,
) -> Result<Vec<ProjRep>> {
    let a = local_algebra(h, table, table_tol, tol)?;
    let reps = irreducible_reps(&a, seed)?;
    Ok(reps
        .into_iter()
        .map(|r| {
            ProjRep::unchecked(
                h.clone(),
                table.clone(),
                table_tol,
                r.matrices().to_vec(),
                tol,
            )
        })
        .collect())
}

/// Twisted algebra of the standalone copy of `h`.
pub fn local_algebra(
    h: &Subgroup,
    table: &[Complex64],
    table_tol: f64,
    tol: Tolerances,
) -> Result<TwistedAlgebra> {
    let n = h.parent().order();
    let (local, _) = h.to_group(format!("{}<{}>", h.parent().name(), h.order()));
    let e = h.elements();
    let k = e.len();
    let mut t = Vec::with_capacity(k * k);
    for &x in e {
        for &y in e {
            t.push(table[x * n + y]);
        }
    }
    TwistedAlgebra::with_table_tolerance(&Arc::new(local), t, table_tol.max(tol.cocycle), tol)
}

/// Whether the table restricted to `h` is a coboundary: the twisted
/// algebra of `h` then has a degree-one block.
pub fn trivial_on(
    h: &Subgroup,
    table: &[Complex64],
    table_tol: f64,
    tol: Tolerances,
    seed: u64,
) -> Result<bool> {
    if h.is_trivial() {
        return Ok(true);
    }
    let a = local_algebra(h, table, table_tol, tol)?;
    Ok(wedderburn(&a, seed)?.blocks.iter().any(|b| b.degree == 1))
}
