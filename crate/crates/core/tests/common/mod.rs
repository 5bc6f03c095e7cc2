//! Induction laws checked by character and constituent equality, shared
//! by the integration and acceptance targets.

#![allow(dead_code)]

use std::sync::Arc;

use num_complex::Complex64;
use projrep::catalog::find;
use projrep::config::Tolerances;
use projrep::group::{all_subgroups, GroupRef, Subgroup};
use projrep::linalg::{direct_sum, CMat};
use projrep::projrep::{
    hom_dimension, induce_rep, irreducibles_on, restrict_rep, tensor_reps, ProjRep,
};

pub const TOL: f64 = 1e-6;
pub const SEED: u64 = 11;

pub struct Setup {
    pub group: GroupRef,
    pub tables: Vec<Arc<Vec<Complex64>>>,
    pub subgroups: Vec<Subgroup>,
}

pub fn setup(name: &str) -> Setup {
    let e = find(name).unwrap();
    let group = e.build().unwrap();
    let m = e.multiplier(&group, 48).unwrap();
    assert_eq!(m.num_coclasses(), 2, "{name} has a nontrivial multiplier");
    let tables = m
        .coclasses()
        .iter()
        .map(|c| Arc::new(c.representative().to_complex()))
        .collect();
    let subgroups = all_subgroups(&group);
    Setup {
        group,
        tables,
        subgroups,
    }
}

pub fn irreps(h: &Subgroup, table: &Arc<Vec<Complex64>>) -> Vec<ProjRep> {
    irreducibles_on(h, table, 1e-12, Tolerances::default(), SEED).unwrap()
}

/// Traces agree element by element on the common domain.
pub fn same_character(a: &ProjRep, b: &ProjRep) -> bool {
    assert_eq!(a.domain().elements(), b.domain().elements());
    a.degree() == b.degree()
        && a
            .traces()
            .iter()
            .zip(b.traces())
            .all(|(x, y)| (x - y).norm() < TOL)
}

/// Multiplicities of every irreducible of the common domain agree.
pub fn same_constituents(a: &ProjRep, b: &ProjRep, irr: &[ProjRep]) -> bool {
    irr.iter().all(|chi| {
        let ma = hom_dimension(a, chi).unwrap();
        let mb = hom_dimension(b, chi).unwrap();
        (ma - mb).abs() < TOL && (ma - ma.round()).abs() < TOL
    })
}

/// `ind_K^G ind_H^K ψ = ind_H^G ψ` for `H ≤ K`. Each law panics on the
/// first violation and returns the number of cases checked.
pub fn transitivity(name: &str) -> usize {
    let s = setup(name);
    let whole = Subgroup::whole(&s.group);
    let mut checked = 0;
    for table in &s.tables {
        let irr_g = irreps(&whole, table);
        for h in &s.subgroups {
            let psis = irreps(h, table);
            for k in s.subgroups.iter().filter(|k| h.is_subgroup_of(k)) {
                for psi in &psis {
                    let direct = induce_rep(psi, &whole).unwrap();
                    let staged = induce_rep(&induce_rep(psi, k).unwrap(), &whole).unwrap();
                    assert!(
                        same_character(&direct, &staged),
                        "{name}: |H| = {}, |K| = {}",
                        h.order(),
                        k.order()
                    );
                    assert!(same_constituents(&direct, &staged, &irr_g));
                    checked += 1;
                }
            }
        }
    }
    checked
}

/// `ind_H^G(ψ ⊗ res φ) = ind_H^G(ψ) ⊗ φ` for `φ` over every coclass.
pub fn projection_formula(name: &str) -> usize {
    let s = setup(name);
    let whole = Subgroup::whole(&s.group);
    let mut checked = 0;
    for t_psi in &s.tables {
        for t_phi in &s.tables {
            let product: Arc<Vec<Complex64>> =
                Arc::new(t_psi.iter().zip(t_phi.iter()).map(|(a, b)| a * b).collect());
            let irr_g = irreps(&whole, &product);
            let phis = irreps(&whole, t_phi);
            for h in &s.subgroups {
                for psi in &irreps(h, t_psi) {
                    for phi in &phis {
                        let lhs = induce_rep(
                            &tensor_reps(psi, &restrict_rep(phi, h).unwrap()).unwrap(),
                            &whole,
                        )
                        .unwrap();
                        let rhs = tensor_reps(&induce_rep(psi, &whole).unwrap(), phi).unwrap();
                        assert!(same_character(&lhs, &rhs), "{name}: |H| = {}", h.order());
                        assert!(same_constituents(&lhs, &rhs, &irr_g));
                        checked += 1;
                    }
                }
            }
        }
    }
    checked
}

/// Representatives of the double cosets `K t H`.
pub fn double_coset_reps(g: &GroupRef, k: &Subgroup, h: &Subgroup) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut reps = Vec::new();
    for t in 0..g.order() {
        if seen[t] {
            continue;
        }
        reps.push(t);
        for &a in k.elements() {
            for &b in h.elements() {
                seen[g.mul(g.mul(a, t), b)] = true;
            }
        }
    }
    reps
}

/// `y ↦ α(y,t)·α(t,t⁻¹yt)⁻¹·ψ(t⁻¹yt)` on `K ∩ tHt⁻¹`.
pub fn conjugate_into(psi: &ProjRep, t: usize, k: &Subgroup) -> ProjRep {
    let g = psi.group().clone();
    let h = psi.domain();
    let elements: Vec<usize> = k
        .elements()
        .iter()
        .copied()
        .filter(|&y| h.contains(g.conj(y, t)))
        .collect();
    let l = Subgroup::from_elements(&g, &elements).unwrap();
    let mats = l
        .elements()
        .iter()
        .map(|&y| {
            let x = g.conj(y, t);
            psi.matrix(x) * (psi.alpha(y, t) * psi.alpha(t, x).conj())
        })
        .collect();
    ProjRep::new(
        l,
        psi.table().clone(),
        psi.table_tolerance(),
        mats,
        *psi.tolerances(),
    )
    .unwrap()
}

pub fn sum_reps(parts: &[ProjRep]) -> ProjRep {
    let first = &parts[0];
    let mats: Vec<CMat> = (0..first.domain().order())
        .map(|i| {
            parts[1..]
                .iter()
                .fold(first.matrices()[i].clone(), |acc, p| direct_sum(&acc, &p.matrices()[i]))
        })
        .collect();
    ProjRep::new(
        first.domain().clone(),
        first.table().clone(),
        first.table_tolerance(),
        mats,
        *first.tolerances(),
    )
    .unwrap()
}

/// `res_K ind_H^G ψ = ⊕_t ind_{K∩tHt⁻¹}^K ψ^t` over double cosets `KtH`.
pub fn mackey(name: &str) -> usize {
    let s = setup(name);
    let whole = Subgroup::whole(&s.group);
    let mut checked = 0;
    for table in &s.tables {
        for k in &s.subgroups {
            let irr_k = irreps(k, table);
            for h in &s.subgroups {
                let reps = double_coset_reps(&s.group, k, h);
                for psi in &irreps(h, table) {
                    let lhs = restrict_rep(&induce_rep(psi, &whole).unwrap(), k).unwrap();
                    let parts: Vec<ProjRep> = reps
                        .iter()
                        .map(|&t| induce_rep(&conjugate_into(psi, t, k), k).unwrap())
                        .collect();
                    let rhs = sum_reps(&parts);
                    assert!(
                        same_character(&lhs, &rhs),
                        "{name}: |K| = {}, |H| = {}",
                        k.order(),
                        h.order()
                    );
                    assert!(same_constituents(&lhs, &rhs, &irr_k));
                    checked += 1;
                }
            }
        }
    }
    checked
}

