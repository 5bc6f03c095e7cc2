use serde_json::json;

use super::{degree_primes, descend_table, pi_subsets, CheckResult, Instance};
use crate::error::{Error, Result};
use crate::group::{is_pi_separable, PiSet, Subgroup};
use crate::projrep::{
    clifford_correspondent, clifford_extend, factor_over_extension, hom_dimension,
    inertia_group, irreducibles_on, restrict_rep, trivial_on, ProjRep,
};
use crate::twisted::{wedderburn, TwistedAlgebra};

/// Clifford bookkeeping over `V ∈ Irr(N|c)` for `N ⊴ G`: the dimension
/// product for each `V′` over `V`, the Π-set identities, the coprime
/// extension criterion and the Hall containment for π′-degrees.
pub fn verify_lemma31(inst: &Instance, n: &Subgroup, v: &ProjRep) -> CheckResult {
    let mut r = CheckResult::new("lemma31", inst.inputs(None, None));
    if !n.is_normal() {
        return r.inapplicable("subgroup is not normal");
    }
    match run(inst, n, v, &mut r) {
        Ok(()) => r,
        Err(e) => r.errored(e),
    }
}

fn run(inst: &Instance, n: &Subgroup, v: &ProjRep, r: &mut CheckResult) -> Result<()> {
    let g = &inst.group;
    let order = g.order();
    let whole = Subgroup::whole(g);
    let j = inertia_group(v, &whole)?;
    let index = order / j.order();
    r.witness("n_order", n.order());
    r.witness("v_degree", v.degree());
    r.witness("inertia_order", j.order());
    let ext = clifford_extend(v, &j)?;

    // the irreducibles of G lying over V
    let mut over = Vec::new();
    for x in &inst.irreps {
        let res = restrict_rep(x, n)?;
        if hom_dimension(&res, v)? > 0.5 {
            over.push(x);
        }
    }
    if over.is_empty() {
        return Err(Error::ReconstructionFailure("no irreducible lies over V".into()));
    }
    let mut w_degrees = Vec::new();
    let mut products = Vec::new();
    for x in &over {
        let xj = clifford_correspondent(x, &ext)?;
        let w = factor_over_extension(&xj, &ext)?;
        let expected = v.degree() * w.degree() * index;
        products.push(json!([x.degree(), v.degree(), w.degree(), index]));
        if x.degree() != expected {
            r.fail(format!("dim V′ = {} but dim V·dim W·|G:J| = {expected}", x.degree()));
        }
        let lhs = PiSet::of(x.degree() as u64);
        let rhs = PiSet::of(v.degree() as u64)
            .union(&PiSet::of(w.degree() as u64))
            .union(&PiSet::of(index as u64));
        if lhs != rhs {
            r.fail(format!("Π(V′) = {lhs} but Π(V) ∪ Π(W) ∪ Π(|G:J|) = {rhs}"));
        }
        w_degrees.push(w.degree());
    }
    r.witness("dimension_products", products);

    // Irr(J/N|b) computed on the quotient from the obstruction table
    let (quotient, table, deviation) = descend_table(&j, n, &ext.delta)?;
    r.witness("obstruction_coset_deviation", deviation);
    if deviation > inst.tol().numeric_cocycle {
        r.fail("obstruction table is not constant on cosets");
    }
    let table_tol = ext.extension.table_tolerance();
    let b = TwistedAlgebra::with_table_tolerance(&quotient, table, table_tol, inst.tol())?;
    let b_degrees = wedderburn(&b, inst.seed())?.degrees();
    let b_trivial = b_degrees.contains(&1);
    let mut expected: Vec<usize> = b_degrees.iter().map(|d| d * v.degree() * index).collect();
    let mut found: Vec<usize> = over.iter().map(|x| x.degree()).collect();
    expected.sort_unstable();
    found.sort_unstable();
    r.witness("factor_degrees", &b_degrees);
    r.witness("degrees_over_v", &found);
    r.require("correspondence_degrees_match", expected == found);
    let lhs = degree_primes(&found);
    let rhs = PiSet::of(v.degree() as u64)
        .union(&degree_primes(&b_degrees))
        .union(&PiSet::of(index as u64));
    r.require("pi_irr_over_v", lhs == rhs);
    let mut factor_w = w_degrees.clone();
    factor_w.sort_unstable();
    let mut all_b = b_degrees.clone();
    all_b.sort_unstable();
    r.require("factors_are_the_quotient_irreducibles", factor_w == all_b);

    // Π(Irr(N|c)) ⊆ Π(N) ∩ Π(Irr(G|c))
    let n_degrees: Vec<usize> = irreducibles_on(n, inst.table(), 1e-12, inst.tol(), inst.seed())?
        .iter()
        .map(|x| x.degree())
        .collect();
    let bound = PiSet::of(n.order() as u64).intersection(&inst.degree_primes());
    r.require("pi_irr_n_bound", degree_primes(&n_degrees).is_subset(&bound));

    // coprime case: b = 1
    let pi_n = PiSet::of(n.order() as u64);
    let pi_jn = PiSet::of((j.order() / n.order()) as u64);
    let coprime =
        pi_n.intersection(&pi_jn).is_empty() && PiSet::of(inst.coclass.order()).is_subset(&pi_n);
    r.witness("coprime_case", coprime);
    r.witness("obstruction_trivial", b_trivial);
    if coprime {
        r.require("coprime_obstruction_trivial", b_trivial);
        // then Y is itself a c-representation of J
        let inflated = trivial_on(&j, &ext.delta, table_tol, inst.tol(), inst.seed())?;
        r.require("inflated_obstruction_trivial", inflated);
    }

    // Π(V′) ⊆ π′ in a π-separable group puts a Hall π-subgroup in J
    let mut hall = Vec::new();
    for pi in pi_subsets(&PiSet::of(order as u64), usize::MAX) {
        if !is_pi_separable(g, &pi) {
            continue;
        }
        for x in &over {
            if PiSet::of(x.degree() as u64).intersection(&pi).is_empty() {
                let ok = pi.part(index as u64) == 1;
                hall.push(json!({ "pi": pi.primes().collect::<Vec<_>>(), "degree": x.degree(), "index_pi_free": ok }));
                if !ok {
                    r.fail(format!("|G:J| has a π-part for π = {pi}"));
                }
            }
        }
    }
    r.witness("hall_containment", hall);
    r.lhs = json!(found);
    r.rhs = json!(expected);
    Ok(())
}
