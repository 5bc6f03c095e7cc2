use serde::Serialize;
use serde_json::json;

use super::{CheckResult, Instance};
use crate::error::Result;
use crate::group::{
    hall_subgroup, is_p_solvable, is_solvable, o_pi, pi_series, sylow_subgroup, PiSet, PiTag,
    Subgroup,
};
use crate::linalg::CVec;
use crate::projrep::{alpha_tilde, inertia_group, irreducibles_on, regular_classes_in};

/// Both sides of the projective Itô–Michler equivalence for a Hall
/// π-subgroup `H` and `O = O_π′(G)`.
#[derive(Debug, Clone, Serialize)]
pub struct ItoMichlerConditions {
    /// (i): no degree is divisible by a prime of π.
    pub degrees_coprime: bool,
    pub hall_order: usize,
    pub hall_abelian: bool,
    pub hall_normal: bool,
    pub restriction_trivial: bool,
    pub o_order: usize,
    pub o_irreducibles: usize,
    pub o_regular_classes: usize,
    /// `H` lies in the inertia group of every irreducible of `O`.
    pub fixes_irreducibles: bool,
    /// `H` commutes with every twisted class sum of a regular `O`-class.
    pub fixes_class_sums: bool,
    /// `H` maps every regular `O`-class onto itself as a set.
    pub fixes_class_sets: bool,
}

impl ItoMichlerConditions {
    pub fn condition_ii(&self) -> bool {
        self.hall_abelian && self.restriction_trivial && self.fixes_irreducibles
    }

    pub fn condition_iii(&self) -> bool {
        self.hall_abelian && self.restriction_trivial && self.fixes_class_sums
    }
}

/// Evaluate conditions (i)–(iii) for the Hall π-subgroup `h`.
pub fn ito_michler_conditions(
    inst: &Instance,
    pi: &PiSet,
    h: &Subgroup,
) -> Result<ItoMichlerConditions> {
    let g = &inst.group;
    let n = g.order();
    let table = inst.table();
    let pi_prime = pi.complement_in(n as u64);
    let o = o_pi(g, &pi_prime);
    let whole = Subgroup::whole(g);

    let irreducibles = irreducibles_on(&o, table, 1e-12, inst.tol(), inst.seed())?;
    let mut fixes_irreducibles = true;
    for v in &irreducibles {
        let j = inertia_group(v, &whole)?;
        if !h.is_subgroup_of(&j) {
            fixes_irreducibles = false;
        }
    }

    let tol = 100.0 * inst.tol().cocycle.max(1e-12);
    let classes = regular_classes_in(&o, table, tol);
    let gens = h.generators();
    let mut fixes_class_sums = true;
    let mut fixes_class_sets = true;
    let mut regular = 0;
    for (cl, is_regular) in &classes {
        if !is_regular {
            continue;
        }
        regular += 1;
        let x = cl.representative;
        let mut sum = CVec::zeros(n);
        for &y in o.elements() {
            sum[g.conj(x, y)] += alpha_tilde(g, table, x, y);
        }
        for &s in &gens {
            if !cl.members.contains(&g.conj(x, s)) {
                fixes_class_sets = false;
            }
            let e = inst.algebra.basis(s);
            let left = inst.algebra.multiply(&e, &sum);
            let right = inst.algebra.multiply(&sum, &e);
            let diff = (left - right).iter().map(|z| z.norm()).fold(0.0f64, f64::max);
            if diff > 1e-8 * o.order() as f64 {
                fixes_class_sums = false;
            }
        }
    }

    Ok(ItoMichlerConditions {
        degrees_coprime: inst.degree_primes().intersection(pi).is_empty(),
        hall_order: h.order(),
        hall_abelian: h.is_abelian(),
        hall_normal: h.is_normal(),
        restriction_trivial: inst.trivial_on(h)?,
        o_order: o.order(),
        o_irreducibles: irreducibles.len(),
        o_regular_classes: regular,
        fixes_irreducibles,
        fixes_class_sums,
        fixes_class_sets,
    })
}

fn record(r: &mut CheckResult, c: &ItoMichlerConditions) {
    r.lhs = json!(c.degrees_coprime);
    r.rhs = json!({ "ii": c.condition_ii(), "iii": c.condition_iii() });
    r.witness("conditions", c);
    if c.degrees_coprime != c.condition_ii() || c.condition_ii() != c.condition_iii() {
        r.fail(format!(
            "(i) = {}, (ii) = {}, (iii) = {}",
            c.degrees_coprime,
            c.condition_ii(),
            c.condition_iii()
        ));
    }
}

/// `p ∤ degrees ⇔ (ii) ⇔ (iii)` for `p`-solvable groups.
pub fn verify_ito_michler(inst: &Instance, p: u64) -> CheckResult {
    let mut r = CheckResult::new("ito_michler", inst.inputs(Some(p), None));
    let order = inst.group.order() as u64;
    if !order.is_multiple_of(p) {
        return r.inapplicable(format!("{p} does not divide the group order"));
    }
    if !is_p_solvable(&inst.group, p) {
        return r.inapplicable(format!("group is not {p}-solvable"));
    }
    r.witness("degrees", &inst.degrees);
    let sylow = sylow_subgroup(&inst.group, p);
    match ito_michler_conditions(inst, &PiSet::single(p), &sylow) {
        Ok(c) => record(&mut r, &c),
        Err(e) => return r.errored(e),
    }
    r
}

/// The same equivalence for a Hall π-subgroup, when `G = O_π′ππ′(G)`.
pub fn verify_pi_ito_michler(inst: &Instance, pi: &PiSet) -> CheckResult {
    let mut r = CheckResult::new("pi_ito_michler", inst.inputs(None, Some(pi)));
    let order = inst.group.order() as u64;
    let pi = pi.intersection(&PiSet::of(order));
    if pi.is_empty() {
        return r.inapplicable("π does not meet the group order");
    }
    let pi_prime = pi.complement_in(order);
    let series = pi_series(&inst.group, &pi_prime);
    if !series.separable {
        return r.inapplicable(format!("group is not {pi}-separable"));
    }
    if series.len() > 3 {
        return r.inapplicable(format!("π′π π′-length exceeds one for π = {pi}"));
    }
    r.witness("degrees", &inst.degrees);
    r.witness("series_orders", series.orders());
    let h = match hall_subgroup(&inst.group, &pi) {
        Ok(h) => h,
        Err(e) => return r.errored(e),
    };
    match ito_michler_conditions(inst, &pi, &h) {
        Ok(c) => record(&mut r, &c),
        Err(e) => return r.errored(e),
    }
    r
}

/// When every class of `O_p′(G)` is regular: `p ∤ degrees` exactly when
/// the Sylow `p`-subgroup is normal, abelian and the restriction trivial.
pub fn verify_cor35(inst: &Instance, p: u64) -> CheckResult {
    let mut r = CheckResult::new("cor35", inst.inputs(Some(p), None));
    let g = &inst.group;
    let order = g.order() as u64;
    if !order.is_multiple_of(p) {
        return r.inapplicable(format!("{p} does not divide the group order"));
    }
    if !is_p_solvable(g, p) {
        return r.inapplicable(format!("group is not {p}-solvable"));
    }
    let o = o_pi(g, &PiSet::single(p).complement_in(order));
    let classes = regular_classes_in(&o, inst.table(), 1e-10);
    if classes.iter().any(|(_, regular)| !regular) {
        return r.inapplicable("O_p′(G) has classes that are not regular");
    }
    let sylow = sylow_subgroup(g, p);
    let trivial = match inst.trivial_on(&sylow) {
        Ok(t) => t,
        Err(e) => return r.errored(e),
    };
    let lhs = !inst.degree_primes().contains(p);
    let rhs = sylow.is_normal() && sylow.is_abelian() && trivial;
    r.witness("degrees", &inst.degrees);
    r.witness("sylow_order", sylow.order());
    r.witness("sylow_normal", sylow.is_normal());
    r.witness("sylow_abelian", sylow.is_abelian());
    r.witness("restriction_trivial", trivial);
    r.witness("o_order", o.order());
    r.equivalence(lhs, rhs);
    r
}

/// `Π(degrees) ⊆ π′` exactly when every `p ∈ π` satisfies the
/// `p`-conditions; in that case the π-factors of the π-series are abelian
/// and the coclass restricts trivially to a Hall π-subgroup.
pub fn verify_pi_theorem(inst: &Instance, pi: &PiSet) -> CheckResult {
    let mut r = CheckResult::new("pi_theorem", inst.inputs(None, Some(pi)));
    let g = &inst.group;
    let order = g.order() as u64;
    let series = pi_series(g, pi);
    if !series.separable {
        return r.inapplicable(format!("group is not {pi}-separable"));
    }
    r.witness("degrees", &inst.degrees);
    let lhs = inst.degree_primes().intersection(pi).is_empty();
    let mut rhs = true;
    let mut per_prime = Vec::new();
    for p in pi.intersection(&PiSet::of(order)).primes() {
        if !is_p_solvable(g, p) {
            rhs = false;
            per_prime.push(json!({ "p": p, "p_solvable": false }));
            continue;
        }
        let sylow = sylow_subgroup(g, p);
        match ito_michler_conditions(inst, &PiSet::single(p), &sylow) {
            Ok(c) => {
                rhs &= c.condition_ii();
                per_prime.push(json!({ "p": p, "p_solvable": true, "ii": c.condition_ii() }));
            }
            Err(e) => return r.errored(e),
        }
    }
    r.witness("primes", per_prime);
    r.equivalence(lhs, rhs);
    if lhs {
        let mut factors = Vec::new();
        for (i, tag) in series.tags.iter().enumerate() {
            if *tag != PiTag::Pi {
                continue;
            }
            let (lower, upper) = (&series.terms[i], &series.terms[i + 1]);
            let abelian = upper.elements().iter().all(|&x| {
                upper
                    .elements()
                    .iter()
                    .all(|&y| lower.contains(g.commutator(x, y)))
            });
            factors.push(json!({ "lower": lower.order(), "upper": upper.order(), "abelian": abelian }));
            if !abelian {
                r.fail(format!(
                    "π-factor {}/{} is not abelian",
                    upper.order(),
                    lower.order()
                ));
            }
        }
        r.witness("pi_factors", factors);
        match hall_subgroup(g, pi).and_then(|h| inst.trivial_on(&h).map(|t| (h, t))) {
            Ok((h, t)) => {
                r.witness("hall_order", h.order());
                r.require("hall_restriction_trivial", t);
            }
            Err(e) => r.fail(e.to_string()),
        }
    }
    r
}

/// `A5` with the trivial coclass and `p = 2`: condition (ii) holds while
/// (i) fails. Passing means the implication correctly breaks outside the
/// `p`-solvable case.
pub fn verify_a5_negative_control(inst: &Instance) -> CheckResult {
    let mut r = CheckResult::new("a5_negative_control", inst.inputs(Some(2), None));
    let g = &inst.group;
    if g.order() != 60 || is_solvable(g) || !inst.coclass.is_trivial() {
        return r.inapplicable("input is not A5 with the trivial coclass");
    }
    r.witness("degrees", &inst.degrees);
    let sylow = sylow_subgroup(g, 2);
    let c = match ito_michler_conditions(inst, &PiSet::single(2), &sylow) {
        Ok(c) => c,
        Err(e) => return r.errored(e),
    };
    r.lhs = json!(c.degrees_coprime);
    r.rhs = json!({ "ii": c.condition_ii() });
    r.witness("conditions", &c);
    r.require("condition_ii_holds", c.condition_ii());
    r.require("condition_i_fails", !c.degrees_coprime);
    r.require("o_p_prime_trivial", c.o_order == 1);
    let mut others = Vec::new();
    for p in [3u64, 5] {
        let sylow = sylow_subgroup(g, p);
        if let Ok(c) = ito_michler_conditions(inst, &PiSet::single(p), &sylow) {
            others.push(json!({
                "p": p,
                "i": c.degrees_coprime,
                "ii": c.condition_ii(),
                "iii": c.condition_iii(),
                "sylow_normal": c.hall_normal,
            }));
        }
    }
    r.witness("other_primes", others);
    r
}
