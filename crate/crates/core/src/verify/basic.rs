use serde_json::json;

use super::{pi_subsets, CheckResult, Instance};
use crate::cohomology::restrict_coclass;
use crate::group::{hall_subgroup, PiSet};
use crate::projrep::irreducibles_on;

/// Counting, the degree formula, the divisibilities by `o(c)` and `|G|`,
/// the Π-chain, and for every π with a Hall subgroup `H`:
/// `Π(c) ⊆ π′ ⇔ res c|_H = 1 ⇔ H has a linear twisted irreducible`.
pub fn verify_basic(inst: &Instance) -> CheckResult {
    let mut r = CheckResult::new("basic", inst.inputs(None, None));
    let order = inst.group.order() as u64;
    let degrees = &inst.degrees;
    let oc = inst.coclass.order();
    r.witness("degrees", degrees);
    r.witness("coclass_order", oc);
    r.witness("regular_classes", inst.regular_classes);
    r.witness("residual", inst.residual);

    let sum: usize = degrees.iter().map(|d| d * d).sum();
    r.lhs = json!({ "irreducibles": degrees.len(), "sum_of_squares": sum });
    r.rhs = json!({ "regular_classes": inst.regular_classes, "order": order });
    r.require("count_matches_regular_classes", degrees.len() == inst.regular_classes);
    r.require("sum_of_squares_is_order", sum as u64 == order);
    r.require("coclass_order_divides_degrees", degrees.iter().all(|&d| (d as u64).is_multiple_of(oc)));
    r.require("degrees_divide_order", degrees.iter().all(|&d| order.is_multiple_of(d as u64)));
    r.require("coclass_order_squared_divides_order", order.is_multiple_of(oc * oc));
    r.require("residual_below_tolerance", inst.residual < 1e-6);

    let pic = PiSet::of(oc);
    let chain = degrees.iter().all(|&d| pic.is_subset(&PiSet::of(d as u64)))
        && inst.degree_primes().is_subset(&PiSet::of(order));
    r.require("pi_chain", chain);

    let mut hall = Vec::new();
    for pi in pi_subsets(&PiSet::of(order), usize::MAX) {
        let Ok(h) = hall_subgroup(&inst.group, &pi) else {
            continue;
        };
        let coprime = pic.intersection(&pi).is_empty();
        let exact = restrict_coclass(
            &inst.coclass,
            &inst.multiplier,
            &h,
            inst.options.h2_cap,
        )
        .map(|(_, c)| c.is_trivial());
        let restricted = match exact {
            Ok(t) => Ok((t, "exact")),
            Err(_) => inst.trivial_on(&h).map(|t| (t, "numeric")),
        };
        let linear = irreducibles_on(&h, inst.table(), 1e-12, inst.tol(), inst.seed())
            .map(|reps| reps.iter().any(|v| v.degree() == 1));
        match (restricted, linear) {
            (Ok((t, method)), Ok(l)) => {
                hall.push(json!({
                    "pi": pi.primes().collect::<Vec<_>>(),
                    "hall_order": h.order(),
                    "coclass_pi_prime": coprime,
                    "restriction_trivial": t,
                    "restriction_method": method,
                    "linear_irreducible": l,
                }));
                if coprime != t || t != l {
                    r.fail(format!("Hall criterion differs for π = {pi}"));
                }
            }
            (Err(e), _) | (_, Err(e)) => r.fail(format!("Hall criterion for π = {pi}: {e}")),
        }
    }
    r.witness("hall_criterion", hall);
    r
}
