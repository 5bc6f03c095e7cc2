//! Acceptance criteria, one line each. Runs without the libtest harness
//! so the lines are always printed; exits nonzero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use projrep::catalog::{catalog, find};
use projrep::cohomology::{cocycle_from_extension, Cochain1, Cocycle};
use projrep::config::Tolerances;
use projrep::group::{is_p_solvable, is_pi_separable, is_solvable, PiSet, Subgroup};
use projrep::linalg::CMat;
use projrep::projrep::{irreducible_reps, isomorphic, ProjRep};
use projrep::twisted::{c_regular_classes, wedderburn, TwistedAlgebra};
use projrep::verify::{
    decompose_check, pi_subsets, verify_a5_negative_control, verify_ito_michler,
    verify_pi_theorem, CheckOptions, Instance, Verdict,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every catalog group with every coclass.
fn all_instances() -> Result<Vec<Instance>, String> {
    let entries = catalog();
    let built: Vec<Result<Vec<Instance>, String>> = entries
        .par_iter()
        .map(|e| {
            let g = e.build().map_err(|x| format!("{}: {x}", e.name))?;
            let m = Arc::new(e.multiplier(&g, 48).map_err(|x| format!("{}: {x}", e.name))?);
            m.coclasses()
                .into_par_iter()
                .map(|c| {
                    Instance::new(&e.name, m.clone(), c, CheckOptions::default())
                        .map_err(|x| format!("{}: {x}", e.name))
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for b in built {
        out.extend(b?);
    }
    Ok(out)
}

fn upto(insts: &[Instance], order: usize) -> impl Iterator<Item = &Instance> {
    insts.iter().filter(move |i| i.group.order() <= order)
}

fn criterion_1(insts: &[Instance], setup: std::time::Duration) -> Outcome {
    let mut groups = BTreeSet::new();
    let mut count = 0;
    for i in upto(insts, 60) {
        let sum: usize = i.degrees.iter().map(|d| d * d).sum();
        ensure(sum == i.group.order(), || {
            format!("{} {:?}: Σn² = {sum}", i.name, i.coclass.exponents())
        })?;
        ensure(i.degrees.len() == i.regular_classes, || {
            format!("{} {:?}: {} degrees, {} regular classes", i.name, i.coclass.exponents(), i.degrees.len(), i.regular_classes)
        })?;
        ensure(i.residual < 1e-6, || format!("{}: residual {:.2e}", i.name, i.residual))?;
        groups.insert(i.name.clone());
        count += 1;
    }
    ensure(setup.as_secs() < 300, || format!("setup took {setup:.2?}"))?;
    Ok(format!(
        "{} groups of order ≤ 60, {count} coclasses; whole-catalog setup {setup:.2?}",
        groups.len()
    ))
}

fn criterion_2(insts: &[Instance]) -> Outcome {
    let mut count = 0;
    for i in upto(insts, 60) {
        let o = i.coclass.order() as usize;
        let n = i.group.order();
        ensure(n % (o * o) == 0, || format!("{}: o(c)² ∤ |G|", i.name))?;
        for &d in &i.degrees {
            ensure(d % o == 0 && n % d == 0, || {
                format!("{} {:?}: degree {d}, o(c) = {o}", i.name, i.coclass.exponents())
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} degrees, zero violations"))
}

/// Over ℂ*, two cocycles of an abelian group are cohomologous exactly
/// when their commutator forms `α(x,y)/α(y,x)` agree.
fn criterion_3() -> Outcome {
    let t = Instant::now();
    let e = find("C2xC2").map_err(|x| x.to_string())?;
    let g = e.build().map_err(|x| x.to_string())?;
    let m = e.multiplier(&g, 48).map_err(|x| x.to_string())?;
    let n = 4;
    let mut valid = Vec::new();
    for mask in 0u32..1 << 16 {
        let a = |x: usize, y: usize| (mask >> (x * n + y)) & 1;
        if (0..n).any(|x| a(0, x) != 0 || a(x, 0) != 0) {
            continue;
        }
        let ok = (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    (a(x, y) + a(g.mul(x, y), z)) % 2 == (a(y, z) + a(x, g.mul(y, z))) % 2
                })
            })
        });
        if ok {
            valid.push(mask);
        }
    }
    ensure(valid.len() == 16, || format!("{} cocycles, expected 16", valid.len()))?;
    let mut by_form: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
    let mut by_engine: BTreeMap<Vec<u64>, Vec<u32>> = BTreeMap::new();
    for &mask in &valid {
        let table: Vec<u32> = (0..16).map(|i| (mask >> i) & 1).collect();
        let form: Vec<u32> = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .map(|(x, y)| (table[x * n + y] + table[y * n + x]) % 2)
            .collect();
        by_form.entry(form).or_default().push(mask);
        let c = Cocycle::from_table(&g, 2, table).map_err(|x| x.to_string())?;
        let class = m.classify(&c).map_err(|x| x.to_string())?;
        let a = TwistedAlgebra::from_cocycle(&c, Tolerances::default());
        let degrees = wedderburn(&a, 1).map_err(|x| x.to_string())?.degrees();
        let regular = c_regular_classes(&a).map_err(|x| x.to_string())?.count();
        if class.iter().all(|&v| v == 0) {
            ensure(degrees == vec![1, 1, 1, 1] && regular == 4, || {
                format!("trivial class {mask:#x}: {degrees:?}")
            })?;
        } else {
            ensure(degrees == vec![2] && regular == 1, || {
                format!("nontrivial class {mask:#x}: degrees {degrees:?}, {regular} regular")
            })?;
        }
        by_engine.entry(class).or_default().push(mask);
    }
    let oracle: BTreeSet<Vec<u32>> = by_form.into_values().collect();
    let engine: BTreeSet<Vec<u32>> = by_engine.into_values().collect();
    ensure(oracle.len() == 2, || format!("{} oracle classes", oracle.len()))?;
    ensure(oracle.iter().all(|class| class.len() == 8), || "oracle classes of unequal size".into())?;
    ensure(oracle == engine, || "engine partition differs from the oracle".into())?;
    let elapsed = t.elapsed();
    ensure(elapsed.as_secs_f64() < 10.0, || format!("took {elapsed:.2?}"))?;
    Ok(format!(
        "2^16 tables, 16 cocycles, 2 coclasses of size 8; nontrivial: degrees [2], 1 regular class ({elapsed:.2?})"
    ))
}

/// The twisted irreducibles of `SL(2,5)/Z` against the ordinary
/// irreducibles of `SL(2,5)` on which the centre acts by `-1`, read
/// through the section of the quotient.
fn criterion_4() -> Outcome {
    let e = find("SL(2,5)").map_err(|x| x.to_string())?;
    let sl = e.build().map_err(|x| x.to_string())?;
    let centre: Vec<usize> = (0..sl.order())
        .filter(|&x| (0..sl.order()).all(|y| sl.mul(x, y) == sl.mul(y, x)))
        .collect();
    ensure(centre.len() == 2, || format!("centre of order {}", centre.len()))?;
    let z = Subgroup::from_elements(&sl, &centre).map_err(|x| x.to_string())?;
    let (q, c) = cocycle_from_extension(&sl, &z).map_err(|x| x.to_string())?;
    ensure(q.group.order() == 60 && !is_solvable(&q.group), || "quotient is not A5".into())?;
    let tol = Tolerances::default();
    let twisted = TwistedAlgebra::from_cocycle(&c, tol);
    let w = wedderburn(&twisted, 7).map_err(|x| x.to_string())?;
    ensure(w.residual < 1e-6, || format!("residual {:.2e}", w.residual))?;
    let mut degrees = w.degrees();
    degrees.sort();
    ensure(degrees == vec![2, 2, 4, 6], || format!("twisted degrees {degrees:?}"))?;
    let proj_irreps = irreducible_reps(&twisted, 7).map_err(|x| x.to_string())?;

    let ordinary = TwistedAlgebra::ordinary(&sl, tol);
    let zc = centre[1];
    let mut faithful = Vec::new();
    for r in irreducible_reps(&ordinary, 7).map_err(|x| x.to_string())? {
        let tz = r.matrix(zc).trace();
        if (tz.re + r.degree() as f64).abs() < 1e-6 {
            faithful.push(r);
        }
    }
    let mut lifted: Vec<usize> = faithful.iter().map(|r| r.degree()).collect();
    lifted.sort();
    ensure(lifted == degrees, || format!("faithful degrees of SL(2,5): {lifted:?}"))?;
    let table = Arc::new(c.to_complex());
    let whole = Subgroup::whole(&q.group);
    let mut matched = vec![false; proj_irreps.len()];
    for r in &faithful {
        let mats: Vec<CMat> = q.section.iter().map(|&s| r.matrix(s).clone()).collect();
        let through = ProjRep::new(whole.clone(), table.clone(), 1e-12, mats, tol)
            .map_err(|x| format!("section restriction: {x}"))?;
        let k = proj_irreps
            .iter()
            .position(|p| isomorphic(p, &through).unwrap_or(false))
            .ok_or("no twisted irreducible matches a faithful lift")?;
        ensure(!matched[k], || "two lifts match one twisted irreducible".into())?;
        matched[k] = true;
    }
    Ok(format!(
        "twisted degrees {degrees:?} (Σn² = 60) match the faithful irreducibles of SL(2,5) by character"
    ))
}

fn criterion_5(insts: &[Instance]) -> Outcome {
    let mut applicable = 0;
    let mut nontrivial = 0;
    for i in insts {
        for p in PiSet::of(i.group.order() as u64).primes() {
            let r = verify_ito_michler(i, p);
            let solvable = is_p_solvable(&i.group, p);
            ensure(r.verdict != Verdict::Fail, || {
                format!("{} {:?} p = {p}: {:?}", i.name, i.coclass.exponents(), r.reason)
            })?;
            ensure((r.verdict == Verdict::Pass) == solvable, || {
                format!("{} p = {p}: verdict {:?} but p-solvable = {solvable}", i.name, r.verdict)
            })?;
            if solvable {
                applicable += 1;
                if !i.coclass.is_trivial() {
                    nontrivial += 1;
                }
            }
        }
    }
    ensure(nontrivial >= 50, || format!("only {nontrivial} nontrivial instances"))?;
    Ok(format!(
        "{applicable} p-solvable (group, coclass, p) instances pass, {nontrivial} with a nontrivial coclass"
    ))
}

fn criterion_6(insts: &[Instance]) -> Outcome {
    let mut applicable = 0;
    let mut lhs_true = 0;
    for i in insts {
        for pi in pi_subsets(&PiSet::of(i.group.order() as u64), 2) {
            let r = verify_pi_theorem(i, &pi);
            let separable = is_pi_separable(&i.group, &pi);
            ensure(r.verdict != Verdict::Fail, || {
                format!("{} {:?} π = {pi}: {:?}", i.name, i.coclass.exponents(), r.reason)
            })?;
            ensure((r.verdict == Verdict::Pass) == separable, || {
                format!("{} π = {pi}: verdict {:?}", i.name, r.verdict)
            })?;
            if !separable {
                continue;
            }
            applicable += 1;
            if r.lhs == serde_json::Value::Bool(true) {
                lhs_true += 1;
                let factors = r.witnesses["pi_factors"].as_array().cloned().unwrap_or_default();
                ensure(factors.iter().all(|f| f["abelian"] == true), || {
                    format!("{} π = {pi}: nonabelian π-factor", i.name)
                })?;
                ensure(r.witnesses["hall_restriction_trivial"] == true, || {
                    format!("{} π = {pi}: restriction to the Hall subgroup", i.name)
                })?;
            }
        }
    }
    Ok(format!(
        "{applicable} π-separable instances (|π| ≤ 2) pass; {lhs_true} with π′-degrees have abelian π-factors and trivial Hall restriction"
    ))
}

fn criterion_7(insts: &[Instance]) -> Outcome {
    let a5 = insts
        .iter()
        .find(|i| i.name == "A5" && i.coclass.is_trivial())
        .ok_or("A5 missing")?;
    let r = verify_a5_negative_control(a5);
    ensure(r.verdict == Verdict::Pass, || format!("{:?}", r.reason))?;
    let c = &r.witnesses["conditions"];
    Ok(format!(
        "A5, p = 2: condition (i) = {}, condition (ii) holds (Sylow abelian = {}, restriction trivial = {}); recorded as outside p-solvable scope",
        c["degrees_coprime"], c["hall_abelian"], c["restriction_trivial"]
    ))
}

fn criterion_8(insts: &[Instance]) -> Outcome {
    let cases: Vec<(&Instance, PiSet, usize)> = upto(insts, 60)
        .filter(|i| is_solvable(&i.group))
        .flat_map(|i| {
            pi_subsets(&PiSet::of(i.group.order() as u64), 2)
                .into_iter()
                .flat_map(move |pi| (0..i.irreps.len()).map(move |k| (i, pi.clone(), k)))
        })
        .collect();
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|(i, pi, k)| {
            let r = decompose_check(i, pi, *k);
            let cert = &r.witnesses.get("certificate");
            let report = &r.witnesses.get("report");
            let ok = r.verdict == Verdict::Pass
                && cert.is_some_and(|c| {
                    (c["reconstruction_dimension"].as_f64().unwrap_or(0.0) - 1.0).abs() < 1e-6
                        && c["reconstruction_residual"].as_f64().unwrap_or(1.0) < 1e-6
                })
                && report.is_some_and(|p| {
                    p["degree_identity_pi"] == true && p["degree_identity_pi_prime"] == true
                });
            (!ok).then(|| {
                format!("{} {:?} π = {pi} irreducible {k}: {:?}", i.name, i.coclass.exponents(), r.reason)
            })
        })
        .collect();
    ensure(failures.is_empty(), || {
        format!("{} failures, first: {}", failures.len(), failures[0])
    })?;
    Ok(format!(
        "{} (group, coclass, π, irreducible) certificates reconstruct with both degree identities",
        cases.len()
    ))
}

fn criterion_9() -> Outcome {
    let mut counts = Vec::new();
    for name in ["S4", "D6"] {
        let t = common::transitivity(name);
        let p = common::projection_formula(name);
        let m = common::mackey(name);
        counts.push(format!("{name}: {t} transitivity, {p} projection, {m} Mackey"));
    }
    Ok(counts.join("; "))
}

fn criterion_10(insts: &[Instance]) -> Outcome {
    let mut count = 0;
    for i in upto(insts, 24) {
        let base = i.coclass.representative();
        let tol = i.tol();
        let a = TwistedAlgebra::from_cocycle(base, tol);
        let flags = c_regular_classes(&a).map_err(|x| x.to_string())?.flags();
        for k in 0..20u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + k);
            let zeta = Cochain1::random(&i.group, base.modulus(), &mut rng);
            let moved = base.add(&zeta.coboundary()).map_err(|x| x.to_string())?;
            let b = TwistedAlgebra::from_cocycle(&moved, tol);
            let mut degrees = wedderburn(&b, i.seed()).map_err(|x| x.to_string())?.degrees();
            degrees.sort();
            ensure(degrees == i.degrees, || {
                format!("{} {:?}: degrees {degrees:?} after perturbation {k}", i.name, i.coclass.exponents())
            })?;
            let moved_flags = c_regular_classes(&b).map_err(|x| x.to_string())?.flags();
            ensure(moved_flags == flags, || format!("{}: regular flags moved", i.name))?;
            count += 1;
        }
    }
    Ok(format!("{count} perturbations over groups of order ≤ 24, degrees and regular flags unchanged"))
}

fn run(label: &str, f: impl FnOnce() -> Outcome) -> bool {
    let t = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panicked".into()))
    });
    let elapsed = t.elapsed();
    match outcome {
        Ok(detail) => {
            println!("criterion {label}: PASS [{elapsed:.2?}] {detail}");
            true
        }
        Err(reason) => {
            println!("criterion {label}: FAIL [{elapsed:.2?}] {reason}");
            false
        }
    }
}

fn main() {
    let t = Instant::now();
    let insts = match all_instances() {
        Ok(v) => v,
        Err(e) => {
            println!("setup: FAIL {e}");
            std::process::exit(1);
        }
    };
    let setup = t.elapsed();
    println!("setup: {} (group, coclass) instances in {setup:.2?}", insts.len());
    let results = [
        run("1 (degree formula and counting)", || criterion_1(&insts, setup)),
        run("2 (divisibilities)", || criterion_2(&insts)),
        run("3 (C2xC2 brute force)", criterion_3),
        run("4 (A5 through SL(2,5))", criterion_4),
        run("5 (p-solvable equivalence)", || criterion_5(&insts)),
        run("6 (π-equivalence)", || criterion_6(&insts)),
        run("7 (A5 negative control)", || criterion_7(&insts)),
        run("8 (decomposition certificates)", || criterion_8(&insts)),
        run("9 (induction laws)", criterion_9),
        run("10 (coboundary invariance)", || criterion_10(&insts)),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria pass in {:.2?}", results.len(), t.elapsed());
    if passed != results.len() {
        std::process::exit(1);
    }
}
