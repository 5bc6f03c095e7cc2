//! Randomized invariants over the small catalog groups.

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use projrep::catalog::catalog;
use projrep::cohomology::{Cochain1, SchurMultiplier};
use projrep::config::Tolerances;
use projrep::group::{all_subgroups, Subgroup};
use projrep::linalg::{max_abs_diff, CVec};
use projrep::projrep::{
    hom_dimension, induce_rep, irreducible_reps, irreducibles_on, restrict_rep, tensor_reps,
};
use projrep::twisted::{c_regular_classes, wedderburn, TwistedAlgebra};

/// Multipliers of the catalog groups of order at most 24.
fn small() -> &'static [Arc<SchurMultiplier>] {
    static CELL: OnceLock<Vec<Arc<SchurMultiplier>>> = OnceLock::new();
    CELL.get_or_init(|| {
        catalog()
            .iter()
            .filter(|e| e.order <= 24)
            .map(|e| {
                let g = e.build().unwrap();
                Arc::new(e.multiplier(&g, 48).unwrap())
            })
            .collect()
    })
}

fn pick(index: usize, coclass: usize) -> (Arc<SchurMultiplier>, usize) {
    let all = small();
    let m = all[index % all.len()].clone();
    let k = coclass % m.num_coclasses();
    (m, k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coboundaries_keep_degrees_and_regular_classes(
        index in 0usize..1000, coclass in 0usize..16, seed in any::<u64>()
    ) {
        let (m, k) = pick(index, coclass);
        let c = m.coclass_by_index(k).unwrap();
        let base = c.representative();
        let zeta = Cochain1::random(m.group(), base.modulus(), &mut ChaCha8Rng::seed_from_u64(seed));
        let moved = base.add(&zeta.coboundary()).unwrap();
        prop_assert!(moved.is_cocycle());
        prop_assert_eq!(m.classify(&moved).unwrap(), c.exponents().to_vec());

        let tol = Tolerances::default();
        let a = TwistedAlgebra::from_cocycle(base, tol);
        let b = TwistedAlgebra::from_cocycle(&moved, tol);
        prop_assert_eq!(c_regular_classes(&a).unwrap().flags(), c_regular_classes(&b).unwrap().flags());
        prop_assert_eq!(wedderburn(&a, seed).unwrap().degrees(), wedderburn(&b, seed).unwrap().degrees());
    }

    #[test]
    fn coclass_addition_matches_the_exponents(
        index in 0usize..1000, i in 0usize..16, j in 0usize..16
    ) {
        let (m, a) = pick(index, i);
        let b = j % m.num_coclasses();
        let ca = m.coclass_by_index(a).unwrap();
        let cb = m.coclass_by_index(b).unwrap();
        let sum = ca.representative().add(cb.representative()).unwrap();
        prop_assert!(sum.is_cocycle());
        prop_assert_eq!(m.classify(&sum).unwrap(), ca.add(&cb).exponents().to_vec());
    }

    #[test]
    fn twisted_multiplication_is_associative(
        index in 0usize..1000, coclass in 0usize..16, seed in any::<u64>()
    ) {
        let (m, k) = pick(index, coclass);
        let c = m.coclass_by_index(k).unwrap();
        let alg = TwistedAlgebra::from_cocycle(c.representative(), Tolerances::default());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = alg.dim();
        let mut vec = || CVec::from_fn(n, |_, _| projrep::linalg::random_complex(&mut rng));
        let (x, y, z) = (vec(), vec(), vec());
        let left = alg.multiply(&alg.multiply(&x, &y), &z);
        let right = alg.multiply(&x, &alg.multiply(&y, &z));
        prop_assert!((left - right).camax() < 1e-9 * (n * n) as f64);
    }

    #[test]
    fn induced_irreducibles_are_representations(
        index in 0usize..1000, coclass in 0usize..16, sub in 0usize..1000, which in 0usize..64
    ) {
        let (m, k) = pick(index, coclass);
        let g = m.group();
        let table = Arc::new(m.coclass_by_index(k).unwrap().representative().to_complex());
        let subgroups = all_subgroups(g);
        let h = &subgroups[sub % subgroups.len()];
        let psis = irreducibles_on(h, &table, 1e-12, Tolerances::default(), 3).unwrap();
        let psi = &psis[which % psis.len()];
        let whole = Subgroup::whole(g);
        let ind = induce_rep(psi, &whole).unwrap();
        prop_assert_eq!(ind.degree(), psi.degree() * g.order() / h.order());
        prop_assert!(ind.full_residual() < 1e-8);
        // Frobenius reciprocity against every irreducible of G
        let alg = TwistedAlgebra::from_cocycle(m.coclass_by_index(k).unwrap().representative(), Tolerances::default());
        for x in irreducible_reps(&alg, 3).unwrap() {
            let up = hom_dimension(&ind, &x).unwrap();
            let down = hom_dimension(psi, &restrict_rep(&x, h).unwrap()).unwrap();
            prop_assert!((up - down).abs() < 1e-6);
            prop_assert!((up - up.round()).abs() < 1e-6 && up > -1e-6);
        }
    }

    #[test]
    fn tensor_products_multiply_degrees_and_tables(
        index in 0usize..1000, i in 0usize..16, j in 0usize..16, a in 0usize..64, b in 0usize..64
    ) {
        let (m, ci) = pick(index, i);
        let cj = j % m.num_coclasses();
        let tol = Tolerances::default();
        let ra = irreducible_reps(&TwistedAlgebra::from_cocycle(m.coclass_by_index(ci).unwrap().representative(), tol), 1).unwrap();
        let rb = irreducible_reps(&TwistedAlgebra::from_cocycle(m.coclass_by_index(cj).unwrap().representative(), tol), 1).unwrap();
        let (x, y) = (&ra[a % ra.len()], &rb[b % rb.len()]);
        let t = tensor_reps(x, y).unwrap();
        prop_assert_eq!(t.degree(), x.degree() * y.degree());
        prop_assert!(t.full_residual() < 1e-8);
        for s in 0..m.group().order() {
            let expect = projrep::linalg::kron(x.matrix(s), y.matrix(s));
            prop_assert!(max_abs_diff(t.matrix(s), &expect) < 1e-12);
        }
    }
}
