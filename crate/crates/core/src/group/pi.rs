//! Sets of primes and the π-separability toolkit.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{centralizer, conjugacy_classes, normalizer, quotient_group, GroupRef, Subgroup};
use crate::error::{Error, Result};

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PiSet(BTreeSet<u64>);

impl PiSet {
    pub fn new(primes: impl IntoIterator<Item = u64>) -> Self {
        PiSet(primes.into_iter().collect())
    }

    pub fn single(p: u64) -> Self {
        Self::new([p])
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.contains(&p)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// π-part of `n`.
    pub fn part(&self, mut n: u64) -> u64 {
        let mut part = 1;
        for p in prime_factors(n) {
            while n.is_multiple_of(p) {
                n /= p;
                if self.contains(p) {
                    part *= p;
                }
            }
        }
        part
    }

    /// π′-part of `n`.
    pub fn complement_part(&self, n: u64) -> u64 {
        n / self.part(n)
    }

    pub fn is_pi_number(&self, n: u64) -> bool {
        self.part(n) == n
    }

    pub fn is_pi_prime_number(&self, n: u64) -> bool {
        self.part(n) == 1
    }

    /// π′ relative to the primes dividing `n`.
    pub fn complement_in(&self, n: u64) -> PiSet {
        PiSet(
            prime_factors(n)
                .into_iter()
                .filter(|p| !self.contains(*p))
                .collect(),
        )
    }

    pub fn is_subset(&self, other: &PiSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Π(n).
    pub fn of(n: u64) -> Self {
        Self::new(prime_factors(n))
    }

    pub fn union(&self, other: &PiSet) -> PiSet {
        PiSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &PiSet) -> PiSet {
        PiSet(self.0.intersection(&other.0).copied().collect())
    }
}

impl fmt::Display for PiSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

/// Largest normal π-subgroup.
///
/// Scans conjugacy classes of π-elements in representative order and adds
/// a class whenever the normal subgroup it generates together with the
/// current one is still a π-group. A class lies in `O_π` exactly when that
/// test succeeds, so one pass suffices.
pub fn o_pi(g: &GroupRef, pi: &PiSet) -> Subgroup {
    let mut current = Subgroup::trivial(g);
    for class in conjugacy_classes(g) {
        let x = class.representative;
        if x == 0 || current.contains(x) || !pi.is_pi_number(g.element_order(x)) {
            continue;
        }
        let mut gens = current.generators();
        gens.extend(class.members.iter().copied());
        let candidate = Subgroup::generated(g, &gens);
        if pi.is_pi_number(candidate.order() as u64) {
            current = candidate;
        }
    }
    current
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PiTag {
    Pi,
    PiPrime,
}

/// `1 = N₀ ≤ N₁ ≤ …` with `N₁ = O_π`, `N₂ = O_{ππ′}`, … Factor `i`
/// (between `terms[i-1]` and `terms[i]`) carries `tags[i-1]`.
#[derive(Debug, Clone)]
pub struct NormalSeries {
    pub terms: Vec<Subgroup>,
    pub tags: Vec<PiTag>,
    pub pi: PiSet,
    /// The series reached the whole group.
    pub separable: bool,
}

impl NormalSeries {
    /// Length `l` of `1 = N₀ ≤ … ≤ N_l`.
    pub fn len(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.order()).collect()
    }

    /// Arbitrary normal series with alternating tags starting at `π`.
    pub fn from_terms(terms: Vec<Subgroup>, pi: PiSet) -> Self {
        let tags = (1..terms.len())
            .map(|i| if i % 2 == 1 { PiTag::Pi } else { PiTag::PiPrime })
            .collect();
        let separable = terms.last().map(|t| t.is_whole()).unwrap_or(false);
        NormalSeries {
            terms,
            tags,
            pi,
            separable,
        }
    }
}

/// The π-series, iterating `O_π` and `O_π′` on quotients. Trivial steps
/// are kept so odd factors are always π-factors. Stops at `G`, or after
/// two consecutive trivial steps (not π-separable).
pub fn pi_series(g: &GroupRef, pi: &PiSet) -> NormalSeries {
    let pi_prime = pi.complement_in(g.order() as u64);
    let mut terms = vec![Subgroup::trivial(g)];
    let mut tags = Vec::new();
    let mut stalled = 0;
    let mut tag = PiTag::Pi;
    while !terms.last().unwrap().is_whole() && stalled < 2 {
        let current = terms.last().unwrap().clone();
        let q = quotient_group(g, &current).expect("series terms are normal");
        let set = match tag {
            PiTag::Pi => pi,
            PiTag::PiPrime => &pi_prime,
        };
        let top = o_pi(&q.group, set);
        let next = q.preimage(&top);
        if next.order() == current.order() {
            stalled += 1;
        } else {
            stalled = 0;
        }
        terms.push(next);
        tags.push(tag);
        tag = match tag {
            PiTag::Pi => PiTag::PiPrime,
            PiTag::PiPrime => PiTag::Pi,
        };
    }
    let separable = terms.last().unwrap().is_whole();
    if !separable {
        // drop the trailing stalled steps
        while terms.len() > 1 && terms[terms.len() - 1].order() == terms[terms.len() - 2].order()
        {
            terms.pop();
            tags.pop();
        }
    }
    NormalSeries {
        terms,
        tags,
        pi: pi.clone(),
        separable,
    }
}

pub fn is_pi_separable(g: &GroupRef, pi: &PiSet) -> bool {
    pi_series(g, pi).separable
}

pub fn is_p_solvable(g: &GroupRef, p: u64) -> bool {
    is_pi_separable(g, &PiSet::single(p))
}

pub fn is_solvable(g: &GroupRef) -> bool {
    prime_factors(g.order() as u64)
        .into_iter()
        .all(|p| is_p_solvable(g, p))
}

/// Sylow `p`-subgroup by normalizer climbing: while `P` is not Sylow,
/// adjoin the first `p`-element of `N_G(P)` outside `P`.
pub fn sylow_subgroup(g: &GroupRef, p: u64) -> Subgroup {
    let target = PiSet::single(p).part(g.order() as u64) as usize;
    let is_p_power = |n: u64| PiSet::single(p).is_pi_number(n);
    let mut current = Subgroup::trivial(g);
    while current.order() < target {
        let n = normalizer(g, &current);
        let step = n
            .elements()
            .iter()
            .copied()
            .find(|&x| !current.contains(x) && is_p_power(g.element_order(x)));
        let next = match step {
            Some(x) => {
                let mut gens = current.generators();
                gens.push(x);
                Some(Subgroup::generated(g, &gens))
            }
            None => None,
        };
        current = match next {
            Some(s) if is_p_power(s.order() as u64) => s,
            _ => extend_exhaustively(g, &current, &PiSet::single(p))
                .expect("a proper p-subgroup lies in a larger p-subgroup"),
        };
    }
    current
}

/// Adjoin any element of `G` keeping the result a π-group.
fn extend_exhaustively(g: &GroupRef, h: &Subgroup, pi: &PiSet) -> Option<Subgroup> {
    (0..g.order())
        .filter(|&x| !h.contains(x) && pi.is_pi_number(g.element_order(x)))
        .find_map(|x| {
            let mut gens = h.generators();
            gens.push(x);
            let s = Subgroup::generated(g, &gens);
            pi.is_pi_number(s.order() as u64).then_some(s)
        })
}

/// Hall π-subgroup of a π-separable group.
///
/// In a π-separable group every π-subgroup lies in a Hall π-subgroup, so a
/// single greedy pass over the π-elements (in index order) that keeps any
/// element leaving the generated subgroup a π-group ends at a Hall
/// π-subgroup.
pub fn hall_subgroup(g: &GroupRef, pi: &PiSet) -> Result<Subgroup> {
    if !is_pi_separable(g, pi) {
        return Err(Error::NotPiSeparable(pi.to_string()));
    }
    let target = pi.part(g.order() as u64) as usize;
    let mut current = Subgroup::trivial(g);
    for x in 0..g.order() {
        if current.order() == target {
            break;
        }
        if current.contains(x) || !pi.is_pi_number(g.element_order(x)) {
            continue;
        }
        let mut gens = current.generators();
        gens.push(x);
        let candidate = Subgroup::generated(g, &gens);
        if pi.is_pi_number(candidate.order() as u64) {
            current = candidate;
        }
    }
    if current.order() != target {
        return Err(Error::ComplementSearchExhausted {
            order: g.order() / current.order(),
        });
    }
    Ok(current)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HallHigman {
    Holds,
    Fails,
    /// Not p-solvable, or `O_p′(G) ≠ 1`.
    Vacuous,
}

impl HallHigman {
    pub fn passed(self) -> bool {
        self != HallHigman::Fails
    }
}

/// `C_G(O_p(G)) ≤ O_p(G)` for p-solvable `G` with `O_p′(G) = 1`.
pub fn hall_higman_check(g: &GroupRef, p: u64) -> HallHigman {
    let pi = PiSet::single(p);
    if !is_pi_separable(g, &pi) {
        return HallHigman::Vacuous;
    }
    let p_prime = pi.complement_in(g.order() as u64);
    if !o_pi(g, &p_prime).is_trivial() {
        return HallHigman::Vacuous;
    }
    let op = o_pi(g, &pi);
    let gens = op.generators();
    let mut cent: Vec<usize> = (0..g.order()).collect();
    for x in gens {
        let c = centralizer(g, x);
        cent.retain(|&y| c.contains(y));
    }
    if cent.iter().all(|&y| op.contains(y)) {
        HallHigman::Holds
    } else {
        HallHigman::Fails
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, Permutation};
    use std::sync::Arc;

    fn perm_group(n: usize, gens: &[&[&[usize]]]) -> GroupRef {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|c| Permutation::from_cycles(n, c).unwrap())
            .collect();
        Arc::new(build_group(n, &gens).unwrap())
    }

    fn s3() -> GroupRef {
        perm_group(3, &[&[&[1, 2]], &[&[1, 2, 3]]])
    }
    fn s4() -> GroupRef {
        perm_group(4, &[&[&[1, 2, 3, 4]], &[&[1, 2]]])
    }
    fn a5() -> GroupRef {
        perm_group(5, &[&[&[1, 2, 3, 4, 5]], &[&[1, 2, 3]]])
    }
    fn c6() -> GroupRef {
        perm_group(6, &[&[&[1, 2, 3, 4, 5, 6]]])
    }

    #[test]
    fn prime_parts() {
        assert_eq!(prime_factors(60), vec![2, 3, 5]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        let pi = PiSet::new([2, 3]);
        assert_eq!(pi.part(60), 12);
        assert_eq!(pi.complement_part(60), 5);
        assert_eq!(pi.complement_in(60), PiSet::single(5));
    }

    #[test]
    fn sylow_orders() {
        let g = s4();
        let p = sylow_subgroup(&g, 2);
        assert_eq!(p.order(), 8);
        assert!(!p.is_abelian());
        assert_eq!(sylow_subgroup(&s3(), 5).order(), 1);
        let p5 = sylow_subgroup(&a5(), 5);
        assert_eq!(p5.order(), 5);
        for p in [2, 3, 5] {
            let expected = PiSet::single(p).part(60) as usize;
            assert_eq!(sylow_subgroup(&a5(), p).order(), expected);
        }
    }

    #[test]
    fn o_pi_examples() {
        let g = s4();
        let v4 = o_pi(&g, &PiSet::single(2));
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian());
        assert!(o_pi(&s3(), &PiSet::single(2)).is_trivial());
        assert_eq!(o_pi(&c6(), &PiSet::new([2, 3])).order(), 6);
    }

    #[test]
    fn pi_series_examples() {
        let s = pi_series(&s4(), &PiSet::single(2));
        assert!(s.separable);
        assert_eq!(s.orders(), vec![1, 4, 12, 24]);

        let s = pi_series(&a5(), &PiSet::single(2));
        assert!(!s.separable);
        assert_eq!(s.orders(), vec![1]);

        let s = pi_series(&c6(), &PiSet::single(2));
        assert!(s.separable);
        assert_eq!(s.orders(), vec![1, 2, 6]);
    }

    #[test]
    fn hall_examples() {
        assert_eq!(hall_subgroup(&s4(), &PiSet::new([2, 3])).unwrap().order(), 24);
        let h = hall_subgroup(&s3(), &PiSet::single(3)).unwrap();
        assert_eq!(h.order(), 3);
        assert!(h.is_normal());
        assert_eq!(hall_subgroup(&s4(), &PiSet::single(3)).unwrap().order(), 3);
        assert!(matches!(
            hall_subgroup(&a5(), &PiSet::new([2, 3])),
            Err(Error::NotPiSeparable(_))
        ));
    }

    #[test]
    fn hall_higman_examples() {
        assert_eq!(hall_higman_check(&s4(), 2), HallHigman::Holds);
        assert_eq!(hall_higman_check(&c6(), 2), HallHigman::Vacuous);
        assert_eq!(hall_higman_check(&a5(), 2), HallHigman::Vacuous);
    }

    #[test]
    fn solvability() {
        assert!(is_solvable(&s4()));
        assert!(!is_solvable(&a5()));
        assert!(!is_p_solvable(&a5(), 5));
    }
}
