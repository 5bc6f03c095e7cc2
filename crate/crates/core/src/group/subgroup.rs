use std::fmt;
use std::sync::Arc;

use super::{FiniteGroup, GroupRef};
use crate::error::{Error, Result};

const ABSENT: u32 = u32::MAX;

/// A subgroup of a parent group, stored as its sorted element indices.
#[derive(Clone)]
pub struct Subgroup {
    parent: GroupRef,
    elements: Vec<usize>,
    position: Vec<u32>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("parent", &self.parent.name())
            .field("order", &self.elements.len())
            .finish()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    fn from_sorted(parent: GroupRef, elements: Vec<usize>) -> Self {
        let mut position = vec![ABSENT; parent.order()];
        for (i, &x) in elements.iter().enumerate() {
            position[x] = i as u32;
        }
        Subgroup {
            parent,
            elements,
            position,
        }
    }

    /// Validates closure; the element list need not be sorted.
    pub fn from_elements(parent: &GroupRef, elements: &[usize]) -> Result<Self> {
        let mut e = elements.to_vec();
        e.sort_unstable();
        e.dedup();
        if e.first() != Some(&0) {
            return Err(Error::NotSubgroup("missing identity".into()));
        }
        if e.iter().any(|&x| x >= parent.order()) {
            return Err(Error::NotSubgroup("index out of range".into()));
        }
        let s = Self::from_sorted(parent.clone(), e);
        for &a in &s.elements {
            if !s.contains(parent.inv(a)) {
                return Err(Error::NotSubgroup("not closed under inverses".into()));
            }
            for &b in &s.elements {
                if !s.contains(parent.mul(a, b)) {
                    return Err(Error::NotSubgroup("not closed under products".into()));
                }
            }
        }
        Ok(s)
    }

    pub fn generated(parent: &GroupRef, gens: &[usize]) -> Self {
        Self::from_sorted(parent.clone(), parent.closure(gens))
    }

    pub fn trivial(parent: &GroupRef) -> Self {
        Self::from_sorted(parent.clone(), vec![0])
    }

    pub fn whole(parent: &GroupRef) -> Self {
        Self::from_sorted(parent.clone(), (0..parent.order()).collect())
    }

    pub fn parent(&self) -> &GroupRef {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.position[x] != ABSENT
    }

    /// Position of an ambient element inside the sorted element list.
    #[inline]
    pub fn position(&self, x: usize) -> Option<usize> {
        match self.position[x] {
            ABSENT => None,
            p => Some(p as usize),
        }
    }

    pub fn index_in_parent(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn generators(&self) -> Vec<usize> {
        self.parent.greedy_generators(&self.elements)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        let gens = self.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// Normal in the whole parent group.
    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        g.generators()
            .iter()
            .all(|&t| self.elements.iter().all(|&x| self.contains(g.conj(x, t))))
    }

    /// Normalized by every element of `by`.
    pub fn is_normalized_by(&self, by: &Subgroup) -> bool {
        let g = &self.parent;
        by.generators()
            .iter()
            .all(|&t| self.elements.iter().all(|&x| self.contains(g.conj(x, t))))
    }

    /// Centralizes every element of `other`.
    pub fn centralizes(&self, other: &Subgroup) -> bool {
        let g = &self.parent;
        let a = self.generators();
        let b = other.generators();
        a.iter()
            .all(|&x| b.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let e = self
            .elements
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        Self::from_sorted(self.parent.clone(), e)
    }

    /// Subgroup generated by both.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut gens = self.generators();
        gens.extend(other.generators());
        Self::generated(&self.parent, &gens)
    }

    /// `g⁻¹ H g`.
    pub fn conjugate(&self, g: usize) -> Subgroup {
        let p = &self.parent;
        let mut e: Vec<usize> = self.elements.iter().map(|&x| p.conj(x, g)).collect();
        e.sort_unstable();
        Self::from_sorted(p.clone(), e)
    }

    /// Left coset representatives `t` with `G = ⋃ tH`, each the smallest
    /// element of its coset. The identity comes first.
    pub fn left_transversal(&self, within: &Subgroup) -> Vec<usize> {
        let g = &self.parent;
        let mut covered = vec![false; g.order()];
        let mut reps = Vec::new();
        for &t in within.elements() {
            if covered[t] {
                continue;
            }
            reps.push(t);
            for &h in &self.elements {
                covered[g.mul(t, h)] = true;
            }
        }
        reps
    }

    /// Standalone copy of the subgroup. Local element `i` is
    /// `embedding[i]` in the parent, so local order is parent order.
    pub fn to_group(&self, name: impl Into<String>) -> (FiniteGroup, Vec<usize>) {
        let n = self.order();
        let mut mul = vec![0u32; n * n];
        for (i, &a) in self.elements.iter().enumerate() {
            for (j, &b) in self.elements.iter().enumerate() {
                mul[i * n + j] = self.position[self.parent.mul(a, b)];
            }
        }
        let group = FiniteGroup::from_table(name, n, mul)
            .expect("subgroup table of a valid group is a group");
        (group, self.elements.clone())
    }

    /// Re-home this subgroup onto another `Arc` of an identical group.
    pub fn rebase(&self, parent: &GroupRef) -> Subgroup {
        assert_eq!(parent.order(), self.parent.order());
        Self::from_sorted(parent.clone(), self.elements.clone())
    }
}

pub fn centralizer(g: &GroupRef, x: usize) -> Subgroup {
    let e = (0..g.order())
        .filter(|&y| g.mul(x, y) == g.mul(y, x))
        .collect();
    Subgroup::from_sorted(g.clone(), e)
}

pub fn normalizer(g: &GroupRef, h: &Subgroup) -> Subgroup {
    let gens = h.generators();
    let e = (0..g.order())
        .filter(|&t| gens.iter().all(|&x| h.contains(g.conj(x, t))))
        .collect();
    Subgroup::from_sorted(g.clone(), e)
}

/// Closure of `seeds` under joins, sorted by order then elements.
fn join_closure(g: &GroupRef, seeds: Vec<Subgroup>) -> Vec<Subgroup> {
    let mut found = vec![Subgroup::trivial(g)];
    let mut frontier = found.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for s in &seeds {
                let j = f.join(s);
                if !found.contains(&j) {
                    found.push(j.clone());
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    found
}

/// Every subgroup, as joins of cyclic subgroups.
pub fn all_subgroups(g: &GroupRef) -> Vec<Subgroup> {
    let mut cyclic: Vec<Subgroup> = Vec::new();
    for x in 1..g.order() {
        let c = Subgroup::generated(g, &[x]);
        if !cyclic.contains(&c) {
            cyclic.push(c);
        }
    }
    join_closure(g, cyclic)
}

/// Every normal subgroup, as joins of normal closures of classes.
pub fn normal_subgroups(g: &GroupRef) -> Vec<Subgroup> {
    let mut closures: Vec<Subgroup> = Vec::new();
    for cl in super::conjugacy_classes(g) {
        if cl.representative == 0 {
            continue;
        }
        let c = Subgroup::generated(g, &cl.members);
        if !closures.contains(&c) {
            closures.push(c);
        }
    }
    join_closure(g, closures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, Permutation};

    fn s3() -> GroupRef {
        let a = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        Arc::new(build_group(3, &[a, b]).unwrap())
    }

    #[test]
    fn centralizer_examples() {
        let g = s3();
        assert_eq!(centralizer(&g, 0).order(), 6);
        // element 1 is the transposition
        assert_eq!(g.element_order(1), 2);
        assert_eq!(centralizer(&g, 1).order(), 2);
        let c4 = Arc::new(
            build_group(4, &[Permutation::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap()]).unwrap(),
        );
        for x in 0..4 {
            assert_eq!(centralizer(&c4, x).order(), 4);
        }
    }

    #[test]
    fn from_elements_checks_closure() {
        let g = s3();
        assert!(Subgroup::from_elements(&g, &[0, 1]).is_ok());
        assert!(Subgroup::from_elements(&g, &[0, 1, 2]).is_err());
        assert!(Subgroup::from_elements(&g, &[1]).is_err());
    }

    #[test]
    fn normality_and_transversals() {
        let g = s3();
        let c3 = Subgroup::generated(&g, &[2]);
        assert_eq!(c3.order(), 3);
        assert!(c3.is_normal());
        let c2 = Subgroup::generated(&g, &[1]);
        assert!(!c2.is_normal());
        assert_eq!(normalizer(&g, &c2).order(), 2);
        let t = c2.left_transversal(&Subgroup::whole(&g));
        assert_eq!(t.len(), 3);
        assert_eq!(t[0], 0);
    }

    #[test]
    fn standalone_copy_keeps_order() {
        let g = s3();
        let c3 = Subgroup::generated(&g, &[2]);
        let (h, emb) = c3.to_group("C3");
        assert_eq!(h.order(), 3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(emb[h.mul(i, j)], g.mul(emb[i], emb[j]));
            }
        }
    }
}
