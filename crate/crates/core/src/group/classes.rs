use super::{FiniteGroup, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    pub representative: usize,
    /// Sorted.
    pub members: Vec<usize>,
    pub centralizer_order: usize,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Conjugacy classes ordered by representative, the representative being
/// the smallest index in each class.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<ConjClass> {
    let all: Vec<usize> = (0..g.order()).collect();
    class_orbits(g, &all, &all)
}

/// Orbits of the conjugation action of `acting` on the union-of-classes
/// set `set`. Centralizer orders are taken inside `acting`.
pub fn class_orbits(g: &FiniteGroup, set: &[usize], acting: &[usize]) -> Vec<ConjClass> {
    let mut seen = vec![false; g.order()];
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    let mut classes = Vec::new();
    for &x in &sorted {
        if seen[x] {
            continue;
        }
        let mut members = Vec::new();
        for &t in acting {
            let y = g.conj(x, t);
            if !seen[y] {
                seen[y] = true;
                members.push(y);
            }
        }
        members.sort_unstable();
        classes.push(ConjClass {
            representative: x,
            centralizer_order: acting.len() / members.len(),
            members,
        });
    }
    classes
}

impl Subgroup {
    /// Classes of the subgroup under its own conjugation.
    pub fn classes(&self) -> Vec<ConjClass> {
        class_orbits(self.parent(), self.elements(), self.elements())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, Permutation};

    #[test]
    fn s3_class_sizes() {
        let g = build_group(
            3,
            &[
                Permutation::from_cycles(3, &[&[1, 2]]).unwrap(),
                Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        let sizes: Vec<usize> = conjugacy_classes(&g).iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
    }

    #[test]
    fn trivial_group_has_one_class() {
        let g = build_group(1, &[]).unwrap();
        assert_eq!(conjugacy_classes(&g).len(), 1);
    }

    #[test]
    fn a5_class_sizes() {
        let g = build_group(
            5,
            &[
                Permutation::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap(),
                Permutation::from_cycles(5, &[&[1, 2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        let classes = conjugacy_classes(&g);
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.size()).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 60);
        for c in &classes {
            assert_eq!(c.size() * c.centralizer_order, 60);
        }
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
    }
}
