use std::sync::Arc;

use super::{FiniteGroup, GroupRef, Subgroup};
use crate::error::{Error, Result};

/// `G/N` with its projection and a section of coset representatives.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: GroupRef,
    /// Element of `G` to coset index.
    pub projection: Vec<usize>,
    /// Coset index to its smallest element in `G`.
    pub section: Vec<usize>,
    pub kernel: Subgroup,
}

impl Quotient {
    /// Preimage of a subgroup of the quotient.
    pub fn preimage(&self, sub: &Subgroup) -> Subgroup {
        let parent = self.kernel.parent();
        let e: Vec<usize> = (0..parent.order())
            .filter(|&g| sub.contains(self.projection[g]))
            .collect();
        Subgroup::from_elements(parent, &e).expect("preimage of a subgroup is a subgroup")
    }
}

/// Cosets are numbered by their smallest element, so the kernel is coset 0.
pub fn quotient_group(g: &GroupRef, n: &Subgroup) -> Result<Quotient> {
    if !Arc::ptr_eq(n.parent(), g) && n.parent().as_ref() != g.as_ref() {
        return Err(Error::NotSubgroup("subgroup of a different group".into()));
    }
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let order = g.order();
    let mut projection = vec![usize::MAX; order];
    let mut section = Vec::new();
    for x in 0..order {
        if projection[x] != usize::MAX {
            continue;
        }
        let c = section.len();
        section.push(x);
        for &k in n.elements() {
            projection[g.mul(x, k)] = c;
        }
    }
    let q = section.len();
    let mut mul = vec![0u32; q * q];
    for (a, &x) in section.iter().enumerate() {
        for (b, &y) in section.iter().enumerate() {
            mul[a * q + b] = projection[g.mul(x, y)] as u32;
        }
    }
    let name = format!("{}/N{}", g.name(), n.order());
    let group = FiniteGroup::from_table(name, q, mul)?;
    Ok(Quotient {
        group: Arc::new(group),
        projection,
        section,
        kernel: n.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, conjugacy_classes, Permutation};

    fn s4() -> GroupRef {
        Arc::new(
            build_group(
                4,
                &[
                    Permutation::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap(),
                    Permutation::from_cycles(4, &[&[1, 2]]).unwrap(),
                ],
            )
            .unwrap(),
        )
    }

    #[test]
    fn s4_mod_klein_is_s3() {
        let g = s4();
        let v4: Vec<usize> = (0..24)
            .filter(|&x| {
                let p = g.element_permutation(x).unwrap();
                x == 0 || (g.element_order(x) == 2 && (0..4).all(|i| p.apply(i) != i))
            })
            .collect();
        let v4 = Subgroup::from_elements(&g, &v4).unwrap();
        assert_eq!(v4.order(), 4);
        let q = quotient_group(&g, &v4).unwrap();
        assert_eq!(q.group.order(), 6);
        assert!(!q.group.is_abelian());
        assert_eq!(conjugacy_classes(&q.group).len(), 3);
        // projection is a homomorphism
        for x in 0..24 {
            for y in 0..24 {
                assert_eq!(
                    q.projection[g.mul(x, y)],
                    q.group.mul(q.projection[x], q.projection[y])
                );
            }
        }
    }

    #[test]
    fn trivial_kernel_gives_same_group() {
        let g = s4();
        let q = quotient_group(&g, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(q.group.table(), g.table());
    }

    #[test]
    fn non_normal_rejected() {
        let g = s4();
        let h = Subgroup::generated(&g, &[2]);
        assert!(!h.is_normal());
        assert!(matches!(quotient_group(&g, &h), Err(Error::NotNormal)));
    }
}
