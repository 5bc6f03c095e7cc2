//! Finite groups as dense Cayley tables.
//!
//! Elements are indices `0..n` with `0` the identity. Groups built from
//! permutations use a breadth-first enumeration from the identity, so the
//! element order depends only on the generator list.

mod classes;
mod perm;
mod pi;
mod quotient;
mod subgroup;

use std::collections::HashMap;
use std::sync::Arc;

pub use classes::{class_orbits, conjugacy_classes, ConjClass};
pub use perm::Permutation;
pub use pi::{
    hall_higman_check, hall_subgroup, is_p_solvable, is_pi_separable, is_solvable, o_pi,
    pi_series, prime_factors, sylow_subgroup, HallHigman, NormalSeries, PiSet, PiTag,
};
pub use quotient::{quotient_group, Quotient};
pub use subgroup::{all_subgroups, centralizer, normal_subgroups, normalizer, Subgroup};

use crate::error::{Error, Result};

/// Shared handle; subgroups, cocycles and representations all point back
/// at their group through one of these.
pub type GroupRef = Arc<FiniteGroup>;

pub const DEFAULT_ORDER_CAP: usize = 200;

/// Associativity is checked exhaustively up to this order.
const ASSOCIATIVITY_CHECK_LIMIT: usize = 256;

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<usize>,
    perms: Option<PermutationData>,
}

#[derive(Debug, Clone)]
struct PermutationData {
    points: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl FiniteGroup {
    /// Builds a group from a multiplication table. Element 0 must be the
    /// identity; the table must be a Latin square and associative.
    pub fn from_table(name: impl Into<String>, order: usize, mul: Vec<u32>) -> Result<Self> {
        if order == 0 || mul.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, found {}",
                order * order,
                mul.len()
            )));
        }
        if mul.iter().any(|&v| v as usize >= order) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        for a in 0..order {
            if mul[a] as usize != a || mul[a * order] as usize != a {
                return Err(Error::InvalidTable("element 0 is not the identity".into()));
            }
        }
        let mut inv = vec![u32::MAX; order];
        for a in 0..order {
            let mut seen = vec![false; order];
            for b in 0..order {
                let c = mul[a * order + b] as usize;
                if seen[c] {
                    return Err(Error::InvalidTable(format!("row {a} repeats {c}")));
                }
                seen[c] = true;
                if c == 0 {
                    inv[a] = b as u32;
                }
            }
        }
        if order <= ASSOCIATIVITY_CHECK_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    let ab = mul[a * order + b] as usize;
                    for c in 0..order {
                        let bc = mul[b * order + c] as usize;
                        if mul[ab * order + c] != mul[a * order + bc] {
                            return Err(Error::InvalidTable(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        }
        let mut group = FiniteGroup {
            name: name.into(),
            order,
            mul,
            inv,
            generators: Vec::new(),
            perms: None,
        };
        let all: Vec<usize> = (0..order).collect();
        group.generators = group.greedy_generators(&all);
        Ok(group)
    }

    /// Closure of permutation generators, capped at `cap` elements.
    pub fn from_permutations(
        name: impl Into<String>,
        points: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<Self> {
        for g in generators {
            if g.degree() != points {
                return Err(Error::NotPermutation(format!(
                    "generator acts on {} points, expected {points}",
                    g.degree()
                )));
            }
        }
        let identity = Permutation::identity(points);
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            for g in generators {
                let y = x.then(g);
                if !index.contains_key(&y) {
                    if elements.len() == cap {
                        return Err(Error::ClosureTooLarge { cap });
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
            head += 1;
        }
        let order = elements.len();
        let mut mul = vec![0u32; order * order];
        for (a, x) in elements.iter().enumerate() {
            for (b, y) in elements.iter().enumerate() {
                mul[a * order + b] = index[&x.then(y)] as u32;
            }
        }
        let mut group = Self::from_table(name, order, mul)?;
        let mut gen_idx: Vec<usize> = Vec::new();
        for g in generators {
            let i = index[g];
            if i != 0 && !gen_idx.contains(&i) {
                gen_idx.push(i);
            }
        }
        group.generators = gen_idx;
        group.perms = Some(PermutationData {
            points,
            generators: generators.to_vec(),
            elements,
        });
        Ok(group)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub const fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `x^g = g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> u64 {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| {
            self.generators
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    pub fn permutation_degree(&self) -> Option<usize> {
        self.perms.as_ref().map(|p| p.points)
    }

    pub fn permutation_generators(&self) -> Option<&[Permutation]> {
        self.perms.as_ref().map(|p| p.generators.as_slice())
    }

    pub fn element_permutation(&self, x: usize) -> Option<&Permutation> {
        self.perms.as_ref().map(|p| &p.elements[x])
    }

    /// Smallest subgroup containing `gens`, as a sorted element list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut elements = vec![0usize];
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head];
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    elements.push(y);
                }
            }
            head += 1;
        }
        elements.sort_unstable();
        elements
    }

    /// Greedy generating set for the subgroup spanned by `elements`,
    /// scanning in the given order and keeping each element that
    /// enlarges the current closure.
    pub fn greedy_generators(&self, elements: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut member = vec![false; self.order];
        member[0] = true;
        for &x in elements {
            if member[x] {
                continue;
            }
            gens.push(x);
            for y in self.closure(&gens) {
                member[y] = true;
            }
        }
        gens
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

/// Closure of permutation generators with the default name and cap.
pub fn build_group(points: usize, generators: &[Permutation]) -> Result<FiniteGroup> {
    FiniteGroup::from_permutations("G", points, generators, DEFAULT_ORDER_CAP)
}
