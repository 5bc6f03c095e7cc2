//! The Schur multiplier `H²(G, ℂ*)` with an explicit basis of cocycles.
//!
//! Normalized cocycles over `ℤ/m` are coordinatized by their values
//! `α(x, s)` on generators `s`; every other value follows along a
//! breadth-first spanning tree of the Cayley graph from
//! `α(x, ps) = α(x, p) + α(xp, s) − α(p, s)`. The cocycle identity then
//! reduces to the non-tree edges. Quotienting by coboundaries and by the
//! Bockstein image of `Hom(G, ℤ/m)` gives `H²(G, ℂ*)` once `m` is a
//! multiple of `|G|`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::cocycle::Cocycle;
use super::zmod::{crt, diagonalize, gcd, inv_mod, lcm, mat_vec, Diagonalized, Mat};
use crate::error::{Error, Result};
use crate::group::{prime_factors, GroupRef, PiSet, Quotient, Subgroup};

pub const DEFAULT_H2_CAP: usize = 48;

/// Spanning tree of the right Cayley graph over the generators.
struct Tree {
    gens: Vec<usize>,
    /// BFS order, identity first.
    order: Vec<usize>,
    /// `parent[y] = (p, j)` with `y = p·gens[j]`.
    parent: Vec<Option<(usize, usize)>>,
}

impl Tree {
    fn new(g: &GroupRef, gens: Vec<usize>) -> Self {
        let n = g.order();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut order = vec![0];
        let mut head = 0;
        while head < order.len() {
            let p = order[head];
            head += 1;
            for (j, &s) in gens.iter().enumerate() {
                let y = g.mul(p, s);
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((p, j));
                    order.push(y);
                }
            }
        }
        debug_assert_eq!(order.len(), n);
        Tree {
            gens,
            order,
            parent,
        }
    }

    fn is_tree_edge(&self, g: &GroupRef, p: usize, j: usize) -> bool {
        self.parent[g.mul(p, self.gens[j])] == Some((p, j))
    }
}

/// Exact classification data.
#[derive(Clone)]
struct Solver {
    gens: Vec<usize>,
    /// `Q⁻¹` rows for the kept kernel coordinates, with their orders.
    q_inv_rows: Vec<Vec<u64>>,
    kernel_orders: Vec<u64>,
    /// Relation transform `P` and cyclic factor orders (kept ones only).
    p: Mat,
    cyclic: Vec<(usize, u64)>,
    /// For each invariant factor, its components `(prime power, cyclic
    /// factor, CRT coefficient)`.
    components: Vec<Vec<(u64, usize, u64)>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MultiplierSource {
    /// Computed from the cocycle identity.
    Exact,
    /// Declared from a central extension; classification is numeric.
    Cover,
}

#[derive(Clone)]
pub struct SchurMultiplier {
    group: GroupRef,
    modulus: u64,
    invariants: Vec<u64>,
    basis: Vec<Cocycle>,
    source: MultiplierSource,
    solver: Option<Solver>,
}

impl fmt::Debug for SchurMultiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SchurMultiplier")
            .field("group", &self.group.name())
            .field("modulus", &self.modulus)
            .field("invariants", &self.invariants)
            .field("source", &self.source)
            .finish()
    }
}

pub fn schur_multiplier(g: &GroupRef) -> Result<SchurMultiplier> {
    schur_multiplier_capped(g, DEFAULT_H2_CAP)
}

pub fn schur_multiplier_capped(g: &GroupRef, cap: usize) -> Result<SchurMultiplier> {
    if g.order() > cap {
        return Err(Error::GroupTooLargeForH2 {
            order: g.order(),
            cap,
        });
    }
    Ok(SchurMultiplier::exact(g, g.order() as u64))
}

impl SchurMultiplier {
    /// Exact computation with values in `ℤ/modulus`; `modulus` must be a
    /// multiple of `|G|`.
    pub fn exact(g: &GroupRef, modulus: u64) -> Self {
        assert!(
            modulus.is_multiple_of(g.order() as u64),
            "modulus must be a multiple of the group order"
        );
        let n = g.order();
        let m = modulus;
        if n == 1 {
            return SchurMultiplier {
                group: g.clone(),
                modulus: m,
                invariants: vec![],
                basis: vec![],
                source: MultiplierSource::Exact,
                solver: Some(Solver {
                    gens: vec![],
                    q_inv_rows: vec![],
                    kernel_orders: vec![],
                    p: vec![],
                    cyclic: vec![],
                    components: vec![],
                }),
            };
        }
        let tree = Tree::new(g, g.generators().to_vec());
        let k = tree.gens.len();
        let unknowns = (n - 1) * k;
        let coord = |x: usize, j: usize| (x - 1) * k + j;

        // forms[(x*n + y)*U ..] = α(x, y) as a linear form in u
        let mut forms = vec![0u64; n * n * unknowns];
        let add_unit = |v: &mut [u64], x: usize, j: usize, sign: u64| {
            if x != 0 {
                let c = coord(x, j);
                v[c] = (v[c] + sign) % m;
            }
        };
        for &y in tree.order.iter().skip(1) {
            let (p, j) = tree.parent[y].unwrap();
            for x in 1..n {
                let xp = g.mul(x, p);
                let mut v: Vec<u64> = forms[(x * n + p) * unknowns..(x * n + p + 1) * unknowns].to_vec();
                add_unit(&mut v, xp, j, 1);
                add_unit(&mut v, p, j, m - 1);
                forms[(x * n + y) * unknowns..(x * n + y + 1) * unknowns].copy_from_slice(&v);
            }
        }
        let form = |x: usize, y: usize| &forms[(x * n + y) * unknowns..(x * n + y + 1) * unknowns];

        // constraints from the non-tree edges
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for p in 0..n {
            for (j, &s) in tree.gens.iter().enumerate() {
                if tree.is_tree_edge(g, p, j) {
                    continue;
                }
                let ps = g.mul(p, s);
                for x in 1..n {
                    let xp = g.mul(x, p);
                    let mut v: Vec<u64> = form(x, p)
                        .iter()
                        .zip(form(x, ps))
                        .map(|(&a, &b)| (a + m - b) % m)
                        .collect();
                    add_unit(&mut v, xp, j, 1);
                    add_unit(&mut v, p, j, m - 1);
                    if v.iter().any(|&e| e != 0) {
                        rows.push(v);
                    }
                }
            }
        }
        let z2 = diagonalize(&rows, unknowns, m, false);
        let kernel_orders = z2.kernel_orders();
        let kept: Vec<usize> = (0..unknowns).filter(|&i| kernel_orders[i] > 1).collect();

        // boundary generators in u-coordinates
        let mut boundaries: Vec<Vec<u64>> = Vec::new();
        for z in 1..n {
            let mut u = vec![0u64; unknowns];
            for x in 1..n {
                for (j, &s) in tree.gens.iter().enumerate() {
                    let v = (x == z) as u64 + (s == z) as u64 + m - (g.mul(x, s) == z) as u64;
                    u[coord(x, j)] = v % m;
                }
            }
            boundaries.push(u);
        }
        for lambda in homomorphisms(g, &tree, m) {
            let mut u = vec![0u64; unknowns];
            for x in 1..n {
                for (j, &s) in tree.gens.iter().enumerate() {
                    let v = lambda[x] + lambda[s] - lambda[g.mul(x, s)];
                    debug_assert!(v == 0 || v == m);
                    u[coord(x, j)] = v / m;
                }
            }
            boundaries.push(u);
        }

        let to_t = |z2: &Diagonalized, u: &[u64]| -> Vec<u64> {
            let w = z2.to_diagonal_coords(u);
            kept.iter()
                .map(|&i| {
                    let step = m / kernel_orders[i];
                    debug_assert_eq!(w[i] % step, 0);
                    w[i] / step
                })
                .collect()
        };
        let r = kept.len();
        // relation matrix: columns are t-vectors of boundaries and gᵢeᵢ
        let mut rel: Mat = vec![Vec::new(); r];
        for b in &boundaries {
            let t = to_t(&z2, b);
            for (row, v) in rel.iter_mut().zip(t) {
                row.push(v);
            }
        }
        for (i, row) in rel.iter_mut().enumerate() {
            for (j, &kj) in kept.iter().enumerate() {
                row.push(if i == j { kernel_orders[kj] } else { 0 });
            }
        }
        let cols = boundaries.len() + r;
        let quotient = diagonalize(&rel, cols, m, true);
        let p = quotient.p.clone().unwrap_or_default();
        let p_inv = quotient.p_inv.clone().unwrap_or_default();
        let cyclic: Vec<(usize, u64)> = quotient
            .cokernel_orders()
            .into_iter()
            .enumerate()
            .filter(|&(_, h)| h > 1)
            .collect();

        // cyclic factor c as a u-vector: t = P⁻¹eₖ, wᵢ = tᵢ·(m/gᵢ), u = Qw
        let cyclic_u: Vec<Vec<u64>> = cyclic
            .iter()
            .map(|&(kidx, _)| {
                let mut w = vec![0u64; unknowns];
                for (pos, &i) in kept.iter().enumerate() {
                    w[i] = p_inv[pos][kidx] * (m / kernel_orders[i]) % m;
                }
                mat_vec(&z2.q, &w, m)
            })
            .collect();

        let components = invariant_components(&cyclic.iter().map(|c| c.1).collect::<Vec<_>>());
        let invariants: Vec<u64> = components
            .iter()
            .map(|comp| comp.iter().map(|c| c.0).product())
            .collect();
        let basis: Vec<Cocycle> = components
            .iter()
            .map(|comp| {
                let mut u = vec![0u64; unknowns];
                for &(pe, c, _) in comp {
                    let f = cyclic[c].1 / pe;
                    for (ui, &ci) in u.iter_mut().zip(&cyclic_u[c]) {
                        *ui = (*ui + f * ci) % m;
                    }
                }
                let mut table = vec![0u32; n * n];
                for x in 1..n {
                    for y in 1..n {
                        let v = form(x, y)
                            .iter()
                            .zip(&u)
                            .fold(0u64, |acc, (&a, &b)| (acc + a * b) % m);
                        table[x * n + y] = v as u32;
                    }
                }
                Cocycle::from_table(g, m, table).expect("normalized by construction")
            })
            .collect();

        let solver = Solver {
            gens: tree.gens.clone(),
            q_inv_rows: kept.iter().map(|&i| z2.q_inv[i].clone()).collect(),
            kernel_orders: kept.iter().map(|&i| kernel_orders[i]).collect(),
            p: cyclic.iter().map(|&(kidx, _)| p[kidx].clone()).collect(),
            cyclic: cyclic.clone(),
            components,
        };
        SchurMultiplier {
            group: g.clone(),
            modulus: m,
            invariants,
            basis,
            source: MultiplierSource::Exact,
            solver: Some(solver),
        }
    }

    /// A multiplier known to be cyclic of prime order, with its generator
    /// taken from a covering group.
    pub fn from_cover(generator: Cocycle, order: u64) -> Result<Self> {
        if prime_factors(order) != vec![order] {
            return Err(Error::Config(format!(
                "cover-derived multiplier must have prime order, got {order}"
            )));
        }
        if !generator.is_cocycle() {
            return Err(Error::NotACocycle);
        }
        Ok(SchurMultiplier {
            group: generator.group().clone(),
            modulus: generator.modulus(),
            invariants: vec![order],
            basis: vec![generator],
            source: MultiplierSource::Cover,
            solver: None,
        })
    }

    /// The trivial multiplier, or the trivial subgroup of an unknown one
    /// for groups past the exact cap.
    pub fn trivial_only(g: &GroupRef) -> Self {
        SchurMultiplier {
            group: g.clone(),
            modulus: g.order() as u64,
            invariants: vec![],
            basis: vec![],
            source: MultiplierSource::Cover,
            solver: None,
        }
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `d₁ | d₂ | …`.
    pub fn invariants(&self) -> &[u64] {
        &self.invariants
    }

    pub fn basis(&self) -> &[Cocycle] {
        &self.basis
    }

    pub fn source(&self) -> MultiplierSource {
        self.source
    }

    pub fn is_exact(&self) -> bool {
        self.solver.is_some()
    }

    pub fn order(&self) -> u64 {
        self.invariants.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.invariants.iter().fold(1, |a, &b| lcm(a, b))
    }

    pub fn num_coclasses(&self) -> usize {
        self.order() as usize
    }

    pub fn coclass(&self, exponents: &[u64]) -> Result<Coclass> {
        if exponents.len() != self.invariants.len() {
            return Err(Error::BadCoclassIndex {
                index: exponents.len(),
                count: self.invariants.len(),
            });
        }
        let exps: Vec<u64> = exponents
            .iter()
            .zip(&self.invariants)
            .map(|(&e, &d)| e % d)
            .collect();
        let mut rep = Cocycle::trivial(&self.group, self.modulus);
        for (b, &e) in self.basis.iter().zip(&exps) {
            if e != 0 {
                rep = rep.add(&b.scale(e)).expect("same modulus");
            }
        }
        Ok(Coclass {
            invariants: self.invariants.clone(),
            exponents: exps,
            representative: rep,
        })
    }

    pub fn trivial_coclass(&self) -> Coclass {
        self.coclass(&vec![0; self.invariants.len()]).unwrap()
    }

    /// Lexicographic enumeration, first component most significant.
    pub fn coclass_by_index(&self, index: usize) -> Result<Coclass> {
        let count = self.num_coclasses();
        if index >= count {
            return Err(Error::BadCoclassIndex { index, count });
        }
        let mut rest = index as u64;
        let mut exps = vec![0u64; self.invariants.len()];
        for (e, &d) in exps.iter_mut().zip(&self.invariants).rev() {
            *e = rest % d;
            rest /= d;
        }
        self.coclass(&exps)
    }

    pub fn coclasses(&self) -> Vec<Coclass> {
        (0..self.num_coclasses())
            .map(|i| self.coclass_by_index(i).unwrap())
            .collect()
    }

    /// Exponent vector of the class of `a`. Requires the exact solver.
    pub fn classify(&self, a: &Cocycle) -> Result<Vec<u64>> {
        let solver = self.solver.as_ref().ok_or_else(|| {
            Error::Config(format!(
                "no exact classifier for the multiplier of {}",
                self.group.name()
            ))
        })?;
        if a.group().order() != self.group.order() {
            return Err(Error::InvalidTable("cocycle of a different group".into()));
        }
        let a = if a.modulus() == self.modulus {
            a.clone()
        } else {
            a.lift_modulus(self.modulus)?
        };
        if !a.is_cocycle() {
            return Err(Error::NotACocycle);
        }
        let m = self.modulus;
        let k = solver.gens.len();
        let n = self.group.order();
        let mut u = vec![0u64; (n - 1) * k];
        for x in 1..n {
            for (j, &s) in solver.gens.iter().enumerate() {
                u[(x - 1) * k + j] = a.value(x, s);
            }
        }
        let t: Vec<u64> = solver
            .q_inv_rows
            .iter()
            .zip(&solver.kernel_orders)
            .map(|(row, &g)| {
                let w = row
                    .iter()
                    .zip(&u)
                    .fold(0u64, |acc, (&r, &v)| (acc + r * v) % m);
                let step = m / g;
                if w % step != 0 {
                    return Err(Error::NotACocycle);
                }
                Ok(w / step)
            })
            .collect::<Result<_>>()?;
        let y: Vec<u64> = solver
            .p
            .iter()
            .zip(&solver.cyclic)
            .map(|(row, &(_, h))| {
                row.iter()
                    .zip(&t)
                    .fold(0u64, |acc, (&r, &v)| (acc + r * v) % m)
                    % h
            })
            .collect();
        Ok(solver
            .components
            .iter()
            .map(|comp| {
                let residues: Vec<(u64, u64)> = comp
                    .iter()
                    .map(|&(pe, c, e)| (y[c] * e % pe, pe))
                    .collect();
                crt(&residues).0
            })
            .collect())
    }

    pub fn coclass_of(&self, a: &Cocycle) -> Result<Coclass> {
        let exps = self.classify(a)?;
        let mut c = self.coclass(&exps)?;
        c.representative = if a.modulus() == self.modulus {
            a.clone()
        } else {
            a.lift_modulus(self.modulus)?
        };
        Ok(c)
    }

    /// Multiplier of a subgroup, computed over this modulus.
    pub fn for_subgroup(&self, h: &Subgroup, cap: usize) -> Result<(SchurMultiplier, GroupRef)> {
        let (local, _) = h.to_group(format!("{}<{}>", self.group.name(), h.order()));
        let local: GroupRef = std::sync::Arc::new(local);
        if local.order() > cap {
            return Err(Error::GroupTooLargeForH2 {
                order: local.order(),
                cap,
            });
        }
        let modulus = lcm(self.modulus, local.order() as u64);
        Ok((SchurMultiplier::exact(&local, modulus), local))
    }
}

/// All of `Hom(G, ℤ/m)`, each as its value table.
fn homomorphisms(g: &GroupRef, tree: &Tree, m: u64) -> Vec<Vec<u64>> {
    let n = g.order();
    let k = tree.gens.len();
    let mut forms = vec![vec![0u64; k]; n];
    for &y in tree.order.iter().skip(1) {
        let (p, j) = tree.parent[y].unwrap();
        let mut v = forms[p].clone();
        v[j] = (v[j] + 1) % m;
        forms[y] = v;
    }
    let mut rows = Vec::new();
    for p in 0..n {
        for (j, &s) in tree.gens.iter().enumerate() {
            if tree.is_tree_edge(g, p, j) {
                continue;
            }
            let ps = g.mul(p, s);
            let mut v: Vec<u64> = forms[p]
                .iter()
                .zip(&forms[ps])
                .map(|(&a, &b)| (a + m - b) % m)
                .collect();
            v[j] = (v[j] + 1) % m;
            rows.push(v);
        }
    }
    let d = diagonalize(&rows, k, m, false);
    d.kernel_generators()
        .into_iter()
        .map(|(lam, _)| {
            (0..n)
                .map(|y| {
                    forms[y]
                        .iter()
                        .zip(&lam)
                        .fold(0u64, |acc, (&a, &b)| (acc + a * b) % m)
                })
                .collect()
        })
        .collect()
}

/// Regroup cyclic factors `ℤ/hᶜ` into invariant factors, smallest first.
/// Each component is `(pᵉ, c, e_{c,p})` with `e_{c,p}` the inverse of
/// `hᶜ/pᵉ` modulo `pᵉ`.
fn invariant_components(cyclic: &[u64]) -> Vec<Vec<(u64, usize, u64)>> {
    use std::collections::BTreeMap;
    let mut by_prime: BTreeMap<u64, Vec<(u64, usize)>> = BTreeMap::new();
    for (c, &h) in cyclic.iter().enumerate() {
        for p in prime_factors(h) {
            let mut pe = 1;
            while h % (pe * p) == 0 {
                pe *= p;
            }
            by_prime.entry(p).or_default().push((pe, c));
        }
    }
    let mut depth = 0;
    for list in by_prime.values_mut() {
        list.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        depth = depth.max(list.len());
    }
    let mut comps: Vec<Vec<(u64, usize, u64)>> = (0..depth)
        .map(|j| {
            by_prime
                .values()
                .filter_map(|list| list.get(j))
                .map(|&(pe, c)| {
                    let e = inv_mod((cyclic[c] / pe) % pe, pe).expect("coprime cofactor");
                    (pe, c, e)
                })
                .collect()
        })
        .collect();
    comps.reverse();
    comps
}

/// An element of `H²G`: exponent vector over the basis together with a
/// representative cocycle.
#[derive(Debug, Clone)]
pub struct Coclass {
    invariants: Vec<u64>,
    exponents: Vec<u64>,
    representative: Cocycle,
}

impl PartialEq for Coclass {
    fn eq(&self, other: &Self) -> bool {
        self.invariants == other.invariants && self.exponents == other.exponents
    }
}

impl Coclass {
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn invariants(&self) -> &[u64] {
        &self.invariants
    }

    pub fn representative(&self) -> &Cocycle {
        &self.representative
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// `o(c)`.
    pub fn order(&self) -> u64 {
        self.exponents
            .iter()
            .zip(&self.invariants)
            .fold(1, |acc, (&e, &d)| lcm(acc, d / gcd(e, d)))
    }

    /// Lexicographic index, inverse of [`SchurMultiplier::coclass_by_index`].
    pub fn index(&self) -> usize {
        self.exponents
            .iter()
            .zip(&self.invariants)
            .fold(0u64, |acc, (&e, &d)| acc * d + e) as usize
    }

    pub fn add(&self, other: &Coclass) -> Coclass {
        assert_eq!(self.invariants, other.invariants);
        Coclass {
            invariants: self.invariants.clone(),
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .zip(&self.invariants)
                .map(|((&a, &b), &d)| (a + b) % d)
                .collect(),
            representative: self
                .representative
                .add(&other.representative)
                .expect("same modulus"),
        }
    }

    pub fn scale(&self, k: u64) -> Coclass {
        Coclass {
            invariants: self.invariants.clone(),
            exponents: self
                .exponents
                .iter()
                .zip(&self.invariants)
                .map(|(&a, &d)| a * (k % d) % d)
                .collect(),
            representative: self.representative.scale(k),
        }
    }

    pub fn negate(&self) -> Coclass {
        let m = self.representative.modulus();
        self.scale(self.invariants.iter().fold(m, |a, &d| lcm(a, d)) - 1)
    }
}

pub fn coclass_order(c: &Coclass) -> u64 {
    c.order()
}

/// `c = c_π · c_π′` with `o(c_π)` a π-number and `o(c_π′)` a π′-number.
pub fn pi_part(c: &Coclass, pi: &PiSet) -> (Coclass, Coclass) {
    let o = c.order();
    let u = pi.part(o);
    let v = o / u;
    let k = if u == 1 {
        0
    } else {
        v * inv_mod(v % u, u).expect("coprime parts")
    };
    let c_pi = c.scale(k);
    let c_pi_prime = c.add(&c_pi.negate());
    (c_pi, c_pi_prime)
}

/// Class of `res_H c` in `H²H`.
pub fn restrict_coclass(
    c: &Coclass,
    mult: &SchurMultiplier,
    h: &Subgroup,
    cap: usize,
) -> Result<(SchurMultiplier, Coclass)> {
    let (hm, local) = mult.for_subgroup(h, cap)?;
    let res = c.representative().restrict(h, &local);
    let cls = hm.coclass_of(&res)?;
    Ok((hm, cls))
}

/// Pull `b ∈ H²(G/N)` back to `G` and classify it there.
pub fn inflate_coclass(
    b: &Coclass,
    q: &Quotient,
    target: &SchurMultiplier,
) -> Result<Coclass> {
    let g = q.kernel.parent();
    let table = b.representative().pull_back(g, &q.projection);
    target.coclass_of(&table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, quotient_group, Permutation};
    use std::sync::Arc;

    fn perm_group(n: usize, gens: &[&[&[usize]]]) -> GroupRef {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|c| Permutation::from_cycles(n, c).unwrap())
            .collect();
        Arc::new(build_group(n, &gens).unwrap())
    }

    fn cyclic(n: usize) -> GroupRef {
        let cyc: Vec<usize> = (1..=n).collect();
        perm_group(n, &[&[&cyc]])
    }

    fn klein() -> GroupRef {
        perm_group(4, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]])
    }

    fn d4() -> GroupRef {
        perm_group(4, &[&[&[1, 2, 3, 4]], &[&[1, 3]]])
    }

    #[test]
    fn cyclic_groups_have_trivial_multiplier() {
        for n in 1..=12 {
            let m = schur_multiplier(&cyclic(n)).unwrap();
            assert!(m.invariants().is_empty(), "C{n}: {:?}", m.invariants());
        }
    }

    #[test]
    fn klein_four_has_z2() {
        let m = schur_multiplier(&klein()).unwrap();
        assert_eq!(m.invariants(), &[2]);
        let b = &m.basis()[0];
        assert!(b.is_cocycle());
        assert_eq!(m.classify(b).unwrap(), vec![1]);
        assert_eq!(m.coclass_by_index(1).unwrap().order(), 2);
    }

    #[test]
    fn dihedral_and_symmetric() {
        assert_eq!(schur_multiplier(&d4()).unwrap().invariants(), &[2]);
        let s3 = perm_group(3, &[&[&[1, 2]], &[&[1, 2, 3]]]);
        assert!(schur_multiplier(&s3).unwrap().invariants().is_empty());
        let s4 = perm_group(4, &[&[&[1, 2, 3, 4]], &[&[1, 2]]]);
        assert_eq!(schur_multiplier(&s4).unwrap().invariants(), &[2]);
        let a4 = perm_group(4, &[&[&[1, 2, 3]], &[&[1, 2], &[3, 4]]]);
        assert_eq!(schur_multiplier(&a4).unwrap().invariants(), &[2]);
        let q8 = perm_group(
            8,
            &[&[&[1, 2, 3, 4], &[5, 6, 7, 8]], &[&[1, 5, 3, 7], &[2, 8, 4, 6]]],
        );
        assert_eq!(q8.order(), 8);
        assert!(schur_multiplier(&q8).unwrap().invariants().is_empty());
    }

    #[test]
    fn elementary_abelian_rank_three() {
        let g = perm_group(6, &[&[&[1, 2]], &[&[3, 4]], &[&[5, 6]]]);
        assert_eq!(schur_multiplier(&g).unwrap().invariants(), &[2, 2, 2]);
        let c3c3 = perm_group(6, &[&[&[1, 2, 3]], &[&[4, 5, 6]]]);
        assert_eq!(schur_multiplier(&c3c3).unwrap().invariants(), &[3]);
        let c2c4 = perm_group(6, &[&[&[1, 2]], &[&[3, 4, 5, 6]]]);
        assert_eq!(schur_multiplier(&c2c4).unwrap().invariants(), &[2]);
    }

    #[test]
    fn classification_is_coboundary_invariant() {
        use crate::cohomology::Cochain1;
        use rand::SeedableRng;
        let g = d4();
        let m = schur_multiplier(&g).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for c in m.coclasses() {
            for _ in 0..5 {
                let z = Cochain1::random(&g, m.modulus(), &mut rng).coboundary();
                let shifted = c.representative().add(&z).unwrap();
                assert_eq!(m.classify(&shifted).unwrap(), c.exponents());
            }
        }
    }

    #[test]
    fn coclass_orders_match_invariants() {
        let g = perm_group(6, &[&[&[1, 2]], &[&[3, 4]], &[&[5, 6]]]);
        let m = schur_multiplier(&g).unwrap();
        assert_eq!(m.num_coclasses(), 8);
        for (i, c) in m.coclasses().iter().enumerate() {
            assert_eq!(c.index(), i);
            assert_eq!(c.order(), if i == 0 { 1 } else { 2 });
        }
    }

    #[test]
    fn restriction_to_cyclic_subgroups_is_trivial() {
        let g = klein();
        let m = schur_multiplier(&g).unwrap();
        let c = m.coclass_by_index(1).unwrap();
        for x in 1..4 {
            let h = Subgroup::generated(&g, &[x]);
            let (_, r) = restrict_coclass(&c, &m, &h, DEFAULT_H2_CAP).unwrap();
            assert!(r.is_trivial());
        }
        let (_, r) = restrict_coclass(&c, &m, &Subgroup::trivial(&g), DEFAULT_H2_CAP).unwrap();
        assert!(r.is_trivial());
    }

    #[test]
    fn inflation_from_klein_quotient_of_d4() {
        let g = d4();
        let gm = schur_multiplier(&g).unwrap();
        let center: Vec<usize> = (0..8)
            .filter(|&z| (0..8).all(|y| g.mul(z, y) == g.mul(y, z)))
            .collect();
        let z = Subgroup::from_elements(&g, &center).unwrap();
        assert_eq!(z.order(), 2);
        let q = quotient_group(&g, &z).unwrap();
        let qm = schur_multiplier(&q.group).unwrap();
        assert_eq!(qm.invariants(), &[2]);
        for b in qm.coclasses() {
            let c = inflate_coclass(&b, &q, &gm).unwrap();
            let (_, r) = restrict_coclass(&c, &gm, &z, DEFAULT_H2_CAP).unwrap();
            assert!(r.is_trivial());
        }
    }

    #[test]
    fn pi_parts_multiply_back() {
        let c6 = perm_group(5, &[&[&[1, 2], &[3, 4, 5]]]);
        assert_eq!(c6.order(), 6);
        // C6 × C6 has multiplier C6
        let g = perm_group(10, &[&[&[1, 2], &[3, 4, 5]], &[&[6, 7], &[8, 9, 10]]]);
        let m = schur_multiplier(&g).unwrap();
        assert_eq!(m.invariants(), &[6]);
        let c = m.coclass_by_index(1).unwrap();
        assert_eq!(c.order(), 6);
        let (a, b) = pi_part(&c, &PiSet::single(2));
        assert_eq!(a.order(), 2);
        assert_eq!(b.order(), 3);
        assert_eq!(a.add(&b), c);
        let (aa, ab) = pi_part(&a, &PiSet::single(2));
        assert_eq!(aa, a);
        assert!(ab.is_trivial());
        let t = m.trivial_coclass();
        let (x, y) = pi_part(&t, &PiSet::single(3));
        assert!(x.is_trivial() && y.is_trivial());
    }

    #[test]
    fn invariant_regrouping() {
        // Z/2 ⊕ Z/3 ⊕ Z/4 = Z/2 ⊕ Z/12
        let comps = invariant_components(&[2, 3, 4]);
        let inv: Vec<u64> = comps.iter().map(|c| c.iter().map(|x| x.0).product()).collect();
        assert_eq!(inv, vec![2, 12]);
        assert!(invariant_components(&[]).is_empty());
    }
}
