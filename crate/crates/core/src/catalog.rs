//! Built-in groups with expected metadata and their multipliers.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::cohomology::{cocycle_from_cover, schur_multiplier_capped, SchurMultiplier};
use crate::error::{Error, Result};
use crate::group::{is_solvable, FiniteGroup, GroupRef, Permutation, DEFAULT_ORDER_CAP};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Spec {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic16,
    Quaternion,
    Symmetric(usize),
    Alternating4,
    A5,
    Sl23,
    Sl25,
    Frobenius21,
    Frobenius20,
    Heisenberg27,
    Extraspecial27Exp9,
    Product(Vec<Spec>),
}

/// How the multiplier of an entry is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MultiplierPlan {
    /// Cocycle-identity computation (needs `order ≤ h2 cap`).
    Exact,
    /// Generator read off the central extension `SL(2,5) → A5`.
    CoverA5,
    /// Known to be trivial.
    KnownTrivial,
    /// Too large for the exact computation and no cover available: only
    /// the trivial coclass is used.
    TrivialOnly,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub order: usize,
    pub solvable: bool,
    #[serde(skip)]
    spec: Spec,
}

fn entry(name: &str, order: usize, solvable: bool, spec: Spec) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        order,
        solvable,
        spec,
    }
}

pub fn catalog() -> Vec<CatalogEntry> {
    use Spec::*;
    let mut v = Vec::new();
    for n in 1..=24 {
        v.push(entry(&format!("C{n}"), n, true, Cyclic(n)));
    }
    v.push(entry("C2xC2", 4, true, Product(vec![Cyclic(2), Cyclic(2)])));
    v.push(entry("C2xC4", 8, true, Product(vec![Cyclic(2), Cyclic(4)])));
    v.push(entry("C3xC3", 9, true, Product(vec![Cyclic(3), Cyclic(3)])));
    for n in 3..=12 {
        v.push(entry(&format!("D{n}"), 2 * n, true, Dihedral(n)));
    }
    v.push(entry("Q8", 8, true, Quaternion));
    v.push(entry("Q16", 16, true, Dicyclic16));
    v.push(entry("S3", 6, true, Symmetric(3)));
    v.push(entry("S4", 24, true, Symmetric(4)));
    v.push(entry("A4", 12, true, Alternating4));
    v.push(entry("A5", 60, false, A5));
    v.push(entry("SL(2,3)", 24, true, Sl23));
    v.push(entry("SL(2,5)", 120, false, Sl25));
    v.push(entry("C7:C3", 21, true, Frobenius21));
    v.push(entry("C5:C4", 20, true, Frobenius20));
    v.push(entry("He3", 27, true, Heisenberg27));
    v.push(entry("M27", 27, true, Extraspecial27Exp9));
    let products: [(&str, usize, bool, Vec<Spec>); 16] = [
        ("C2xC2xC2", 8, true, vec![Cyclic(2), Cyclic(2), Cyclic(2)]),
        ("C4xC4", 16, true, vec![Cyclic(4), Cyclic(4)]),
        ("C2xC2xC2xC2", 16, true, vec![Cyclic(2), Cyclic(2), Cyclic(2), Cyclic(2)]),
        ("C3xC3xC3", 27, true, vec![Cyclic(3), Cyclic(3), Cyclic(3)]),
        ("C6xC6", 36, true, vec![Cyclic(6), Cyclic(6)]),
        ("S3xC3", 18, true, vec![Symmetric(3), Cyclic(3)]),
        ("S3xS3", 36, true, vec![Symmetric(3), Symmetric(3)]),
        ("D4xC2", 16, true, vec![Dihedral(4), Cyclic(2)]),
        ("Q8xC2", 16, true, vec![Quaternion, Cyclic(2)]),
        ("A4xC2", 24, true, vec![Alternating4, Cyclic(2)]),
        ("A4xC3", 36, true, vec![Alternating4, Cyclic(3)]),
        ("SL(2,3)xC2", 48, true, vec![Sl23, Cyclic(2)]),
        ("S4xC2", 48, true, vec![Symmetric(4), Cyclic(2)]),
        ("C7:C3xC2", 42, true, vec![Frobenius21, Cyclic(2)]),
        ("A5xC2", 120, false, vec![A5, Cyclic(2)]),
        ("S4xS3", 144, true, vec![Symmetric(4), Symmetric(3)]),
    ];
    for (name, order, solvable, parts) in products {
        v.push(entry(name, order, solvable, Product(parts)));
    }
    v
}

pub fn find(name: &str) -> Result<CatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownGroup(name.to_string()))
}

impl CatalogEntry {
    pub fn build(&self) -> Result<GroupRef> {
        let (points, gens) = generators(&self.spec);
        let g = FiniteGroup::from_permutations(&self.name, points, &gens, DEFAULT_ORDER_CAP.max(self.order))?;
        Ok(Arc::new(g))
    }

    /// Permutation generators on `points` points.
    pub fn permutation_generators(&self) -> (usize, Vec<Permutation>) {
        generators(&self.spec)
    }

    pub fn multiplier_plan(&self, h2_cap: usize) -> MultiplierPlan {
        if self.spec == Spec::A5 {
            MultiplierPlan::CoverA5
        } else if self.spec == Spec::Sl25 {
            MultiplierPlan::KnownTrivial
        } else if self.order <= h2_cap {
            MultiplierPlan::Exact
        } else {
            MultiplierPlan::TrivialOnly
        }
    }

    pub fn multiplier(&self, g: &GroupRef, h2_cap: usize) -> Result<SchurMultiplier> {
        match self.multiplier_plan(h2_cap) {
            MultiplierPlan::Exact => schur_multiplier_capped(g, h2_cap),
            MultiplierPlan::CoverA5 => {
                let (sl, proj) = sl25_cover_of(g)?;
                let c = cocycle_from_cover(&sl, g, &proj)?;
                SchurMultiplier::from_cover(c, 2)
            }
            MultiplierPlan::KnownTrivial | MultiplierPlan::TrivialOnly => {
                Ok(SchurMultiplier::trivial_only(g))
            }
        }
    }

    /// Construct and compare order and solvability with the metadata.
    pub fn self_check(&self) -> Result<GroupRef> {
        let g = self.build()?;
        if g.order() != self.order {
            return Err(Error::Config(format!(
                "{}: built order {} but expected {}",
                self.name,
                g.order(),
                self.order
            )));
        }
        if is_solvable(&g) != self.solvable {
            return Err(Error::Config(format!(
                "{}: solvability flag mismatch",
                self.name
            )));
        }
        Ok(g)
    }
}

fn cycle(n: usize) -> Permutation {
    Permutation::from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect()).unwrap()
}

fn affine(n: usize, a: usize, b: usize) -> Permutation {
    Permutation::from_images((0..n).map(|x| ((a * x + b) % n) as u32).collect()).unwrap()
}

/// Right-multiplication action `v ↦ v·M` on the nonzero vectors of `F_p²`,
/// vector `(a, b)` at index `a·p + b − 1`.
fn linear(p: usize, m: [[usize; 2]; 2]) -> Permutation {
    let idx = |a: usize, b: usize| a * p + b - 1;
    let mut img = vec![0u32; p * p - 1];
    for a in 0..p {
        for b in 0..p {
            if a == 0 && b == 0 {
                continue;
            }
            let x = (a * m[0][0] + b * m[1][0]) % p;
            let y = (a * m[0][1] + b * m[1][1]) % p;
            img[idx(a, b)] = idx(x, y) as u32;
        }
    }
    Permutation::from_images(img).unwrap()
}

fn sl2_generators(p: usize) -> Vec<Permutation> {
    vec![linear(p, [[1, 1], [0, 1]]), linear(p, [[0, p - 1], [1, 0]])]
}

/// Index of the line through nonzero `(a, b)` in `F_p²`: `(1, t) ↦ t`,
/// `(0, 1) ↦ p`.
fn line_of(p: usize, a: usize, b: usize) -> usize {
    if a == 0 {
        p
    } else {
        let inv = (1..p).find(|&i| i * a % p == 1).unwrap();
        b * inv % p
    }
}

/// Induced action of a vector permutation on the `p + 1` lines.
fn on_lines(p: usize, v: &Permutation) -> Permutation {
    let mut img = vec![0u32; p + 1];
    for (l, slot) in img.iter_mut().enumerate() {
        let (a, b) = if l == p { (0, 1) } else { (1, l) };
        let j = v.apply(a * p + b - 1) + 1;
        *slot = line_of(p, j / p, j % p) as u32;
    }
    Permutation::from_images(img).unwrap()
}

fn generators(spec: &Spec) -> (usize, Vec<Permutation>) {
    match spec {
        Spec::Cyclic(1) => (1, vec![]),
        Spec::Cyclic(n) => (*n, vec![cycle(*n)]),
        Spec::Dihedral(n) => (*n, vec![cycle(*n), affine(*n, n - 1, 0)]),
        Spec::Quaternion => (
            8,
            vec![
                Permutation::from_cycles(8, &[&[1, 2, 3, 4], &[5, 6, 7, 8]]).unwrap(),
                Permutation::from_cycles(8, &[&[1, 5, 3, 7], &[2, 8, 4, 6]]).unwrap(),
            ],
        ),
        Spec::Dicyclic16 => {
            // elements aⁱbʲ at index 2i + j; right-regular action of a, b
            let idx = |i: usize, j: usize| (2 * (i % 8) + j) as u32;
            let a: Vec<u32> = (0..16)
                .map(|x| {
                    let (i, j) = (x / 2, x % 2);
                    // aⁱbʲ·a = a^{i±1}bʲ
                    if j == 0 {
                        idx(i + 1, 0)
                    } else {
                        idx(i + 7, 1)
                    }
                })
                .collect();
            let b: Vec<u32> = (0..16)
                .map(|x| {
                    let (i, j) = (x / 2, x % 2);
                    // aⁱ·b = aⁱb, aⁱb·b = a^{i+4}
                    if j == 0 {
                        idx(i, 1)
                    } else {
                        idx(i + 4, 0)
                    }
                })
                .collect();
            (
                16,
                vec![
                    Permutation::from_images(a).unwrap(),
                    Permutation::from_images(b).unwrap(),
                ],
            )
        }
        Spec::Symmetric(n) => {
            let t = Permutation::from_cycles(*n, &[&[1, 2]]).unwrap();
            (*n, vec![cycle(*n), t])
        }
        Spec::Alternating4 => (
            4,
            vec![
                Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap(),
            ],
        ),
        Spec::A5 => (6, sl2_generators(5).iter().map(|g| on_lines(5, g)).collect()),
        Spec::Sl23 => (8, sl2_generators(3)),
        Spec::Sl25 => (24, sl2_generators(5)),
        Spec::Frobenius21 => (7, vec![affine(7, 1, 1), affine(7, 2, 0)]),
        Spec::Frobenius20 => (5, vec![affine(5, 1, 1), affine(5, 2, 0)]),
        Spec::Heisenberg27 => {
            // (x, y) at 3x + y; (x,y) ↦ (x+1, y) and (x,y) ↦ (x, y+x)
            let a = (0..9).map(|v| (3 * ((v / 3 + 1) % 3) + v % 3) as u32).collect();
            let b = (0..9)
                .map(|v| {
                    let (x, y) = (v / 3, v % 3);
                    (3 * x + (y + x) % 3) as u32
                })
                .collect();
            (
                9,
                vec![
                    Permutation::from_images(a).unwrap(),
                    Permutation::from_images(b).unwrap(),
                ],
            )
        }
        Spec::Extraspecial27Exp9 => (9, vec![affine(9, 1, 1), affine(9, 4, 0)]),
        Spec::Product(parts) => {
            let built: Vec<(usize, Vec<Permutation>)> = parts.iter().map(generators).collect();
            let total: usize = built.iter().map(|b| b.0).sum();
            let mut gens = Vec::new();
            let mut offset = 0;
            for (pts, gs) in &built {
                for g in gs {
                    let left = Permutation::identity(offset);
                    let right = Permutation::identity(total - offset - pts);
                    gens.push(left.disjoint_sum(g).disjoint_sum(&right));
                }
                offset += pts;
            }
            (total, gens)
        }
    }
}

/// `SL(2,5)` on nonzero vectors of `F₅²` with its projection onto `a5`,
/// which must be the catalog `A5` (lines of `F₅²`).
pub fn sl25_cover_of(a5: &GroupRef) -> Result<(GroupRef, Vec<usize>)> {
    let sl = Arc::new(FiniteGroup::from_permutations(
        "SL(2,5)",
        24,
        &sl2_generators(5),
        DEFAULT_ORDER_CAP,
    )?);
    let lookup: HashMap<Vec<u32>, usize> = (0..a5.order())
        .map(|x| {
            let p = a5
                .element_permutation(x)
                .ok_or_else(|| Error::Config("A5 must be a permutation group".into()))?;
            Ok((p.images().to_vec(), x))
        })
        .collect::<Result<_>>()?;
    let proj = (0..sl.order())
        .map(|x| {
            let v = sl.element_permutation(x).expect("permutation group");
            let l = on_lines(5, v);
            lookup
                .get(l.images())
                .copied()
                .ok_or_else(|| Error::Config("A5 is not the catalog construction".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((sl, proj))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_matches_its_metadata() {
        for e in catalog() {
            e.self_check().unwrap_or_else(|err| panic!("{}: {err}", e.name));
        }
    }

    #[test]
    fn names_are_unique() {
        let c = catalog();
        let mut names: Vec<&str> = c.iter().map(|e| e.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), c.len());
    }

    #[test]
    fn lookup_is_case_insensitive() {
        assert_eq!(find("sl(2,3)").unwrap().order, 24);
        assert!(matches!(find("nope"), Err(Error::UnknownGroup(_))));
        assert_eq!(find("C1").unwrap().build().unwrap().order(), 1);
    }

    #[test]
    fn a5_cover_is_nontrivial() {
        let e = find("A5").unwrap();
        let g = e.build().unwrap();
        let m = e.multiplier(&g, 48).unwrap();
        assert_eq!(m.invariants(), &[2]);
        assert!(m.basis()[0].is_cocycle());
        assert!(!m.basis()[0].is_trivial_table());
    }

    #[test]
    fn extraspecial_groups_differ_in_exponent() {
        let he = find("He3").unwrap().build().unwrap();
        let m27 = find("M27").unwrap().build().unwrap();
        assert!((0..27).all(|x| he.element_order(x) <= 3));
        assert!((0..27).any(|x| m27.element_order(x) == 9));
        assert!(!he.is_abelian() && !m27.is_abelian());
    }
}
