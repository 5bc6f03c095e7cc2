use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupRef, Subgroup};

/// A normalized 2-cocycle with values in `ℤ/m`, read as exponents of
/// `e^{2πi/m}`.
#[derive(Debug, Clone)]
pub struct Cocycle {
    group: GroupRef,
    modulus: u64,
    table: Vec<u32>,
}

impl PartialEq for Cocycle {
    fn eq(&self, other: &Self) -> bool {
        self.group.order() == other.group.order()
            && self.modulus == other.modulus
            && self.table == other.table
    }
}

impl Cocycle {
    /// Checks shape and normalization, not the cocycle identity.
    pub fn from_table(group: &GroupRef, modulus: u64, table: Vec<u32>) -> Result<Self> {
        let n = group.order();
        if modulus == 0 || table.len() != n * n {
            return Err(Error::InvalidTable(format!(
                "cocycle table of length {} for order {n}",
                table.len()
            )));
        }
        let table: Vec<u32> = table.into_iter().map(|v| (v as u64 % modulus) as u32).collect();
        if (0..n).any(|x| table[x] != 0 || table[x * n] != 0) {
            return Err(Error::InvalidTable("cocycle is not normalized".into()));
        }
        Ok(Cocycle {
            group: group.clone(),
            modulus,
            table,
        })
    }

    pub fn trivial(group: &GroupRef, modulus: u64) -> Self {
        let n = group.order();
        Cocycle {
            group: group.clone(),
            modulus,
            table: vec![0; n * n],
        }
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    #[inline]
    pub fn value(&self, x: usize, y: usize) -> u64 {
        self.table[x * self.group.order() + y] as u64
    }

    /// `e^{2πi α(x,y)/m}`.
    pub fn complex(&self, x: usize, y: usize) -> Complex64 {
        Complex64::from_polar(1.0, TAU * self.value(x, y) as f64 / self.modulus as f64)
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        let roots: Vec<Complex64> = (0..self.modulus)
            .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / self.modulus as f64))
            .collect();
        self.table.iter().map(|&v| roots[v as usize]).collect()
    }

    pub fn is_trivial_table(&self) -> bool {
        self.table.iter().all(|&v| v == 0)
    }

    /// The cocycle identity on all triples.
    pub fn is_cocycle(&self) -> bool {
        let g = &self.group;
        let n = g.order();
        let m = self.modulus;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = g.mul(x, y);
                let axy = self.value(x, y);
                (0..n).all(|z| {
                    let lhs = axy + self.value(xy, z);
                    let rhs = self.value(y, z) + self.value(x, g.mul(y, z));
                    lhs % m == rhs % m
                })
            })
        })
    }

    /// Same coclass representative over a modulus that `self.modulus`
    /// divides.
    pub fn lift_modulus(&self, modulus: u64) -> Result<Cocycle> {
        if !modulus.is_multiple_of(self.modulus) {
            return Err(Error::ModulusMismatch {
                expected: modulus,
                found: self.modulus,
            });
        }
        let f = (modulus / self.modulus) as u32;
        Ok(Cocycle {
            group: self.group.clone(),
            modulus,
            table: self.table.iter().map(|&v| v * f).collect(),
        })
    }

    /// Pointwise product.
    pub fn add(&self, other: &Cocycle) -> Result<Cocycle> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                expected: self.modulus,
                found: other.modulus,
            });
        }
        let m = self.modulus;
        Ok(Cocycle {
            group: self.group.clone(),
            modulus: m,
            table: self
                .table
                .iter()
                .zip(&other.table)
                .map(|(&a, &b)| ((a as u64 + b as u64) % m) as u32)
                .collect(),
        })
    }

    /// `k`-th power.
    pub fn scale(&self, k: u64) -> Cocycle {
        let m = self.modulus;
        Cocycle {
            group: self.group.clone(),
            modulus: m,
            table: self
                .table
                .iter()
                .map(|&a| ((a as u64 * (k % m)) % m) as u32)
                .collect(),
        }
    }

    /// Restriction to `h`, indexed by the local (sorted) element order of
    /// `h.to_group`.
    pub fn restrict(&self, h: &Subgroup, local: &GroupRef) -> Cocycle {
        let e = h.elements();
        let k = e.len();
        let mut table = vec![0u32; k * k];
        for (i, &a) in e.iter().enumerate() {
            for (j, &b) in e.iter().enumerate() {
                table[i * k + j] = self.table[a * self.group.order() + b];
            }
        }
        Cocycle {
            group: local.clone(),
            modulus: self.modulus,
            table,
        }
    }

    /// Pull back along a homomorphism `proj: G → self.group`.
    pub fn pull_back(&self, g: &GroupRef, proj: &[usize]) -> Cocycle {
        let n = g.order();
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = self.table[proj[x] * self.group.order() + proj[y]];
            }
        }
        Cocycle {
            group: g.clone(),
            modulus: self.modulus,
            table,
        }
    }

    /// SHA-256 over the modulus and the table, hex encoded.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.group.order().to_le_bytes());
        h.update(self.modulus.to_le_bytes());
        for v in &self.table {
            h.update(v.to_le_bytes());
        }
        hex::encode(h.finalize())
    }

    pub fn to_json(&self) -> CocycleJson {
        CocycleJson {
            group: self.group.name().to_string(),
            modulus: self.modulus,
            table: self.table.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CocycleJson {
    pub group: String,
    pub modulus: u64,
    pub table: Vec<u32>,
}

/// A normalized 1-cochain `ζ` with `ζ(1) = 0`.
#[derive(Debug, Clone)]
pub struct Cochain1 {
    group: GroupRef,
    modulus: u64,
    values: Vec<u32>,
}

impl Cochain1 {
    pub fn new(group: &GroupRef, modulus: u64, values: Vec<u32>) -> Result<Self> {
        if values.len() != group.order() || !(values.first().copied().unwrap_or(0) as u64).is_multiple_of(modulus)
        {
            return Err(Error::InvalidTable("1-cochain must vanish at the identity".into()));
        }
        Ok(Cochain1 {
            group: group.clone(),
            modulus,
            values: values
                .into_iter()
                .map(|v| (v as u64 % modulus) as u32)
                .collect(),
        })
    }

    pub fn random<R: Rng>(group: &GroupRef, modulus: u64, rng: &mut R) -> Self {
        let mut values: Vec<u32> = (0..group.order())
            .map(|_| rng.random_range(0..modulus) as u32)
            .collect();
        values[0] = 0;
        Cochain1 {
            group: group.clone(),
            modulus,
            values,
        }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// `δζ(x,y) = ζ(x) + ζ(y) − ζ(xy)`.
    pub fn coboundary(&self) -> Cocycle {
        let g = &self.group;
        let n = g.order();
        let m = self.modulus;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let v = self.values[x] as u64 + self.values[y] as u64 + m
                    - self.values[g.mul(x, y)] as u64;
                table[x * n + y] = (v % m) as u32;
            }
        }
        Cocycle {
            group: g.clone(),
            modulus: m,
            table,
        }
    }
}

/// Unit-modulus complex table `ζ(x)ζ(y)/ζ(xy)`.
pub fn complex_coboundary(g: &FiniteGroup, zeta: &[Complex64]) -> Vec<Complex64> {
    let n = g.order();
    let mut out = vec![Complex64::new(1.0, 0.0); n * n];
    for x in 0..n {
        for y in 0..n {
            out[x * n + y] = zeta[x] * zeta[y] / zeta[g.mul(x, y)];
        }
    }
    out
}

/// Multiplicative cocycle identity defect, `max |α(x,y)α(xy,z) − α(y,z)α(x,yz)|`.
pub fn complex_cocycle_defect(g: &FiniteGroup, a: &[Complex64]) -> f64 {
    let n = g.order();
    let mut worst: f64 = 0.0;
    for x in 0..n {
        for y in 0..n {
            let xy = g.mul(x, y);
            let axy = a[x * n + y];
            for z in 0..n {
                let lhs = axy * a[xy * n + z];
                let rhs = a[y * n + z] * a[x * n + g.mul(y, z)];
                worst = worst.max((lhs - rhs).norm());
            }
        }
    }
    worst
}
