use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `0..n`, stored as its image list.
///
/// Products compose left to right: `a.then(b)` applies `a` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u32).collect())
    }

    /// From 0-based images; rejects anything that is not a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::NotPermutation(format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    /// From 1-based one-line notation, as in the group input files.
    pub fn from_one_line(images: &[u64]) -> Result<Self> {
        let v = images
            .iter()
            .map(|&i| {
                if i == 0 {
                    Err(Error::NotPermutation(format!("{images:?}")))
                } else {
                    Ok((i - 1) as u32)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(v)
    }

    /// From disjoint cycles on the points `1..=n`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > n || touched[p - 1] {
                    return Err(Error::NotPermutation(format!("bad cycle {cycle:?}")));
                }
                touched[p - 1] = true;
                let q = cycle[(k + 1) % cycle.len()];
                if q == 0 || q > n {
                    return Err(Error::NotPermutation(format!("bad cycle {cycle:?}")));
                }
                img[p - 1] = (q - 1) as u32;
            }
        }
        Self::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<u64> {
        self.0.iter().map(|&i| i as u64 + 1).collect()
    }

    pub fn is_even(&self) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Disjoint union: `self` on the first points, `other` shifted after.
    pub fn disjoint_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.0.len() as u32;
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|&i| i + shift));
        Permutation(v)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for s in 0..n {
            if seen[s] || self.0[s] as usize == s {
                continue;
            }
            write!(f, "(")?;
            let mut i = s;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.0[i] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}
