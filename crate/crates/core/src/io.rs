//! JSON interchange: permutation group input, Cayley table export and the
//! multiplier and degree reports.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cohomology::{CocycleJson, SchurMultiplier};
use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Permutation};
use crate::twisted::{c_regular_classes, wedderburn, TwistedAlgebra};

/// `{"name", "points", "generators"}` with one-line images of `1..=points`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupJson {
    pub name: String,
    pub points: usize,
    pub generators: Vec<Vec<u64>>,
}

impl GroupJson {
    pub fn build(&self, order_cap: usize) -> Result<FiniteGroup> {
        let mut gens = Vec::with_capacity(self.generators.len());
        for (i, images) in self.generators.iter().enumerate() {
            if images.len() != self.points {
                return Err(Error::Parse(format!(
                    "generator {i} has {} images for {} points",
                    images.len(),
                    self.points
                )));
            }
            let p = Permutation::from_one_line(images)
                .map_err(|e| Error::Parse(format!("generator {i}: {e}")))?;
            gens.push(p);
        }
        FiniteGroup::from_permutations(self.name.clone(), self.points, &gens, order_cap)
    }

    /// The permutation generators of a group built from permutations.
    pub fn of(g: &FiniteGroup) -> Option<Self> {
        let points = g.permutation_degree()?;
        let generators = g
            .permutation_generators()?
            .iter()
            .map(|p| p.one_line())
            .collect();
        Some(GroupJson {
            name: g.name().to_string(),
            points,
            generators,
        })
    }
}

pub fn parse_group(text: &str, order_cap: usize) -> Result<FiniteGroup> {
    let spec: GroupJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    spec.build(order_cap)
}

pub fn load_group(path: impl AsRef<Path>, order_cap: usize) -> Result<FiniteGroup> {
    parse_group(&std::fs::read_to_string(path)?, order_cap)
}

/// Flat row-major Cayley table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CayleyJson {
    pub name: String,
    pub order: usize,
    pub table: Vec<u32>,
}

impl CayleyJson {
    pub fn of(g: &FiniteGroup) -> Self {
        CayleyJson {
            name: g.name().to_string(),
            order: g.order(),
            table: g.table().to_vec(),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        FiniteGroup::from_table(self.name.clone(), self.order, self.table.clone())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MultiplierJson {
    pub group: String,
    pub order: usize,
    pub invariants: Vec<u64>,
    pub exact: bool,
    pub coclasses: usize,
    pub basis: Vec<CocycleJson>,
    pub basis_hashes: Vec<String>,
}

impl MultiplierJson {
    pub fn of(m: &SchurMultiplier) -> Self {
        MultiplierJson {
            group: m.group().name().to_string(),
            order: m.group().order(),
            invariants: m.invariants().to_vec(),
            exact: m.is_exact(),
            coclasses: m.num_coclasses(),
            basis: m.basis().iter().map(|c| c.to_json()).collect(),
            basis_hashes: m.basis().iter().map(|c| c.hash()).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreesJson {
    pub group: String,
    pub coclass: Vec<u64>,
    pub cocycle_hash: String,
    pub c_regular_classes: Vec<usize>,
    pub degrees: Vec<usize>,
    pub seed: u64,
    pub residual: f64,
}

/// Degrees and regular class representatives of `ℂ^cG` for the coclass
/// with the given index.
pub fn degrees_report(
    m: &SchurMultiplier,
    index: usize,
    tol: Tolerances,
    seed: u64,
) -> Result<DegreesJson> {
    let c = m.coclass_by_index(index)?;
    let a = TwistedAlgebra::from_cocycle(c.representative(), tol);
    let classes = c_regular_classes(&a)?;
    let w = wedderburn(&a, seed)?;
    Ok(DegreesJson {
        group: m.group().name().to_string(),
        coclass: c.exponents().to_vec(),
        cocycle_hash: c.representative().hash(),
        c_regular_classes: classes.representatives(),
        degrees: w.degrees(),
        seed,
        residual: w.residual,
    })
}
