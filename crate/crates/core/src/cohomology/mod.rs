//! 2-cocycles with values in `ℤ/m` and the Schur multiplier.

mod cocycle;
mod extension;
mod multiplier;
pub mod zmod;

pub use cocycle::{complex_coboundary, complex_cocycle_defect, Cochain1, Cocycle, CocycleJson};
pub use extension::{cocycle_from_cover, cocycle_from_extension};
pub use multiplier::{
    coclass_order, inflate_coclass, pi_part, restrict_coclass, schur_multiplier,
    schur_multiplier_capped, Coclass, MultiplierSource, SchurMultiplier, DEFAULT_H2_CAP,
};
