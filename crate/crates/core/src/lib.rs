//! Projective representations of finite groups.
//!
//! Groups are dense Cayley tables ([`group`]). Cocycles are additive
//! residue tables ([`cohomology`]) that embed into the unit circle for the
//! numeric layers ([`twisted`], [`projrep`]). [`verify`] evaluates the
//! Itô–Michler style equivalences on concrete instances.

pub mod error;
pub mod catalog;
pub mod cohomology;
pub mod config;
pub mod group;
pub mod io;
pub mod linalg;
pub mod projrep;
pub mod twisted;
pub mod verify;

pub use error::{Error, Result};
