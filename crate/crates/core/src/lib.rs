//! Computable relative homological algebra over the integers.
//!
//! The crate realizes the homotopy category of 2-periodic complexes of
//! finitely generated free abelian groups, together with the ideal of maps
//! that vanish on homology, and computes the invariants that ideal controls:
//! projective resolutions, derived functors, coefficient sequences, Ext/Tor
//! over monogenic rings, Hochschild groups and six-term sequences.

pub mod abgroups;
pub mod error;
pub mod intlinalg;
pub mod json;
pub mod percomplex;
pub mod random;
pub mod relhom;
pub mod repmod;

pub use error::{Error, Result};
