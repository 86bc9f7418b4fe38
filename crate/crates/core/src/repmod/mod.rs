//! Modules over `Z[t]/(p)` and `Z[t, t⁻¹]`: free resolutions, Ext and Tor,
//! Hochschild groups of the Laurent ring, and the six-term sequence of an
//! automorphism.

mod hochschild;
mod resolution;
mod ring;

pub use hochschild::{hochschild, pv_sequence, PvReport, Variant};
pub use resolution::{
    ext_from_resolution, ext_over_ring, free_resolution_over_ring, tor_from_resolution,
    tor_over_ring, FreeResolution,
};
pub use ring::{BaseRing, RModule};
