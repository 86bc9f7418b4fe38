//! Relative homological algebra for the ideal of maps that vanish on homology.

mod ideal;
mod resolution;
mod uct;

pub use ideal::{classify, is_i_exact, is_phantom, MorphismClassification};
pub use resolution::{
    ideal_ext, ideal_ext_with, projective_resolution, unreduced_resolution, Resolution,
};
pub use uct::{
    kappa, kappa_map, natural_map, phantom_subgroup, uct_sequence, KappaClass, PhantomSubgroup,
    UctReport,
};
