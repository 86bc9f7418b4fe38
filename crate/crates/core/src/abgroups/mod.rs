//! Finitely generated abelian groups and `Z/2`-graded pairs of them, with
//! Hom, Ext¹, ⊗ and Tor₁.

mod functors;
mod group;
mod hom;

pub use functors::{
    ext1, graded_ext, graded_hom, graded_tensor, graded_tor, hom, shifted_ext, tensor, tor1,
    ExtGroup, GradedExt, GradedHom, HomGroup,
};
pub use group::{is_isomorphic, FgAbGroup, GradedAbGroup, GroupElement};
pub use hom::{is_exact_at, GroupHom};
