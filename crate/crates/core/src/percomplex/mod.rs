//! The homotopy category of 2-periodic complexes of finitely generated free
//! abelian groups: chain maps, homotopy classes, cones, suspension and
//! tensor products.

mod complex;
mod maps;

pub use complex::{
    homology, induced_between, moore_complex, moore_lift, suspension, tensor_complex, Homology,
    PeriodicComplex,
};
pub use maps::{
    homotopy_boundary, homotopy_classes, induced_on_homology, mapping_cone,
    triangle_homology_sequence, ChainMap, Cone, HomotopyClasses, InducedMap,
};
