use serde::Serialize;

use crate::abgroups::{is_exact_at, GroupHom};
use crate::error::{Error, Result};
use crate::percomplex::{homotopy_classes, induced_on_homology, ChainMap, PeriodicComplex};

/// How a morphism sits relative to the ideal of maps vanishing on homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismClassification {
    pub phantom: bool,
    pub monic: bool,
    pub epic: bool,
    pub equivalence: bool,
}

/// `H(f) = 0` in both degrees.
pub fn is_phantom(f: &ChainMap) -> bool {
    induced_on_homology(f).is_zero()
}

pub fn classify(f: &ChainMap) -> MorphismClassification {
    let h = induced_on_homology(f);
    let monic = h.even.is_injective() && h.odd.is_injective();
    let epic = h.even.is_surjective() && h.odd.is_surjective();
    MorphismClassification {
        phantom: h.is_zero(),
        monic,
        epic,
        equivalence: monic && epic,
    }
}

/// Exactness of `objects[0] → objects[1] → …` (with `maps[i]: objects[i] →
/// objects[i+1]`, padded by zero objects at both ends) at `objects[position]`,
/// tested on homology in both degrees.
pub fn is_i_exact(objects: &[PeriodicComplex], maps: &[ChainMap], position: usize) -> Result<bool> {
    if maps.len() + 1 != objects.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} objects need {} maps, got {}",
            objects.len(),
            objects.len().saturating_sub(1),
            maps.len()
        )));
    }
    if position >= objects.len() {
        return Err(Error::Invalid(format!("position {position} out of range")));
    }
    for (i, m) in maps.iter().enumerate() {
        if m.source() != &objects[i] || m.target() != &objects[i + 1] {
            return Err(Error::DimensionMismatch(format!(
                "map {i} has the wrong ends"
            )));
        }
    }
    for i in 0..maps.len().saturating_sub(1) {
        let composite = maps[i].then(&maps[i + 1])?;
        let hc = homotopy_classes(&objects[i], &objects[i + 2]);
        if !hc.is_null_homotopic(&composite)? {
            return Err(Error::NotAComplex(format!(
                "maps {i} and {} compose to a non-null-homotopic map",
                i + 1
            )));
        }
    }
    let here = objects[position].homology_groups();
    let incoming = if position > 0 {
        let h = induced_on_homology(&maps[position - 1]);
        [h.even, h.odd]
    } else {
        let zero = crate::abgroups::FgAbGroup::zero();
        [
            GroupHom::zero(&zero, &here.even),
            GroupHom::zero(&zero, &here.odd),
        ]
    };
    let outgoing = if position < maps.len() {
        let h = induced_on_homology(&maps[position]);
        [h.even, h.odd]
    } else {
        let zero = crate::abgroups::FgAbGroup::zero();
        [
            GroupHom::zero(&here.even, &zero),
            GroupHom::zero(&here.odd, &zero),
        ]
    };
    Ok(is_exact_at(&incoming[0], &outgoing[0]) && is_exact_at(&incoming[1], &outgoing[1]))
}
