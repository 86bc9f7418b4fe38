use crate::abgroups::FgAbGroup;
use crate::error::{Error, Result};
use crate::intlinalg::{lattice_basis, IntMatrix, Subquotient};
use crate::percomplex::{homotopy_classes, ChainMap, PeriodicComplex};

use super::ideal::is_i_exact;

/// A length-1 projective resolution `0 → P₁ → P₀ → A` by zero-differential
/// free complexes.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub p1: PeriodicComplex,
    pub p0: PeriodicComplex,
    pub delta1: ChainMap,
    pub delta0: ChainMap,
}

impl Resolution {
    pub fn target(&self) -> &PeriodicComplex {
        self.delta0.target()
    }

    /// Exactness of the augmented complex `0 → P₁ → P₀ → A → 0` at every node.
    pub fn is_exact(&self) -> Result<bool> {
        let objects = [self.p1.clone(), self.p0.clone(), self.target().clone()];
        let maps = [self.delta1.clone(), self.delta0.clone()];
        for pos in 0..3 {
            if !is_i_exact(&objects, &maps, pos)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn from_blocks(
        a: &PeriodicComplex,
        gens: [IntMatrix; 2],
        rels: [IntMatrix; 2],
    ) -> Result<Self> {
        let [g0, g1] = gens;
        let [r0, r1] = rels;
        let p0 = PeriodicComplex::zero_differential(g0.cols(), g1.cols());
        let p1 = PeriodicComplex::zero_differential(r0.cols(), r1.cols());
        let delta1 = ChainMap::new(p1.clone(), p0.clone(), r0, r1)?;
        let delta0 = ChainMap::new(p0.clone(), a.clone(), g0, g1)?;
        Ok(Resolution {
            p1,
            p0,
            delta1,
            delta0,
        })
    }
}

/// The minimal resolution: `P₀` has one generator per canonical generator of
/// `H(A)`, sent to a cycle representing it, and `P₁` one per torsion
/// coefficient.
pub fn projective_resolution(a: &PeriodicComplex) -> Resolution {
    let h = a.homology();
    let block = |sq: &Subquotient| {
        let g = sq.group();
        (
            sq.basis() * &g.canonical_generators(),
            g.canonical_relations(),
        )
    };
    let (g0, r0) = block(&h.even);
    let (g1, r1) = block(&h.odd);
    Resolution::from_blocks(a, [g0, g1], [r0, r1]).expect("cycle representatives form a resolution")
}

/// A deliberately non-minimal resolution: every cycle-basis vector is a
/// generator, relations come from a lattice basis of the homology
/// presentation, and `padding` extra free pairs `Z = Z` are added in each
/// degree.
pub fn unreduced_resolution(a: &PeriodicComplex, padding: usize) -> Resolution {
    let h = a.homology();
    let block = |sq: &Subquotient| {
        let basis = sq.basis();
        let n = basis.cols();
        let gens = IntMatrix::hstack(
            basis.rows(),
            &[basis, &IntMatrix::zeros(basis.rows(), padding)],
        );
        let rels = lattice_basis(sq.group().presentation());
        let rels = IntMatrix::block_diag(&[&rels, &IntMatrix::identity(padding)]);
        debug_assert_eq!(rels.rows(), n + padding);
        (gens, rels)
    };
    let (g0, r0) = block(&h.even);
    let (g1, r1) = block(&h.odd);
    Resolution::from_blocks(a, [g0, g1], [r0, r1]).expect("cycle basis forms a resolution")
}

/// `Extⁿ` relative to the homological ideal, from the minimal resolution of `a`.
pub fn ideal_ext(a: &PeriodicComplex, b: &PeriodicComplex, n: usize) -> Result<FgAbGroup> {
    ideal_ext_with(&projective_resolution(a), b, n)
}

/// Cohomology of `0 → [P₀, B] → [P₁, B] → 0` at position `n`.
pub fn ideal_ext_with(res: &Resolution, b: &PeriodicComplex, n: usize) -> Result<FgAbGroup> {
    if n >= 2 {
        return Ok(FgAbGroup::zero());
    }
    let hc0 = homotopy_classes(&res.p0, b);
    let hc1 = homotopy_classes(&res.p1, b);
    let m = hc0.precompose(&res.delta1, &hc1)?;
    match n {
        0 => Ok(m.kernel().into_group()),
        1 => Ok(m.cokernel()),
        _ => Err(Error::Invalid("unreachable degree".into())),
    }
}
