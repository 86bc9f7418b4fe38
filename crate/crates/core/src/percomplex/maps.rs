use crate::abgroups::{FgAbGroup, GroupHom};
use crate::error::{Error, Result};
use crate::intlinalg::{subquotient, Int, IntMatrix, Subquotient};

use super::complex::{induced_between, PeriodicComplex};

/// Degree-0 chain map between periodic complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: PeriodicComplex,
    target: PeriodicComplex,
    f_even: IntMatrix,
    f_odd: IntMatrix,
}

impl ChainMap {
    pub fn new(
        source: PeriodicComplex,
        target: PeriodicComplex,
        f_even: IntMatrix,
        f_odd: IntMatrix,
    ) -> Result<Self> {
        if f_even.shape() != (target.even_rank(), source.even_rank())
            || f_odd.shape() != (target.odd_rank(), source.odd_rank())
        {
            return Err(Error::DimensionMismatch(
                "chain map blocks have the wrong shape".into(),
            ));
        }
        if target.d() * &f_even != &f_odd * source.d()
            || target.e() * &f_odd != &f_even * source.e()
        {
            return Err(Error::NotAChainMap(
                "map does not commute with the differentials".into(),
            ));
        }
        Ok(ChainMap {
            source,
            target,
            f_even,
            f_odd,
        })
    }

    pub fn identity(x: &PeriodicComplex) -> Self {
        ChainMap {
            source: x.clone(),
            target: x.clone(),
            f_even: IntMatrix::identity(x.even_rank()),
            f_odd: IntMatrix::identity(x.odd_rank()),
        }
    }

    pub fn zero(source: &PeriodicComplex, target: &PeriodicComplex) -> Self {
        ChainMap {
            source: source.clone(),
            target: target.clone(),
            f_even: IntMatrix::zeros(target.even_rank(), source.even_rank()),
            f_odd: IntMatrix::zeros(target.odd_rank(), source.odd_rank()),
        }
    }

    pub fn source(&self) -> &PeriodicComplex {
        &self.source
    }

    pub fn target(&self) -> &PeriodicComplex {
        &self.target
    }

    pub fn f_even(&self) -> &IntMatrix {
        &self.f_even
    }

    pub fn f_odd(&self) -> &IntMatrix {
        &self.f_odd
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &ChainMap) -> Result<ChainMap> {
        if next.source != self.target {
            return Err(Error::DimensionMismatch(
                "chain maps are not composable".into(),
            ));
        }
        Ok(ChainMap {
            source: self.source.clone(),
            target: next.target.clone(),
            f_even: &next.f_even * &self.f_even,
            f_odd: &next.f_odd * &self.f_odd,
        })
    }

    pub fn add(&self, other: &ChainMap) -> Result<ChainMap> {
        self.same_ends(other)?;
        Ok(ChainMap {
            f_even: &self.f_even + &other.f_even,
            f_odd: &self.f_odd + &other.f_odd,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &ChainMap) -> Result<ChainMap> {
        self.same_ends(other)?;
        Ok(ChainMap {
            f_even: &self.f_even - &other.f_even,
            f_odd: &self.f_odd - &other.f_odd,
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &Int) -> ChainMap {
        ChainMap {
            f_even: self.f_even.scale(c),
            f_odd: self.f_odd.scale(c),
            ..self.clone()
        }
    }

    /// `Σf: ΣA → ΣB`; the blocks swap and no sign is needed.
    pub fn suspension(&self) -> ChainMap {
        ChainMap {
            source: self.source.suspension(),
            target: self.target.suspension(),
            f_even: self.f_odd.clone(),
            f_odd: self.f_even.clone(),
        }
    }

    fn same_ends(&self, other: &ChainMap) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::DimensionMismatch(
                "chain maps have different ends".into(),
            ));
        }
        Ok(())
    }
}

/// `H(f)` as a pair of homomorphisms between the homology presentations.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub even: GroupHom,
    pub odd: GroupHom,
}

impl InducedMap {
    pub fn degree(&self, d: usize) -> &GroupHom {
        if d.is_multiple_of(2) {
            &self.even
        } else {
            &self.odd
        }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }
}

pub fn induced_on_homology(f: &ChainMap) -> InducedMap {
    let hs = f.source.homology();
    let ht = f.target.homology();
    InducedMap {
        even: induced_between(&hs.even, &ht.even, &f.f_even).expect("chain maps preserve cycles"),
        odd: induced_between(&hs.odd, &ht.odd, &f.f_odd).expect("chain maps preserve cycles"),
    }
}

/// The distinguished triangle `A → B → cone(f) → ΣA` of a chain map.
#[derive(Clone, Debug)]
pub struct Cone {
    pub cone: PeriodicComplex,
    pub inclusion: ChainMap,
    pub projection: ChainMap,
}

/// Mapping cone with cone_even = A₁ ⊕ B₀, cone_odd = A₀ ⊕ B₁ and
/// `d(a₁, b₀) = (−e_A a₁, f₁a₁ + d_B b₀)`, `e(a₀, b₁) = (−d_A a₀, f₀a₀ + e_B b₁)`.
pub fn mapping_cone(f: &ChainMap) -> Cone {
    let a = &f.source;
    let b = &f.target;
    let (a0, a1, b0, b1) = (a.even_rank(), a.odd_rank(), b.even_rank(), b.odd_rank());
    let d = IntMatrix::block2x2(&-a.e(), &IntMatrix::zeros(a0, b0), &f.f_odd, b.d());
    let e = IntMatrix::block2x2(&-a.d(), &IntMatrix::zeros(a1, b1), &f.f_even, b.e());
    let cone = PeriodicComplex::new(d, e).expect("the cone of a chain map is a complex");
    let inclusion = ChainMap {
        source: b.clone(),
        target: cone.clone(),
        f_even: IntMatrix::vstack(b0, &[&IntMatrix::zeros(a1, b0), &IntMatrix::identity(b0)]),
        f_odd: IntMatrix::vstack(b1, &[&IntMatrix::zeros(a0, b1), &IntMatrix::identity(b1)]),
    };
    let projection = ChainMap {
        source: cone.clone(),
        target: a.suspension(),
        f_even: IntMatrix::hstack(a1, &[&IntMatrix::identity(a1), &IntMatrix::zeros(a1, b0)]),
        f_odd: IntMatrix::hstack(a0, &[&IntMatrix::identity(a0), &IntMatrix::zeros(a0, b1)]),
    };
    debug_assert!(ChainMap::new(
        inclusion.source.clone(),
        inclusion.target.clone(),
        inclusion.f_even.clone(),
        inclusion.f_odd.clone()
    )
    .is_ok());
    Cone {
        cone,
        inclusion,
        projection,
    }
}

/// The 6-periodic homology sequence of the cone triangle of `f`:
/// `H₀A → H₀B → H₀C → H₁A → H₁B → H₁C → H₀A`.
///
/// The maps out of `H(C)` land directly in `H(A)` with the degree shift, so
/// consecutive maps compose in one presentation.
pub fn triangle_homology_sequence(f: &ChainMap) -> Vec<GroupHom> {
    let c = mapping_cone(f);
    let ha = f.source.homology();
    let hb = f.target.homology();
    let hc = c.cone.homology();
    let fs = induced_on_homology(f);
    let ind = |s: &Subquotient, t: &Subquotient, m: &IntMatrix| {
        induced_between(s, t, m).expect("triangle maps are chain maps")
    };
    vec![
        fs.even,
        ind(&hb.even, &hc.even, &c.inclusion.f_even),
        ind(&hc.even, &ha.odd, &c.projection.f_even),
        fs.odd,
        ind(&hb.odd, &hc.odd, &c.inclusion.f_odd),
        ind(&hc.odd, &ha.even, &c.projection.f_odd),
    ]
}

/// The group `[A, B]` of homotopy classes of chain maps, with explicit
/// representatives.
///
/// Chain maps are vectors `(vec f₀, vec f₁)` (row-major); the group is the
/// kernel of the commutation constraints modulo null-homotopic maps
/// `(h, k) ↦ (e_B h + k d_A, d_B k + h e_A)`.
#[derive(Clone, Debug)]
pub struct HomotopyClasses {
    source: PeriodicComplex,
    target: PeriodicComplex,
    sub: Subquotient,
}

fn vec_row_major(m: &IntMatrix) -> Vec<Int> {
    m.data().to_vec()
}

impl HomotopyClasses {
    pub fn group(&self) -> &FgAbGroup {
        self.sub.group()
    }

    pub fn source(&self) -> &PeriodicComplex {
        &self.source
    }

    pub fn target(&self) -> &PeriodicComplex {
        &self.target
    }

    pub fn class_of(&self, f: &ChainMap) -> Result<Vec<Int>> {
        if f.source != self.source || f.target != self.target {
            return Err(Error::DimensionMismatch(
                "chain map has different ends".into(),
            ));
        }
        let mut v = vec_row_major(&f.f_even);
        v.extend(vec_row_major(&f.f_odd));
        self.sub
            .coords_of(&v)
            .ok_or_else(|| Error::NotAChainMap("not a cycle of the Hom complex".into()))
    }

    pub fn representative(&self, coords: &[Int]) -> ChainMap {
        let v = self.sub.lift(coords);
        let (b0, a0) = (self.target.even_rank(), self.source.even_rank());
        let (b1, a1) = (self.target.odd_rank(), self.source.odd_rank());
        let f_even = IntMatrix::new(b0, a0, v[..b0 * a0].to_vec()).expect("block size");
        let f_odd = IntMatrix::new(b1, a1, v[b0 * a0..].to_vec()).expect("block size");
        ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            f_even,
            f_odd,
        }
    }

    /// Representatives of the generators of [`Self::group`].
    pub fn generators(&self) -> Vec<ChainMap> {
        let n = self.group().num_generators();
        (0..n)
            .map(|i| {
                let mut c = vec![Int::from(0); n];
                c[i] = Int::from(1);
                self.representative(&c)
            })
            .collect()
    }

    pub fn is_null_homotopic(&self, f: &ChainMap) -> Result<bool> {
        Ok(self.group().is_zero_vector(&self.class_of(f)?))
    }

    /// The homomorphism `[B', ·] → [A', ·]` given by precomposition with `g: A' → B'`
    /// where `self = [B', C]` and `other = [A', C]`.
    pub fn precompose(&self, g: &ChainMap, other: &HomotopyClasses) -> Result<GroupHom> {
        let cols = self
            .generators()
            .iter()
            .map(|rep| other.class_of(&g.then(rep)?))
            .collect::<Result<Vec<_>>>()?;
        GroupHom::new(
            self.group().clone(),
            other.group().clone(),
            IntMatrix::from_columns(other.group().num_generators(), &cols),
        )
    }
}

/// The null-homotopic map `e_B h + k d_A` (even), `d_B k + h e_A` (odd) for
/// `h: A₀ → B₁`, `k: A₁ → B₀`.
pub fn homotopy_boundary(
    a: &PeriodicComplex,
    b: &PeriodicComplex,
    h: &IntMatrix,
    k: &IntMatrix,
) -> Result<ChainMap> {
    if h.shape() != (b.odd_rank(), a.even_rank()) || k.shape() != (b.even_rank(), a.odd_rank()) {
        return Err(Error::DimensionMismatch(
            "homotopy blocks have the wrong shape".into(),
        ));
    }
    ChainMap::new(
        a.clone(),
        b.clone(),
        &(b.e() * h) + &(k * a.d()),
        &(b.d() * k) + &(h * a.e()),
    )
}

pub fn homotopy_classes(a: &PeriodicComplex, b: &PeriodicComplex) -> HomotopyClasses {
    let (a0, a1, b0, b1) = (a.even_rank(), a.odd_rank(), b.even_rank(), b.odd_rank());
    let id = IntMatrix::identity;
    // vec(P X Q) = (P ⊗ Qᵀ) vec(X) for row-major vec.
    let constraints = IntMatrix::block2x2(
        &b.d().kron(&id(a0)),
        &-&id(b1).kron(&a.d().transpose()),
        &-&id(b0).kron(&a.e().transpose()),
        &b.e().kron(&id(a1)),
    );
    let boundaries = IntMatrix::block2x2(
        &b.e().kron(&id(a0)),
        &id(b0).kron(&a.d().transpose()),
        &id(b1).kron(&a.e().transpose()),
        &b.d().kron(&id(a1)),
    );
    HomotopyClasses {
        source: a.clone(),
        target: b.clone(),
        sub: subquotient(&constraints, &boundaries).expect("null-homotopic maps are chain maps"),
    }
}
