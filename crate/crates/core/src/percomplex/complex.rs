use crate::abgroups::{GradedAbGroup, GroupHom};
use crate::error::{Error, Result};
use crate::intlinalg::{subquotient, IntMatrix, Subquotient};

use super::ChainMap;

/// A 2-periodic chain complex of finitely generated free abelian groups:
///
/// ```text
///   Z^even --d--> Z^odd --e--> Z^even
/// ```
///
/// with `d·e = 0` and `e·d = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicComplex {
    even_rank: usize,
    odd_rank: usize,
    d: IntMatrix,
    e: IntMatrix,
}

impl PeriodicComplex {
    pub fn new(d: IntMatrix, e: IntMatrix) -> Result<Self> {
        let (odd_rank, even_rank) = d.shape();
        if e.shape() != (even_rank, odd_rank) {
            return Err(Error::DimensionMismatch(format!(
                "d is {}x{} so e must be {}x{}, got {}x{}",
                odd_rank,
                even_rank,
                even_rank,
                odd_rank,
                e.rows(),
                e.cols()
            )));
        }
        if !(&d * &e).is_zero() || !(&e * &d).is_zero() {
            return Err(Error::NotAComplex(
                "differentials do not square to zero".into(),
            ));
        }
        Ok(PeriodicComplex {
            even_rank,
            odd_rank,
            d,
            e,
        })
    }

    pub fn zero_differential(even_rank: usize, odd_rank: usize) -> Self {
        PeriodicComplex {
            even_rank,
            odd_rank,
            d: IntMatrix::zeros(odd_rank, even_rank),
            e: IntMatrix::zeros(even_rank, odd_rank),
        }
    }

    pub fn zero() -> Self {
        Self::zero_differential(0, 0)
    }

    pub fn even_rank(&self) -> usize {
        self.even_rank
    }

    pub fn odd_rank(&self) -> usize {
        self.odd_rank
    }

    pub fn rank(&self, degree: usize) -> usize {
        if degree.is_multiple_of(2) {
            self.even_rank
        } else {
            self.odd_rank
        }
    }

    /// Even → odd differential.
    pub fn d(&self) -> &IntMatrix {
        &self.d
    }

    /// Odd → even differential.
    pub fn e(&self) -> &IntMatrix {
        &self.e
    }

    pub fn has_zero_differential(&self) -> bool {
        self.d.is_zero() && self.e.is_zero()
    }

    pub fn direct_sum(&self, other: &PeriodicComplex) -> PeriodicComplex {
        PeriodicComplex {
            even_rank: self.even_rank + other.even_rank,
            odd_rank: self.odd_rank + other.odd_rank,
            d: IntMatrix::block_diag(&[&self.d, &other.d]),
            e: IntMatrix::block_diag(&[&self.e, &other.e]),
        }
    }

    /// Signed translation: degrees swap and both differentials change sign.
    pub fn suspension(&self) -> PeriodicComplex {
        PeriodicComplex {
            even_rank: self.odd_rank,
            odd_rank: self.even_rank,
            d: -&self.e,
            e: -&self.d,
        }
    }

    pub fn homology(&self) -> Homology {
        Homology {
            even: subquotient(&self.d, &self.e).expect("d·e = 0"),
            odd: subquotient(&self.e, &self.d).expect("e·d = 0"),
        }
    }

    pub fn homology_groups(&self) -> GradedAbGroup {
        self.homology().groups()
    }

    pub fn is_acyclic(&self) -> bool {
        self.homology_groups().is_trivial()
    }
}

/// Homology with cycle bases kept, so that chain maps can be pushed down.
#[derive(Clone, Debug)]
pub struct Homology {
    pub even: Subquotient,
    pub odd: Subquotient,
}

impl Homology {
    pub fn degree(&self, d: usize) -> &Subquotient {
        if d.is_multiple_of(2) {
            &self.even
        } else {
            &self.odd
        }
    }

    pub fn groups(&self) -> GradedAbGroup {
        GradedAbGroup::new(self.even.group().clone(), self.odd.group().clone())
    }
}

pub fn homology(x: &PeriodicComplex) -> GradedAbGroup {
    x.homology_groups()
}

pub fn suspension(x: &PeriodicComplex) -> PeriodicComplex {
    x.suspension()
}

/// The homomorphism `H(src) → H(tgt)` induced by a chain-level matrix that
/// carries cycles to cycles and boundaries to boundaries.
pub fn induced_between(
    src: &Subquotient,
    tgt: &Subquotient,
    chain: &IntMatrix,
) -> Result<GroupHom> {
    let mut cols = Vec::with_capacity(src.basis().cols());
    for z in src.basis().columns() {
        let w = chain.mul_vec(&z);
        let c = tgt
            .coords_of(&w)
            .ok_or_else(|| Error::NotAChainMap("a cycle is not sent to a cycle".into()))?;
        cols.push(c);
    }
    let m = IntMatrix::from_columns(tgt.basis().cols(), &cols);
    GroupHom::new(src.group().clone(), tgt.group().clone(), m)
        .map_err(|_| Error::NotAChainMap("a boundary is not sent to a boundary".into()))
}

/// Folds the canonical length-1 free resolution of each graded piece of `g`
/// into a periodic complex whose homology is `g`:
/// even = `Z^{n₀} ⊕ Z^{t₁}`, odd = `Z^{t₀} ⊕ Z^{n₁}`, `e` = relations of
/// `g.even` on the first summands, `d` = relations of `g.odd` on the second.
pub fn moore_complex(g: &GradedAbGroup) -> PeriodicComplex {
    let r0 = g.even.canonical_relations();
    let r1 = g.odd.canonical_relations();
    let (n0, t0) = r0.shape();
    let (n1, t1) = r1.shape();
    let d = IntMatrix::block2x2(
        &IntMatrix::zeros(t0, n0),
        &IntMatrix::zeros(t0, t1),
        &IntMatrix::zeros(n1, n0),
        &r1,
    );
    let e = IntMatrix::block2x2(
        &r0,
        &IntMatrix::zeros(n0, n1),
        &IntMatrix::zeros(t1, t0),
        &IntMatrix::zeros(t1, n1),
    );
    PeriodicComplex::new(d, e).expect("moore complex is a complex")
}

/// Lifts a graded homomorphism `a → b` (matrices on presentation generators)
/// to a chain map `moore_complex(a) → moore_complex(b)`.
pub fn moore_lift(
    a: &GradedAbGroup,
    b: &GradedAbGroup,
    f_even: &IntMatrix,
    f_odd: &IntMatrix,
) -> Result<ChainMap> {
    GroupHom::new(a.even.clone(), b.even.clone(), f_even.clone())?;
    GroupHom::new(a.odd.clone(), b.odd.clone(), f_odd.clone())?;
    let lift = |src: &crate::abgroups::FgAbGroup,
                tgt: &crate::abgroups::FgAbGroup,
                f: &IntMatrix|
     -> (IntMatrix, IntMatrix) {
        let on_gens = &(&tgt.canonical_projection() * f) * &src.canonical_generators();
        let rs = src.canonical_relations();
        let rt = tgt.canonical_relations();
        let solver = crate::intlinalg::Solver::new(&rt);
        let image = &on_gens * &rs;
        let cols: Vec<_> = image
            .columns()
            .map(|c| {
                solver
                    .solve(&c)
                    .expect("relations lift along an injective presentation")
            })
            .collect();
        (on_gens, IntMatrix::from_columns(rt.cols(), &cols))
    };
    let (g0, r0) = lift(&a.even, &b.even, f_even);
    let (g1, r1) = lift(&a.odd, &b.odd, f_odd);
    ChainMap::new(
        moore_complex(a),
        moore_complex(b),
        IntMatrix::block_diag(&[&g0, &r1]),
        IntMatrix::block_diag(&[&r0, &g1]),
    )
}

/// Graded tensor product with the Koszul sign:
/// even = A₀⊗B₀ ⊕ A₁⊗B₁, odd = A₀⊗B₁ ⊕ A₁⊗B₀,
/// `d(a⊗b) = da⊗b + (−1)^{|a|} a⊗db`.
pub fn tensor_complex(a: &PeriodicComplex, b: &PeriodicComplex) -> PeriodicComplex {
    let (a0, a1) = (a.even_rank, a.odd_rank);
    let (b0, b1) = (b.even_rank, b.odd_rank);
    let id = IntMatrix::identity;
    // even → odd. Source blocks (A0⊗B0, A1⊗B1), target blocks (A0⊗B1, A1⊗B0).
    let d = IntMatrix::block2x2(
        &id(a0).kron(&b.d),
        &a.e.kron(&id(b1)),
        &a.d.kron(&id(b0)),
        &-&id(a1).kron(&b.e),
    );
    // odd → even. Source blocks (A0⊗B1, A1⊗B0), target blocks (A0⊗B0, A1⊗B1).
    let e = IntMatrix::block2x2(
        &id(a0).kron(&b.e),
        &a.e.kron(&id(b0)),
        &a.d.kron(&id(b1)),
        &-&id(a1).kron(&b.d),
    );
    PeriodicComplex::new(d, e).expect("Koszul signs make the tensor differential square to zero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroups::FgAbGroup;
    use crate::intlinalg::Int;

    fn moore(even: FgAbGroup, odd: FgAbGroup) -> PeriodicComplex {
        moore_complex(&GradedAbGroup::new(even, odd))
    }

    #[test]
    fn rejects_non_complexes() {
        let d = IntMatrix::from_rows(&[[1]]);
        let e = IntMatrix::from_rows(&[[1]]);
        assert!(matches!(
            PeriodicComplex::new(d, e),
            Err(Error::NotAComplex(_))
        ));
        let d = IntMatrix::zeros(1, 2);
        assert!(matches!(
            PeriodicComplex::new(d, IntMatrix::zeros(1, 1)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn moore_complex_of_z2() {
        let x = moore(FgAbGroup::cyclic(2), FgAbGroup::zero());
        assert_eq!((x.even_rank(), x.odd_rank()), (1, 1));
        assert!(x.d().is_zero());
        assert_eq!(x.e(), &IntMatrix::from_rows(&[[2]]));
        let h = x.homology_groups();
        assert!(h.even.is_isomorphic(&FgAbGroup::cyclic(2)));
        assert!(h.odd.is_trivial());
    }

    #[test]
    fn moore_complex_of_free_and_mixed() {
        let x = moore(FgAbGroup::free(1), FgAbGroup::zero());
        assert_eq!((x.even_rank(), x.odd_rank()), (1, 0));
        assert!(x.has_zero_differential());

        let g = GradedAbGroup::new(
            FgAbGroup::from_invariants(1, &[Int::from(4)]).unwrap(),
            FgAbGroup::cyclic(3),
        );
        assert!(moore_complex(&g).homology_groups().is_isomorphic(&g));
    }

    #[test]
    fn zero_differential_homology() {
        let h = PeriodicComplex::zero_differential(2, 0).homology_groups();
        assert!(h.even.is_isomorphic(&FgAbGroup::free(2)));
        assert!(h.odd.is_trivial());
    }

    #[test]
    fn suspension_shifts_homology() {
        let x = moore(FgAbGroup::cyclic(2), FgAbGroup::free(1));
        let s = x.suspension();
        assert!(s
            .homology_groups()
            .is_isomorphic(&x.homology_groups().suspension()));
        let s2 = s.suspension();
        assert_eq!(s2, x);
        let z = PeriodicComplex::zero_differential(1, 0).suspension();
        assert_eq!(z, PeriodicComplex::zero_differential(0, 1));
    }

    #[test]
    fn tensor_examples() {
        let z2 = moore(FgAbGroup::cyclic(2), FgAbGroup::zero());
        let z3 = moore(FgAbGroup::cyclic(3), FgAbGroup::zero());
        assert!(tensor_complex(&z2, &z3).is_acyclic());
        let h = tensor_complex(&z2, &z2).homology_groups();
        assert!(h.even.is_isomorphic(&FgAbGroup::cyclic(2)));
        assert!(h.odd.is_isomorphic(&FgAbGroup::cyclic(2)));
        let unit = PeriodicComplex::zero_differential(1, 0);
        let x = moore(FgAbGroup::cyclic(4), FgAbGroup::free(1));
        let t = tensor_complex(&x, &unit);
        assert_eq!(t, x);
    }
}
