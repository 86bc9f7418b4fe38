//! Hom, Ext¹, ⊗ and Tor₁ of finitely generated abelian groups.
//!
//! All four are computed from the canonical length-1 free resolution
//! `0 → Z^t → Z^n → A → 0` of the first argument, where `n` counts canonical
//! generators and `t` the torsion ones. Groups of the form `B^k` are indexed
//! generator-major: component `(i, j)` sits at position `i·p + j` where `p` is
//! the number of generators of `B`.

use crate::error::{Error, Result};
use crate::intlinalg::{Int, IntMatrix, Subquotient};

use super::{FgAbGroup, GradedAbGroup, GroupHom};

fn power(b: &FgAbGroup, k: usize) -> FgAbGroup {
    FgAbGroup::from_presentation(IntMatrix::identity(k).kron(b.presentation()))
}

/// Precomposition with the canonical relations of `a`: `B^n → B^t`.
fn precompose_relations(a: &FgAbGroup, b: &FgAbGroup) -> GroupHom {
    let n = a.canonical_len();
    let t = a.torsion().len();
    let p = b.num_generators();
    let m = a
        .canonical_relations()
        .transpose()
        .kron(&IntMatrix::identity(p));
    GroupHom::new(power(b, n), power(b, t), m).expect("precomposition is well-defined")
}

/// `Hom(A, B)` with a basis certificate: elements are homomorphisms given by
/// their values on the canonical generators of `A`.
#[derive(Clone, Debug)]
pub struct HomGroup {
    source: FgAbGroup,
    target: FgAbGroup,
    sub: Subquotient,
}

impl HomGroup {
    pub fn group(&self) -> &FgAbGroup {
        self.sub.group()
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    /// Coordinates of the homomorphism with matrix `m` (target generators ×
    /// source generators).
    pub fn element_of(&self, m: &IntMatrix) -> Result<Vec<Int>> {
        GroupHom::new(self.source.clone(), self.target.clone(), m.clone())?;
        let values = m * &self.source.canonical_generators();
        let p = self.target.num_generators();
        let mut v = Vec::with_capacity(values.cols() * p);
        for col in values.columns() {
            v.extend(col);
        }
        debug_assert_eq!(v.len(), self.sub.ambient_dim());
        self.sub
            .coords_of(&v)
            .ok_or_else(|| Error::NotAHomomorphism("values violate source relations".into()))
    }

    /// A matrix (target generators × source generators) representing the
    /// homomorphism with the given coordinates.
    pub fn matrix_of(&self, coords: &[Int]) -> IntMatrix {
        let v = self.sub.lift(coords);
        let p = self.target.num_generators();
        let n = self.source.canonical_len();
        let values = IntMatrix::from_fn(p, n, |j, i| v[i * p + j].clone());
        &values * &self.source.canonical_projection()
    }

    pub fn evaluate(&self, coords: &[Int], a: &[Int]) -> Vec<Int> {
        self.matrix_of(coords).mul_vec(a)
    }
}

pub fn hom(a: &FgAbGroup, b: &FgAbGroup) -> HomGroup {
    HomGroup {
        source: a.clone(),
        target: b.clone(),
        sub: precompose_relations(a, b).kernel(),
    }
}

/// `Ext¹(A, B) = coker(B^n → B^t)`. An element is a cocycle: one value in `B`
/// per torsion generator of `A`.
#[derive(Clone, Debug)]
pub struct ExtGroup {
    source: FgAbGroup,
    target: FgAbGroup,
    group: FgAbGroup,
}

impl ExtGroup {
    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    /// The class of the cocycle sending the `k`-th canonical relation of `A`
    /// to `values[k] ∈ B` (coordinates over the generators of `B`).
    pub fn class_of_cocycle(&self, values: &[Vec<Int>]) -> Result<Vec<Int>> {
        if values.len() != self.source.torsion().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} cocycle values for {} relations",
                values.len(),
                self.source.torsion().len()
            )));
        }
        let p = self.target.num_generators();
        let mut v = Vec::with_capacity(values.len() * p);
        for val in values {
            if val.len() != p {
                return Err(Error::DimensionMismatch("cocycle value length".into()));
            }
            v.extend(val.iter().cloned());
        }
        Ok(v)
    }
}

pub fn ext1(a: &FgAbGroup, b: &FgAbGroup) -> ExtGroup {
    ExtGroup {
        source: a.clone(),
        target: b.clone(),
        group: precompose_relations(a, b).cokernel(),
    }
}

/// `A ⊗ B` presented on generators `e_i ⊗ f_j`.
pub fn tensor(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    let (n, p) = (a.num_generators(), b.num_generators());
    let left = a.presentation().kron(&IntMatrix::identity(p));
    let right = IntMatrix::identity(n).kron(b.presentation());
    FgAbGroup::from_presentation(IntMatrix::hstack(n * p, &[&left, &right]))
}

/// `Tor₁(A, B) = ker(B^t → B^n)` from the canonical resolution of `A`.
pub fn tor1(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    let n = a.canonical_len();
    let t = a.torsion().len();
    let p = b.num_generators();
    let m = a.canonical_relations().kron(&IntMatrix::identity(p));
    GroupHom::new(power(b, t), power(b, n), m)
        .expect("tensored resolution map is well-defined")
        .kernel()
        .into_group()
}

/// Degree-0 graded Hom: `Hom(A₀, B₀) ⊕ Hom(A₁, B₁)`.
#[derive(Clone, Debug)]
pub struct GradedHom {
    pub even: HomGroup,
    pub odd: HomGroup,
    group: FgAbGroup,
}

impl GradedHom {
    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn element_of(&self, even: &IntMatrix, odd: &IntMatrix) -> Result<Vec<Int>> {
        let mut c = self.even.element_of(even)?;
        c.extend(self.odd.element_of(odd)?);
        Ok(c)
    }

    /// Splits coordinates of the sum group into (even, odd) parts.
    pub fn split<'a>(&self, coords: &'a [Int]) -> (&'a [Int], &'a [Int]) {
        coords.split_at(self.even.group().num_generators())
    }
}

pub fn graded_hom(a: &GradedAbGroup, b: &GradedAbGroup) -> GradedHom {
    let even = hom(&a.even, &b.even);
    let odd = hom(&a.odd, &b.odd);
    let group = FgAbGroup::direct_sum(&[even.group(), odd.group()]);
    GradedHom { even, odd, group }
}

/// A pair of Ext groups summed; which degrees pair up depends on the constructor.
#[derive(Clone, Debug)]
pub struct GradedExt {
    pub parts: [ExtGroup; 2],
    group: FgAbGroup,
}

impl GradedExt {
    fn from_parts(first: ExtGroup, second: ExtGroup) -> Self {
        let group = FgAbGroup::direct_sum(&[first.group(), second.group()]);
        GradedExt {
            parts: [first, second],
            group,
        }
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }
}

/// Degree-preserving graded Ext: `Ext(A₀, B₀) ⊕ Ext(A₁, B₁)`.
pub fn graded_ext(a: &GradedAbGroup, b: &GradedAbGroup) -> GradedExt {
    GradedExt::from_parts(ext1(&a.even, &b.even), ext1(&a.odd, &b.odd))
}

/// The Ext term of the coefficient sequence: `Ext(A₀, B₁) ⊕ Ext(A₁, B₀)`.
pub fn shifted_ext(a: &GradedAbGroup, b: &GradedAbGroup) -> GradedExt {
    GradedExt::from_parts(ext1(&a.even, &b.odd), ext1(&a.odd, &b.even))
}

/// Koszul-graded tensor product: even = A₀⊗B₀ ⊕ A₁⊗B₁, odd = A₀⊗B₁ ⊕ A₁⊗B₀.
pub fn graded_tensor(a: &GradedAbGroup, b: &GradedAbGroup) -> GradedAbGroup {
    GradedAbGroup::new(
        FgAbGroup::direct_sum(&[&tensor(&a.even, &b.even), &tensor(&a.odd, &b.odd)]),
        FgAbGroup::direct_sum(&[&tensor(&a.even, &b.odd), &tensor(&a.odd, &b.even)]),
    )
}

/// Graded Tor₁ in its natural grading (even = Tor(A₀,B₀) ⊕ Tor(A₁,B₁)).
pub fn graded_tor(a: &GradedAbGroup, b: &GradedAbGroup) -> GradedAbGroup {
    GradedAbGroup::new(
        FgAbGroup::direct_sum(&[&tor1(&a.even, &b.even), &tor1(&a.odd, &b.odd)]),
        FgAbGroup::direct_sum(&[&tor1(&a.even, &b.odd), &tor1(&a.odd, &b.even)]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn z(n: i64) -> FgAbGroup {
        FgAbGroup::cyclic(n)
    }

    fn is_cyclic(g: &FgAbGroup, d: i64) -> bool {
        g.is_isomorphic(&z(d))
    }

    #[test]
    fn hom_examples() {
        assert!(is_cyclic(hom(&z(4), &z(6)).group(), 2));
        let b = FgAbGroup::from_invariants(1, &[Int::from(3)]).unwrap();
        assert!(hom(&FgAbGroup::free(1), &b).group().is_isomorphic(&b));
        assert!(hom(&z(2), &FgAbGroup::free(1)).group().is_trivial());
    }

    #[test]
    fn ext_examples() {
        assert!(is_cyclic(ext1(&z(2), &z(2)).group(), 2));
        let b = FgAbGroup::from_invariants(2, &[Int::from(5)]).unwrap();
        assert!(ext1(&FgAbGroup::free(3), &b).group().is_trivial());
        assert!(is_cyclic(ext1(&z(4), &z(6)).group(), 2));
        assert!(is_cyclic(ext1(&z(3), &FgAbGroup::free(1)).group(), 3));
    }

    #[test]
    fn tensor_and_tor_examples() {
        assert!(is_cyclic(&tensor(&z(4), &z(6)), 2));
        let b = FgAbGroup::from_invariants(1, &[Int::from(4)]).unwrap();
        assert!(tensor(&FgAbGroup::free(1), &b).is_isomorphic(&b));
        let t = tensor(&z(2), &FgAbGroup::free(2));
        assert!(
            t.is_isomorphic(&FgAbGroup::from_invariants(0, &[Int::from(2), Int::from(2)]).unwrap())
        );
        assert!(is_cyclic(&tor1(&z(4), &z(6)), 2));
        assert!(tor1(&FgAbGroup::free(1), &b).is_trivial());
        assert!(is_cyclic(&tor1(&z(2), &z(2)), 2));
    }

    #[test]
    fn hom_elements_evaluate() {
        // Hom(Z/4, Z/6) = Z/2 generated by 1 ↦ 3
        let h = hom(&z(4), &z(6));
        let m = IntMatrix::from_rows(&[[3]]);
        let c = h.element_of(&m).unwrap();
        assert!(!h.group().is_zero_vector(&c));
        let back = h.matrix_of(&c);
        assert!(z(6).vectors_equal(&back.column(0), &[Int::from(3)]));
        assert!(h.element_of(&IntMatrix::from_rows(&[[1]])).is_err());
        let zero = h.element_of(&IntMatrix::from_rows(&[[6]])).unwrap();
        assert!(h.group().is_zero_vector(&zero));
    }

    #[test]
    fn ext_cocycle_classes() {
        // Ext(Z/2, Z/2): the cocycle 2 ↦ 1 is the nonzero class, 2 ↦ 0 is zero
        let e = ext1(&z(2), &z(2));
        let tau = e.class_of_cocycle(&[vec![Int::from(1)]]).unwrap();
        assert!(!e.group().is_zero_vector(&tau));
        let zero = e.class_of_cocycle(&[vec![Int::from(0)]]).unwrap();
        assert!(e.group().is_zero_vector(&zero));
    }

    fn pair(seed: u64) -> (FgAbGroup, FgAbGroup) {
        let mut rng = StdRng::seed_from_u64(seed);
        (
            random::group(&mut rng, 3, 12),
            random::group(&mut rng, 3, 12),
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn cyclic_closed_forms(m in 2i64..=12, n in 2i64..=12) {
            let g = num_integer::gcd(m, n);
            prop_assert!(is_cyclic(hom(&z(m), &z(n)).group(), g));
            prop_assert!(is_cyclic(ext1(&z(m), &z(n)).group(), g));
            prop_assert!(is_cyclic(&tensor(&z(m), &z(n)), g));
            prop_assert!(is_cyclic(&tor1(&z(m), &z(n)), g));
        }

        #[test]
        fn tensor_and_tor_are_symmetric(seed in any::<u64>()) {
            let (a, b) = pair(seed);
            prop_assert!(tensor(&a, &b).is_isomorphic(&tensor(&b, &a)));
            prop_assert!(tor1(&a, &b).is_isomorphic(&tor1(&b, &a)));
            prop_assert!(tor1(&a, &b).is_finite());
        }

        #[test]
        fn additive_in_first_argument(seed in any::<u64>()) {
            let (a, b) = pair(seed);
            let (c, _) = pair(seed.wrapping_add(1));
            let ac = FgAbGroup::direct_sum(&[&a, &c]);
            let sum = |x: &FgAbGroup, y: &FgAbGroup| FgAbGroup::direct_sum(&[x, y]);
            prop_assert!(hom(&ac, &b).group().is_isomorphic(&sum(hom(&a, &b).group(), hom(&c, &b).group())));
            prop_assert!(ext1(&ac, &b).group().is_isomorphic(&sum(ext1(&a, &b).group(), ext1(&c, &b).group())));
            prop_assert!(tensor(&ac, &b).is_isomorphic(&sum(&tensor(&a, &b), &tensor(&c, &b))));
        }

        #[test]
        fn ext_is_finite(seed in any::<u64>()) {
            let (a, b) = pair(seed);
            let e = ext1(&a, &b);
            prop_assert!(e.group().is_finite());
            // Ext(A, B) vanishes when A is free
            if a.torsion().is_empty() {
                prop_assert!(e.group().is_trivial());
            }
        }
    }
}
