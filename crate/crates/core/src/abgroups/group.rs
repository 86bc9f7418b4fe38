use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intlinalg::{snf, Int, IntMatrix, SmithDecomposition};

/// A finitely generated abelian group `Z^n / im(R)` for a presentation
/// matrix `R` (rows = generators, columns = relations).
///
/// The Smith decomposition of `R` is computed once at construction; it fixes
/// the canonical form `(rank, invariant factors)` and a canonical coordinate
/// system in which elements are compared exactly.
#[derive(Clone)]
pub struct FgAbGroup {
    presentation: IntMatrix,
    smith: SmithDecomposition,
    rank: usize,
    torsion: Vec<Int>,
    // Rows of U that survive in the canonical form, with their modulus (0 = free).
    kept: Vec<(usize, Int)>,
}

impl FgAbGroup {
    pub fn from_presentation(presentation: IntMatrix) -> Self {
        let smith = snf(&presentation);
        let (n, m) = presentation.shape();
        let mut kept = Vec::new();
        for i in 0..n {
            let d = if i < m {
                smith.s[(i, i)].clone()
            } else {
                Int::zero()
            };
            if !d.is_one() {
                kept.push((i, d));
            }
        }
        // Torsion positions precede free ones in a Smith diagonal.
        let torsion: Vec<Int> = kept
            .iter()
            .filter(|(_, d)| !d.is_zero())
            .map(|(_, d)| d.clone())
            .collect();
        let rank = kept.len() - torsion.len();
        FgAbGroup {
            presentation,
            smith,
            rank,
            torsion,
            kept,
        }
    }

    /// `Z^rank ⊕ ⨁ Z/torsion[i]`. Entries of `torsion` need not be in
    /// canonical order; `0` contributes a free summand and `1` nothing.
    pub fn from_invariants(rank: usize, torsion: &[Int]) -> Result<Self> {
        if let Some(bad) = torsion.iter().find(|d| d.is_negative()) {
            return Err(Error::Invalid(format!("negative cyclic order {bad}")));
        }
        let t = torsion.len();
        let mut p = IntMatrix::zeros(t + rank, t);
        for (i, d) in torsion.iter().enumerate() {
            p[(i, i)] = d.clone();
        }
        Ok(Self::from_presentation(p))
    }

    pub fn zero() -> Self {
        Self::from_presentation(IntMatrix::zeros(0, 0))
    }

    pub fn free(n: usize) -> Self {
        Self::from_presentation(IntMatrix::zeros(n, 0))
    }

    pub fn cyclic(order: i64) -> Self {
        Self::from_presentation(IntMatrix::from_rows(&[[order]]))
    }

    pub fn direct_sum(groups: &[&FgAbGroup]) -> Self {
        let blocks: Vec<&IntMatrix> = groups.iter().map(|g| &g.presentation).collect();
        Self::from_presentation(IntMatrix::block_diag(&blocks))
    }

    pub fn presentation(&self) -> &IntMatrix {
        &self.presentation
    }

    pub fn smith(&self) -> &SmithDecomposition {
        &self.smith
    }

    pub fn num_generators(&self) -> usize {
        self.presentation.rows()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Invariant factors `≥ 2` in divisibility order.
    pub fn torsion(&self) -> &[Int] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Order of the group, or `None` when it is infinite.
    pub fn order(&self) -> Option<Int> {
        self.is_finite().then(|| self.torsion_order())
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> Int {
        self.torsion.iter().fold(Int::one(), |acc, d| acc * d)
    }

    pub fn is_isomorphic(&self, other: &FgAbGroup) -> bool {
        self.rank == other.rank && self.torsion == other.torsion
    }

    /// Number of canonical generators (`torsion.len() + rank`).
    pub fn canonical_len(&self) -> usize {
        self.kept.len()
    }

    /// Modulus of each canonical generator (0 for free ones).
    pub fn canonical_moduli(&self) -> Vec<Int> {
        self.kept.iter().map(|(_, d)| d.clone()).collect()
    }

    /// Canonical generators written in the presentation's generators
    /// (`num_generators × canonical_len`).
    pub fn canonical_generators(&self) -> IntMatrix {
        let idx: Vec<usize> = self.kept.iter().map(|(i, _)| *i).collect();
        self.smith.u_inv.select_columns(&idx)
    }

    /// Linear map from presentation coordinates to (unreduced) canonical
    /// coordinates (`canonical_len × num_generators`).
    pub fn canonical_projection(&self) -> IntMatrix {
        let idx: Vec<usize> = self.kept.iter().map(|(i, _)| *i).collect();
        self.smith.u.select_rows(&idx)
    }

    /// Injective relation matrix of the canonical presentation
    /// (`canonical_len × torsion.len()`, diagonal).
    pub fn canonical_relations(&self) -> IntMatrix {
        IntMatrix::diagonal(self.kept.len(), self.torsion.len(), &self.torsion)
    }

    /// Normal form of a coordinate vector: canonical coordinates, torsion
    /// components reduced into `[0, d)`.
    pub fn normal_form(&self, x: &[Int]) -> Vec<Int> {
        assert_eq!(x.len(), self.num_generators(), "element length mismatch");
        let proj = self.canonical_projection();
        proj.mul_vec(x)
            .into_iter()
            .zip(&self.kept)
            .map(|(y, (_, d))| if d.is_zero() { y } else { y.mod_floor(d) })
            .collect()
    }

    pub fn is_zero_vector(&self, x: &[Int]) -> bool {
        self.normal_form(x).iter().all(Zero::is_zero)
    }

    pub fn vectors_equal(&self, x: &[Int], y: &[Int]) -> bool {
        let diff: Vec<Int> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.is_zero_vector(&diff)
    }

    pub fn element(&self, coords: Vec<Int>) -> Result<GroupElement<'_>> {
        if coords.len() != self.num_generators() {
            return Err(Error::DimensionMismatch(format!(
                "element has {} coordinates, group has {} generators",
                coords.len(),
                self.num_generators()
            )));
        }
        Ok(GroupElement {
            group: self,
            coords,
        })
    }

    pub fn zero_element(&self) -> GroupElement<'_> {
        GroupElement {
            group: self,
            coords: vec![Int::zero(); self.num_generators()],
        }
    }

    /// The `i`-th presentation generator.
    pub fn generator(&self, i: usize) -> GroupElement<'_> {
        let mut coords = vec![Int::zero(); self.num_generators()];
        coords[i] = Int::one();
        GroupElement {
            group: self,
            coords,
        }
    }
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgAbGroup({self})")
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// An element of a presented group: coordinates over its generators.
/// Equality is equality in the group, decided through the normal form.
#[derive(Clone, Debug)]
pub struct GroupElement<'g> {
    group: &'g FgAbGroup,
    coords: Vec<Int>,
}

impl<'g> GroupElement<'g> {
    pub fn group(&self) -> &'g FgAbGroup {
        self.group
    }

    pub fn coords(&self) -> &[Int] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.group.is_zero_vector(&self.coords)
    }

    pub fn normal_form(&self) -> Vec<Int> {
        self.group.normal_form(&self.coords)
    }

    pub fn add(&self, other: &GroupElement<'g>) -> GroupElement<'g> {
        assert!(
            std::ptr::eq(self.group, other.group),
            "elements of different groups"
        );
        GroupElement {
            group: self.group,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Int) -> GroupElement<'g> {
        GroupElement {
            group: self.group,
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }
}

impl PartialEq for GroupElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.group.vectors_equal(&self.coords, &other.coords)
    }
}

/// A `Z/2`-graded group `(even, odd)`.
#[derive(Clone, Debug)]
pub struct GradedAbGroup {
    pub even: FgAbGroup,
    pub odd: FgAbGroup,
}

impl GradedAbGroup {
    pub fn new(even: FgAbGroup, odd: FgAbGroup) -> Self {
        GradedAbGroup { even, odd }
    }

    pub fn zero() -> Self {
        Self::new(FgAbGroup::zero(), FgAbGroup::zero())
    }

    pub fn degree(&self, d: usize) -> &FgAbGroup {
        if d.is_multiple_of(2) {
            &self.even
        } else {
            &self.odd
        }
    }

    /// Degree shift: swaps the even and odd components.
    pub fn suspension(&self) -> Self {
        Self::new(self.odd.clone(), self.even.clone())
    }

    pub fn direct_sum(&self, other: &GradedAbGroup) -> Self {
        Self::new(
            FgAbGroup::direct_sum(&[&self.even, &other.even]),
            FgAbGroup::direct_sum(&[&self.odd, &other.odd]),
        )
    }

    pub fn is_trivial(&self) -> bool {
        self.even.is_trivial() && self.odd.is_trivial()
    }

    pub fn is_isomorphic(&self, other: &GradedAbGroup) -> bool {
        self.even.is_isomorphic(&other.even) && self.odd.is_isomorphic(&other.odd)
    }
}

impl fmt::Display for GradedAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.even, self.odd)
    }
}

pub fn is_isomorphic(a: &FgAbGroup, b: &FgAbGroup) -> bool {
    a.is_isomorphic(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn canonical_forms() {
        let g = FgAbGroup::from_invariants(1, &ints(&[2, 3])).unwrap();
        assert_eq!(g.rank(), 1);
        assert_eq!(g.torsion(), ints(&[6]).as_slice());
        assert_eq!(g.to_string(), "Z/6 ⊕ Z");
        let g = FgAbGroup::from_invariants(0, &ints(&[1, 0])).unwrap();
        assert_eq!((g.rank(), g.torsion().len()), (1, 0));
        assert!(FgAbGroup::from_invariants(0, &ints(&[-2])).is_err());
    }

    #[test]
    fn isomorphism_examples() {
        let a = FgAbGroup::direct_sum(&[&FgAbGroup::cyclic(2), &FgAbGroup::cyclic(3)]);
        assert!(a.is_isomorphic(&FgAbGroup::cyclic(6)));
        assert!(!FgAbGroup::free(1).is_isomorphic(&FgAbGroup::cyclic(2)));
        assert!(FgAbGroup::zero().is_isomorphic(&FgAbGroup::zero()));
        assert!(FgAbGroup::cyclic(1).is_trivial());
    }

    #[test]
    fn element_equality_modulo_relations() {
        // Z^2 / <(2, -2)>: (1, -1) has order 2
        let g = FgAbGroup::from_presentation(IntMatrix::from_rows(&[[2], [-2]]));
        let x = g.element(ints(&[1, -1])).unwrap();
        assert!(!x.is_zero());
        assert!(x.add(&x).is_zero());
        assert_eq!(
            g.element(ints(&[3, 0])).unwrap(),
            g.element(ints(&[1, 2])).unwrap()
        );
        assert!(g.element(ints(&[1])).is_err());
    }

    #[test]
    fn canonical_generators_are_consistent() {
        let g = FgAbGroup::from_presentation(IntMatrix::from_rows(&[[2, 4], [6, 8], [0, 0]]));
        assert_eq!(g.torsion(), ints(&[2, 4]).as_slice());
        assert_eq!(g.rank(), 1);
        let gens = g.canonical_generators();
        let proj = g.canonical_projection();
        assert_eq!(&proj * &gens, IntMatrix::identity(g.canonical_len()));
    }
}
