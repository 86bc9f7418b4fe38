use crate::error::{Error, Result};
use crate::intlinalg::{kernel_basis, lattice_basis, Int, IntMatrix, Subquotient};

use super::FgAbGroup;

/// A homomorphism between presented groups, given by an integer matrix from
/// source generators to target generators that carries source relations
/// into the target relation lattice.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

impl GroupHom {
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.shape() != (target.num_generators(), source.num_generators()) {
            return Err(Error::DimensionMismatch(format!(
                "homomorphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.num_generators(),
                source.num_generators()
            )));
        }
        let images = &matrix * source.presentation();
        if !images.columns().all(|c| target.is_zero_vector(&c)) {
            return Err(Error::NotAHomomorphism(
                "a source relation is not sent to zero".into(),
            ));
        }
        Ok(GroupHom {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(g: &FgAbGroup) -> Self {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            matrix: IntMatrix::identity(g.num_generators()),
        }
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> Self {
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.num_generators(), source.num_generators()),
        }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Int]) -> Vec<Int> {
        self.matrix.mul_vec(x)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &GroupHom) -> Result<GroupHom> {
        if next.source.num_generators() != self.target.num_generators() {
            return Err(Error::DimensionMismatch("composable maps expected".into()));
        }
        Ok(GroupHom {
            source: self.source.clone(),
            target: next.target.clone(),
            matrix: &next.matrix * &self.matrix,
        })
    }

    pub fn sub(&self, other: &GroupHom) -> GroupHom {
        GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix - &other.matrix,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix
            .columns()
            .all(|c| self.target.is_zero_vector(&c))
    }

    /// Generators (not necessarily independent) of `{x : f(x) = 0 in target}`.
    fn kernel_lattice(&self) -> IntMatrix {
        let ns = self.source.num_generators();
        let stacked = IntMatrix::hstack(
            self.target.num_generators(),
            &[&self.matrix, self.target.presentation()],
        );
        let k = kernel_basis(&stacked);
        lattice_basis(&k.submatrix(0..ns, 0..k.cols()))
    }

    /// `ker f` as a subquotient of the source generators.
    pub fn kernel(&self) -> Subquotient {
        Subquotient::new(self.kernel_lattice(), self.source.presentation())
            .expect("source relations lie in the kernel of a homomorphism")
    }

    pub fn cokernel(&self) -> FgAbGroup {
        FgAbGroup::from_presentation(IntMatrix::hstack(
            self.target.num_generators(),
            &[self.target.presentation(), &self.matrix],
        ))
    }

    /// The image as a quotient of the source: `source / ker f`.
    pub fn image(&self) -> FgAbGroup {
        let k = self.kernel_lattice();
        FgAbGroup::from_presentation(IntMatrix::hstack(
            self.source.num_generators(),
            &[self.source.presentation(), &k],
        ))
    }

    /// `ker(self) / im(incoming)`.
    pub fn kernel_mod_image(&self, incoming: &GroupHom) -> Result<Subquotient> {
        if incoming.target.num_generators() != self.source.num_generators() {
            return Err(Error::DimensionMismatch("composable maps expected".into()));
        }
        let relations = IntMatrix::hstack(
            self.source.num_generators(),
            &[self.source.presentation(), &incoming.matrix],
        );
        Subquotient::new(self.kernel_lattice(), &relations).map_err(|_| {
            Error::NotAComplex("image of the incoming map is not inside the kernel".into())
        })
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().group().is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().is_trivial()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Matrix of an inverse for an isomorphism.
    pub fn inverse(&self) -> Result<GroupHom> {
        if !self.is_injective() {
            return Err(Error::NotInvertible("map has a nontrivial kernel".into()));
        }
        let stacked = IntMatrix::hstack(
            self.target.num_generators(),
            &[&self.matrix, self.target.presentation()],
        );
        let solver = crate::intlinalg::Solver::new(&stacked);
        let ns = self.source.num_generators();
        let nt = self.target.num_generators();
        let mut cols = Vec::with_capacity(nt);
        for i in 0..nt {
            let mut e = vec![Int::from(0); nt];
            e[i] = Int::from(1);
            let x = solver
                .solve(&e)
                .ok_or_else(|| Error::NotInvertible("map is not surjective".into()))?;
            cols.push(x[..ns].to_vec());
        }
        GroupHom::new(
            self.target.clone(),
            self.source.clone(),
            IntMatrix::from_columns(ns, &cols),
        )
    }
}

/// Exactness of `· --incoming--> G --outgoing--> ·` at `G`.
pub fn is_exact_at(incoming: &GroupHom, outgoing: &GroupHom) -> bool {
    match incoming.then(outgoing) {
        Ok(c) if c.is_zero() => outgoing
            .kernel_mod_image(incoming)
            .map(|h| h.group().is_trivial())
            .unwrap_or(false),
        _ => false,
    }
}
