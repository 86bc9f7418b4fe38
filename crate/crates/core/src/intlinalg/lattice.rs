use super::matrix::{Int, IntMatrix};
use super::smith::{snf, SmithDecomposition};
use crate::abgroups::FgAbGroup;
use crate::error::{Error, Result};

/// Reusable integer solver for `A·x = b` with a fixed `A`.
#[derive(Clone, Debug)]
pub struct Solver {
    smith: SmithDecomposition,
}

impl Solver {
    pub fn new(a: &IntMatrix) -> Self {
        Solver { smith: snf(a) }
    }

    pub fn solve(&self, b: &[Int]) -> Option<Vec<Int>> {
        self.smith.solve(b)
    }

    pub fn smith(&self) -> &SmithDecomposition {
        &self.smith
    }
}

/// One integer solution of `A·x = b`, if any.
pub fn solve(a: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    snf(a).solve(b)
}

/// A saturated basis of `ker(A) ⊆ Z^cols`, as the columns of a `cols × k` matrix.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let d = snf(a);
    let r = d.rank();
    d.v.submatrix(0..a.cols(), r..a.cols())
}

/// A basis (linearly independent columns) of the lattice spanned by the
/// columns of `gens`.
pub fn lattice_basis(gens: &IntMatrix) -> IntMatrix {
    let d = snf(gens);
    let r = d.rank();
    let diag = d.diagonal();
    IntMatrix::from_fn(gens.rows(), r, |i, j| &d.u_inv[(i, j)] * &diag[j])
}

/// Whether every column of `sub` lies in the lattice spanned by the columns of `gens`.
pub fn lattice_contains(gens: &IntMatrix, sub: &IntMatrix) -> bool {
    let solver = Solver::new(gens);
    sub.columns().all(|c| solver.solve(&c).is_some())
}

/// The group `span(basis) / span(relations)` with the basis kept as a
/// certificate, so that ambient vectors can be mapped to group coordinates
/// and back.
#[derive(Clone, Debug)]
pub struct Subquotient {
    basis: IntMatrix,
    solver: Solver,
    group: FgAbGroup,
}

impl Subquotient {
    /// `basis` must have linearly independent columns and every column of
    /// `relations` must lie in its span.
    pub fn new(basis: IntMatrix, relations: &IntMatrix) -> Result<Self> {
        if basis.rows() != relations.rows() {
            return Err(Error::DimensionMismatch(format!(
                "basis has ambient dimension {}, relations {}",
                basis.rows(),
                relations.rows()
            )));
        }
        let solver = Solver::new(&basis);
        let mut coords = Vec::with_capacity(relations.cols());
        for col in relations.columns() {
            match solver.solve(&col) {
                Some(c) => coords.push(c),
                None => {
                    return Err(Error::NotASubcomplex(
                        "relation lies outside the subgroup".into(),
                    ))
                }
            }
        }
        let presentation = IntMatrix::from_columns(basis.cols(), &coords);
        Ok(Subquotient {
            basis,
            solver,
            group: FgAbGroup::from_presentation(presentation),
        })
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn into_group(self) -> FgAbGroup {
        self.group
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    /// Group coordinates of an ambient vector lying in the span of the basis.
    pub fn coords_of(&self, v: &[Int]) -> Option<Vec<Int>> {
        self.solver.solve(v)
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        self.coords_of(v).is_some()
    }

    /// Ambient representative of a coordinate vector.
    pub fn lift(&self, coords: &[Int]) -> Vec<Int> {
        self.basis.mul_vec(coords)
    }
}

/// `ker(L) / im(N)` where `L·N = 0`.
pub fn subquotient(l: &IntMatrix, n: &IntMatrix) -> Result<Subquotient> {
    if l.cols() != n.rows() {
        return Err(Error::DimensionMismatch(format!(
            "L is {}x{} but N is {}x{}",
            l.rows(),
            l.cols(),
            n.rows(),
            n.cols()
        )));
    }
    if !(l * n).is_zero() {
        return Err(Error::NotASubcomplex("L·N ≠ 0".into()));
    }
    Subquotient::new(kernel_basis(l), n)
}
