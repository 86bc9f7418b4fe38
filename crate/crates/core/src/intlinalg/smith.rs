//! Smith normal form over the integers.
//!
//! The reduction works on a copy of the input and records every elementary
//! operation in the unimodular transforms, so that `U·A·V = S` holds exactly.
//! Pivots are chosen by minimal absolute value; ties go to the lowest
//! row-major index. The transforms are therefore deterministic.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{Int, IntMatrix};

/// `U·A·V = S` with `U`, `V` unimodular and `S` diagonal with a divisibility
/// chain of non-negative entries (zeros trailing).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    /// The diagonal `s_1, …, s_min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<Int> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|d| !d.is_zero()).count()
    }

    /// Solves `A·x = b` over the integers, returning one solution if any exists.
    pub fn solve(&self, b: &[Int]) -> Option<Vec<Int>> {
        let (rows, cols) = self.s.shape();
        assert_eq!(b.len(), rows, "right-hand side length mismatch");
        let ub = self.u.mul_vec(b);
        let mut y = vec![Int::zero(); cols];
        for (i, c) in ub.iter().enumerate() {
            let d = if i < cols {
                &self.s[(i, i)]
            } else {
                &Int::zero()
            };
            if d.is_zero() {
                if !c.is_zero() {
                    return None;
                }
            } else {
                let (q, r) = c.div_rem(d);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            }
        }
        Some(self.v.mul_vec(&y))
    }
}

struct Reducer {
    s: IntMatrix,
    // Present only when transforms are tracked.
    transforms: Option<Transforms>,
}

struct Transforms {
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        if let Some(t) = &mut self.transforms {
            t.u.swap_rows(a, b);
            t.u_inv.swap_cols(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        if let Some(t) = &mut self.transforms {
            t.v.swap_cols(a, b);
            t.v_inv.swap_rows(a, b);
        }
    }

    // row[target] += q * row[source]
    fn add_row(&mut self, target: usize, source: usize, q: &Int) {
        self.s.add_row_multiple(target, source, q);
        if let Some(t) = &mut self.transforms {
            t.u.add_row_multiple(target, source, q);
            t.u_inv.add_col_multiple(source, target, &-q);
        }
    }

    // col[target] += q * col[source]
    fn add_col(&mut self, target: usize, source: usize, q: &Int) {
        self.s.add_col_multiple(target, source, q);
        if let Some(t) = &mut self.transforms {
            t.v.add_col_multiple(target, source, q);
            t.v_inv.add_row_multiple(source, target, &-q);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.s.negate_row(i);
        if let Some(t) = &mut self.transforms {
            t.u.negate_row(i);
            t.u_inv.negate_col(i);
        }
    }

    fn min_in_submatrix(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), Int)> = None;
        for i in t..self.s.rows() {
            for j in t..self.s.cols() {
                let a = &self.s[(i, j)];
                if a.is_zero() {
                    continue;
                }
                let a = a.abs();
                if best.as_ref().is_none_or(|(_, b)| &a < b) {
                    best = Some(((i, j), a));
                }
            }
        }
        best.map(|(pos, _)| pos)
    }

    fn min_in_cross(&self, t: usize) -> (usize, usize) {
        let mut pos = (t, t);
        let mut best = self.s[(t, t)].abs();
        for i in t + 1..self.s.rows() {
            let a = &self.s[(i, t)];
            if !a.is_zero() && (best.is_zero() || a.abs() < best) {
                best = a.abs();
                pos = (i, t);
            }
        }
        for j in t + 1..self.s.cols() {
            let a = &self.s[(t, j)];
            if !a.is_zero() && (best.is_zero() || a.abs() < best) {
                best = a.abs();
                pos = (t, j);
            }
        }
        pos
    }

    fn run(&mut self) {
        let (rows, cols) = self.s.shape();
        for t in 0..rows.min(cols) {
            let Some((pi, pj)) = self.min_in_submatrix(t) else {
                return;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let pivot = self.s[(t, t)].clone();
                let mut dirty = false;
                for i in t + 1..rows {
                    if self.s[(i, t)].is_zero() {
                        continue;
                    }
                    let q = self.s[(i, t)].div_floor(&pivot);
                    self.add_row(i, t, &-q);
                    dirty |= !self.s[(i, t)].is_zero();
                }
                for j in t + 1..cols {
                    if self.s[(t, j)].is_zero() {
                        continue;
                    }
                    let q = self.s[(t, j)].div_floor(&pivot);
                    self.add_col(j, t, &-q);
                    dirty |= !self.s[(t, j)].is_zero();
                }
                if dirty {
                    let (i, j) = self.min_in_cross(t);
                    self.swap_rows(t, i);
                    self.swap_cols(t, j);
                    continue;
                }
                let offender = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !self.s[(i, j)].is_multiple_of(&pivot)));
                match offender {
                    Some(i) => self.add_row(t, i, &Int::one()),
                    None => break,
                }
            }
            if self.s[(t, t)].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

/// Smith normal form with unimodular transforms: `U·A·V = S`.
pub fn snf(a: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = a.shape();
    let mut r = Reducer {
        s: a.clone(),
        transforms: Some(Transforms {
            u: IntMatrix::identity(rows),
            u_inv: IntMatrix::identity(rows),
            v: IntMatrix::identity(cols),
            v_inv: IntMatrix::identity(cols),
        }),
    };
    r.run();
    let t = r.transforms.expect("transforms tracked");
    SmithDecomposition {
        u: t.u,
        s: r.s,
        v: t.v,
        u_inv: t.u_inv,
        v_inv: t.v_inv,
    }
}

/// Smith diagonal without tracking transforms.
pub fn smith_diagonal(a: &IntMatrix) -> Vec<Int> {
    let mut r = Reducer {
        s: a.clone(),
        transforms: None,
    };
    r.run();
    let n = a.rows().min(a.cols());
    (0..n).map(|i| r.s[(i, i)].clone()).collect()
}

/// Invariants of `coker(A: Z^cols → Z^rows)`: free rank and the invariant
/// factors `≥ 2` in divisibility order.
pub fn cokernel_invariants(a: &IntMatrix) -> (usize, Vec<Int>) {
    let diag = smith_diagonal(a);
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    let factors = diag
        .into_iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .collect();
    (a.rows() - nonzero, factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    fn check(a: &IntMatrix) -> SmithDecomposition {
        let d = snf(a);
        assert_eq!(&(&d.u * a) * &d.v, d.s, "U·A·V = S");
        assert_eq!(&d.u * &d.u_inv, IntMatrix::identity(a.rows()));
        assert_eq!(&d.v * &d.v_inv, IntMatrix::identity(a.cols()));
        d
    }

    #[test]
    fn two_by_two_example() {
        let d = check(&IntMatrix::from_rows(&[[2, 4], [6, 8]]));
        assert_eq!(d.diagonal(), ints(&[2, 4]));
    }

    #[test]
    fn identity_and_zero() {
        let d = check(&IntMatrix::identity(3));
        assert_eq!(d.s, IntMatrix::identity(3));
        assert_eq!(d.u, IntMatrix::identity(3));
        assert_eq!(d.v, IntMatrix::identity(3));
        let z = IntMatrix::zeros(2, 3);
        let d = check(&z);
        assert!(d.s.is_zero());
        assert_eq!(d.rank(), 0);
    }

    #[test]
    fn empty_dimensions() {
        for (r, c) in [(0, 0), (0, 3), (2, 0)] {
            let d = check(&IntMatrix::zeros(r, c));
            assert_eq!(d.s.shape(), (r, c));
            assert!(d.diagonal().is_empty());
        }
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(
            cokernel_invariants(&IntMatrix::from_rows(&[[2]])),
            (0, ints(&[2]))
        );
        assert_eq!(cokernel_invariants(&IntMatrix::zeros(2, 0)), (2, vec![]));
        assert_eq!(
            cokernel_invariants(&IntMatrix::from_rows(&[[2, 0], [0, 3]])),
            (0, ints(&[6]))
        );
    }

    #[test]
    fn divisibility_fix_up() {
        // diag(2, 3) must become diag(1, 6)
        let d = check(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(d.diagonal(), ints(&[1, 6]));
        let d = check(&IntMatrix::from_rows(&[[4, 0, 0], [0, 6, 0], [0, 0, 10]]));
        assert_eq!(d.diagonal(), ints(&[2, 2, 60]));
    }

    #[test]
    fn solve_consistency() {
        let a = IntMatrix::from_rows(&[[2, 4], [6, 8]]);
        let d = snf(&a);
        let x = d.solve(&ints(&[6, 14])).unwrap();
        assert_eq!(a.mul_vec(&x), ints(&[6, 14]));
        assert!(d.solve(&ints(&[1, 0])).is_none());
    }

    fn arb_matrix() -> impl Strategy<Value = IntMatrix> {
        (0usize..=6, 0usize..=6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-9i64..=9, r * c).prop_map(move |v| {
                IntMatrix::new(r, c, v.into_iter().map(Int::from).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn decomposition_is_valid(a in arb_matrix()) {
            let d = check(&a);
            prop_assert!(d.u.determinant().unwrap().abs().is_one());
            prop_assert!(d.v.determinant().unwrap().abs().is_one());
            for i in 0..a.rows() {
                for j in 0..a.cols() {
                    if i != j {
                        prop_assert!(d.s[(i, j)].is_zero());
                    }
                }
            }
            let diag = d.diagonal();
            prop_assert!(diag.iter().all(|x| !x.is_negative()));
            for w in diag.windows(2) {
                prop_assert!(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()));
            }
            prop_assert_eq!(smith_diagonal(&a), diag);
        }

        #[test]
        fn transpose_has_same_diagonal(a in arb_matrix()) {
            prop_assert_eq!(smith_diagonal(&a.transpose()), smith_diagonal(&a));
        }
    }
}
