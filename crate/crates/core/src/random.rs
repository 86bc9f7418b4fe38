//! Seeded generators for randomized checks.
//!
//! Used by the property tests, the acceptance suite and `homkit selftest`.
//! Everything is driven by a caller-supplied RNG, so a seed reproduces a run.

use rand::Rng;

use crate::abgroups::{FgAbGroup, GradedAbGroup, GroupHom};
use crate::intlinalg::{kernel_basis, Int, IntMatrix};
use crate::percomplex::{ChainMap, PeriodicComplex};

pub fn matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| Int::from(rng.gen_range(-bound..=bound)))
}

/// Matrix with roughly half its entries zero.
pub fn sparse_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    bound: i64,
) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| {
        if rng.gen_bool(0.5) {
            Int::from(0)
        } else {
            Int::from(rng.gen_range(-bound..=bound))
        }
    })
}

/// Product of `steps` elementary transvections and sign flips.
pub fn unimodular<R: Rng + ?Sized>(rng: &mut R, n: usize, steps: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    if n == 0 {
        return m;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            if rng.gen_bool(0.3) {
                m.negate_row(i);
            }
        } else {
            let q = Int::from(if rng.gen_bool(0.5) { 1 } else { -1 });
            m.add_row_multiple(i, j, &q);
        }
    }
    m
}

/// A periodic complex with ranks `≤ max_rank` and all differential entries in
/// `[-bound, bound]`.
///
/// `e` is drawn from the lattice of matrices with `d·e = 0 = e·d`, so the
/// complex is valid by construction; draws with oversized entries are
/// rejected.
pub fn complex<R: Rng + ?Sized>(rng: &mut R, max_rank: usize, bound: i64) -> PeriodicComplex {
    loop {
        let a0 = rng.gen_range(0..=max_rank);
        let a1 = rng.gen_range(0..=max_rank);
        let d = match rng.gen_range(0..4) {
            0 => IntMatrix::zeros(a1, a0),
            1 => matrix(rng, a1, a0, bound),
            _ => sparse_matrix(rng, a1, a0, bound),
        };
        let k = kernel_basis(&d);
        let w = kernel_basis(&d.transpose());
        let c = sparse_matrix(rng, k.cols(), w.cols(), 2);
        let e = &(&k * &c) * &w.transpose();
        let (d, e) = if rng.gen_bool(0.5) { (d, e) } else { (e, d) };
        if d.max_abs_entry() > Int::from(bound) || e.max_abs_entry() > Int::from(bound) {
            continue;
        }
        return PeriodicComplex::new(d, e).expect("constructed with d·e = e·d = 0");
    }
}

/// An acyclic complex: a sum of elementary `Z --±1--> Z` pieces conjugated
/// by random unimodular changes of basis.
pub fn acyclic_complex<R: Rng + ?Sized>(rng: &mut R, max_pieces: usize) -> PeriodicComplex {
    let pieces = rng.gen_range(1..=max_pieces);
    let mut x = PeriodicComplex::zero();
    for _ in 0..pieces {
        let u = IntMatrix::from_rows(&[[if rng.gen_bool(0.5) { 1 } else { -1 }]]);
        let z = IntMatrix::zeros(1, 1);
        let piece = if rng.gen_bool(0.5) {
            PeriodicComplex::new(u, z)
        } else {
            PeriodicComplex::new(z, u)
        }
        .expect("elementary piece");
        x = x.direct_sum(&piece);
    }
    let (n0, n1) = (x.even_rank(), x.odd_rank());
    let p = unimodular(rng, n0, 2 * n0);
    let q = unimodular(rng, n1, 2 * n1);
    let p_inv = crate::intlinalg::snf(&p);
    let q_inv = crate::intlinalg::snf(&q);
    // p⁻¹ = V·U up to the trivial Smith form of a unimodular matrix.
    let p_inv = &p_inv.v * &p_inv.u;
    let q_inv = &q_inv.v * &q_inv.u;
    let d = &(&q * x.d()) * &p_inv;
    let e = &(&p * x.e()) * &q_inv;
    PeriodicComplex::new(d, e).expect("conjugate of a complex")
}

/// A random chain map `a → b`, drawn from the lattice of chain maps.
pub fn chain_map<R: Rng + ?Sized>(
    rng: &mut R,
    a: &PeriodicComplex,
    b: &PeriodicComplex,
    bound: i64,
) -> ChainMap {
    let (a0, a1, b0, b1) = (a.even_rank(), a.odd_rank(), b.even_rank(), b.odd_rank());
    let id = IntMatrix::identity;
    let constraints = IntMatrix::block2x2(
        &b.d().kron(&id(a0)),
        &-&id(b1).kron(&a.d().transpose()),
        &-&id(b0).kron(&a.e().transpose()),
        &b.e().kron(&id(a1)),
    );
    let k = kernel_basis(&constraints);
    let coeffs: Vec<Int> = (0..k.cols())
        .map(|_| Int::from(rng.gen_range(-bound..=bound)))
        .collect();
    let v = k.mul_vec(&coeffs);
    let f_even = IntMatrix::new(b0, a0, v[..b0 * a0].to_vec()).expect("block");
    let f_odd = IntMatrix::new(b1, a1, v[b0 * a0..].to_vec()).expect("block");
    ChainMap::new(a.clone(), b.clone(), f_even, f_odd).expect("kernel vectors are chain maps")
}

/// A small finitely generated group: up to `max_summands` cyclic summands with
/// orders drawn from `{0 (free), 2, …, max_order}`.
pub fn group<R: Rng + ?Sized>(rng: &mut R, max_summands: usize, max_order: i64) -> FgAbGroup {
    let n = rng.gen_range(0..=max_summands);
    let orders: Vec<Int> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.3) {
                Int::from(0)
            } else {
                Int::from(rng.gen_range(2..=max_order))
            }
        })
        .collect();
    FgAbGroup::from_invariants(0, &orders).expect("non-negative orders")
}

pub fn graded_group<R: Rng + ?Sized>(
    rng: &mut R,
    max_summands: usize,
    max_order: i64,
) -> GradedAbGroup {
    GradedAbGroup::new(
        group(rng, max_summands, max_order),
        group(rng, max_summands, max_order),
    )
}

/// A random automorphism of `g`, as a matrix on its presentation generators.
///
/// Built from transvections `x_j ↦ x_j + c·x_i` and unit rescalings of the
/// canonical generators; steps that are not well-defined are skipped.
pub fn automorphism<R: Rng + ?Sized>(rng: &mut R, g: &FgAbGroup, steps: usize) -> IntMatrix {
    let n = g.canonical_len();
    let moduli = g.canonical_moduli();
    let canonical = FgAbGroup::from_presentation(g.canonical_relations());
    let mut m = IntMatrix::identity(n);
    if n > 0 {
        for _ in 0..steps {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            let mut step = IntMatrix::identity(n);
            if i == j {
                let d = &moduli[i];
                let unit = if d == &Int::from(0) {
                    Int::from(-1)
                } else {
                    let candidates: Vec<i64> = (1..=12)
                        .filter(|u| num_integer::Integer::gcd(&Int::from(*u), d) == Int::from(1))
                        .collect();
                    Int::from(candidates[rng.gen_range(0..candidates.len())])
                };
                step[(i, i)] = unit;
            } else {
                step[(i, j)] = Int::from(rng.gen_range(-2..=2));
            }
            if GroupHom::new(canonical.clone(), canonical.clone(), step.clone()).is_ok() {
                m = &step * &m;
            }
        }
    }
    // Transport from canonical coordinates to the presentation generators.
    &(&g.canonical_generators() * &m) * &g.canonical_projection()
}
