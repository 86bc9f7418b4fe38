//! Library results checked against the independent computations in `oracles`.

mod oracles;

use homkit::abgroups::FgAbGroup;
use homkit::intlinalg::{smith_diagonal, subquotient, IntMatrix};
use homkit::percomplex::PeriodicComplex;
use num_traits::ToPrimitive;
use oracles::{column_reduce, int, Mat};
use proptest::prelude::*;

fn to_matrix(m: &Mat, rows: usize, cols: usize) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |i, j| int(m[i][j]))
}

fn arb_mat(max: usize, bound: i128) -> impl Strategy<Value = (usize, usize, Mat)> {
    (0..=max, 0..=max).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-bound..=bound, c), r)
            .prop_map(move |m| (r, c, m))
    })
}

fn matmul(a: &Mat, b: &Mat, inner: usize) -> Mat {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|t| row[t] * b[t][j]).sum())
                .collect()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn smith_diagonal_matches_determinantal_divisors((r, c, m) in arb_mat(4, 9)) {
        let lib: Vec<i128> = smith_diagonal(&to_matrix(&m, r, c))
            .iter()
            .map(|x| x.to_i128().unwrap())
            .filter(|&x| x != 0)
            .collect();
        prop_assert_eq!(lib, oracles::invariant_factors(&m));
    }

    #[test]
    fn cokernels_match((r, c, m) in arb_mat(4, 6)) {
        let g = FgAbGroup::from_presentation(to_matrix(&m, r, c));
        prop_assert!(oracles::matches(&g, &oracles::cokernel(&m, r)));
    }

    #[test]
    fn subquotients_match(
        (r, n, l) in arb_mat(3, 4),
        coeffs in proptest::collection::vec(proptest::collection::vec(-3i128..=3, 3), 4),
    ) {
        let (v, _, rank) = column_reduce(&l, n);
        // N spans a sublattice of ker L: combinations of the kernel columns of V
        let kernel: Mat = v.iter().map(|row| row[rank..].to_vec()).collect();
        let k = n - rank;
        let c: Mat = coeffs[..k].to_vec();
        let big_n = if k == 0 { vec![vec![]; n] } else { matmul(&kernel, &c, k) };
        let sq = subquotient(&to_matrix(&l, r, n), &to_matrix(&big_n, n, if k == 0 { 0 } else { 3 })).unwrap();
        prop_assert!(oracles::matches(sq.group(), &oracles::subquotient(&l, &big_n, n)));
    }

    #[test]
    fn homology_of_complexes_matches(seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let x: PeriodicComplex = homkit::random::complex(&mut rng, 3, 3);
        let d = oracles::to_mat(x.d());
        let e = oracles::to_mat(x.e());
        // H_even = ker d / im e on Z^{even_rank}
        let h = x.homology_groups();
        prop_assert!(oracles::matches(&h.even, &oracles::subquotient(&d, &e, x.even_rank())));
        prop_assert!(oracles::matches(&h.odd, &oracles::subquotient(&e, &d, x.odd_rank())));
    }
}

#[test]
fn oracles_on_known_inputs() {
    assert_eq!(
        oracles::invariant_factors(&vec![vec![2, 4], vec![6, 8]]),
        vec![2, 4]
    );
    assert_eq!(
        oracles::cokernel(&vec![vec![2, 0], vec![0, 3]], 2),
        (0, vec![6])
    );
    // ker [1 1] / <(2, -2)> = Z/2
    assert_eq!(
        oracles::subquotient(&vec![vec![1, 1]], &vec![vec![2], vec![-2]], 2),
        (0, vec![2])
    );
    assert_eq!(oracles::cyclic_ext(2, 2), (0, vec![2]));
    assert_eq!(oracles::cyclic_ext(2, 1), (0, vec![]));
    assert_eq!(oracles::cyclic_tor(3, 1), (0, vec![3]));
}
