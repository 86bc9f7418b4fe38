//! Reference computations that share no code with the library: plain `i128`
//! arithmetic, Laplace expansion and hand-rolled column reduction.

#![allow(dead_code)]

use homkit::intlinalg::{Int, IntMatrix};
use num_traits::ToPrimitive;

pub type Mat = Vec<Vec<i128>>;

pub fn to_mat(m: &IntMatrix) -> Mat {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| x.to_i128().expect("small entries"))
                .collect()
        })
        .collect()
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn det(m: &Mat) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Mat = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][j] * det(&minor);
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `d_k` = gcd of all `k × k` minors, for `k = 1, …` while nonzero.
pub fn determinantal_divisors(m: &Mat) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut g = 0;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Mat = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c]).collect())
                    .collect();
                g = gcd(g, det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g);
    }
    out
}

/// Invariant factors `s_k = d_k / d_{k−1}` (all of them, including 1s).
pub fn invariant_factors(m: &Mat) -> Vec<i128> {
    let d = determinantal_divisors(m);
    (0..d.len())
        .map(|k| if k == 0 { d[0] } else { d[k] / d[k - 1] })
        .collect()
}

/// `(rank, torsion factors ≥ 2)` of the cokernel of `m` (rows = generators).
pub fn cokernel(m: &Mat, generators: usize) -> (usize, Vec<i128>) {
    let s = invariant_factors(m);
    (
        generators - s.len(),
        s.into_iter().filter(|&x| x > 1).collect(),
    )
}

/// Column reduction of `l` to echelon form, tracking the column operations
/// `V` and their inverse; returns `(V, V⁻¹, rank)` with `l·V = [E | 0]`.
pub fn column_reduce(l: &Mat, cols: usize) -> (Mat, Mat, usize) {
    let rows = l.len();
    let mut a = l.clone();
    let mut v: Mat = (0..cols)
        .map(|i| (0..cols).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut vi = v.clone();
    // column op: c_j ← c_j + q c_i on a and v; inverse: r_i ← r_i − q r_j on vi
    let addcol = |a: &mut Mat, v: &mut Mat, vi: &mut Mat, j: usize, i: usize, q: i128| {
        for row in a.iter_mut() {
            row[j] += q * row[i];
        }
        for row in v.iter_mut() {
            row[j] += q * row[i];
        }
        for c in 0..vi[0].len() {
            let x = vi[j][c];
            vi[i][c] -= q * x;
        }
    };
    let swap = |a: &mut Mat, v: &mut Mat, vi: &mut Mat, i: usize, j: usize| {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        for row in v.iter_mut() {
            row.swap(i, j);
        }
        vi.swap(i, j);
    };
    let mut pivot_col = 0;
    for r in 0..rows {
        if pivot_col == cols {
            break;
        }
        loop {
            // smallest nonzero entry in row r among columns ≥ pivot_col
            let best = (pivot_col..cols)
                .filter(|&c| a[r][c] != 0)
                .min_by_key(|&c| a[r][c].abs());
            let Some(b) = best else { break };
            swap(&mut a, &mut v, &mut vi, pivot_col, b);
            let mut done = true;
            for c in pivot_col + 1..cols {
                if a[r][c] != 0 {
                    let q = a[r][c].div_euclid(a[r][pivot_col]);
                    addcol(&mut a, &mut v, &mut vi, c, pivot_col, -q);
                    if a[r][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                pivot_col += 1;
                break;
            }
        }
    }
    (v, vi, pivot_col)
}

/// `ker(L) / im(N)` as `(rank, torsion)`, computed by column reduction of `L`
/// and determinantal divisors of the coordinates of `N`.
pub fn subquotient(l: &Mat, n: &Mat, ambient: usize) -> (usize, Vec<i128>) {
    let (_, vi, r) = column_reduce(l, ambient);
    let k = ambient - r;
    let ncols = n.first().map_or(0, Vec::len);
    // coordinates of N in the basis given by the columns of V; only the
    // kernel part (last k) can be nonzero
    let coords: Mat = (r..ambient)
        .map(|i| {
            (0..ncols)
                .map(|j| (0..ambient).map(|t| vi[i][t] * n[t][j]).sum())
                .collect()
        })
        .collect();
    if ncols == 0 {
        return (k, vec![]);
    }
    cokernel(&coords, k)
}

/// A small exact sequence check on `Z`: the homology of
/// `Z --a--> Z --b--> Z` at the middle, as `(rank, torsion)`.
fn middle_of_z(a: i128, b: i128) -> (usize, Vec<i128>) {
    if b != 0 {
        (0, vec![])
    } else if a == 0 {
        (1, vec![])
    } else if a.abs() == 1 {
        (0, vec![])
    } else {
        (0, vec![a.abs()])
    }
}

/// `Extⁿ_{Z[C_k]}(Z, Z)` from the periodic resolution
/// `… → R --N--> R --(t−1)--> R → Z` with `N = 1 + t + … + t^{k−1}`;
/// on the trivial module `t − 1` acts as 0 and `N` as `k`.
pub fn cyclic_ext(k: i128, n: usize) -> (usize, Vec<i128>) {
    // δ_i: Hom(F_{i−1}) → Hom(F_i); δ_i = 0 for odd i, k for even i ≥ 2
    let delta = |i: usize| if i % 2 == 1 { 0 } else { k };
    let incoming = if n == 0 { 0 } else { delta(n) };
    middle_of_z(incoming, delta(n + 1))
}

/// `Torₙ^{Z[C_k]}(Z, Z)` from the same resolution.
pub fn cyclic_tor(k: i128, n: usize) -> (usize, Vec<i128>) {
    // ∂_i: F_i ⊗ Z → F_{i−1} ⊗ Z; ∂_i = 0 for odd i, k for even i ≥ 2
    let boundary = |i: usize| if i % 2 == 1 { 0 } else { k };
    let outgoing = if n == 0 { 0 } else { boundary(n) };
    middle_of_z(boundary(n + 1), outgoing)
}

pub fn matches(g: &homkit::abgroups::FgAbGroup, expected: &(usize, Vec<i128>)) -> bool {
    let torsion: Vec<i128> = g.torsion().iter().map(|x| x.to_i128().unwrap()).collect();
    g.rank() == expected.0 && torsion == expected.1
}

pub fn int(x: i128) -> Int {
    Int::from(x)
}
