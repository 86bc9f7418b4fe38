use crate::abgroups::{hom, tensor, FgAbGroup, GroupHom};
use crate::error::{Error, Result};
use crate::intlinalg::{kernel_basis, lattice_contains, Int, IntMatrix};

use super::ring::{BaseRing, RModule};

/// A free resolution `F_len → … → F₀ → M → 0` over `Z[t]/(p)`.
///
/// `F_i = R^{ranks[i]}` is stored as `Z^{ranks[i]·m}` with basis `e_j t^l` at
/// index `j·m + l`. `images[i]` lists, as columns, the images of the
/// R-generators of `F_i`: in `M`'s generator coordinates for `i = 0`, in
/// `F_{i−1}` otherwise.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    module: RModule,
    degree: usize,
    companion: IntMatrix,
    ranks: Vec<usize>,
    images: Vec<IntMatrix>,
}

impl FreeResolution {
    pub fn module(&self) -> &RModule {
        &self.module
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Number of computed differentials below the top (the resolution may
    /// stop early when a kernel vanishes).
    pub fn length(&self) -> usize {
        self.ranks.len() - 1
    }

    /// Whether the last computed stage has zero kernel, so the resolution is
    /// complete.
    pub fn is_finite(&self) -> bool {
        let top = self.ranks.len() - 1;
        if top == 0 {
            self.augmentation_kernel().cols() == 0
        } else {
            kernel_basis(&self.differential_z(top)).cols() == 0
        }
    }

    /// Images of the R-generators of `F_i`.
    pub fn generator_images(&self, i: usize) -> &IntMatrix {
        &self.images[i]
    }

    /// The augmentation `F₀ → M` as a Z-matrix.
    pub fn augmentation_z(&self) -> IntMatrix {
        expand(&self.images[0], self.module.t_action(), self.degree)
    }

    /// The differential `F_i → F_{i−1}` (`i ≥ 1`) as a Z-matrix.
    pub fn differential_z(&self, i: usize) -> IntMatrix {
        let block = IntMatrix::identity(self.ranks[i - 1]).kron(&self.companion);
        expand(&self.images[i], &block, self.degree)
    }

    fn augmentation_kernel(&self) -> IntMatrix {
        let eps = GroupHom::new(
            FgAbGroup::free(self.ranks[0] * self.degree),
            self.module.group().clone(),
            self.augmentation_z(),
        )
        .expect("free source");
        eps.kernel().basis().clone()
    }

    /// Exactness of the augmented complex as a complex of abelian groups, at
    /// `M` and at every `F_i` below the top.
    pub fn verify(&self) -> Result<()> {
        let eps = GroupHom::new(
            FgAbGroup::free(self.ranks[0] * self.degree),
            self.module.group().clone(),
            self.augmentation_z(),
        )?;
        if !eps.is_surjective() {
            return Err(Error::InvariantViolated("augmentation is not onto".into()));
        }
        let mut kernel = eps.kernel().basis().clone();
        for i in 1..self.ranks.len() {
            let d = self.differential_z(i);
            if !lattice_contains(&kernel, &d) || !lattice_contains(&d, &kernel) {
                return Err(Error::InvariantViolated(format!(
                    "resolution not exact at F_{}",
                    i - 1
                )));
            }
            kernel = kernel_basis(&d);
        }
        Ok(())
    }
}

/// Z-matrix of the R-linear map sending generator `j` to `images[:, j]`,
/// with `t` acting on the target by `t`: column `j·m + l` is `tˡ·images[:, j]`.
fn expand(images: &IntMatrix, t: &IntMatrix, m: usize) -> IntMatrix {
    let mut cols = Vec::with_capacity(images.cols() * m);
    for v in images.columns() {
        let mut w = v;
        for _ in 0..m {
            let next = t.mul_vec(&w);
            cols.push(w);
            w = next;
        }
    }
    IntMatrix::from_columns(images.rows(), &cols)
}

/// Greedily picks R-generators among the columns of `candidates` (a Z-basis
/// of a t-stable subgroup), skipping any already in the R-span of earlier
/// picks together with `relations`.
fn pick_generators(
    candidates: &IntMatrix,
    t: &IntMatrix,
    m: usize,
    relations: &IntMatrix,
) -> IntMatrix {
    let n = candidates.rows();
    let mut chosen: Vec<Vec<Int>> = Vec::new();
    let mut span = relations.clone();
    for v in candidates.columns() {
        if lattice_contains(&span, &IntMatrix::column_vector(&v)) {
            continue;
        }
        let orbit = expand(&IntMatrix::column_vector(&v), t, m);
        span = IntMatrix::hstack(n, &[&span, &orbit]);
        chosen.push(v);
    }
    IntMatrix::from_columns(n, &chosen)
}

/// A free resolution with `length + 1` free modules, computed by iterated
/// kernels; stops early once a kernel vanishes.
pub fn free_resolution_over_ring(module: &RModule, length: usize) -> Result<FreeResolution> {
    let companion = module.ring().companion().map_err(|_| {
        Error::UnsupportedRing("free resolutions are computed over quotient rings only".into())
    })?;
    let m = companion.rows();
    let g = module.group();
    let n = g.num_generators();
    let gens0 = pick_generators(
        &IntMatrix::identity(n),
        module.t_action(),
        m,
        g.presentation(),
    );
    let mut res = FreeResolution {
        module: module.clone(),
        degree: m,
        companion: companion.clone(),
        ranks: vec![gens0.cols()],
        images: vec![gens0],
    };
    let mut kernel = res.augmentation_kernel();
    for i in 1..=length {
        if kernel.cols() == 0 {
            break;
        }
        let block = IntMatrix::identity(res.ranks[i - 1]).kron(&companion);
        let gens = pick_generators(&kernel, &block, m, &IntMatrix::zeros(kernel.rows(), 0));
        res.ranks.push(gens.cols());
        res.images.push(gens);
        kernel = kernel_basis(&res.differential_z(i));
    }
    res.verify()?;
    Ok(res)
}

fn power(b: &FgAbGroup, k: usize) -> FgAbGroup {
    FgAbGroup::from_presentation(IntMatrix::identity(k).kron(b.presentation()))
}

/// `Σ_l c_l T^l` for coefficients `c` of length `m`.
fn poly_in(c: &[Int], t: &IntMatrix) -> IntMatrix {
    let p = t.rows();
    let mut acc = IntMatrix::zeros(p, p);
    let mut power = IntMatrix::identity(p);
    for ci in c {
        acc = &acc + &power.scale(ci);
        power = &power * t;
    }
    acc
}

/// For `d_i`, the block matrix whose `(a, j)` block is the action on `N` of
/// the coefficient of `e_a` in `d_i(e_j)`.
fn coefficient_blocks(res: &FreeResolution, i: usize, n: &RModule) -> IntMatrix {
    let m = res.degree;
    let p = n.group().num_generators();
    let images = &res.images[i];
    let k_prev = res.ranks[i - 1];
    let mut out = IntMatrix::zeros(k_prev * p, images.cols() * p);
    for (j, v) in images.columns().enumerate() {
        for a in 0..k_prev {
            let block = poly_in(&v[a * m..(a + 1) * m], n.t_action());
            out.set_block(a * p, j * p, &block);
        }
    }
    out
}

fn check_rings(m: &RModule, n: &RModule) -> Result<()> {
    if m.ring() != n.ring() {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// `Extⁿ_R(M, N)`.
pub fn ext_over_ring(m: &RModule, n: &RModule, degree: usize) -> Result<FgAbGroup> {
    check_rings(m, n)?;
    match m.ring() {
        BaseRing::Laurent => laurent_ext(m, n, degree),
        BaseRing::Quotient { .. } => {
            let res = free_resolution_over_ring(m, degree + 1)?;
            Ok(ext_from_resolution(&res, n, degree))
        }
    }
}

/// Cohomology of `Hom_R(F_•, N) ≅ N^{ranks}` at `degree`.
pub fn ext_from_resolution(res: &FreeResolution, n: &RModule, degree: usize) -> FgAbGroup {
    let cochain = |i: usize| -> FgAbGroup {
        match res.ranks.get(i) {
            Some(&k) => power(n.group(), k),
            None => FgAbGroup::zero(),
        }
    };
    // δ_i: Hom(F_{i−1}, N) → Hom(F_i, N) is the transpose-pattern of the coefficient blocks.
    let delta = |i: usize| -> GroupHom {
        let (src, tgt) = (cochain(i - 1), cochain(i));
        if i >= res.ranks.len() {
            return GroupHom::zero(&src, &tgt);
        }
        let p = n.group().num_generators();
        let blocks = coefficient_blocks(res, i, n);
        let (k_prev, k) = (res.ranks[i - 1], res.ranks[i]);
        let mut mat = IntMatrix::zeros(k * p, k_prev * p);
        for j in 0..k {
            for a in 0..k_prev {
                let b = blocks.submatrix(a * p..(a + 1) * p, j * p..(j + 1) * p);
                mat.set_block(j * p, a * p, &b);
            }
        }
        GroupHom::new(src, tgt, mat).expect("R-linear maps induce homomorphisms")
    };
    let here = cochain(degree);
    let outgoing = delta(degree + 1);
    let incoming = if degree == 0 {
        GroupHom::zero(&FgAbGroup::zero(), &here)
    } else {
        delta(degree)
    };
    outgoing
        .kernel_mod_image(&incoming)
        .expect("a resolution is a complex")
        .into_group()
}

/// `Torₙ^R(M, N)`.
pub fn tor_over_ring(m: &RModule, n: &RModule, degree: usize) -> Result<FgAbGroup> {
    check_rings(m, n)?;
    match m.ring() {
        BaseRing::Laurent => laurent_tor(m, n, degree),
        BaseRing::Quotient { .. } => {
            let res = free_resolution_over_ring(m, degree + 1)?;
            Ok(tor_from_resolution(&res, n, degree))
        }
    }
}

/// Homology of `F_• ⊗_R N ≅ N^{ranks}` at `degree`.
pub fn tor_from_resolution(res: &FreeResolution, n: &RModule, degree: usize) -> FgAbGroup {
    let chain = |i: usize| -> FgAbGroup {
        match res.ranks.get(i) {
            Some(&k) => power(n.group(), k),
            None => FgAbGroup::zero(),
        }
    };
    let boundary = |i: usize| -> GroupHom {
        let (src, tgt) = (chain(i), chain(i - 1));
        if i >= res.ranks.len() {
            return GroupHom::zero(&src, &tgt);
        }
        GroupHom::new(src, tgt, coefficient_blocks(res, i, n))
            .expect("R-linear maps induce homomorphisms")
    };
    let here = chain(degree);
    let outgoing = if degree == 0 {
        GroupHom::zero(&here, &FgAbGroup::zero())
    } else {
        boundary(degree)
    };
    outgoing
        .kernel_mod_image(&boundary(degree + 1))
        .expect("a resolution is a complex")
        .into_group()
}

/// Over `Z[t, t⁻¹]`: `Ext⁰ = ker`, `Ext¹ = coker` of `φ ↦ t_N φ t_M⁻¹ − φ` on `Hom_Z(M, N)`.
/// This is the derived functor when `M` is free as an abelian group.
fn laurent_ext(m: &RModule, n: &RModule, degree: usize) -> Result<FgAbGroup> {
    if degree >= 2 {
        return Ok(FgAbGroup::zero());
    }
    let h = hom(m.group(), n.group());
    let t_m_inv = m.t().inverse()?;
    let cols = (0..h.group().num_generators())
        .map(|i| {
            let mut e = vec![Int::from(0); h.group().num_generators()];
            e[i] = Int::from(1);
            let phi = h.matrix_of(&e);
            let conj = &(n.t_action() * &phi) * t_m_inv.matrix();
            h.element_of(&(&conj - &phi))
        })
        .collect::<Result<Vec<_>>>()?;
    let map = GroupHom::new(
        h.group().clone(),
        h.group().clone(),
        IntMatrix::from_columns(h.group().num_generators(), &cols),
    )?;
    Ok(if degree == 0 {
        map.kernel().into_group()
    } else {
        map.cokernel()
    })
}

/// Over `Z[t, t⁻¹]`: `Tor₀ = coker`, `Tor₁ = ker` of `t_M ⊗ 1 − 1 ⊗ t_N` on `M ⊗ N`.
/// As with Ext, this is the derived functor when `M` is free as an abelian group.
fn laurent_tor(m: &RModule, n: &RModule, degree: usize) -> Result<FgAbGroup> {
    if degree >= 2 {
        return Ok(FgAbGroup::zero());
    }
    let t = tensor(m.group(), n.group());
    let (a, b) = (m.group().num_generators(), n.group().num_generators());
    let mat =
        &m.t_action().kron(&IntMatrix::identity(b)) - &IntMatrix::identity(a).kron(n.t_action());
    let map = GroupHom::new(t.clone(), t, mat)?;
    Ok(if degree == 0 {
        map.cokernel()
    } else {
        map.kernel().into_group()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroups::{ext1, tor1};
    use crate::random;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// `R^a` modulo the R-span of a few random vectors.
    fn random_module(rng: &mut StdRng, ring: &BaseRing) -> RModule {
        let c = ring.companion().unwrap();
        let m = c.rows();
        let a = rng.gen_range(1..=2);
        let block = IntMatrix::identity(a).kron(&c);
        let k = rng.gen_range(0..=2);
        let vs = random::sparse_matrix(rng, a * m, k, 3);
        let rels = expand(&vs, &block, m);
        RModule::new(ring.clone(), FgAbGroup::from_presentation(rels), block).unwrap()
    }

    fn z_trivial(ring: &BaseRing) -> RModule {
        RModule::trivial(ring.clone(), FgAbGroup::free(1)).unwrap()
    }

    #[test]
    fn norm_element_resolution() {
        let r = BaseRing::cyclic(2);
        let res = free_resolution_over_ring(&z_trivial(&r), 4).unwrap();
        assert_eq!(res.ranks(), &[1, 1, 1, 1, 1]);
        // each differential is multiplication by t − 1 or t + 1 up to sign
        for i in 1..=4 {
            let v = res.generator_images(i).column(0);
            let ok = v == [Int::from(1), Int::from(-1)]
                || v == [Int::from(-1), Int::from(1)]
                || v == [Int::from(1), Int::from(1)]
                || v == [Int::from(-1), Int::from(-1)];
            assert!(ok, "stage {i}: {v:?}");
        }
    }

    #[test]
    fn free_module_has_trivial_resolution() {
        let r = BaseRing::cyclic(3);
        let res = free_resolution_over_ring(&RModule::regular(r.clone()).unwrap(), 3).unwrap();
        assert_eq!(res.ranks(), &[1]);
        assert!(res.is_finite());
        assert!(free_resolution_over_ring(&z_trivial(&BaseRing::Laurent), 2).is_err());
    }

    #[test]
    fn cyclic_group_cohomology() {
        let r = BaseRing::cyclic(2);
        let z = z_trivial(&r);
        let expect = [0i64, 1, 2, 1, 2, 1, 2];
        for (n, &e) in expect.iter().enumerate() {
            let g = ext_over_ring(&z, &z, n).unwrap();
            let want = match e {
                0 => FgAbGroup::free(1),
                1 => FgAbGroup::zero(),
                _ => FgAbGroup::cyclic(2),
            };
            assert!(g.is_isomorphic(&want), "Ext^{n} = {g}");
        }
        assert!(tor_over_ring(&z, &z, 0)
            .unwrap()
            .is_isomorphic(&FgAbGroup::free(1)));
        assert!(tor_over_ring(&z, &z, 1)
            .unwrap()
            .is_isomorphic(&FgAbGroup::cyclic(2)));
        assert!(tor_over_ring(&z, &z, 2).unwrap().is_trivial());
    }

    #[test]
    fn free_modules_are_flat_and_projective() {
        let r = BaseRing::cyclic(3);
        let free = RModule::regular(r.clone()).unwrap();
        let n = RModule::new(
            r.clone(),
            FgAbGroup::cyclic(7),
            IntMatrix::from_rows(&[[2]]),
        )
        .unwrap();
        assert!(ext_over_ring(&free, &n, 0)
            .unwrap()
            .is_isomorphic(n.group()));
        for k in 1..3 {
            assert!(ext_over_ring(&free, &n, k).unwrap().is_trivial());
            assert!(tor_over_ring(&free, &n, k).unwrap().is_trivial());
        }
    }

    #[test]
    fn degenerate_ring_is_plain_abelian_groups() {
        let r = BaseRing::quotient(vec![Int::from(-1), Int::from(1)]).unwrap();
        let a = FgAbGroup::direct_sum(&[&FgAbGroup::cyclic(4), &FgAbGroup::free(1)]);
        let b = FgAbGroup::cyclic(6);
        let (ma, mb) = (
            RModule::trivial(r.clone(), a.clone()).unwrap(),
            RModule::trivial(r.clone(), b.clone()).unwrap(),
        );
        assert!(ext_over_ring(&ma, &mb, 1)
            .unwrap()
            .is_isomorphic(ext1(&a, &b).group()));
        assert!(tor_over_ring(&ma, &mb, 1)
            .unwrap()
            .is_isomorphic(&tor1(&a, &b)));
        assert!(ext_over_ring(&ma, &mb, 2).unwrap().is_trivial());
        assert!(tor_over_ring(&ma, &mb, 2).unwrap().is_trivial());
    }

    #[test]
    fn ring_mismatch_is_rejected() {
        let a = z_trivial(&BaseRing::cyclic(2));
        let b = z_trivial(&BaseRing::cyclic(3));
        assert!(matches!(ext_over_ring(&a, &b, 0), Err(Error::RingMismatch)));
        assert!(matches!(tor_over_ring(&a, &b, 0), Err(Error::RingMismatch)));
    }

    #[test]
    fn laurent_examples() {
        let z = z_trivial(&BaseRing::Laurent);
        assert!(ext_over_ring(&z, &z, 0)
            .unwrap()
            .is_isomorphic(&FgAbGroup::free(1)));
        assert!(ext_over_ring(&z, &z, 1)
            .unwrap()
            .is_isomorphic(&FgAbGroup::free(1)));
        assert!(ext_over_ring(&z, &z, 2).unwrap().is_trivial());
        let sign = RModule::new(
            BaseRing::Laurent,
            FgAbGroup::free(1),
            IntMatrix::from_rows(&[[-1]]),
        )
        .unwrap();
        assert!(ext_over_ring(&z, &sign, 1)
            .unwrap()
            .is_isomorphic(&FgAbGroup::cyclic(2)));
        assert!(ext_over_ring(&z, &sign, 0).unwrap().is_trivial());
        assert!(tor_over_ring(&z, &sign, 0)
            .unwrap()
            .is_isomorphic(&FgAbGroup::cyclic(2)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn quotient_ring_resolutions_are_exact(seed in any::<u64>()) {
            let mut rng = StdRng::seed_from_u64(seed);
            let ring = BaseRing::cyclic(rng.gen_range(1..=3));
            let m = random_module(&mut rng, &ring);
            // verification runs inside the constructor
            let res = free_resolution_over_ring(&m, 3).unwrap();
            prop_assert!(res.verify().is_ok());
        }

        #[test]
        fn laurent_ext_matches_hochschild(seed in any::<u64>()) {
            let mut rng = StdRng::seed_from_u64(seed);
            let gm = random::group(&mut rng, 2, 6);
            let gn = random::group(&mut rng, 2, 6);
            let tm = random::automorphism(&mut rng, &gm, 5);
            let tn = random::automorphism(&mut rng, &gn, 5);
            let m = RModule::new(BaseRing::Laurent, gm.clone(), tm.clone()).unwrap();
            let n = RModule::new(BaseRing::Laurent, gn.clone(), tn.clone()).unwrap();
            let h = hom(&gm, &gn);
            let g = h.group();
            let act = |f: &dyn Fn(&IntMatrix) -> IntMatrix| {
                let cols: Vec<Vec<Int>> = (0..g.num_generators())
                    .map(|i| {
                        let mut e = vec![Int::from(0); g.num_generators()];
                        e[i] = Int::from(1);
                        h.element_of(&f(&h.matrix_of(&e))).unwrap()
                    })
                    .collect();
                IntMatrix::from_columns(g.num_generators(), &cols)
            };
            let lambda = act(&|phi| &tn * phi);
            let rho = act(&|phi| phi * &tm);
            for d in 0..3 {
                let hh = super::super::hochschild(g, &lambda, &rho, d, super::super::Variant::Cohomology).unwrap();
                prop_assert!(ext_over_ring(&m, &n, d).unwrap().is_isomorphic(&hh), "degree {}", d);
            }
        }
    }
}
