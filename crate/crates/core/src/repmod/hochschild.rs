use crate::abgroups::{is_exact_at, FgAbGroup, GradedAbGroup, GroupHom};
use crate::error::{Error, Result};
use crate::intlinalg::IntMatrix;
use crate::percomplex::{
    mapping_cone, moore_complex, moore_lift, triangle_homology_sequence, ChainMap,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Homology,
    Cohomology,
}

fn automorphism(m: &FgAbGroup, a: &IntMatrix, name: &str) -> Result<GroupHom> {
    let f = GroupHom::new(m.clone(), m.clone(), a.clone())?;
    if !f.is_isomorphism() {
        return Err(Error::NotInvertible(format!(
            "{name} is not an automorphism"
        )));
    }
    Ok(f)
}

/// Hochschild (co)homology of the Laurent ring with coefficients in `M`,
/// where `λ` and `ρ` are the left and right actions of `t`.
///
/// With `u = λρ⁻¹`: `HH₀ = HH¹ = coker(u − 1)`, `HH₁ = HH⁰ = ker(u − 1)`,
/// and everything above degree 1 vanishes.
pub fn hochschild(
    m: &FgAbGroup,
    lambda: &IntMatrix,
    rho: &IntMatrix,
    n: usize,
    variant: Variant,
) -> Result<FgAbGroup> {
    let l = automorphism(m, lambda, "λ")?;
    let r = automorphism(m, rho, "ρ")?;
    if !l.then(&r)?.sub(&r.then(&l)?).is_zero() {
        return Err(Error::NotCommuting);
    }
    if n >= 2 {
        return Ok(FgAbGroup::zero());
    }
    let u = r.inverse()?.then(&l)?;
    let map = u.sub(&GroupHom::identity(m));
    let coker_degree = match variant {
        Variant::Homology => 0,
        Variant::Cohomology => 1,
    };
    Ok(if n == coker_degree {
        map.cokernel()
    } else {
        map.kernel().into_group()
    })
}

/// The six-term sequence of a graded group with an automorphism.
///
/// Nodes, in order: `K₀, K₀, M₁, K₁, K₁, M₀`, where `M_*` is realized as the
/// homology (shifted by one) of the cone of `α − 1` on a Moore complex of `K`
/// and sits in `0 → coker(α − 1 | K_{*+1}) → M_* → ker(α − 1 | K_*) → 0`.
#[derive(Clone, Debug)]
pub struct PvReport {
    pub k: GradedAbGroup,
    pub alpha: [IntMatrix; 2],
    /// `coker(α − 1)` on `K_{*+1}`, indexed by `*`.
    pub coker_end: [FgAbGroup; 2],
    /// `ker(α − 1)` on `K_*`, indexed by `*`.
    pub ker_end: [FgAbGroup; 2],
    pub middle: [FgAbGroup; 2],
    pub six_term: Vec<GroupHom>,
}

impl PvReport {
    pub const NODES: [&'static str; 6] = ["K0", "K0", "M1", "K1", "K1", "M0"];

    /// Exactness at node `i` (between `six_term[i − 1]` and `six_term[i]`).
    pub fn is_exact_at(&self, i: usize) -> bool {
        is_exact_at(&self.six_term[(i + 5) % 6], &self.six_term[i])
    }
}

pub fn pv_sequence(
    k: &GradedAbGroup,
    alpha_even: &IntMatrix,
    alpha_odd: &IntMatrix,
) -> Result<PvReport> {
    let a0 = automorphism(&k.even, alpha_even, "α (even)")?;
    let a1 = automorphism(&k.odd, alpha_odd, "α (odd)")?;
    let minus_one = [
        a0.sub(&GroupHom::identity(&k.even)),
        a1.sub(&GroupHom::identity(&k.odd)),
    ];
    let coker = |d: usize| minus_one[d].cokernel();
    let ker = |d: usize| minus_one[d].kernel().into_group();
    let coker_end = [coker(1), coker(0)];
    let ker_end = [ker(0), ker(1)];

    let lifted = moore_lift(k, k, alpha_even, alpha_odd)?;
    let x = moore_complex(k);
    let phi = lifted.sub(&ChainMap::identity(&x))?;
    let cone = mapping_cone(&phi).cone.homology_groups();
    let six_term = triangle_homology_sequence(&phi);

    let report = PvReport {
        k: k.clone(),
        alpha: [alpha_even.clone(), alpha_odd.clone()],
        coker_end,
        ker_end,
        middle: [cone.odd, cone.even],
        six_term,
    };
    for i in 0..6 {
        if !report.is_exact_at(i) {
            return Err(Error::InvariantViolated(format!(
                "six-term sequence not exact at node {i} ({})",
                PvReport::NODES[i]
            )));
        }
    }
    // the sequence must realize α − 1 on both ends
    let s = &report.six_term;
    let ends_agree = s[0].cokernel().is_isomorphic(&report.coker_end[1])
        && s[3].cokernel().is_isomorphic(&report.coker_end[0])
        && s[0].kernel().group().is_isomorphic(&report.ker_end[0])
        && s[3].kernel().group().is_isomorphic(&report.ker_end[1]);
    if !ends_agree {
        return Err(Error::InvariantViolated(
            "six-term sequence does not realize α − 1".into(),
        ));
    }
    Ok(report)
}
