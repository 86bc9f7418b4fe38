use num_traits::{One, Zero};

use crate::abgroups::{FgAbGroup, GroupHom};
use crate::error::{Error, Result};
use crate::intlinalg::{Int, IntMatrix};

/// The coefficient ring of a module: `Z[t]/(p)` for monic `p`, or `Z[t, t⁻¹]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseRing {
    /// Coefficients of `p`, constant term first.
    Quotient {
        poly: Vec<Int>,
    },
    Laurent,
}

impl BaseRing {
    pub fn quotient(poly: Vec<Int>) -> Result<Self> {
        if poly.len() < 2 {
            return Err(Error::Invalid(
                "polynomial must have degree at least 1".into(),
            ));
        }
        if !poly.last().expect("nonempty").is_one() {
            return Err(Error::Invalid("polynomial must be monic".into()));
        }
        Ok(BaseRing::Quotient { poly })
    }

    /// `Z[t]/(tⁿ − 1)`, the group ring of a cyclic group of order `n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let mut poly = vec![Int::zero(); n + 1];
        poly[0] = Int::from(-1);
        poly[n] = Int::one();
        BaseRing::Quotient { poly }
    }

    /// Rank of the ring as an abelian group; `None` for the Laurent ring.
    pub fn degree(&self) -> Option<usize> {
        match self {
            BaseRing::Quotient { poly } => Some(poly.len() - 1),
            BaseRing::Laurent => None,
        }
    }

    /// Multiplication by `t` on the basis `1, t, …, t^{m−1}`.
    pub fn companion(&self) -> Result<IntMatrix> {
        let BaseRing::Quotient { poly } = self else {
            return Err(Error::UnsupportedRing(
                "the Laurent ring is not finite over Z".into(),
            ));
        };
        let m = poly.len() - 1;
        let mut c = IntMatrix::zeros(m, m);
        for l in 0..m {
            if l + 1 < m {
                c[(l + 1, l)] = Int::one();
            }
            c[(l, m - 1)] = -&poly[l];
        }
        Ok(c)
    }
}

/// `p(T)` for a square integer matrix `T`.
pub(crate) fn eval_poly(poly: &[Int], t: &IntMatrix) -> IntMatrix {
    let n = t.rows();
    let mut acc = IntMatrix::zeros(n, n);
    for c in poly.iter().rev() {
        acc = &(&acc * t) + &IntMatrix::scalar(n, c.clone());
    }
    acc
}

/// A finitely generated module: an abelian group with the action of `t`
/// given as a matrix on its generators.
#[derive(Clone, Debug)]
pub struct RModule {
    ring: BaseRing,
    group: FgAbGroup,
    t_action: IntMatrix,
}

impl RModule {
    pub fn new(ring: BaseRing, group: FgAbGroup, t_action: IntMatrix) -> Result<Self> {
        let t = GroupHom::new(group.clone(), group.clone(), t_action.clone())
            .map_err(|e| Error::InvalidModule(format!("t does not act: {e}")))?;
        match &ring {
            BaseRing::Quotient { poly } => {
                let p = GroupHom::new(group.clone(), group.clone(), eval_poly(poly, &t_action))?;
                if !p.is_zero() {
                    return Err(Error::InvalidModule(
                        "p(t) does not vanish on the module".into(),
                    ));
                }
            }
            BaseRing::Laurent => {
                if !t.is_isomorphism() {
                    return Err(Error::InvalidModule(
                        "t is not invertible on the module".into(),
                    ));
                }
            }
        }
        Ok(RModule {
            ring,
            group,
            t_action,
        })
    }

    /// The module with `t` acting as the identity.
    pub fn trivial(ring: BaseRing, group: FgAbGroup) -> Result<Self> {
        let n = group.num_generators();
        RModule::new(ring, group, IntMatrix::identity(n))
    }

    /// The free module of rank one.
    pub fn regular(ring: BaseRing) -> Result<Self> {
        let c = ring.companion()?;
        let m = c.rows();
        RModule::new(ring, FgAbGroup::free(m), c)
    }

    pub fn ring(&self) -> &BaseRing {
        &self.ring
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn t_action(&self) -> &IntMatrix {
        &self.t_action
    }

    pub fn t(&self) -> GroupHom {
        GroupHom::new(
            self.group.clone(),
            self.group.clone(),
            self.t_action.clone(),
        )
        .expect("validated at construction")
    }
}
