//! Semi-smoothness parameters and the price-of-total-anarchy table.

use num_traits::{One, Zero};

use crate::error::{GameError, Result};
use crate::game::{CostWeights, GameKind, Instance, Orientation};
use crate::rational::{frac, int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothnessParams {
    pub lambda: Rational,
    pub mu: Rational,
    /// lambda/(1-mu) for cost kinds, lambda/(1+mu) for payoff kinds.
    pub rho: Rational,
}

impl SmoothnessParams {
    pub fn new(orient: Orientation, lambda: Rational, mu: Rational) -> Result<Self> {
        if lambda < Rational::zero() || mu < Rational::zero() {
            return Err(GameError::InvalidParameter {
                param: "lambda/mu",
                reason: "must be nonnegative".into(),
            });
        }
        let rho = match orient {
            Orientation::Cost => {
                if mu >= Rational::one() {
                    return Err(GameError::InvalidParameter {
                        param: "mu",
                        reason: "cost kinds need mu < 1".into(),
                    });
                }
                &lambda / (Rational::one() - &mu)
            }
            Orientation::Payoff => &lambda / (Rational::one() + &mu),
        };
        Ok(SmoothnessParams { lambda, mu, rho })
    }

    /// Implied bound on worst-CCE quality: rho for cost kinds, 1/rho for
    /// payoff kinds.
    pub fn pota(&self, orient: Orientation) -> Result<Rational> {
        match orient {
            Orientation::Cost => Ok(self.rho.clone()),
            Orientation::Payoff if self.rho.is_zero() => Err(GameError::InvalidParameter {
                param: "lambda",
                reason: "zero lambda gives no payoff bound".into(),
            }),
            Orientation::Payoff => Ok(Rational::one() / &self.rho),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Bounds {
    pub params: SmoothnessParams,
    pub pota: Rational,
}

/// Machines a sharing-game deviation profile uses: all of them, or the `n`
/// most valuable when `n < m`.
pub fn effective_machines(kind: GameKind, n: usize, m: usize) -> usize {
    if kind.is_sharing() {
        n.min(m)
    } else {
        m
    }
}

pub fn table1_bounds(kind: GameKind, n: usize, m: usize, w: &CostWeights) -> Result<Table1Bounds> {
    if n == 0 || m == 0 {
        return Err(GameError::InvalidParameter {
            param: "n/m",
            reason: "must be at least 1".into(),
        });
    }
    let orient = kind.orientation();
    let (ni, mi) = (n as i64, m as i64);
    let (lambda, mu) = if m == 1 {
        (int(1), int(0))
    } else {
        match kind {
            GameKind::BwC if n >= m => (int(2) - frac(1, mi) + frac(mi - 1, ni), int(0)),
            GameKind::BwC => (int(1) + frac(2 * ni - 2, mi), int(0)),
            GameKind::BwF => (int(2) - frac(1, mi), int(0)),
            GameKind::BwCF => {
                w.validate()?;
                let b = &w.beta / &w.alpha;
                let g = &w.gamma / &w.alpha;
                let q = frac(mi - 1, mi);
                if w.alpha >= w.gamma {
                    let r = frac(mi - 1, ni);
                    (int(1) + &r + b * &q + g * (&q - &r), int(0))
                } else {
                    (int(1) + b * &q + g * &q, int(0))
                }
            }
            GameKind::SwC => (frac(mi - 1, mi), frac(mi - 2, mi)),
            GameKind::SwF => (frac(1, mi), int(0)),
            GameKind::MaxCut => (frac(mi - 1, mi), int(0)),
        }
    };
    let params = SmoothnessParams::new(orient, lambda, mu)?;
    let pota = params.pota(orient)?;
    Ok(Table1Bounds { params, pota })
}

pub fn table1_for(inst: &Instance) -> Result<Table1Bounds> {
    table1_bounds(inst.kind(), inst.n(), inst.m(), inst.weights())
}
