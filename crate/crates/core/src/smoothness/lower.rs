//! Lower bounds on the social cost of every state.

use num_traits::Signed;

use crate::error::Result;
use crate::game::{GameKind, State};
use crate::oracle::Oracle;
use crate::rational::{frac, int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBoundCheck {
    pub name: &'static str,
    /// The right-hand side `c(s) >= bound`.
    pub bound: Rational,
    /// Smallest cost over all states.
    pub measured: Rational,
    pub witness: State,
    pub holds: bool,
    /// False for informational rows that are known not to hold in general.
    pub asserted: bool,
}

impl LowerBoundCheck {
    pub fn slack(&self) -> Rational {
        &self.measured - &self.bound
    }
}

/// Checks the kind's lower bounds at every state. The minimum over all
/// states is the optimum, so one scan covers every inequality.
pub fn check_opt_lower_bounds(oracle: &Oracle<'_>) -> Result<Vec<LowerBoundCheck>> {
    let inst = oracle.instance();
    let kind = inst.kind();
    if !kind.is_balancing() {
        return Ok(vec![]);
    }
    let (n, m) = (inst.n() as i64, inst.m() as i64);
    let (opt_state, opt) = oracle.optimum()?;
    let w = inst.weights();
    let e_minus = inst.total_conflict_weight();
    let e_plus = inst.total_friendship_weight();
    let load = frac(n * n, m);
    let mut rows: Vec<(&'static str, Rational)> = vec![];
    match kind {
        GameKind::BwC => {
            rows.push(("load", load));
            if m >= 2 {
                rows.push(("conflict_edges", int(2) * &e_minus / int(m - 1)));
            }
        }
        GameKind::BwF => {
            rows.push(("load", load));
            rows.push(("friendship_edges", int(2) * &e_plus + int(n)));
        }
        GameKind::BwCF => {
            rows.push(("weighted_load", &w.alpha * &load));
            rows.push((
                "weighted_conflicts",
                (&w.alpha - &w.beta * int(m - 1)) * &load + int(2) * &w.beta * &e_minus,
            ));
            if w.alpha >= w.gamma {
                rows.push((
                    "weighted_friendship",
                    (&w.alpha - &w.gamma) * &load + int(2) * &w.gamma * &e_plus + &w.gamma * int(n),
                ));
            }
            if w.alpha <= w.gamma {
                rows.push(("friendship_alpha", int(2) * &w.alpha * &e_plus + &w.alpha * int(n)));
            }
        }
        _ => unreachable!("balancing kinds only"),
    }
    let mut out: Vec<LowerBoundCheck> = rows
        .into_iter()
        .map(|(name, bound)| LowerBoundCheck {
            name,
            holds: !(&opt - &bound).is_negative(),
            bound,
            measured: opt.clone(),
            witness: opt_state.clone(),
            asserted: true,
        })
        .collect();
    if kind == GameKind::BwCF && w.alpha <= w.gamma {
        let bound = int(2) * &w.alpha * &e_plus + &w.gamma * int(n);
        out.push(LowerBoundCheck {
            name: "friendship_gamma_n",
            holds: !(&opt - &bound).is_negative(),
            bound,
            measured: opt.clone(),
            witness: opt_state.clone(),
            asserted: false,
        });
    }
    Ok(out)
}
