//! Worst coarse correlated equilibrium by exact linear programming.

use num_traits::{Signed, Zero};

use super::lp::{Constraint, LinearProgram, LpOutcome, Sense};
use crate::error::{GameError, Result};
use crate::game::{aggregate_social, Evaluator, Instance, Orientation, State};
use crate::rational::{one, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CceSolution {
    /// States with positive probability, lexicographic order.
    pub distribution: Vec<(State, Rational)>,
    /// Expected social value under the distribution.
    pub value: Rational,
}

pub(super) fn solve(inst: &Instance, count: usize) -> Result<CceSolution> {
    let (n, m) = (inst.n(), inst.m());
    let orient = inst.kind().orientation();
    let states: Vec<State> = (0..count)
        .map(|idx| State::from_index(idx as u64, n, m))
        .collect();
    let social: Vec<Rational> = states.iter().map(|s| aggregate_social(inst, s)).collect();
    // rows[i * m + k][s]: improvement of i from switching to k at s
    let mut rows = vec![vec![Rational::zero(); count]; n * m];
    for (si, s) in states.iter().enumerate() {
        let ev = Evaluator::new(inst, s);
        for i in 0..n {
            for k in 0..m {
                rows[i * m + k][si] = ev.gain(i, k);
            }
        }
    }
    let mut constraints: Vec<Constraint> = rows
        .iter()
        .map(|r| Constraint {
            coeffs: r.clone(),
            sense: Sense::Le,
            rhs: Rational::zero(),
        })
        .collect();
    constraints.push(Constraint {
        coeffs: vec![one(); count],
        sense: Sense::Eq,
        rhs: one(),
    });
    let objective = social
        .iter()
        .map(|v| match orient {
            Orientation::Cost => v.clone(),
            Orientation::Payoff => -v.clone(),
        })
        .collect();
    let x = match (LinearProgram {
        objective,
        constraints,
    })
    .solve()
    {
        LpOutcome::Optimal { x, .. } => x,
        LpOutcome::Infeasible => return Err(GameError::Lp("CCE program reported infeasible".into())),
        LpOutcome::Unbounded => return Err(GameError::Lp("CCE program reported unbounded".into())),
    };
    let total: Rational = x.iter().sum();
    if total != one() || x.iter().any(|q| q.is_negative()) {
        return Err(GameError::Lp("solution is not a distribution".into()));
    }
    for r in &rows {
        let lhs: Rational = r.iter().zip(&x).map(|(a, q)| a * q).sum();
        if lhs.is_positive() {
            return Err(GameError::Lp("solution violates a CCE constraint".into()));
        }
    }
    let value = social.iter().zip(&x).map(|(v, q)| v * q).sum();
    let distribution = states
        .into_iter()
        .zip(x)
        .filter(|(_, q)| !q.is_zero())
        .collect();
    Ok(CceSolution {
        distribution,
        value,
    })
}
