//! Exhaustive certification of semi-smoothness, niceness and pure-sigma
//! smoothness ratios.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::bounds::{effective_machines, SmoothnessParams};
use crate::error::{GameError, Result};
use crate::game::{Evaluator, GameKind, Instance, MixedProfile, Orientation, State};
use crate::oracle::Oracle;
use crate::rational::{frac, int, Rational};

/// Canonical deviation profile: uniform over all machines, or over the `n`
/// most valuable machines (ties to the lower index) in sharing games with
/// `n < m`.
pub fn deviation_profile(inst: &Instance) -> MixedProfile {
    let (n, m) = (inst.n(), inst.m());
    let me = effective_machines(inst.kind(), n, m);
    if me == m {
        return MixedProfile::uniform(n, m);
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| inst.machine_value(b).cmp(&inst.machine_value(a)).then(a.cmp(&b)));
    order.truncate(me);
    order.sort_unstable();
    MixedProfile::uniform_over(n, m, &order)
}

fn lhs_with(ev: &Evaluator<'_>, inst: &Instance, sigma: &MixedProfile) -> Rational {
    let mut total = Rational::zero();
    for i in 0..inst.n() {
        for (k, p) in sigma.row(i).iter().enumerate() {
            if !p.is_zero() {
                total += p * ev.value_at(i, k);
            }
        }
    }
    total
}

/// Sum over players of the expected value of deviating to `sigma_i` while
/// everyone else stays at `s`.
pub fn semi_smooth_lhs(inst: &Instance, s: &State, sigma: &MixedProfile) -> Result<Rational> {
    s.validate(inst)?;
    sigma.check_shape(inst.n(), inst.m())?;
    Ok(lhs_with(&Evaluator::new(inst, s), inst, sigma))
}

/// Closed form of [`semi_smooth_lhs`] for the uniform profile over all
/// machines.
pub fn uniform_lhs_closed_form(inst: &Instance, s: &State) -> Result<Rational> {
    s.validate(inst)?;
    let (n, m) = (inst.n() as i64, inst.m() as i64);
    let mf = frac(1, m);
    Ok(match inst.kind().orientation() {
        Orientation::Cost => {
            let w = inst.weights();
            (&w.alpha * int(n * (n + m - 1))
                + &w.beta * int(2) * inst.total_conflict_weight()
                + &w.gamma * int(2 * (m - 1)) * inst.total_friendship_weight())
                * mf
        }
        Orientation::Payoff => {
            let loads = s.loads(inst.m());
            let mut shares = Rational::zero();
            for &k in s.as_slice() {
                for (l, &x) in loads.iter().enumerate() {
                    let p = inst.machine_value(l);
                    shares += if l == k { p / int(x as i64) } else { p / int(x as i64 + 1) };
                }
            }
            let edges = int(2) * inst.total_conflict_weight() * int(m - 1)
                + int(2) * inst.total_friendship_weight();
            (shares + edges) * mf
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothVerdict {
    pub holds: bool,
    /// State with the smallest slack (smallest index on ties).
    pub worst_state: State,
    /// Smallest slack over all states; negative on failure.
    pub slack: Rational,
    pub optimum: Rational,
}

/// Scans every state: cost kinds need `lhs <= lambda*opt + mu*value`,
/// payoff kinds `lhs >= lambda*opt - mu*value`.
fn scan<F>(oracle: &Oracle<'_>, params: &SmoothnessParams, lhs: F) -> Result<SmoothVerdict>
where
    F: Fn(&Evaluator<'_>) -> Rational + Sync,
{
    let inst = oracle.instance();
    let count = oracle.state_count()?;
    let optimum = oracle.optimum()?.1;
    let orient = inst.kind().orientation();
    let base = &params.lambda * &optimum;
    let (n, m) = (inst.n(), inst.m());
    let (idx, slack) = (0..count)
        .into_par_iter()
        .map(|idx| {
            let s = State::from_index(idx as u64, n, m);
            let ev = Evaluator::new(inst, &s);
            let l = lhs(&ev);
            let v = ev.social();
            let slack = match orient {
                Orientation::Cost => &base + &params.mu * v - l,
                Orientation::Payoff => l - (&base - &params.mu * v),
            };
            (idx, slack)
        })
        .reduce_with(|a, b| if b.1 < a.1 || (b.1 == a.1 && b.0 < a.0) { b } else { a })
        .expect("at least one state");
    Ok(SmoothVerdict {
        holds: !slack.is_negative(),
        worst_state: State::from_index(idx as u64, n, m),
        slack,
        optimum,
    })
}

pub fn check_semi_smooth(
    oracle: &Oracle<'_>,
    params: &SmoothnessParams,
    sigma: &MixedProfile,
) -> Result<SmoothVerdict> {
    let inst = oracle.instance();
    sigma.check_shape(inst.n(), inst.m())?;
    scan(oracle, params, |ev| lhs_with(ev, inst, sigma))
}

/// Niceness with the joint best responses as the comparison outcome.
pub fn check_nice(oracle: &Oracle<'_>, params: &SmoothnessParams) -> Result<SmoothVerdict> {
    let n = oracle.instance().n();
    scan(oracle, params, |ev| (0..n).map(|i| ev.best_value(i)).sum())
}

/// Certified enclosure of a supremum: `lo` is attained (feasible), `hi` is not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RhoInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Interval width at which the ratio search stops.
pub fn rho_precision() -> Rational {
    frac(1, 1_000_000_000)
}

/// Is there `mu >= 0` with `l - rho*u* >= mu*(rho*u* - u)` at every state?
fn rho_feasible(rows: &[(Rational, Rational)], opt: &Rational, rho: &Rational) -> bool {
    let target = rho * opt;
    let mut lo = Rational::zero();
    let mut hi: Option<Rational> = None;
    for (l, u) in rows {
        let a = l - &target;
        let b = &target - u;
        if b.is_zero() {
            if a.is_negative() {
                return false;
            }
        } else if b.is_positive() {
            let cap = a / b;
            if hi.as_ref().is_none_or(|h| cap < *h) {
                hi = Some(cap);
            }
        } else {
            let floor = a / b;
            if floor > lo {
                lo = floor;
            }
        }
    }
    hi.is_none_or(|h| lo <= h)
}

/// Supremum of `lambda/(1+mu)` over `lambda, mu >= 0` for which the pure
/// deviation `sigma` satisfies the payoff semi-smooth inequality at every
/// state, bracketed to within [`rho_precision`].
pub fn max_rho_pure_sigma(oracle: &Oracle<'_>, sigma: &State) -> Result<RhoInterval> {
    let inst = oracle.instance();
    if inst.kind().orientation() != Orientation::Payoff {
        return Err(GameError::InvalidParameter {
            param: "kind",
            reason: "pure-sigma ratio search applies to payoff kinds".into(),
        });
    }
    sigma.validate(inst)?;
    let (n, m) = (inst.n(), inst.m());
    let count = oracle.state_count()?;
    let opt = oracle.optimum()?;
    if opt.1.is_zero() {
        return Err(GameError::UnboundedRatio("0".into()));
    }
    let sa = sigma.as_slice();
    let rows: Vec<(Rational, Rational)> = (0..count)
        .into_par_iter()
        .map(|idx| {
            let s = State::from_index(idx as u64, n, m);
            let ev = Evaluator::new(inst, &s);
            let l: Rational = (0..n).map(|i| ev.value_at(i, sa[i])).sum();
            (l, ev.social())
        })
        .collect();
    let opt_idx = opt.0.index(m) as usize;
    let ceiling = (&rows[opt_idx].0 / &opt.1).max(Rational::one()) + Rational::one();
    let mut lo = Rational::zero();
    let mut hi = ceiling;
    debug_assert!(!rho_feasible(&rows, &opt.1, &hi));
    let eps = rho_precision();
    let half = frac(1, 2);
    while &hi - &lo >= eps {
        let mid = (&lo + &hi) * &half;
        if rho_feasible(&rows, &opt.1, &mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(RhoInterval { lo, hi })
}

/// Largest certified ratio over every pure deviation profile.
pub fn max_rho_over_pure_sigmas(oracle: &Oracle<'_>) -> Result<(State, RhoInterval)> {
    let mut best: Option<(State, RhoInterval)> = None;
    for sigma in oracle.enumerate_states()? {
        let r = max_rho_pure_sigma(oracle, &sigma)?;
        if best.as_ref().is_none_or(|(_, b)| r.hi > b.hi) {
            best = Some((sigma, r));
        }
    }
    Ok(best.expect("at least one state"))
}

/// Kinds whose table entry needs `n >= m`.
pub fn requires_n_at_least_m(kind: GameKind) -> bool {
    matches!(kind, GameKind::BwF | GameKind::BwCF)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::*;
    use crate::smoothness::table1_for;

    #[test]
    fn maxcut_edge_lhs_and_rho() {
        let inst = gen_maxcut_edge().unwrap();
        let u = MixedProfile::uniform(2, 2);
        for s in Oracle::new(&inst).enumerate_states().unwrap() {
            assert_eq!(semi_smooth_lhs(&inst, &s, &u).unwrap(), int(1));
        }
        let o = Oracle::new(&inst);
        let split = max_rho_pure_sigma(&o, &State::new(vec![0, 1])).unwrap();
        assert!(split.lo <= frac(1, 3) && frac(1, 3) < split.hi);
        assert!(split.width() < rho_precision());
        let together = max_rho_pure_sigma(&o, &State::new(vec![0, 0])).unwrap();
        assert!(together.lo.is_zero());
        let (_, best) = max_rho_over_pure_sigmas(&o).unwrap();
        assert!(best.lo <= frac(1, 3));
    }

    #[test]
    fn edgeless_bwc_lhs() {
        let inst = Instance::builder(GameKind::BwC, 2, 2).build().unwrap();
        let s = State::new(vec![0, 0]);
        let u = MixedProfile::uniform(2, 2);
        assert_eq!(semi_smooth_lhs(&inst, &s, &u).unwrap(), int(3));
        assert_eq!(uniform_lhs_closed_form(&inst, &s).unwrap(), int(3));
    }

    #[test]
    fn table_params_certify_named_instances() {
        for inst in [
            gen_bwc_multipartite(2).unwrap(),
            gen_bwf_cliques(2).unwrap(),
            gen_swc_pos(3, &frac(1, 10)).unwrap(),
            gen_swf_nostrong(&frac(1, 10)).unwrap(),
        ] {
            let t = table1_for(&inst).unwrap();
            let v = check_semi_smooth(&Oracle::new(&inst), &t.params, &deviation_profile(&inst))
                .unwrap();
            assert!(v.holds, "{}", inst.kind());
        }
    }

    #[test]
    fn too_small_lambda_fails() {
        let inst = gen_bwc_multipartite(2).unwrap();
        let o = Oracle::new(&inst);
        let p = SmoothnessParams::new(Orientation::Cost, int(1), int(0)).unwrap();
        let v = check_semi_smooth(&o, &p, &MixedProfile::uniform(4, 2)).unwrap();
        assert!(!v.holds);
        assert!(!check_nice(&o, &p).unwrap().holds);
        let nice = SmoothnessParams::new(Orientation::Cost, frac(3, 2), int(0)).unwrap();
        assert!(check_nice(&o, &nice).unwrap().holds);
    }

    #[test]
    fn lone_player_is_nice() {
        let inst = Instance::builder(GameKind::BwC, 1, 3).build().unwrap();
        let p = SmoothnessParams::new(Orientation::Cost, int(1), int(0)).unwrap();
        assert!(check_nice(&Oracle::new(&inst), &p).unwrap().holds);
    }
}
