//! Sandwich constants and the convergence-theorem checks.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::trace::{meets, run_br, Trace};
use crate::error::{GameError, Result};
use crate::game::{Evaluator, GameKind, Instance, Orientation, State};
use crate::oracle::Oracle;
use crate::rational::{int, one, to_f64, Rational};
use crate::report::{instance_label, BoundSense, VerdictReport};
use crate::smoothness::table1_for;

/// Constant the measured/bound step ratios are compared against.
pub const C_REPORT: i64 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sandwich {
    /// max social/potential.
    pub a: Rational,
    /// max potential/social.
    pub b: Rational,
    pub scanned: usize,
    /// States skipped because the potential or the social value was zero.
    pub excluded: usize,
}

pub fn sandwich_constants(
    inst: &Instance,
    states: impl IntoIterator<Item = State>,
) -> Result<Sandwich> {
    let mut a: Option<Rational> = None;
    let mut b: Option<Rational> = None;
    let (mut scanned, mut excluded) = (0, 0);
    for s in states {
        s.validate(inst)?;
        let ev = Evaluator::new(inst, &s);
        let (u, phi) = (ev.social(), ev.potential());
        scanned += 1;
        if u.is_zero() || phi.is_zero() {
            excluded += 1;
            continue;
        }
        let up = &u / &phi;
        let pu = phi / u;
        if a.as_ref().is_none_or(|x| up > *x) {
            a = Some(up);
        }
        if b.as_ref().is_none_or(|x| pu > *x) {
            b = Some(pu);
        }
    }
    match (a, b) {
        (Some(a), Some(b)) => Ok(Sandwich {
            a,
            b,
            scanned,
            excluded,
        }),
        _ => Err(GameError::InvalidParameter {
            param: "states",
            reason: "no state with positive potential and value".into(),
        }),
    }
}

/// Quality factor of the cost-kind corollaries.
pub fn cost_quality_factor(inst: &Instance) -> Result<Rational> {
    let (n, m) = (inst.n() as i64, inst.m() as i64);
    Ok(match inst.kind() {
        GameKind::BwC if n >= m => int(2) - Rational::new(m.into(), n.into()),
        GameKind::BwC => one(),
        _ => table1_for(inst)?.pota,
    })
}

fn approx(x: f64) -> Rational {
    Rational::new(((x * 1e6).round() as i64).into(), 1_000_000.into())
}

fn ln_at_least_one(x: f64) -> f64 {
    if x > 0.0 {
        x.ln().max(1.0)
    } else {
        1.0
    }
}

/// Uniform random starts from `seed`, followed by the socially worst state.
pub fn random_starts(oracle: &Oracle<'_>, trials: usize, seed: u64) -> Result<Vec<State>> {
    let inst = oracle.instance();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut starts: Vec<State> = (0..trials)
        .map(|_| State::new((0..inst.n()).map(|_| rng.gen_range(0..inst.m())).collect()))
        .collect();
    starts.push(oracle.pessimum()?.0);
    Ok(starts)
}

/// Social value over the optimum; 1 when the optimum is zero.
fn ratio_to_opt(v: &Rational, opt: &Rational) -> Rational {
    if opt.is_zero() {
        return one();
    }
    v / opt
}

/// Extreme (worst for the claim) value of `f` over traces.
fn worst<F>(traces: &[Trace], orient_max: bool, f: F) -> Rational
where
    F: Fn(&Trace) -> Rational,
{
    let vals = traces.iter().map(f);
    if orient_max {
        vals.max().expect("at least one trace")
    } else {
        vals.min().expect("at least one trace")
    }
}

/// Runs the dynamic from seeded starts (plus the worst state) and returns
/// one verdict per claim, aggregated over traces by the worst case.
pub fn check_convergence_theorems(
    oracle: &Oracle<'_>,
    eps: &Rational,
    trials: usize,
    seed: u64,
) -> Result<Vec<VerdictReport>> {
    if !eps.is_positive() || *eps >= one() {
        return Err(GameError::InvalidParameter {
            param: "eps",
            reason: "must lie in (0, 1)".into(),
        });
    }
    let inst = oracle.instance();
    let label = instance_label(inst);
    let orient = inst.kind().orientation();
    let opt = oracle.optimum()?.1;
    let pure = oracle.pure_nash_set()?;
    let budget = oracle.state_count()?;
    let starts = random_starts(oracle, trials, seed)?;
    let traces: Vec<Trace> = starts
        .par_iter()
        .map(|s| run_br(inst, s, budget))
        .collect::<Result<_>>()?;

    let count = |pred: &dyn Fn(&Trace) -> bool| int(traces.iter().filter(|t| pred(t)).count() as i64);
    let mut out = vec![
        VerdictReport::new(
            "BR:PotentialMonotone",
            &label,
            int(0),
            count(&|t| !t.potential_strictly_monotone()),
            BoundSense::Equal,
        ),
        VerdictReport::new(
            "BR:EndsAtPureNash",
            &label,
            int(0),
            count(&|t| t.truncated || pure.binary_search_by(|(s, _)| s.cmp(&t.end)).is_err()),
            BoundSense::Equal,
        ),
    ];
    let n = inst.n() as f64;
    let m = inst.m() as f64;
    let e = to_f64(eps);
    let c_report = int(C_REPORT);
    let social_ratio = |t: &Trace, step: usize| ratio_to_opt(t.social_at(step), &opt);

    match orient {
        Orientation::Cost => {
            let target = cost_quality_factor(inst)? * (one() + eps);
            let hit = |t: &Trace| (0..=t.len()).find(|&s| meets(orient, t.social_at(s), &target, &opt));
            out.push(VerdictReport::new(
                "Cor:CostQualityReached",
                &label,
                target.clone(),
                worst(&traces, true, |t| (0..=t.len()).map(|s| social_ratio(t, s)).min().unwrap()),
                BoundSense::AtMost,
            ));
            out.push(VerdictReport::new(
                "Cor:CostQualityPersists",
                &label,
                target.clone(),
                worst(&traces, true, |t| match hit(t) {
                    Some(h) => (h..=t.len()).map(|s| social_ratio(t, s)).max().unwrap(),
                    None => social_ratio(t, t.len()),
                }),
                BoundSense::AtMost,
            ));
            let bound = n * ln_at_least_one(m / e);
            out.push(
                VerdictReport::new(
                    "Cor:CostSteps",
                    &label,
                    c_report,
                    worst(&traces, true, |t| approx(hit(t).unwrap_or(t.len()) as f64 / bound)),
                    BoundSense::AtMost,
                )
                .soft(),
            );
        }
        Orientation::Payoff => {
            let table = table1_for(inst)?;
            let (mu, rho) = (&table.params.mu, &table.params.rho);
            let all = oracle.enumerate_states()?;
            // identically zero welfare: every state is optimal
            let (a, b) = match sandwich_constants(inst, all) {
                Ok(sw) => (sw.a.max(one()), sw.b.max(one())),
                Err(_) if opt.is_zero() => (one(), one()),
                Err(e) => return Err(e),
            };
            let one_mu = to_f64(&(one() + mu));

            // first theorem: a good state is reached
            let t1 = rho / (one() + eps);
            let hit1 = |t: &Trace| (0..=t.len()).find(|&s| meets(orient, t.social_at(s), &t1, &opt));
            out.push(VerdictReport::new(
                "Thm:UtilityConvergence1Reached",
                &label,
                t1.clone(),
                worst(&traces, false, |t| (0..=t.len()).map(|s| social_ratio(t, s)).max().unwrap()),
                BoundSense::AtLeast,
            ));
            let bf = to_f64(&b);
            let bound1 = bf * n / (e * one_mu) * ln_at_least_one(bf * to_f64(&opt));
            out.push(
                VerdictReport::new(
                    "Thm:UtilityConvergence1Steps",
                    &label,
                    c_report.clone(),
                    worst(&traces, true, |t| approx(hit1(t).unwrap_or(t.len()) as f64 / bound1)),
                    BoundSense::AtMost,
                )
                .soft(),
            );

            // second theorem: potential threshold, then quality for good
            let t2 = rho * (one() - eps) / (&a * &b);
            let phi_target = rho * (one() - eps) / &a * &opt;
            let phi_hit = |t: &Trace| (0..=t.len()).find(|&s| *t.potential_at(s) >= phi_target);
            out.push(VerdictReport::new(
                "Thm:UtilityConvergence2Reached",
                &label,
                t2.clone(),
                worst(&traces, false, |t| (0..=t.len()).map(|s| social_ratio(t, s)).max().unwrap()),
                BoundSense::AtLeast,
            ));
            out.push(VerdictReport::new(
                "Thm:UtilityConvergence2Persists",
                &label,
                t2.clone(),
                worst(&traces, false, |t| match phi_hit(t) {
                    Some(h) => (h..=t.len()).map(|s| social_ratio(t, s)).min().unwrap(),
                    None => Rational::zero(),
                }),
                BoundSense::AtLeast,
            ));
            let naive_hit = |t: &Trace| (0..=t.len()).find(|&s| meets(orient, t.social_at(s), &t2, &opt));
            out.push(
                VerdictReport::new(
                    "Thm:UtilityConvergence2FirstHitPersists",
                    &label,
                    t2.clone(),
                    worst(&traces, false, |t| match naive_hit(t) {
                        Some(h) => (h..=t.len()).map(|s| social_ratio(t, s)).min().unwrap(),
                        None => Rational::zero(),
                    }),
                    BoundSense::AtLeast,
                )
                .soft(),
            );
            let bound2 = n / (to_f64(&a) * one_mu) * ln_at_least_one(1.0 / e);
            out.push(
                VerdictReport::new(
                    "Thm:UtilityConvergence2Steps",
                    &label,
                    c_report,
                    worst(&traces, true, |t| approx(phi_hit(t).unwrap_or(t.len()) as f64 / bound2)),
                    BoundSense::AtMost,
                )
                .soft(),
            );
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::*;
    use crate::rational::{frac, harmonic};

    #[test]
    fn balancing_sandwich_is_exact_half() {
        let inst = gen_path4().unwrap();
        let sw = sandwich_constants(&inst, Oracle::new(&inst).enumerate_states().unwrap()).unwrap();
        assert_eq!(sw.a, int(2));
        assert_eq!(sw.b, frac(1, 2));
    }

    #[test]
    fn swc_sandwich_within_harmonic() {
        let inst = gen_swc_pos(3, &frac(1, 10)).unwrap();
        let sw = sandwich_constants(&inst, Oracle::new(&inst).enumerate_states().unwrap()).unwrap();
        assert!(sw.a <= int(2));
        assert!(sw.b <= harmonic(3));
    }

    #[test]
    fn zero_welfare_is_vacuous() {
        let inst = Instance::builder(GameKind::MaxCut, 3, 2).build().unwrap();
        let rows = check_convergence_theorems(&Oracle::new(&inst), &frac(1, 10), 3, 1).unwrap();
        assert!(rows.iter().all(|r| !r.failed()));
    }

    #[test]
    fn convergence_on_named_instances() {
        for inst in [
            gen_bwc_multipartite(2).unwrap(),
            gen_swc_pos(3, &frac(1, 10)).unwrap(),
            gen_swf_nostrong(&frac(1, 10)).unwrap(),
        ] {
            let rows = check_convergence_theorems(&Oracle::new(&inst), &frac(1, 10), 5, 3).unwrap();
            for r in &rows {
                assert!(!r.failed(), "{r}");
            }
        }
    }
}
