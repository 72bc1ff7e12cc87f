//! One line per acceptance criterion, then a single assertion over all of them.

use std::io::Write;
use std::time::Instant;

use num_traits::{One, Zero};
use rayon::prelude::*;

use conflict_games::dynamics::check_convergence_theorems;
use conflict_games::game::{CostWeights, Evaluator, GameKind, MixedProfile, Orientation, State};
use conflict_games::instances::{
    gen_bwc_multipartite, gen_bwf_cliques, gen_maxcut_edge, gen_path4, gen_swc_pos,
    gen_swf_nostrong, random_pool, PoolLimits, RandomSpec,
};
use conflict_games::oracle::{verify_mixed_ne, Oracle, StrongPoa};
use conflict_games::rational::{format_rational, frac, harmonic, int, Rational};
use conflict_games::smoothness::{
    check_opt_lower_bounds, check_semi_smooth, deviation_profile, max_rho_over_pure_sigmas,
    requires_n_at_least_m, rho_precision, semi_smooth_lhs, table1_bounds, table1_for,
    SmoothnessParams,
};
use conflict_games::GameError;

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

const POOL_SEED: u64 = 2024;
const POOL_SIZE: usize = 100;
const POOL_MAX_N: usize = 6;
const POOL_MAX_M: usize = 3;
const QUALITY_EPS: (i64, i64) = (1, 10);
const DYNAMICS_TRIALS: usize = 4;

const KINDS: [GameKind; 6] = [
    GameKind::BwC,
    GameKind::BwF,
    GameKind::BwCF,
    GameKind::SwC,
    GameKind::SwF,
    GameKind::MaxCut,
];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: Result<T, GameError>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn show(r: &Rational) -> String {
    format_rational(r)
}

fn pool(kind: GameKind) -> Vec<RandomSpec> {
    let limits = PoolLimits {
        max_n: POOL_MAX_N,
        max_m: POOL_MAX_M,
        n_at_least_m: requires_n_at_least_m(kind),
    };
    random_pool(kind, POOL_SIZE, limits, POOL_SEED)
}

fn opt_ne_poa(m: usize, want_opt: i64, want_ne: i64, want_poa: Rational) -> Outcome {
    let inst = lib(gen_bwc_multipartite(m))?;
    let rep = lib(Oracle::new(&inst).report())?;
    ensure(rep.optimum.1 == int(want_opt), || format!("OPT {}", show(&rep.optimum.1)))?;
    ensure(rep.worst_ne.1 == int(want_ne), || format!("worst NE {}", show(&rep.worst_ne.1)))?;
    ensure(rep.poa == want_poa, || format!("PoA {}", show(&rep.poa)))?;
    Ok(format!(
        "OPT {} worst NE {} PoA {}",
        show(&rep.optimum.1),
        show(&rep.worst_ne.1),
        show(&rep.poa)
    ))
}

fn c01() -> Outcome {
    opt_ne_poa(2, 8, 12, frac(3, 2))
}

fn c02() -> Outcome {
    opt_ne_poa(3, 27, 45, frac(5, 3))
}

fn c03() -> Outcome {
    for m in [2usize, 3] {
        let inst = lib(gen_bwc_multipartite(m))?;
        let n = inst.n() as i64;
        let v = lib(verify_mixed_ne(&inst, &MixedProfile::uniform(inst.n(), m)))?;
        ensure(v.holds, || format!("m={m}: uniform profile is not a mixed NE"))?;
        let target = frac(2 * n - 1, m as i64);
        for (i, row) in v.conditional.iter().enumerate() {
            for (k, val) in row.iter().enumerate() {
                ensure(*val == target, || {
                    format!("m={m}: player {} machine {} gives {}", i + 1, k + 1, show(val))
                })?;
            }
        }
    }
    Ok("all conditional expectations equal (2n-1)/m for m in {2,3}".into())
}

fn c04() -> Outcome {
    let inst = lib(gen_bwc_multipartite(2))?;
    let oracle = Oracle::new(&inst);
    let sol = lib(oracle.worst_cce())?;
    let opt = lib(oracle.optimum())?.1;
    // Independent feasibility check of the returned distribution.
    let total: Rational = sol.distribution.iter().map(|(_, q)| q.clone()).sum();
    ensure(total.is_one(), || format!("mass {}", show(&total)))?;
    for i in 0..inst.n() {
        for k in 0..inst.m() {
            let regret: Rational = sol
                .distribution
                .iter()
                .map(|(s, q)| {
                    let ev = Evaluator::new(&inst, s);
                    q * (ev.value(i) - ev.value_at(i, k))
                })
                .sum();
            ensure(regret <= Rational::zero(), || {
                format!("player {} gains {} by always playing {}", i + 1, show(&regret), k + 1)
            })?;
        }
    }
    let social: Rational = sol
        .distribution
        .iter()
        .map(|(s, q)| q * Evaluator::new(&inst, s).social())
        .sum();
    let (m, n) = (2i64, 4i64);
    let bound = int(2) - frac(1, m) + frac(m - 1, n);
    let ratio = &social / &opt;
    ensure(social == int(14), || format!("value {}", show(&social)))?;
    ensure(sol.value == social, || "reported value disagrees".into())?;
    ensure(ratio == frac(7, 4) && ratio == bound, || format!("ratio {}", show(&ratio)))?;
    let table = lib(table1_for(&inst))?;
    ensure(table.pota == bound, || format!("table bound {}", show(&table.pota)))?;
    Ok(format!("worst CCE {} ratio {}", show(&social), show(&ratio)))
}

fn c05() -> Outcome {
    let inst = lib(gen_bwf_cliques(2))?;
    let rep = lib(Oracle::new(&inst).report())?;
    ensure(rep.optimum.1 == int(8), || format!("OPT {}", show(&rep.optimum.1)))?;
    ensure(rep.worst_ne.1 == int(12), || format!("worst NE {}", show(&rep.worst_ne.1)))?;
    ensure(rep.poa == frac(3, 2), || format!("PoA {}", show(&rep.poa)))?;
    Ok("OPT 8 worst NE 12 PoA 3/2".into())
}

fn c06() -> Outcome {
    let inst = lib(gen_path4())?;
    let rep = lib(Oracle::new(&inst).report())?;
    let strong = rep.strong_ne.ok_or("strong set not computed")?;
    ensure(strong.iter().any(|(_, v)| *v == int(10)), || "no value-10 strong NE".into())?;
    ensure(strong.iter().any(|(s, _)| *s == rep.optimum.0), || "OPT not strong".into())?;
    let bound = frac(4, 3) + frac(2, 12);
    match rep.strong_poa {
        StrongPoa::Ratio(r) => {
            ensure(r == frac(5, 4), || format!("strong PoA {}", show(&r)))?;
            ensure(r <= bound, || "bound violated".into())?;
        }
        other => return Err(format!("strong PoA {other}")),
    }
    Ok(format!("strong PoA 5/4 <= {}", show(&bound)))
}

fn c07() -> Outcome {
    let specs: Vec<RandomSpec> = (0..100u64)
        .map(|idx| {
            let n = 2 + (idx as usize % 7);
            let p = frac(1 + (idx as i64 % 3), 4);
            RandomSpec::new(n, 2, GameKind::BwC, p, 500 + idx)
        })
        .collect();
    let worst = specs
        .par_iter()
        .map(|spec| -> Result<Rational, String> {
            let inst = lib(spec.build())?;
            let n = inst.n() as i64;
            let rep = lib(Oracle::new(&inst).report())?;
            let strong = rep.strong_ne.ok_or("strong set not computed")?;
            ensure(strong.iter().any(|(_, v)| *v == rep.optimum.1), || {
                format!("{spec:?}: no optimal strong NE")
            })?;
            let bound = frac(4, 3) + frac(2, 3 * n);
            match rep.strong_poa {
                StrongPoa::Ratio(r) => {
                    ensure(r <= bound, || format!("n={n}: strong PoA {}", show(&r)))?;
                    Ok(r / bound)
                }
                other => Err(format!("n={n}: strong PoA {other}")),
            }
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .max()
        .unwrap_or_default();
    Ok(format!("100 instances, max strong PoA / bound {}", show(&worst)))
}

fn c08() -> Outcome {
    let m = 3i64;
    let mut previous: Option<Rational> = None;
    for (a, b) in [(1, 2), (1, 10), (1, 100)] {
        let eps = frac(a, b);
        let inst = lib(gen_swc_pos(3, &eps))?;
        let rep = lib(Oracle::new(&inst).report())?;
        ensure(rep.pure_ne.len() == 1, || format!("eps={a}/{b}: {} NE", rep.pure_ne.len()))?;
        ensure(rep.pure_ne[0].0 == State::uniform(inst.n(), 0), || {
            format!("eps={a}/{b}: NE {}", rep.pure_ne[0].0)
        })?;
        let want = (int(2 * m * m - 2 * m) + &eps) / (int(m * m - m) + &eps);
        ensure(rep.pos == want, || format!("eps={a}/{b}: PoS {}", show(&rep.pos)))?;
        ensure(rep.pos < int(2), || "PoS reached 2".into())?;
        if let Some(p) = &previous {
            ensure(rep.pos > *p, || "PoS not increasing as eps shrinks".into())?;
        }
        previous = Some(rep.pos);
    }
    Ok(format!("PoS sequence ends at {}", show(&previous.unwrap_or_default())))
}

fn c09() -> Outcome {
    let inst = lib(gen_swf_nostrong(&frac(1, 10)))?;
    let oracle = Oracle::new(&inst);
    let strong = lib(oracle.strong_nash_set())?;
    let pure = lib(oracle.pure_nash_set())?;
    ensure(strong.is_empty(), || format!("{} strong NE", strong.len()))?;
    ensure(!pure.is_empty(), || "no pure NE".into())?;
    Ok(format!("no strong NE, {} pure NE", pure.len()))
}

fn c10() -> Outcome {
    let mut alpha_ge_gamma = 0;
    let mut alpha_lt_gamma = 0;
    let mut checked = 0;
    for kind in KINDS {
        let specs = pool(kind);
        let verdicts = specs
            .par_iter()
            .map(|spec| -> Result<bool, String> {
                let inst = lib(spec.build())?;
                let table = lib(table1_for(&inst))?;
                let v = lib(check_semi_smooth(
                    &Oracle::new(&inst),
                    &table.params,
                    &deviation_profile(&inst),
                ))?;
                ensure(v.holds, || {
                    format!("{spec:?}: slack {} at {}", show(&v.slack), v.worst_state)
                })?;
                let w = inst.weights();
                Ok(w.alpha >= w.gamma)
            })
            .collect::<Result<Vec<_>, _>>()?;
        checked += verdicts.len();
        if kind == GameKind::BwCF {
            alpha_ge_gamma = verdicts.iter().filter(|b| **b).count();
            alpha_lt_gamma = verdicts.len() - alpha_ge_gamma;
        }
    }
    ensure(alpha_ge_gamma > 0 && alpha_lt_gamma > 0, || "a BwCF branch is missing".into())?;
    Ok(format!(
        "{checked} instances, BwCF branches {alpha_ge_gamma}/{alpha_lt_gamma}"
    ))
}

fn c11() -> Outcome {
    let half = lib(SmoothnessParams::new(Orientation::Payoff, frac(1, 2), int(0)))?;
    (0..50u64)
        .into_par_iter()
        .map(|idx| -> Result<(), String> {
            let n = 2 + (idx as usize % 5);
            let spec = RandomSpec::new(n, 2, GameKind::MaxCut, frac(1 + (idx as i64 % 3), 4), 900 + idx);
            let inst = lib(spec.build())?;
            let edges = int(inst.conflict_edges().len() as i64);
            let sigma = MixedProfile::uniform(n, 2);
            let oracle = Oracle::new(&inst);
            for s in lib(oracle.enumerate_states())? {
                let lhs = lib(semi_smooth_lhs(&inst, &s, &sigma))?;
                ensure(lhs == edges, || format!("{spec:?} at {s}: lhs {}", show(&lhs)))?;
            }
            let v = lib(check_semi_smooth(&oracle, &half, &sigma))?;
            ensure(v.holds, || format!("{spec:?}: not (1/2,0)-semi-smooth"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let inst = lib(gen_maxcut_edge())?;
    let (sigma, r) = lib(max_rho_over_pure_sigmas(&Oracle::new(&inst)))?;
    let third = frac(1, 3);
    ensure(r.width() <= rho_precision(), || format!("width {}", show(&r.width())))?;
    ensure(r.lo <= third, || format!("lower end {}", show(&r.lo)))?;
    ensure(r.hi <= &third + rho_precision(), || format!("upper end {}", show(&r.hi)))?;
    Ok(format!("50 graphs lhs = |E|; best pure sigma {sigma} rho in [{}, {}]", show(&r.lo), show(&r.hi)))
}

fn c12() -> Outcome {
    let limits = |kind| PoolLimits {
        max_n: 5,
        max_m: 3,
        n_at_least_m: requires_n_at_least_m(kind),
    };
    let mut moves = 0usize;
    for kind in KINDS {
        let counts = random_pool(kind, 20, limits(kind), POOL_SEED + 1)
            .par_iter()
            .map(|spec| -> Result<usize, String> {
                let inst = lib(spec.build())?;
                let mut count = 0;
                for s in lib(Oracle::new(&inst).enumerate_states())? {
                    let before = Evaluator::new(&inst, &s);
                    for i in 0..inst.n() {
                        for k in 0..inst.m() {
                            let t = s.with_move(i, k);
                            let after = Evaluator::new(&inst, &t);
                            let dphi = after.potential() - before.potential();
                            let dv = after.value(i) - before.value(i);
                            ensure(dphi == dv, || {
                                format!("{spec:?}: {s} player {} to {}", i + 1, k + 1)
                            })?;
                            count += 1;
                        }
                    }
                }
                Ok(count)
            })
            .collect::<Result<Vec<_>, _>>()?;
        moves += counts.iter().sum::<usize>();
    }
    Ok(format!("{moves} unilateral moves checked"))
}

fn c13() -> Outcome {
    let mut rows = 0;
    for kind in [GameKind::BwC, GameKind::BwF, GameKind::BwCF] {
        let per = pool(kind)
            .par_iter()
            .map(|spec| -> Result<usize, String> {
                let inst = lib(spec.build())?;
                let checks = lib(check_opt_lower_bounds(&Oracle::new(&inst)))?;
                for c in checks.iter().filter(|c| c.asserted) {
                    ensure(c.holds, || {
                        format!("{spec:?}: {} needs {} got {}", c.name, show(&c.bound), show(&c.measured))
                    })?;
                }
                Ok(checks.iter().filter(|c| c.asserted).count())
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows += per.iter().sum::<usize>();
    }
    Ok(format!("{rows} inequalities hold at the optimum, hence at every state"))
}

fn c14() -> Outcome {
    let eps = frac(QUALITY_EPS.0, QUALITY_EPS.1);
    let mut traces = 0usize;
    let mut soft_misses = 0usize;
    let mut worst_step_ratio = Rational::zero();
    for kind in KINDS {
        let per = pool(kind)
            .par_iter()
            .enumerate()
            .map(|(idx, spec)| -> Result<(usize, Rational), String> {
                let inst = lib(spec.build())?;
                let rows = lib(check_convergence_theorems(
                    &Oracle::new(&inst),
                    &eps,
                    DYNAMICS_TRIALS,
                    POOL_SEED + idx as u64,
                ))?;
                for r in &rows {
                    ensure(!r.failed(), || format!("{spec:?}: {r}"))?;
                }
                if kind == GameKind::BwC {
                    for id in ["Cor:CostQualityReached", "Cor:CostQualityPersists"] {
                        ensure(rows.iter().any(|r| r.claim_id == id), || format!("missing {id}"))?;
                    }
                }
                let misses = rows.iter().filter(|r| r.soft && !r.passed).count();
                let step_ratio = rows
                    .iter()
                    .filter(|r| r.claim_id.ends_with("Steps"))
                    .map(|r| r.measured.clone())
                    .max()
                    .unwrap_or_default();
                Ok((misses, step_ratio))
            })
            .collect::<Result<Vec<_>, _>>()?;
        traces += per.len() * (DYNAMICS_TRIALS + 1);
        for (misses, ratio) in per {
            soft_misses += misses;
            worst_step_ratio = worst_step_ratio.max(ratio);
        }
    }
    Ok(format!(
        "{traces} traces; max steps/bound {} against 8 ({soft_misses} soft misses)",
        show(&worst_step_ratio)
    ))
}

fn c15() -> Outcome {
    let mut states = 0usize;
    for spec in pool(GameKind::SwC) {
        let inst = lib(spec.build())?;
        let hn = harmonic(inst.n());
        for s in lib(Oracle::new(&inst).enumerate_states())? {
            let ev = Evaluator::new(&inst, &s);
            let (phi, u) = (ev.potential(), ev.social());
            ensure(phi <= &hn * &u, || format!("{spec:?} at {s}: potential above H_n u"))?;
            ensure(u <= int(2) * &phi, || format!("{spec:?} at {s}: u above 2 potential"))?;
            states += 1;
        }
    }
    Ok(format!("{states} SwC states"))
}

#[test]
fn acceptance() {
    // Sanity of the reference bound used by criterion 4.
    let bwc = table1_bounds(GameKind::BwC, 4, 2, &CostWeights::conflicts_only()).expect("table row");
    assert_eq!(bwc.pota, frac(7, 4));

    let criteria: [(&str, Criterion); 15] = [
        ("multipartite m=2 pure PoA", c01),
        ("multipartite m=3 pure PoA", c02),
        ("uniform mixed NE on multipartite", c03),
        ("worst CCE on multipartite m=2", c04),
        ("cliques pure PoA", c05),
        ("path4 strong PoA", c06),
        ("BwC m=2 strong sweep", c07),
        ("SwC price of stability sweep", c08),
        ("SwF without strong NE", c09),
        ("semi-smoothness pool", c10),
        ("Max-Cut smoothness and rho", c11),
        ("exact potential law", c12),
        ("OPT lower bounds", c13),
        ("best-response dynamics", c14),
        ("SwC potential sandwich", c15),
    ];
    let mut failed = vec![];
    for (idx, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let line = match &outcome {
            Ok(detail) => format!("criterion {:>2} PASS {name}: {detail} [{secs:.2}s]\n", idx + 1),
            Err(why) => {
                failed.push(idx + 1);
                format!("criterion {:>2} FAIL {name}: {why} [{secs:.2}s]\n", idx + 1)
            }
        };
        // the raw handle is not captured by the test harness
        let mut stdout = std::io::stdout().lock();
        stdout.write_all(line.as_bytes()).expect("stdout");
        stdout.flush().expect("stdout");
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
