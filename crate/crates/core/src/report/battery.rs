//! The fixed battery of named examples.

use num_traits::Zero;

use super::verdict::{BoundSense, VerdictReport};
use crate::error::Result;
use crate::game::{CostWeights, GameKind, MixedProfile};
use crate::instances::{random_pool, InstanceSpec, PoolLimits};
use crate::oracle::{expected_value, verify_mixed_ne, Oracle, StrongPoa};
use crate::rational::{abs, frac, int, one, Rational};
use crate::smoothness::{
    check_opt_lower_bounds, check_semi_smooth, max_rho_over_pure_sigmas, rho_precision,
    table1_bounds, table1_for,
};

use super::table::EPS_SWEEP;

fn count(v: usize) -> Rational {
    int(v as i64)
}

fn strong_ratio(sp: &StrongPoa) -> Option<Rational> {
    match sp {
        StrongPoa::Ratio(r) => Some(r.clone()),
        _ => None,
    }
}

fn multipartite(m: usize, rows: &mut Vec<VerdictReport>) -> Result<()> {
    let spec = InstanceSpec::BwcMultipartite { m };
    let label = spec.to_string();
    let inst = spec.build()?;
    let (n, mi) = (inst.n() as i64, m as i64);
    let rep = Oracle::new(&inst).report()?;
    rows.push(VerdictReport::new(
        "Thm:MinUncutPurePoA:opt",
        &label,
        int(mi * mi * mi),
        rep.optimum.1.clone(),
        BoundSense::Equal,
    ));
    rows.push(VerdictReport::new(
        "Thm:MinUncutPurePoA",
        &label,
        int(2) - frac(mi, n),
        rep.poa.clone(),
        BoundSense::Equal,
    ));
    let uniform = MixedProfile::uniform(inst.n(), m);
    let v = verify_mixed_ne(&inst, &uniform)?;
    rows.push(VerdictReport::new(
        "Claim:MinUncutLB:mixedNE",
        &label,
        int(0),
        count(usize::from(!v.holds)),
        BoundSense::Equal,
    ));
    let target = frac(2 * n - 1, mi);
    let off = v
        .conditional
        .iter()
        .flatten()
        .map(|e| abs(&(e - &target)))
        .max()
        .unwrap_or_else(Rational::zero);
    rows.push(VerdictReport::new(
        "Claim:MinUncutLB:conditional",
        &label,
        int(0),
        off,
        BoundSense::Equal,
    ));
    if m == 2 {
        let cce = Oracle::new(&inst).worst_cce()?;
        let bound = table1_for(&inst)?.pota;
        rows.push(VerdictReport::new(
            "Table1:BwC:cceTight",
            &label,
            bound,
            &cce.value / &rep.optimum.1,
            BoundSense::Equal,
        ));
    }
    Ok(())
}

fn cliques(rows: &mut Vec<VerdictReport>) -> Result<()> {
    let spec = InstanceSpec::BwfCliques { m: 2 };
    let label = spec.to_string();
    let inst = spec.build()?;
    let rep = Oracle::new(&inst).report()?;
    rows.push(VerdictReport::new(
        "Thm:MinCutSS:opt",
        &label,
        int(8),
        rep.optimum.1.clone(),
        BoundSense::Equal,
    ));
    rows.push(VerdictReport::new(
        "Thm:MinCutSS:purePoA",
        &label,
        frac(3, 2),
        rep.poa,
        BoundSense::Equal,
    ));
    Ok(())
}

fn combined(rows: &mut Vec<VerdictReport>) -> Result<()> {
    for w in [
        CostWeights::new(int(1), int(1), int(1)),
        CostWeights::new(int(2), int(1), int(1)),
        CostWeights::new(frac(3, 2), frac(1, 2), int(0)),
    ] {
        let spec = InstanceSpec::BwcfLower { m: 2, weights: w };
        let label = spec.to_string();
        let inst = spec.build()?;
        let (n, m) = (inst.n(), inst.m());
        let oracle = Oracle::new(&inst);
        let opt = oracle.optimum()?.1;
        let wt = inst.weights();
        rows.push(VerdictReport::new(
            "Thm:MinCorSS:opt",
            &label,
            &wt.alpha * frac((n * n) as i64, m as i64),
            opt.clone(),
            BoundSense::Equal,
        ));
        let uniform = MixedProfile::uniform(n, m);
        let v = verify_mixed_ne(&inst, &uniform)?;
        rows.push(VerdictReport::new(
            "Thm:MinCorSS:mixedNE",
            &label,
            int(0),
            count(usize::from(!v.holds)),
            BoundSense::Equal,
        ));
        let mut mixed_cost = Rational::zero();
        for i in 0..n {
            mixed_cost += expected_value(&inst, &uniform, i)?;
        }
        let bound = table1_for(&inst)?.pota;
        rows.push(VerdictReport::new(
            "Thm:MinCorSS:mixedTight",
            &label,
            bound.clone(),
            &mixed_cost / &opt,
            BoundSense::Equal,
        ));
        let cce = oracle.worst_cce()?;
        rows.push(VerdictReport::new(
            "Table1:BwCF:cceTight",
            &label,
            bound,
            cce.value / opt,
            BoundSense::Equal,
        ));
    }
    Ok(())
}

fn path4(rows: &mut Vec<VerdictReport>) -> Result<()> {
    let spec = InstanceSpec::Path4;
    let label = spec.to_string();
    let inst = spec.build()?;
    let rep = Oracle::new(&inst).report()?;
    let strong = rep.strong_ne.clone().unwrap_or_default();
    let sp = strong_ratio(&rep.strong_poa).unwrap_or_else(Rational::zero);
    rows.push(VerdictReport::new(
        "Claim:Path4StrongPoA:opt",
        &label,
        int(8),
        rep.optimum.1.clone(),
        BoundSense::Equal,
    ));
    rows.push(VerdictReport::new(
        "Claim:Path4StrongPoA",
        &label,
        frac(5, 4),
        sp.clone(),
        BoundSense::Equal,
    ));
    rows.push(VerdictReport::new(
        "Thm:StrongPoAUpper:path4",
        &label,
        frac(4, 3) + frac(2, 12),
        sp,
        BoundSense::AtMost,
    ));
    rows.push(VerdictReport::new(
        "Thm:StrongAtOpt:path4",
        &label,
        int(1),
        count(strong.iter().filter(|(s, _)| *s == rep.optimum.0).count()),
        BoundSense::Equal,
    ));
    Ok(())
}

/// BwC and BwF with two machines: the optimum is strong and the strong PoA
/// stays under the kind's bound.
fn strong_sweep(seed: u64, rows: &mut Vec<VerdictReport>) -> Result<()> {
    let limits = PoolLimits {
        max_n: 8,
        max_m: 2,
        n_at_least_m: false,
    };
    for kind in [GameKind::BwC, GameKind::BwF] {
        for n in 2..=8usize {
            let mut worst_gap = None::<Rational>;
            let mut opt_missing = 0usize;
            let specs: Vec<_> = random_pool(kind, 12, limits, seed ^ n as u64)
                .into_iter()
                .map(|mut s| {
                    s.n = n;
                    s.m = 2;
                    s
                })
                .collect();
            let bound = match kind {
                GameKind::BwC => frac(4, 3) + frac(2, 3 * n as i64),
                _ => frac(4, 3),
            };
            for spec in &specs {
                let inst = spec.build()?;
                let rep = Oracle::new(&inst).report()?;
                let strong = rep.strong_ne.clone().unwrap_or_default();
                if !strong.iter().any(|(s, _)| *s == rep.optimum.0) {
                    opt_missing += 1;
                }
                if let Some(r) = strong_ratio(&rep.strong_poa) {
                    if worst_gap.as_ref().is_none_or(|g| r > *g) {
                        worst_gap = Some(r);
                    }
                }
            }
            let label = format!("random({kind};n={n};m=2;count=12;seed={seed})");
            let measured = worst_gap.unwrap_or_else(one);
            rows.push(VerdictReport::new(
                format!("Thm:StrongPoAUpper:{kind}"),
                &label,
                bound,
                measured.clone(),
                BoundSense::AtMost,
            ));
            rows.push(VerdictReport::new(
                format!("Thm:StrongAtOpt:{kind}"),
                &label,
                int(0),
                count(opt_missing),
                BoundSense::Equal,
            ));
            if kind == GameKind::BwC && n <= 3 {
                rows.push(VerdictReport::new(
                    "Thm:StrongPoASmallN",
                    &label,
                    one(),
                    measured,
                    BoundSense::Equal,
                ));
            }
        }
    }
    Ok(())
}

fn swc_pos(rows: &mut Vec<VerdictReport>) -> Result<()> {
    let m = 3i64;
    let mut previous: Option<Rational> = None;
    for eps in EPS_SWEEP.iter().map(|&(a, b)| frac(a, b)) {
        let spec = InstanceSpec::SwcPos { m: 3, eps: eps.clone() };
        let label = spec.to_string();
        let inst = spec.build()?;
        let rep = Oracle::new(&inst).report()?;
        rows.push(VerdictReport::new(
            "Claim:MaxCutPoALB:uniqueNE",
            &label,
            one(),
            count(rep.pure_ne.len()),
            BoundSense::Equal,
        ));
        let all_on_one = rep
            .pure_ne
            .first()
            .map(|(s, _)| s.as_slice().iter().all(|&k| k == 0))
            .unwrap_or(false);
        rows.push(VerdictReport::new(
            "Claim:MaxCutPoALB:allOnFirst",
            &label,
            one(),
            count(usize::from(all_on_one)),
            BoundSense::Equal,
        ));
        let expected = (int(2 * m * m - 2 * m) + &eps) / (int(m * m - m) + &eps);
        rows.push(VerdictReport::new(
            "Claim:MaxCutPoALB:pos",
            &label,
            expected,
            rep.pos.clone(),
            BoundSense::Equal,
        ));
        rows.push(VerdictReport::new(
            "Thm:MaxCutSS:posAtMost2",
            &label,
            int(2),
            rep.pos.clone(),
            BoundSense::AtMost,
        ));
        if let Some(prev) = previous {
            rows.push(VerdictReport::new(
                "Claim:MaxCutPoALB:monotone",
                &label,
                prev,
                rep.pos.clone(),
                BoundSense::AtLeast,
            ));
        }
        previous = Some(rep.pos);
    }
    Ok(())
}

fn swf_nostrong(rows: &mut Vec<VerdictReport>) -> Result<()> {
    let spec = InstanceSpec::SwfNoStrong { eps: frac(1, 10) };
    let label = spec.to_string();
    let inst = spec.build()?;
    let rep = Oracle::new(&inst).report()?;
    rows.push(VerdictReport::new(
        "Thm:SwFNoStrong",
        &label,
        int(0),
        count(rep.strong_ne.map(|s| s.len()).unwrap_or(usize::MAX)),
        BoundSense::Equal,
    ));
    rows.push(VerdictReport::new(
        "Thm:SwFNoStrong:pureExists",
        &label,
        one(),
        count(rep.pure_ne.len()),
        BoundSense::AtLeast,
    ));
    Ok(())
}

fn maxcut(rows: &mut Vec<VerdictReport>) -> Result<()> {
    let spec = InstanceSpec::MaxCutEdge;
    let label = spec.to_string();
    let inst = spec.build()?;
    let oracle = Oracle::new(&inst);
    rows.push(VerdictReport::new(
        "MaxCut:opt",
        &label,
        int(2),
        oracle.optimum()?.1,
        BoundSense::Equal,
    ));
    let params = table1_bounds(GameKind::MaxCut, 2, 2, inst.weights())?.params;
    let v = check_semi_smooth(&oracle, &params, &MixedProfile::uniform(2, 2))?;
    rows.push(VerdictReport::new(
        "Thm:MaxCutHalfSemiSmooth",
        &label,
        int(0),
        v.slack,
        BoundSense::AtLeast,
    ));
    let (_, rho) = max_rho_over_pure_sigmas(&oracle)?;
    rows.push(VerdictReport::new(
        "Thm:MaxCutPureSigma",
        &label,
        frac(1, 3),
        rho.lo.clone(),
        BoundSense::AtMost,
    ));
    rows.push(VerdictReport::new(
        "Thm:MaxCutPureSigma:width",
        &label,
        rho_precision(),
        rho.width(),
        BoundSense::AtMost,
    ));
    let cce = oracle.worst_cce()?;
    rows.push(VerdictReport::new(
        "MaxCut:cceHalf",
        &label,
        int(1),
        cce.value,
        BoundSense::AtLeast,
    ));
    Ok(())
}

fn lower_bounds(rows: &mut Vec<VerdictReport>) -> Result<()> {
    for spec in [
        InstanceSpec::BwcMultipartite { m: 2 },
        InstanceSpec::BwfCliques { m: 2 },
        InstanceSpec::BwcfLower {
            m: 2,
            weights: CostWeights::new(int(1), int(1), int(2)),
        },
        InstanceSpec::Path4,
    ] {
        let inst = spec.build()?;
        for c in check_opt_lower_bounds(&Oracle::new(&inst))? {
            let row = VerdictReport::new(
                format!("Lemma:OptLowerBound:{}", c.name),
                spec.to_string(),
                c.bound.clone(),
                c.measured.clone(),
                BoundSense::AtLeast,
            );
            rows.push(if c.asserted { row } else { row.soft() });
        }
    }
    Ok(())
}

/// Runs every named check; `seed` drives the random strong-NE sweeps.
/// Largest state space the battery enumerates (`bwc_multipartite(3)`).
pub const NAMED_MAX_STATES: u64 = 19_683;

pub fn reproduce_named_examples(seed: u64) -> Result<Vec<VerdictReport>> {
    let mut rows = Vec::new();
    multipartite(2, &mut rows)?;
    multipartite(3, &mut rows)?;
    cliques(&mut rows)?;
    combined(&mut rows)?;
    path4(&mut rows)?;
    strong_sweep(seed, &mut rows)?;
    swc_pos(&mut rows)?;
    swf_nostrong(&mut rows)?;
    maxcut(&mut rows)?;
    lower_bounds(&mut rows)?;
    Ok(rows)
}
