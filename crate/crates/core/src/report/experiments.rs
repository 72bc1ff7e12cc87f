//! Reported-only measurements for open questions.

use rayon::prelude::*;

use super::verdict::{BoundSense, VerdictReport};
use crate::error::Result;
use crate::game::GameKind;
use crate::instances::RandomSpec;
use crate::oracle::Oracle;
use crate::rational::{frac, int, one, Rational};

/// Worst pure PoA of dense BwC instances with `n > m^2`, next to `2 - 1/m`.
pub fn large_n_experiment(m: usize, max_n: usize, per_n: usize, seed: u64) -> Result<Vec<VerdictReport>> {
    let mut rows = Vec::new();
    for n in m * m + 1..=max_n {
        let worst = (0..per_n)
            .into_par_iter()
            .map(|t| -> Result<Rational> {
                let spec = RandomSpec::new(n, m, GameKind::BwC, frac(1, 2), seed ^ ((n * 1000 + t) as u64));
                let inst = spec.build()?;
                Ok(Oracle::new(&inst).report()?.poa)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .max()
            .unwrap_or_else(one);
        rows.push(
            VerdictReport::new(
                "Conj:LargeNPurePoA",
                format!("random(BwC;n={n};m={m};count={per_n};seed={seed})"),
                int(2) - frac(1, m as i64),
                worst,
                BoundSense::AtMost,
            )
            .soft(),
        );
    }
    Ok(rows)
}

/// Counts random BwC instances without a strong NE. Makes no claim.
pub fn strong_nash_search(m: usize, max_n: usize, trials: usize, seed: u64) -> Result<Vec<VerdictReport>> {
    let mut rows = Vec::new();
    for n in 2..=max_n {
        let missing = (0..trials)
            .into_par_iter()
            .map(|t| -> Result<usize> {
                let p = frac(1 + (t % 3) as i64, 4);
                let spec = RandomSpec::new(n, m, GameKind::BwC, p, seed ^ ((n * 1000 + t) as u64));
                let inst = spec.build()?;
                Ok(usize::from(Oracle::new(&inst).strong_nash_set()?.is_empty()))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .sum::<usize>();
        rows.push(
            VerdictReport::new(
                "Search:StrongNashMissing",
                format!("random(BwC;n={n};m={m};count={trials};seed={seed})"),
                int(0),
                int(missing as i64),
                BoundSense::Equal,
            )
            .soft(),
        );
    }
    Ok(rows)
}
