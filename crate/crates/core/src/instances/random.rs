use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{GameError, Result};
use crate::game::{CostWeights, GameKind, Instance};
use crate::rational::{frac, one, Rational};

/// Parameters of a seeded Erdős–Rényi instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub n: usize,
    pub m: usize,
    pub kind: GameKind,
    pub edge_prob: Rational,
    /// BwCF only; drawn from the seed when absent.
    pub weights: Option<CostWeights>,
    /// Sharing games only: draw edge weights from {1/10, ..., 3}.
    pub weighted_edges: bool,
    pub seed: u64,
}

impl RandomSpec {
    pub fn new(n: usize, m: usize, kind: GameKind, edge_prob: Rational, seed: u64) -> Self {
        RandomSpec {
            n,
            m,
            kind,
            edge_prob,
            weights: None,
            weighted_edges: false,
            seed,
        }
    }

    pub fn with_weights(mut self, w: CostWeights) -> Self {
        self.weights = Some(w);
        self
    }

    pub fn with_weighted_edges(mut self, on: bool) -> Self {
        self.weighted_edges = on;
        self
    }

    pub fn build(&self) -> Result<Instance> {
        let (num, den) = probability_parts(&self.edge_prob)?;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let hit = |rng: &mut ChaCha8Rng| num > 0 && rng.gen_range(0..den) < num;

        let mut conflicts = Vec::new();
        let mut friends = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.kind.uses_conflicts() && hit(&mut rng) {
                    conflicts.push((a, b));
                } else if self.kind.uses_friendships() && hit(&mut rng) {
                    friends.push((a, b));
                }
            }
        }

        let mut builder = Instance::builder(self.kind, self.n, self.m);
        if self.kind.is_sharing() {
            // grid of hundredths in (0, 10]
            let values = (0..self.m)
                .map(|_| frac(rng.gen_range(1..=1000), 100))
                .collect();
            builder = builder.machine_values(values);
            if self.weighted_edges {
                for &(a, b) in conflicts.iter().chain(&friends) {
                    builder = builder.edge_weight(a, b, frac(rng.gen_range(1..=30), 10));
                }
            }
        }
        if self.kind == GameKind::BwCF {
            let w = match &self.weights {
                Some(w) => w.clone(),
                None => CostWeights::new(
                    frac(rng.gen_range(1..=4), 2),
                    frac(rng.gen_range(0..=6), 2),
                    frac(rng.gen_range(0..=6), 2),
                ),
            };
            builder = builder.weights(w);
        }
        builder.conflicts(conflicts).friendships(friends).build()
    }
}

/// Convenience wrapper over [`RandomSpec`].
pub fn gen_random(
    n: usize,
    m: usize,
    kind: GameKind,
    edge_prob: &Rational,
    seed: u64,
) -> Result<Instance> {
    RandomSpec::new(n, m, kind, edge_prob.clone(), seed).build()
}

/// Size limits for [`random_pool`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PoolLimits {
    pub max_n: usize,
    pub max_m: usize,
    /// Only draw `n >= m`.
    pub n_at_least_m: bool,
}

/// `count` seeded specs of one kind with `n <= max_n`, `m <= max_m` and edge
/// probability in {1/4, 1/2, 3/4}. BwCF specs alternate between
/// `alpha >= gamma` (even positions) and `alpha < gamma` (odd positions);
/// sharing specs carry edge weights at odd positions.
pub fn random_pool(kind: GameKind, count: usize, limits: PoolLimits, seed: u64) -> Vec<RandomSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (kind as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    (0..count)
        .map(|idx| {
            let m = rng.gen_range(1..=limits.max_m);
            let lo = if limits.n_at_least_m { m } else { 1 };
            let n = rng.gen_range(lo..=limits.max_n.max(lo));
            let p = frac(rng.gen_range(1..=3), 4);
            let mut spec = RandomSpec::new(n, m, kind, p, rng.gen());
            if kind == GameKind::BwCF {
                let a = rng.gen_range(1..=4);
                let c = if idx % 2 == 0 {
                    rng.gen_range(0..=a)
                } else {
                    rng.gen_range(a + 1..=a + 4)
                };
                spec = spec.with_weights(CostWeights::new(
                    frac(a, 2),
                    frac(rng.gen_range(0..=6), 2),
                    frac(c, 2),
                ));
            }
            if kind.is_sharing() {
                spec = spec.with_weighted_edges(idx % 2 == 1);
            }
            spec
        })
        .collect()
}

fn probability_parts(p: &Rational) -> Result<(u64, u64)> {
    let bad = |reason: String| GameError::InvalidParameter {
        param: "edge_prob",
        reason,
    };
    if *p < Rational::zero() || *p > one() {
        return Err(bad(format!("must lie in [0, 1], got {p}")));
    }
    let num = p.numer().to_u64().ok_or_else(|| bad("numerator too large".into()))?;
    let den = p.denom().to_u64().ok_or_else(|| bad("denominator too large".into()))?;
    Ok((num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn deterministic_per_seed() {
        let a = gen_random(5, 3, GameKind::BwC, &frac(1, 2), 7).unwrap();
        let b = gen_random(5, 3, GameKind::BwC, &frac(1, 2), 7).unwrap();
        assert_eq!(a, b);
        let c = gen_random(6, 3, GameKind::SwC, &frac(1, 2), 8).unwrap();
        let d = gen_random(6, 3, GameKind::SwC, &frac(1, 2), 9).unwrap();
        assert_ne!(c, d);
    }

    #[test]
    fn zero_probability_is_edgeless() {
        for kind in GameKind::ALL {
            let inst = gen_random(6, 2, kind, &int(0), 3).unwrap();
            assert!(inst.conflict_edges().is_empty());
            assert!(inst.friendship_edges().is_empty());
        }
    }

    #[test]
    fn full_probability_is_complete() {
        let inst = gen_random(5, 2, GameKind::SwF, &int(1), 1).unwrap();
        assert_eq!(inst.friendship_edges().len(), 10);
    }

    #[test]
    fn rejects_bad_probability() {
        assert!(gen_random(3, 2, GameKind::BwC, &frac(3, 2), 0).is_err());
        assert!(gen_random(3, 2, GameKind::BwC, &frac(-1, 2), 0).is_err());
    }

    #[test]
    fn pool_respects_limits() {
        let limits = PoolLimits {
            max_n: 6,
            max_m: 3,
            n_at_least_m: true,
        };
        let pool = random_pool(GameKind::BwCF, 40, limits, 5);
        assert_eq!(pool, random_pool(GameKind::BwCF, 40, limits, 5));
        for (idx, spec) in pool.iter().enumerate() {
            assert!(spec.m <= spec.n && spec.n <= 6);
            let w = spec.weights.as_ref().unwrap();
            assert_eq!(w.alpha >= w.gamma, idx % 2 == 0);
            spec.build().unwrap();
        }
    }

    #[test]
    fn sharing_values_on_grid() {
        let inst = gen_random(4, 3, GameKind::SwC, &frac(1, 2), 11).unwrap();
        for p in inst.machine_values().unwrap() {
            assert!(*p > int(0) && *p <= int(10));
            assert_eq!(100 % p.denom().to_u64().unwrap(), 0);
        }
    }
}
