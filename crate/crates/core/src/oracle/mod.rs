//! Brute-force ground truth over the full state space.
//!
//! Every pass walks states by lexicographic index (player 1 most
//! significant) and is split across the rayon pool; reductions break ties
//! towards the smaller index, so results do not depend on thread count.

mod cce;
pub mod lp;
mod mixed;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{GameError, Result};
use crate::game::{aggregate_social, Evaluator, Instance, Orientation, State};
use crate::rational::{format_rational, Rational};

pub use cce::CceSolution;
pub use mixed::{expected_player_value, expected_value, verify_mixed_ne, MixedNeVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Cap on m^n for enumeration passes.
    pub max_states: u64,
    /// Cap on n for strong-NE checks.
    pub max_strong_players: usize,
    /// Cap on m^n for the CCE linear program.
    pub max_lp_states: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_states: 2_000_000,
            max_strong_players: 8,
            max_lp_states: 2000,
        }
    }
}

/// m^n, or None on overflow.
pub fn state_count(n: usize, m: usize) -> Option<u64> {
    (m as u64).checked_pow(u32::try_from(n).ok()?)
}

/// Yields every state in lexicographic order.
#[derive(Clone, Debug)]
pub struct StateIter {
    m: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for StateIter {
    type Item = State;

    fn next(&mut self) -> Option<State> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut pos = succ.len();
        let mut advanced = false;
        while pos > 0 {
            pos -= 1;
            if succ[pos] + 1 < self.m {
                succ[pos] += 1;
                advanced = true;
                break;
            }
            succ[pos] = 0;
        }
        if advanced {
            self.next = Some(succ);
        }
        Some(State::new(cur))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrongPoa {
    Ratio(Rational),
    /// The strong-NE set is empty.
    NoStrongNash,
    /// n exceeded the strong-NE player cap.
    NotComputed,
}

impl std::fmt::Display for StrongPoa {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StrongPoa::Ratio(r) => f.write_str(&format_rational(r)),
            StrongPoa::NoStrongNash => f.write_str("undefined (no strong NE)"),
            StrongPoa::NotComputed => f.write_str("not computed (player cap)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquilibriumReport {
    pub optimum: (State, Rational),
    /// Lexicographic order.
    pub pure_ne: Vec<(State, Rational)>,
    /// Socially worst pure NE, ties to the smallest state.
    pub worst_ne: (State, Rational),
    /// None when n exceeds the strong-NE player cap.
    pub strong_ne: Option<Vec<(State, Rational)>>,
    pub poa: Rational,
    pub pos: Rational,
    pub strong_poa: StrongPoa,
}

/// Equilibrium value over optimum for cost kinds, optimum over equilibrium
/// value for payoff kinds. 0/0 counts as 1.
pub fn quality_ratio(orient: Orientation, opt: &Rational, value: &Rational) -> Result<Rational> {
    let (num, den) = match orient {
        Orientation::Cost => (value, opt),
        Orientation::Payoff => (opt, value),
    };
    if den.is_zero() {
        if num.is_zero() {
            return Ok(Rational::one());
        }
        return Err(GameError::UnboundedRatio(format_rational(opt)));
    }
    Ok(num / den)
}

/// Picks the entry that is worst for society, ties to the first.
fn worst_of(orient: Orientation, list: &[(State, Rational)]) -> Option<&(State, Rational)> {
    list.iter()
        .fold(None, |acc: Option<&(State, Rational)>, e| match acc {
            Some(a) if !orient.better(&a.1, &e.1) => Some(a),
            _ => Some(e),
        })
}

fn best_of(orient: Orientation, list: &[(State, Rational)]) -> Option<&(State, Rational)> {
    list.iter()
        .fold(None, |acc: Option<&(State, Rational)>, e| match acc {
            Some(a) if !orient.better(&e.1, &a.1) => Some(a),
            _ => Some(e),
        })
}

pub struct Oracle<'a> {
    inst: &'a Instance,
    config: OracleConfig,
}

impl<'a> Oracle<'a> {
    pub fn new(inst: &'a Instance) -> Self {
        Oracle {
            inst,
            config: OracleConfig::default(),
        }
    }

    pub fn with_config(mut self, config: OracleConfig) -> Self {
        self.config = config;
        self
    }

    pub fn instance(&self) -> &'a Instance {
        self.inst
    }

    pub fn config(&self) -> &OracleConfig {
        &self.config
    }

    fn capped(&self, what: &'static str, limit: u64) -> Result<usize> {
        let (n, m) = (self.inst.n(), self.inst.m());
        let needed = format!("{m}^{n} states");
        match state_count(n, m) {
            Some(c) if c <= limit => Ok(c as usize),
            _ => Err(GameError::CapExceeded {
                what,
                needed,
                limit,
            }),
        }
    }

    /// Number of states, checked against `max_states`.
    pub fn state_count(&self) -> Result<usize> {
        self.capped("state enumeration", self.config.max_states)
    }

    pub fn enumerate_states(&self) -> Result<StateIter> {
        self.state_count()?;
        Ok(StateIter {
            m: self.inst.m(),
            next: Some(vec![0; self.inst.n()]),
        })
    }

    fn state_at(&self, idx: usize) -> State {
        State::from_index(idx as u64, self.inst.n(), self.inst.m())
    }

    /// Socially best state; ties to the lexicographically smallest.
    pub fn optimum(&self) -> Result<(State, Rational)> {
        self.extremal(true)
    }

    /// Socially worst state over all states, e.g. a worst start for dynamics.
    pub fn pessimum(&self) -> Result<(State, Rational)> {
        self.extremal(false)
    }

    fn extremal(&self, best: bool) -> Result<(State, Rational)> {
        let count = self.state_count()?;
        let orient = self.inst.kind().orientation();
        let (idx, v) = (0..count)
            .into_par_iter()
            .map(|idx| (idx, aggregate_social(self.inst, &self.state_at(idx))))
            .reduce_with(|a, b| {
                let b_wins = if best {
                    orient.better(&b.1, &a.1)
                } else {
                    orient.better(&a.1, &b.1)
                };
                let tie = a.1 == b.1;
                if b_wins || (tie && b.0 < a.0) {
                    b
                } else {
                    a
                }
            })
            .expect("at least one state");
        Ok((self.state_at(idx), v))
    }

    /// All pure NE with their social values, in lexicographic order.
    pub fn pure_nash_set(&self) -> Result<Vec<(State, Rational)>> {
        let count = self.state_count()?;
        Ok((0..count)
            .into_par_iter()
            .filter_map(|idx| {
                let s = self.state_at(idx);
                let ev = Evaluator::new(self.inst, &s);
                if ev.is_pure_nash() {
                    let v = ev.social();
                    Some((s, v))
                } else {
                    None
                }
            })
            .collect())
    }

    fn check_strong_cap(&self) -> Result<usize> {
        let count = self.state_count()?;
        let n = self.inst.n();
        if n > self.config.max_strong_players {
            return Err(GameError::CapExceeded {
                what: "strong-NE coalition check",
                needed: format!("{n} players"),
                limit: self.config.max_strong_players as u64,
            });
        }
        Ok(count)
    }

    /// Strong NE: pure states where no coalition has a joint deviation that
    /// strictly improves every member.
    pub fn strong_nash_set(&self) -> Result<Vec<(State, Rational)>> {
        self.check_strong_cap()?;
        let pure = self.pure_nash_set()?;
        self.strong_among(&pure)
    }

    fn strong_among(&self, pure: &[(State, Rational)]) -> Result<Vec<(State, Rational)>> {
        let count = self.check_strong_cap()?;
        let n = self.inst.n();
        let m = self.inst.m();
        let orient = self.inst.kind().orientation();
        // table[idx * n + i]: value of player i at state idx
        let table: Vec<Rational> = (0..count)
            .into_par_iter()
            .flat_map_iter(|idx| {
                let s = self.state_at(idx);
                let ev = Evaluator::new(self.inst, &s);
                (0..n).map(|i| ev.value(i)).collect::<Vec<_>>()
            })
            .collect();
        let blocked = |s: &State| -> bool {
            let si = s.index(m) as usize;
            let sv = &table[si * n..(si + 1) * n];
            let a = s.as_slice();
            // Any target t != s defines the coalition of players that move.
            (0..count).any(|ti| {
                ti != si && {
                    let t = self.state_at(ti);
                    let tv = &table[ti * n..(ti + 1) * n];
                    (0..n)
                        .filter(|&i| t.as_slice()[i] != a[i])
                        .all(|i| orient.better(&tv[i], &sv[i]))
                }
            })
        };
        Ok(pure
            .par_iter()
            .filter(|(s, _)| !blocked(s))
            .cloned()
            .collect())
    }

    pub fn report(&self) -> Result<EquilibriumReport> {
        let orient = self.inst.kind().orientation();
        let optimum = self.optimum()?;
        let pure_ne = self.pure_nash_set()?;
        let worst = worst_of(orient, &pure_ne)
            .ok_or_else(|| GameError::Lp("no pure NE found in a potential game".into()))?;
        let best = best_of(orient, &pure_ne).expect("nonempty");
        let poa = quality_ratio(orient, &optimum.1, &worst.1)?;
        let pos = quality_ratio(orient, &optimum.1, &best.1)?;
        let worst_ne = worst.clone();
        let (strong_ne, strong_poa) = if self.inst.n() <= self.config.max_strong_players {
            let strong = self.strong_among(&pure_ne)?;
            let sp = match worst_of(orient, &strong) {
                Some(w) => StrongPoa::Ratio(quality_ratio(orient, &optimum.1, &w.1)?),
                None => StrongPoa::NoStrongNash,
            };
            (Some(strong), sp)
        } else {
            (None, StrongPoa::NotComputed)
        };
        Ok(EquilibriumReport {
            optimum,
            pure_ne,
            worst_ne,
            strong_ne,
            poa,
            pos,
            strong_poa,
        })
    }

    pub fn worst_cce(&self) -> Result<CceSolution> {
        let count = self.capped("CCE linear program", self.config.max_lp_states)?;
        cce::solve(self.inst, count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::*;
    use crate::rational::{frac, int};

    #[test]
    fn enumeration_counts_and_order() {
        let inst = gen_path4().unwrap();
        let states: Vec<State> = Oracle::new(&inst).enumerate_states().unwrap().collect();
        assert_eq!(states.len(), 16);
        for (idx, s) in states.iter().enumerate() {
            assert_eq!(s.index(2), idx as u64);
        }
        let inst = gen_bwcf_lower(3, crate::game::CostWeights::conflicts_only()).unwrap();
        assert_eq!(Oracle::new(&inst).state_count().unwrap(), 19683);
    }

    #[test]
    fn cap_is_reported() {
        let inst = gen_bwc_multipartite(3).unwrap();
        let cfg = OracleConfig {
            max_states: 100,
            ..OracleConfig::default()
        };
        let err = Oracle::new(&inst).with_config(cfg).optimum().unwrap_err();
        assert!(matches!(err, GameError::CapExceeded { limit: 100, .. }));
    }

    #[test]
    fn multipartite_two() {
        let inst = gen_bwc_multipartite(2).unwrap();
        let r = Oracle::new(&inst).report().unwrap();
        assert_eq!(r.optimum.1, int(8));
        assert_eq!(r.worst_ne.1, int(12));
        assert_eq!(r.poa, frac(3, 2));
        assert_eq!(r.pos, int(1));
    }

    #[test]
    fn path4_strong() {
        let inst = gen_path4().unwrap();
        let r = Oracle::new(&inst).report().unwrap();
        assert_eq!(r.optimum.1, int(8));
        assert_eq!(r.strong_poa, StrongPoa::Ratio(frac(5, 4)));
        let strong = r.strong_ne.unwrap();
        assert!(strong.iter().any(|(s, _)| *s == r.optimum.0));
        // degree-1 nodes together, the middle pair together
        let split = State::new(vec![0, 1, 1, 0]);
        assert!(strong.iter().any(|(s, v)| *s == split && *v == int(10)));
    }

    #[test]
    fn swc_unique_ne() {
        let inst = gen_swc_pos(3, &frac(1, 10)).unwrap();
        let r = Oracle::new(&inst).report().unwrap();
        assert_eq!(r.optimum.1, frac(121, 10));
        assert_eq!(r.pure_ne, vec![(State::uniform(3, 0), frac(61, 10))]);
        assert_eq!(r.pos, frac(121, 61));
    }

    #[test]
    fn swf_without_strong() {
        let inst = gen_swf_nostrong(&frac(1, 10)).unwrap();
        let r = Oracle::new(&inst).report().unwrap();
        assert!(!r.pure_ne.is_empty());
        assert_eq!(r.strong_ne, Some(vec![]));
        assert_eq!(r.strong_poa, StrongPoa::NoStrongNash);
    }

    #[test]
    fn ratio_edge_cases() {
        let o = Orientation::Payoff;
        assert_eq!(quality_ratio(o, &int(0), &int(0)).unwrap(), int(1));
        assert!(quality_ratio(o, &int(2), &int(0)).is_err());
        assert_eq!(quality_ratio(Orientation::Cost, &int(4), &int(6)).unwrap(), frac(3, 2));
    }
}
