//! Value, potential and deviation evaluation.
//!
//! [`Evaluator`] snapshots a state once (machine loads plus, per player, the
//! conflict and friendship weight it has towards every machine) so that any
//! unilateral deviation is priced in O(1) rational operations.

use num_traits::Zero;

use super::instance::Instance;
use super::kind::Orientation;
use super::state::State;
use crate::rational::{frac, harmonic_share, Rational};

pub struct Evaluator<'a> {
    inst: &'a Instance,
    state: &'a State,
    loads: Vec<usize>,
    // conflict_to[i * m + k]: weight of conflict edges from i to players on k.
    conflict_to: Vec<Rational>,
    friend_to: Vec<Rational>,
}

impl<'a> Evaluator<'a> {
    /// The state must already be valid for `inst`.
    pub fn new(inst: &'a Instance, state: &'a State) -> Self {
        let n = inst.n();
        let m = inst.m();
        let s = state.as_slice();
        let mut conflict_to = vec![Rational::zero(); n * m];
        let mut friend_to = vec![Rational::zero(); n * m];
        for i in 0..n {
            for nb in inst.conflict_neighbors(i) {
                conflict_to[i * m + s[nb.other]] += &nb.weight;
            }
            for nb in inst.friend_neighbors(i) {
                friend_to[i * m + s[nb.other]] += &nb.weight;
            }
        }
        Evaluator {
            inst,
            state,
            loads: state.loads(m),
            conflict_to,
            friend_to,
        }
    }

    pub fn loads(&self) -> &[usize] {
        &self.loads
    }

    pub fn state(&self) -> &State {
        self.state
    }

    /// Value of player `i` if it sat on machine `k` while everyone else stays put.
    pub fn value_at(&self, i: usize, k: usize) -> Rational {
        let m = self.inst.m();
        let here = self.state.machine_of(i) == k;
        let load = self.loads[k] + usize::from(!here);
        let conflict_on = &self.conflict_to[i * m + k];
        let friend_on = &self.friend_to[i * m + k];
        match self.inst.kind().orientation() {
            Orientation::Cost => {
                let w = self.inst.weights();
                let friends_off = self.inst.friend_degree(i) - friend_on;
                &w.alpha * Rational::from_integer((load as i64).into())
                    + &w.beta * conflict_on
                    + &w.gamma * friends_off
            }
            Orientation::Payoff => {
                let p = self.inst.machine_value(k);
                let share = if p.is_zero() {
                    Rational::zero()
                } else {
                    p * frac(1, load as i64)
                };
                let conflicts_off = self.inst.conflict_degree(i) - conflict_on;
                share + conflicts_off + friend_on
            }
        }
    }

    pub fn value(&self, i: usize) -> Rational {
        self.value_at(i, self.state.machine_of(i))
    }

    /// Improvement of `i` moving to `k`; positive means strictly better.
    pub fn gain(&self, i: usize, k: usize) -> Rational {
        let orient = self.inst.kind().orientation();
        orient.improvement(&self.value(i), &self.value_at(i, k))
    }

    /// Best machine for `i` and the gain of moving there (>= 0). Ties go to
    /// the current machine when it is among the best, otherwise to the
    /// lowest index.
    pub fn best_response(&self, i: usize) -> (usize, Rational) {
        let orient = self.inst.kind().orientation();
        let current = self.state.machine_of(i);
        let base = self.value(i);
        let mut best_k = current;
        let mut best_gain = Rational::zero();
        for k in 0..self.inst.m() {
            if k == current {
                continue;
            }
            let g = orient.improvement(&base, &self.value_at(i, k));
            if g > best_gain {
                best_gain = g;
                best_k = k;
            }
        }
        (best_k, best_gain)
    }

    /// The value `i` would get from its best unilateral choice.
    pub fn best_value(&self, i: usize) -> Rational {
        let orient = self.inst.kind().orientation();
        let mut best = self.value(i);
        for k in 0..self.inst.m() {
            let v = self.value_at(i, k);
            if orient.better(&v, &best) {
                best = v;
            }
        }
        best
    }

    pub fn is_pure_nash(&self) -> bool {
        (0..self.inst.n()).all(|i| self.best_response(i).1.is_zero())
    }

    /// Sum of player values (the definitional social value).
    pub fn social(&self) -> Rational {
        (0..self.inst.n()).map(|i| self.value(i)).sum()
    }

    pub fn potential(&self) -> Rational {
        potential_of(self.inst, self.state, &self.loads)
    }
}

/// Social value through the per-kind aggregate rather than per-player sums.
pub fn aggregate_social(inst: &Instance, s: &State) -> Rational {
    let loads = s.loads(inst.m());
    let a = s.as_slice();
    let (conflict_in, conflict_cut) = split_weight(inst, a, inst.conflict_edges());
    let (friend_in, friend_cut) = split_weight(inst, a, inst.friendship_edges());
    match inst.kind().orientation() {
        Orientation::Cost => {
            let w = inst.weights();
            let squares: i64 = loads.iter().map(|&x| (x * x) as i64).sum();
            &w.alpha * Rational::from_integer(squares.into())
                + &w.beta * conflict_in * Rational::from_integer(2.into())
                + &w.gamma * friend_cut * Rational::from_integer(2.into())
        }
        Orientation::Payoff => {
            let covered: Rational = (0..inst.m())
                .filter(|&k| loads[k] > 0)
                .map(|k| inst.machine_value(k))
                .sum();
            covered + (conflict_cut + friend_in) * Rational::from_integer(2.into())
        }
    }
}

fn potential_of(inst: &Instance, s: &State, loads: &[usize]) -> Rational {
    match inst.kind().orientation() {
        Orientation::Cost => aggregate_social(inst, s) / Rational::from_integer(2.into()),
        Orientation::Payoff => {
            let a = s.as_slice();
            let harmonic: Rational = (0..inst.m())
                .map(|k| harmonic_share(&inst.machine_value(k), loads[k]))
                .sum();
            let (_, conflict_cut) = split_weight(inst, a, inst.conflict_edges());
            let (friend_in, _) = split_weight(inst, a, inst.friendship_edges());
            harmonic + conflict_cut + friend_in
        }
    }
}

/// (weight inside machines, weight across machines) of an edge set.
fn split_weight(
    inst: &Instance,
    a: &[usize],
    edges: &[super::instance::Edge],
) -> (Rational, Rational) {
    let mut inside = Rational::zero();
    let mut across = Rational::zero();
    for &e in edges {
        let (u, v) = e.endpoints();
        let w = inst.edge_weight(e);
        if a[u] == a[v] {
            inside += w;
        } else {
            across += w;
        }
    }
    (inside, across)
}
