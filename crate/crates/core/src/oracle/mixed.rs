//! Exact expectations under product (mixed) profiles.

use num_traits::{One, Zero};

use crate::error::{GameError, Result};
use crate::game::{Instance, MixedProfile, Orientation};
use crate::rational::{frac, Rational};

fn check(inst: &Instance, profile: &MixedProfile, i: usize, k: usize) -> Result<()> {
    profile.check_shape(inst.n(), inst.m())?;
    if i >= inst.n() {
        return Err(GameError::PlayerOutOfRange {
            player: i + 1,
            n: inst.n(),
        });
    }
    if k >= inst.m() {
        return Err(GameError::MachineOutOfRange {
            machine: k + 1,
            m: inst.m(),
        });
    }
    Ok(())
}

/// E[1 / (1 + Y)] where Y counts successes of independent Bernoulli(q_j).
fn expected_inverse_load(qs: impl Iterator<Item = Rational>) -> Rational {
    let mut dist = vec![Rational::one()];
    for q in qs {
        let miss = Rational::one() - &q;
        let mut next = vec![Rational::zero(); dist.len() + 1];
        for (c, p) in dist.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            next[c] += p * &miss;
            next[c + 1] += p * &q;
        }
        dist = next;
    }
    dist.iter()
        .enumerate()
        .map(|(c, p)| p * frac(1, c as i64 + 1))
        .sum()
}

/// Expected value of player `i` when it sits on machine `k` and every other
/// player samples independently from its row of `profile`.
pub fn expected_player_value(
    inst: &Instance,
    profile: &MixedProfile,
    i: usize,
    k: usize,
) -> Result<Rational> {
    check(inst, profile, i, k)?;
    let others = || (0..inst.n()).filter(move |&j| j != i);
    let on_k = |j: usize| profile.prob(j, k).clone();
    let conflict_on: Rational = inst
        .conflict_neighbors(i)
        .iter()
        .map(|nb| &nb.weight * on_k(nb.other))
        .sum();
    let friend_on: Rational = inst
        .friend_neighbors(i)
        .iter()
        .map(|nb| &nb.weight * on_k(nb.other))
        .sum();
    Ok(match inst.kind().orientation() {
        Orientation::Cost => {
            let w = inst.weights();
            let load = Rational::one() + others().map(on_k).sum::<Rational>();
            &w.alpha * load
                + &w.beta * conflict_on
                + &w.gamma * (inst.friend_degree(i) - friend_on)
        }
        Orientation::Payoff => {
            let p = inst.machine_value(k);
            let share = if p.is_zero() {
                Rational::zero()
            } else {
                p * expected_inverse_load(others().map(on_k))
            };
            share + (inst.conflict_degree(i) - conflict_on) + friend_on
        }
    })
}

/// Expected value of player `i` under the full profile.
pub fn expected_value(inst: &Instance, profile: &MixedProfile, i: usize) -> Result<Rational> {
    let mut total = Rational::zero();
    for k in 0..inst.m() {
        let p = profile.prob(i, k);
        if !p.is_zero() {
            total += p * expected_player_value(inst, profile, i, k)?;
        }
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedNeVerdict {
    pub holds: bool,
    /// Per player, the profile's expected value.
    pub expected: Vec<Rational>,
    /// Per player and machine, the expected value of playing that machine.
    pub conditional: Vec<Vec<Rational>>,
    /// First (player, machine, gain) with a strictly profitable pure deviation.
    pub violation: Option<(usize, usize, Rational)>,
}

pub fn verify_mixed_ne(inst: &Instance, profile: &MixedProfile) -> Result<MixedNeVerdict> {
    profile.check_shape(inst.n(), inst.m())?;
    let orient = inst.kind().orientation();
    let mut expected = Vec::with_capacity(inst.n());
    let mut conditional = Vec::with_capacity(inst.n());
    let mut violation = None;
    for i in 0..inst.n() {
        let row = (0..inst.m())
            .map(|k| expected_player_value(inst, profile, i, k))
            .collect::<Result<Vec<_>>>()?;
        let e: Rational = row
            .iter()
            .zip(profile.row(i))
            .map(|(v, p)| v * p)
            .sum();
        if violation.is_none() {
            if let Some(k) = (0..inst.m()).find(|&k| orient.better(&row[k], &e)) {
                violation = Some((i, k, orient.improvement(&e, &row[k])));
            }
        }
        expected.push(e);
        conditional.push(row);
    }
    Ok(MixedNeVerdict {
        holds: violation.is_none(),
        expected,
        conditional,
        violation,
    })
}
