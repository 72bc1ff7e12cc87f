//! Instances, states and the value/potential model of the six games.
//!
//! Balancing kinds charge player `i` on machine `k`
//! `alpha * x_k + beta * (conflict weight to k) + gamma * (friend weight off k)`;
//! sharing kinds and Max-Cut pay `p_k / x_k + (conflict weight off k) +
//! (friend weight on k)`, with `p = 0` for Max-Cut.

mod eval;
mod instance;
mod kind;
mod profile;
mod state;

pub use eval::{aggregate_social, Evaluator};
pub use instance::{Edge, Instance, InstanceBuilder};
pub use kind::{CostWeights, GameKind, Orientation};
pub use profile::MixedProfile;
pub use state::State;

use crate::error::{GameError, Result};
use crate::rational::Rational;

fn checked<'a>(inst: &'a Instance, s: &'a State) -> Result<Evaluator<'a>> {
    s.validate(inst)?;
    if inst.kind().is_sharing() && inst.machine_values().is_none() {
        return Err(GameError::MissingMachineValues(inst.kind().tag()));
    }
    Ok(Evaluator::new(inst, s))
}

fn check_player(inst: &Instance, i: usize) -> Result<()> {
    if i >= inst.n() {
        return Err(GameError::PlayerOutOfRange {
            player: i + 1,
            n: inst.n(),
        });
    }
    Ok(())
}

fn check_machine(inst: &Instance, k: usize) -> Result<()> {
    if k >= inst.m() {
        return Err(GameError::MachineOutOfRange {
            machine: k + 1,
            m: inst.m(),
        });
    }
    Ok(())
}

/// Cost (balancing kinds) or utility (sharing kinds, Max-Cut) of player `i`.
pub fn player_value(inst: &Instance, s: &State, i: usize) -> Result<Rational> {
    check_player(inst, i)?;
    Ok(checked(inst, s)?.value(i))
}

/// Sum of all player values.
pub fn social_value(inst: &Instance, s: &State) -> Result<Rational> {
    Ok(checked(inst, s)?.social())
}

pub fn potential(inst: &Instance, s: &State) -> Result<Rational> {
    Ok(checked(inst, s)?.potential())
}

/// Improvement of player `i` from moving to machine `k`; positive is better
/// for either orientation.
pub fn deviation_gain(inst: &Instance, s: &State, i: usize, k: usize) -> Result<Rational> {
    check_player(inst, i)?;
    check_machine(inst, k)?;
    Ok(checked(inst, s)?.gain(i, k))
}

/// Best machine for `i` with its gain; ties resolve to the lowest index and a
/// player with no strict improvement stays.
pub fn best_response(inst: &Instance, s: &State, i: usize) -> Result<(usize, Rational)> {
    check_player(inst, i)?;
    Ok(checked(inst, s)?.best_response(i))
}
