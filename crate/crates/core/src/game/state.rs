use std::fmt;

use super::instance::Instance;
use crate::error::{GameError, Result};

/// One machine per player.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State(Vec<usize>);

impl State {
    pub fn new(assignment: Vec<usize>) -> Self {
        State(assignment)
    }

    /// Builds and checks the state against `inst`.
    pub fn for_instance(inst: &Instance, assignment: Vec<usize>) -> Result<Self> {
        let s = State(assignment);
        s.validate(inst)?;
        Ok(s)
    }

    pub fn uniform(n: usize, machine: usize) -> Self {
        State(vec![machine; n])
    }

    pub fn validate(&self, inst: &Instance) -> Result<()> {
        if self.0.len() != inst.n() {
            return Err(GameError::InvalidState(format!(
                "expected {} entries, got {}",
                inst.n(),
                self.0.len()
            )));
        }
        if let Some(&k) = self.0.iter().find(|&&k| k >= inst.m()) {
            return Err(GameError::MachineOutOfRange {
                machine: k + 1,
                m: inst.m(),
            });
        }
        Ok(())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn machine_of(&self, i: usize) -> usize {
        self.0[i]
    }

    /// State with player `i` moved to machine `k`.
    pub fn with_move(&self, i: usize, k: usize) -> State {
        let mut v = self.0.clone();
        v[i] = k;
        State(v)
    }

    pub(crate) fn set(&mut self, i: usize, k: usize) {
        self.0[i] = k;
    }

    /// Position of this state in lexicographic order (player 1 most significant).
    pub fn index(&self, m: usize) -> u64 {
        self.0.iter().fold(0u64, |acc, &k| acc * m as u64 + k as u64)
    }

    pub fn from_index(mut index: u64, n: usize, m: usize) -> State {
        let mut v = vec![0usize; n];
        for slot in v.iter_mut().rev() {
            *slot = (index % m as u64) as usize;
            index /= m as u64;
        }
        State(v)
    }

    pub fn loads(&self, m: usize) -> Vec<usize> {
        let mut x = vec![0usize; m];
        for &k in &self.0 {
            x[k] += 1;
        }
        x
    }

    /// Parses "1,2,1" (1-based machines).
    pub fn parse_one_based(text: &str) -> Result<State> {
        text.split(',')
            .map(|t| {
                let k: usize = t.trim().parse().map_err(|_| {
                    GameError::InvalidState(format!("bad machine entry {t:?}"))
                })?;
                k.checked_sub(1)
                    .ok_or_else(|| GameError::InvalidState("machines are numbered from 1".into()))
            })
            .collect::<Result<Vec<_>>>()
            .map(State)
    }
}

impl fmt::Display for State {
    /// 1-based, e.g. `(1,2,2,1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (idx, k) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", k + 1)?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip_is_lexicographic() {
        let n = 3;
        let m = 3;
        let mut prev: Option<State> = None;
        for idx in 0..27u64 {
            let s = State::from_index(idx, n, m);
            assert_eq!(s.index(m), idx);
            if let Some(p) = prev {
                assert!(p < s);
            }
            prev = Some(s);
        }
    }

    #[test]
    fn parse_and_display() {
        let s = State::parse_one_based("1, 2,2,1").unwrap();
        assert_eq!(s.as_slice(), &[0, 1, 1, 0]);
        assert_eq!(s.to_string(), "(1,2,2,1)");
        assert!(State::parse_one_based("0,1").is_err());
    }
}
