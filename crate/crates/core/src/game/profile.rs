use num_traits::{One, Zero};

use super::state::State;
use crate::error::{GameError, Result};
use crate::rational::{frac, Rational};

/// Independent per-player distributions over machines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedProfile {
    rows: Vec<Vec<Rational>>,
}

impl MixedProfile {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let m = rows.first().map(Vec::len).unwrap_or(0);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != m || m == 0 {
                return Err(GameError::InvalidProfile(format!(
                    "player {} has {} entries, expected {m}",
                    i + 1,
                    row.len()
                )));
            }
            if row.iter().any(|p| *p < Rational::zero()) {
                return Err(GameError::InvalidProfile(format!(
                    "player {} has a negative probability",
                    i + 1
                )));
            }
            let total: Rational = row.iter().sum();
            if !total.is_one() {
                return Err(GameError::InvalidProfile(format!(
                    "player {} probabilities sum to {total}",
                    i + 1
                )));
            }
        }
        Ok(MixedProfile { rows })
    }

    pub fn uniform(n: usize, m: usize) -> Self {
        MixedProfile {
            rows: vec![vec![frac(1, m as i64); m]; n],
        }
    }

    /// Every player uniform over `machines` (a non-empty subset of `0..m`).
    pub fn uniform_over(n: usize, m: usize, machines: &[usize]) -> Self {
        let p = frac(1, machines.len() as i64);
        let mut row = vec![Rational::zero(); m];
        for &k in machines {
            row[k] = p.clone();
        }
        MixedProfile {
            rows: vec![row; n],
        }
    }

    pub fn point_mass(s: &State, m: usize) -> Self {
        let rows = s
            .as_slice()
            .iter()
            .map(|&k| {
                let mut row = vec![Rational::zero(); m];
                row[k] = Rational::one();
                row
            })
            .collect();
        MixedProfile { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn m(&self) -> usize {
        self.rows.first().map(Vec::len).unwrap_or(0)
    }

    pub fn prob(&self, i: usize, k: usize) -> &Rational {
        &self.rows[i][k]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.rows[i]
    }

    pub(crate) fn check_shape(&self, n: usize, m: usize) -> Result<()> {
        if self.n() != n || self.m() != m {
            return Err(GameError::InvalidProfile(format!(
                "profile is {}x{}, instance needs {n}x{m}",
                self.n(),
                self.m()
            )));
        }
        Ok(())
    }
}
