//! Dense exact-rational simplex (two-phase, Bland's rule).

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub sense: Sense,
    pub rhs: Rational,
}

/// maximize `objective · x` subject to `constraints`, `x >= 0`.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { x: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize, obj: &mut [Rational]) {
        let inv = Rational::one() / &self.rows[r][c];
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = self.rows[r].clone();
        for (idx, row) in self.rows.iter_mut().enumerate() {
            if idx == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        if !obj[c].is_zero() {
            let f = obj[c].clone();
            for (v, p) in obj.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Reduced-cost row for maximizing `cost` over the current basis.
    fn objective_row(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut obj: Vec<Rational> = (0..=self.cols)
            .map(|j| if j < self.cols { -cost[j].clone() } else { Rational::zero() })
            .collect();
        for (r, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            for (v, t) in obj.iter_mut().zip(&self.rows[r]) {
                *v += &cost[b] * t;
            }
        }
        obj
    }

    /// Runs primal simplex; `allowed` masks columns that may enter.
    /// Returns false when unbounded.
    fn optimize(&mut self, obj: &mut [Rational], allowed: &[bool]) -> bool {
        loop {
            let entering = (0..self.cols).find(|&j| allowed[j] && obj[j].is_negative());
            let Some(c) = entering else { return true };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rows[r][self.cols] / a;
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            match leave {
                None => return false,
                Some((r, _)) => self.pivot(r, c, obj),
            }
        }
    }
}

impl LinearProgram {
    pub fn solve(&self) -> LpOutcome {
        let nvars = self.objective.len();
        let nrows = self.constraints.len();
        // column layout: structural | slack/surplus (one per non-Eq row) | artificial
        let mut slack_of = vec![None; nrows];
        let mut art_of = vec![None; nrows];
        let mut next = nvars;
        let normalized: Vec<(Vec<Rational>, Sense, Rational)> = self
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let flipped = match c.sense {
                        Sense::Le => Sense::Ge,
                        Sense::Ge => Sense::Le,
                        Sense::Eq => Sense::Eq,
                    };
                    (c.coeffs.iter().map(|v| -v.clone()).collect(), flipped, -c.rhs.clone())
                } else {
                    (c.coeffs.clone(), c.sense, c.rhs.clone())
                }
            })
            .collect();
        for (r, (_, sense, _)) in normalized.iter().enumerate() {
            if *sense != Sense::Eq {
                slack_of[r] = Some(next);
                next += 1;
            }
        }
        for (r, (_, sense, _)) in normalized.iter().enumerate() {
            if *sense != Sense::Le {
                art_of[r] = Some(next);
                next += 1;
            }
        }
        let cols = next;
        let mut rows = Vec::with_capacity(nrows);
        let mut basis = Vec::with_capacity(nrows);
        for (r, (coeffs, sense, rhs)) in normalized.into_iter().enumerate() {
            let mut row = vec![Rational::zero(); cols + 1];
            for (j, v) in coeffs.into_iter().enumerate() {
                row[j] = v;
            }
            if let Some(s) = slack_of[r] {
                row[s] = if sense == Sense::Le {
                    Rational::one()
                } else {
                    -Rational::one()
                };
            }
            if let Some(a) = art_of[r] {
                row[a] = Rational::one();
                basis.push(a);
            } else {
                basis.push(slack_of[r].expect("Le rows own a slack"));
            }
            row[cols] = rhs;
            rows.push(row);
        }
        let mut t = Tableau { rows, basis, cols };
        let is_art: Vec<bool> = (0..cols).map(|j| art_of.contains(&Some(j))).collect();

        if is_art.iter().any(|&a| a) {
            let phase1: Vec<Rational> = is_art
                .iter()
                .map(|&a| if a { -Rational::one() } else { Rational::zero() })
                .collect();
            let mut obj = t.objective_row(&phase1);
            let all = vec![true; cols];
            t.optimize(&mut obj, &all);
            if !obj[cols].is_zero() {
                return LpOutcome::Infeasible;
            }
            // drive zero-level artificials out of the basis or drop redundant rows
            let mut r = 0;
            while r < t.rows.len() {
                if is_art[t.basis[r]] {
                    match (0..cols).find(|&j| !is_art[j] && !t.rows[r][j].is_zero()) {
                        Some(c) => t.pivot(r, c, &mut obj),
                        None => {
                            t.rows.remove(r);
                            t.basis.remove(r);
                            continue;
                        }
                    }
                }
                r += 1;
            }
        }

        let mut cost = vec![Rational::zero(); cols];
        cost[..nvars].clone_from_slice(&self.objective);
        let mut obj = t.objective_row(&cost);
        let allowed: Vec<bool> = is_art.iter().map(|&a| !a).collect();
        if !t.optimize(&mut obj, &allowed) {
            return LpOutcome::Unbounded;
        }
        let mut x = vec![Rational::zero(); nvars];
        for (r, &b) in t.basis.iter().enumerate() {
            if b < nvars {
                x[b] = t.rows[r][cols].clone();
            }
        }
        LpOutcome::Optimal {
            value: obj[cols].clone(),
            x,
        }
    }
}
