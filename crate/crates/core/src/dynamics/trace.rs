//! Max-gain best-response dynamics.

use std::io::Write;

use num_traits::Zero;

use crate::error::Result;
use crate::game::{aggregate_social, Evaluator, Instance, Orientation, State};
use crate::rational::{format_ratio_form, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    /// 1-based move number.
    pub step: usize,
    pub mover: usize,
    pub from: usize,
    pub to: usize,
    pub gain: Rational,
    /// Potential and social value after the move.
    pub potential: Rational,
    pub social: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub orientation: Orientation,
    pub start: State,
    pub end: State,
    pub start_potential: Rational,
    pub start_social: Rational,
    pub steps: Vec<Step>,
    /// The step budget ran out before reaching a pure NE.
    pub truncated: bool,
}

impl Trace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Social value after `t` moves, `t = 0` being the start.
    pub fn social_at(&self, t: usize) -> &Rational {
        if t == 0 {
            &self.start_social
        } else {
            &self.steps[t - 1].social
        }
    }

    pub fn potential_at(&self, t: usize) -> &Rational {
        if t == 0 {
            &self.start_potential
        } else {
            &self.steps[t - 1].potential
        }
    }

    /// Every gain is positive and the potential strictly improves each move.
    pub fn potential_strictly_monotone(&self) -> bool {
        (1..=self.len()).all(|t| {
            let s = &self.steps[t - 1];
            s.gain > Rational::zero()
                && self
                    .orientation
                    .better(self.potential_at(t), self.potential_at(t - 1))
        })
    }

    /// CSV with header `step,mover,from,to,gain,potential,social`; row 0 is
    /// the start state. Players and machines are 1-based.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["step", "mover", "from", "to", "gain", "potential", "social"])?;
        w.write_record([
            "0".to_string(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            format_ratio_form(&self.start_potential),
            format_ratio_form(&self.start_social),
        ])?;
        for s in &self.steps {
            w.write_record([
                s.step.to_string(),
                (s.mover + 1).to_string(),
                (s.from + 1).to_string(),
                (s.to + 1).to_string(),
                format_ratio_form(&s.gain),
                format_ratio_form(&s.potential),
                format_ratio_form(&s.social),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Runs the dynamic from `start`: at each step the player with the largest
/// best-response gain moves (lowest player first on ties, lowest machine
/// among equal best responses), until no one can improve or `max_steps`
/// moves are made.
pub fn run_br(inst: &Instance, start: &State, max_steps: usize) -> Result<Trace> {
    start.validate(inst)?;
    let orientation = inst.kind().orientation();
    let mut cur = start.clone();
    let (start_potential, start_social) = {
        let ev = Evaluator::new(inst, &cur);
        (ev.potential(), aggregate_social(inst, &cur))
    };
    let mut steps = Vec::new();
    let mut truncated = false;
    loop {
        let choice = {
            let ev = Evaluator::new(inst, &cur);
            let mut best: Option<(usize, usize, Rational)> = None;
            for i in 0..inst.n() {
                let (k, g) = ev.best_response(i);
                if g > Rational::zero() && best.as_ref().is_none_or(|b| g > b.2) {
                    best = Some((i, k, g));
                }
            }
            best
        };
        let Some((i, k, gain)) = choice else { break };
        if steps.len() == max_steps {
            truncated = true;
            break;
        }
        let from = cur.machine_of(i);
        cur.set(i, k);
        let ev = Evaluator::new(inst, &cur);
        steps.push(Step {
            step: steps.len() + 1,
            mover: i,
            from,
            to: k,
            gain,
            potential: ev.potential(),
            social: aggregate_social(inst, &cur),
        });
    }
    Ok(Trace {
        orientation,
        start: start.clone(),
        end: cur,
        start_potential,
        start_social,
        steps,
        truncated,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QualityHit {
    /// First `t` (0 = start) whose social value meets the target.
    pub step: usize,
    /// The target holds at every later step too.
    pub persists: bool,
}

/// Social value meets `ratio * opt`: at most for cost kinds, at least for
/// payoff kinds.
pub fn meets(orient: Orientation, value: &Rational, ratio: &Rational, opt: &Rational) -> bool {
    let target = ratio * opt;
    match orient {
        Orientation::Cost => *value <= target,
        Orientation::Payoff => *value >= target,
    }
}

/// First step meeting the quality target, or None when it is never met.
pub fn steps_to_quality(trace: &Trace, ratio: &Rational, opt: &Rational) -> Option<QualityHit> {
    let o = trace.orientation;
    let first = (0..=trace.len()).find(|&t| meets(o, trace.social_at(t), ratio, opt))?;
    let persists = (first..=trace.len()).all(|t| meets(o, trace.social_at(t), ratio, opt));
    Some(QualityHit {
        step: first,
        persists,
    })
}
