use std::fmt;
use std::str::FromStr;

use crate::error::GameError;
use crate::rational::{int, zero, Rational};

/// Whether players minimize a cost or maximize a payoff.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Cost,
    Payoff,
}

impl Orientation {
    /// True when `a` is strictly better than `b` for a player or for society.
    pub fn better(self, a: &Rational, b: &Rational) -> bool {
        match self {
            Orientation::Cost => a < b,
            Orientation::Payoff => a > b,
        }
    }

    /// Improvement from `before` to `after`, positive when strictly improving.
    pub fn improvement(self, before: &Rational, after: &Rational) -> Rational {
        match self {
            Orientation::Cost => before - after,
            Orientation::Payoff => after - before,
        }
    }
}

/// The six assignment games.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GameKind {
    /// Balancing with Conflicts.
    BwC,
    /// Balancing with Friendship.
    BwF,
    /// Balancing with Conflicts and Friendship, weighted by (alpha, beta, gamma).
    BwCF,
    /// Sharing with Conflicts.
    SwC,
    /// Sharing with Friendship.
    SwF,
    /// Two-sided cut game; players are paid for neighbors on other machines.
    MaxCut,
}

impl GameKind {
    pub const ALL: [GameKind; 6] = [
        GameKind::BwC,
        GameKind::BwF,
        GameKind::BwCF,
        GameKind::SwC,
        GameKind::SwF,
        GameKind::MaxCut,
    ];

    pub fn orientation(self) -> Orientation {
        match self {
            GameKind::BwC | GameKind::BwF | GameKind::BwCF => Orientation::Cost,
            GameKind::SwC | GameKind::SwF | GameKind::MaxCut => Orientation::Payoff,
        }
    }

    pub fn is_balancing(self) -> bool {
        self.orientation() == Orientation::Cost
    }

    pub fn is_sharing(self) -> bool {
        matches!(self, GameKind::SwC | GameKind::SwF)
    }

    pub fn uses_conflicts(self) -> bool {
        matches!(
            self,
            GameKind::BwC | GameKind::BwCF | GameKind::SwC | GameKind::MaxCut
        )
    }

    pub fn uses_friendships(self) -> bool {
        matches!(self, GameKind::BwF | GameKind::BwCF | GameKind::SwF)
    }

    pub fn tag(self) -> &'static str {
        match self {
            GameKind::BwC => "BwC",
            GameKind::BwF => "BwF",
            GameKind::BwCF => "BwCF",
            GameKind::SwC => "SwC",
            GameKind::SwF => "SwF",
            GameKind::MaxCut => "MaxCut",
        }
    }
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for GameKind {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GameKind::ALL
            .iter()
            .copied()
            .find(|k| k.tag().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| GameError::InvalidInstance {
                field: "kind".into(),
                reason: format!("unknown game kind {s:?}"),
            })
    }
}

/// Load, conflict and friendship weights of the balancing games.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CostWeights {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl CostWeights {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        CostWeights { alpha, beta, gamma }
    }

    pub fn conflicts_only() -> Self {
        CostWeights::new(int(1), int(1), zero())
    }

    pub fn friendship_only() -> Self {
        CostWeights::new(int(1), zero(), int(1))
    }

    pub fn validate(&self) -> Result<(), GameError> {
        let bad = |field: &str, reason: &str| GameError::InvalidInstance {
            field: field.into(),
            reason: reason.into(),
        };
        if self.alpha <= zero() {
            return Err(bad("alpha", "must be > 0"));
        }
        if self.beta < zero() {
            return Err(bad("beta", "must be >= 0"));
        }
        if self.gamma < zero() {
            return Err(bad("gamma", "must be >= 0"));
        }
        Ok(())
    }
}
