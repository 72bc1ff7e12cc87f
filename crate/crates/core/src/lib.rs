//! Exact analysis of assignment games with pairwise conflicts and friendships.
//!
//! Jobs (players) choose machines. Balancing games charge load plus
//! conflict/friendship penalties, sharing games split machine values and
//! reward separated enemies or co-located friends. The crate evaluates all
//! six games in exact rational arithmetic, enumerates pure and strong Nash
//! equilibria, solves the worst coarse-correlated-equilibrium LP, certifies
//! semi-smoothness and niceness bounds, and simulates max-gain best-response
//! dynamics.
//!
//! ```
//! use conflict_games::prelude::*;
//!
//! let inst = instances::gen_bwc_multipartite(2).unwrap();
//! let report = Oracle::new(&inst).report().unwrap();
//! assert_eq!(report.poa, frac(3, 2));
//! ```

pub mod cli;
pub mod dynamics;
pub mod error;
pub mod game;
pub mod instances;
pub mod oracle;
pub mod rational;
pub mod report;
pub mod smoothness;

pub use error::{GameError, Result};

pub mod prelude {
    pub use crate::error::{GameError, Result};
    pub use crate::game::{
        best_response, deviation_gain, player_value, potential, social_value, CostWeights,
        Evaluator, GameKind, Instance, MixedProfile, Orientation, State,
    };
    pub use crate::instances;
    pub use crate::oracle::{Oracle, OracleConfig};
    pub use crate::rational::{frac, int, Rational};
}
