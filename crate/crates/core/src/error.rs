use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("invalid instance: field `{field}`: {reason}")]
    InvalidInstance { field: String, reason: String },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("invalid mixed profile: {0}")]
    InvalidProfile(String),

    #[error("player {player} out of range 1..={n}")]
    PlayerOutOfRange { player: usize, n: usize },

    #[error("machine {machine} out of range 1..={m}")]
    MachineOutOfRange { machine: usize, m: usize },

    #[error("machine values are required for {0} instances")]
    MissingMachineValues(&'static str),

    #[error("invalid generator parameter `{param}`: {reason}")]
    InvalidParameter { param: &'static str, reason: String },

    #[error("{what} needs {needed} but the limit is {limit}")]
    CapExceeded {
        what: &'static str,
        needed: String,
        limit: u64,
    },

    #[error("instance document: {0}")]
    Parse(String),

    #[error("ratio undefined: equilibrium value is zero while optimum is {0}")]
    UnboundedRatio(String),

    #[error("linear program: {0}")]
    Lp(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, GameError>;

impl From<std::io::Error> for GameError {
    fn from(e: std::io::Error) -> Self {
        GameError::Io(e.to_string())
    }
}

impl From<csv::Error> for GameError {
    fn from(e: csv::Error) -> Self {
        GameError::Io(e.to_string())
    }
}
