use thiserror::Error;

/// Errors produced while building or solving a game.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid source model: {0}")]
    InvalidModel(String),

    #[error("invalid rational number {0:?}")]
    InvalidRational(String),

    #[error("empty pattern")]
    EmptyPattern,

    #[error("unrecognized symbol at byte {position} of pattern {text:?}")]
    UnknownSymbol { text: String, position: usize },

    #[error("pattern {index} uses a symbol outside the alphabet")]
    AlphabetMismatch { index: usize },

    #[error("no patterns given")]
    NoPatterns,

    #[error("players {first} and {second} chose the same pattern {pattern}")]
    DuplicatePattern {
        first: usize,
        second: usize,
        pattern: String,
    },

    #[error("pattern {inner} ({inner_text}) is a substring of pattern {outer} ({outer_text})")]
    Substring {
        inner: usize,
        outer: usize,
        inner_text: String,
        outer_text: String,
    },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("denominator polynomial is zero")]
    ZeroDenominator,

    #[error("rational function has a pole at s = {0}")]
    Pole(String),

    #[error("rational function is singular at the origin")]
    SingularAtOrigin,

    #[error("degenerate game: the sum of the column-replaced Conway determinants is zero")]
    DegenerateGame,

    #[error("degenerate pair: the first pattern's Conway numbers coincide")]
    DegeneratePair,

    #[error("singular linear system")]
    SingularSystem,

    #[error("player {player} wins with probability zero")]
    ZeroWinProbability { player: usize },

    #[error("no admissible candidate pattern of length {length}")]
    NoAdmissibleCandidate { length: usize },

    #[error("symbol probabilities need a common denominator above 2^64 for sampling")]
    SamplingRange,

    #[error("trial count must be at least 1")]
    NoTrials,
}

impl Error {
    /// True for errors caused by bad user input rather than an internal fault.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidModel(_)
                | Error::InvalidRational(_)
                | Error::EmptyPattern
                | Error::UnknownSymbol { .. }
                | Error::AlphabetMismatch { .. }
                | Error::NoPatterns
                | Error::DuplicatePattern { .. }
                | Error::Substring { .. }
                | Error::IndexOutOfRange { .. }
                | Error::NoAdmissibleCandidate { .. }
                | Error::SamplingRange
                | Error::NoTrials
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
