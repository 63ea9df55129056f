//! Exact analysis of Penney's game between any number of players.
//!
//! Each player picks a pattern over a finite alphabet; symbols are drawn i.i.d.
//! with exact rational probabilities until one of the patterns appears. The
//! [`solver`] gives every player's winning probability, the generating function
//! of the winning time, and expected durations in closed form. The [`oracle`]
//! recomputes the same quantities from an absorbing Markov chain and by
//! simulation.
//!
//! ```
//! use penney_core::{rat, winning_probabilities, GameSpec, SourceModel};
//!
//! let spec = GameSpec::parse(SourceModel::fair_coin(), &["THH", "HTH", "HHT"]).unwrap();
//! let p = winning_probabilities(&spec).unwrap();
//! assert_eq!(p, vec![rat(5, 12), rat(1, 3), rat(1, 4)]);
//! ```

pub mod error;
pub mod oracle;
pub mod patterns;
pub mod polyalg;
pub mod solver;

pub use error::{Error, Result};
pub use patterns::{
    empty_pattern_probability, overlap_indicator, parse_pattern, pattern_probability, validate_pattern_set,
    GameSpec, Pattern, SourceModel,
};
pub use polyalg::{int, parse_rational, rat, Matrix, PolyMatrix, Polynomial, Rational, RationalFunction, RationalMatrix};
pub use solver::{
    best_response, build_matrix_a, build_matrix_b, build_matrix_c, conditional_expected_duration, conway_number,
    correlation_polynomial, expected_duration, game_distribution, single_pattern_expected_time, solve, tail_gf,
    two_player_odds, winning_pgf, winning_probabilities, BestResponse, GameSolution,
};
