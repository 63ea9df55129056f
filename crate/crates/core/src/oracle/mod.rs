//! Independent ground truth for the closed forms: the game as an absorbing
//! Markov chain over pattern prefixes, solved exactly, plus a seeded Monte
//! Carlo simulator that runs the same chain.

mod automaton;
mod chain;
pub mod gen;
mod linear;
mod simulate;

pub use automaton::{build_automaton, Automaton};
pub use chain::{
    absorption_probabilities, conditional_absorption_times, expected_absorption_time, step_distribution,
    survival_probabilities,
};
pub use linear::solve as solve_linear;
pub use simulate::{simulate, simulate_streams, stream_rng, SimulationReport, SymbolSampler};
