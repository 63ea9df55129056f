//! Output documents for each subcommand and their human-readable tables.

use std::fmt::Write as _;

use num_traits::Signed;
use serde::Serialize;

use penney_core::oracle::SimulationReport;
use penney_core::{BestResponse, GameSolution, GameSpec, Rational, SourceModel};

use crate::decimal::{format_decimal, format_sqrt};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize)]
pub struct Symbol {
    pub symbol: String,
    pub probability: String,
}

fn alphabet(model: &SourceModel) -> Vec<Symbol> {
    model
        .symbols()
        .iter()
        .zip(model.probs())
        .map(|(s, p)| Symbol {
            symbol: s.clone(),
            probability: p.to_string(),
        })
        .collect()
}

fn patterns(spec: &GameSpec) -> Vec<String> {
    (0..spec.players()).map(|i| spec.pattern_text(i)).collect()
}

#[derive(Debug, Serialize)]
pub struct SolvePlayer {
    pub player: usize,
    pub pattern: String,
    pub win_probability: String,
    pub win_probability_decimal: String,
    pub conditional_expected_duration: String,
    pub conditional_expected_duration_decimal: String,
}

#[derive(Debug, Serialize)]
pub struct SeriesRow {
    pub n: usize,
    pub win: Vec<String>,
    pub survival: String,
}

#[derive(Debug, Serialize)]
pub struct SolveDocument {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub command: &'static str,
    pub alphabet: Vec<Symbol>,
    pub patterns: Vec<String>,
    pub digits: usize,
    pub players: Vec<SolvePlayer>,
    pub expected_duration: String,
    pub expected_duration_decimal: String,
    pub series: Option<Vec<SeriesRow>>,
}

pub fn solve_document(
    spec: &GameSpec,
    sol: &GameSolution,
    series: Option<(Vec<Vec<Rational>>, Vec<Rational>)>,
    digits: usize,
) -> SolveDocument {
    let players = (0..spec.players())
        .map(|i| SolvePlayer {
            player: i + 1,
            pattern: spec.pattern_text(i),
            win_probability: sol.win_probs[i].to_string(),
            win_probability_decimal: format_decimal(&sol.win_probs[i], digits),
            conditional_expected_duration: sol.conditional_durations[i].to_string(),
            conditional_expected_duration_decimal: format_decimal(&sol.conditional_durations[i], digits),
        })
        .collect();
    let series = series.map(|(dist, survival)| {
        survival
            .iter()
            .enumerate()
            .map(|(n, q)| SeriesRow {
                n,
                win: dist.iter().map(|row| row[n].to_string()).collect(),
                survival: q.to_string(),
            })
            .collect()
    });
    SolveDocument {
        schema_version: SCHEMA_VERSION,
        tool_version: TOOL_VERSION,
        command: "solve",
        alphabet: alphabet(spec.model()),
        patterns: patterns(spec),
        digits,
        players,
        expected_duration: sol.expected_duration.to_string(),
        expected_duration_decimal: format_decimal(&sol.expected_duration, digits),
        series,
    }
}

impl SolveDocument {
    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "alphabet: {}", alphabet_line(&self.alphabet));
        let _ = writeln!(
            out,
            "{:>6}  {:<12} {:>14} {:>12} {:>14}",
            "player", "pattern", "P(win)", "decimal", "E[tau | win]"
        );
        for p in &self.players {
            let _ = writeln!(
                out,
                "{:>6}  {:<12} {:>14} {:>12} {:>14}",
                p.player,
                p.pattern,
                p.win_probability,
                p.win_probability_decimal,
                p.conditional_expected_duration_decimal
            );
        }
        let _ = writeln!(
            out,
            "expected duration: {} ({})",
            self.expected_duration, self.expected_duration_decimal
        );
        if let Some(rows) = &self.series {
            let _ = writeln!(out, "\n{:>4}  {}  P(tau > n)", "n", self.patterns.join("  "));
            for r in rows {
                let _ = writeln!(out, "{:>4}  {}  {}", r.n, r.win.join("  "), r.survival);
            }
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct SimulatePlayer {
    pub player: usize,
    pub pattern: String,
    pub exact: String,
    pub exact_decimal: String,
    pub wins: u64,
    pub empirical: String,
    pub empirical_decimal: String,
    pub abs_error_decimal: String,
    pub three_sigma_decimal: String,
    pub within_three_sigma: bool,
}

#[derive(Debug, Serialize)]
pub struct SimulateDocument {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub command: &'static str,
    pub alphabet: Vec<Symbol>,
    pub patterns: Vec<String>,
    pub digits: usize,
    pub seed: u64,
    pub trials: u64,
    pub streams: u64,
    pub players: Vec<SimulatePlayer>,
    pub expected_duration: String,
    pub expected_duration_decimal: String,
    pub mean_tosses: String,
    pub mean_tosses_decimal: String,
}

pub fn simulate_document(
    spec: &GameSpec,
    exact: &[Rational],
    expected: &Rational,
    report: &SimulationReport,
    digits: usize,
) -> SimulateDocument {
    let trials = Rational::from_integer(report.trials.into());
    let players = report
        .empirical_probs()
        .iter()
        .zip(exact)
        .enumerate()
        .map(|(i, (emp, p))| {
            let err = (emp - p).abs();
            // (3 sigma)^2 = 9 p (1 - p) / trials
            let var3 = Rational::from_integer(9.into()) * p * (Rational::from_integer(1.into()) - p) / &trials;
            SimulatePlayer {
                player: i + 1,
                pattern: spec.pattern_text(i),
                exact: p.to_string(),
                exact_decimal: format_decimal(p, digits),
                wins: report.wins[i],
                empirical: emp.to_string(),
                empirical_decimal: format_decimal(emp, digits),
                abs_error_decimal: format_decimal(&err, digits),
                three_sigma_decimal: format_sqrt(&var3, digits),
                within_three_sigma: &err * &err <= var3,
            }
        })
        .collect();
    let mean = report.mean_tosses();
    SimulateDocument {
        schema_version: SCHEMA_VERSION,
        tool_version: TOOL_VERSION,
        command: "simulate",
        alphabet: alphabet(spec.model()),
        patterns: patterns(spec),
        digits,
        seed: report.seed,
        trials: report.trials,
        streams: report.streams,
        players,
        expected_duration: expected.to_string(),
        expected_duration_decimal: format_decimal(expected, digits),
        mean_tosses: mean.to_string(),
        mean_tosses_decimal: format_decimal(&mean, digits),
    }
}

impl SimulateDocument {
    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "alphabet: {}", alphabet_line(&self.alphabet));
        let _ = writeln!(out, "trials: {}  seed: {}  streams: {}", self.trials, self.seed, self.streams);
        let _ = writeln!(
            out,
            "{:>6}  {:<12} {:>12} {:>12} {:>12} {:>12}  ok",
            "player", "pattern", "exact", "empirical", "|error|", "3 sigma"
        );
        for p in &self.players {
            let _ = writeln!(
                out,
                "{:>6}  {:<12} {:>12} {:>12} {:>12} {:>12}  {}",
                p.player,
                p.pattern,
                p.exact_decimal,
                p.empirical_decimal,
                p.abs_error_decimal,
                p.three_sigma_decimal,
                if p.within_three_sigma { "yes" } else { "no" }
            );
        }
        let _ = writeln!(
            out,
            "mean tosses: {}  (exact {})",
            self.mean_tosses_decimal, self.expected_duration_decimal
        );
        out
    }
}

#[derive(Debug, Serialize)]
pub struct Candidate {
    pub rank: usize,
    pub pattern: String,
    pub win_probability: String,
    pub win_probability_decimal: String,
}

#[derive(Debug, Serialize)]
pub struct BestResponseDocument {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub command: &'static str,
    pub alphabet: Vec<Symbol>,
    pub opponents: Vec<String>,
    pub length: usize,
    pub digits: usize,
    pub best: Candidate,
    pub candidates: Option<Vec<Candidate>>,
}

pub fn best_response_document(
    model: &SourceModel,
    opponents: Vec<String>,
    length: usize,
    br: &BestResponse,
    verbose: bool,
    digits: usize,
) -> BestResponseDocument {
    let candidate = |rank: usize, (p, w): &(penney_core::Pattern, Rational)| Candidate {
        rank,
        pattern: p.display(model).to_string(),
        win_probability: w.to_string(),
        win_probability_decimal: format_decimal(w, digits),
    };
    BestResponseDocument {
        schema_version: SCHEMA_VERSION,
        tool_version: TOOL_VERSION,
        command: "best_response",
        alphabet: alphabet(model),
        opponents,
        length,
        digits,
        best: candidate(1, &(br.pattern.clone(), br.win_probability.clone())),
        candidates: verbose.then(|| br.ranked.iter().enumerate().map(|(i, c)| candidate(i + 1, c)).collect()),
    }
}

impl BestResponseDocument {
    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "alphabet: {}", alphabet_line(&self.alphabet));
        let _ = writeln!(out, "opponents: {}", self.opponents.join(", "));
        let _ = writeln!(
            out,
            "best response: {}  P(win) = {} ({})",
            self.best.pattern, self.best.win_probability, self.best.win_probability_decimal
        );
        if let Some(cands) = &self.candidates {
            let _ = writeln!(out, "\n{:>4}  {:<12} {:>14} {:>12}", "rank", "pattern", "P(win)", "decimal");
            for c in cands {
                let _ = writeln!(
                    out,
                    "{:>4}  {:<12} {:>14} {:>12}",
                    c.rank, c.pattern, c.win_probability, c.win_probability_decimal
                );
            }
        }
        out
    }
}

fn alphabet_line(symbols: &[Symbol]) -> String {
    symbols
        .iter()
        .map(|s| format!("{}={}", s.symbol, s.probability))
        .collect::<Vec<_>>()
        .join(" ")
}
