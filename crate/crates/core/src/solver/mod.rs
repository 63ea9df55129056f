//! Closed-form solution of the multi-player pattern race.
//!
//! Everything is built from the correlation polynomials
//! `w_ij(s) = sum_k [A_i(k) = A_j^(k)] P(A_i^(l_i - k)) s^(l_i - k)`, collected in the
//! matrix `B(s)`. Winning generating functions come from Cramer's rule on `B`,
//! winning probabilities and expected durations from the Conway matrix `C = B(1)`
//! rescaled row-wise by `1 / P(A_i)`.
//!
//! Player indices are 0-based here.

mod best_response;

pub use best_response::{best_response, BestResponse};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::patterns::{overlaps, pattern_probability, GameSpec, Pattern, SourceModel};
use crate::polyalg::{PolyMatrix, Polynomial, Rational, RationalFunction, RationalMatrix};

/// Correlation polynomial `w_{A_i}^{A_j}(s)`.
pub fn correlation_polynomial(a_i: &Pattern, a_j: &Pattern, model: &SourceModel) -> Polynomial {
    let li = a_i.len();
    let mut coeffs = vec![Rational::zero(); li];
    for k in 1..=li.min(a_j.len()) {
        if overlaps(a_i, a_j, k) {
            coeffs[li - k] = model.probability_of(a_i.suffix(li - k));
        }
    }
    Polynomial::from_coeffs(coeffs)
}

/// `B(s)` with entry `(i, j) = w_{A_i}^{A_j}(s)`.
pub fn build_matrix_b(spec: &GameSpec) -> PolyMatrix {
    let ps = spec.patterns();
    PolyMatrix::from_fn(ps.len(), |i, j| correlation_polynomial(&ps[i], &ps[j], spec.model()))
}

/// Column `(P(A_i) s^{l_i})_i` that replaces a column of `B` or `A`.
pub fn rhs_column(spec: &GameSpec) -> Vec<Polynomial> {
    spec.patterns()
        .iter()
        .map(|a| Polynomial::monomial(pattern_probability(a, spec.model()), a.len()))
        .collect()
}

/// `A(s)` with entry `(i, j) = P(A_i) s^{l_i} + (1 - s) w_{A_i}^{A_j}(s)`.
pub fn build_matrix_a(spec: &GameSpec) -> PolyMatrix {
    let rhs = rhs_column(spec);
    let b = build_matrix_b(spec);
    let one_minus = Polynomial::one_minus_var();
    PolyMatrix::from_fn(spec.players(), |i, j| &rhs[i] + &(&one_minus * b.get(i, j)))
}

/// Determinants `det B^j(s)` for every column `j`.
pub fn column_determinants(spec: &GameSpec) -> Vec<Polynomial> {
    let b = build_matrix_b(spec);
    let rhs = rhs_column(spec);
    (0..spec.players())
        .map(|j| b.replace_column(j, &rhs).expect("column in range").determinant())
        .collect()
}

/// Common denominator `sum_j det B^j(s) + (1 - s) det B(s)`.
fn pgf_denominator(det_b: &Polynomial, det_cols: &[Polynomial]) -> Polynomial {
    let sum = det_cols.iter().fold(Polynomial::zero(), |acc, d| &acc + d);
    &sum + &(&Polynomial::one_minus_var() * det_b)
}

/// Generating function `g^{A_i}(s) = sum_n P(player i wins at toss n) s^n`.
pub fn winning_pgf(spec: &GameSpec, i: usize) -> Result<RationalFunction> {
    let m = spec.players();
    if i >= m {
        return Err(Error::IndexOutOfRange { index: i, len: m });
    }
    let det_b = build_matrix_b(spec).determinant();
    let cols = column_determinants(spec);
    let denom = pgf_denominator(&det_b, &cols);
    RationalFunction::new(cols[i].clone(), denom)
}

/// Conway number `A_j * A_i = sum_k [A_i(k) = A_j^(k)] / P(A_i(k))`.
pub fn conway_number(a_j: &Pattern, a_i: &Pattern, model: &SourceModel) -> Rational {
    let value: Rational = (1..=a_i.len().min(a_j.len()))
        .filter(|&k| overlaps(a_i, a_j, k))
        .map(|k| model.probability_of(a_i.prefix(k)).recip())
        .sum();
    debug_assert_eq!(value, conway_number_via_correlation(a_j, a_i, model));
    value
}

/// Same number as [`conway_number`], computed as `w_{A_i}^{A_j}(1) / P(A_i)`.
pub fn conway_number_via_correlation(a_j: &Pattern, a_i: &Pattern, model: &SourceModel) -> Rational {
    correlation_polynomial(a_i, a_j, model).eval(&Rational::one()) / pattern_probability(a_i, model)
}

/// `C` with entry `(i, j) = A_j * A_i`.
pub fn build_matrix_c(spec: &GameSpec) -> RationalMatrix {
    let ps = spec.patterns();
    RationalMatrix::from_fn(ps.len(), |i, j| conway_number(&ps[j], &ps[i], spec.model()))
}

struct ConwayDeterminants {
    det_c: Rational,
    columns: Vec<Rational>,
    total: Rational,
}

fn conway_determinants(spec: &GameSpec) -> Result<ConwayDeterminants> {
    let c = build_matrix_c(spec);
    let ones = vec![Rational::one(); spec.players()];
    let columns: Vec<Rational> = (0..spec.players())
        .map(|j| c.replace_column(j, &ones).expect("column in range").determinant())
        .collect();
    let total: Rational = columns.iter().sum();
    if total.is_zero() {
        return Err(Error::DegenerateGame);
    }
    Ok(ConwayDeterminants {
        det_c: c.determinant(),
        columns,
        total,
    })
}

/// `p_i = det C^i / sum_j det C^j`, exact at `s = 1`.
pub fn winning_probabilities(spec: &GameSpec) -> Result<Vec<Rational>> {
    let d = conway_determinants(spec)?;
    Ok(d.columns.iter().map(|c| c / &d.total).collect())
}

/// Expected number of tosses until some pattern appears: `det C / sum_j det C^j`.
pub fn expected_duration(spec: &GameSpec) -> Result<Rational> {
    let d = conway_determinants(spec)?;
    Ok(d.det_c / d.total)
}

/// Ratio `p_1 / p_2` for a two-player game.
pub fn two_player_odds(a_1: &Pattern, a_2: &Pattern, model: &SourceModel) -> Result<Rational> {
    let den = conway_number(a_1, a_1, model) - conway_number(a_1, a_2, model);
    if den.is_zero() {
        return Err(Error::DegeneratePair);
    }
    Ok((conway_number(a_2, a_2, model) - conway_number(a_2, a_1, model)) / den)
}

/// Expected waiting time for a single pattern, `sum_k [A(k) = A^(k)] / P(A(k))`.
pub fn single_pattern_expected_time(a: &Pattern, model: &SourceModel) -> Rational {
    (1..=a.len())
        .filter(|&k| overlaps(a, a, k))
        .map(|k| model.probability_of(a.prefix(k)).recip())
        .sum()
}

/// Tail generating function `Q(s) = (1 - sum_j g^{A_j}(s)) / (1 - s)`; the
/// `(1 - s)` factor is cancelled exactly.
pub fn tail_gf(spec: &GameSpec) -> Result<RationalFunction> {
    let det_b = build_matrix_b(spec).determinant();
    let cols = column_determinants(spec);
    let denom = pgf_denominator(&det_b, &cols);
    let sum = cols.iter().fold(Polynomial::zero(), |acc, d| &acc + d);
    let numer = (&denom - &sum).exact_div(&Polynomial::one_minus_var());
    RationalFunction::new(numer, denom)
}

/// `P(player i wins at toss k)` for `0 <= k <= horizon`, one row per player.
pub fn game_distribution(spec: &GameSpec, horizon: usize) -> Result<Vec<Vec<Rational>>> {
    (0..spec.players())
        .map(|i| winning_pgf(spec, i)?.series_coefficients(horizon))
        .collect()
}

/// `E[tau | player i wins] = g_i'(1) / p_i`.
pub fn conditional_expected_duration(spec: &GameSpec, i: usize) -> Result<Rational> {
    let pgf = winning_pgf(spec, i)?;
    conditional_from_pgf(&pgf, &winning_probabilities(spec)?[i], i)
}

fn conditional_from_pgf(pgf: &RationalFunction, p: &Rational, i: usize) -> Result<Rational> {
    if p.is_zero() {
        return Err(Error::ZeroWinProbability { player: i + 1 });
    }
    let one = Rational::one();
    let slope = pgf.cancel_root(&one).derivative().eval(&one)?;
    Ok(slope / p)
}

/// Everything the closed forms give for one game.
#[derive(Debug, Clone, PartialEq)]
pub struct GameSolution {
    pub pgfs: Vec<RationalFunction>,
    pub win_probs: Vec<Rational>,
    pub conditional_durations: Vec<Rational>,
    pub expected_duration: Rational,
    pub tail_gf: RationalFunction,
}

impl GameSolution {
    /// Per-player winning probabilities through `horizon` tosses.
    pub fn distribution(&self, horizon: usize) -> Result<Vec<Vec<Rational>>> {
        self.pgfs.iter().map(|g| g.series_coefficients(horizon)).collect()
    }

    /// `P(tau > n)` for `0 <= n <= horizon`.
    pub fn survival(&self, horizon: usize) -> Result<Vec<Rational>> {
        self.tail_gf.series_coefficients(horizon)
    }
}

pub fn solve(spec: &GameSpec) -> Result<GameSolution> {
    let det_b = build_matrix_b(spec).determinant();
    let cols = column_determinants(spec);
    let denom = pgf_denominator(&det_b, &cols);
    let pgfs = cols
        .iter()
        .map(|c| RationalFunction::new(c.clone(), denom.clone()))
        .collect::<Result<Vec<_>>>()?;
    let win_probs = winning_probabilities(spec)?;
    let conditional_durations = pgfs
        .iter()
        .zip(&win_probs)
        .enumerate()
        .map(|(i, (g, p))| conditional_from_pgf(g, p, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(GameSolution {
        pgfs,
        win_probs,
        conditional_durations,
        expected_duration: expected_duration(spec)?,
        tail_gf: tail_gf(spec)?,
    })
}
