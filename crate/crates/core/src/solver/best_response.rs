use num_traits::Zero;
use rayon::prelude::*;

use super::winning_probabilities;
use crate::error::{Error, Result};
use crate::patterns::{validate_pattern_set, Pattern, SourceModel};
use crate::polyalg::Rational;

/// Outcome of an exhaustive best-response search.
#[derive(Debug, Clone, PartialEq)]
pub struct BestResponse {
    pub pattern: Pattern,
    pub win_probability: Rational,
    /// Every admissible candidate with its win probability, best first; ties
    /// keep lexicographic order.
    pub ranked: Vec<(Pattern, Rational)>,
}

/// Enumerates all `|alphabet|^length` patterns and returns the one that
/// maximizes the newcomer's winning probability against `opponents`.
///
/// Candidates that duplicate an opponent or conflict through the substring
/// condition are skipped. Ties go to the lexicographically smallest candidate
/// in the alphabet's own symbol order.
pub fn best_response(opponents: &[Pattern], length: usize, model: &SourceModel) -> Result<BestResponse> {
    if length == 0 {
        return Err(Error::NoAdmissibleCandidate { length });
    }
    let total = u32::try_from(length)
        .ok()
        .and_then(|l| model.len().checked_pow(l))
        .ok_or(Error::NoAdmissibleCandidate { length })?;

    let scored: Vec<Option<(Pattern, Rational)>> = (0..total)
        .into_par_iter()
        .map(|rank| {
            let candidate = nth_candidate(rank, length, model.len());
            let mut players = opponents.to_vec();
            players.push(candidate.clone());
            let spec = validate_pattern_set(players, model.clone()).ok()?;
            let probs = winning_probabilities(&spec).ok()?;
            Some((candidate, probs.last().cloned().unwrap_or_else(Rational::zero)))
        })
        .collect();

    let mut ranked: Vec<(Pattern, Rational)> = scored.into_iter().flatten().collect();
    if ranked.is_empty() {
        return Err(Error::NoAdmissibleCandidate { length });
    }
    // stable sort keeps enumeration (lexicographic) order among equal scores
    ranked.sort_by(|a, b| b.1.cmp(&a.1));
    let (pattern, win_probability) = ranked[0].clone();
    Ok(BestResponse {
        pattern,
        win_probability,
        ranked,
    })
}

/// The `rank`-th pattern of the given length in lexicographic order.
fn nth_candidate(mut rank: usize, length: usize, base: usize) -> Pattern {
    let mut symbols = vec![0; length];
    for slot in symbols.iter_mut().rev() {
        *slot = rank % base;
        rank /= base;
    }
    Pattern::new(symbols).expect("length >= 1")
}
