use rand::seq::IndexedRandom;
use rand::Rng;

use crate::patterns::{validate_pattern_set, GameSpec, Pattern, SourceModel};
use crate::polyalg::rat;

/// Coin biases used by the randomized suites.
pub fn bias_menu() -> Vec<SourceModel> {
    [(1, 2), (1, 3), (1, 4), (2, 5)]
        .iter()
        .map(|&(n, d)| SourceModel::coin(rat(n, d)).unwrap())
        .collect()
}

pub fn random_pattern<R: Rng + ?Sized>(rng: &mut R, len: usize, alphabet: usize) -> Pattern {
    Pattern::new((0..len).map(|_| rng.random_range(0..alphabet)).collect()).expect("len >= 1")
}

/// Random validated game over `model`: `1..=max_players` players, pattern lengths
/// in `1..=max_len`. Invalid draws are discarded and redrawn.
pub fn random_spec_over<R: Rng + ?Sized>(
    rng: &mut R,
    model: &SourceModel,
    max_players: usize,
    max_len: usize,
) -> GameSpec {
    loop {
        let m = rng.random_range(1..=max_players);
        let patterns = (0..m)
            .map(|_| {
                let len = rng.random_range(1..=max_len);
                random_pattern(rng, len, model.len())
            })
            .collect();
        if let Ok(spec) = validate_pattern_set(patterns, model.clone()) {
            return spec;
        }
    }
}

/// Random coin game: bias from [`bias_menu`], up to 4 players, lengths up to 5.
pub fn random_spec<R: Rng + ?Sized>(rng: &mut R) -> GameSpec {
    let model = bias_menu().choose(rng).cloned().expect("menu is nonempty");
    random_spec_over(rng, &model, 4, 5)
}
