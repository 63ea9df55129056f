//! Fixture games shared by the benchmarks.

use penney_core::{GameSpec, SourceModel};

/// The three-player THH / HTH / HHT game on a fair coin.
pub fn example_game() -> GameSpec {
    GameSpec::parse(SourceModel::fair_coin(), &["THH", "HTH", "HHT"]).unwrap()
}

/// Four players with length-5 patterns on a biased coin.
pub fn large_game() -> GameSpec {
    let model: SourceModel = "H:2/5,T:3/5".parse().unwrap();
    GameSpec::parse(model, &["HHTHT", "THTTH", "TTHHH", "HTHHT"]).unwrap()
}
