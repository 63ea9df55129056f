use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::automaton::{build_automaton, Automaton};
use crate::error::{Error, Result};
use crate::patterns::{GameSpec, SourceModel};
use crate::polyalg::Rational;

/// Tallies from a batch of simulated games.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimulationReport {
    pub trials: u64,
    pub wins: Vec<u64>,
    pub total_tosses: u64,
    pub seed: u64,
    pub streams: u64,
}

impl SimulationReport {
    pub fn empirical_probs(&self) -> Vec<Rational> {
        self.wins
            .iter()
            .map(|&w| Rational::new(w.into(), self.trials.into()))
            .collect()
    }

    pub fn mean_tosses(&self) -> Rational {
        Rational::new(self.total_tosses.into(), self.trials.into())
    }
}

/// Exact sampler for a rational distribution.
///
/// Probabilities are scaled to integer weights over their common denominator
/// `D`; a symbol is drawn by taking a uniform integer in `[0, D)` (rejection
/// sampled by the generator) and locating it among the cumulative weights.
#[derive(Debug, Clone)]
pub struct SymbolSampler {
    range: u64,
    cumulative: Vec<u64>,
}

impl SymbolSampler {
    pub fn new(model: &SourceModel) -> Result<Self> {
        let common = model
            .probs()
            .iter()
            .fold(BigInt::one(), |acc, p| acc.lcm(p.denom()));
        let range = common.to_u64().ok_or(Error::SamplingRange)?;
        let mut cumulative = Vec::with_capacity(model.len());
        let mut acc = 0u64;
        for p in model.probs() {
            let w = (p * Rational::from_integer(common.clone())).to_integer();
            acc += w.to_u64().ok_or(Error::SamplingRange)?;
            cumulative.push(acc);
        }
        debug_assert_eq!(acc, range);
        Ok(SymbolSampler { range, cumulative })
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let x = rng.random_range(0..self.range);
        self.cumulative.partition_point(|&c| c <= x)
    }
}

/// Generator for stream `stream` of seed `seed`: ChaCha8 keyed by
/// `seed_from_u64(seed)` with its stream counter set to `stream`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn run_stream(
    automaton: &Automaton,
    sampler: &SymbolSampler,
    players: usize,
    trials: u64,
    mut rng: ChaCha8Rng,
) -> (Vec<u64>, u64) {
    let mut wins = vec![0u64; players];
    let mut tosses = 0u64;
    for _ in 0..trials {
        let mut state = Automaton::START;
        loop {
            state = automaton.next(state, sampler.sample(&mut rng));
            tosses += 1;
            if let Some(p) = automaton.winner(state) {
                wins[p] += 1;
                break;
            }
        }
    }
    (wins, tosses)
}

/// Plays `trials` games on a single stream (stream 0) of `seed`.
pub fn simulate(spec: &GameSpec, trials: u64, seed: u64) -> Result<SimulationReport> {
    simulate_streams(spec, trials, seed, 1)
}

/// Splits `trials` across `streams` independent generators and merges the tallies.
///
/// Stream `k` plays `trials / streams` games, plus one if `k < trials % streams`.
/// The report depends only on `(seed, streams)`, not on thread scheduling.
pub fn simulate_streams(spec: &GameSpec, trials: u64, seed: u64, streams: u64) -> Result<SimulationReport> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let streams = streams.clamp(1, trials);
    let automaton = build_automaton(spec);
    let sampler = SymbolSampler::new(spec.model())?;
    let players = spec.players();
    let (base, extra) = (trials / streams, trials % streams);

    let parts: Vec<(Vec<u64>, u64)> = (0..streams)
        .into_par_iter()
        .map(|k| {
            let n = base + u64::from(k < extra);
            run_stream(&automaton, &sampler, players, n, stream_rng(seed, k))
        })
        .collect();

    let mut wins = vec![0u64; players];
    let mut total_tosses = 0;
    for (w, t) in parts {
        for (acc, x) in wins.iter_mut().zip(w) {
            *acc += x;
        }
        total_tosses += t;
    }
    Ok(SimulationReport {
        trials,
        wins,
        total_tosses,
        seed,
        streams,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rat;

    #[test]
    fn sampler_weights() {
        let m: SourceModel = "a:1/3,b:1/4,c:5/12".parse().unwrap();
        let s = SymbolSampler::new(&m).unwrap();
        assert_eq!(s.range, 12);
        assert_eq!(s.cumulative, vec![4, 7, 12]);
    }

    #[test]
    fn sampler_frequencies() {
        let m = SourceModel::coin(rat(1, 3)).unwrap();
        let s = SymbolSampler::new(&m).unwrap();
        let mut rng = stream_rng(7, 0);
        let n = 30_000;
        let heads = (0..n).filter(|_| s.sample(&mut rng) == 0).count();
        // 1/3 within 5 standard errors
        let dev = (heads as f64 / n as f64 - 1.0 / 3.0).abs();
        assert!(dev < 5.0 * (2.0f64 / 9.0 / n as f64).sqrt(), "{heads}");
    }

    #[test]
    fn huge_denominator_rejected() {
        let p = Rational::new(1.into(), BigInt::from(2).pow(70));
        let m = SourceModel::coin(p).unwrap();
        assert!(matches!(SymbolSampler::new(&m), Err(Error::SamplingRange)));
    }

    #[test]
    fn deterministic_and_consistent() {
        let spec = GameSpec::parse(SourceModel::fair_coin(), &["THH", "HTH", "HHT"]).unwrap();
        let a = simulate(&spec, 5_000, 42).unwrap();
        let b = simulate(&spec, 5_000, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.wins.iter().sum::<u64>(), 5_000);
        assert!(a.total_tosses >= 3 * 5_000);
        let c = simulate_streams(&spec, 5_000, 42, 4).unwrap();
        assert_eq!(c, simulate_streams(&spec, 5_000, 42, 4).unwrap());
        assert_eq!(c.wins.iter().sum::<u64>(), 5_000);
        assert_eq!(simulate_streams(&spec, 5_000, 42, 1).unwrap(), a);
    }

    #[test]
    fn zero_trials() {
        let spec = GameSpec::parse(SourceModel::fair_coin(), &["HH"]).unwrap();
        assert_eq!(simulate(&spec, 0, 0), Err(Error::NoTrials));
    }
}
