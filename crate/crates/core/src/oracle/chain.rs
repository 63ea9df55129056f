use num_traits::{One, Zero};

use super::automaton::Automaton;
use super::linear::solve;
use crate::error::{Error, Result};
use crate::patterns::SourceModel;
use crate::polyalg::Rational;

/// Transient part of the chain: `I - Q` and the one-step absorption matrix `R`.
struct Chain {
    /// state -> transient index
    index: Vec<Option<usize>>,
    identity_minus_q: Vec<Vec<Rational>>,
    /// `r[u][i]`: probability of stepping from transient `u` straight into player `i`'s state
    r: Vec<Vec<Rational>>,
    players: usize,
}

impl Chain {
    fn new(automaton: &Automaton, model: &SourceModel) -> Self {
        let players = automaton.absorbing_states().count();
        let mut index = vec![None; automaton.states()];
        let mut n = 0;
        for (state, slot) in index.iter_mut().enumerate() {
            if automaton.winner(state).is_none() {
                *slot = Some(n);
                n += 1;
            }
        }
        let mut m = vec![vec![Rational::zero(); n]; n];
        let mut r = vec![vec![Rational::zero(); players]; n];
        for state in 0..automaton.states() {
            let Some(u) = index[state] else { continue };
            m[u][u] += Rational::one();
            for a in 0..automaton.alphabet() {
                let next = automaton.next(state, a);
                match (index[next], automaton.winner(next)) {
                    (Some(v), _) => m[u][v] -= model.prob(a),
                    (None, Some(p)) => r[u][p] += model.prob(a),
                    (None, None) => unreachable!("state is neither transient nor absorbing"),
                }
            }
        }
        Chain {
            index,
            identity_minus_q: m,
            r,
            players,
        }
    }

    fn start(&self) -> usize {
        self.index[Automaton::START].expect("start state is transient")
    }

    fn absorption(&self) -> Result<Vec<Vec<Rational>>> {
        solve(self.identity_minus_q.clone(), self.r.clone())
    }
}

/// Probability that each player's pattern is the one absorbing the chain.
pub fn absorption_probabilities(automaton: &Automaton, model: &SourceModel) -> Result<Vec<Rational>> {
    let chain = Chain::new(automaton, model);
    let x = chain.absorption()?;
    Ok(x[chain.start()].clone())
}

/// Expected steps to absorption from the start: `t = 1 + Q t`.
pub fn expected_absorption_time(automaton: &Automaton, model: &SourceModel) -> Result<Rational> {
    let chain = Chain::new(automaton, model);
    let n = chain.identity_minus_q.len();
    let t = solve(chain.identity_minus_q.clone(), vec![vec![Rational::one()]; n])?;
    Ok(t[chain.start()][0].clone())
}

/// `E[tau | absorbed by player i]` from the start state.
///
/// With `x^i` the absorption probabilities, `y^i = E[tau; absorbed by i]` solves
/// `y_u = sum_a P(a) (x_{next} + y_{next})` with `y = 0` on absorbing states, which
/// for transient `u` reduces to `(I - Q) y = x`.
pub fn conditional_absorption_times(automaton: &Automaton, model: &SourceModel) -> Result<Vec<Rational>> {
    let chain = Chain::new(automaton, model);
    let x = chain.absorption()?;
    let y = solve(chain.identity_minus_q.clone(), x.clone())?;
    let s = chain.start();
    (0..chain.players)
        .map(|i| {
            if x[s][i].is_zero() {
                Err(Error::ZeroWinProbability { player: i + 1 })
            } else {
                Ok(&y[s][i] / &x[s][i])
            }
        })
        .collect()
}

/// Iterates the state distribution for `horizon` steps.
struct Walk {
    /// `hits[i][k]`: probability that player `i` wins exactly at step `k`
    hits: Vec<Vec<Rational>>,
    /// `survival[k] = P(tau > k)`
    survival: Vec<Rational>,
}

#[allow(clippy::needless_range_loop)]
fn walk(automaton: &Automaton, model: &SourceModel, horizon: usize) -> Walk {
    let players = automaton.absorbing_states().count();
    let mut dist = vec![Rational::zero(); automaton.states()];
    dist[Automaton::START] = Rational::one();
    let mut hits = vec![vec![Rational::zero(); horizon + 1]; players];
    let mut survival = Vec::with_capacity(horizon + 1);
    survival.push(Rational::one());
    for k in 1..=horizon {
        let mut next = vec![Rational::zero(); automaton.states()];
        for (state, mass) in dist.iter().enumerate() {
            if mass.is_zero() {
                continue;
            }
            for a in 0..automaton.alphabet() {
                let to = automaton.next(state, a);
                let flow = mass * model.prob(a);
                match automaton.winner(to) {
                    Some(p) => hits[p][k] += flow,
                    None => next[to] += flow,
                }
            }
        }
        survival.push(next.iter().sum());
        dist = next;
    }
    Walk { hits, survival }
}

/// `out[i][k]` = probability that player `i` wins exactly at step `k`, `k <= horizon`.
pub fn step_distribution(automaton: &Automaton, model: &SourceModel, horizon: usize) -> Vec<Vec<Rational>> {
    walk(automaton, model, horizon).hits
}

/// `out[k] = P(tau > k)` for `k <= horizon`.
pub fn survival_probabilities(automaton: &Automaton, model: &SourceModel, horizon: usize) -> Vec<Rational> {
    walk(automaton, model, horizon).survival
}

#[cfg(test)]
mod tests {
    use super::super::automaton::build_automaton;
    use super::*;
    use crate::patterns::GameSpec;
    use crate::polyalg::{int, rat};

    fn auto(model: &SourceModel, ps: &[&str]) -> Automaton {
        build_automaton(&GameSpec::parse(model.clone(), ps).unwrap())
    }

    #[test]
    fn example_fair() {
        let m = SourceModel::fair_coin();
        let a = auto(&m, &["THH", "HTH", "HHT"]);
        assert_eq!(
            absorption_probabilities(&a, &m).unwrap(),
            vec![rat(5, 12), rat(1, 3), rat(1, 4)]
        );
    }

    #[test]
    fn single_pattern() {
        let m = SourceModel::coin(rat(2, 5)).unwrap();
        let a = auto(&m, &["H"]);
        assert_eq!(absorption_probabilities(&a, &m).unwrap(), vec![int(1)]);
        assert_eq!(expected_absorption_time(&a, &m).unwrap(), rat(5, 2));
        assert_eq!(conditional_absorption_times(&a, &m).unwrap(), vec![rat(5, 2)]);
    }

    #[test]
    fn hh_fair_by_hand() {
        // t_e = 1 + t_e/2 + t_H/2, t_H = 1 + t_e/2  =>  t_e = 6
        let m = SourceModel::fair_coin();
        let a = auto(&m, &["HH"]);
        assert_eq!(expected_absorption_time(&a, &m).unwrap(), int(6));
    }

    #[test]
    fn total_expectation() {
        let m = SourceModel::fair_coin();
        let a = auto(&m, &["THH", "HTH", "HHT"]);
        let p = absorption_probabilities(&a, &m).unwrap();
        let c = conditional_absorption_times(&a, &m).unwrap();
        let total: Rational = p.iter().zip(&c).map(|(p, c)| p * c).sum();
        assert_eq!(total, expected_absorption_time(&a, &m).unwrap());
    }

    #[test]
    fn steps_telescope() {
        let m = SourceModel::coin(rat(1, 3)).unwrap();
        let a = auto(&m, &["THH", "HTH", "HHT"]);
        let hits = step_distribution(&a, &m, 20);
        let q = survival_probabilities(&a, &m, 20);
        for k in 0..3 {
            assert!(hits.iter().all(|row| row[k].is_zero()));
        }
        for k in 1..=20 {
            let row: Rational = hits.iter().map(|h| &h[k]).sum();
            assert_eq!(row, &q[k - 1] - &q[k]);
        }
    }
}
