use std::collections::VecDeque;

use crate::patterns::GameSpec;

/// Deterministic absorbing chain over the prefixes of all patterns.
///
/// State 0 is the empty prefix. The successor of prefix `u` on symbol `a` is the
/// longest suffix of `ua` that is itself a prefix of some pattern. States that
/// spell a whole pattern are absorbing and loop to themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automaton {
    alphabet: usize,
    transitions: Vec<usize>,
    prefixes: Vec<Vec<usize>>,
    absorbing: Vec<Option<usize>>,
}

impl Automaton {
    pub const START: usize = 0;

    pub fn states(&self) -> usize {
        self.prefixes.len()
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn next(&self, state: usize, symbol: usize) -> usize {
        self.transitions[state * self.alphabet + symbol]
    }

    /// Player whose pattern this state completes, if any.
    pub fn winner(&self, state: usize) -> Option<usize> {
        self.absorbing[state]
    }

    pub fn prefix(&self, state: usize) -> &[usize] {
        &self.prefixes[state]
    }

    pub fn absorbing_states(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.absorbing
            .iter()
            .enumerate()
            .filter_map(|(s, w)| w.map(|p| (s, p)))
    }

    /// Checks totality, absorbing self-loops, and one absorbing state per player.
    pub fn check_invariants(&self, players: usize) -> Result<(), String> {
        if self.transitions.len() != self.states() * self.alphabet {
            return Err("transition table is not total".into());
        }
        if let Some(t) = self.transitions.iter().find(|&&t| t >= self.states()) {
            return Err(format!("transition to missing state {t}"));
        }
        let mut seen = vec![false; players];
        for (state, player) in self.absorbing_states() {
            if player >= players || seen[player] {
                return Err(format!("bad absorbing label {player} on state {state}"));
            }
            seen[player] = true;
            if (0..self.alphabet).any(|a| self.next(state, a) != state) {
                return Err(format!("absorbing state {state} can be left"));
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err("some player has no absorbing state".into());
        }
        Ok(())
    }
}

/// Builds the prefix automaton with Aho-Corasick failure links.
pub fn build_automaton(spec: &GameSpec) -> Automaton {
    let alphabet = spec.model().len();
    let mut children: Vec<Vec<Option<usize>>> = vec![vec![None; alphabet]];
    let mut prefixes: Vec<Vec<usize>> = vec![Vec::new()];
    let mut absorbing: Vec<Option<usize>> = vec![None];

    for (player, pattern) in spec.patterns().iter().enumerate() {
        let mut node = Automaton::START;
        for &a in pattern.symbols() {
            node = match children[node][a] {
                Some(c) => c,
                None => {
                    let id = prefixes.len();
                    let mut prefix = prefixes[node].clone();
                    prefix.push(a);
                    children.push(vec![None; alphabet]);
                    prefixes.push(prefix);
                    absorbing.push(None);
                    children[node][a] = Some(id);
                    id
                }
            };
        }
        absorbing[node] = Some(player);
    }

    let n = prefixes.len();
    let mut transitions = vec![Automaton::START; n * alphabet];
    let mut fail = vec![Automaton::START; n];
    let mut queue = VecDeque::new();
    for a in 0..alphabet {
        if let Some(c) = children[Automaton::START][a] {
            transitions[a] = c;
            queue.push_back(c);
        }
    }
    while let Some(u) = queue.pop_front() {
        for a in 0..alphabet {
            let via_fail = transitions[fail[u] * alphabet + a];
            match children[u][a] {
                Some(c) => {
                    fail[c] = via_fail;
                    transitions[u * alphabet + a] = c;
                    queue.push_back(c);
                }
                None => transitions[u * alphabet + a] = via_fail,
            }
        }
    }
    for (state, w) in absorbing.iter().enumerate() {
        if w.is_some() {
            for a in 0..alphabet {
                transitions[state * alphabet + a] = state;
            }
        }
    }

    Automaton {
        alphabet,
        transitions,
        prefixes,
        absorbing,
    }
}
