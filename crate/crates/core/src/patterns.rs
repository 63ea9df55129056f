//! Alphabets with exact symbol probabilities, patterns over them, and the
//! prefix/suffix overlap tests the correlation formulas are built from.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::polyalg::{parse_rational, Rational};

/// Finite alphabet of i.i.d. symbols, each with a strictly positive exact probability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceModel {
    symbols: Vec<String>,
    probs: Vec<Rational>,
}

impl SourceModel {
    /// Validates the alphabet: at least two distinct, nonempty, prefix-free
    /// labels with positive probabilities summing to exactly 1.
    pub fn new(symbols: Vec<String>, probs: Vec<Rational>) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidModel(msg));
        if symbols.len() != probs.len() {
            return invalid("symbol and probability counts differ".into());
        }
        if symbols.len() < 2 {
            return invalid("at least two symbols are required".into());
        }
        if let Some(s) = symbols.iter().find(|s| s.is_empty()) {
            return invalid(format!("empty symbol label {s:?}"));
        }
        for (i, a) in symbols.iter().enumerate() {
            for b in &symbols[i + 1..] {
                if a == b {
                    return invalid(format!("duplicate symbol {a:?}"));
                }
                if a.starts_with(b.as_str()) || b.starts_with(a.as_str()) {
                    return invalid(format!("symbol labels {a:?} and {b:?} are ambiguous"));
                }
            }
        }
        if let Some((s, p)) = symbols.iter().zip(&probs).find(|(_, p)| !p.is_positive()) {
            return invalid(format!("symbol {s:?} has non-positive probability {p}"));
        }
        let total: Rational = probs.iter().sum();
        if !total.is_one() {
            return invalid(format!("probabilities sum to {total}, not 1"));
        }
        Ok(SourceModel { symbols, probs })
    }

    /// Fair coin over `H`, `T`.
    pub fn fair_coin() -> Self {
        Self::coin(Rational::new(1.into(), 2.into())).unwrap()
    }

    /// Biased coin with `P(H) = p`, `P(T) = 1 - p`.
    pub fn coin(p: Rational) -> Result<Self> {
        let q = Rational::one() - &p;
        Self::new(vec!["H".into(), "T".into()], vec![p, q])
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn probs(&self) -> &[Rational] {
        &self.probs
    }

    pub fn label(&self, symbol: usize) -> &str {
        &self.symbols[symbol]
    }

    pub fn prob(&self, symbol: usize) -> &Rational {
        &self.probs[symbol]
    }

    /// Probability of a run of symbols; the empty run has probability 1.
    pub fn probability_of(&self, run: &[usize]) -> Rational {
        run.iter()
            .fold(empty_pattern_probability(), |acc, &a| acc * &self.probs[a])
    }
}

impl FromStr for SourceModel {
    type Err = Error;

    /// Parses `"SYMBOL:RATIONAL,..."`, for example `"H:1/2,T:1/2"`.
    fn from_str(text: &str) -> Result<Self> {
        let mut symbols = Vec::new();
        let mut probs = Vec::new();
        for item in text.split(',') {
            let (sym, p) = item
                .rsplit_once(':')
                .ok_or_else(|| Error::InvalidModel(format!("expected SYMBOL:PROB, got {item:?}")))?;
            symbols.push(sym.trim().to_string());
            probs.push(parse_rational(p)?);
        }
        SourceModel::new(symbols, probs)
    }
}

impl fmt::Display for SourceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, p)) in self.symbols.iter().zip(&self.probs).enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}:{p}")?;
        }
        Ok(())
    }
}

/// `P(A^(0))`: the empty string has probability 1.
pub fn empty_pattern_probability() -> Rational {
    Rational::one()
}

/// Nonempty string of symbol indices into a [`SourceModel`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    symbols: Vec<usize>,
}

impl Pattern {
    pub fn new(symbols: Vec<usize>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(Pattern { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    /// First `k` symbols.
    pub fn prefix(&self, k: usize) -> &[usize] {
        &self.symbols[..k]
    }

    /// Last `k` symbols.
    pub fn suffix(&self, k: usize) -> &[usize] {
        &self.symbols[self.symbols.len() - k..]
    }

    pub fn concat(&self, other: &Pattern) -> Pattern {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Pattern { symbols }
    }

    /// True when `self` occurs contiguously inside `other`.
    pub fn is_substring_of(&self, other: &Pattern) -> bool {
        self.len() <= other.len() && other.symbols.windows(self.len()).any(|w| w == self.symbols)
    }

    pub fn fits(&self, model: &SourceModel) -> bool {
        self.symbols.iter().all(|&a| a < model.len())
    }

    pub fn display<'a>(&'a self, model: &'a SourceModel) -> PatternDisplay<'a> {
        PatternDisplay {
            pattern: self,
            model,
        }
    }
}

pub struct PatternDisplay<'a> {
    pattern: &'a Pattern,
    model: &'a SourceModel,
}

impl fmt::Display for PatternDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &a in &self.pattern.symbols {
            f.write_str(self.model.label(a))?;
        }
        Ok(())
    }
}

/// Splits `text` into alphabet symbols by longest match over the labels.
pub fn parse_pattern(text: &str, model: &SourceModel) -> Result<Pattern> {
    if text.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let mut symbols = Vec::new();
    let mut pos = 0;
    while pos < text.len() {
        let rest = &text[pos..];
        let (idx, label) = model
            .symbols()
            .iter()
            .enumerate()
            .filter(|(_, s)| rest.starts_with(s.as_str()))
            .max_by_key(|(_, s)| s.len())
            .ok_or_else(|| Error::UnknownSymbol {
                text: text.to_string(),
                position: pos,
            })?;
        symbols.push(idx);
        pos += label.len();
    }
    Pattern::new(symbols)
}

pub fn pattern_probability(a: &Pattern, model: &SourceModel) -> Rational {
    model.probability_of(a.symbols())
}

/// `[A_i(k) = A_j^(k)]`: do the first `k` symbols of `a_i` equal the last `k` of `a_j`?
pub fn overlap_indicator(a_i: &Pattern, a_j: &Pattern, k: usize) -> Result<bool> {
    let max = a_i.len().min(a_j.len());
    if k == 0 || k > max {
        return Err(Error::IndexOutOfRange {
            index: k,
            len: max,
        });
    }
    Ok(overlaps(a_i, a_j, k))
}

pub(crate) fn overlaps(a_i: &Pattern, a_j: &Pattern, k: usize) -> bool {
    a_i.prefix(k) == a_j.suffix(k)
}

/// Validated game: an alphabet plus `m >= 1` distinct, mutually substring-free patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameSpec {
    model: SourceModel,
    patterns: Vec<Pattern>,
}

impl GameSpec {
    /// Parses each pattern text against `model`, then validates the set.
    pub fn parse<S: AsRef<str>>(model: SourceModel, texts: &[S]) -> Result<Self> {
        let patterns = texts
            .iter()
            .map(|t| parse_pattern(t.as_ref().trim(), &model))
            .collect::<Result<Vec<_>>>()?;
        validate_pattern_set(patterns, model)
    }

    pub fn model(&self) -> &SourceModel {
        &self.model
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn players(&self) -> usize {
        self.patterns.len()
    }

    pub fn pattern_text(&self, i: usize) -> String {
        self.patterns[i].display(&self.model).to_string()
    }
}

/// Checks the hypotheses every solver formula relies on. Indices in error
/// messages are 1-based.
pub fn validate_pattern_set(patterns: Vec<Pattern>, model: SourceModel) -> Result<GameSpec> {
    if patterns.is_empty() {
        return Err(Error::NoPatterns);
    }
    if let Some(i) = patterns.iter().position(|p| !p.fits(&model)) {
        return Err(Error::AlphabetMismatch { index: i + 1 });
    }
    for (i, a) in patterns.iter().enumerate() {
        for (j, b) in patterns.iter().enumerate().skip(i + 1) {
            if a == b {
                return Err(Error::DuplicatePattern {
                    first: i + 1,
                    second: j + 1,
                    pattern: a.display(&model).to_string(),
                });
            }
        }
    }
    for (i, a) in patterns.iter().enumerate() {
        for (j, b) in patterns.iter().enumerate() {
            if i != j && a.is_substring_of(b) {
                return Err(Error::Substring {
                    inner: i + 1,
                    outer: j + 1,
                    inner_text: a.display(&model).to_string(),
                    outer_text: b.display(&model).to_string(),
                });
            }
        }
    }
    Ok(GameSpec { model, patterns })
}
