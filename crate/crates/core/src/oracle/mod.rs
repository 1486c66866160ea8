//! Ground truth that does not go through the set-code parser: plain finite
//! sets of words, exhaustive enumerators, a literal evaluator of the
//! set-code definitions ([`definitional`]) and a brute-force search for
//! canonical codes ([`brute`]).

pub mod brute;
pub mod definitional;

use std::collections::btree_set;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::order::mlex_cmp;
use crate::word::{Word, WordError};

pub use brute::{brute_canonical, OracleError};

/// A finite set of words with extensional equality.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteWordSet(BTreeSet<Word>);

impl FiniteWordSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, w: Word) -> bool {
        self.0.insert(w)
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.0.contains(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> btree_set::Iter<'_, Word> {
        self.0.iter()
    }

    /// `self ∪ {w}`.
    pub fn with(&self, w: Word) -> Self {
        let mut out = self.clone();
        out.insert(w);
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        Self(self.0.union(&other.0).cloned().collect())
    }

    /// Members sorted by the tally-modified lexicographic order.
    pub fn sorted_mlex(&self) -> Vec<Word> {
        let mut v: Vec<Word> = self.0.iter().cloned().collect();
        v.sort_by(mlex_cmp);
        v
    }
}

impl FromIterator<Word> for FiniteWordSet {
    fn from_iter<I: IntoIterator<Item = Word>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl IntoIterator for FiniteWordSet {
    type Item = Word;
    type IntoIter = btree_set::IntoIter<Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a FiniteWordSet {
    type Item = &'a Word;
    type IntoIter = btree_set::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Brace-comma text form, members in tally-modified lexicographic order.
impl fmt::Display for FiniteWordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.sorted_mlex().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FiniteWordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetTextError {
    #[error("set literal must be enclosed in braces, e.g. {{a,ab}}")]
    MissingBraces,
    #[error("bad member {index} in set literal: {source}")]
    BadMember { index: usize, source: WordError },
}

impl FromStr for FiniteWordSet {
    type Err = SetTextError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or(SetTextError::MissingBraces)?;
        if inner.trim().is_empty() {
            return Ok(Self::new());
        }
        inner
            .split(',')
            .enumerate()
            .map(|(index, part)| {
                part.trim()
                    .parse::<Word>()
                    .map_err(|source| SetTextError::BadMember { index, source })
            })
            .collect()
    }
}

/// All words of length `1..=max_len`, shortest first, then lexicographic.
pub fn enumerate_words(max_len: usize) -> Vec<Word> {
    crate::word::words_up_to(max_len)
}

/// All subsets of `enumerate_words(member_max_len)` with at most `max_size`
/// elements, by size and then in combination order.
pub fn enumerate_sets(member_max_len: usize, max_size: usize) -> Vec<FiniteWordSet> {
    let words = enumerate_words(member_max_len);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    for size in 0..=max_size.min(words.len()) {
        combinations(words.len(), size, 0, &mut chosen, &mut |idx| {
            out.push(idx.iter().map(|&i| words[i].clone()).collect());
        });
    }
    out
}

fn combinations(n: usize, k: usize, from: usize, chosen: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if chosen.len() == k {
        emit(chosen);
        return;
    }
    for i in from..n {
        if n - i < k - chosen.len() {
            break;
        }
        chosen.push(i);
        combinations(n, k, i + 1, chosen, emit);
        chosen.pop();
    }
}

/// All orderings of `items`.
pub fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}
