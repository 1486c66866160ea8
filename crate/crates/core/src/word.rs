//! Nonempty words over the two-letter alphabet `{a, b}`.
//!
//! This is the base algebra every other module builds on: concatenation,
//! the two successor operations, the segment relations `B`, `E` and `⊆p`,
//! the prefix pre-order `R`, b-tallies and tractability.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// One of the two letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Digit {
    A,
    B,
}

impl Digit {
    pub fn as_byte(self) -> u8 {
        match self {
            Digit::A => b'a',
            Digit::B => b'b',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("empty word: words must contain at least one letter")]
    Empty,
    #[error("invalid character {found:?} at offset {offset}: words use only 'a' and 'b'")]
    InvalidChar { found: char, offset: usize },
}

/// A nonempty finite string of `a`s and `b`s.
///
/// The derived ordering is plain lexicographic order with `a < b` and a
/// proper prefix before its extensions, which is exactly lexical precedence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    /// Builds a word from raw bytes, validating the alphabet.
    pub fn from_bytes(bytes: &[u8]) -> Result<Word, WordError> {
        if bytes.is_empty() {
            return Err(WordError::Empty);
        }
        if let Some(offset) = bytes.iter().position(|&c| c != b'a' && c != b'b') {
            let found = bytes[offset] as char;
            return Err(WordError::InvalidChar { found, offset });
        }
        Ok(Word(bytes.to_vec()))
    }

    pub(crate) fn from_vec_unchecked(bytes: Vec<u8>) -> Word {
        debug_assert!(!bytes.is_empty() && bytes.iter().all(|&c| c == b'a' || c == b'b'));
        Word(bytes)
    }

    pub fn a() -> Word {
        Word(vec![b'a'])
    }

    pub fn b() -> Word {
        Word(vec![b'b'])
    }

    pub fn digit(d: Digit) -> Word {
        Word(vec![d.as_byte()])
    }

    /// The tally of `n` b's. Panics on `n == 0`.
    pub fn tally(n: usize) -> Word {
        assert!(n > 0, "tallies are nonempty");
        Word(vec![b'b'; n])
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        // the alphabet is ASCII
        std::str::from_utf8(&self.0).expect("words are ASCII")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; present for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn digits(&self) -> impl Iterator<Item = Digit> + '_ {
        self.0.iter().map(|&c| if c == b'a' { Digit::A } else { Digit::B })
    }

    pub fn is_a(&self) -> bool {
        self.0 == b"a"
    }

    pub fn is_digit(&self) -> bool {
        self.0.len() == 1
    }

    /// `x*y`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut bytes = Vec::with_capacity(self.len() + other.len());
        bytes.extend_from_slice(&self.0);
        bytes.extend_from_slice(&other.0);
        Word(bytes)
    }

    /// Appends a single digit.
    pub fn push(&self, d: Digit) -> Word {
        let mut bytes = self.0.clone();
        bytes.push(d.as_byte());
        Word(bytes)
    }

    /// The string successor: `S(a) = b`, otherwise `S(x) = x*b`.
    pub fn succ(&self) -> Word {
        if self.is_a() {
            Word::b()
        } else {
            self.push(Digit::B)
        }
    }

    /// Drops the first digit, if anything remains.
    pub fn tail(&self) -> Option<Word> {
        (self.len() > 1).then(|| Word(self.0[1..].to_vec()))
    }

    /// Drops the last digit, if anything remains.
    pub fn init(&self) -> Option<Word> {
        (self.len() > 1).then(|| Word(self.0[..self.len() - 1].to_vec()))
    }

    pub fn first_digit(&self) -> Digit {
        if self.0[0] == b'a' {
            Digit::A
        } else {
            Digit::B
        }
    }

    pub fn last_digit(&self) -> Digit {
        if self.0[self.len() - 1] == b'a' {
            Digit::A
        } else {
            Digit::B
        }
    }

    pub fn segments(&self, other: &Word) -> SegmentRelation {
        segment_relation(self, other)
    }

    /// `x ⊆p y`.
    pub fn is_part_of(&self, other: &Word) -> bool {
        contains(&other.0, &self.0)
    }

    pub fn is_tally(&self) -> bool {
        self.0.iter().all(|&c| c == b'b')
    }

    /// Length of the longest run of b's (0 when no b occurs).
    pub fn longest_b_run(&self) -> usize {
        longest_b_run(&self.0)
    }

    pub fn tally_ops(&self) -> TallyReport {
        tally_ops(self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.as_str())
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some((offset, found)) = s.char_indices().find(|&(_, c)| c != 'a' && c != 'b') {
            return Err(WordError::InvalidChar { found, offset });
        }
        Word::from_bytes(s.as_bytes())
    }
}

impl TryFrom<&str> for Word {
    type Error = WordError;

    fn try_from(s: &str) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// Test helper: parse a literal that is known to be valid.
pub fn w(s: &str) -> Word {
    s.parse().unwrap_or_else(|e| panic!("bad word literal {s:?}: {e}"))
}

/// A run of b's, identified by its length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tally(usize);

impl Tally {
    pub fn new(len: usize) -> Option<Tally> {
        (len > 0).then_some(Tally(len))
    }

    pub fn len(self) -> usize {
        self.0
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn to_word(self) -> Word {
        Word::tally(self.0)
    }

    /// The next longer tally.
    pub fn succ(self) -> Tally {
        Tally(self.0 + 1)
    }
}

impl TryFrom<&Word> for Tally {
    type Error = ();

    fn try_from(w: &Word) -> Result<Self, ()> {
        if w.is_tally() {
            Ok(Tally(w.len()))
        } else {
            Err(())
        }
    }
}

impl fmt::Display for Tally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.0 {
            f.write_str("b")?;
        }
        Ok(())
    }
}

/// How `x` sits inside `y`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SegmentRelation {
    /// `xBy`: x is a proper prefix of y.
    pub begins: bool,
    /// `xEy`: x is a proper suffix of y.
    pub ends: bool,
    /// `y = y1*(x*y2)` for some words y1, y2.
    pub within: bool,
    pub equal: bool,
}

impl SegmentRelation {
    /// `x ⊆p y`.
    pub fn is_part(&self) -> bool {
        self.equal || self.begins || self.ends || self.within
    }
}

pub fn segment_relation(x: &Word, y: &Word) -> SegmentRelation {
    let (xs, ys) = (x.as_bytes(), y.as_bytes());
    let equal = xs == ys;
    let shorter = xs.len() < ys.len();
    let begins = shorter && ys.starts_with(xs);
    let ends = shorter && ys.ends_with(xs);
    let within = xs.len() + 2 <= ys.len() && contains(&ys[1..ys.len() - 1], xs);
    SegmentRelation {
        begins,
        ends,
        within,
        equal,
    }
}

pub(crate) fn contains(hay: &[u8], needle: &[u8]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

pub(crate) fn longest_b_run(bytes: &[u8]) -> usize {
    let mut best = 0;
    let mut cur = 0;
    for &c in bytes {
        if c == b'b' {
            cur += 1;
            best = best.max(cur);
        } else {
            cur = 0;
        }
    }
    best
}

/// `xRy ≡ (x=a & ¬y=a) ∨ xBy`.
pub fn r_less(x: &Word, y: &Word) -> bool {
    (x.is_a() && !y.is_a()) || segment_relation(x, y).begins
}

/// `x ≤ y`: the partial order induced by `R` (every standard word is tractable).
pub fn leq(x: &Word, y: &Word) -> bool {
    x == y || r_less(x, y)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TallyReport {
    pub is_tally: bool,
    pub is_digit: bool,
    /// Longest run of b's occurring in the word.
    pub max_occurring: Option<Tally>,
    /// Shortest tally that does not occur in the word.
    pub min_nonoccurring: Tally,
}

pub fn tally_ops(w: &Word) -> TallyReport {
    let run = w.longest_b_run();
    TallyReport {
        is_tally: w.is_tally(),
        is_digit: w.is_digit(),
        max_occurring: Tally::new(run),
        min_nonoccurring: Tally(run + 1),
    }
}

/// `I0(y) ≡ ∀x (xRy ∨ x=y → ¬xRx)`.
///
/// The only words with `xRy ∨ x=y` are `a`, the proper prefixes of `y` and `y`
/// itself, so the quantifier is checked over exactly that finite range.
pub fn is_tractable(y: &Word) -> bool {
    let bytes = y.as_bytes();
    let mut candidates: Vec<Word> = (1..=bytes.len())
        .map(|k| Word::from_vec_unchecked(bytes[..k].to_vec()))
        .collect();
    candidates.push(Word::a());
    candidates
        .iter()
        .filter(|x| r_less(x, y) || *x == y)
        .all(|x| !r_less(x, x))
}

/// Every word of length `1..=max_len`, shortest first, then lexicographic.
pub fn words_up_to(max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        for bits in 0u64..(1u64 << len) {
            let bytes = (0..len)
                .map(|i| {
                    if bits >> (len - 1 - i) & 1 == 0 {
                        b'a'
                    } else {
                        b'b'
                    }
                })
                .collect();
            out.push(Word(bytes));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concat_examples() {
        assert_eq!(w("a").concat(&w("b")), w("ab"));
        assert_eq!(w("ab").concat(&w("ba")), w("abba"));
        let left = w("a").concat(&w("b")).concat(&w("a"));
        let right = w("a").concat(&w("b").concat(&w("a")));
        assert_eq!(left, right);
        assert_eq!(left, w("aba"));
    }

    #[test]
    fn succ_examples() {
        assert_eq!(w("a").succ(), w("b"));
        assert_eq!(w("b").succ(), w("bb"));
        assert_eq!(w("ba").succ(), w("bab"));
    }

    #[test]
    fn segment_examples() {
        let r = segment_relation(&w("a"), &w("ab"));
        assert!(r.begins && !r.ends && !r.within && !r.equal);
        let r = segment_relation(&w("aa"), &w("baab"));
        assert!(r.within && r.is_part() && !r.begins && !r.ends);
        assert_eq!(segment_relation(&w("ab"), &w("a")), SegmentRelation::default());
        assert!(segment_relation(&w("ab"), &w("ab")).equal);
    }

    #[test]
    fn r_less_examples() {
        assert!(r_less(&w("a"), &w("b")));
        assert!(r_less(&w("b"), &w("ba")));
        assert!(!r_less(&w("a"), &w("a")));
        assert!(!r_less(&w("b"), &w("b")));
    }

    #[test]
    fn tally_examples() {
        let r = tally_ops(&w("aba"));
        assert!(!r.is_tally);
        assert_eq!(r.max_occurring, Tally::new(1));
        assert_eq!(r.min_nonoccurring, Tally(2));

        let r = tally_ops(&w("a"));
        assert!(r.is_digit);
        assert_eq!(r.max_occurring, None);
        assert_eq!(r.min_nonoccurring, Tally(1));

        let r = tally_ops(&w("bb"));
        assert!(r.is_tally);
        assert_eq!(r.max_occurring, Tally::new(2));
        assert_eq!(r.min_nonoccurring, Tally(3));
    }

    // oracle for the aba example: every b-tally segment of the word
    #[test]
    fn tally_segments_by_enumeration() {
        let x = w("aba");
        let occurring: Vec<usize> = (1..=x.len())
            .filter(|&n| Word::tally(n).is_part_of(&x))
            .collect();
        assert_eq!(occurring, vec![1]);
    }

    #[test]
    fn tractability_examples() {
        assert!(is_tractable(&w("a")));
        assert!(is_tractable(&w("b")));
        assert!(is_tractable(&w("babb")));
    }

    #[test]
    fn parse_rejects_bad_text() {
        assert_eq!("".parse::<Word>(), Err(WordError::Empty));
        assert!(matches!(
            "abc".parse::<Word>(),
            Err(WordError::InvalidChar { found: 'c', offset: 2 })
        ));
        assert!(matches!("é".parse::<Word>(), Err(WordError::InvalidChar { .. })));
    }

    #[test]
    fn enumeration_order() {
        let ws: Vec<String> = words_up_to(2).iter().map(|w| w.to_string()).collect();
        assert_eq!(ws, ["a", "b", "aa", "ab", "ba", "bb"]);
        assert_eq!(words_up_to(12).len(), 8190);
    }

    #[test]
    fn tail_and_init_decompose() {
        assert_eq!(w("ab").tail(), Some(w("b")));
        assert_eq!(w("ab").init(), Some(w("a")));
        assert_eq!(w("a").tail(), None);
    }
}
