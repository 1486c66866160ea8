//! Step-ladder set codes.
//!
//! A set code lays out its members as frames `t₁·a·v·a·t₂` whose b-tally
//! markers strictly increase from left to right; the last frame repeats its
//! marker, which is then the longest tally in the code and envelops it. The
//! word `aa` codes the empty set.
//!
//! Canonical codes carry no material outside frames, list their members in the
//! tally-modified lexicographic order and use the shortest admissible marker
//! for every frame. Each finite set of words has exactly one canonical code,
//! which makes extensional equality decidable by comparing words.

use std::ops::Range;

use thiserror::Error;

use crate::oracle::FiniteWordSet;
use crate::order::{mlex_cmp, mlex_less};
use crate::word::{longest_b_run, Tally, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetCodeError {
    #[error("{0} is not a set code")]
    NotASet(Word),
    #[error("{0} is not a canonical set code")]
    NotCanonical(Word),
    #[error("a Quine code needs at least one member")]
    EmptyList,
}

/// Where a frame sits in its host code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrameKind {
    /// Opens the code and is followed by further material.
    First,
    /// Follows the initial segment `preceding` (which is followed by one `a`).
    Intermediate { preceding: Word },
    /// Closes the code with a repeated marker.
    Last,
    /// The whole code is this one frame.
    Sole,
}

impl FrameKind {
    pub fn is_first(&self) -> bool {
        matches!(self, FrameKind::First | FrameKind::Sole)
    }

    pub fn is_last(&self) -> bool {
        matches!(self, FrameKind::Last | FrameKind::Sole)
    }

    pub fn is_intermediate(&self) -> bool {
        matches!(self, FrameKind::Intermediate { .. })
    }
}

/// One framed member `t₁·a·v·a·t₂` of a code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub initial: Tally,
    /// The member `v`; the code stores it as `a·v·a`.
    pub member: Word,
    pub terminal: Tally,
    pub kind: FrameKind,
    /// Byte range of `t₁·a·v·a·t₂` in the host code.
    pub span: Range<usize>,
}

impl Frame {
    /// The stored form `a·v·a`.
    pub fn stored(&self) -> Word {
        Word::a().concat(&self.member).concat(&Word::a())
    }

    /// Byte range of the stored form `a·v·a`.
    pub fn stored_span(&self) -> Range<usize> {
        self.span.start + self.initial.len()..self.span.end - self.terminal.len()
    }
}

#[derive(Clone, Copy, Debug)]
struct Run {
    start: usize,
    len: usize,
}

impl Run {
    fn end(self) -> usize {
        self.start + self.len
    }
}

fn b_runs(x: &[u8]) -> Vec<Run> {
    let mut runs = Vec::new();
    let mut i = 0;
    while i < x.len() {
        if x[i] == b'b' {
            let start = i;
            while i < x.len() && x[i] == b'b' {
                i += 1;
            }
            runs.push(Run {
                start,
                len: i - start,
            });
        } else {
            i += 1;
        }
    }
    runs
}

/// Every frame of `x` in left-to-right order, whether or not `x` is enveloped.
///
/// A frame opens at a b-run that either starts the word or is preceded by a
/// nonempty segment `w·a` whose runs are all shorter; its payload extends to
/// the next run at least as long as the marker.
pub fn scan_frames(x: &Word) -> Vec<Frame> {
    let bytes = x.as_bytes();
    let n = bytes.len();
    let runs = b_runs(bytes);
    let mut frames = Vec::new();
    let mut longest_before = 0;
    for (i, &run) in runs.iter().enumerate() {
        let opens = run.start == 0 || (run.start >= 2 && run.len > longest_before);
        longest_before = longest_before.max(run.len);
        if !opens {
            continue;
        }
        let Some(close) = runs[i + 1..].iter().find(|r| r.len >= run.len) else {
            continue;
        };
        let stored = &bytes[run.end()..close.start];
        if stored.len() < 3 {
            continue;
        }
        let kind = if close.len == run.len {
            if close.end() != n {
                continue;
            }
            if run.start == 0 {
                FrameKind::Sole
            } else {
                FrameKind::Last
            }
        } else {
            // the closing marker must be followed by `a` and at least one more letter
            if close.end() + 1 >= n {
                continue;
            }
            if run.start == 0 {
                FrameKind::First
            } else {
                FrameKind::Intermediate {
                    preceding: Word::from_vec_unchecked(bytes[..run.start - 1].to_vec()),
                }
            }
        };
        frames.push(Frame {
            initial: Tally::new(run.len).expect("runs are nonempty"),
            member: Word::from_vec_unchecked(stored[1..stored.len() - 1].to_vec()),
            terminal: Tally::new(close.len).expect("runs are nonempty"),
            kind,
            span: run.start..close.end(),
        });
    }
    frames
}

/// The envelope of `x` and its frames, or `None` when no tally envelops `x`.
pub fn parse_frames(x: &Word) -> Option<(Tally, Vec<Frame>)> {
    let frames = scan_frames(x);
    let envelope = Tally::new(x.longest_b_run())?;
    if !frames.iter().any(|f| f.kind.is_first()) {
        return None;
    }
    if !frames.iter().any(|f| f.kind.is_last() && f.initial == envelope) {
        return None;
    }
    for (i, f) in frames.iter().enumerate() {
        for g in &frames[i + 1..] {
            // one marker per member, one member per marker
            if (f.member == g.member) != (f.initial == g.initial) {
                return None;
            }
        }
    }
    Some((envelope, frames))
}

fn is_empty_code(x: &Word) -> bool {
    x.as_bytes() == b"aa"
}

pub fn is_set(x: &Word) -> bool {
    is_empty_code(x) || parse_frames(x).is_some()
}

/// The members of the set coded by `x`.
pub fn members(x: &Word) -> Result<FiniteWordSet, SetCodeError> {
    if is_empty_code(x) {
        return Ok(FiniteWordSet::new());
    }
    let (_, frames) = parse_frames(x).ok_or_else(|| SetCodeError::NotASet(x.clone()))?;
    Ok(frames.into_iter().map(|f| f.member).collect())
}

/// `y ε x`.
pub fn is_member(y: &Word, x: &Word) -> bool {
    parse_frames(x).is_some_and(|(_, frames)| frames.iter().any(|f| &f.member == y))
}

/// `x ~ y`: both are set codes with the same members.
pub fn same_members(x: &Word, y: &Word) -> bool {
    match (members(x), members(y)) {
        (Ok(m), Ok(n)) => m == n,
        _ => false,
    }
}

/// Classification flags of a word viewed as a set code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeClass {
    pub is_set: bool,
    /// No letter `a` lies outside a frame.
    pub is_min: bool,
    /// Frame order refines the tally-modified lexicographic order.
    pub is_lex: bool,
    /// Every frame uses the shortest admissible initial marker.
    pub is_special: bool,
    pub is_canonical: bool,
    pub envelope: Option<Tally>,
}

fn lex_ordered(frames: &[Frame]) -> bool {
    frames
        .iter()
        .enumerate()
        .all(|(i, f)| frames[i + 1..].iter().all(|g| mlex_less(&f.member, &g.member)))
}

/// The marker a frame must carry when every earlier marker is at most `prev`.
fn shortest_marker(prev: usize, member: &Word) -> usize {
    (prev + 1).max(member.longest_b_run() + 1)
}

pub fn classify(x: &Word) -> CodeClass {
    if is_empty_code(x) {
        return CodeClass {
            is_set: true,
            is_min: true,
            is_lex: true,
            is_special: true,
            is_canonical: true,
            envelope: None,
        };
    }
    let frames = scan_frames(x);
    let is_lex = lex_ordered(&frames);
    let Some((envelope, frames)) = parse_frames(x) else {
        return CodeClass {
            is_set: false,
            is_min: false,
            is_lex,
            is_special: false,
            is_canonical: false,
            envelope: None,
        };
    };
    let bytes = x.as_bytes();
    let is_min = (1..bytes.len().saturating_sub(1))
        .filter(|&i| bytes[i] == b'a')
        .all(|i| frames.iter().any(|f| f.stored_span().contains(&i)));
    let mut prev = 0;
    let mut is_special = true;
    for f in &frames {
        if f.initial.len() != shortest_marker(prev, &f.member) {
            is_special = false;
        }
        prev = f.initial.len();
    }
    CodeClass {
        is_set: true,
        is_min,
        is_lex,
        is_special,
        is_canonical: is_min && is_lex && is_special,
        envelope: Some(envelope),
    }
}

pub fn is_canonical(x: &Word) -> bool {
    classify(x).is_canonical
}

/// The unique canonical code of `set`.
pub fn canonical_encode(set: &FiniteWordSet) -> Word {
    if set.is_empty() {
        return Word::from_vec_unchecked(b"aa".to_vec());
    }
    let mut sorted: Vec<&Word> = set.iter().collect();
    sorted.sort_by(|u, v| mlex_cmp(u, v));
    let mut out = Vec::new();
    let mut marker = 0;
    for w in sorted {
        marker = shortest_marker(marker, w);
        out.extend(std::iter::repeat_n(b'b', marker));
        out.push(b'a');
        out.extend_from_slice(w.as_bytes());
        out.push(b'a');
    }
    out.extend(std::iter::repeat_n(b'b', marker));
    Word::from_vec_unchecked(out)
}

/// Canonical adjunction: the canonical code of `members(x) ∪ {y}`.
pub fn adjoin(x: &Word, y: &Word) -> Result<Word, SetCodeError> {
    if !is_canonical(x) {
        return Err(SetCodeError::NotCanonical(x.clone()));
    }
    let mut set = members(x)?;
    if set.contains(y) {
        return Ok(x.clone());
    }
    set.insert(y.clone());
    Ok(canonical_encode(&set))
}

/// Quine's single-marker code `t·a·w₁·a·t·a·w₂·a·t … t`, in the given order.
pub fn quine_encode(ws: &[Word]) -> Result<Word, SetCodeError> {
    if ws.is_empty() {
        return Err(SetCodeError::EmptyList);
    }
    let marker = ws.iter().map(|w| w.longest_b_run()).max().unwrap_or(0) + 1;
    let mut out = vec![b'b'; marker];
    for w in ws {
        out.push(b'a');
        out.extend_from_slice(w.as_bytes());
        out.push(b'a');
        out.extend(std::iter::repeat_n(b'b', marker));
    }
    Ok(Word::from_vec_unchecked(out))
}

/// `x ε w` in Quine's coding: `t·a·x·a·t` occurs in `w` for the longest tally
/// `t` of `w`, and `t` does not occur in `x`.
pub fn quine_member(x: &Word, w: &Word) -> bool {
    (1..=longest_b_run(w.as_bytes())).any(|n| {
        let t = Word::tally(n);
        let framed = t.concat(&Word::a()).concat(x).concat(&Word::a()).concat(&t);
        crate::order::definitional::max_t(&t, w) && !t.is_part_of(x) && framed.is_part_of(w)
    })
}
