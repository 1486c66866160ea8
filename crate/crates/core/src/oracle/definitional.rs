//! Literal evaluation of the set-code definitions.
//!
//! Every quantifier is read as a search over the segments of the code (or of
//! one of its arguments), and every defined predicate is evaluated from its
//! defining formula. Nothing here calls into [`crate::setcode`], so the
//! results can be compared against the structural parser.

use std::collections::BTreeSet;

use crate::order::definitional::{max_plus_t, max_t, mlex_less};
use crate::word::{is_tractable, r_less, segment_relation, Word};

use super::FiniteWordSet;

fn is_tally(t: &Word) -> bool {
    t.is_tally()
}

/// `xBy`.
fn begins(x: &Word, y: &Word) -> bool {
    segment_relation(x, y).begins
}

/// `t₁ < t₂` on tallies: both tractable and `t₁ R t₂`.
fn less(t1: &Word, t2: &Word) -> bool {
    is_tractable(t1) && is_tractable(t2) && r_less(t1, t2)
}

fn less_eq(t1: &Word, t2: &Word) -> bool {
    t1 == t2 || less(t1, t2)
}

fn cat(parts: &[&Word]) -> Word {
    let mut out = parts[0].clone();
    for p in &parts[1..] {
        out = out.concat(p);
    }
    out
}

/// Distinct segments of `x`.
pub fn segments_of(x: &Word) -> Vec<Word> {
    let bytes = x.as_bytes();
    let mut seen = BTreeSet::new();
    for i in 0..bytes.len() {
        for j in i + 1..=bytes.len() {
            seen.insert(&bytes[i..j]);
        }
    }
    seen.into_iter()
        .map(|s| Word::from_bytes(s).expect("segment of a word"))
        .collect()
}

/// Proper prefixes of `x`.
fn prefixes_of(x: &Word) -> impl Iterator<Item = Word> + '_ {
    (1..x.len()).map(|k| Word::from_bytes(&x.as_bytes()[..k]).expect("prefix"))
}

/// `Pref(u, t)`: `u = a·y·a` and `t` is longer than every tally of `u`.
pub fn pref(u: &Word, t: &Word) -> bool {
    // the only candidate for y is u with its first and last letters removed
    let b = u.as_bytes();
    is_tally(t) && b.len() >= 3 && b[0] == b'a' && b[b.len() - 1] == b'a' && max_plus_t(t, u)
}

pub fn firstf(x: &Word, t1: &Word, u: &Word, t2: &Word) -> bool {
    is_tally(t2)
        && pref(u, t1)
        && ((t1 == t2 && cat(&[t1, u, t2]) == *x)
            || (less(t1, t2) && begins(&cat(&[t1, u, t2, &Word::a()]), x)))
}

pub fn lastf(x: &Word, t1: &Word, u: &Word, t2: &Word) -> bool {
    let a = Word::a();
    pref(u, t1)
        && is_tally(t2)
        && t1 == t2
        && (cat(&[t1, u, t2]) == *x
            || prefixes_of(x).any(|w| cat(&[&w, &a, t1, u, t2]) == *x && max_plus_t(t1, &w)))
}

pub fn intf(x: &Word, w: &Word, t1: &Word, u: &Word, t2: &Word) -> bool {
    let a = Word::a();
    // ∃w₁ (w·a·t₁·u·t₂·a·w₁ = x): x extends the left part by a nonempty word
    let left = cat(&[w, &a, t1, u, t2, &a]);
    is_tally(t2) && begins(&left, x) && pref(u, t1) && less(t1, t2) && max_plus_t(t1, w)
}

/// A triple `(t₁, u, t₂)` with `Fr(x, t₁, u, t₂)`, together with the
/// disjuncts of `Fr` that hold for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameTriple {
    pub initial: Word,
    /// The stored form `a·v·a`.
    pub stored: Word,
    pub terminal: Word,
    pub first: bool,
    pub last: bool,
    /// Every `w` with `Intf(x, w, t₁, u, t₂)`.
    pub intermediate_after: Vec<Word>,
}

impl FrameTriple {
    /// The framed member `v` of the stored form `a·v·a`.
    pub fn member(&self) -> Word {
        let s = self.stored.as_bytes();
        Word::from_bytes(&s[1..s.len() - 1]).expect("stored form has length at least 3")
    }
}

/// Every triple satisfying `Fr(x, ·, ·, ·)`. All three components are
/// segments of `x` whenever `Fr` holds, so the search is exhaustive.
pub fn frame_triples(x: &Word) -> Vec<FrameTriple> {
    let segs = segments_of(x);
    let tallies: Vec<&Word> = segs.iter().filter(|s| is_tally(s)).collect();
    let mut out = Vec::new();
    for &t1 in &tallies {
        for u in &segs {
            // t₁·u ⊆p x in every disjunct of Fr
            if !t1.concat(u).is_part_of(x) || !pref(u, t1) {
                continue;
            }
            for &t2 in &tallies {
                let first = firstf(x, t1, u, t2);
                let last = lastf(x, t1, u, t2);
                let intermediate_after: Vec<Word> =
                    prefixes_of(x).filter(|w| intf(x, w, t1, u, t2)).collect();
                if first || last || !intermediate_after.is_empty() {
                    out.push(FrameTriple {
                        initial: t1.clone(),
                        stored: u.clone(),
                        terminal: t2.clone(),
                        first,
                        last,
                        intermediate_after,
                    });
                }
            }
        }
    }
    out
}

/// `Env(t, x)`, conditions (a) to (e).
pub fn envelops(t: &Word, x: &Word, frames: &[FrameTriple]) -> bool {
    let a = max_t(t, x);
    let b = frames.iter().any(|f| f.first);
    let c = frames
        .iter()
        .any(|f| f.last && &f.initial == t && &f.terminal == t);
    let d = frames.iter().all(|f| {
        frames
            .iter()
            .all(|g| f.stored != g.stored || f.initial == g.initial)
    });
    let e = frames.iter().all(|f| {
        frames
            .iter()
            .all(|g| f.initial != g.initial || f.stored == g.stored)
    });
    a && b && c && d && e
}

/// The literal analysis of one word.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub code: Word,
    pub frames: Vec<FrameTriple>,
    /// Some tally `t ⊆p x` with `Env(t, x)`.
    pub envelope: Option<Word>,
}

impl Analysis {
    pub fn new(x: &Word) -> Self {
        let frames = frame_triples(x);
        let envelope = segments_of(x)
            .into_iter()
            .filter(is_tally)
            .find(|t| envelops(t, x, &frames));
        Analysis {
            code: x.clone(),
            frames,
            envelope,
        }
    }

    fn is_empty_code(&self) -> bool {
        self.code.as_bytes() == b"aa"
    }

    /// `Set(x) ≡ x = aa ∨ ∃t ⊆p x Env(t, x)`.
    pub fn is_set(&self) -> bool {
        self.is_empty_code() || self.envelope.is_some()
    }

    /// `y ε x`.
    pub fn is_member(&self, y: &Word) -> bool {
        let a = Word::a();
        let aya = cat(&[&a, y, &a]);
        self.envelope.is_some() && self.frames.iter().any(|f| f.stored == aya)
    }

    /// `{y : y ε x}`, or `None` when `x` is not a set code.
    pub fn members(&self) -> Option<FiniteWordSet> {
        if self.is_empty_code() {
            return Some(FiniteWordSet::new());
        }
        self.envelope.as_ref()?;
        Some(self.frames.iter().map(FrameTriple::member).collect())
    }

    /// `u <_x v`.
    pub fn frame_precedes(&self, u: &Word, v: &Word) -> bool {
        let a = Word::a();
        let (aua, ava) = (cat(&[&a, u, &a]), cat(&[&a, v, &a]));
        self.frames.iter().filter(|f| f.stored == aua).any(|f1| {
            self.frames.iter().filter(|f| f.stored == ava).any(|f3| {
                let outer = (f1.first && f1.initial != f3.initial)
                    || (f3.last && f1.initial != f3.initial);
                let inner = !f1.intermediate_after.is_empty()
                    && !f3.intermediate_after.is_empty()
                    && less_eq(&f1.terminal, &f3.initial);
                outer || inner
            })
        })
    }

    /// Framed members, the only candidates for either side of `<_x`.
    fn framed(&self) -> Vec<Word> {
        let set: BTreeSet<Word> = self.frames.iter().map(FrameTriple::member).collect();
        set.into_iter().collect()
    }

    /// `Lex⁺(x) ≡ ∀u, v (u <_x v → u < v)`.
    pub fn is_lex(&self) -> bool {
        let framed = self.framed();
        framed.iter().all(|u| {
            framed
                .iter()
                .all(|v| !self.frame_precedes(u, v) || mlex_less(u, v))
        })
    }

    /// `Occ(w₁, z, w₂, x, t₁, v, t₂)` for a frame triple of `x`.
    fn occ(&self, w1: &Word, z: &Word, w2: &Word, f: &FrameTriple) -> bool {
        let x = &self.code;
        let a = Word::a();
        let (t1, v, t2) = (&f.initial, &f.stored, &f.terminal);
        if cat(&[w1, z, w2]) != *x {
            return false;
        }
        let w1z = w1.concat(z);
        let t1v = t1.concat(v);
        let in_first = f.first && (t1 == w1 || begins(&w1z, &t1v) || w1z == t1v);
        if in_first {
            return true;
        }
        prefixes_of(x).any(|wp| {
            let located = f.intermediate_after.contains(&wp)
                || (f.last && cat(&[&wp, &a, t1, v, t2]) == *x);
            if !located {
                return false;
            }
            let head = cat(&[&wp, &a, t1]);
            head == *w1
                || prefixes_of(v).any(|v1| head.concat(&v1) == w1z)
                || head.concat(v) == w1z
        })
    }

    /// `MinSet(x)`: every inner occurrence of `a` lies within some frame.
    pub fn is_min(&self) -> bool {
        if !self.is_set() {
            return false;
        }
        let bytes = self.code.as_bytes();
        let a = Word::a();
        (1..bytes.len().saturating_sub(1))
            .filter(|&i| bytes[i] == b'a')
            .all(|i| {
                let w1 = Word::from_bytes(&bytes[..i]).expect("nonempty");
                let w2 = Word::from_bytes(&bytes[i + 1..]).expect("nonempty");
                self.frames.iter().any(|f| self.occ(&w1, &a, &w2, f))
            })
    }

    /// `Max⁺(t, v, x)`: `t` exceeds the initial marker of every frame whose
    /// member precedes `v`.
    pub fn max_plus(&self, t: &Word, v: &Word) -> bool {
        self.is_set()
            && self.is_member(v)
            && is_tally(t)
            && self
                .frames
                .iter()
                .all(|f| !self.frame_precedes(&f.member(), v) || less(&f.initial, t))
    }

    /// `MMax⁺T_b(t, v, x)`. Only competitors shorter than `t` can refute
    /// `t ≤ t'`.
    pub fn mmax_plus(&self, t: &Word, v: &Word) -> bool {
        self.max_plus(t, v)
            && (1..t.len()).all(|n| {
                let tp = Word::tally(n);
                !(self.max_plus(&tp, v) && max_plus_t(&tp, v))
            })
    }

    /// `Special(x)`.
    pub fn is_special(&self) -> bool {
        self.is_set()
            && self
                .frames
                .iter()
                .all(|f| self.mmax_plus(&f.initial, &f.member()))
    }

    /// `Set*(x) ≡ MinSet(x) ∧ Lex⁺(x) ∧ Special(x)`.
    pub fn is_canonical(&self) -> bool {
        self.is_min() && self.is_lex() && self.is_special()
    }

    pub fn classify(&self) -> DefClass {
        DefClass {
            is_set: self.is_set(),
            is_min: self.is_min(),
            is_lex: self.is_lex(),
            is_special: self.is_special(),
            is_canonical: self.is_canonical(),
        }
    }
}

/// Classification flags computed from the definitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DefClass {
    pub is_set: bool,
    pub is_min: bool,
    pub is_lex: bool,
    pub is_special: bool,
    pub is_canonical: bool,
}

pub fn classify(x: &Word) -> DefClass {
    Analysis::new(x).classify()
}

pub fn is_set(x: &Word) -> bool {
    Analysis::new(x).is_set()
}

pub fn members(x: &Word) -> Option<FiniteWordSet> {
    Analysis::new(x).members()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn two_frame_code_by_definition() {
        let an = Analysis::new(&w("baaabbababb"));
        assert_eq!(an.envelope, Some(w("bb")));
        assert_eq!(an.frames.len(), 2);
        let f = &an.frames.iter().find(|f| f.stored == w("aaa")).unwrap();
        assert!(f.first && !f.last);
        let g = &an.frames.iter().find(|f| f.stored == w("aba")).unwrap();
        assert!(g.last && !g.first);
        assert!(an.frame_precedes(&w("a"), &w("b")));
        assert!(!an.frame_precedes(&w("b"), &w("a")));
        assert!(an.is_canonical());
    }

    #[test]
    fn oversized_marker_is_not_special() {
        let c = classify(&w("bbaaabb"));
        assert!(c.is_set && c.is_min && c.is_lex && !c.is_special);
    }

    #[test]
    fn empty_code() {
        let c = classify(&w("aa"));
        assert!(c.is_set && c.is_canonical);
        assert_eq!(members(&w("aa")), Some(FiniteWordSet::new()));
    }

    #[test]
    fn non_sets() {
        assert!(!is_set(&w("ab")));
        assert!(!is_set(&w("baab")));
        assert_eq!(members(&w("bab")), None);
    }
}
