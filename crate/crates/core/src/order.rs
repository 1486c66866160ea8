//! Orderings on words: left roots, lexical precedence `≪`, comparison by the
//! shortest non-occurring tally (`◁`, `≈`), and the tally-modified
//! lexicographic order `<` used to sort the members of canonical codes.
//!
//! The functions at the top level compute directly from the structure of the
//! words. The [`definitional`] submodule evaluates the same relations by
//! quantifying over segments, and exists to cross-check the fast versions.

use std::cmp::Ordering;

use crate::word::{Tally, Word};

/// Outcome of a three-way comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderVerdict {
    Less,
    Equal,
    Greater,
}

impl From<Ordering> for OrderVerdict {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => OrderVerdict::Less,
            Ordering::Equal => OrderVerdict::Equal,
            Ordering::Greater => OrderVerdict::Greater,
        }
    }
}

fn common_prefix_len(x: &[u8], y: &[u8]) -> usize {
    x.iter().zip(y).take_while(|(p, q)| p == q).count()
}

/// The left root of `x` and `y`: their longest common prefix, provided it is
/// nonempty and both words continue past it with different digits.
pub fn left_root(x: &Word, y: &Word) -> Option<Word> {
    let (xs, ys) = (x.as_bytes(), y.as_bytes());
    let k = common_prefix_len(xs, ys);
    if k == 0 || k == xs.len() || k == ys.len() {
        return None;
    }
    Some(Word::from_vec_unchecked(xs[..k].to_vec()))
}

/// `u ≪ v`: lexical precedence, strict.
pub fn lex_precedes(u: &Word, v: &Word) -> bool {
    u.as_bytes() < v.as_bytes()
}

/// Compare by the shortest tally not occurring in each word.
pub fn nonocc_tally_compare(u: &Word, v: &Word) -> OrderVerdict {
    u.longest_b_run().cmp(&v.longest_b_run()).into()
}

/// The shortest tally not occurring in `w` (`MinMax⁺T_b`).
pub fn min_nonoccurring(w: &Word) -> Tally {
    Tally::new(w.longest_b_run() + 1).expect("positive")
}

/// The tally-modified lexicographic order as an [`Ordering`].
pub fn mlex_cmp(u: &Word, v: &Word) -> Ordering {
    u.longest_b_run()
        .cmp(&v.longest_b_run())
        .then_with(|| u.as_bytes().cmp(v.as_bytes()))
}

/// `u < v ≡ u ◁ v ∨ (u ≈ v ∧ u ≪ v)`.
pub fn mlex_less(u: &Word, v: &Word) -> bool {
    mlex_cmp(u, v) == Ordering::Less
}

/// Literal evaluation of the order definitions by quantification over
/// segments of the arguments.
pub mod definitional {
    use crate::word::{segment_relation, Word};

    fn begins(x: &Word, y: &Word) -> bool {
        segment_relation(x, y).begins
    }

    fn is_or_begins(x: &Word, y: &Word) -> bool {
        x == y || begins(x, y)
    }

    /// `Rt_L(z, x, y)`, all four disjuncts.
    pub fn is_left_root(z: &Word, x: &Word, y: &Word) -> bool {
        let za = z.concat(&Word::a());
        let zb = z.concat(&Word::b());
        (is_or_begins(&za, x) && is_or_begins(&zb, y)) || (is_or_begins(&zb, x) && is_or_begins(&za, y))
    }

    /// Search every proper prefix of `x` for a left root of `x` and `y`.
    pub fn left_root(x: &Word, y: &Word) -> Option<Word> {
        let xs = x.as_bytes();
        let roots: Vec<Word> = (1..xs.len())
            .map(|k| Word::from_bytes(&xs[..k]).expect("prefix"))
            .filter(|z| is_left_root(z, x, y))
            .collect();
        assert!(roots.len() <= 1, "left root of {x} and {y} is not unique: {roots:?}");
        roots.into_iter().next()
    }

    /// `u ≪ v` read off the three-clause definition.
    pub fn lex_precedes(u: &Word, v: &Word) -> bool {
        let (a, b) = (Word::a(), Word::b());
        let first = is_or_begins(&a, u) && is_or_begins(&b, v);
        let prefix = begins(u, v);
        let rooted = || {
            let us = u.as_bytes();
            (1..us.len()).any(|k| {
                let z = Word::from_bytes(&us[..k]).expect("prefix");
                is_left_root(&z, u, v)
                    && is_or_begins(&z.concat(&a), u)
                    && is_or_begins(&z.concat(&b), v)
            })
        };
        first || prefix || rooted()
    }

    fn is_tally(t: &Word) -> bool {
        t.digits().all(|d| d == crate::word::Digit::B)
    }

    /// `MaxT_b(t, w)`: every tally segment of `w` is part of `t`.
    pub fn max_t(t: &Word, w: &Word) -> bool {
        is_tally(t) && (1..=w.len()).all(|n| {
            let tp = Word::tally(n);
            !tp.is_part_of(w) || tp.is_part_of(t)
        })
    }

    /// `Max⁺T_b(t, w) ≡ MaxT_b(t, w) & ¬t ⊆p w`.
    pub fn max_plus_t(t: &Word, w: &Word) -> bool {
        max_t(t, w) && !t.is_part_of(w)
    }

    /// `MinMax⁺T_b(t, u)`. Shorter competitors are the only ones that can
    /// violate `t ≤ t'`, so `t'` ranges over tallies shorter than `t`.
    pub fn min_max_plus_t(t: &Word, u: &Word) -> bool {
        max_plus_t(t, u) && (1..t.len()).all(|n| !max_plus_t(&Word::tally(n), u))
    }

    /// The unique `MinMax⁺T_b` witness, searched among tallies up to `|u|+1`.
    pub fn min_max_witness(u: &Word) -> Word {
        (1..=u.len() + 1)
            .map(Word::tally)
            .find(|t| min_max_plus_t(t, u))
            .expect("b^(|u|+1) never occurs in u")
    }

    /// `u ◁_Tb v`.
    pub fn tally_less(u: &Word, v: &Word) -> bool {
        let (t1, t2) = (min_max_witness(u), min_max_witness(v));
        crate::word::r_less(&t1, &t2)
    }

    /// `u ≈_Tb v`.
    pub fn tally_equiv(u: &Word, v: &Word) -> bool {
        min_max_witness(u) == min_max_witness(v)
    }

    /// The tally-modified lexicographic order from its definition.
    pub fn mlex_less(u: &Word, v: &Word) -> bool {
        tally_less(u, v) || (tally_equiv(u, v) && lex_precedes(u, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{w, words_up_to};

    #[test]
    fn left_root_examples() {
        assert_eq!(left_root(&w("ab"), &w("aab")), Some(w("a")));
        assert_eq!(left_root(&w("ba"), &w("bb")), Some(w("b")));
        assert_eq!(left_root(&w("a"), &w("ab")), None);
        assert_eq!(left_root(&w("ab"), &w("ab")), None);
        assert_eq!(left_root(&w("ab"), &w("ba")), None);
    }

    #[test]
    fn left_root_examples_by_prefix_scan() {
        assert_eq!(definitional::left_root(&w("ab"), &w("aab")), Some(w("a")));
        assert_eq!(definitional::left_root(&w("ba"), &w("bb")), Some(w("b")));
        assert_eq!(definitional::left_root(&w("a"), &w("ab")), None);
    }

    #[test]
    fn lex_examples() {
        assert!(lex_precedes(&w("a"), &w("b")));
        assert!(lex_precedes(&w("ab"), &w("abb")));
        assert!(lex_precedes(&w("ba"), &w("bb")));
        assert!(definitional::lex_precedes(&w("ba"), &w("bb")));
    }

    #[test]
    fn tally_compare_examples() {
        assert_eq!(nonocc_tally_compare(&w("a"), &w("b")), OrderVerdict::Less);
        assert_eq!(nonocc_tally_compare(&w("a"), &w("aa")), OrderVerdict::Equal);
        assert_eq!(nonocc_tally_compare(&w("bb"), &w("aba")), OrderVerdict::Greater);
        assert_eq!(definitional::min_max_witness(&w("bb")), w("bbb"));
        assert_eq!(definitional::min_max_witness(&w("aba")), w("bb"));
    }

    #[test]
    fn mlex_examples() {
        assert!(mlex_less(&w("a"), &w("b")));
        assert!(mlex_less(&w("a"), &w("aa")));
        assert!(!mlex_less(&w("b"), &w("a")));
    }

    #[test]
    fn structural_and_definitional_agree_on_small_words() {
        let ws = words_up_to(5);
        for u in &ws {
            for v in &ws {
                assert_eq!(lex_precedes(u, v), definitional::lex_precedes(u, v), "{u} ≪ {v}");
                assert_eq!(mlex_less(u, v), definitional::mlex_less(u, v), "{u} < {v}");
                assert_eq!(left_root(u, v), definitional::left_root(u, v), "root {u} {v}");
            }
        }
    }

    #[test]
    fn left_root_is_longest_common_proper_prefix() {
        let ws = words_up_to(5);
        for x in &ws {
            for y in &ws {
                if let Some(z) = left_root(x, y) {
                    let k = z.len();
                    assert_eq!(&x.as_bytes()[..k], z.as_bytes());
                    assert_eq!(&y.as_bytes()[..k], z.as_bytes());
                    assert_ne!(x.as_bytes()[k], y.as_bytes()[k]);
                    assert_eq!(lex_precedes(x, y), x.as_bytes()[k] == b'a');
                }
            }
        }
    }
}
