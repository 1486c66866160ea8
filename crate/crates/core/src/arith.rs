//! Words as numbers: the bijective base-2 coding of nonempty dyadic
//! sequences (`a ↦ 1`, `b ↦ 2`, most significant digit first), its
//! concatenation operation, and exhaustive checks of the sequence-coding
//! facts and of Robinson arithmetic in the standard model.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::eval::report::{CheckReport, Verdict};
use crate::word::{words_up_to, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("0 codes no nonempty dyadic sequence")]
    Zero,
    #[error("not a decimal numeral: {0:?}")]
    BadNumeral(String),
    #[error("dyadic length {0} is beyond the exhaustive-check limit of {MAX_CHECK_DLEN}")]
    TooLong(usize),
}

/// Largest dyadic length [`check_t_suite`] accepts; triple concatenations
/// then still fit in 64 bits.
pub const MAX_CHECK_DLEN: usize = 20;

/// The code of a nonempty dyadic sequence: any positive integer.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyadicCode(BigUint);

impl DyadicCode {
    pub fn new(n: BigUint) -> Result<DyadicCode, ArithError> {
        if n.is_zero() {
            Err(ArithError::Zero)
        } else {
            Ok(DyadicCode(n))
        }
    }

    pub fn from_u64(n: u64) -> Result<DyadicCode, ArithError> {
        DyadicCode::new(BigUint::from(n))
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// Number of dyadic digits.
    pub fn dlen(&self) -> usize {
        dlen_big(&self.0)
    }
}

impl fmt::Display for DyadicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for DyadicCode {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let n = BigUint::parse_bytes(s.trim().as_bytes(), 10).ok_or_else(|| ArithError::BadNumeral(s.to_string()))?;
        DyadicCode::new(n)
    }
}

fn dlen_big(n: &BigUint) -> usize {
    // codes of length k are exactly 2^k - 1 ..= 2^(k+1) - 2
    ((n + 1u32).bits() - 1) as usize
}

/// Dyadic length of a positive machine integer.
pub fn dlen(n: u64) -> usize {
    debug_assert!(n > 0);
    (u64::BITS - (n + 1).leading_zeros() - 1) as usize
}

pub fn word_num(w: &Word) -> DyadicCode {
    let mut n = BigUint::zero();
    for &c in w.as_bytes() {
        n = (n << 1u32) + if c == b'a' { 1u32 } else { 2u32 };
    }
    DyadicCode(n)
}

pub fn num_word(n: &DyadicCode) -> Word {
    let mut digits = Vec::with_capacity(n.dlen());
    let mut m = n.0.clone();
    let two = BigUint::from(2u32);
    while !m.is_zero() {
        if (&m % &two).is_zero() {
            digits.push(b'b');
            m = (m - &two) >> 1u32;
        } else {
            digits.push(b'a');
            m = (m - BigUint::one()) >> 1u32;
        }
    }
    digits.reverse();
    Word::from_vec_unchecked(digits)
}

/// `m ^ n = m·2^dlen(n) + n`, the code of the concatenated sequence.
pub fn num_concat(m: &DyadicCode, n: &DyadicCode) -> DyadicCode {
    DyadicCode((&m.0 << n.dlen()) + &n.0)
}

/// Machine-integer concatenation; `None` on zero input or overflow.
pub fn concat_u64(m: u64, n: u64) -> Option<u64> {
    if m == 0 || n == 0 {
        return None;
    }
    m.checked_mul(1u64.checked_shl(dlen(n) as u32)?)?.checked_add(n)
}

/// Dyadic digits of a positive machine integer, most significant first.
pub fn digits_u64(mut n: u64) -> Vec<u8> {
    let mut out = Vec::new();
    while n > 0 {
        let d: u8 = if n.is_multiple_of(2) { 2 } else { 1 };
        out.push(d);
        n = (n - u64::from(d)) / 2;
    }
    out.reverse();
    out
}

/// A concatenation candidate for the sequence suite.
pub type ConcatFn = fn(u64, u64) -> Option<u64>;

/// The code of the one-term sequence `⟨1⟩`.
pub const C1: u64 = 1;
/// The code of the one-term sequence `⟨2⟩`.
pub const C2: u64 = 2;

fn cex(pairs: &[(&str, u64)]) -> Verdict {
    Verdict::Fails(pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect())
}

/// Largest code of dyadic length at most `max_dlen`.
pub fn max_code(max_dlen: usize) -> u64 {
    (1u64 << (max_dlen + 1)) - 2
}

/// The sequence facts (t0)–(t9) over every code of dyadic length at most
/// `max_dlen`, plus the word/number concatenation homomorphism on
/// `U_{max_dlen + 2}`.
pub fn check_t_suite(max_dlen: usize) -> Result<CheckReport, ArithError> {
    check_t_suite_with(max_dlen, concat_u64)
}

/// As [`check_t_suite`] with `^` replaced by `concat`.
pub fn check_t_suite_with(max_dlen: usize, concat: ConcatFn) -> Result<CheckReport, ArithError> {
    if max_dlen > MAX_CHECK_DLEN {
        return Err(ArithError::TooLong(max_dlen));
    }
    let top = max_code(max_dlen);
    let codes = || 1..=top;
    let cat = |m: u64, n: u64| concat(m, n);
    let mut r = CheckReport::new("arith-t", &[("max-dlen", max_dlen.to_string()), ("codes", top.to_string())]);

    r.record("t0", "exists s SeqStar(s)", || if top >= 1 { Verdict::Holds } else { Verdict::Unknown { budget: 0 } });
    for (id, c, digit) in [("t1", C1, 1u8), ("t2", C2, 2u8)] {
        // the code whose term sequence is exactly the one-term sequence
        r.record(id, "exactly one code denotes the one-term sequence, and it is the constant", || {
            let hits: Vec<u64> = codes().filter(|&s| digits_u64(s) == [digit]).collect();
            if hits == [c] {
                Verdict::Holds
            } else {
                cex(&[("s", hits.into_iter().find(|&s| s != c).unwrap_or(c))])
            }
        });
    }
    r.record("t3", "SeqStar(s) & SeqStar(t) -> exists! u (SeqStar(u) & s^t = u)", || {
        for s in codes() {
            for t in codes() {
                let ok = cat(s, t).is_some_and(|u| u >= 1 && digits_u64(u) == [digits_u64(s), digits_u64(t)].concat());
                if !ok {
                    return cex(&[("s", s), ("t", t)]);
                }
            }
        }
        Verdict::Holds
    });
    r.record("t4", "(s^t)^u = s^(t^u)", || {
        for s in codes() {
            for t in codes() {
                let st = cat(s, t);
                for u in codes() {
                    let left = st.and_then(|st| cat(st, u));
                    let right = cat(t, u).and_then(|tu| cat(s, tu));
                    if left.is_none() || left != right {
                        return cex(&[("s", s), ("t", t), ("u", u)]);
                    }
                }
            }
        }
        Verdict::Holds
    });
    let pairs = |p: &dyn Fn(u64, u64) -> bool| {
        for s in codes() {
            for t in codes() {
                if !p(s, t) {
                    return cex(&[("s", s), ("t", t)]);
                }
            }
        }
        Verdict::Holds
    };
    let ne = |x: Option<u64>, y: Option<u64>| x.is_some() && y.is_some() && x != y;
    let inj = |x: Option<u64>, y: Option<u64>, s: u64, t: u64| x.is_some() && y.is_some() && (x != y || s == t);
    r.record("t5", "~(s^t = c1) & ~(s^t = c2)", || pairs(&|s, t| ne(cat(s, t), Some(C1)) && ne(cat(s, t), Some(C2))));
    r.record("t6", "(c1^s = c1^t -> s = t) & (c2^s = c2^t -> s = t)", || {
        pairs(&|s, t| inj(cat(C1, s), cat(C1, t), s, t) && inj(cat(C2, s), cat(C2, t), s, t))
    });
    r.record("t7", "(s^c1 = t^c1 -> s = t) & (s^c2 = t^c2 -> s = t)", || {
        pairs(&|s, t| inj(cat(s, C1), cat(t, C1), s, t) && inj(cat(s, C2), cat(t, C2), s, t))
    });
    r.record("t8", "~(c1^s = c2^t) & ~(s^c1 = t^c2)", || {
        pairs(&|s, t| ne(cat(C1, s), cat(C2, t)) && ne(cat(s, C1), cat(t, C2)))
    });
    r.record("t9", "s = c1 | s = c2 | exists t (c1^t = s | c2^t = s) & exists t (t^c1 = s | t^c2 = s)", || {
        for s in codes() {
            if s == C1 || s == C2 {
                continue;
            }
            let d = digits_u64(s);
            let from_digits = |ds: &[u8]| ds.iter().fold(0u64, |n, &x| 2 * n + u64::from(x));
            // drop the first digit, then the last
            let rest = from_digits(&d[1..]);
            let front = from_digits(&d[..d.len() - 1]);
            let left_ok = [C1, C2].iter().any(|&c| cat(c, rest) == Some(s));
            let right_ok = [C1, C2].iter().any(|&c| cat(front, c) == Some(s));
            if !(left_ok && right_ok) {
                return cex(&[("s", s)]);
            }
        }
        Verdict::Holds
    });
    let hom_len = max_dlen + 2;
    r.record("hom", "word_num(u*v) = word_num(u) ^ word_num(v)", || {
        let words = words_up_to(hom_len);
        for u in &words {
            let nu = word_num(u);
            for v in &words {
                if word_num(&u.concat(v)) != num_concat(&nu, &word_num(v)) {
                    return Verdict::Fails(vec![("u".into(), u.to_string()), ("v".into(), v.to_string())]);
                }
            }
        }
        Verdict::Holds
    });
    Ok(r)
}

/// Interpretations of `0`, `'`, `+` and `·` on machine naturals; `None`
/// marks an overflow.
#[derive(Clone, Copy, Debug)]
pub struct QModel {
    pub zero: u64,
    pub succ: fn(u64) -> Option<u64>,
    pub add: fn(u64, u64) -> Option<u64>,
    pub mul: fn(u64, u64) -> Option<u64>,
}

impl QModel {
    pub fn standard() -> QModel {
        QModel {
            zero: 0,
            succ: |x| x.checked_add(1),
            add: u64::checked_add,
            mul: u64::checked_mul,
        }
    }
}

/// A `y < bound` with `y' = x`: the predecessor when it works, otherwise
/// the first found by search.
pub fn q3_witness(model: &QModel, x: u64, bound: u64) -> Option<u64> {
    let works = |y: u64| (model.succ)(y) == Some(x);
    x.checked_sub(1)
        .filter(|&y| y < bound && works(y))
        .or_else(|| (0..bound).find(|&y| works(y)))
}

/// Q1–Q7 for all naturals below `bound` in the standard model.
pub fn check_q_suite(bound: u64) -> CheckReport {
    check_q_suite_with(bound, &QModel::standard())
}

/// Q1–Q7 for all naturals below `bound` in `model`.
pub fn check_q_suite_with(bound: u64, model: &QModel) -> CheckReport {
    let QModel { zero, succ, add, mul } = *model;
    let mut r = CheckReport::new("arith-q", &[("bound", bound.to_string())]);
    let all = |p: &dyn Fn(u64) -> bool| match (0..bound).find(|&x| !p(x)) {
        Some(x) => cex(&[("x", x)]),
        None => Verdict::Holds,
    };
    let all2 = |p: &dyn Fn(u64, u64) -> bool| {
        for x in 0..bound {
            if let Some(y) = (0..bound).find(|&y| !p(x, y)) {
                return cex(&[("x", x), ("y", y)]);
            }
        }
        Verdict::Holds
    };
    let then = |v: Option<u64>, f: &dyn Fn(u64) -> Option<u64>| v.and_then(f);
    r.record("Q1", "~(x' = 0)", || all(&|x| succ(x).is_some_and(|s| s != zero)));
    r.record("Q2", "x' = y' -> x = y", || {
        all2(&|x, y| match (succ(x), succ(y)) {
            (Some(a), Some(b)) => a != b || x == y,
            _ => false,
        })
    });
    r.record("Q3", "x = 0 | exists y (y' = x)", || all(&|x| x == zero || q3_witness(model, x, bound).is_some()));
    r.record("Q4", "x + 0 = x", || all(&|x| add(x, zero) == Some(x)));
    r.record("Q5", "x + y' = (x + y)'", || {
        all2(&|x, y| {
            let l = then(succ(y), &|sy| add(x, sy));
            l.is_some() && l == then(add(x, y), &|s| succ(s))
        })
    });
    r.record("Q6", "x*0 = 0", || all(&|x| mul(x, zero) == Some(zero)));
    r.record("Q7", "x*y' = x*y + x", || {
        all2(&|x, y| {
            let l = then(succ(y), &|sy| mul(x, sy));
            l.is_some() && l == then(mul(x, y), &|p| add(p, x))
        })
    });
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    fn code(n: u64) -> DyadicCode {
        DyadicCode::from_u64(n).unwrap()
    }

    #[test]
    fn word_number_examples() {
        assert_eq!(word_num(&w("a")), code(1));
        assert_eq!(word_num(&w("b")), code(2));
        assert_eq!(word_num(&w("ab")), code(4));
        assert_eq!(num_word(&code(4)), w("ab"));
        assert_eq!(word_num(&w("baaab")), code(48));
        assert_eq!(DyadicCode::from_u64(0), Err(ArithError::Zero));
        assert_eq!("0".parse::<DyadicCode>(), Err(ArithError::Zero));
        assert!("x1".parse::<DyadicCode>().is_err());
    }

    #[test]
    fn concat_examples() {
        assert_eq!(num_concat(&code(1), &code(2)), code(4));
        assert_eq!(num_concat(&code(2), &code(1)), code(5));
        let left = num_concat(&num_concat(&code(1), &code(2)), &code(1));
        assert_eq!(left, num_concat(&code(1), &num_concat(&code(2), &code(1))));
        assert_eq!(left, code(9));
        assert_eq!(concat_u64(1, 2), Some(4));
        assert_eq!(concat_u64(0, 2), None);
        assert_eq!(concat_u64(u64::MAX / 2, 2), None);
    }

    #[test]
    fn bijection_on_small_words_and_numbers() {
        for u in words_up_to(10) {
            assert_eq!(num_word(&word_num(&u)), u);
        }
        for n in 1..=2046u64 {
            let c = code(n);
            assert_eq!(word_num(&num_word(&c)), c);
            assert_eq!(c.dlen(), dlen(n));
            assert_eq!(num_word(&c).len(), dlen(n));
        }
    }

    #[test]
    fn lengths_add_under_concatenation() {
        for m in 1..200u64 {
            for n in 1..200u64 {
                assert_eq!(dlen(concat_u64(m, n).unwrap()), dlen(m) + dlen(n));
            }
        }
    }

    #[test]
    fn t_suite_holds_at_six() {
        let r = check_t_suite(6).unwrap();
        assert_eq!(r.params[1].1, "126");
        assert!(r.all_hold(), "{r}");
        assert_eq!(r.outcomes.len(), 11);
    }

    #[test]
    fn t_suite_rejects_oversized_lengths() {
        assert_eq!(check_t_suite(21).unwrap_err(), ArithError::TooLong(21));
    }

    #[test]
    fn corrupted_concatenation_breaks_associativity() {
        let r = check_t_suite_with(4, |m, n| Some(2 * m + n)).unwrap();
        assert!(matches!(r.outcome("t4").unwrap().verdict, Verdict::Fails(_)));
    }

    #[test]
    fn plain_sum_breaks_the_singleton_facts() {
        let r = check_t_suite_with(4, |m, n| m.checked_add(n)).unwrap();
        assert!(r.outcome("t4").unwrap().verdict.holds());
        assert!(matches!(r.outcome("t5").unwrap().verdict, Verdict::Fails(_)));
    }

    #[test]
    fn q_suite() {
        assert!(check_q_suite(1024).all_hold());
        assert_eq!(q3_witness(&QModel::standard(), 5, 1024), Some(4));
        let broken = QModel {
            succ: Some,
            ..QModel::standard()
        };
        let r = check_q_suite_with(16, &broken);
        assert_eq!(r.outcome("Q1").unwrap().verdict, Verdict::Fails(vec![("x".into(), "0".into())]));
    }
}
