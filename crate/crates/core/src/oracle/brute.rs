//! Brute-force search for canonical codes.

use thiserror::Error;

use crate::word::{words_up_to, Word};

use super::definitional::Analysis;
use super::FiniteWordSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{set} has {} canonical codes of length at most {max_len}: {codes:?}", codes.len())]
    NotUnique {
        set: FiniteWordSet,
        max_len: usize,
        codes: Vec<Word>,
    },
}

/// The canonical code of `set` found by scanning every word of length up to
/// `max_len` and evaluating the definitions literally. `Ok(None)` means no
/// word in range qualifies; two or more qualifying words is an error.
pub fn brute_canonical(set: &FiniteWordSet, max_len: usize) -> Result<Option<Word>, OracleError> {
    let framed: Vec<Word> = set
        .iter()
        .map(|m| Word::a().concat(m).concat(&Word::a()))
        .collect();
    let mut found = Vec::new();
    for x in words_up_to(max_len) {
        // every member is stored as a·m·a inside its code, and a nonempty
        // code starts with its First frame's tally and ends with its Last
        // frame's tally
        let bytes = x.as_bytes();
        let bounded = set.is_empty() || (bytes[0] == b'b' && bytes[bytes.len() - 1] == b'b');
        if !bounded || !framed.iter().all(|s| s.is_part_of(&x)) {
            continue;
        }
        let an = Analysis::new(&x);
        if an.members().as_ref() == Some(set) && an.is_canonical() {
            found.push(x);
        }
    }
    match found.len() {
        0 => Ok(None),
        1 => Ok(found.pop()),
        _ => Err(OracleError::NotUnique {
            set: set.clone(),
            max_len,
            codes: found,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn small_sets() {
        let s = |ws: &[&str]| ws.iter().map(|x| w(x)).collect::<FiniteWordSet>();
        assert_eq!(brute_canonical(&s(&[]), 4).unwrap(), Some(w("aa")));
        assert_eq!(brute_canonical(&s(&["a"]), 6).unwrap(), Some(w("baaab")));
        assert_eq!(brute_canonical(&s(&["b"]), 7).unwrap(), Some(w("bbababb")));
        assert_eq!(brute_canonical(&s(&["b"]), 6).unwrap(), None);
        assert_eq!(
            brute_canonical(&s(&["a", "b"]), 11).unwrap(),
            Some(w("baaabbababb"))
        );
    }
}
