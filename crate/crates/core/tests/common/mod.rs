//! Helpers shared by the integration test targets.

use concatset::oracle::definitional::Analysis;
use concatset::setcode::{classify, members, scan_frames};
use concatset::word::{words_up_to, Word};

type FrameKey = (usize, String, usize, bool, bool, Vec<String>);

/// The first word up to `max_len` on which the structural parser and the
/// literal definitional evaluator disagree about frames, flags or members.
pub fn parser_disagreement(max_len: usize) -> Option<String> {
    words_up_to(max_len).into_iter().find_map(|x| disagreement(&x))
}

fn disagreement(x: &Word) -> Option<String> {
    let an = Analysis::new(x);
    let mut lit: Vec<FrameKey> = an
        .frames
        .iter()
        .map(|f| {
            (
                f.initial.len(),
                f.member().to_string(),
                f.terminal.len(),
                f.first,
                f.last,
                f.intermediate_after.iter().map(|w| w.to_string()).collect(),
            )
        })
        .collect();
    let mut st: Vec<FrameKey> = scan_frames(x)
        .iter()
        .map(|f| {
            let after = match &f.kind {
                concatset::FrameKind::Intermediate { preceding } => vec![preceding.to_string()],
                _ => vec![],
            };
            (f.initial.len(), f.member.to_string(), f.terminal.len(), f.kind.is_first(), f.kind.is_last(), after)
        })
        .collect();
    lit.sort();
    st.sort();
    if lit != st {
        return Some(format!("frames of {x}: definitional {lit:?}, structural {st:?}"));
    }
    let def = an.classify();
    let c = classify(x);
    let def_flags = (def.is_set, def.is_min, def.is_lex, def.is_special, def.is_canonical);
    let flags = (c.is_set, c.is_min, c.is_lex, c.is_special, c.is_canonical);
    if def_flags != flags {
        return Some(format!("classification of {x}: definitional {def_flags:?}, structural {flags:?}"));
    }
    if an.members() != members(x).ok() {
        return Some(format!("members of {x}"));
    }
    None
}
