//! Python bindings: words are passed as `str`, sets as lists of `str`.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use concatset::arith::{num_word, word_num, DyadicCode};
use concatset::eval::{run_suite, SuiteName, SuiteParams, Verdict};
use concatset::logic::{
    flatten_ps0, parse_formula, print_formula, translate_plus, translate_star, translate_starstar, EqualityMode,
    Signature,
};
use concatset::order;
use concatset::setcode::{self, FrameKind};
use concatset::word::{words_up_to, Word};
use concatset::FiniteWordSet;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn word(text: &str) -> PyResult<Word> {
    text.parse().map_err(|e| value_error(format!("{text:?}: {e}")))
}

fn word_set(members: Vec<String>) -> PyResult<FiniteWordSet> {
    members.iter().map(|m| word(m)).collect()
}

/// Canonical code of the set with the given members.
#[pyfunction]
fn encode(members: Vec<String>) -> PyResult<String> {
    Ok(setcode::canonical_encode(&word_set(members)?).to_string())
}

/// Members of a set code, in modified lexicographic order.
#[pyfunction]
fn decode(code: &str) -> PyResult<Vec<String>> {
    let set = setcode::members(&word(code)?).map_err(value_error)?;
    Ok(set.sorted_mlex().iter().map(Word::to_string).collect())
}

#[pyfunction]
fn is_set(code: &str) -> PyResult<bool> {
    Ok(setcode::is_set(&word(code)?))
}

#[pyfunction]
fn is_canonical(code: &str) -> PyResult<bool> {
    Ok(setcode::is_canonical(&word(code)?))
}

/// `y ε x`.
#[pyfunction]
fn is_member(y: &str, x: &str) -> PyResult<bool> {
    Ok(setcode::is_member(&word(y)?, &word(x)?))
}

/// Canonical code of `members(x) ∪ {y}`; `x` must be canonical.
#[pyfunction]
fn adjoin(x: &str, y: &str) -> PyResult<String> {
    Ok(setcode::adjoin(&word(x)?, &word(y)?).map_err(value_error)?.to_string())
}

#[pyfunction]
fn mlex_less(u: &str, v: &str) -> PyResult<bool> {
    Ok(order::mlex_less(&word(u)?, &word(v)?))
}

#[pyfunction]
fn lex_precedes(u: &str, v: &str) -> PyResult<bool> {
    Ok(order::lex_precedes(&word(u)?, &word(v)?))
}

/// Every word of length 1 to `max_len`, shortest first.
#[pyfunction]
fn enumerate_words(max_len: usize) -> Vec<String> {
    words_up_to(max_len).iter().map(Word::to_string).collect()
}

/// Number denoted by a word read as a bijective base-2 numeral.
#[pyfunction]
fn word_to_num(w: &str) -> PyResult<BigUint> {
    Ok(word_num(&word(w)?).value().clone())
}

#[pyfunction]
fn num_to_word(n: BigUint) -> PyResult<String> {
    Ok(num_word(&DyadicCode::new(n).map_err(value_error)?).to_string())
}

/// One frame `t₁·a·v·a·t₂` of a code.
#[pyclass(frozen, get_all, skip_from_py_object, module = "pyconcatset")]
#[derive(Clone)]
struct Frame {
    initial: String,
    member: String,
    terminal: String,
    /// `first`, `intermediate`, `last` or `sole`.
    kind: String,
    start: usize,
    end: usize,
}

#[pymethods]
impl Frame {
    fn __repr__(&self) -> String {
        format!(
            "Frame({} a {} a {}, {}, {}..{})",
            self.initial, self.member, self.terminal, self.kind, self.start, self.end
        )
    }
}

#[pyclass(frozen, get_all, module = "pyconcatset")]
struct CodeClass {
    is_set: bool,
    is_min: bool,
    is_lex: bool,
    is_special: bool,
    is_canonical: bool,
    envelope: Option<String>,
    frames: Vec<Frame>,
}

#[pymethods]
impl CodeClass {
    fn __repr__(&self) -> String {
        format!(
            "CodeClass(is_set={}, is_min={}, is_lex={}, is_special={}, is_canonical={}, envelope={:?}, frames={})",
            self.is_set,
            self.is_min,
            self.is_lex,
            self.is_special,
            self.is_canonical,
            self.envelope,
            self.frames.len()
        )
    }
}

#[pyfunction]
fn classify(code: &str) -> PyResult<CodeClass> {
    let x = word(code)?;
    let c = setcode::classify(&x);
    let frames = setcode::scan_frames(&x)
        .into_iter()
        .map(|f| Frame {
            initial: f.initial.to_string(),
            member: f.member.to_string(),
            terminal: f.terminal.to_string(),
            kind: match f.kind {
                FrameKind::First => "first",
                FrameKind::Intermediate { .. } => "intermediate",
                FrameKind::Last => "last",
                FrameKind::Sole => "sole",
            }
            .to_string(),
            start: f.span.start,
            end: f.span.end,
        })
        .collect();
    Ok(CodeClass {
        is_set: c.is_set,
        is_min: c.is_min,
        is_lex: c.is_lex,
        is_special: c.is_special,
        is_canonical: c.is_canonical,
        envelope: c.envelope.map(|t| t.to_string()),
        frames,
    })
}

/// Parse `text` over a named signature and print it in normal form.
#[pyfunction]
fn normalize_formula(text: &str, signature: &str) -> PyResult<String> {
    let sig = Signature::by_name(signature).ok_or_else(|| value_error(format!("unknown signature {signature:?}")))?;
    Ok(print_formula(&parse_formula(text, &sig).map_err(value_error)?))
}

/// Apply an interpretation map: `plus`, `star`, `starstar` or `flatten`.
#[pyfunction]
#[pyo3(signature = (map, formula, equality = "congruence"))]
fn translate(map: &str, formula: &str, equality: &str) -> PyResult<String> {
    let mode = match equality {
        "congruence" => EqualityMode::Congruence,
        "identity" => EqualityMode::Identity,
        other => return Err(value_error(format!("unknown equality mode {other:?}"))),
    };
    let sig = match map {
        "plus" | "star" => Signature::set(),
        "starstar" => Signature::ps0_prime(),
        "flatten" => Signature::ps0(),
        other => return Err(value_error(format!("unknown map {other:?}"))),
    };
    let f = parse_formula(formula, &sig).map_err(value_error)?;
    let out = match map {
        "plus" => translate_plus(&f),
        "star" => translate_star(&f),
        "starstar" => translate_starstar(&f, mode),
        _ => flatten_ps0(&f),
    };
    Ok(print_formula(&out))
}

/// Verdict on one statement of a suite.
#[pyclass(frozen, get_all, skip_from_py_object, module = "pyconcatset")]
#[derive(Clone)]
struct Outcome {
    id: String,
    statement: String,
    /// `holds`, `fails` or `unknown`.
    verdict: String,
    counterexample: Vec<(String, String)>,
    micros: u128,
}

#[pymethods]
impl Outcome {
    fn __repr__(&self) -> String {
        format!("Outcome({}, {})", self.id, self.verdict)
    }
}

#[pyclass(frozen, module = "pyconcatset")]
struct CheckReport(concatset::eval::CheckReport);

#[pymethods]
impl CheckReport {
    #[getter]
    fn suite(&self) -> String {
        self.0.suite.clone()
    }

    #[getter]
    fn all_hold(&self) -> bool {
        self.0.all_hold()
    }

    #[getter]
    fn outcomes(&self) -> Vec<Outcome> {
        self.0
            .outcomes
            .iter()
            .map(|o| Outcome {
                id: o.id.clone(),
                statement: o.statement.clone(),
                verdict: match &o.verdict {
                    Verdict::Holds => "holds",
                    Verdict::Fails(_) => "fails",
                    Verdict::Unknown { .. } => "unknown",
                }
                .to_string(),
                counterexample: match &o.verdict {
                    Verdict::Fails(cex) => cex.clone(),
                    _ => Vec::new(),
                },
                micros: o.micros,
            })
            .collect()
    }

    fn lines(&self) -> String {
        self.0.render_lines()
    }

    fn __str__(&self) -> String {
        self.0.render_table()
    }
}

/// Run a named axiom suite.
#[pyfunction]
#[pyo3(signature = (suite, max_len = None, member_len = 2, set_size = 2, use_hints = true))]
fn check(
    py: Python<'_>,
    suite: &str,
    max_len: Option<usize>,
    member_len: usize,
    set_size: usize,
    use_hints: bool,
) -> PyResult<CheckReport> {
    let name: SuiteName = suite.parse().map_err(value_error)?;
    let params = SuiteParams {
        max_len,
        member_len,
        set_size,
        use_hints,
        ..SuiteParams::default()
    };
    let report = py.detach(|| run_suite(name, &params)).map_err(value_error)?;
    Ok(CheckReport(report))
}

#[pymodule]
fn pyconcatset(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<CodeClass>()?;
    m.add_class::<Frame>()?;
    m.add_class::<CheckReport>()?;
    m.add_class::<Outcome>()?;
    m.add_function(wrap_pyfunction!(encode, m)?)?;
    m.add_function(wrap_pyfunction!(decode, m)?)?;
    m.add_function(wrap_pyfunction!(is_set, m)?)?;
    m.add_function(wrap_pyfunction!(is_canonical, m)?)?;
    m.add_function(wrap_pyfunction!(is_member, m)?)?;
    m.add_function(wrap_pyfunction!(adjoin, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(mlex_less, m)?)?;
    m.add_function(wrap_pyfunction!(lex_precedes, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_words, m)?)?;
    m.add_function(wrap_pyfunction!(word_to_num, m)?)?;
    m.add_function(wrap_pyfunction!(num_to_word, m)?)?;
    m.add_function(wrap_pyfunction!(normalize_formula, m)?)?;
    m.add_function(wrap_pyfunction!(translate, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    Ok(())
}
