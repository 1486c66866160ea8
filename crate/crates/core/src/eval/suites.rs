//! The named axiom suites and the word structure they are evaluated in.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use super::report::{CheckReport, Verdict};
use super::{eval_formula_with, EvalError, HintEnv, Hints, Structure};
use crate::arith;
use crate::logic::corpus;
use crate::logic::translate::{
    guarded, guarded_in_order, translate_plus, translate_star, translate_starstar, universal_closure, EqualityMode,
};
use crate::logic::{flatten_ps0, print_formula, Formula};
use crate::oracle::{enumerate_sets, FiniteWordSet};
use crate::order::{lex_precedes, mlex_less, nonocc_tally_compare, OrderVerdict};
use crate::setcode::{adjoin, canonical_encode, is_canonical, is_set, members};
use crate::word::{is_tractable, r_less, segment_relation, words_up_to, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuiteName {
    Qt,
    Theorem0,
    Order,
    AstPlus,
    AstExtStar,
    Ps0Star,
    Ps0ExtStarStar,
    ArithT,
    ArithQ,
}

impl SuiteName {
    pub const ALL: [SuiteName; 9] = [
        SuiteName::Qt,
        SuiteName::Theorem0,
        SuiteName::Order,
        SuiteName::AstPlus,
        SuiteName::AstExtStar,
        SuiteName::Ps0Star,
        SuiteName::Ps0ExtStarStar,
        SuiteName::ArithT,
        SuiteName::ArithQ,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Qt => "qt",
            SuiteName::Theorem0 => "theorem0",
            SuiteName::Order => "order",
            SuiteName::AstPlus => "ast-plus",
            SuiteName::AstExtStar => "ast-ext-star",
            SuiteName::Ps0Star => "ps0-star",
            SuiteName::Ps0ExtStarStar => "ps0-ext-starstar",
            SuiteName::ArithT => "arith-t",
            SuiteName::ArithQ => "arith-q",
        }
    }

    /// The `max_len` used when none is given.
    pub fn default_max_len(self) -> usize {
        match self {
            SuiteName::Qt | SuiteName::AstPlus | SuiteName::ArithT => 6,
            SuiteName::Theorem0 | SuiteName::Order => 8,
            SuiteName::AstExtStar | SuiteName::Ps0Star | SuiteName::Ps0ExtStarStar => 0,
            SuiteName::ArithQ => 10,
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = EvalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| EvalError::UnknownSuite(s.to_string()))
    }
}

/// Universe parameters of a suite run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    /// Word length bound of `U_L`; for `arith-t` the dyadic length bound,
    /// for `arith-q` the exponent of the bound `2^L`. `None` picks the
    /// suite's default.
    pub max_len: Option<usize>,
    /// Member length bound for the canonical-code universe.
    pub member_len: usize,
    /// Set size bound for the canonical-code universe.
    pub set_size: usize,
    /// Quantifier instances allowed per formula.
    pub budget: u64,
    pub use_hints: bool,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            max_len: None,
            member_len: 2,
            set_size: 2,
            budget: 2_000_000_000,
            use_hints: true,
        }
    }
}

struct Caches {
    canonical: RefCell<HashMap<Word, bool>>,
    set: RefCell<HashMap<Word, bool>>,
    members: RefCell<HashMap<Word, Rc<FiniteWordSet>>>,
    adjoin: RefCell<HashMap<(Word, Word), Option<Word>>>,
}

impl Caches {
    fn memo<K: std::hash::Hash + Eq + Clone, T: Clone>(
        map: &RefCell<HashMap<K, T>>,
        key: &K,
        compute: impl FnOnce() -> T,
    ) -> T {
        if let Some(v) = map.borrow().get(key) {
            return v.clone();
        }
        let v = compute();
        map.borrow_mut().insert(key.clone(), v.clone());
        v
    }

    fn is_canonical(&self, x: &Word) -> bool {
        Caches::memo(&self.canonical, x, || is_canonical(x))
    }

    fn is_set(&self, x: &Word) -> bool {
        Caches::memo(&self.set, x, || is_set(x))
    }

    fn members(&self, x: &Word) -> Rc<FiniteWordSet> {
        Caches::memo(&self.members, x, || Rc::new(members(x).unwrap_or_default()))
    }

    fn adjoin(&self, x: &Word, y: &Word) -> Option<Word> {
        Caches::memo(&self.adjoin, &(x.clone(), y.clone()), || adjoin(x, y).ok())
    }

    fn sigma(&self, x: &Word, y: &Word, z: &Word) -> bool {
        self.is_canonical(x) && self.is_canonical(z) && self.adjoin(x, y).as_ref() == Some(z)
    }

    fn canonical_members(&self, x: &Word) -> BTreeSet<Word> {
        self.members(x).iter().filter(|m| self.is_canonical(m)).cloned().collect()
    }
}

fn tally_cmp(u: &Word, v: &Word) -> OrderVerdict {
    nonocc_tally_compare(u, v)
}

/// Words over `universe` with every symbol of the concatenation signatures
/// and the set-code predicates bound.
pub fn word_structure(universe: Vec<Word>) -> Structure<Word> {
    let c = Rc::new(Caches {
        canonical: RefCell::default(),
        set: RefCell::default(),
        members: RefCell::default(),
        adjoin: RefCell::default(),
    });
    let (c1, c2, c3, c4, c5, c6, c7) = (c.clone(), c.clone(), c.clone(), c.clone(), c.clone(), c.clone(), c.clone());
    Structure::new(universe)
        .with_constant("a", Word::a())
        .with_constant("b", Word::b())
        .with_constant("aa", crate::word::w("aa"))
        .with_function("*", |x| Some(x[0].concat(x[1])))
        .with_function("S", |x| Some(x[0].succ()))
        .with_predicate("B", |x| segment_relation(x[0], x[1]).begins)
        .with_predicate("E", |x| segment_relation(x[0], x[1]).ends)
        .with_predicate("Part", |x| segment_relation(x[0], x[1]).is_part())
        .with_predicate("R", |x| r_less(x[0], x[1]))
        .with_predicate("Leq", |x| x[0] == x[1] || (r_less(x[0], x[1]) && is_tractable(x[0]) && is_tractable(x[1])))
        .with_predicate("Lt", |x| r_less(x[0], x[1]) && is_tractable(x[0]) && is_tractable(x[1]))
        .with_predicate("I0", |x| is_tractable(x[0]))
        .with_predicate("Tally", |x| x[0].is_tally())
        .with_predicate("Lex", |x| lex_precedes(x[0], x[1]))
        .with_predicate("Mlex", |x| mlex_less(x[0], x[1]))
        .with_predicate("TLess", |x| tally_cmp(x[0], x[1]) == OrderVerdict::Less)
        .with_predicate("TEq", |x| tally_cmp(x[0], x[1]) == OrderVerdict::Equal)
        .with_predicate("SetPlus", move |x| c1.is_set(x[0]))
        .with_predicate("Set", move |x| c2.is_set(x[0]))
        .with_predicate("Eps", move |x| c3.members(x[1]).contains(x[0]))
        .with_predicate("Vss", move |x| c4.is_canonical(x[0]))
        .with_predicate("SetStar", move |x| c5.is_canonical(x[0]))
        .with_predicate("Same", move |x| c6.is_set(x[0]) && c6.is_set(x[1]) && c6.members(x[0]) == c6.members(x[1]))
        .with_predicate("Cong", move |x| c7.canonical_members(x[0]) == c7.canonical_members(x[1]))
        .with_predicate("Sigma", move |x| c.sigma(x[0], x[1], x[2]))
}

/// Canonical codes of every set in `enumerate_sets(member_len, set_size)`,
/// closed once under adjunction of words from `U_member_len`, sorted by
/// length and then lexicographically.
pub fn canonical_universe(member_len: usize, set_size: usize) -> Vec<Word> {
    let base: Vec<Word> = enumerate_sets(member_len, set_size).iter().map(canonical_encode).collect();
    let mut all: BTreeSet<(usize, Word)> = base.iter().map(|x| (x.len(), x.clone())).collect();
    for x in &base {
        for y in words_up_to(member_len) {
            let z = adjoin(x, &y).expect("canonical codes are set codes");
            all.insert((z.len(), z));
        }
    }
    all.into_iter().map(|(_, w)| w).collect()
}

/// Free-variable range for the flattened PS0 axioms: canonical codes of sets
/// one smaller than the main universe's.
pub fn flatten_base(member_len: usize, set_size: usize) -> Vec<Word> {
    enumerate_sets(member_len, set_size.saturating_sub(1).max(1)).iter().map(canonical_encode).collect()
}

/// Word structure over `base` closed twice under adjunction by members of
/// `base`, with `Base` marking the original codes. Flattening replaces each
/// `x;y` by a universally quantified `S`-successor, so every successor the
/// axioms mention must exist in the universe.
pub fn flatten_structure(base: &[Word]) -> Structure<Word> {
    let mut all: BTreeSet<(usize, Word)> = base.iter().map(|x| (x.len(), x.clone())).collect();
    for x in base {
        for y in base {
            let xy = adjoin(x, y).expect("canonical codes are set codes");
            for z in base {
                let xyz = adjoin(&xy, z).expect("adjoin yields canonical codes");
                all.insert((xyz.len(), xyz));
            }
            all.insert((xy.len(), xy));
        }
    }
    let keep: Rc<BTreeSet<Word>> = Rc::new(base.iter().cloned().collect());
    word_structure(all.into_iter().map(|(_, w)| w).collect())
        .with_predicate("Base", move |args: &[&Word]| keep.contains(args[0]))
}

fn adjoin_hint() -> impl Fn(&HintEnv<Word>) -> Option<Word> {
    |env| adjoin(env.get("x")?, env.get("y")?).ok()
}

fn union_hint() -> impl Fn(&HintEnv<Word>) -> Option<Word> {
    |env| {
        let x = env.get("x")?;
        let y = env.get("y")?;
        Some(canonical_encode(&members(x).ok()?.with(y.clone())))
    }
}

struct Runner<'a> {
    structure: &'a Structure<Word>,
    hints: Hints<Word>,
    budget: u64,
    report: CheckReport,
}

impl Runner<'_> {
    fn check(&mut self, id: &str, f: &Formula) -> Result<(), EvalError> {
        let closed = universal_closure(f);
        let mut err = None;
        let (s, hints, budget) = (self.structure, &self.hints, self.budget);
        self.report.record(id, &print_formula(&closed), || {
            eval_formula_with(s, &closed, hints, &[], budget).unwrap_or_else(|e| {
                err = Some(e);
                Verdict::Unknown { budget }
            })
        });
        err.map_or(Ok(()), Err)
    }

    fn corpus(&mut self, ids: &[&str]) -> Result<(), EvalError> {
        for id in ids {
            self.check(id, &corpus::formula(id))?;
        }
        Ok(())
    }
}

/// Run a named suite.
pub fn run_suite(name: SuiteName, params: &SuiteParams) -> Result<CheckReport, EvalError> {
    let max_len = params.max_len.unwrap_or(name.default_max_len());
    match name {
        SuiteName::ArithT => return Ok(arith::check_t_suite(max_len)?),
        SuiteName::ArithQ => {
            if max_len >= 32 {
                return Err(EvalError::Parameter(format!("arith-q bound 2^{max_len} is too large")));
            }
            return Ok(arith::check_q_suite(1 << max_len));
        }
        _ => {}
    }
    let canonical = matches!(name, SuiteName::AstExtStar | SuiteName::Ps0Star | SuiteName::Ps0ExtStarStar);
    let mut universe = if canonical || name == SuiteName::AstPlus {
        canonical_universe(params.member_len, params.set_size)
    } else {
        words_up_to(max_len)
    };
    let mut report_params = vec![("universe", universe.len().to_string())];
    if name == SuiteName::AstPlus {
        let extra: BTreeSet<Word> = words_up_to(max_len).into_iter().filter(|w| !universe.contains(w)).collect();
        universe.extend(extra);
        report_params = vec![("universe", universe.len().to_string()), ("max-len", max_len.to_string())];
    }
    if canonical || name == SuiteName::AstPlus {
        report_params.push(("member-len", params.member_len.to_string()));
        report_params.push(("set-size", params.set_size.to_string()));
    } else {
        report_params.push(("max-len", max_len.to_string()));
    }
    if !params.use_hints {
        report_params.push(("hints", "off".to_string()));
    }
    let structure = word_structure(universe);
    let mut hints = Hints::none();
    if params.use_hints {
        hints = match name {
            SuiteName::Qt => Hints::none()
                .with("y", |env: &HintEnv<Word>| env.get("x")?.tail())
                .with("z", |env: &HintEnv<Word>| env.get("x")?.init()),
            SuiteName::AstPlus => Hints::none().with("z", union_hint()),
            SuiteName::AstExtStar | SuiteName::Ps0Star | SuiteName::Ps0ExtStarStar => {
                Hints::none().with("z", adjoin_hint())
            }
            _ => Hints::none(),
        };
    }
    let mut r = Runner {
        structure: &structure,
        hints,
        budget: params.budget,
        report: CheckReport::new(name.as_str(), &report_params),
    };
    match name {
        SuiteName::Qt => {
            r.corpus(&["QT1", "QT2", "QT3", "QT4", "QT5", "QT6"])?;
            r.hints = Hints::none();
            r.corpus(&["def-B", "def-E"])?;
        }
        SuiteName::Theorem0 => r.corpus(&[
            "def-R",
            "R-succ",
            "S-inj",
            "R-least",
            "R-trans",
            "R-succ-step",
            "R-irrefl-letters",
            "def-I0",
            "I0-letters",
            "I0-irrefl",
            "I0-antisym",
            "def-Lt",
            "def-Leq",
            "T0-1",
            "T0-2",
            "T0-3",
            "T0-4",
            "T0-5",
            "T0-6",
            "tally-total",
        ])?,
        SuiteName::Order => {
            r.corpus(&["lex-total", "lex-asym", "mlex-total", "mlex-asym", "tally-trichotomy"])?;
            let triples = word_structure(words_up_to(max_len.saturating_sub(2)));
            let mut t = Runner {
                structure: &triples,
                hints: Hints::none(),
                budget: params.budget,
                report: CheckReport::default(),
            };
            t.corpus(&["lex-trans", "mlex-trans", "lt-trans"])?;
            r.report.extend(t.report);
        }
        SuiteName::AstPlus => {
            r.check("NULL+", &translate_plus(&corpus::formula("NULL")))?;
            r.check("ADJ+", &translate_plus(&corpus::formula("ADJ")))?;
            r.corpus(&["ADJ+"])?;
            r.report.outcomes.last_mut().expect("just recorded").id = "ADJ+ display".into();
            r.corpus(&["null-set-lemma", "set-code-dichotomy", "set-adjunction-lemma"])?;
        }
        SuiteName::AstExtStar => {
            r.check("NULL*", &translate_star(&corpus::formula("NULL")))?;
            r.check("ADJ-variant*", &translate_star(&corpus::formula("ADJ-variant")))?;
            r.check("EXT*", &translate_star(&corpus::formula("EXT")))?;
            r.corpus(&["strong-adjunction-explicit", "uniqueness-lemma"])?;
        }
        SuiteName::Ps0Star | SuiteName::Ps0ExtStarStar => {
            let (mode, suffix) = if name == SuiteName::Ps0Star {
                (EqualityMode::Identity, "")
            } else {
                (EqualityMode::Congruence, "**")
            };
            let roman = ["i", "ii", "iii", "iv", "v", "vi"];
            for (k, src) in ["PS1'", "PS2'", "PS3'", "PS4'", "PS5'", "PS6'"].iter().enumerate() {
                let t = translate_starstar(&corpus::formula(src), mode);
                let g = if *src == "PS3'" {
                    guarded_in_order(&t, "Vss", &["x", "y", "z", "z1", "z2", "z3", "z4"])
                } else {
                    guarded(&t, "Vss")
                };
                r.check(&format!("({}{suffix})", roman[k]), &g)?;
            }
            if name == SuiteName::Ps0ExtStarStar {
                let t = translate_starstar(&corpus::formula("EXT'-matrix"), mode);
                r.check("(EXT**)", &guarded(&t, "Vss"))?;
            } else {
                let base = flatten_base(params.member_len, params.set_size);
                let closed = flatten_structure(&base);
                let mut t = Runner {
                    structure: &closed,
                    hints: Hints::none(),
                    budget: params.budget,
                    report: CheckReport::default(),
                };
                for src in ["PS1", "PS2", "PS3", "PS4"] {
                    let f = translate_starstar(&flatten_ps0(&corpus::formula(src)), mode);
                    t.check(&format!("{src} flattened"), &guarded(&f, "Base"))?;
                }
                r.report.extend(t.report);
            }
        }
        SuiteName::ArithT | SuiteName::ArithQ => unreachable!("handled above"),
    }
    Ok(r.report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for n in SuiteName::ALL {
            assert_eq!(n.as_str().parse::<SuiteName>().unwrap(), n);
        }
        assert_eq!("nope".parse::<SuiteName>().unwrap_err(), EvalError::UnknownSuite("nope".into()));
    }

    #[test]
    fn canonical_universe_size() {
        let u = canonical_universe(2, 2);
        assert_eq!(u.len(), 42);
        assert!(u.iter().all(is_canonical));
        assert_eq!(u[0], crate::word::w("aa"));
    }

    #[test]
    fn qt_suite_holds() {
        let r = run_suite(SuiteName::Qt, &SuiteParams::default()).unwrap();
        assert!(r.all_hold(), "{r}");
    }
}
