//! Evaluation of first-order formulas over finite structures.
//!
//! Quantifiers range over a finite universe. Function symbols may leave it:
//! terms are computed exactly and compared by value. An existential may carry
//! a witness hint, a function of the variables bound around it; a hinted
//! value that fails the body is re-checked by search, and a search witness
//! then means the hint is wrong, which is reported as an error.
//!
//! Before quantifying, the evaluator compiles the formula to slot-indexed
//! nodes and hoists guards: antecedent conjuncts that mention only the
//! quantified variable and variables bound outside it. A value failing a
//! guard makes the body vacuously true (or, under `∃`, false) and is skipped.

pub mod report;
pub mod suites;

use std::cell::Cell;
use std::fmt;
use std::rc::Rc;

use thiserror::Error;

use crate::logic::ast::{Formula, Term};
pub use report::{CheckReport, FormulaOutcome, Verdict};
pub use suites::{canonical_universe, run_suite, word_structure, SuiteName, SuiteParams};

/// Number of variable slots a compiled formula may use.
pub const MAX_SLOTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("symbol `{0}` is not bound in the structure")]
    Unbound(String),
    #[error("free variable `{0}` has no value")]
    FreeVariable(String),
    #[error("witness hint for `{var}` was rejected although `{witness}` satisfies the body")]
    HintRejected { var: String, witness: String },
    #[error("function `{0}` is undefined on its arguments")]
    Undefined(String),
    #[error("formula needs {0} variable slots, more than the supported {MAX_SLOTS}")]
    TooManyVariables(usize),
    #[error("counterexample did not re-verify: {0}")]
    Unverified(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("bad suite parameter: {0}")]
    Parameter(String),
    #[error(transparent)]
    Arith(#[from] crate::arith::ArithError),
}

type FunctionImpl<V> = Rc<dyn Fn(&[&V]) -> Option<V>>;
type PredicateImpl<V> = Rc<dyn Fn(&[&V]) -> bool>;

/// A finite universe with interpretations of constants, functions and
/// predicates.
pub struct Structure<V> {
    universe: Vec<Rc<V>>,
    constants: Vec<(String, Rc<V>)>,
    functions: Vec<(String, FunctionImpl<V>)>,
    predicates: Vec<(String, PredicateImpl<V>)>,
}

impl<V> Clone for Structure<V> {
    fn clone(&self) -> Self {
        Structure {
            universe: self.universe.clone(),
            constants: self.constants.clone(),
            functions: self.functions.clone(),
            predicates: self.predicates.clone(),
        }
    }
}

impl<V> Structure<V> {
    pub fn new(universe: impl IntoIterator<Item = V>) -> Structure<V> {
        Structure {
            universe: universe.into_iter().map(Rc::new).collect(),
            constants: Vec::new(),
            functions: Vec::new(),
            predicates: Vec::new(),
        }
    }

    pub fn with_constant(mut self, name: &str, value: V) -> Self {
        self.constants.push((name.to_string(), Rc::new(value)));
        self
    }

    pub fn with_function(mut self, name: &str, f: impl Fn(&[&V]) -> Option<V> + 'static) -> Self {
        self.functions.push((name.to_string(), Rc::new(f)));
        self
    }

    pub fn with_predicate(mut self, name: &str, p: impl Fn(&[&V]) -> bool + 'static) -> Self {
        self.predicates.push((name.to_string(), Rc::new(p)));
        self
    }

    pub fn universe(&self) -> impl Iterator<Item = &V> {
        self.universe.iter().map(|v| &**v)
    }

    pub fn universe_len(&self) -> usize {
        self.universe.len()
    }

    /// The same interpretations over the elements satisfying `keep`.
    pub fn restrict(&self, keep: impl Fn(&V) -> bool) -> Structure<V> {
        let mut s = self.clone();
        s.universe.retain(|v| keep(v));
        s
    }

    pub fn is_bound(&self, symbol: &str) -> bool {
        self.constant_index(symbol).is_some()
            || self.function_index(symbol).is_some()
            || self.predicate_index(symbol).is_some()
    }

    fn constant_index(&self, name: &str) -> Option<usize> {
        self.constants.iter().position(|(n, _)| n == name)
    }

    fn function_index(&self, name: &str) -> Option<usize> {
        self.functions.iter().position(|(n, _)| n == name)
    }

    fn predicate_index(&self, name: &str) -> Option<usize> {
        self.predicates.iter().position(|(n, _)| n == name)
    }
}

/// The variables bound around an existential, visible to its hint.
pub struct HintEnv<'a, V> {
    names: &'a [&'a str],
    values: &'a [Option<Rc<V>>],
}

impl<V> HintEnv<'_, V> {
    /// The innermost binding of `name`.
    pub fn get(&self, name: &str) -> Option<&V> {
        self.names
            .iter()
            .zip(self.values)
            .rev()
            .find(|(n, v)| **n == name && v.is_some())
            .and_then(|(_, v)| v.as_deref())
    }
}

type HintFn<V> = Rc<dyn Fn(&HintEnv<V>) -> Option<V>>;

/// Witness functions for existentials, keyed by the bound variable's name.
pub struct Hints<V> {
    entries: Vec<(String, HintFn<V>)>,
}

impl<V> Clone for Hints<V> {
    fn clone(&self) -> Self {
        Hints {
            entries: self.entries.clone(),
        }
    }
}

impl<V> Default for Hints<V> {
    fn default() -> Self {
        Hints { entries: Vec::new() }
    }
}

impl<V> Hints<V> {
    pub fn none() -> Hints<V> {
        Hints::default()
    }

    /// Register `f` for every existential binding `var`.
    pub fn with(mut self, var: &str, f: impl Fn(&HintEnv<V>) -> Option<V> + 'static) -> Self {
        self.entries.push((var.to_string(), Rc::new(f)));
        self
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn index(&self, var: &str) -> Option<usize> {
        self.entries.iter().position(|(n, _)| n == var)
    }
}

#[derive(Clone, Debug)]
enum CTerm {
    Slot(usize),
    Const(usize),
    App(usize, Vec<CTerm>),
}

#[derive(Clone, Debug)]
enum Node {
    Pred(usize, Vec<CTerm>),
    Eq(CTerm, CTerm),
    Not(Box<Node>),
    And(Box<Node>, Box<Node>),
    Or(Box<Node>, Box<Node>),
    Implies(Box<Node>, Box<Node>),
    Iff(Box<Node>, Box<Node>),
    Forall(Quant),
    Exists(Quant),
}

#[derive(Clone, Debug)]
struct Quant {
    slot: usize,
    var: String,
    guards: Vec<Node>,
    body: Box<Node>,
    hint: Option<usize>,
}

fn term_mask(t: &CTerm) -> u64 {
    match t {
        CTerm::Slot(s) => 1 << s,
        CTerm::Const(_) => 0,
        CTerm::App(_, args) => args.iter().fold(0, |m, a| m | term_mask(a)),
    }
}

/// Slots occurring free in `n`.
fn mask(n: &Node) -> u64 {
    match n {
        Node::Pred(_, args) => args.iter().fold(0, |m, a| m | term_mask(a)),
        Node::Eq(l, r) => term_mask(l) | term_mask(r),
        Node::Not(g) => mask(g),
        Node::And(l, r) | Node::Or(l, r) | Node::Implies(l, r) | Node::Iff(l, r) => mask(l) | mask(r),
        Node::Forall(q) | Node::Exists(q) => mask(&q.body) & !(1 << q.slot),
    }
}

fn conjuncts<'n>(n: &'n Node, out: &mut Vec<&'n Node>) {
    match n {
        Node::And(l, r) => {
            conjuncts(l, out);
            conjuncts(r, out);
        }
        other => out.push(other),
    }
}

fn pick_guards(parts: &[&Node], slot: usize, blocked: u64, out: &mut Vec<Node>) {
    for part in parts {
        let m = mask(part);
        if m & (1 << slot) != 0 && m & blocked == 0 {
            out.push((*part).clone());
        }
    }
}

/// Guards for `∀slot body`: antecedents reached through nested universals
/// and implication consequents.
fn forall_guards(n: &Node, slot: usize, blocked: u64, out: &mut Vec<Node>) {
    match n {
        Node::Forall(q) => forall_guards(&q.body, slot, blocked | 1 << q.slot, out),
        Node::Implies(a, c) => {
            let mut parts = Vec::new();
            conjuncts(a, &mut parts);
            pick_guards(&parts, slot, blocked, out);
            forall_guards(c, slot, blocked, out);
        }
        _ => {}
    }
}

/// Guards for `∃slot body`: conjuncts reached through nested existentials.
fn exists_guards(n: &Node, slot: usize, blocked: u64, out: &mut Vec<Node>) {
    match n {
        Node::Exists(q) => exists_guards(&q.body, slot, blocked | 1 << q.slot, out),
        Node::And(..) => {
            let mut parts = Vec::new();
            conjuncts(n, &mut parts);
            pick_guards(&parts, slot, blocked, out);
            for p in parts {
                if matches!(p, Node::Exists(_)) {
                    exists_guards(p, slot, blocked, out);
                }
            }
        }
        _ => {}
    }
}

struct Compiler<'s, V> {
    s: &'s Structure<V>,
    hints: &'s Hints<V>,
    scope: Vec<String>,
    max_slots: usize,
}

impl<V> Compiler<'_, V> {
    fn term(&self, t: &Term) -> Result<CTerm, EvalError> {
        Ok(match t {
            Term::Var(v) => match self.scope.iter().rposition(|n| n == v) {
                Some(i) => CTerm::Slot(i),
                None => return Err(EvalError::FreeVariable(v.clone())),
            },
            Term::Const(c) => CTerm::Const(self.s.constant_index(c).ok_or_else(|| EvalError::Unbound(c.clone()))?),
            Term::App(f, args) => CTerm::App(
                self.s.function_index(f).ok_or_else(|| EvalError::Unbound(f.clone()))?,
                args.iter().map(|a| self.term(a)).collect::<Result<_, _>>()?,
            ),
        })
    }

    fn formula(&mut self, f: &Formula) -> Result<Node, EvalError> {
        let mut pair = |l: &Formula, r: &Formula| -> Result<(Box<Node>, Box<Node>), EvalError> {
            Ok((Box::new(self.formula(l)?), Box::new(self.formula(r)?)))
        };
        Ok(match f {
            Formula::Pred(p, args) => Node::Pred(
                self.s.predicate_index(p).ok_or_else(|| EvalError::Unbound(p.clone()))?,
                args.iter().map(|a| self.term(a)).collect::<Result<_, _>>()?,
            ),
            Formula::Eq(l, r) => Node::Eq(self.term(l)?, self.term(r)?),
            Formula::Not(g) => Node::Not(Box::new(self.formula(g)?)),
            Formula::And(l, r) => {
                let (l, r) = pair(l, r)?;
                Node::And(l, r)
            }
            Formula::Or(l, r) => {
                let (l, r) = pair(l, r)?;
                Node::Or(l, r)
            }
            Formula::Implies(l, r) => {
                let (l, r) = pair(l, r)?;
                Node::Implies(l, r)
            }
            Formula::Iff(l, r) => {
                let (l, r) = pair(l, r)?;
                Node::Iff(l, r)
            }
            Formula::Forall(v, g) | Formula::Exists(v, g) => {
                let slot = self.scope.len();
                if slot >= MAX_SLOTS {
                    return Err(EvalError::TooManyVariables(slot + 1));
                }
                self.scope.push(v.clone());
                self.max_slots = self.max_slots.max(self.scope.len());
                let body = self.formula(g);
                self.scope.pop();
                let body = body?;
                let mut guards = Vec::new();
                let universal = matches!(f, Formula::Forall(..));
                if universal {
                    forall_guards(&body, slot, 0, &mut guards);
                } else {
                    exists_guards(&body, slot, 0, &mut guards);
                }
                let q = Quant {
                    slot,
                    var: v.clone(),
                    guards,
                    body: Box::new(body),
                    hint: if universal { None } else { self.hints.index(v) },
                };
                if universal {
                    Node::Forall(q)
                } else {
                    Node::Exists(q)
                }
            }
        })
    }
}

enum Stop {
    Budget,
    Error(EvalError),
}

impl From<EvalError> for Stop {
    fn from(e: EvalError) -> Self {
        Stop::Error(e)
    }
}

/// One step of the descent to a falsified subformula.
#[derive(Clone, Copy)]
enum Step {
    Body,
    Consequent,
    Left,
    Right,
}

struct Run<'a, V> {
    s: &'a Structure<V>,
    hints: &'a Hints<V>,
    env: Vec<Option<Rc<V>>>,
    names: Vec<&'a str>,
    budget: u64,
    used: Cell<u64>,
}

impl<'a, V: PartialEq + fmt::Display> Run<'a, V> {
    fn tick(&self) -> Result<(), Stop> {
        let n = self.used.get() + 1;
        self.used.set(n);
        if n > self.budget {
            Err(Stop::Budget)
        } else {
            Ok(())
        }
    }

    fn slot(&self, s: usize) -> &V {
        self.env[s].as_deref().expect("compiled slots are bound before use")
    }

    fn term(&self, t: &CTerm) -> Result<Rc<V>, Stop> {
        match t {
            CTerm::Slot(s) => Ok(self.env[*s].clone().expect("compiled slots are bound before use")),
            CTerm::Const(c) => Ok(self.s.constants[*c].1.clone()),
            CTerm::App(f, args) => {
                let vals = args.iter().map(|a| self.term(a)).collect::<Result<Vec<_>, _>>()?;
                let refs: Vec<&V> = vals.iter().map(|v| &**v).collect();
                let (name, imp) = &self.s.functions[*f];
                imp(&refs).map(Rc::new).ok_or_else(|| Stop::Error(EvalError::Undefined(name.clone())))
            }
        }
    }

    fn pred(&self, p: usize, args: &[CTerm]) -> Result<bool, Stop> {
        let imp = &self.s.predicates[p].1;
        match args {
            [CTerm::Slot(a)] => return Ok(imp(&[self.slot(*a)])),
            [CTerm::Slot(a), CTerm::Slot(b)] => return Ok(imp(&[self.slot(*a), self.slot(*b)])),
            [CTerm::Slot(a), CTerm::Slot(b), CTerm::Slot(c)] => {
                return Ok(imp(&[self.slot(*a), self.slot(*b), self.slot(*c)]))
            }
            _ => {}
        }
        let vals = args.iter().map(|a| self.term(a)).collect::<Result<Vec<_>, _>>()?;
        let refs: Vec<&V> = vals.iter().map(|v| &**v).collect();
        Ok(imp(&refs))
    }

    fn guards_pass(&mut self, guards: &'a [Node]) -> Result<bool, Stop> {
        for g in guards {
            if !self.eval(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A universe element satisfying `q`'s body, if any.
    fn search(&mut self, q: &'a Quant) -> Result<Option<Rc<V>>, Stop> {
        for i in 0..self.s.universe.len() {
            self.tick()?;
            let u = self.s.universe[i].clone();
            self.env[q.slot] = Some(u.clone());
            if self.guards_pass(&q.guards)? && self.eval(&q.body)? {
                return Ok(Some(u));
            }
        }
        Ok(None)
    }

    fn eval(&mut self, n: &'a Node) -> Result<bool, Stop> {
        Ok(match n {
            Node::Pred(p, args) => self.pred(*p, args)?,
            Node::Eq(l, r) => match (l, r) {
                (CTerm::Slot(a), CTerm::Slot(b)) => self.slot(*a) == self.slot(*b),
                _ => self.term(l)? == self.term(r)?,
            },
            Node::Not(g) => !self.eval(g)?,
            Node::And(l, r) => self.eval(l)? && self.eval(r)?,
            Node::Or(l, r) => self.eval(l)? || self.eval(r)?,
            Node::Implies(l, r) => !self.eval(l)? || self.eval(r)?,
            Node::Iff(l, r) => self.eval(l)? == self.eval(r)?,
            Node::Forall(q) => {
                self.names[q.slot] = &q.var;
                for i in 0..self.s.universe.len() {
                    self.tick()?;
                    self.env[q.slot] = Some(self.s.universe[i].clone());
                    if self.guards_pass(&q.guards)? && !self.eval(&q.body)? {
                        return Ok(false);
                    }
                }
                true
            }
            Node::Exists(q) => {
                self.names[q.slot] = &q.var;
                if let Some(h) = q.hint {
                    let value = {
                        let env = HintEnv {
                            names: &self.names[..q.slot],
                            values: &self.env[..q.slot],
                        };
                        (self.hints.entries[h].1)(&env)
                    };
                    if let Some(v) = value {
                        self.tick()?;
                        self.env[q.slot] = Some(Rc::new(v));
                        if self.eval(&q.body)? {
                            return Ok(true);
                        }
                        if let Some(w) = self.search(q)? {
                            return Err(Stop::Error(EvalError::HintRejected {
                                var: q.var.clone(),
                                witness: w.to_string(),
                            }));
                        }
                        return Ok(false);
                    }
                }
                self.search(q)?.is_some()
            }
        })
    }

    /// Follow a false node down to a falsified part, recording the
    /// universal instances chosen on the way.
    fn descend(
        &mut self,
        n: &'a Node,
        cex: &mut Vec<(String, Rc<V>)>,
        path: &mut Vec<Step>,
    ) -> Result<(), Stop> {
        match n {
            Node::Forall(q) => {
                self.names[q.slot] = &q.var;
                for i in 0..self.s.universe.len() {
                    let u = self.s.universe[i].clone();
                    self.env[q.slot] = Some(u.clone());
                    if self.guards_pass(&q.guards)? && !self.eval(&q.body)? {
                        cex.push((q.var.clone(), u));
                        path.push(Step::Body);
                        return self.descend(&q.body, cex, path);
                    }
                }
                Ok(())
            }
            Node::Implies(_, c) => {
                path.push(Step::Consequent);
                self.descend(c, cex, path)
            }
            Node::And(l, r) => {
                if !self.eval(l)? {
                    path.push(Step::Left);
                    self.descend(l, cex, path)
                } else {
                    path.push(Step::Right);
                    self.descend(r, cex, path)
                }
            }
            _ => Ok(()),
        }
    }
}

fn follow<'f>(f: &'f Formula, path: &[Step]) -> &'f Formula {
    path.iter().fold(f, |g, step| match (step, g) {
        (Step::Body, Formula::Forall(_, b)) => b,
        (Step::Consequent, Formula::Implies(_, c)) => c,
        (Step::Left, Formula::And(l, _)) => l,
        (Step::Right, Formula::And(_, r)) => r,
        _ => unreachable!("descent path mirrors the formula"),
    })
}

/// Evaluate `f` under `assignment`; `None` when the budget runs out.
fn truth<V: PartialEq + fmt::Display>(
    s: &Structure<V>,
    f: &Formula,
    hints: &Hints<V>,
    assignment: &[(String, Rc<V>)],
    budget: u64,
) -> Result<Option<bool>, EvalError> {
    let (node, mut run) = prepare(s, f, hints, assignment, budget)?;
    match run.eval(&node) {
        Ok(b) => Ok(Some(b)),
        Err(Stop::Budget) => Ok(None),
        Err(Stop::Error(e)) => Err(e),
    }
}

fn prepare<'a, V>(
    s: &'a Structure<V>,
    f: &Formula,
    hints: &'a Hints<V>,
    assignment: &'a [(String, Rc<V>)],
    budget: u64,
) -> Result<(Node, Run<'a, V>), EvalError> {
    let mut c = Compiler {
        s,
        hints,
        scope: assignment.iter().map(|(n, _)| n.clone()).collect(),
        max_slots: assignment.len(),
    };
    if assignment.len() > MAX_SLOTS {
        return Err(EvalError::TooManyVariables(assignment.len()));
    }
    let node = c.formula(f)?;
    let mut env = vec![None; c.max_slots];
    let mut names = vec![""; c.max_slots];
    for (i, (n, v)) in assignment.iter().enumerate() {
        env[i] = Some(v.clone());
        names[i] = n;
    }
    Ok((
        node,
        Run {
            s,
            hints,
            env,
            names,
            budget,
            used: Cell::new(0),
        },
    ))
}

/// Evaluate a closed formula with no hints.
pub fn eval_formula<V: Clone + PartialEq + fmt::Display>(
    s: &Structure<V>,
    f: &Formula,
    budget: u64,
) -> Result<Verdict, EvalError> {
    eval_formula_with(s, f, &Hints::none(), &[], budget)
}

/// Evaluate `f` with witness hints and values for its free variables.
///
/// `budget` caps the number of quantifier instances tried; exhausting it
/// gives [`Verdict::Unknown`]. A failure carries the universal instances
/// leading to a false subformula, and is re-checked by evaluating that
/// subformula at those values.
pub fn eval_formula_with<V: Clone + PartialEq + fmt::Display>(
    s: &Structure<V>,
    f: &Formula,
    hints: &Hints<V>,
    assignment: &[(&str, V)],
    budget: u64,
) -> Result<Verdict, EvalError> {
    let pinned: Vec<(String, Rc<V>)> = assignment.iter().map(|(n, v)| (n.to_string(), Rc::new(v.clone()))).collect();
    let (node, mut run) = prepare(s, f, hints, &pinned, budget)?;
    let holds = match run.eval(&node) {
        Ok(b) => b,
        Err(Stop::Budget) => return Ok(Verdict::Unknown { budget }),
        Err(Stop::Error(e)) => return Err(e),
    };
    if holds {
        return Ok(Verdict::Holds);
    }
    let mut cex = Vec::new();
    let mut path = Vec::new();
    run.budget = u64::MAX;
    match run.descend(&node, &mut cex, &mut path) {
        Ok(()) => {}
        Err(Stop::Budget) => unreachable!("descent runs without a budget"),
        Err(Stop::Error(e)) => return Err(e),
    }
    let part = follow(f, &path);
    let mut at = pinned.clone();
    at.extend(cex.iter().cloned());
    if truth(s, part, hints, &at, u64::MAX)? != Some(false) {
        return Err(EvalError::Unverified(crate::logic::print_formula(part)));
    }
    Ok(Verdict::Fails(cex.into_iter().map(|(n, v)| (n, v.to_string())).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{parse_formula, Signature};
    use crate::setcode::{adjoin, is_member};
    use crate::word::{w, words_up_to, Word};

    fn qt_structure(len: usize) -> Structure<Word> {
        Structure::new(words_up_to(len))
            .with_constant("a", Word::a())
            .with_constant("b", Word::b())
            .with_function("*", |xs| Some(xs[0].concat(xs[1])))
    }

    fn qt(text: &str) -> Formula {
        parse_formula(text, &Signature::qt()).unwrap()
    }

    #[test]
    fn qt2_holds_over_u4() {
        let f = qt("forall x forall y (~(x*y = a) & ~(x*y = b))");
        assert_eq!(eval_formula(&qt_structure(4), &f, u64::MAX).unwrap(), Verdict::Holds);
    }

    #[test]
    fn empty_code_has_no_members() {
        let s = Structure::new(words_up_to(4)).with_predicate("in", |xs| is_member(xs[0], xs[1]));
        let f = parse_formula("exists y (y in x)", &Signature::set()).unwrap();
        let v = eval_formula_with(&s, &f, &Hints::none(), &[("x", w("aa"))], u64::MAX).unwrap();
        assert_eq!(v, Verdict::Fails(vec![]));
        let v = eval_formula_with(&s, &f, &Hints::none(), &[("x", w("baaab"))], u64::MAX).unwrap();
        assert_eq!(v, Verdict::Holds);
    }

    #[test]
    fn counterexamples_name_the_failing_instance() {
        let f = qt("forall x forall y (x*y = y*x)");
        match eval_formula(&qt_structure(2), &f, u64::MAX).unwrap() {
            Verdict::Fails(cex) => {
                assert_eq!(cex.len(), 2);
                let (x, y) = (w(&cex[0].1), w(&cex[1].1));
                assert_ne!(x.concat(&y), y.concat(&x));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let f = qt("forall x forall y forall z ((x*y)*z = x*(y*z))");
        assert_eq!(eval_formula(&qt_structure(4), &f, 100).unwrap(), Verdict::Unknown { budget: 100 });
    }

    #[test]
    fn hints_reach_outside_the_universe() {
        let s = Structure::new(words_up_to(2))
            .with_function("*", |xs| Some(xs[0].concat(xs[1])))
            .with_constant("a", Word::a())
            .with_constant("b", Word::b());
        let f = qt("forall x forall y exists z (z = x*y)");
        let hints = Hints::none().with("z", |env: &HintEnv<Word>| Some(env.get("x")?.concat(env.get("y")?)));
        assert_eq!(eval_formula_with(&s, &f, &hints, &[], u64::MAX).unwrap(), Verdict::Holds);
        assert!(matches!(eval_formula(&s, &f, u64::MAX).unwrap(), Verdict::Fails(_)));
    }

    #[test]
    fn wrong_hints_are_errors_when_search_succeeds() {
        let f = qt("forall x exists z (z = x)");
        let hints = Hints::none().with("z", |_: &HintEnv<Word>| Some(w("bbbbbb")));
        let err = eval_formula_with(&qt_structure(2), &f, &hints, &[], u64::MAX).unwrap_err();
        assert!(matches!(err, EvalError::HintRejected { .. }));
    }

    #[test]
    fn guards_prune_without_changing_verdicts() {
        let s = Structure::new(words_up_to(3))
            .with_predicate("Sigma", |xs| adjoin(xs[0], xs[1]).ok().as_ref() == Some(xs[2]))
            .with_predicate("Vss", |xs| crate::setcode::is_canonical(xs[0]));
        let f = parse_formula(
            "forall x forall y forall z1 forall z2 (Vss(x) & Vss(y) -> (Sigma(x,y,z1) & Sigma(x,y,z2) -> z1 = z2))",
            &Signature::target(),
        )
        .unwrap();
        assert_eq!(eval_formula(&s, &f, u64::MAX).unwrap(), Verdict::Holds);
    }

    #[test]
    fn unbound_symbols_and_free_variables_are_errors() {
        let s = Structure::new(words_up_to(1));
        assert_eq!(eval_formula(&s, &qt("x = a"), 10).unwrap_err(), EvalError::FreeVariable("x".into()));
        assert_eq!(eval_formula(&s, &qt("forall x (x = a)"), 10).unwrap_err(), EvalError::Unbound("a".into()));
    }

    #[test]
    fn slot_limit() {
        let mut f = qt("x = x");
        for i in 0..65 {
            f = Formula::forall(&format!("v{i}"), f);
        }
        f = Formula::forall("x", f);
        let s = qt_structure(1);
        assert!(matches!(eval_formula(&s, &f, 10).unwrap_err(), EvalError::TooManyVariables(_)));
    }
}
