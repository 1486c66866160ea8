//! Terms and formulas of first-order logic with identity.

use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Const(String),
    /// Function application; infix and postfix symbols (`*`, `;`, `+`, `^`,
    /// `'`) use the same node as prefix ones.
    App(String, Vec<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn constant(name: &str) -> Term {
        Term::Const(name.to_string())
    }

    pub fn app(f: &str, args: Vec<Term>) -> Term {
        Term::App(f.to_string(), args)
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::Const(_) => {}
            Term::App(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    /// Variables in order of first occurrence.
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    pub fn is_simple(&self) -> bool {
        !matches!(self, Term::App(..))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    /// Predicate atom; membership is the predicate `in`.
    Pred(String, Vec<Term>),
    Eq(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

impl Formula {
    pub fn pred(name: &str, args: Vec<Term>) -> Formula {
        Formula::Pred(name.to_string(), args)
    }

    /// Predicate applied to variables.
    pub fn pred_vars(name: &str, vars: &[&str]) -> Formula {
        Formula::pred(name, vars.iter().map(|v| Term::var(v)).collect())
    }

    pub fn eq(l: Term, r: Term) -> Formula {
        Formula::Eq(l, r)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Formula {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    pub fn iff(l: Formula, r: Formula) -> Formula {
        Formula::Iff(Box::new(l), Box::new(r))
    }

    pub fn forall(v: &str, body: Formula) -> Formula {
        Formula::Forall(v.to_string(), Box::new(body))
    }

    pub fn exists(v: &str, body: Formula) -> Formula {
        Formula::Exists(v.to_string(), Box::new(body))
    }

    /// Left-nested conjunction; `None` for an empty list.
    pub fn conj(parts: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        parts.into_iter().reduce(Formula::and)
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut Vec<String>) {
        let push_term = |t: &Term, bound: &Vec<String>, out: &mut Vec<String>| {
            for v in t.vars() {
                if !bound.contains(&v) && !out.contains(&v) {
                    out.push(v);
                }
            }
        };
        match self {
            Formula::Pred(_, args) => args.iter().for_each(|t| push_term(t, bound, out)),
            Formula::Eq(l, r) => {
                push_term(l, bound, out);
                push_term(r, bound, out);
            }
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) | Formula::Iff(l, r) => {
                l.collect_free(bound, out);
                r.collect_free(bound, out);
            }
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                bound.push(v.clone());
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Free variables in order of first occurrence.
    pub fn free_vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Every variable name used, free or bound.
    pub fn all_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| match f {
            Formula::Pred(_, args) => args.iter().for_each(|t| out.extend(t.vars())),
            Formula::Eq(l, r) => {
                out.extend(l.vars());
                out.extend(r.vars());
            }
            Formula::Forall(v, _) | Formula::Exists(v, _) => {
                out.insert(v.clone());
            }
            _ => {}
        });
        out
    }

    /// Pre-order traversal of subformulas.
    pub fn visit(&self, f: &mut dyn FnMut(&Formula)) {
        f(self);
        match self {
            Formula::Pred(..) | Formula::Eq(..) => {}
            Formula::Not(g) | Formula::Forall(_, g) | Formula::Exists(_, g) => g.visit(f),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) | Formula::Iff(l, r) => {
                l.visit(f);
                r.visit(f);
            }
        }
    }

    /// Predicate and function symbols and constants used, by name.
    pub fn symbols(&self) -> BTreeSet<String> {
        fn term_symbols(t: &Term, out: &mut BTreeSet<String>) {
            match t {
                Term::Var(_) => {}
                Term::Const(c) => {
                    out.insert(c.clone());
                }
                Term::App(f, args) => {
                    out.insert(f.clone());
                    args.iter().for_each(|a| term_symbols(a, out));
                }
            }
        }
        let mut out = BTreeSet::new();
        self.visit(&mut |f| match f {
            Formula::Pred(p, args) => {
                out.insert(p.clone());
                args.iter().for_each(|t| term_symbols(t, &mut out));
            }
            Formula::Eq(l, r) => {
                term_symbols(l, &mut out);
                term_symbols(r, &mut out);
            }
            _ => {}
        });
        out
    }

    /// Number of binary connectives and negations.
    pub fn connective_count(&self) -> usize {
        let mut n = 0;
        self.visit(&mut |f| {
            if matches!(
                f,
                Formula::Not(_)
                    | Formula::And(..)
                    | Formula::Or(..)
                    | Formula::Implies(..)
                    | Formula::Iff(..)
            ) {
                n += 1;
            }
        });
        n
    }

    /// Number of quantifiers.
    pub fn quantifier_count(&self) -> usize {
        let mut n = 0;
        self.visit(&mut |f| {
            if matches!(f, Formula::Forall(..) | Formula::Exists(..)) {
                n += 1;
            }
        });
        n
    }

    /// Longest chain of nested quantifiers.
    pub fn quantifier_depth(&self) -> usize {
        match self {
            Formula::Pred(..) | Formula::Eq(..) => 0,
            Formula::Not(f) => f.quantifier_depth(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) | Formula::Iff(l, r) => {
                l.quantifier_depth().max(r.quantifier_depth())
            }
            Formula::Forall(_, f) | Formula::Exists(_, f) => 1 + f.quantifier_depth(),
        }
    }

    /// Equality up to renaming of bound variables.
    pub fn alpha_eq(&self, other: &Formula) -> bool {
        Nameless::of(self, false) == Nameless::of(other, false)
    }

    /// Equality up to renaming of bound variables and regrouping of
    /// iterated `&` and `|`.
    pub fn alpha_eq_assoc(&self, other: &Formula) -> bool {
        Nameless::of(self, true) == Nameless::of(other, true)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::syntax::print_formula(self))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::syntax::print_term(self))
    }
}

/// Formulas with bound variables replaced by binder distance.
#[derive(Debug, PartialEq, Eq)]
enum Nameless {
    Pred(String, Vec<NTerm>),
    Eq(NTerm, NTerm),
    Not(Box<Nameless>),
    And(Vec<Nameless>),
    Or(Vec<Nameless>),
    Implies(Box<Nameless>, Box<Nameless>),
    Iff(Box<Nameless>, Box<Nameless>),
    Forall(Box<Nameless>),
    Exists(Box<Nameless>),
}

#[derive(Debug, PartialEq, Eq)]
enum NTerm {
    Bound(usize),
    Free(String),
    Const(String),
    App(String, Vec<NTerm>),
}

impl Nameless {
    fn of(f: &Formula, flatten: bool) -> Nameless {
        Self::build(f, &mut Vec::new(), flatten)
    }

    fn term(t: &Term, scope: &[String]) -> NTerm {
        match t {
            Term::Var(v) => match scope.iter().rposition(|s| s == v) {
                Some(i) => NTerm::Bound(scope.len() - 1 - i),
                None => NTerm::Free(v.clone()),
            },
            Term::Const(c) => NTerm::Const(c.clone()),
            Term::App(g, args) => NTerm::App(g.clone(), args.iter().map(|a| Self::term(a, scope)).collect()),
        }
    }

    fn build(f: &Formula, scope: &mut Vec<String>, flatten: bool) -> Nameless {
        let bx = |g: &Formula, scope: &mut Vec<String>| Box::new(Self::build(g, scope, flatten));
        match f {
            Formula::Pred(p, args) => Nameless::Pred(p.clone(), args.iter().map(|t| Self::term(t, scope)).collect()),
            Formula::Eq(l, r) => Nameless::Eq(Self::term(l, scope), Self::term(r, scope)),
            Formula::Not(g) => Nameless::Not(bx(g, scope)),
            Formula::And(..) => {
                let mut parts = Vec::new();
                Self::gather(f, scope, flatten, true, &mut parts);
                Nameless::And(parts)
            }
            Formula::Or(..) => {
                let mut parts = Vec::new();
                Self::gather(f, scope, flatten, false, &mut parts);
                Nameless::Or(parts)
            }
            Formula::Implies(l, r) => Nameless::Implies(bx(l, scope), bx(r, scope)),
            Formula::Iff(l, r) => Nameless::Iff(bx(l, scope), bx(r, scope)),
            Formula::Forall(v, g) | Formula::Exists(v, g) => {
                scope.push(v.clone());
                let body = bx(g, scope);
                scope.pop();
                if matches!(f, Formula::Forall(..)) {
                    Nameless::Forall(body)
                } else {
                    Nameless::Exists(body)
                }
            }
        }
    }

    fn gather(f: &Formula, scope: &mut Vec<String>, flatten: bool, conj: bool, out: &mut Vec<Nameless>) {
        match (f, conj) {
            (Formula::And(l, r), true) | (Formula::Or(l, r), false) => {
                for side in [l, r] {
                    let same = matches!((&**side, conj), (Formula::And(..), true) | (Formula::Or(..), false));
                    if flatten && same {
                        Self::gather(side, scope, flatten, conj, out);
                    } else {
                        out.push(Self::build(side, scope, flatten));
                    }
                }
            }
            _ => out.push(Self::build(f, scope, flatten)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> Term {
        Term::var(n)
    }

    #[test]
    fn free_variables_in_order() {
        // forall y (P(x,y) & Q(z)) & R(x)
        let f = Formula::and(
            Formula::forall(
                "y",
                Formula::and(Formula::pred("P", vec![v("x"), v("y")]), Formula::pred("Q", vec![v("z")])),
            ),
            Formula::pred("R", vec![v("x")]),
        );
        assert_eq!(f.free_vars(), ["x", "z"]);
        assert_eq!(f.all_vars().into_iter().collect::<Vec<_>>(), ["x", "y", "z"]);
    }

    #[test]
    fn alpha_equivalence() {
        let f = Formula::forall("x", Formula::pred("P", vec![v("x"), v("y")]));
        let g = Formula::forall("u", Formula::pred("P", vec![v("u"), v("y")]));
        let h = Formula::forall("y", Formula::pred("P", vec![v("y"), v("y")]));
        assert!(f.alpha_eq(&g));
        assert!(!f.alpha_eq(&h));
    }

    #[test]
    fn associativity_is_optional() {
        let p = |n: &str| Formula::pred(n, vec![]);
        let left = Formula::and(Formula::and(p("A"), p("B")), p("C"));
        let right = Formula::and(p("A"), Formula::and(p("B"), p("C")));
        assert!(!left.alpha_eq(&right));
        assert!(left.alpha_eq_assoc(&right));
    }

    #[test]
    fn counts() {
        let f = Formula::forall(
            "x",
            Formula::exists("y", Formula::not(Formula::pred("in", vec![v("y"), v("x")]))),
        );
        assert_eq!(f.quantifier_count(), 2);
        assert_eq!(f.quantifier_depth(), 2);
        assert_eq!(f.connective_count(), 1);
    }
}
