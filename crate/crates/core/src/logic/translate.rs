//! Syntax maps between signatures: relativization, the interpretations of
//! set-theoretic languages in the string language, and flattening of the
//! adjunction function into a ternary relation.

use std::collections::BTreeSet;

use super::ast::{Formula, Term};

/// Relativize every quantifier to the unary predicate `domain`:
/// `∀x φ ↦ ∀x (D(x) → φ)` and `∃x φ ↦ ∃x (D(x) ∧ φ)`.
pub fn relativize(f: &Formula, domain: &str) -> Formula {
    map_formula(f, domain, &mut |atom, _| atom.clone(), &mut Vec::new())
}

/// Structural recursion that relativizes quantifiers and rewrites atoms with
/// `atom(φ, scope)`, where `scope` lists the variables bound around `φ`
/// (the free variables of the whole formula included).
fn map_formula(
    f: &Formula,
    domain: &str,
    atom: &mut dyn FnMut(&Formula, &[String]) -> Formula,
    scope: &mut Vec<String>,
) -> Formula {
    let mut go = |g: &Formula, scope: &mut Vec<String>| map_formula(g, domain, atom, scope);
    match f {
        Formula::Pred(..) | Formula::Eq(..) => {
            let mut full = f.free_vars();
            full.retain(|v| !scope.contains(v));
            let mut s = scope.clone();
            s.extend(full);
            atom(f, &s)
        }
        Formula::Not(g) => Formula::not(go(g, scope)),
        Formula::And(l, r) => {
            let l = go(l, scope);
            Formula::and(l, go(r, scope))
        }
        Formula::Or(l, r) => {
            let l = go(l, scope);
            Formula::or(l, go(r, scope))
        }
        Formula::Implies(l, r) => {
            let l = go(l, scope);
            Formula::implies(l, go(r, scope))
        }
        Formula::Iff(l, r) => {
            let l = go(l, scope);
            Formula::iff(l, go(r, scope))
        }
        Formula::Forall(v, g) | Formula::Exists(v, g) => {
            scope.push(v.clone());
            let body = go(g, scope);
            scope.pop();
            let guard = Formula::pred_vars(domain, &[v.as_str()]);
            if matches!(f, Formula::Forall(..)) {
                Formula::forall(v, Formula::implies(guard, body))
            } else {
                Formula::exists(v, Formula::and(guard, body))
            }
        }
    }
}

fn with_free_scope(f: &Formula, domain: &str, atom: &mut dyn FnMut(&Formula, &[String]) -> Formula) -> Formula {
    map_formula(f, domain, atom, &mut f.free_vars())
}

/// A variable name for a new binder around an atom: the first of `z`, `v`,
/// `u` that is neither bound around the atom nor used in it, otherwise the
/// lexically greatest such name followed by enough primes.
pub fn fresh_variable(scope: &[String], atom_vars: &[String]) -> String {
    let taken: BTreeSet<&String> = scope.iter().chain(atom_vars).collect();
    for cand in ["z", "v", "u"] {
        if !taken.iter().any(|t| *t == cand) {
            return cand.to_string();
        }
    }
    primed_fresh(taken.iter().map(|s| s.as_str()))
}

/// The lexically greatest name in `names` with primes appended until unused.
fn primed_fresh<'a>(names: impl Iterator<Item = &'a str>) -> String {
    let names: BTreeSet<&str> = names.collect();
    let mut out = names.iter().next_back().copied().unwrap_or("x").to_string();
    while names.contains(out.as_str()) {
        out.push('\'');
    }
    out
}

/// `∀z (Vss(z) → (Eps(z, s) ↔ Eps(z, t)))`, with `z` fresh for the scope.
pub fn congruence(s: &Term, t: &Term, scope: &[String]) -> Formula {
    let mut atom_vars = s.vars();
    atom_vars.extend(t.vars());
    let z = fresh_variable(scope, &atom_vars);
    let zt = Term::var(&z);
    Formula::forall(
        &z,
        Formula::implies(
            Formula::pred("Vss", vec![zt.clone()]),
            Formula::iff(
                Formula::pred("Eps", vec![zt.clone(), s.clone()]),
                Formula::pred("Eps", vec![zt, t.clone()]),
            ),
        ),
    )
}

/// The interpretation over arbitrary set codes:
/// `x ∈ y ↦ SetPlus(x) ∧ Eps(x, y)`, identity kept, domain `SetPlus`.
pub fn translate_plus(f: &Formula) -> Formula {
    with_free_scope(f, "SetPlus", &mut |atom, _| match atom {
        Formula::Pred(p, args) if p == "in" && args.len() == 2 => Formula::and(
            Formula::pred("SetPlus", vec![args[0].clone()]),
            Formula::pred("Eps", args.clone()),
        ),
        other => other.clone(),
    })
}

/// The interpretation over canonical codes: `x ∈ y ↦ Eps(x, y)`,
/// `x = y ↦ ∀z (Vss(z) → (Eps(z, x) ↔ Eps(z, y)))`, domain `Vss`.
pub fn translate_star(f: &Formula) -> Formula {
    with_free_scope(f, "Vss", &mut |atom, scope| match atom {
        Formula::Pred(p, args) if p == "in" && args.len() == 2 => Formula::pred("Eps", args.clone()),
        Formula::Eq(s, t) => congruence(s, t, scope),
        other => other.clone(),
    })
}

/// How `=` is carried across by [`translate_starstar`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EqualityMode {
    /// `x = y ↦ ∀z (Vss(z) → (Eps(z, x) ↔ Eps(z, y)))`.
    Congruence,
    /// `x = y ↦ x = y`.
    Identity,
}

fn replace_zero(t: &Term) -> Term {
    match t {
        Term::Const(c) if c == "0" => Term::constant("aa"),
        Term::App(f, args) => Term::App(f.clone(), args.iter().map(replace_zero).collect()),
        other => other.clone(),
    }
}

/// The interpretation of the relational adjunction language:
/// `S(x, y, z) ↦ Sigma(x, y, z)`, `0 ↦ aa`, domain `Vss`.
pub fn translate_starstar(f: &Formula, mode: EqualityMode) -> Formula {
    with_free_scope(f, "Vss", &mut |atom, scope| match atom {
        Formula::Pred(p, args) if p == "S" => Formula::pred("Sigma", args.iter().map(replace_zero).collect()),
        Formula::Pred(p, args) => Formula::pred(p, args.iter().map(replace_zero).collect()),
        Formula::Eq(s, t) => {
            let (s, t) = (replace_zero(s), replace_zero(t));
            match mode {
                EqualityMode::Congruence => congruence(&s, &t, scope),
                EqualityMode::Identity => Formula::eq(s, t),
            }
        }
        other => other.clone(),
    })
}

/// Universal closure, outermost quantifier for the first free variable.
pub fn universal_closure(f: &Formula) -> Formula {
    f.free_vars()
        .iter()
        .rev()
        .fold(f.clone(), |acc, v| Formula::forall(v, acc))
}

/// `D(x₁) ∧ … ∧ D(xₙ) → φ` over the free variables of `φ`, in first
/// occurrence order; `φ` itself when it is closed.
pub fn guarded(f: &Formula, domain: &str) -> Formula {
    let order = f.free_vars();
    let order: Vec<&str> = order.iter().map(String::as_str).collect();
    guarded_in_order(f, domain, &order)
}

/// As [`guarded`] with the guard order given explicitly.
pub fn guarded_in_order(f: &Formula, domain: &str, order: &[&str]) -> Formula {
    match Formula::conj(order.iter().map(|v| Formula::pred_vars(domain, &[*v]))) {
        Some(g) => Formula::implies(g, f.clone()),
        None => f.clone(),
    }
}

/// Rewrite equations between `;`-terms into statements about the ternary
/// relation `S`.
///
/// An equation with one compound side `s;t` (whose arguments are simple)
/// and one simple side `r` becomes `S(s, t, r)`. Any other equation
/// involving `;` names each distinct compound subterm by a fresh variable
/// and becomes `∀v₁…vₙ (S(…) ∧ … → e)` where `e` equates the names.
pub fn flatten_ps0(f: &Formula) -> Formula {
    let mut used: BTreeSet<String> = f.all_vars();
    flatten_rec(f, &mut used)
}

fn flatten_rec(f: &Formula, used: &mut BTreeSet<String>) -> Formula {
    match f {
        Formula::Eq(l, r) => flatten_equation(l, r, used),
        Formula::Pred(..) => f.clone(),
        Formula::Not(g) => Formula::not(flatten_rec(g, used)),
        Formula::And(l, r) => {
            let l = flatten_rec(l, used);
            Formula::and(l, flatten_rec(r, used))
        }
        Formula::Or(l, r) => {
            let l = flatten_rec(l, used);
            Formula::or(l, flatten_rec(r, used))
        }
        Formula::Implies(l, r) => {
            let l = flatten_rec(l, used);
            Formula::implies(l, flatten_rec(r, used))
        }
        Formula::Iff(l, r) => {
            let l = flatten_rec(l, used);
            Formula::iff(l, flatten_rec(r, used))
        }
        Formula::Forall(v, g) => Formula::forall(v, flatten_rec(g, used)),
        Formula::Exists(v, g) => Formula::exists(v, flatten_rec(g, used)),
    }
}

fn adjunction_args(t: &Term) -> Option<(&Term, &Term)> {
    match t {
        Term::App(op, args) if op == ";" && args.len() == 2 => Some((&args[0], &args[1])),
        _ => None,
    }
}

fn flatten_equation(l: &Term, r: &Term, used: &mut BTreeSet<String>) -> Formula {
    let s_atom = |x: Term, y: Term, z: Term| Formula::pred("S", vec![x, y, z]);
    if l.is_simple() && r.is_simple() {
        return Formula::eq(l.clone(), r.clone());
    }
    for (compound, simple) in [(l, r), (r, l)] {
        if let (Some((x, y)), true) = (adjunction_args(compound), simple.is_simple()) {
            if x.is_simple() && y.is_simple() {
                return s_atom(x.clone(), y.clone(), simple.clone());
            }
        }
    }
    // name every compound subterm, innermost first, sharing equal ones
    let mut names: Vec<(Term, String)> = Vec::new();
    let mut constraints: Vec<Formula> = Vec::new();
    let mut name_of = |t: &Term, used: &mut BTreeSet<String>| -> Term {
        fn go(
            t: &Term,
            used: &mut BTreeSet<String>,
            names: &mut Vec<(Term, String)>,
            constraints: &mut Vec<Formula>,
        ) -> Term {
            let Some((x, y)) = adjunction_args(t) else {
                return t.clone();
            };
            let x = go(x, used, names, constraints);
            let y = go(y, used, names, constraints);
            if let Some((_, n)) = names.iter().find(|(u, _)| u == t) {
                return Term::var(n);
            }
            let n = primed_fresh(used.iter().map(String::as_str));
            used.insert(n.clone());
            constraints.push(Formula::pred("S", vec![x, y, Term::var(&n)]));
            names.push((t.clone(), n.clone()));
            Term::var(&n)
        }
        go(t, used, &mut names, &mut constraints)
    };
    let ln = name_of(l, used);
    let rn = name_of(r, used);
    let fresh: Vec<String> = names.iter().map(|(_, n)| n.clone()).collect();
    let body = Formula::implies(
        Formula::conj(constraints).expect("at least one compound term"),
        Formula::eq(ln, rn),
    );
    fresh.iter().rev().fold(body, |acc, v| Formula::forall(v, acc))
}
