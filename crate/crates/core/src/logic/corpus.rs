//! The fixed corpus of axioms, definitions and translated displays, each in
//! the printer's canonical text form.

use super::ast::Formula;
use super::signature::Signature;
use super::syntax::{parse_formula, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: &'static str,
    /// Name accepted by [`Signature::by_name`].
    pub sig: &'static str,
    pub text: &'static str,
}

impl CorpusEntry {
    pub fn signature(&self) -> Signature {
        Signature::by_name(self.sig).expect("corpus signatures are known")
    }

    pub fn parse(&self) -> Result<Formula, ParseError> {
        parse_formula(self.text, &self.signature())
    }

    /// The parsed formula; corpus entries always parse.
    pub fn formula(&self) -> Formula {
        self.parse().unwrap_or_else(|e| panic!("corpus entry {}: {e}", self.id))
    }
}

const fn e(id: &'static str, sig: &'static str, text: &'static str) -> CorpusEntry {
    CorpusEntry { id, sig, text }
}

pub const CORPUS: &[CorpusEntry] = &[
    // concatenation
    e("QT1", "qt", "(x*y)*z = x*(y*z)"),
    e("QT2", "qt", "~(x*y = a) & ~(x*y = b)"),
    e("QT3", "qt", "(x*a = y*a -> x = y) & (x*b = y*b -> x = y) & (a*x = a*y -> x = y) & (b*x = b*y -> x = y)"),
    e("QT4", "qt", "~(a*x = b*y) & ~(x*a = y*b)"),
    e("QT5", "qt", "x = a | x = b | exists y (a*y = x | b*y = x) & exists z (z*a = x | z*b = x)"),
    e("QT6", "qt", "S(x) = y <-> x = a & y = b | ~(x = a) & x*b = y"),
    // defined relations over concatenation
    e("def-B", "qt-defs", "B(x,y) <-> exists z (x*z = y)"),
    e("def-E", "qt-defs", "E(x,y) <-> exists z (z*x = y)"),
    e("def-Part", "qt-defs", "Part(x,y) <-> x = y | B(x,y) | E(x,y) | exists y1 exists y2 (y = y1*(x*y2))"),
    e("def-R", "qt-defs", "R(x,y) <-> x = a & ~(y = a) | B(x,y)"),
    e("R-succ", "qt-defs", "R(x,S(x))"),
    e("S-inj", "qt-defs", "S(x) = S(y) -> x = y"),
    e("R-least", "qt-defs", "~R(x,a) & (~(x = a) -> R(a,x))"),
    e("R-trans", "qt-defs", "R(x,y) & R(y,z) -> R(x,z)"),
    e("R-succ-step", "qt-defs", "R(x,S(y)) <-> R(x,y) | x = y"),
    e("R-irrefl-letters", "qt-defs", "~R(a,a) & ~R(b,b)"),
    e("def-I0", "qt-defs", "I0(y) <-> forall x (R(x,y) | x = y -> ~R(x,x))"),
    e("I0-letters", "qt-defs", "I0(a) & I0(b)"),
    e("I0-irrefl", "qt-defs", "I0(x) -> ~R(x,x)"),
    e("I0-antisym", "qt-defs", "I0(x) -> ~(R(x,y) & R(y,x))"),
    e("def-Lt", "qt-defs", "Lt(x,y) <-> I0(x) & I0(y) & R(x,y)"),
    e("def-Leq", "qt-defs", "Leq(x,y) <-> Lt(x,y) | x = y"),
    e("T0-1", "qt-defs", "forall x (I0(x) -> Leq(a,x))"),
    e(
        "T0-2",
        "qt-defs",
        "forall x (I0(x) -> forall y (I0(y) -> forall z (I0(z) -> (Leq(x,y) & Leq(y,z) -> Leq(x,z)))))",
    ),
    e("T0-3", "qt-defs", "forall x (I0(x) -> Leq(x,S(x)) & ~(x = S(x)))"),
    e("T0-4", "qt-defs", "forall x (I0(x) -> forall y (I0(y) -> (Leq(x,S(y)) <-> Leq(x,y) | x = S(y))))"),
    e("T0-5", "qt-defs", "forall x (I0(x) -> forall y (I0(y) -> (S(x) = S(y) -> x = y)))"),
    e("T0-6", "qt-defs", "forall x (I0(x) -> forall y (I0(y) -> (Leq(x,y) & Leq(y,x) -> x = y)))"),
    e("tally-total", "qt-defs", "forall z forall x (Tally(x) & Tally(z) -> Leq(x,z) | Leq(z,x))"),
    e("lex-total", "qt-defs", "Lex(u,v) | u = v | Lex(v,u)"),
    e("lex-asym", "qt-defs", "Lex(u,v) -> ~Lex(v,u)"),
    e("lex-trans", "qt-defs", "Lex(u,v) & Lex(v,w) -> Lex(u,w)"),
    e("mlex-total", "qt-defs", "Mlex(u,v) | u = v | Mlex(v,u)"),
    e("mlex-asym", "qt-defs", "Mlex(u,v) -> ~Mlex(v,u)"),
    e("mlex-trans", "qt-defs", "Mlex(u,v) & Mlex(v,w) -> Mlex(u,w)"),
    e("tally-trichotomy", "qt-defs", "TLess(u,v) | TEq(u,v) | TLess(v,u)"),
    e("lt-trans", "qt-defs", "Lt(u,v) & Lt(v,w) -> Lt(u,w)"),
    // adjunctive set theory
    e("NULL", "set", "exists x forall y ~(y in x)"),
    e("ADJ", "set", "forall x forall y exists z forall w (w in z <-> w in x | w = y)"),
    e("EXT", "set", "forall x forall y (forall z (z in x <-> z in y) -> x = y)"),
    e(
        "ADJ-variant",
        "set",
        "forall x forall y exists z (y in z & forall w (w in x -> w in z) & forall w (w in z -> w in x | w = y))",
    ),
    // translations into concatenation with named set-code predicates
    e("NULL+", "target", "exists x (SetPlus(x) & forall y (SetPlus(y) -> ~(SetPlus(y) & Eps(y,x))))"),
    e(
        "ADJ+",
        "target",
        "forall x forall y (SetPlus(x) & SetPlus(y) -> exists z (SetPlus(z) & forall w (SetPlus(w) -> (SetPlus(w) & Eps(w,z) <-> SetPlus(w) & Eps(w,x) | w = y))))",
    ),
    e("def-Cong", "target", "Cong(x,y) <-> forall z (Vss(z) -> (Eps(z,x) <-> Eps(z,y)))"),
    e("NULL*", "target", "exists x (Vss(x) & forall y (Vss(y) -> ~Eps(y,x)))"),
    e(
        "ADJ-variant*",
        "target",
        "forall x (Vss(x) -> forall y (Vss(y) -> exists z (Vss(z) & Eps(y,z) & forall w (Vss(w) -> (Eps(w,x) -> Eps(w,z))) & forall w (Vss(w) -> (Eps(w,z) -> Eps(w,x) | forall v (Vss(v) -> (Eps(v,w) <-> Eps(v,y))))))))",
    ),
    e(
        "EXT*",
        "target",
        "forall x (Vss(x) -> forall y (Vss(y) -> (forall z (Vss(z) -> (Eps(z,x) <-> Eps(z,y))) -> forall z (Vss(z) -> (Eps(z,x) <-> Eps(z,y))))))",
    ),
    // coding lemmas
    e("null-set-lemma", "target-lemmas", "exists z (Set(z) & z = aa & forall y ~Eps(y,z))"),
    e(
        "set-code-dichotomy",
        "target-lemmas",
        "forall z (Set(z) -> (z = aa | exists y Eps(y,z)) & ~(z = aa & exists y Eps(y,z)))",
    ),
    e(
        "set-adjunction-lemma",
        "target-lemmas",
        "forall x forall y (Set(x) -> exists z (Set(z) & forall w (Eps(w,z) <-> Eps(w,x) | w = y)))",
    ),
    e(
        "strong-adjunction-explicit",
        "target-lemmas",
        "forall x forall y (Vss(x) & Vss(y) -> exists z (Vss(z) & Sigma(x,y,z) & forall z' (Vss(z') & Sigma(x,y,z') -> z' = z)) & forall z (Sigma(x,y,z) -> forall w (Eps(w,z) <-> Eps(w,x) | w = y)) & (Sigma(x,y,x) <-> Eps(y,x)))",
    ),
    e("uniqueness-lemma", "target-lemmas", "SetStar(x) & SetStar(y) & Same(x,y) -> x = y"),
    // Robinson arithmetic
    e("Q1", "q", "~(x' = 0)"),
    e("Q2", "q", "x' = y' -> x = y"),
    e("Q3", "q", "x = 0 | exists y (y' = x)"),
    e("Q4", "q", "x + 0 = x"),
    e("Q5", "q", "x + y' = (x + y)'"),
    e("Q6", "q", "x*0 = 0"),
    e("Q7", "q", "x*y' = x*y + x"),
    // dyadic sequence codes
    e(
        "def-SeqStar",
        "seq",
        "SeqStar(x) <-> Seq(x) & exists y (y in x) & forall y (y in x -> y = S(0) | y = S(S(0)))",
    ),
    e("t0", "seq", "exists s SeqStar(s)"),
    e(
        "t1",
        "seq",
        "exists s (SeqStar(s) & forall x (x in s <-> x = c1) & forall s' (SeqStar(s') & forall x (x in s' <-> x = c1) -> s' = s))",
    ),
    e(
        "t2",
        "seq",
        "exists s (SeqStar(s) & forall x (x in s <-> x = c2) & forall s' (SeqStar(s') & forall x (x in s' <-> x = c2) -> s' = s))",
    ),
    e(
        "t3",
        "seq",
        "SeqStar(s) & SeqStar(t) -> exists u (SeqStar(u) & s^t = u & forall u' (SeqStar(u') & s^t = u' -> u' = u))",
    ),
    e("t4", "seq", "SeqStar(s) & SeqStar(t) & SeqStar(u) -> (s^t)^u = s^(t^u)"),
    e("t5", "seq", "SeqStar(s) & SeqStar(t) -> ~(s^t = c1) & ~(s^t = c2)"),
    e("t6", "seq", "SeqStar(s) & SeqStar(t) -> (c1^s = c1^t -> s = t) & (c2^s = c2^t -> s = t)"),
    e("t7", "seq", "SeqStar(s) & SeqStar(t) -> (s^c1 = t^c1 -> s = t) & (s^c2 = t^c2 -> s = t)"),
    e("t8", "seq", "SeqStar(s) & SeqStar(t) -> ~(c1^s = c2^t) & ~(s^c1 = t^c2)"),
    e(
        "t9",
        "seq",
        "SeqStar(s) -> s = c1 | s = c2 | exists t (SeqStar(t) & (c1^t = s | c2^t = s)) & exists t (SeqStar(t) & (t^c1 = s | t^c2 = s))",
    ),
    // quantifier-free finitary set theory
    e("PS1", "ps0", "~(0;x = 0)"),
    e("PS2", "ps0", "(x;y);y = x;y"),
    e("PS3", "ps0", "(x;y);z = (x;z);y"),
    e("PS4", "ps0", "(x;y);z = x;y <-> x;z = x | z = y"),
    e("PS-derived", "ps0", "x;z = x | z = y -> (x;y);z = x;y"),
    e("PS-membership", "ps0", "x;y = x"),
    e("PS1'", "ps0'", "~S(0,x,0)"),
    e("PS2'", "ps0'", "S(x,y,z1) & S(z1,y,z2) -> z1 = z2"),
    e("PS3'", "ps0'", "S(x,y,z1) & S(z1,z,z2) & S(x,z,z3) & S(z3,y,z4) -> z2 = z4"),
    e("PS4'", "ps0'", "S(x,y,z) & S(z,w,z) -> S(x,w,x) | w = y"),
    e("PS5'", "ps0'", "exists z S(x,y,z)"),
    e("PS6'", "ps0'", "S(x,y,z1) & S(x,y,z2) -> z1 = z2"),
    e("EXT'", "ps0'", "forall x forall y (forall z (S(x,z,x) <-> S(y,z,y)) -> x = y)"),
    e("EXT'-matrix", "ps0'", "forall z (S(x,z,x) <-> S(y,z,y)) -> x = y"),
    // the relational adjunction theory carried into concatenation
    e("(i)", "target", "Vss(x) -> ~Sigma(aa,x,aa)"),
    e("(ii)", "target", "Vss(x) & Vss(y) & Vss(z1) & Vss(z2) -> (Sigma(x,y,z1) & Sigma(z1,y,z2) -> z1 = z2)"),
    e(
        "(iii)",
        "target",
        "Vss(x) & Vss(y) & Vss(z) & Vss(z1) & Vss(z2) & Vss(z3) & Vss(z4) -> (Sigma(x,y,z1) & Sigma(z1,z,z2) & Sigma(x,z,z3) & Sigma(z3,y,z4) -> z2 = z4)",
    ),
    e("(iv)", "target", "Vss(x) & Vss(y) & Vss(z) & Vss(w) -> (Sigma(x,y,z) & Sigma(z,w,z) -> Sigma(x,w,x) | w = y)"),
    e("(v)", "target", "Vss(x) & Vss(y) -> exists z (Vss(z) & Sigma(x,y,z))"),
    e("(vi)", "target", "Vss(x) & Vss(y) & Vss(z1) & Vss(z2) -> (Sigma(x,y,z1) & Sigma(x,y,z2) -> z1 = z2)"),
    e("(i**)", "target", "Vss(x) -> ~Sigma(aa,x,aa)"),
    e(
        "(ii**)",
        "target",
        "Vss(x) & Vss(y) & Vss(z1) & Vss(z2) -> (Sigma(x,y,z1) & Sigma(z1,y,z2) -> forall z (Vss(z) -> (Eps(z,z1) <-> Eps(z,z2))))",
    ),
    e(
        "(iii**)",
        "target",
        "Vss(x) & Vss(y) & Vss(z) & Vss(z1) & Vss(z2) & Vss(z3) & Vss(z4) -> (Sigma(x,y,z1) & Sigma(z1,z,z2) & Sigma(x,z,z3) & Sigma(z3,y,z4) -> forall v (Vss(v) -> (Eps(v,z2) <-> Eps(v,z4))))",
    ),
    e(
        "(iv**)",
        "target",
        "Vss(x) & Vss(y) & Vss(z) & Vss(w) -> (Sigma(x,y,z) & Sigma(z,w,z) -> Sigma(x,w,x) | forall v (Vss(v) -> (Eps(v,w) <-> Eps(v,y))))",
    ),
    e("(v**)", "target", "Vss(x) & Vss(y) -> exists z (Vss(z) & Sigma(x,y,z))"),
    e(
        "(vi**)",
        "target",
        "Vss(x) & Vss(y) & Vss(z1) & Vss(z2) -> (Sigma(x,y,z1) & Sigma(x,y,z2) -> forall z (Vss(z) -> (Eps(z,z1) <-> Eps(z,z2))))",
    ),
    e(
        "(EXT**)",
        "target",
        "Vss(x) & Vss(y) -> (forall z (Vss(z) -> (Sigma(x,z,x) <-> Sigma(y,z,y))) -> forall z (Vss(z) -> (Eps(z,x) <-> Eps(z,y))))",
    ),
];

/// The corpus entry with the given id.
pub fn entry(id: &str) -> Option<&'static CorpusEntry> {
    CORPUS.iter().find(|c| c.id == id)
}

/// The parsed formula of a corpus entry.
///
/// # Panics
///
/// When `id` is not in the corpus.
pub fn formula(id: &str) -> Formula {
    entry(id).unwrap_or_else(|| panic!("no corpus entry {id}")).formula()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::syntax::print_formula;
    use crate::logic::translate::*;
    use std::collections::BTreeSet;

    fn squash(s: &str) -> String {
        s.chars().filter(|c| !c.is_whitespace()).collect()
    }

    #[test]
    fn ids_are_unique() {
        let ids: BTreeSet<_> = CORPUS.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), CORPUS.len());
    }

    #[test]
    fn every_entry_round_trips() {
        for c in CORPUS {
            let f = c.formula();
            let printed = print_formula(&f);
            assert_eq!(squash(&printed), squash(c.text), "{}", c.id);
            assert_eq!(parse_formula(&printed, &c.signature()).unwrap(), f, "{}", c.id);
        }
    }

    #[test]
    fn plus_and_star_translations_match_displays() {
        assert_eq!(translate_plus(&formula("NULL")), formula("NULL+"));
        assert_eq!(translate_star(&formula("NULL")), formula("NULL*"));
        assert_eq!(translate_star(&formula("EXT")), formula("EXT*"));
        assert!(translate_star(&formula("ADJ-variant")).alpha_eq_assoc(&formula("ADJ-variant*")));
    }

    #[test]
    fn plus_translation_of_adjunction_differs_from_display_only_in_grouping() {
        let ours = translate_plus(&formula("ADJ"));
        assert_ne!(ours, formula("ADJ+"));
        assert_eq!(ours.quantifier_count(), formula("ADJ+").quantifier_count());
    }

    #[test]
    fn relational_translations_match_displays() {
        let order_iii = ["x", "y", "z", "z1", "z2", "z3", "z4"];
        for (src, star, starstar) in [
            ("PS1'", "(i)", "(i**)"),
            ("PS2'", "(ii)", "(ii**)"),
            ("PS3'", "(iii)", "(iii**)"),
            ("PS4'", "(iv)", "(iv**)"),
            ("PS5'", "(v)", "(v**)"),
            ("PS6'", "(vi)", "(vi**)"),
            ("EXT'-matrix", "", "(EXT**)"),
        ] {
            let f = formula(src);
            let wrap = |g: Formula| {
                if src == "PS3'" {
                    guarded_in_order(&g, "Vss", &order_iii)
                } else {
                    guarded(&g, "Vss")
                }
            };
            if !star.is_empty() {
                assert_eq!(wrap(translate_starstar(&f, EqualityMode::Identity)), formula(star), "{star}");
            }
            assert_eq!(wrap(translate_starstar(&f, EqualityMode::Congruence)), formula(starstar), "{starstar}");
        }
    }

    #[test]
    fn flattening_reaches_the_relational_axioms() {
        assert_eq!(flatten_ps0(&formula("PS1")), formula("PS1'"));
        assert_eq!(flatten_ps0(&formula("PS-membership")), parse_formula("S(x,y,x)", &Signature::ps0_prime()).unwrap());
        let ps2 = flatten_ps0(&formula("PS2"));
        let ps2_expected = parse_formula("forall z1 forall z2 (S(x,y,z1) & S(z1,y,z2) -> z2 = z1)", &Signature::ps0_prime()).unwrap();
        assert!(ps2.alpha_eq(&ps2_expected), "{ps2}");
        let ps3 = flatten_ps0(&formula("PS3"));
        assert!(ps3.alpha_eq_assoc(&universal_closure_of_fresh(&formula("PS3'"), &["z1", "z2", "z3", "z4"])), "{ps3}");
    }

    /// Bind the listed free variables of `f` innermost-last, in the given order.
    fn universal_closure_of_fresh(f: &Formula, vars: &[&str]) -> Formula {
        vars.iter().rev().fold(f.clone(), |acc, v| Formula::forall(v, acc))
    }

    #[test]
    fn corpus_covers_every_signature() {
        let used: BTreeSet<_> = CORPUS.iter().map(|c| c.sig).collect();
        for name in Signature::NAMES {
            assert!(used.contains(name), "{name}");
        }
    }
}
