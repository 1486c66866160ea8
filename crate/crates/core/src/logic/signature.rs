//! First-order signatures used by the crate.

use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixity {
    /// `f(t, …)`
    Prefix,
    /// `t op t`, left associative
    Infix,
    /// `t op`
    Postfix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionSymbol {
    pub name: String,
    pub arity: usize,
    pub fixity: Fixity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub name: String,
    pub constants: Vec<String>,
    pub functions: Vec<FunctionSymbol>,
    pub predicates: Vec<(String, usize)>,
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn func(name: &str, arity: usize, fixity: Fixity) -> FunctionSymbol {
    FunctionSymbol {
        name: name.to_string(),
        arity,
        fixity,
    }
}

fn preds(xs: &[(&str, usize)]) -> Vec<(String, usize)> {
    xs.iter().map(|(n, a)| (n.to_string(), *a)).collect()
}

/// Binding strength of an infix function symbol; higher binds tighter.
pub fn infix_precedence(op: &str) -> u8 {
    match op {
        "*" => 2,
        _ => 1,
    }
}

impl Signature {
    /// Names of every signature, in the order [`Signature::by_name`] accepts.
    pub const NAMES: [&'static str; 9] = [
        "set", "qt", "qt-defs", "ps0", "ps0'", "q", "seq", "target", "target-lemmas",
    ];

    /// `{∈}`.
    pub fn set() -> Signature {
        Signature {
            name: "set".into(),
            constants: vec![],
            functions: vec![],
            predicates: preds(&[("in", 2)]),
        }
    }

    /// `{*, a, b, S}`.
    pub fn qt() -> Signature {
        Signature {
            name: "qt".into(),
            constants: strings(&["a", "b"]),
            functions: vec![func("*", 2, Fixity::Infix), func("S", 1, Fixity::Prefix)],
            predicates: vec![],
        }
    }

    /// Concatenation plus the defined order predicates.
    pub fn qt_defs() -> Signature {
        let mut sig = Signature::qt();
        sig.name = "qt-defs".into();
        sig.predicates = preds(&[
            ("B", 2),
            ("E", 2),
            ("Part", 2),
            ("R", 2),
            ("Lt", 2),
            ("Leq", 2),
            ("I0", 1),
            ("Tally", 1),
            ("Lex", 2),
            ("Mlex", 2),
            ("TLess", 2),
            ("TEq", 2),
        ]);
        sig
    }

    /// `{0, ;}`.
    pub fn ps0() -> Signature {
        Signature {
            name: "ps0".into(),
            constants: strings(&["0"]),
            functions: vec![func(";", 2, Fixity::Infix)],
            predicates: vec![],
        }
    }

    /// `{0, S}` with `S` ternary.
    pub fn ps0_prime() -> Signature {
        Signature {
            name: "ps0'".into(),
            constants: strings(&["0"]),
            functions: vec![],
            predicates: preds(&[("S", 3)]),
        }
    }

    /// `{0, ', +, ·}`.
    pub fn q() -> Signature {
        Signature {
            name: "q".into(),
            constants: strings(&["0"]),
            functions: vec![
                func("'", 1, Fixity::Postfix),
                func("+", 2, Fixity::Infix),
                func("*", 2, Fixity::Infix),
            ],
            predicates: vec![],
        }
    }

    /// Dyadic sequence codes: `Seq`, `Seq*`, term-of, `^`, `c1`, `c2`.
    pub fn seq() -> Signature {
        Signature {
            name: "seq".into(),
            constants: strings(&["0", "c1", "c2"]),
            functions: vec![func("^", 2, Fixity::Infix), func("S", 1, Fixity::Prefix)],
            predicates: preds(&[("Seq", 1), ("SeqStar", 1), ("in", 2)]),
        }
    }

    /// Concatenation extended with the named predicates the translations emit.
    pub fn target() -> Signature {
        let mut sig = Signature::qt();
        sig.name = "target".into();
        sig.constants.push("aa".into());
        sig.predicates = preds(&[("SetPlus", 1), ("Eps", 2), ("Vss", 1), ("Cong", 2), ("Sigma", 3)]);
        sig
    }

    /// The translation target plus `Set`, `SetStar` and `Same` for stating
    /// the coding lemmas.
    pub fn target_lemmas() -> Signature {
        let mut sig = Signature::target();
        sig.name = "target-lemmas".into();
        sig.predicates.extend(preds(&[("Set", 1), ("SetStar", 1), ("Same", 2)]));
        sig
    }

    pub fn by_name(name: &str) -> Option<Signature> {
        Some(match name {
            "set" => Signature::set(),
            "qt" => Signature::qt(),
            "qt-defs" => Signature::qt_defs(),
            "ps0" => Signature::ps0(),
            "ps0'" => Signature::ps0_prime(),
            "q" => Signature::q(),
            "seq" => Signature::seq(),
            "target" => Signature::target(),
            "target-lemmas" => Signature::target_lemmas(),
            _ => return None,
        })
    }

    pub fn is_constant(&self, name: &str) -> bool {
        self.constants.iter().any(|c| c == name)
    }

    pub fn function(&self, name: &str) -> Option<&FunctionSymbol> {
        self.functions.iter().find(|f| f.name == name)
    }

    pub fn predicate_arity(&self, name: &str) -> Option<usize> {
        self.predicates.iter().find(|(n, _)| n == name).map(|(_, a)| *a)
    }

    /// Whether `'` is the successor symbol rather than part of variable names.
    pub fn has_postfix_prime(&self) -> bool {
        self.function("'").is_some()
    }

    /// Symbol names are unique across constants, functions and predicates.
    pub fn names_are_unique(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.constants
            .iter()
            .chain(self.functions.iter().map(|f| &f.name))
            .chain(self.predicates.iter().map(|(n, _)| n))
            .all(|n| seen.insert(n.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_signature_has_unique_names() {
        for name in Signature::NAMES {
            let sig = Signature::by_name(name).unwrap();
            assert_eq!(sig.name, name);
            assert!(sig.names_are_unique(), "{name}");
        }
    }

    #[test]
    fn symbol_lookup() {
        assert_eq!(Signature::ps0_prime().predicate_arity("S"), Some(3));
        assert_eq!(Signature::qt().function("S").unwrap().arity, 1);
        assert!(Signature::q().has_postfix_prime());
        assert!(!Signature::ps0_prime().has_postfix_prime());
        assert!(Signature::target().is_constant("aa"));
    }
}
