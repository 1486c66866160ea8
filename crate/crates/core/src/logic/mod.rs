//! First-order syntax: terms and formulas, signatures, a text parser and
//! printer, the fixed formula corpus, and syntax maps between signatures.

pub mod ast;
pub mod corpus;
pub mod signature;
pub mod syntax;
pub mod translate;

pub use ast::{Formula, Term};
pub use corpus::{CorpusEntry, CORPUS};
pub use signature::{Fixity, FunctionSymbol, Signature};
pub use syntax::{parse_formula, parse_lines, print_formula, print_term, ParseError, ParseErrorKind};
pub use translate::{
    flatten_ps0, guarded, guarded_in_order, relativize, translate_plus, translate_star, translate_starstar,
    universal_closure, EqualityMode,
};
