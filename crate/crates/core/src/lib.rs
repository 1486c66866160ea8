//! Finite sets of strings coded as strings over `{a, b}`.
//!
//! The crate provides words and tallies ([`word`]), the orders used to sort
//! members ([`order`]), step-ladder set codes with canonical encoding and
//! adjunction ([`setcode`]), an independent literal evaluator of the
//! definitions ([`oracle`]), first-order syntax and interpretation maps
//! ([`logic`]), dyadic arithmetic ([`arith`]), finite-model checking of axiom
//! suites ([`eval`]) and the command-line front end ([`cli`]).

pub mod arith;
pub mod cli;
pub mod eval;
pub mod logic;
pub mod oracle;
pub mod order;
pub mod setcode;
pub mod word;

pub use oracle::FiniteWordSet;
pub use setcode::{adjoin, canonical_encode, classify, is_canonical, is_member, is_set, members, CodeClass, Frame, FrameKind, SetCodeError};
pub use word::{Tally, Word, WordError};
