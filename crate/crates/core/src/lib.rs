//! A proof kernel for the sequent calculi G3m, G3i and G3c extended by
//! atomic rule schemas, together with the proof transformations that
//! witness admissibility of the structural rules in those systems.
//!
//! The crate is organised around a small trusted core:
//!
//! * [`syntax`] — first-order terms, formulas and sequents (multisets),
//!   parsing, printing and capture-avoiding substitution;
//! * [`calculus`] — the rule tables of the three calculi, the atomic rule
//!   schema language (with the built-in equality rules `ref` and `repl`),
//!   derivation trees and the validity checker;
//! * [`transform`] — total transformations on checked derivations:
//!   height-preserving weakening and substitution, atomic cores,
//!   invertibility, separation, expansion and elimination of the
//!   structural rules, and the equality-specific normalizers;
//! * [`search`] — bounded backward proof search, exhaustive refutation
//!   at a height bound, and a seeded random derivation generator;
//! * [`file`] — the textual derivation and schema file formats.
//!
//! Every transformation produces derivations that re-check with
//! [`calculus::check`]; the checker is the oracle for the whole crate.

pub mod calculus;
pub mod file;
pub mod search;
pub mod syntax;
pub mod transform;

pub use calculus::{check, AtomicRuleSchema, Calculus, Derivation, Flavor, Rule, StructRule};
pub use syntax::{Formula, Multiset, Sequent, Term};
