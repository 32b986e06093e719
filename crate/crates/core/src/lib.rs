//! Reasoning toolkit for interpretability logics and their unary
//! counterparts.
//!
//! - [`syntax`]: formulas over `⊥`, variables, `→`, `□`, `▷` with `I A := ⊤ ▷ A`.
//! - [`semantics`]: finite Veltman and Verbrugge frames, satisfaction,
//!   frame conditions, schema validity and exhaustive frame enumeration.
//! - [`calculus`]: axiom schemata, the registry of binary and unary logics,
//!   a Hilbert-style proof checker and a corpus of checked derivations.
//! - [`decision`]: maximal consistent sets over adequate sets, the `≺`
//!   relation, canonical countermodel constructions, bounded refutation and
//!   the binary/unary correspondence harness.
//! - [`fixedpoint`]: explicit fixed points of modalized unary formulas and
//!   their semantic verification.
//! - [`cli`]: the `ilkit` command-line front end.
//!
//! Runnable programs for each capability live in `examples/`.

pub mod calculus;
pub mod cli;
pub mod decision;
pub mod fixedpoint;
pub mod semantics;
pub mod syntax;

mod error;

pub use error::Error;
pub use syntax::{parse, print, Formula};
