//! Formulas: representation, parsing, printing and structural operations.

mod adequate;
mod formula;
mod parse;
mod print;

pub use adequate::{box_closure_formulas, AdequateSet};
pub use formula::Formula;
pub use parse::parse;
pub use print::{print, print_with, Glyphs};
