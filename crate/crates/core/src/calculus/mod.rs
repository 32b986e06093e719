//! Axiom schemata, the logic registry, a Hilbert-style proof checker and a
//! corpus of checked derivations.

mod corpus;
mod logic;
mod proof;
mod schema;
mod taut;

pub use corpus::{corpus_entry, proof_corpus, CorpusEntry};
pub use logic::{logic, logic_counterpart, registry, registry_json, semantic_partner, Language, Logic, Rule};
pub use proof::{check_proof, parse_script, Justification, Proof, ProofBuilder, Script, Step, Verdict};
pub use schema::{catalog, schema, Schema};
pub use taut::is_tautology;

use crate::{Error, Formula};

/// Unary formulas already are binary formulas: `I A` is stored as `⊤ ▷ A`.
pub fn unary_to_binary(f: &Formula) -> Result<Formula, Error> {
    if f.is_unary() {
        Ok(f.clone())
    } else {
        Err(Error::NotUnary(crate::print(f)))
    }
}
