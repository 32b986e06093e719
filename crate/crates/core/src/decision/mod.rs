//! Maximal consistent sets, the lemma witnesses and canonical models,
//! bounded refutation and the correspondence harness.

mod canonical;
mod kset;
mod lemmas;
mod phi;
mod search;

pub use canonical::{
    build_canonical, conditions_hold, construction_for, Audit, CanonicalModel, CanonicalWorld, Construction, PairRule,
    SetRule, Tag, PAIR_RULES,
};
pub use kset::{membership_counts, realized_types, sample_frames, KSet, TypeWitness};
pub use lemmas::{lemma_witness, missing_witnesses, LemmaInputs, LemmaKind, MissingWitness};
pub use phi::{prec, rank, ranks, MaximalSet, Phi, UnaryEntry};
pub use search::{
    bounded_countermodel, canonical_countermodel, certify, correspond, decide, enumerate_k, verify_countermodel, Agreement, Consistency,
    ConsistencyOracle, CorrespondReport, Countermodel, Decision, OracleMode, ProofSource,
};
