use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::canonical::{build_canonical, CanonicalModel};
use super::kset::{realized_types, KSet};
use super::phi::Phi;
use crate::calculus::{
    check_proof, is_tautology, logic_counterpart, proof_corpus, schema, semantic_partner, Justification, Language,
    Logic, Proof, Step,
};
use crate::semantics::{check_condition, frames_up_to, Evaluator, FrameKind, Model, WorldSet};
use crate::{Error, Formula};

/// A model and a world refuting some formula.
#[derive(Debug, Clone)]
pub struct Countermodel {
    pub model: Model,
    pub world: usize,
}

impl Countermodel {
    pub fn world_name(&self) -> &str {
        &self.model.frame.names()[self.world]
    }
}

/// Searches frames of `l`'s class meeting its conditions, smallest first,
/// under every valuation for a world refuting `f`. A unary logic is
/// searched through its semantic partner.
///
/// Finding nothing proves nothing: `f` may fail only on larger frames.
pub fn bounded_countermodel(l: &Logic, f: &Formula, max_worlds: usize) -> Result<Option<Countermodel>, Error> {
    let partner = semantic_partner(l)?;
    let kind = partner.frame_class.unwrap_or(FrameKind::Veltman);
    let ev = Evaluator::new([f]);
    let root = ev.index_of(f).expect("compiled");
    for n in 1..=max_worlds {
        let frames = frames_up_to(n, kind, &partner.conditions);
        for frame in frames.iter().filter(|fr| fr.len() == n) {
            for val in ev.valuations(n) {
                let truth = ev.evaluate(frame, &val);
                if let Some(w) = truth[root].complement(n).first() {
                    let val: BTreeMap<String, WorldSet> = ev.vars().iter().cloned().zip(val).collect();
                    return Ok(Some(Countermodel { model: Model::new(frame.clone(), val), world: w }));
                }
            }
        }
    }
    Ok(None)
}

/// Re-checks a countermodel: the world refutes `f` and the frame meets the
/// conditions of `l`'s semantic partner.
pub fn verify_countermodel(l: &Logic, f: &Formula, cm: &Countermodel) -> Result<bool, Error> {
    let partner = semantic_partner(l)?;
    for &c in &partner.conditions {
        if !check_condition(&cm.model.frame, c)? {
            return Ok(false);
        }
    }
    Ok(!cm.model.satisfies(cm.world, f)?)
}

fn certificate_pool(goal: &Formula) -> Vec<Formula> {
    let mut pool: Vec<Formula> = goal.subformulas().into_iter().collect();
    pool.push(Formula::top());
    pool.sort_by_key(|f| (f.size(), f.clone()));
    pool.dedup();
    pool.truncate(16);
    pool
}

/// Looks for a three- or four-line proof of `goal` in `l`: a tautology, or
/// one axiom instance (possibly necessitated) that tautologically implies
/// `goal`. Metavariables range over small subformulas of `goal`. Every
/// returned proof has been accepted by the checker.
pub fn certify(l: &Logic, goal: &Formula) -> Option<Proof> {
    let accept = |p: Proof| check_proof(l, &p, goal).is_accepted().then_some(p);
    if is_tautology(goal) {
        return accept(Proof { steps: vec![Step { formula: goal.clone(), just: Justification::Taut }] });
    }
    let pool = certificate_pool(goal);
    for name in &l.axioms {
        let Ok(s) = schema(name) else { continue };
        let vars = s.metavars();
        let combos = pool.len().pow(vars.len() as u32);
        if combos > 5000 {
            continue;
        }
        for code in 0..combos {
            let mut rest = code;
            let sub: BTreeMap<String, Formula> = vars
                .iter()
                .map(|v| {
                    let f = pool[rest % pool.len()].clone();
                    rest /= pool.len();
                    (v.clone(), f)
                })
                .collect();
            let Ok(inst) = s.instantiate(&sub) else { continue };
            let axiom = Step { formula: inst.clone(), just: Justification::Axiom { schema: s.name.to_string(), sub: Some(sub.clone()) } };
            let link = Formula::implies(inst.clone(), goal.clone());
            if is_tautology(&link) {
                return accept(Proof {
                    steps: vec![
                        axiom,
                        Step { formula: link, just: Justification::Taut },
                        Step { formula: goal.clone(), just: Justification::Mp(1, 2) },
                    ],
                });
            }
            let boxed = Formula::boxed(inst);
            let link = Formula::implies(boxed.clone(), goal.clone());
            if is_tautology(&link) {
                return accept(Proof {
                    steps: vec![
                        axiom,
                        Step { formula: boxed, just: Justification::Nec(1) },
                        Step { formula: link, just: Justification::Taut },
                        Step { formula: goal.clone(), just: Justification::Mp(2, 3) },
                    ],
                });
            }
        }
    }
    None
}

/// The three oracle modes. Every verdict carries a checkable witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum OracleMode {
    /// Consistency by a model on at most `max_worlds` worlds.
    BoundedRefutation { max_worlds: usize },
    /// Inconsistency by a short proof of `¬⋀X`.
    ProofCertificate,
    /// Both of the above, models up to `bound` worlds.
    Exhaustive { bound: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConsistencyOracle {
    pub mode: OracleMode,
}

impl Default for ConsistencyOracle {
    fn default() -> Self {
        ConsistencyOracle { mode: OracleMode::Exhaustive { bound: 3 } }
    }
}

#[derive(Debug, Clone)]
pub enum Consistency {
    Consistent(Countermodel),
    Inconsistent(Proof),
    Unknown,
}

impl ConsistencyOracle {
    pub fn bounded(max_worlds: usize) -> ConsistencyOracle {
        ConsistencyOracle { mode: OracleMode::BoundedRefutation { max_worlds } }
    }

    fn max_worlds(&self) -> Option<usize> {
        match self.mode {
            OracleMode::BoundedRefutation { max_worlds } => Some(max_worlds),
            OracleMode::Exhaustive { bound } => Some(bound),
            OracleMode::ProofCertificate => None,
        }
    }

    /// Decides whether `xs` is `l`-consistent, if a witness is found. A
    /// consistent verdict carries a model of `⋀xs`, an inconsistent one a
    /// proof of `¬⋀xs`.
    pub fn check(&self, l: &Logic, xs: &[Formula]) -> Result<Consistency, Error> {
        let negation = Formula::not(Formula::conj(xs.iter().cloned()));
        if !matches!(self.mode, OracleMode::BoundedRefutation { .. }) {
            if let Some(p) = certify(l, &negation) {
                return Ok(Consistency::Inconsistent(p));
            }
        }
        if let Some(m) = self.max_worlds() {
            if let Some(cm) = bounded_countermodel(l, &negation, m)? {
                return Ok(Consistency::Consistent(cm));
            }
        }
        Ok(Consistency::Unknown)
    }
}

/// Members of `K_ℓ` witnessed by the oracle: the `Φ`-types realized on
/// small models of `ℓ`'s semantic partner. Each member is consistent; sets
/// needing larger models are missed, which the lemma-closure check and the
/// canonical audits expose.
pub fn enumerate_k(l: &Logic, phi: &Arc<Phi>, oracle: &ConsistencyOracle) -> KSet {
    realized_types(l, phi, oracle.max_worlds().unwrap_or(3))
}

/// Where an accepted proof came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofSource {
    pub logic: String,
    /// `"supplied"`, `"certificate"` or a corpus script name.
    pub origin: String,
}

fn find_proof(l: &Logic, f: &Formula, supplied: &[Proof]) -> Option<(ProofSource, Proof)> {
    let theorem = |p: &Proof| matches!(check_proof(l, p, f), crate::calculus::Verdict::Accepted { hypotheses } if hypotheses.is_empty());
    let src = |origin: &str| ProofSource { logic: l.id.clone(), origin: origin.to_string() };
    if let Some(p) = supplied.iter().find(|p| theorem(p)) {
        return Some((src("supplied"), p.clone()));
    }
    if let Some(e) = proof_corpus().into_iter().find(|e| &e.goal == f && theorem(&e.proof)) {
        return Some((src(e.name), e.proof));
    }
    certify(l, f).map(|p| (src("certificate"), p))
}

#[derive(Debug, Clone)]
pub enum Decision {
    Provable { source: ProofSource, proof: Proof },
    Refutable(Countermodel),
    Unknown,
}

/// Provable with a checked proof (supplied, from the corpus, or a short
/// certificate), refutable with a small countermodel, or unknown.
pub fn decide(l: &Logic, f: &Formula, max_worlds: usize, supplied: &[Proof]) -> Result<Decision, Error> {
    if let Some((source, proof)) = find_proof(l, f, supplied) {
        return Ok(Decision::Provable { source, proof });
    }
    match bounded_countermodel(l, f, max_worlds)? {
        Some(cm) => Ok(Decision::Refutable(cm)),
        None => Ok(Decision::Unknown),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Agreement {
    AgreeProvable,
    AgreeUnprovable,
    Unknown,
    /// A refutation in `L` next to an accepted proof: must never happen.
    Violation,
}

#[derive(Debug, Clone)]
pub struct CorrespondReport {
    pub binary: String,
    pub unary: String,
    pub formula: Formula,
    pub verdict: Agreement,
    pub refutation: Option<Countermodel>,
    pub binary_proof: Option<ProofSource>,
    pub unary_proof: Option<ProofSource>,
}

/// Compares a binary logic `l` with its unary counterpart on the unary
/// formula `f`, using bounded refutation in `l` and every proof available
/// for either side.
pub fn correspond(l: &Logic, f: &Formula, max_worlds: usize, supplied: &[Proof]) -> Result<CorrespondReport, Error> {
    if !f.is_unary() {
        return Err(Error::NotUnary(crate::print(f)));
    }
    if l.language != Language::Binary {
        return Err(Error::Precondition(format!("{l} is not a binary logic")));
    }
    let u = logic_counterpart(l)?;
    let refutation = bounded_countermodel(l, f, max_worlds)?;
    let binary_proof = find_proof(l, f, supplied).map(|(s, _)| s);
    let unary_proof = find_proof(u, f, supplied).map(|(s, _)| s);
    let verdict = match (&refutation, &binary_proof, &unary_proof) {
        (Some(_), None, None) => Agreement::AgreeUnprovable,
        (Some(_), _, _) => Agreement::Violation,
        (None, Some(_), Some(_)) => Agreement::AgreeProvable,
        _ => Agreement::Unknown,
    };
    Ok(CorrespondReport {
        binary: l.id.clone(),
        unary: u.id.clone(),
        formula: f.clone(),
        verdict,
        refutation,
        binary_proof,
        unary_proof,
    })
}

/// The canonical countermodel for `a` in the binary logic `l`, over the
/// members of `K` the oracle finds for `l`'s unary counterpart.
pub fn canonical_countermodel(l: &Logic, a: &Formula, oracle: &ConsistencyOracle) -> Result<CanonicalModel, Error> {
    let u = logic_counterpart(l)?;
    let phi = Phi::closure([a]);
    let k = enumerate_k(u, &phi, oracle);
    build_canonical(l, a, &k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::logic;
    use crate::parse;

    #[test]
    fn countermodels_are_genuine() {
        for (l, f) in [("IL-", "<>p |> p"), ("IL-(J1)", "[](p | <>p) -> I p"), ("IL-(J2)", "p |> p")] {
            let l = logic(l).unwrap();
            let f = parse(f).unwrap();
            let cm = bounded_countermodel(l, &f, 3).unwrap().unwrap();
            assert!(verify_countermodel(l, &f, &cm).unwrap());
        }
        let l = logic("IL-(J1)").unwrap();
        assert!(bounded_countermodel(l, &parse("p |> p").unwrap(), 3).unwrap().is_none());
    }

    #[test]
    fn certificates_are_checked_proofs() {
        let l = logic("IL-(J4)").unwrap();
        let goal = parse("(p |> q) -> (<>p -> <>q)").unwrap();
        let p = certify(l, &goal).unwrap();
        assert!(check_proof(l, &p, &goal).is_accepted());
        assert!(certify(logic("IL-").unwrap(), &goal).is_none());
        assert!(certify(l, &parse("p -> p").unwrap()).is_some());
    }

    #[test]
    fn decide_has_three_outcomes() {
        let il = logic("IL").unwrap();
        assert!(matches!(decide(il, &parse("[]p -> [][]p").unwrap(), 3, &[]).unwrap(), Decision::Unknown));
        assert!(matches!(decide(il, &parse("p |> q").unwrap(), 3, &[]).unwrap(), Decision::Refutable(_)));
        let weak = logic("IL-").unwrap();
        let d = decide(weak, &parse("[]_|_ <-> I _|_").unwrap(), 3, &[]).unwrap();
        assert!(matches!(d, Decision::Provable { .. }));
    }

    #[test]
    fn oracle_modes() {
        let l = logic("IL-").unwrap();
        let xs = [parse("p").unwrap(), parse("~p").unwrap()];
        assert!(matches!(ConsistencyOracle::default().check(l, &xs).unwrap(), Consistency::Inconsistent(_)));
        let ys = [parse("I p").unwrap(), parse("~[]p").unwrap()];
        assert!(matches!(ConsistencyOracle::bounded(2).check(l, &ys).unwrap(), Consistency::Consistent(_)));
        let cert = ConsistencyOracle { mode: OracleMode::ProofCertificate };
        assert!(matches!(cert.check(l, &ys).unwrap(), Consistency::Unknown));
    }

    #[test]
    fn correspond_rejects_binary_formulas() {
        let l = logic("IL-(J1)").unwrap();
        assert!(matches!(correspond(l, &parse("p |> q").unwrap(), 2, &[]), Err(Error::NotUnary(_))));
        let u = logic("il-").unwrap();
        assert!(correspond(u, &parse("I p").unwrap(), 2, &[]).is_err());
        let r = correspond(l, &parse("[](p | <>p) -> I p").unwrap(), 3, &[]).unwrap();
        assert_eq!(r.verdict, Agreement::AgreeUnprovable);
    }
}
