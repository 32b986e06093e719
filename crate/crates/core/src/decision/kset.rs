use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::phi::{MaximalSet, Phi};
use crate::calculus::{semantic_partner, Logic};
use crate::semantics::{check_condition, frames_up_to, Frame, FrameCondition, FrameKind, WorldSet};

/// Where a member of a [`KSet`] was seen satisfied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeWitness {
    /// Number of worlds of the witnessing model.
    pub worlds: usize,
    /// `"small-frame"` or `"canonical"`.
    pub source: &'static str,
}

/// An approximation of `K_ℓ` from below: every member is satisfied in a
/// model of the semantic partner of `ℓ`, hence `ℓ`-consistent.
#[derive(Debug, Clone)]
pub struct KSet {
    phi: Arc<Phi>,
    members: Vec<MaximalSet>,
    witnesses: Vec<TypeWitness>,
}

impl KSet {
    pub fn new(phi: Arc<Phi>) -> KSet {
        KSet { phi, members: Vec::new(), witnesses: Vec::new() }
    }

    pub fn phi(&self) -> &Arc<Phi> {
        &self.phi
    }

    pub fn members(&self) -> &[MaximalSet] {
        &self.members
    }

    pub fn witnesses(&self) -> &[TypeWitness] {
        &self.witnesses
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Adds `bits` unless already present; keeps members sorted.
    pub fn insert(&mut self, bits: WorldSet, witness: TypeWitness) -> bool {
        let m = MaximalSet::from_bits(self.phi.clone(), bits);
        match self.members.binary_search(&m) {
            Ok(_) => false,
            Err(pos) => {
                self.members.insert(pos, m);
                self.witnesses.insert(pos, witness);
                true
            }
        }
    }

    /// Adds the types of every world of `frame` under every valuation.
    pub fn absorb_frame(&mut self, frame: &Frame, source: &'static str) -> usize {
        let n = frame.len();
        let k = self.phi.vars().len();
        assert!(n * k < 30, "too many valuations: {n} worlds, {k} variables");
        let mask = (1u64 << n) - 1;
        let mut added = 0;
        for code in 0u64..(1u64 << (n * k)) {
            let val: Vec<WorldSet> = (0..k).map(|i| WorldSet::from_mask((code >> (i * n)) & mask)).collect();
            let truth = self.phi.evaluate(frame, &val);
            for t in self.phi.types(&truth, n) {
                if self.insert(t, TypeWitness { worlds: n, source }) {
                    added += 1;
                }
            }
        }
        added
    }

    /// Members containing every formula index in `must`.
    pub fn with_all<'a>(&'a self, must: &'a [usize]) -> impl Iterator<Item = &'a MaximalSet> + 'a {
        self.members.iter().filter(move |m| must.iter().all(|&i| m.has(i)))
    }
}

/// Frames of the partner's class and conditions used to collect types.
/// Verbrugge classes use every frame on at most two worlds plus the
/// converted Veltman frames on up to `max_worlds` that meet the conditions.
pub fn sample_frames(partner: &Logic, max_worlds: usize) -> Vec<Frame> {
    let kind = partner.frame_class.unwrap_or(FrameKind::Veltman);
    let conds: &[FrameCondition] = &partner.conditions;
    match kind {
        FrameKind::Veltman => frames_up_to(max_worlds, kind, conds).as_ref().clone(),
        FrameKind::Verbrugge => {
            let mut out: Vec<Frame> = frames_up_to(max_worlds.min(2), kind, conds).as_ref().clone();
            for f in frames_up_to(max_worlds, FrameKind::Veltman, &[]).iter() {
                if f.len() <= 2 {
                    continue;
                }
                let g = f.to_verbrugge();
                if conds.iter().all(|&c| check_condition(&g, c).unwrap_or(false)) {
                    out.push(g);
                }
            }
            out
        }
    }
}

/// Types realized in small models of the semantic partner of `l`.
pub fn realized_types(l: &Logic, phi: &Arc<Phi>, max_worlds: usize) -> KSet {
    let partner = semantic_partner(l).unwrap_or(l);
    let mut k = KSet::new(phi.clone());
    for f in sample_frames(partner, max_worlds) {
        k.absorb_frame(&f, "small-frame");
    }
    k
}

/// How many members of `k` contain each formula of `Φ`; handy for
/// diagnostics.
pub fn membership_counts(k: &KSet) -> BTreeMap<String, usize> {
    let phi = k.phi();
    (0..phi.len())
        .map(|i| (phi.formula(i).to_string(), k.members().iter().filter(|m| m.has(i)).count()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::logic;
    use crate::{parse, Formula};

    #[test]
    fn box_bottom_and_i_bottom_agree_in_every_member() {
        let a = parse("I p -> []~p").unwrap();
        let phi = Phi::closure([&a]);
        let k = realized_types(logic("il-").unwrap(), &phi, 3);
        let b = phi.index_of(&Formula::boxed(Formula::bot())).unwrap();
        let i = phi.index_of(&Formula::unary(Formula::bot())).unwrap();
        assert!(k.members().iter().all(|m| m.has(b) == m.has(i)));
        assert_eq!(k.witnesses().len(), k.len());
    }

    #[test]
    fn stronger_logics_realize_fewer_types() {
        let a = parse("[](p | <>p) -> I p").unwrap();
        let phi = Phi::closure([&a]);
        let weak = realized_types(logic("il-").unwrap(), &phi, 3);
        let strong = realized_types(logic("il-(uJ15)").unwrap(), &phi, 3);
        assert!(strong.members().iter().all(|m| weak.members().contains(m)));
        assert!(strong.len() < weak.len());
        // The refuted instance has no type at all once it is an axiom.
        let not_a = phi.index_of(&a.tilde()).unwrap();
        assert!(weak.with_all(&[not_a]).next().is_some());
        assert!(strong.with_all(&[not_a]).next().is_none());
    }

    #[test]
    fn verbrugge_samples_meet_their_conditions() {
        let l = logic("IL-(J2)").unwrap();
        let frames = sample_frames(l, 3);
        assert!(frames.iter().any(|f| f.len() == 3));
        for f in &frames {
            for &c in &l.conditions {
                assert!(check_condition(f, c).unwrap());
            }
        }
    }
}
