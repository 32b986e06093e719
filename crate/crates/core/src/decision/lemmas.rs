use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::kset::KSet;
use super::phi::{prec, MaximalSet, Phi};
use crate::calculus::{logic_counterpart, Language, Logic};
use crate::{Error, Formula};

/// The existence lemmas behind the canonical constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaKind {
    /// `¬□C ∈ Γ` gives `Γ ≺ Δ` with `~C, □C ∈ Δ`.
    Lem0,
    /// `¬I C ∈ Γ` gives `Γ ≺ Δ` with `□⊥ ∈ Δ`.
    Lem1_1,
    /// With uJ1: `¬I C ∈ Γ` gives `Γ ≺ Δ` with `~C ∈ Δ`.
    Lem1_2,
    /// With uJ15: `¬I C ∈ Γ` gives `Γ ≺ Δ` with `~C, □¬C ∈ Δ`.
    Lem1_3,
    /// `I C, ¬I D ∈ Γ` gives some `Δ` with `C, ~D ∈ Δ`.
    Lem2_1,
    /// With uJ25: as above but `Γ ≺ Δ` with `C, □¬D ∈ Δ`.
    Lem2_2,
    /// With I2: `Γ ≺ Δ` with `C, ~D ∈ Δ`.
    Lem2_3,
    /// With I2 and I3: `Γ ≺ Δ` with `C, ~D, □¬D ∈ Δ`.
    Lem2_4,
    /// With I4: `I C ∈ Γ` and `Γ ≺ Δ` give `Γ ≺ Θ` with `C ∈ Θ`.
    Lem3,
}

impl LemmaKind {
    pub const ALL: [LemmaKind; 9] = [
        LemmaKind::Lem0,
        LemmaKind::Lem1_1,
        LemmaKind::Lem1_2,
        LemmaKind::Lem1_3,
        LemmaKind::Lem2_1,
        LemmaKind::Lem2_2,
        LemmaKind::Lem2_3,
        LemmaKind::Lem2_4,
        LemmaKind::Lem3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaKind::Lem0 => "lem0",
            LemmaKind::Lem1_1 => "lem1.1",
            LemmaKind::Lem1_2 => "lem1.2",
            LemmaKind::Lem1_3 => "lem1.3",
            LemmaKind::Lem2_1 => "lem2.1",
            LemmaKind::Lem2_2 => "lem2.2",
            LemmaKind::Lem2_3 => "lem2.3",
            LemmaKind::Lem2_4 => "lem2.4",
            LemmaKind::Lem3 => "lem3",
        }
    }

    /// Schemata the unary logic must derive for the lemma to apply.
    pub fn required_schemata(self) -> &'static [&'static str] {
        match self {
            LemmaKind::Lem1_2 => &["uJ1"],
            LemmaKind::Lem1_3 => &["uJ15"],
            LemmaKind::Lem2_2 => &["uJ25"],
            LemmaKind::Lem2_3 => &["I2"],
            LemmaKind::Lem2_4 => &["I2", "I3"],
            LemmaKind::Lem3 => &["I4"],
            _ => &[],
        }
    }

    /// Whether the lemma needs a second formula `D`.
    pub fn needs_d(self) -> bool {
        matches!(self, LemmaKind::Lem2_1 | LemmaKind::Lem2_2 | LemmaKind::Lem2_3 | LemmaKind::Lem2_4)
    }

    /// Lemmas whose side conditions `l` meets.
    pub fn applicable(l: &Logic) -> Vec<LemmaKind> {
        let derivable = l.derivable_schemata();
        LemmaKind::ALL
            .into_iter()
            .filter(|k| k.required_schemata().iter().all(|s| derivable.contains(*s)))
            .collect()
    }
}

impl fmt::Display for LemmaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for LemmaKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for LemmaKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        LemmaKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Precondition(format!("unknown lemma `{s}`")))
    }
}

/// Arguments of a lemma: `Γ`, the formula `C`, and `D` or `Δ` where the
/// lemma mentions them.
#[derive(Debug, Clone, Copy)]
pub struct LemmaInputs<'a> {
    pub gamma: &'a MaximalSet,
    pub delta: Option<&'a MaximalSet>,
    pub c: &'a Formula,
    pub d: Option<&'a Formula>,
}

/// Index-level form of a lemma query over one `Φ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Query {
    pub kind: LemmaKind,
    pub c: usize,
    pub d: usize,
}

fn unary_logic(l: &Logic) -> Result<&Logic, Error> {
    match l.language {
        Language::Unary => Ok(l),
        Language::Binary => logic_counterpart(l),
    }
}

/// Searches `k` for a set meeting the conclusion of the lemma.
///
/// `Ok(None)` means `k` lacks the witness the lemma promises; with the
/// exact `K_ℓ` this cannot happen once the premises hold.
pub fn lemma_witness(
    l: &Logic,
    k: &KSet,
    kind: LemmaKind,
    inputs: LemmaInputs<'_>,
) -> Result<Option<MaximalSet>, Error> {
    let l = unary_logic(l)?;
    let derivable = l.derivable_schemata();
    if let Some(s) = kind.required_schemata().iter().find(|s| !derivable.contains(**s)) {
        return Err(Error::Precondition(format!("{kind} needs {s}, which {l} does not derive")));
    }
    let phi = k.phi();
    let missing = |f: &Formula| Error::Precondition(format!("{f} is not in the adequate set"));
    let c = phi.index_of(inputs.c).ok_or_else(|| missing(inputs.c))?;
    let d = if kind.needs_d() {
        let d = inputs.d.ok_or_else(|| Error::Precondition(format!("{kind} needs a formula D")))?;
        phi.index_of(d).ok_or_else(|| missing(d))?
    } else {
        c
    };
    let q = Query { kind, c, d };
    premises_hold(phi, inputs.gamma, inputs.delta, q)?;
    Ok(find_witness(k.members(), inputs.gamma, q).map(|i| k.members()[i].clone()))
}

/// Checks the membership premises of `q` at `gamma`.
pub(crate) fn premises_hold(phi: &Phi, gamma: &MaximalSet, delta: Option<&MaximalSet>, q: Query) -> Result<(), Error> {
    let fail = |what: String| Err(Error::Precondition(format!("{}: {what}", q.kind)));
    let f = |i: usize| phi.formula(i).to_string();
    match q.kind {
        LemmaKind::Lem0 => {
            let b = phi.index_of(&Formula::boxed(phi.formula(q.c).clone()));
            match b {
                Some(b) if !gamma.has(b) => Ok(()),
                Some(b) => fail(format!("{} is in Γ", f(b))),
                None => fail(format!("[]{} is not in the adequate set", f(q.c))),
            }
        }
        _ => {
            let Some(ec) = phi.unary_position(q.c).map(|p| phi.phi_i()[p]) else {
                return fail(format!("{} is not an I-argument", f(q.c)));
            };
            match q.kind {
                LemmaKind::Lem1_1 | LemmaKind::Lem1_2 | LemmaKind::Lem1_3 => {
                    if gamma.has(ec.i_c) {
                        return fail(format!("{} is in Γ", f(ec.i_c)));
                    }
                }
                LemmaKind::Lem3 => {
                    if !gamma.has(ec.i_c) {
                        return fail(format!("{} is not in Γ", f(ec.i_c)));
                    }
                    match delta {
                        Some(dl) if prec(gamma, dl) => {}
                        _ => return fail("needs some Δ with Γ ≺ Δ".into()),
                    }
                }
                _ => {
                    let Some(ed) = phi.unary_position(q.d).map(|p| phi.phi_i()[p]) else {
                        return fail(format!("{} is not an I-argument", f(q.d)));
                    };
                    if !gamma.has(ec.i_c) {
                        return fail(format!("{} is not in Γ", f(ec.i_c)));
                    }
                    if gamma.has(ed.i_c) {
                        return fail(format!("{} is in Γ", f(ed.i_c)));
                    }
                }
            }
            Ok(())
        }
    }
}

/// Formula indices the witness must contain, and whether it must be a
/// `≺`-successor of `Γ`.
pub(crate) fn conclusion(phi: &Phi, q: Query) -> (Vec<usize>, bool) {
    let tilde_c = phi.tilde(q.c);
    let tilde_d = phi.tilde(q.d);
    let box_not = |i: usize| {
        phi.index_of(&Formula::boxed(Formula::not(phi.formula(i).clone())))
            .expect("□¬C is in Φ for C in Φ_I")
    };
    match q.kind {
        LemmaKind::Lem0 => {
            let b = phi.index_of(&Formula::boxed(phi.formula(q.c).clone())).expect("checked premise");
            (vec![tilde_c, b], true)
        }
        LemmaKind::Lem1_1 => {
            let bb = phi.index_of(&Formula::boxed(Formula::bot())).expect("□⊥ is in Φ");
            (vec![bb], true)
        }
        LemmaKind::Lem1_2 => (vec![tilde_c], true),
        LemmaKind::Lem1_3 => (vec![tilde_c, box_not(q.c)], true),
        LemmaKind::Lem2_1 => (vec![q.c, tilde_d], false),
        LemmaKind::Lem2_2 => (vec![q.c, box_not(q.d)], true),
        LemmaKind::Lem2_3 => (vec![q.c, tilde_d], true),
        LemmaKind::Lem2_4 => (vec![q.c, tilde_d, box_not(q.d)], true),
        LemmaKind::Lem3 => (vec![q.c], true),
    }
}

/// First member of `k` meeting the conclusion of `q` relative to `gamma`.
pub(crate) fn find_witness(k: &[MaximalSet], gamma: &MaximalSet, q: Query) -> Option<usize> {
    let (must, succ) = conclusion(gamma.phi(), q);
    k.iter()
        .position(|m| must.iter().all(|&i| m.has(i)) && (!succ || prec(gamma, m)))
}

/// A lemma instance whose premises hold but whose witness is missing.
#[derive(Debug, Clone, Serialize)]
pub struct MissingWitness {
    pub lemma: LemmaKind,
    pub gamma: MaximalSet,
    pub c: String,
    pub d: Option<String>,
}

/// Every instance of an applicable lemma over `k` lacking a witness in
/// `k`. Empty output means `k` is closed under the lemmas.
pub fn missing_witnesses(l: &Logic, k: &KSet) -> Result<Vec<MissingWitness>, Error> {
    let l = unary_logic(l)?;
    let phi = k.phi().clone();
    let mut out = Vec::new();
    for g in k.members() {
        for kind in LemmaKind::applicable(l) {
            for q in instances(&phi, g, k.members(), kind) {
                if find_witness(k.members(), g, q).is_none() {
                    out.push(MissingWitness {
                        lemma: kind,
                        gamma: g.clone(),
                        c: phi.formula(q.c).to_string(),
                        d: kind.needs_d().then(|| phi.formula(q.d).to_string()),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Lemma queries of `kind` whose premises hold at `g`.
pub(crate) fn instances(phi: &Phi, g: &MaximalSet, k: &[MaximalSet], kind: LemmaKind) -> Vec<Query> {
    let mut out = Vec::new();
    match kind {
        LemmaKind::Lem0 => {
            for &(b, arg) in phi.boxes() {
                if !g.has(b) {
                    out.push(Query { kind, c: arg, d: arg });
                }
            }
        }
        LemmaKind::Lem1_1 | LemmaKind::Lem1_2 | LemmaKind::Lem1_3 => {
            for e in phi.phi_i() {
                if !g.has(e.i_c) {
                    out.push(Query { kind, c: e.c, d: e.c });
                }
            }
        }
        LemmaKind::Lem3 => {
            if k.iter().any(|d| prec(g, d)) {
                for e in phi.phi_i() {
                    if g.has(e.i_c) {
                        out.push(Query { kind, c: e.c, d: e.c });
                    }
                }
            }
        }
        _ => {
            for ec in phi.phi_i() {
                for ed in phi.phi_i() {
                    if g.has(ec.i_c) && !g.has(ed.i_c) {
                        out.push(Query { kind, c: ec.c, d: ed.c });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::logic;
    use crate::decision::{prec, realized_types, Phi};
    use crate::parse;

    fn setup(l: &str) -> (&'static Logic, KSet, Formula) {
        let a = parse("[](p | <>p) -> I p").unwrap();
        let l = logic(l).unwrap();
        let k = realized_types(logic_counterpart(l).unwrap(), &Phi::closure([&a]), 3);
        (l, k, a)
    }

    #[test]
    fn names_round_trip() {
        for k in LemmaKind::ALL {
            assert_eq!(k.name().parse::<LemmaKind>().unwrap(), k);
        }
        assert!("lem9".parse::<LemmaKind>().is_err());
    }

    #[test]
    fn side_conditions_follow_the_logic() {
        let weak = LemmaKind::applicable(logic("il-").unwrap());
        assert_eq!(weak, vec![LemmaKind::Lem0, LemmaKind::Lem1_1, LemmaKind::Lem2_1]);
        assert!(LemmaKind::applicable(logic("il-(uJ15)").unwrap()).contains(&LemmaKind::Lem1_3));
        assert!(LemmaKind::applicable(logic("il").unwrap()).contains(&LemmaKind::Lem3));
    }

    #[test]
    fn witness_for_lem1_3_refutes_c_below() {
        let (l, k, _) = setup("IL-(J1,J5)");
        let c = parse("p").unwrap();
        let phi = k.phi().clone();
        let ic = phi.index_of(&Formula::unary(c.clone())).unwrap();
        let g = k.members().iter().find(|m| !m.has(ic)).unwrap();
        let inputs = LemmaInputs { gamma: g, delta: None, c: &c, d: None };
        let d = lemma_witness(l, &k, LemmaKind::Lem1_3, inputs).unwrap().unwrap();
        assert!(prec(g, &d));
        assert!(d.contains(&c.tilde()));
        assert!(d.contains(&Formula::boxed(Formula::not(c))));
    }

    #[test]
    fn missing_side_condition_is_an_error() {
        let (l, k, _) = setup("IL-");
        let c = parse("p").unwrap();
        let g = &k.members()[0];
        let inputs = LemmaInputs { gamma: g, delta: None, c: &c, d: None };
        assert!(matches!(lemma_witness(l, &k, LemmaKind::Lem1_3, inputs), Err(Error::Precondition(_))));
        let stray = parse("q").unwrap();
        let inputs = LemmaInputs { gamma: g, delta: None, c: &stray, d: None };
        assert!(lemma_witness(l, &k, LemmaKind::Lem1_1, inputs).is_err());
    }

    #[test]
    fn small_frame_types_are_lemma_closed() {
        for id in ["IL-", "IL-(J1)", "IL-(J1,J5)", "IL-(J2+,J5)", "IL-(J4)"] {
            let (l, k, _) = setup(id);
            assert!(missing_witnesses(l, &k).unwrap().is_empty(), "{id}");
        }
    }
}
