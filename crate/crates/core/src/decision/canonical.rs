use std::collections::BTreeMap;

use serde::Serialize;

use super::kset::KSet;
use super::lemmas::missing_witnesses;
use super::phi::{prec, ranks, MaximalSet, Phi};
use crate::calculus::{logic_counterpart, semantic_partner, Logic};
use crate::semantics::{check_condition, Frame, FrameCondition, Model, Neighbourhood, SRelation, WorldSet};
use crate::{Error, Formula};

/// The `S`-clause of a pair-tagged Veltman construction, as data. For
/// `x = (Δ, C)` and `y = (Θ, D)`, `x S_(Γ,B) y` iff `Γ ≺ Δ`, `Γ ≺ Θ` when
/// `theta_succ`, and: if `¬I C ∈ Γ` plus the `Δ`-triggers, then `~C ∈ Θ`
/// and, when `same_tag`, `D ≡ C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairRule {
    pub name: &'static str,
    pub theta_succ: bool,
    /// Trigger needs `~C ∈ Δ`.
    pub tilde_in_delta: bool,
    /// Trigger needs `□¬C ∈ Δ`.
    pub box_not_in_delta: bool,
    pub same_tag: bool,
}

pub const PAIR_RULES: [PairRule; 7] = [
    PairRule { name: "J5", theta_succ: false, tilde_in_delta: false, box_not_in_delta: true, same_tag: false },
    PairRule { name: "J1", theta_succ: false, tilde_in_delta: true, box_not_in_delta: false, same_tag: false },
    PairRule { name: "J4+,J5", theta_succ: true, tilde_in_delta: false, box_not_in_delta: true, same_tag: false },
    PairRule { name: "J2+", theta_succ: true, tilde_in_delta: false, box_not_in_delta: false, same_tag: true },
    PairRule { name: "J1,J5", theta_succ: false, tilde_in_delta: true, box_not_in_delta: true, same_tag: false },
    PairRule { name: "CL", theta_succ: true, tilde_in_delta: true, box_not_in_delta: false, same_tag: true },
    PairRule { name: "J1,J4+,J5", theta_succ: true, tilde_in_delta: true, box_not_in_delta: true, same_tag: false },
];

fn pair_rule(name: &str) -> PairRule {
    *PAIR_RULES.iter().find(|r| r.name == name).expect("rule listed")
}

/// Triggers of the pair-tagged Verbrugge construction. Each adds clauses
/// to `{V : x S_w V}` beyond "`V` meets `R[w]`".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SetRule {
    /// `¬I C ∈ Γ`, `□⊥ ∈ Δ`: `V` meets `{~C ∈ Λ}`.
    J4J5,
    /// `¬I C ∈ Γ`: `V` meets `{~C ∈ Λ}` and `{(Λ, C) : Γ ≺ Λ}`.
    J2,
    /// `¬I C ∈ Γ`, `~C ∈ Δ`: `V` meets `{~C ∈ Λ}`.
    J1J4,
    /// `¬I C ∈ Γ`, `~C, □¬C ∈ Δ`: `V` meets `{~C ∈ Λ}`.
    J1J4J5,
}

/// Which canonical construction refutes non-theorems of a binary logic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "construction", rename_all = "kebab-case")]
pub enum Construction {
    /// Worlds `(Γ, B)` with `B ∈ Φ_I`, Veltman `S`; optionally converted
    /// to an equivalent Verbrugge frame.
    VeltmanPairs { rule: PairRule, verbrugge: bool },
    /// Worlds `(Γ, τ)` with `rank(Γ) + |τ| ≤ rank(Γ₀)`, Veltman `S`.
    /// `tilde_in_delta` strengthens the trigger with `~C ∈ Δ`.
    VeltmanSequences { tilde_in_delta: bool },
    /// Worlds `(Γ, B)`, Verbrugge `S`.
    VerbruggePairs { rule: SetRule },
    /// Worlds `(Γ, τ)` with `rank(Γ) + |τ| ≤ max rank`, Verbrugge `S`.
    VerbruggeSequences { j4plus: bool },
}

impl Construction {
    pub fn name(&self) -> &'static str {
        match self {
            Construction::VeltmanPairs { verbrugge: false, .. } => "veltman-pairs",
            Construction::VeltmanPairs { verbrugge: true, .. } => "veltman-pairs-as-verbrugge",
            Construction::VeltmanSequences { .. } => "veltman-sequences",
            Construction::VerbruggePairs { .. } => "verbrugge-pairs",
            Construction::VerbruggeSequences { .. } => "verbrugge-sequences",
        }
    }
}

/// The construction used for `l` (a binary logic, or a unary one through
/// its semantic partner). Logics not treated directly share the
/// construction of a logic with the same unary counterpart whose frames
/// also validate their axioms.
pub fn construction_for(l: &Logic) -> Result<Construction, Error> {
    let l = semantic_partner(l)?;
    let pairs = |name| Construction::VeltmanPairs { rule: pair_rule(name), verbrugge: false };
    Ok(match l.id.as_str() {
        "IL-" | "IL-(J5)" => pairs("J5"),
        "IL-(J1)" => pairs("J1"),
        "IL-(J4+)" | "IL-(J4+,J5)" => pairs("J4+,J5"),
        "IL-(J2+)" => pairs("J2+"),
        "IL-(J1,J5)" => pairs("J1,J5"),
        "IL-(J1,J4+)" | "CL" => pairs("CL"),
        "IL-(J1,J4+,J5)" => pairs("J1,J4+,J5"),
        "IL-(J2+,J5)" => Construction::VeltmanSequences { tilde_in_delta: false },
        "IL" => Construction::VeltmanSequences { tilde_in_delta: true },
        "IL-(J4)" | "IL-(J4,J5)" => Construction::VerbruggePairs { rule: SetRule::J4J5 },
        "IL-(J2)" => Construction::VerbruggePairs { rule: SetRule::J2 },
        "IL-(J1,J4)" => Construction::VerbruggePairs { rule: SetRule::J1J4 },
        "IL-(J1,J4,J5)" => Construction::VerbruggePairs { rule: SetRule::J1J4J5 },
        "IL-(J2,J4+)" => Construction::VeltmanPairs { rule: pair_rule("J2+"), verbrugge: true },
        "IL-(J2,J5)" => Construction::VerbruggeSequences { j4plus: false },
        "IL-(J2,J4+,J5)" => Construction::VerbruggeSequences { j4plus: true },
        _ => return Err(Error::NoCounterpart(l.id.clone())),
    })
}

/// The second component of a canonical world.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    /// Position in `Φ_I`.
    Formula(usize),
    /// Positions in `Φ_I`.
    Sequence(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalWorld {
    /// Index into the `K` the model was built from.
    pub gamma: usize,
    pub tag: Tag,
}

/// Results of checking a canonical model against the claims of its
/// construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Audit {
    pub frame_ok: bool,
    pub conditions: BTreeMap<String, bool>,
    /// `(world, formula)` pairs where membership and truth disagree.
    pub truth_lemma_failures: Vec<(String, String)>,
    pub root_refutes: bool,
    /// Lemma instances over `K` without a witness in `K`.
    pub missing_witnesses: usize,
}

impl Audit {
    pub fn passed(&self) -> bool {
        self.frame_ok && self.conditions.values().all(|&b| b) && self.truth_lemma_failures.is_empty() && self.root_refutes
    }
}

#[derive(Debug, Clone)]
pub struct CanonicalModel {
    pub construction: Construction,
    pub model: Model,
    pub root: usize,
    pub worlds: Vec<CanonicalWorld>,
    pub audit: Audit,
}

fn world_name(w: &CanonicalWorld) -> String {
    match &w.tag {
        Tag::Formula(b) => format!("g{}:{}", w.gamma, b),
        Tag::Sequence(s) if s.is_empty() => format!("g{}:e", w.gamma),
        Tag::Sequence(s) => {
            let parts: Vec<String> = s.iter().map(usize::to_string).collect();
            format!("g{}:{}", w.gamma, parts.join("."))
        }
    }
}

fn proper_prefix(t: &[usize], s: &[usize]) -> bool {
    t.len() < s.len() && s[..t.len()] == *t
}

/// `τ*⟨C⟩ ⊆ σ`.
fn extends_with(t: &[usize], c: usize, s: &[usize]) -> bool {
    proper_prefix(t, s) && s[t.len()] == c
}

fn sequences(alphabet: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for s in &layer {
            for a in 0..alphabet {
                let mut t: Vec<usize> = s.clone();
                t.push(a);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

struct Ctx<'a> {
    phi: &'a Phi,
    k: &'a [MaximalSet],
    prec: Vec<Vec<bool>>,
    worlds: Vec<CanonicalWorld>,
    succ: Vec<WorldSet>,
}

impl Ctx<'_> {
    fn gamma(&self, w: usize) -> &MaximalSet {
        &self.k[self.worlds[w].gamma]
    }

    fn seq(&self, w: usize) -> &[usize] {
        match &self.worlds[w].tag {
            Tag::Sequence(s) => s,
            Tag::Formula(_) => &[],
        }
    }

    fn pos(&self, w: usize) -> usize {
        match self.worlds[w].tag {
            Tag::Formula(b) => b,
            Tag::Sequence(_) => unreachable!("pair-tagged worlds only"),
        }
    }

    fn worlds_where(&self, pred: impl Fn(usize) -> bool) -> WorldSet {
        (0..self.worlds.len()).filter(|&y| pred(y)).collect()
    }
}

/// Builds the canonical countermodel to `a` over `k`, then audits it.
///
/// `k` is normally `K_ℓ` for `ℓ` the unary counterpart of `l`. `Γ₀` is the
/// first member of `k` (in bit order) containing `~a`.
pub fn build_canonical(l: &Logic, a: &Formula, k: &KSet) -> Result<CanonicalModel, Error> {
    let partner = semantic_partner(l)?;
    let construction = construction_for(partner)?;
    let phi = k.phi().as_ref();
    let ai = phi
        .index_of(a)
        .ok_or_else(|| Error::Precondition(format!("{a} is not in the adequate set")))?;
    let not_a = phi.tilde(ai);
    let members = k.members();
    let g0 = members.iter().position(|m| m.has(not_a)).ok_or_else(|| {
        Error::Precondition(format!("no member of K contains ~({a}); it may be provable"))
    })?;
    let n_i = phi.phi_i().len();
    let prec_m: Vec<Vec<bool>> = members.iter().map(|g| members.iter().map(|d| prec(g, d)).collect()).collect();
    let rk = ranks(members);

    let mut worlds = Vec::new();
    let root;
    match construction {
        Construction::VeltmanPairs { .. } | Construction::VerbruggePairs { .. } => {
            for g in 0..members.len() {
                for b in 0..n_i {
                    worlds.push(CanonicalWorld { gamma: g, tag: Tag::Formula(b) });
                }
            }
            let bot = phi.unary_position(phi.bot()).expect("⊥ ∈ Φ_I");
            root = g0 * n_i + bot;
        }
        Construction::VeltmanSequences { .. } | Construction::VerbruggeSequences { .. } => {
            let bound = match construction {
                Construction::VeltmanSequences { .. } => rk[g0],
                _ => rk.iter().copied().max().unwrap_or(0),
            };
            let seqs = sequences(n_i, bound);
            let mut r = 0;
            for g in 0..members.len() {
                for s in seqs.iter().filter(|s| rk[g] + s.len() <= bound) {
                    if g == g0 && s.is_empty() {
                        r = worlds.len();
                    }
                    worlds.push(CanonicalWorld { gamma: g, tag: Tag::Sequence(s.clone()) });
                }
            }
            root = r;
        }
    }

    let n = worlds.len();
    let sequence_tagged = matches!(worlds.first().map(|w| &w.tag), Some(Tag::Sequence(_)));
    let succ: Vec<WorldSet> = (0..n)
        .map(|w| {
            (0..n)
                .filter(|&x| {
                    let (gw, gx) = (worlds[w].gamma, worlds[x].gamma);
                    prec_m[gw][gx]
                        && (!sequence_tagged
                            || proper_prefix(seq_of(&worlds[w]), seq_of(&worlds[x])))
                })
                .collect()
        })
        .collect();
    let ctx = Ctx { phi, k: members, prec: prec_m, worlds, succ };

    let s = match construction {
        Construction::VeltmanPairs { rule, .. } => SRelation::Veltman(veltman_pairs(&ctx, rule)),
        Construction::VeltmanSequences { tilde_in_delta } => SRelation::Veltman(veltman_sequences(&ctx, tilde_in_delta)),
        Construction::VerbruggePairs { rule } => SRelation::Verbrugge(verbrugge_pairs(&ctx, rule)),
        Construction::VerbruggeSequences { j4plus } => SRelation::Verbrugge(verbrugge_sequences(&ctx, j4plus)),
    };
    let names: Vec<String> = ctx.worlds.iter().map(world_name).collect();
    let built = Frame::new(names, ctx.succ.clone(), s);
    let mut frame = built?;
    if let Construction::VeltmanPairs { verbrugge: true, .. } = construction {
        frame = frame.to_verbrugge();
    }
    let val: BTreeMap<String, WorldSet> = phi
        .vars()
        .iter()
        .map(|v| {
            let vi = phi.index_of(&Formula::var(v)).expect("variables of Φ are in Φ");
            (v.clone(), (0..n).filter(|&w| ctx.gamma(w).has(vi)).collect())
        })
        .collect();
    let model = Model::new(frame, val);
    let audit = audit(l, partner, &ctx, &model, root, ai, k)?;
    Ok(CanonicalModel { construction, model, root, worlds: ctx.worlds, audit })
}

fn seq_of(w: &CanonicalWorld) -> &[usize] {
    match &w.tag {
        Tag::Sequence(s) => s,
        Tag::Formula(_) => &[],
    }
}

fn veltman_pairs(ctx: &Ctx<'_>, rule: PairRule) -> Vec<Vec<WorldSet>> {
    let n = ctx.worlds.len();
    let entries = ctx.phi.phi_i();
    (0..n)
        .map(|w| {
            let gw = ctx.worlds[w].gamma;
            let g = ctx.gamma(w);
            (0..n)
                .map(|x| {
                    if !ctx.succ[w].contains(x) {
                        return WorldSet::empty();
                    }
                    let c_pos = ctx.pos(x);
                    let e = entries[c_pos];
                    let d = ctx.gamma(x);
                    let trigger = !g.has(e.i_c)
                        && (!rule.tilde_in_delta || d.has(e.tilde_c))
                        && (!rule.box_not_in_delta || d.has(e.box_not_c));
                    ctx.worlds_where(|y| {
                        let gy = ctx.worlds[y].gamma;
                        (!rule.theta_succ || ctx.prec[gw][gy])
                            && (!trigger || (ctx.k[gy].has(e.tilde_c) && (!rule.same_tag || ctx.pos(y) == c_pos)))
                    })
                })
                .collect()
        })
        .collect()
}

fn veltman_sequences(ctx: &Ctx<'_>, tilde_in_delta: bool) -> Vec<Vec<WorldSet>> {
    let n = ctx.worlds.len();
    let entries = ctx.phi.phi_i();
    (0..n)
        .map(|w| {
            let g = ctx.gamma(w);
            let tau = ctx.seq(w);
            (0..n)
                .map(|x| {
                    if !ctx.succ[w].contains(x) {
                        return WorldSet::empty();
                    }
                    let sigma = ctx.seq(x);
                    let c_pos = sigma[tau.len()];
                    let e = entries[c_pos];
                    let d = ctx.gamma(x);
                    let trigger =
                        !g.has(e.i_c) && d.has(e.box_not_c) && (!tilde_in_delta || d.has(e.tilde_c));
                    ctx.succ[w]
                        .iter()
                        .filter(|&y| {
                            !trigger || {
                                let t = ctx.gamma(y);
                                t.has(e.tilde_c) && t.has(e.box_not_c) && extends_with(tau, c_pos, ctx.seq(y))
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn verbrugge_pairs(ctx: &Ctx<'_>, rule: SetRule) -> Vec<Vec<Neighbourhood>> {
    let n = ctx.worlds.len();
    let entries = ctx.phi.phi_i();
    let box_bot = ctx.phi.index_of(&Formula::boxed(Formula::bot())).expect("□⊥ ∈ Φ");
    (0..n)
        .map(|w| {
            let gw = ctx.worlds[w].gamma;
            let g = ctx.gamma(w);
            (0..n)
                .map(|x| {
                    if !ctx.succ[w].contains(x) {
                        return Neighbourhood::default();
                    }
                    let c_pos = ctx.pos(x);
                    let e = entries[c_pos];
                    let d = ctx.gamma(x);
                    let mut clauses = vec![ctx.succ[w].clone()];
                    let refuters = || ctx.worlds_where(|y| ctx.gamma(y).has(e.tilde_c));
                    if !g.has(e.i_c) {
                        match rule {
                            SetRule::J4J5 if d.has(box_bot) => clauses.push(refuters()),
                            SetRule::J2 => {
                                clauses.push(refuters());
                                clauses.push(ctx.worlds_where(|y| {
                                    ctx.prec[gw][ctx.worlds[y].gamma] && ctx.pos(y) == c_pos
                                }));
                            }
                            SetRule::J1J4 if d.has(e.tilde_c) => clauses.push(refuters()),
                            SetRule::J1J4J5 if d.has(e.tilde_c) && d.has(e.box_not_c) => clauses.push(refuters()),
                            _ => {}
                        }
                    }
                    Neighbourhood::Hitting(clauses)
                })
                .collect()
        })
        .collect()
}

fn verbrugge_sequences(ctx: &Ctx<'_>, j4plus: bool) -> Vec<Vec<Neighbourhood>> {
    let n = ctx.worlds.len();
    let entries = ctx.phi.phi_i();
    (0..n)
        .map(|w| {
            let g = ctx.gamma(w);
            let tau = ctx.seq(w);
            (0..n)
                .map(|x| {
                    if !ctx.succ[w].contains(x) {
                        return Neighbourhood::default();
                    }
                    let sigma = ctx.seq(x);
                    let c_pos = sigma[tau.len()];
                    let e = entries[c_pos];
                    let d = ctx.gamma(x);
                    let mut clauses = vec![ctx.succ[w].clone()];
                    if !g.has(e.i_c) && d.has(e.box_not_c) {
                        let below = |y: usize| ctx.succ[w].contains(y) && extends_with(tau, c_pos, ctx.seq(y));
                        clauses.push(ctx.worlds_where(|y| ctx.gamma(y).has(e.tilde_c) && (!j4plus || below(y))));
                        clauses.push(ctx.worlds_where(|y| below(y) && ctx.gamma(y).has(e.box_not_c)));
                    }
                    Neighbourhood::Hitting(clauses)
                })
                .collect()
        })
        .collect()
}

fn audit(
    l: &Logic,
    partner: &Logic,
    ctx: &Ctx<'_>,
    model: &Model,
    root: usize,
    a: usize,
    k: &KSet,
) -> Result<Audit, Error> {
    let mut conditions = BTreeMap::new();
    for &c in &partner.conditions {
        conditions.insert(c.name().to_string(), check_condition(&model.frame, c)?);
    }
    let vals: Vec<WorldSet> = ctx.phi.vars().iter().map(|v| model.val[v].clone()).collect();
    let truth = ctx.phi.evaluate(&model.frame, &vals);
    let mut failures = Vec::new();
    for (i, t) in truth.iter().enumerate() {
        for w in 0..ctx.worlds.len() {
            if t.contains(w) != ctx.gamma(w).has(i) {
                failures.push((model.frame.names()[w].clone(), ctx.phi.formula(i).to_string()));
            }
        }
    }
    let unary = match l.language {
        crate::calculus::Language::Unary => l,
        crate::calculus::Language::Binary => logic_counterpart(l)?,
    };
    Ok(Audit {
        frame_ok: true,
        conditions,
        truth_lemma_failures: failures,
        root_refutes: !truth[a].contains(root),
        missing_witnesses: missing_witnesses(unary, k)?.len(),
    })
}

/// Conditions of `l`'s frame class checked on an arbitrary frame, for
/// callers that build models by other means.
pub fn conditions_hold(l: &Logic, frame: &Frame) -> Result<bool, Error> {
    let partner = semantic_partner(l)?;
    let conds: &[FrameCondition] = &partner.conditions;
    for &c in conds {
        if !check_condition(frame, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{logic, registry, Language};
    use crate::decision::{canonical_countermodel, ConsistencyOracle};
    use crate::parse;

    fn audit(l: &str, a: &str) -> CanonicalModel {
        canonical_countermodel(logic(l).unwrap(), &parse(a).unwrap(), &ConsistencyOracle::bounded(3)).unwrap()
    }

    #[test]
    fn every_binary_logic_has_a_construction() {
        for l in registry().iter().filter(|l| l.language == Language::Binary) {
            assert!(construction_for(l).is_ok(), "{}", l.id);
        }
    }

    #[test]
    fn one_audit_per_family() {
        for (l, name, a) in [
            ("IL-(J1)", "veltman-pairs", "[](p | <>p) -> I p"),
            ("IL", "veltman-sequences", "I p -> []~p"),
            ("IL-(J2)", "verbrugge-pairs", "[](p | <>p) -> I p"),
            ("IL-(J2,J5)", "verbrugge-sequences", "I ~p"),
        ] {
            let c = audit(l, a);
            assert_eq!(c.construction.name(), name);
            assert!(c.audit.passed(), "{l}: {:?}", c.audit);
            assert!(conditions_hold(logic(l).unwrap(), &c.model.frame).unwrap());
            assert_eq!(c.worlds.len(), c.model.frame.len());
        }
    }

    #[test]
    fn provable_formulas_have_no_root() {
        let l = logic("IL-(J1,J5)").unwrap();
        let a = parse("[](p | <>p) -> I p").unwrap();
        let r = canonical_countermodel(l, &a, &ConsistencyOracle::bounded(3));
        assert!(matches!(r, Err(Error::Precondition(_))));
    }
}
