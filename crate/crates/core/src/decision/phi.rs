use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::semantics::{Evaluator, Frame, WorldSet};
use crate::syntax::AdequateSet;
use crate::Formula;

/// An adequate set with every formula numbered, plus the lookup tables the
/// constructions need.
#[derive(Debug)]
pub struct Phi {
    set: AdequateSet,
    eval: Evaluator,
    tilde: Vec<usize>,
    /// `(□B, B)` index pairs.
    boxes: Vec<(usize, usize)>,
    phi_i: Vec<UnaryEntry>,
}

/// Indices attached to one `C ∈ Φ_I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnaryEntry {
    pub c: usize,
    pub i_c: usize,
    pub tilde_c: usize,
    /// `□¬C`
    pub box_not_c: usize,
}

impl Phi {
    pub fn new(set: AdequateSet) -> Phi {
        let fs = set.formulas();
        let idx = |f: &Formula| set.index_of(f).expect("adequate sets are subformula closed");
        let eval = Evaluator::new(fs);
        debug_assert_eq!(eval.formulas(), fs);
        let tilde = fs.iter().map(|f| idx(&f.tilde())).collect();
        let boxes = fs
            .iter()
            .enumerate()
            .filter_map(|(i, f)| match f {
                Formula::Box(b) => Some((i, idx(b))),
                _ => None,
            })
            .collect();
        let phi_i = set
            .phi_i()
            .iter()
            .map(|c| UnaryEntry {
                c: idx(c),
                i_c: idx(&Formula::unary(c.clone())),
                tilde_c: idx(&c.tilde()),
                box_not_c: idx(&Formula::boxed(Formula::not(c.clone()))),
            })
            .collect();
        Phi {
            set,
            eval,
            tilde,
            boxes,
            phi_i,
        }
    }

    /// The adequate closure of `seed`, indexed.
    pub fn closure<'a, I: IntoIterator<Item = &'a Formula>>(seed: I) -> Arc<Phi> {
        Arc::new(Phi::new(AdequateSet::closure(seed)))
    }

    pub fn adequate_set(&self) -> &AdequateSet {
        &self.set
    }

    pub fn formulas(&self) -> &[Formula] {
        self.set.formulas()
    }

    pub fn formula(&self, i: usize) -> &Formula {
        &self.set.formulas()[i]
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn index_of(&self, f: &Formula) -> Option<usize> {
        self.set.index_of(f)
    }

    pub fn tilde(&self, i: usize) -> usize {
        self.tilde[i]
    }

    pub fn vars(&self) -> &[String] {
        self.eval.vars()
    }

    pub fn boxes(&self) -> &[(usize, usize)] {
        &self.boxes
    }

    pub fn phi_i(&self) -> &[UnaryEntry] {
        &self.phi_i
    }

    pub fn unary_entry(&self, c: &Formula) -> Option<UnaryEntry> {
        let ci = self.index_of(c)?;
        self.phi_i.iter().copied().find(|e| e.c == ci)
    }

    /// Position of `C` in `Φ_I`.
    pub fn unary_position(&self, c: usize) -> Option<usize> {
        self.phi_i.iter().position(|e| e.c == c)
    }

    pub fn bot(&self) -> usize {
        self.index_of(&Formula::bot()).expect("⊥ is in every adequate set")
    }

    /// Truth sets of all formulas of `Φ` on `frame`, with `val[k]` the
    /// extension of the `k`-th variable.
    pub fn evaluate(&self, frame: &Frame, val: &[WorldSet]) -> Vec<WorldSet> {
        self.eval.evaluate(frame, val)
    }

    /// The `Φ`-type of each world given precomputed truth sets.
    pub fn types(&self, truth: &[WorldSet], n: usize) -> Vec<WorldSet> {
        let mut out = vec![WorldSet::empty(); n];
        for (i, t) in truth.iter().enumerate() {
            for w in t.iter() {
                out[w].insert(i);
            }
        }
        out
    }

    /// Whether `bits` picks exactly one of each `A`, `~A` and respects the
    /// propositional structure of every implication in `Φ`.
    pub fn is_locally_maximal(&self, bits: &WorldSet) -> bool {
        (0..self.len()).all(|i| {
            let has = bits.contains(i);
            let t = self.tilde[i];
            if t != i && has == bits.contains(t) {
                return false;
            }
            match self.formula(i) {
                Formula::Bottom => !has,
                Formula::Implies(a, b) => {
                    let (a, b) = (self.index_of(a).expect("closed"), self.index_of(b).expect("closed"));
                    has == (!bits.contains(a) || bits.contains(b))
                }
                _ => true,
            }
        })
    }
}

/// A `Φ`-maximal set, stored as a bitset over the indices of `Φ`.
#[derive(Clone)]
pub struct MaximalSet {
    phi: Arc<Phi>,
    bits: WorldSet,
}

impl MaximalSet {
    pub fn from_bits(phi: Arc<Phi>, bits: WorldSet) -> MaximalSet {
        MaximalSet { phi, bits }
    }

    pub fn phi(&self) -> &Arc<Phi> {
        &self.phi
    }

    pub fn bits(&self) -> &WorldSet {
        &self.bits
    }

    pub fn has(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.phi.index_of(f).is_some_and(|i| self.has(i))
    }

    pub fn members(&self) -> Vec<&Formula> {
        self.bits.iter().map(|i| self.phi.formula(i)).collect()
    }

    /// The `□`-formulas of `Φ` in this set, as a bitset over `Φ`.
    pub fn box_part(&self) -> WorldSet {
        self.phi.boxes.iter().filter(|(b, _)| self.has(*b)).map(|(b, _)| *b).collect()
    }

    pub fn is_maximal(&self) -> bool {
        self.phi.is_locally_maximal(&self.bits)
    }
}

impl PartialEq for MaximalSet {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for MaximalSet {}

impl Hash for MaximalSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state)
    }
}

impl PartialOrd for MaximalSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MaximalSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.bits.cmp(&other.bits)
    }
}

impl fmt::Debug for MaximalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members().iter().map(|m| m.to_string())).finish()
    }
}

impl serde::Serialize for MaximalSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.members().iter().map(|m| m.to_string()))
    }
}

/// `Γ ≺ Δ`: every `□B ∈ Γ` has `B, □B ∈ Δ`, and `Δ` has some `□C ∉ Γ`.
pub fn prec(g: &MaximalSet, d: &MaximalSet) -> bool {
    let mut gained = false;
    for &(b, arg) in g.phi.boxes() {
        if g.has(b) {
            if !d.has(b) || !d.has(arg) {
                return false;
            }
        } else if d.has(b) {
            gained = true;
        }
    }
    gained
}

/// `rank(Γ) = sup{rank(Δ) + 1 : Γ ≺ Δ, Δ ∈ k}`.
pub fn rank(g: &MaximalSet, k: &[MaximalSet]) -> usize {
    let ranks = ranks(k);
    match k.iter().position(|d| d == g) {
        Some(i) => ranks[i],
        None => k.iter().enumerate().filter(|(_, d)| prec(g, d)).map(|(i, _)| ranks[i] + 1).max().unwrap_or(0),
    }
}

/// Ranks of all members of `k`, computed by increasing box content: `≺`
/// strictly enlarges the set of boxed formulas.
pub fn ranks(k: &[MaximalSet]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..k.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(k[i].box_part().len()));
    let mut out = vec![0; k.len()];
    for (pos, &i) in order.iter().enumerate() {
        out[i] = order[..pos]
            .iter()
            .filter(|&&j| prec(&k[i], &k[j]))
            .map(|&j| out[j] + 1)
            .max()
            .unwrap_or(0);
    }
    out
}
