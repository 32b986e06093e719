use std::collections::{BTreeMap, HashMap};

use super::{Frame, SRelation, WorldSet};
use crate::{Error, Formula};

/// A frame together with a valuation of finitely many variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    pub frame: Frame,
    /// Variable name to the set of worlds where it is true. Variables not
    /// listed are undeclared.
    pub val: BTreeMap<String, WorldSet>,
}

impl Model {
    pub fn new(frame: Frame, val: BTreeMap<String, WorldSet>) -> Model {
        Model { frame, val }
    }

    /// `[[f]]`, the set of worlds satisfying `f`.
    pub fn truth_set(&self, f: &Formula) -> Result<WorldSet, Error> {
        let mut cache = HashMap::new();
        self.truth_set_cached(f, &mut cache)
    }

    /// Like [`Model::truth_set`] but sharing a memo table across calls.
    pub fn truth_set_cached(
        &self,
        f: &Formula,
        cache: &mut HashMap<Formula, WorldSet>,
    ) -> Result<WorldSet, Error> {
        truth_set_in(&self.frame, f, &|v| self.val.get(v).cloned(), cache)
    }

    pub fn satisfies(&self, w: usize, f: &Formula) -> Result<bool, Error> {
        if w >= self.frame.len() {
            return Err(Error::UnknownWorld(w.to_string()));
        }
        Ok(self.truth_set(f)?.contains(w))
    }

    pub fn satisfies_named(&self, world: &str, f: &Formula) -> Result<bool, Error> {
        let w = self
            .frame
            .world(world)
            .ok_or_else(|| Error::UnknownWorld(world.to_string()))?;
        self.satisfies(w, f)
    }
}

/// Evaluates `f` on `frame`, reading variables through `lookup`.
pub fn truth_set_in(
    frame: &Frame,
    f: &Formula,
    lookup: &dyn Fn(&str) -> Option<WorldSet>,
    cache: &mut HashMap<Formula, WorldSet>,
) -> Result<WorldSet, Error> {
    if let Some(s) = cache.get(f) {
        return Ok(s.clone());
    }
    let n = frame.len();
    let out = match f {
        Formula::Bottom => WorldSet::empty(),
        Formula::Var(v) => lookup(v).ok_or_else(|| Error::UndeclaredVariable(v.to_string()))?,
        Formula::Implies(a, b) => {
            let a = truth_set_in(frame, a, lookup, cache)?;
            let b = truth_set_in(frame, b, lookup, cache)?;
            a.complement(n).union(&b)
        }
        Formula::Box(a) => {
            let a = truth_set_in(frame, a, lookup, cache)?;
            (0..n).filter(|&w| frame.succ(w).is_subset(&a)).collect()
        }
        Formula::Rhd(a, b) => {
            let a = truth_set_in(frame, a, lookup, cache)?;
            let b = truth_set_in(frame, b, lookup, cache)?;
            rhd_set(frame, &a, &b)
        }
    };
    cache.insert(f.clone(), out.clone());
    Ok(out)
}

pub(crate) fn rhd_set(frame: &Frame, a: &WorldSet, b: &WorldSet) -> WorldSet {
    let n = frame.len();
    match frame.s_relation() {
        SRelation::Veltman(rows) => (0..n)
            .filter(|&w| {
                frame
                    .succ(w)
                    .intersection(a)
                    .iter()
                    .all(|x| rows[w][x].intersects(b))
            })
            .collect(),
        SRelation::Verbrugge(rows) => (0..n)
            .filter(|&w| {
                frame
                    .succ(w)
                    .intersection(a)
                    .iter()
                    .all(|x| rows[w][x].member(b))
            })
            .collect(),
    }
}

/// True iff `f` holds at every world under every valuation of its
/// variables.
///
/// Runs through `2^(n·k)` valuations for `n` worlds and `k` variables.
pub fn valid_in_frame(frame: &Frame, f: &Formula) -> bool {
    let vars: Vec<String> = f.vars().iter().map(|v| v.to_string()).collect();
    let n = frame.len();
    let bits = n * vars.len();
    assert!(bits < 40, "valuation space too large: {bits} bits");
    let all = frame.all();
    let full_mask = (1u64 << n) - 1;
    for code in 0u64..(1u64 << bits) {
        let sets: BTreeMap<&str, WorldSet> = vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), WorldSet::from_mask((code >> (i * n)) & full_mask)))
            .collect();
        let mut cache = HashMap::new();
        let t = truth_set_in(frame, f, &|v| sets.get(v).cloned(), &mut cache)
            .expect("every variable is assigned");
        if t != all {
            return false;
        }
    }
    true
}

/// Validity of a schema whose metavariables are written as variables.
/// Metavariables range over arbitrary world sets, which on a finite frame
/// agrees with validity of every substitution instance.
pub fn schema_valid_in_frame(frame: &Frame, pattern: &Formula) -> bool {
    valid_in_frame(frame, pattern)
}
