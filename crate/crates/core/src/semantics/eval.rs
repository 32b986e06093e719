use std::collections::{BTreeSet, HashMap};

use super::model::rhd_set;
use super::{Frame, WorldSet};
use crate::Formula;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Node {
    Bot,
    Var(usize),
    Imp(usize, usize),
    Box(usize),
    Rhd(usize, usize),
}

/// A subformula-closed list of formulas compiled for repeated evaluation.
/// Formulas are kept in their derived `Ord` order.
#[derive(Debug, Clone)]
pub struct Evaluator {
    formulas: Vec<Formula>,
    nodes: Vec<Node>,
    order: Vec<usize>,
    vars: Vec<String>,
}

impl Evaluator {
    /// Compiles `roots` together with all their subformulas.
    pub fn new<'a, I: IntoIterator<Item = &'a Formula>>(roots: I) -> Evaluator {
        let mut set = BTreeSet::new();
        for f in roots {
            f.collect_subformulas(&mut set);
        }
        let formulas: Vec<Formula> = set.into_iter().collect();
        let idx = |f: &Formula| formulas.binary_search(f).expect("closed under subformulas");
        let mut vars = Vec::new();
        let mut var_ix: HashMap<&str, usize> = HashMap::new();
        let nodes: Vec<Node> = formulas
            .iter()
            .map(|f| match f {
                Formula::Bottom => Node::Bot,
                Formula::Var(v) => {
                    let k = *var_ix.entry(v).or_insert_with(|| {
                        vars.push(v.to_string());
                        vars.len() - 1
                    });
                    Node::Var(k)
                }
                Formula::Implies(a, b) => Node::Imp(idx(a), idx(b)),
                Formula::Box(a) => Node::Box(idx(a)),
                Formula::Rhd(a, b) => Node::Rhd(idx(a), idx(b)),
            })
            .collect();
        let mut order: Vec<usize> = (0..formulas.len()).collect();
        order.sort_by_key(|&i| formulas[i].size());
        Evaluator { formulas, nodes, order, vars }
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn index_of(&self, f: &Formula) -> Option<usize> {
        self.formulas.binary_search(f).ok()
    }

    /// Variables in order of first occurrence in the sorted formula list.
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Truth sets of every compiled formula; `val[k]` is the extension of
    /// `vars()[k]`.
    pub fn evaluate(&self, frame: &Frame, val: &[WorldSet]) -> Vec<WorldSet> {
        let n = frame.len();
        let mut out = vec![WorldSet::empty(); self.formulas.len()];
        for &i in &self.order {
            out[i] = match self.nodes[i] {
                Node::Bot => WorldSet::empty(),
                Node::Var(k) => val[k].clone(),
                Node::Imp(a, b) => out[a].complement(n).union(&out[b]),
                Node::Box(a) => (0..n).filter(|&w| frame.succ(w).is_subset(&out[a])).collect(),
                Node::Rhd(a, b) => rhd_set(frame, &out[a], &out[b]),
            };
        }
        out
    }

    /// Every valuation of the variables over `n` worlds, as extension lists.
    pub fn valuations(&self, n: usize) -> impl Iterator<Item = Vec<WorldSet>> + '_ {
        let k = self.vars.len();
        assert!(n * k < 40, "valuation space too large: {} bits", n * k);
        let mask = (1u64 << n) - 1;
        (0u64..(1u64 << (n * k)))
            .map(move |code| (0..k).map(|i| WorldSet::from_mask((code >> (i * n)) & mask)).collect())
    }
}
