//! Explicit fixed points of modalized unary formulas.
//!
//! [`fixed_point`] builds a candidate by the usual composition over the
//! maximal modal components of `A(p)`. Nothing it returns is trusted until
//! [`verify_fixed_point`] has searched for a small frame refuting
//! `F ↔ A(F)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::calculus::{check_proof, Logic, Proof, Verdict};
use crate::decision::{bounded_countermodel, Countermodel};
use crate::{Error, Formula};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedPointResult {
    pub input: Formula,
    pub variable: String,
    pub output: Formula,
    pub var_condition_ok: bool,
}

/// `var(f) ⊆ var(a) \ {p}`.
pub fn var_condition(a: &Formula, p: &str, f: &Formula) -> bool {
    let allowed = a.vars();
    f.vars().iter().all(|v| &**v != p && allowed.contains(v))
}

/// The maximal `□`- and `▷`-subformulas of `a` containing `p`, in order of
/// first occurrence, without repeats.
fn components(a: &Formula, p: &str, out: &mut Vec<Formula>) {
    match a {
        Formula::Implies(x, y) => {
            components(x, p, out);
            components(y, p, out);
        }
        Formula::Box(_) | Formula::Rhd(..) if a.contains_var(p) => {
            if !out.contains(a) {
                out.push(a.clone());
            }
        }
        _ => {}
    }
}

/// Rebuilds `a` with each component replaced through `f`.
fn rebuild(a: &Formula, comps: &[Formula], f: &dyn Fn(usize) -> Formula) -> Formula {
    if let Some(i) = comps.iter().position(|c| c == a) {
        return f(i);
    }
    match a {
        Formula::Implies(x, y) => Formula::implies(rebuild(x, comps, f), rebuild(y, comps, f)),
        _ => a.clone(),
    }
}

/// Folds `⊤` and `⊥` out of implications and drops double negations. The result is a tautological
/// equivalent of the input.
pub fn simplify(a: &Formula) -> Formula {
    match a {
        Formula::Implies(x, y) => {
            let (x, y) = (simplify(x), simplify(y));
            if x == Formula::Bottom || y.is_top() {
                Formula::top()
            } else if x.is_top() {
                y
            } else if let (Formula::Bottom, Some(z)) = (&y, x.as_negation()) {
                z.clone()
            } else {
                Formula::implies(x, y)
            }
        }
        Formula::Box(x) => Formula::boxed(simplify(x)),
        Formula::Rhd(x, y) => Formula::rhd(simplify(x), simplify(y)),
        _ => a.clone(),
    }
}

fn compose(a: &Formula, p: &str) -> Formula {
    let mut comps = Vec::new();
    components(a, p, &mut comps);
    if comps.is_empty() {
        return a.clone();
    }
    // With component i frozen to its value at a world seeing nothing, the
    // remaining formula has one component fewer.
    let solved: Vec<Formula> = (0..comps.len())
        .map(|i| {
            let frozen = match &comps[i] {
                Formula::Box(_) => Formula::top(),
                _ => Formula::boxed(Formula::bot()),
            };
            let reduced = rebuild(a, &comps, &|j| if j == i { frozen.clone() } else { comps[j].clone() });
            simplify(&compose(&reduced, p))
        })
        .collect();
    simplify(&rebuild(a, &comps, &|i| comps[i].substitute(p, &solved[i])))
}

/// A fixed point of `a` in `p`: `□`-components use the classical provability
/// rule `B(□C(p)) ↦ B(□C(B(⊤)))`, `I`-components the rule
/// `B(I C(p)) ↦ B(I C(B(□⊥)))`, and several components are combined one at
/// a time. `a` must be unary with `p` modalized.
pub fn fixed_point(a: &Formula, p: &str) -> Result<FixedPointResult, Error> {
    if !a.is_unary() {
        return Err(Error::NotUnary(crate::print(a)));
    }
    if !a.is_modalized(p) {
        return Err(Error::NotModalized { var: p.to_string(), formula: crate::print(a) });
    }
    let output = compose(a, p);
    Ok(FixedPointResult {
        input: a.clone(),
        variable: p.to_string(),
        var_condition_ok: var_condition(a, p, &output),
        output,
    })
}

/// `F ↔ A(F)`.
pub fn fixed_point_equation(a: &Formula, p: &str, f: &Formula) -> Formula {
    Formula::iff(f.clone(), a.substitute(p, f))
}

#[derive(Debug, Clone)]
pub enum FixedPointVerdict {
    /// A supplied proof of the equation was accepted.
    Certified,
    /// No frame up to the bound refutes the equation.
    SemanticallyConsistent,
    Refuted(Countermodel),
    /// `F` mentions `p` or a variable foreign to `A`.
    VarCondition,
}

impl FixedPointVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            FixedPointVerdict::Certified => "certified",
            FixedPointVerdict::SemanticallyConsistent => "semantically-consistent",
            FixedPointVerdict::Refuted(_) => "refuted",
            FixedPointVerdict::VarCondition => "var-condition-failed",
        }
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, FixedPointVerdict::Refuted(_) | FixedPointVerdict::VarCondition)
    }
}

/// Checks the variable condition, then looks for a frame of `l` with at
/// most `max_worlds` worlds refuting `F ↔ A(F)`. A supplied proof of the
/// equation in `l`, if accepted, upgrades a surviving candidate to
/// certified.
pub fn verify_fixed_point(
    l: &Logic,
    a: &Formula,
    p: &str,
    f: &Formula,
    max_worlds: usize,
    proof: Option<&Proof>,
) -> Result<FixedPointVerdict, Error> {
    if !var_condition(a, p, f) {
        return Ok(FixedPointVerdict::VarCondition);
    }
    let eq = fixed_point_equation(a, p, f);
    if let Some(cm) = bounded_countermodel(l, &eq, max_worlds)? {
        return Ok(FixedPointVerdict::Refuted(cm));
    }
    let certified = proof.is_some_and(|pr| {
        matches!(check_proof(l, pr, &eq), Verdict::Accepted { hypotheses } if hypotheses.is_empty())
    });
    Ok(if certified { FixedPointVerdict::Certified } else { FixedPointVerdict::SemanticallyConsistent })
}

/// Candidate formulas of connective depth at most `depth` over `vars`:
/// `⊥`, `⊤` and the variables at depth 0, closed under `¬` (never doubled),
/// `∧` (arguments sorted), `□` and `I`.
pub fn candidates(vars: &[String], depth: usize) -> Vec<Formula> {
    let mut levels: Vec<BTreeSet<Formula>> = Vec::new();
    let mut base: BTreeSet<Formula> = [Formula::bot(), Formula::top()].into();
    base.extend(vars.iter().map(|v| Formula::var(v)));
    let mut all = base.clone();
    levels.push(base);
    for _ in 0..depth {
        let last = levels.last().expect("nonempty");
        let mut next = BTreeSet::new();
        for x in last {
            if x.as_negation().is_none() {
                next.insert(Formula::not(x.clone()));
            }
            next.insert(Formula::boxed(x.clone()));
            next.insert(Formula::unary(x.clone()));
            for y in &all {
                if x != y {
                    let (lo, hi) = if x < y { (x, y) } else { (y, x) };
                    next.insert(Formula::and(lo.clone(), hi.clone()));
                }
            }
        }
        next.retain(|f| !all.contains(f));
        all.extend(next.iter().cloned());
        levels.push(next);
    }
    all.into_iter().collect()
}

#[derive(Debug, Clone)]
pub struct CandidateOutcome {
    pub formula: Formula,
    pub refutation: Option<Countermodel>,
}

#[derive(Debug, Clone)]
pub struct NonFppReport {
    pub logic: String,
    pub input: Formula,
    pub variable: String,
    pub depth: usize,
    pub max_worlds: usize,
    pub outcomes: Vec<CandidateOutcome>,
}

impl NonFppReport {
    pub fn all_refuted(&self) -> bool {
        self.outcomes.iter().all(|o| o.refutation.is_some())
    }

    /// Candidates not refuted at this bound.
    pub fn survivors(&self) -> Vec<&Formula> {
        self.outcomes.iter().filter(|o| o.refutation.is_none()).map(|o| &o.formula).collect()
    }
}

/// Tries every candidate fixed point of `a` up to `depth` over
/// `var(a) \ {p}` and records a refuting model for each, where one exists
/// within `max_worlds` worlds. Evidence only: survivors are not proved.
pub fn non_fpp_search(l: &Logic, a: &Formula, p: &str, depth: usize, max_worlds: usize) -> Result<NonFppReport, Error> {
    if !a.is_modalized(p) {
        return Err(Error::NotModalized { var: p.to_string(), formula: crate::print(a) });
    }
    let vars: Vec<String> = a.vars().iter().filter(|v| &***v != p).map(|v| v.to_string()).collect();
    let mut outcomes = Vec::new();
    for f in candidates(&vars, depth) {
        let refutation = bounded_countermodel(l, &fixed_point_equation(a, p, &f), max_worlds)?;
        outcomes.push(CandidateOutcome { formula: f, refutation });
    }
    Ok(NonFppReport {
        logic: l.id.clone(),
        input: a.clone(),
        variable: p.to_string(),
        depth,
        max_worlds,
        outcomes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::logic;
    use crate::parse;

    fn fp(a: &str) -> Formula {
        fixed_point(&parse(a).unwrap(), "p").unwrap().output
    }

    #[test]
    fn worked_examples() {
        assert_eq!(fp("I p"), parse("I []_|_").unwrap());
        assert_eq!(fp("I q"), parse("I q").unwrap());
        assert_eq!(fp("[]~p"), parse("[]_|_").unwrap());
        assert_eq!(fp("[](p -> q)"), parse("[]q").unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(fixed_point(&parse("p & I p").unwrap(), "p"), Err(Error::NotModalized { .. })));
        assert!(matches!(fixed_point(&parse("p |> q").unwrap(), "p"), Err(Error::NotUnary(_))));
    }

    #[test]
    fn var_condition_is_exact() {
        let a = parse("I (p & q)").unwrap();
        assert!(var_condition(&a, "p", &parse("I q").unwrap()));
        assert!(!var_condition(&a, "p", &parse("I r").unwrap()));
        assert!(!var_condition(&a, "p", &parse("I p").unwrap()));
        let l = logic("IL-(J2+,J5)").unwrap();
        let v = verify_fixed_point(l, &a, "p", &parse("I r").unwrap(), 2, None).unwrap();
        assert!(matches!(v, FixedPointVerdict::VarCondition));
    }

    #[test]
    fn verification_separates_logics() {
        let a = parse("I p").unwrap();
        let f = fp("I p");
        let strong = verify_fixed_point(logic("IL-(J2+,J5)").unwrap(), &a, "p", &f, 3, None).unwrap();
        assert!(matches!(strong, FixedPointVerdict::SemanticallyConsistent));
        let weak = verify_fixed_point(logic("IL-").unwrap(), &a, "p", &f, 3, None).unwrap();
        assert!(weak.is_refuted());
    }

    #[test]
    fn candidate_counts() {
        assert_eq!(candidates(&[], 0).len(), 2);
        assert_eq!(candidates(&["q".into()], 0).len(), 3);
        let d1 = candidates(&[], 1);
        // ⊥, ⊤, ⊥ ∧ ⊤, □⊥, □⊤, I⊥, I⊤; ¬⊥ is ⊤ and ¬⊤ is a double negation.
        assert_eq!(d1.len(), 7);
        assert!(candidates(&[], 2).iter().all(|f| f.as_negation().and_then(Formula::as_negation).is_none()));
    }

    #[test]
    fn simplify_keeps_meaning() {
        let f = parse("~~(⊤ -> ([]_|_ & ⊤))").unwrap();
        assert_eq!(simplify(&f), parse("[]_|_").unwrap());
        assert!(crate::calculus::is_tautology(&Formula::iff(f.clone(), simplify(&f))));
    }
}
