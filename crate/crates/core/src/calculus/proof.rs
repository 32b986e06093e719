use std::collections::BTreeMap;
use std::fmt::{self, Write};

use serde::Serialize;

use super::logic::{Language, Logic, Rule};
use super::schema::schema;
use super::taut::is_tautology;
use crate::{parse, print, Error, Formula};

/// How a proof line is justified. Step references are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    /// An instance of a named schema; the bindings are inferred when absent.
    Axiom { schema: String, sub: Option<BTreeMap<String, Formula>> },
    Taut,
    /// From `A` (first) and `A → B` (second), either order.
    Mp(usize, usize),
    Nec(usize),
    R1(usize),
    R2(usize),
    UR(usize),
    /// An assumed theorem; a script with hypotheses establishes a derived
    /// rule rather than a theorem.
    Hyp,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub formula: Formula,
    pub just: Justification,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Proof {
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Accepted { hypotheses: Vec<String> },
    Rejected { step: usize, reason: String },
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted { .. })
    }
}

fn reject(step: usize, reason: impl Into<String>) -> Verdict {
    Verdict::Rejected { step, reason: reason.into() }
}

/// Checks every line of `pr` in `l` and that the last line is `goal`.
pub fn check_proof(l: &Logic, pr: &Proof, goal: &Formula) -> Verdict {
    let mut hyps = Vec::new();
    for (ix, step) in pr.steps.iter().enumerate() {
        let n = ix + 1;
        let f = &step.formula;
        if l.language == Language::Unary && !f.is_unary() {
            return reject(n, "formula outside the unary language");
        }
        let earlier = |i: usize| -> Result<&Formula, Verdict> {
            if i == 0 || i >= n {
                Err(reject(n, format!("reference to line {i} which is not earlier")))
            } else {
                Ok(&pr.steps[i - 1].formula)
            }
        };
        let need_rule = |r: Rule| -> Result<(), Verdict> {
            if l.has_rule(r) {
                Ok(())
            } else {
                Err(reject(n, format!("rule {r} is not in {}", l.id)))
            }
        };
        let premise_imp = |i: usize| -> Result<(Formula, Formula), Verdict> {
            match earlier(i)? {
                Formula::Implies(a, b) => Ok(((**a).clone(), (**b).clone())),
                _ => Err(reject(n, format!("line {i} is not an implication"))),
            }
        };
        let outcome: Result<(), Verdict> = (|| {
            match &step.just {
                Justification::Hyp => {
                    hyps.push(print(f));
                }
                Justification::Taut => {
                    if !is_tautology(f) {
                        return Err(reject(n, "not a tautology"));
                    }
                }
                Justification::Axiom { schema: name, sub } => {
                    let s = schema(name).map_err(|e| reject(n, e.to_string()))?;
                    if !l.has_axiom(s.name) {
                        return Err(reject(n, format!("schema {} is not in {}", s.name, l.id)));
                    }
                    let ok = match sub {
                        Some(sub) => s.instantiate(sub).map_err(|e| reject(n, e.to_string()))? == *f,
                        None => s.match_instance(f).is_some(),
                    };
                    if !ok {
                        return Err(reject(n, format!("not an instance of {}", s.name)));
                    }
                }
                Justification::Mp(i, j) => {
                    need_rule(Rule::MP)?;
                    let (a, b) = (earlier(*i)?, earlier(*j)?);
                    let fits = |x: &Formula, y: &Formula| *y == Formula::implies(x.clone(), f.clone());
                    if !fits(a, b) && !fits(b, a) {
                        return Err(reject(n, "shape mismatch for modus ponens"));
                    }
                }
                Justification::Nec(i) => {
                    need_rule(Rule::Nec)?;
                    if *f != Formula::boxed(earlier(*i)?.clone()) {
                        return Err(reject(n, "shape mismatch for necessitation"));
                    }
                }
                Justification::R1(i) => {
                    need_rule(Rule::R1)?;
                    let (a, b) = premise_imp(*i)?;
                    let ok = match f {
                        Formula::Implies(l, r) => match (&**l, &**r) {
                            (Formula::Rhd(c1, a1), Formula::Rhd(c2, b1)) => c1 == c2 && **a1 == a && **b1 == b,
                            _ => false,
                        },
                        _ => false,
                    };
                    if !ok {
                        return Err(reject(n, "shape mismatch for R1"));
                    }
                }
                Justification::R2(i) => {
                    need_rule(Rule::R2)?;
                    let (a, b) = premise_imp(*i)?;
                    let ok = match f {
                        Formula::Implies(l, r) => match (&**l, &**r) {
                            (Formula::Rhd(b1, c1), Formula::Rhd(a1, c2)) => c1 == c2 && **a1 == a && **b1 == b,
                            _ => false,
                        },
                        _ => false,
                    };
                    if !ok {
                        return Err(reject(n, "shape mismatch for R2"));
                    }
                }
                Justification::UR(i) => {
                    need_rule(Rule::UR)?;
                    let (a, b) = premise_imp(*i)?;
                    if *f != Formula::implies(Formula::unary(a), Formula::unary(b)) {
                        return Err(reject(n, "shape mismatch for uR"));
                    }
                }
            }
            Ok(())
        })();
        if let Err(v) = outcome {
            return v;
        }
    }
    match pr.steps.last() {
        None => reject(0, "empty proof"),
        Some(s) if s.formula != *goal => reject(pr.steps.len(), "last line is not the goal"),
        Some(_) => Verdict::Accepted { hypotheses: hyps },
    }
}

/// Incremental construction of proofs; each method appends a line and
/// returns its 1-based number.
///
/// Methods panic on misuse, so builders are meant for fixed derivations
/// whose correctness is then confirmed by [`check_proof`].
#[derive(Debug, Default)]
pub struct ProofBuilder {
    proof: Proof,
}

pub(crate) fn f(text: &str) -> Formula {
    parse(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

impl ProofBuilder {
    pub fn new() -> ProofBuilder {
        ProofBuilder::default()
    }

    pub fn formula(&self, i: usize) -> &Formula {
        &self.proof.steps[i - 1].formula
    }

    fn push(&mut self, formula: Formula, just: Justification) -> usize {
        self.proof.steps.push(Step { formula, just });
        self.proof.steps.len()
    }

    /// An axiom instance; bindings are formula texts.
    pub fn axiom(&mut self, name: &str, bindings: &[(&str, &str)]) -> usize {
        let sub: BTreeMap<String, Formula> = bindings.iter().map(|(k, v)| (k.to_string(), f(v))).collect();
        let s = schema(name).expect("known schema");
        let inst = s.instantiate(&sub).expect("complete bindings");
        self.push(inst, Justification::Axiom { schema: s.name.to_string(), sub: Some(sub) })
    }

    pub fn taut(&mut self, text: &str) -> usize {
        self.taut_f(f(text))
    }

    pub fn taut_f(&mut self, formula: Formula) -> usize {
        self.push(formula, Justification::Taut)
    }

    pub fn hyp(&mut self, text: &str) -> usize {
        self.push(f(text), Justification::Hyp)
    }

    /// Modus ponens from line `a` and line `imp` (`A → B`).
    pub fn mp(&mut self, a: usize, imp: usize) -> usize {
        let b = match self.formula(imp) {
            Formula::Implies(x, y) if **x == *self.formula(a) => (**y).clone(),
            other => panic!("mp: line {imp} ({other}) does not start with line {a}"),
        };
        self.push(b, Justification::Mp(a, imp))
    }

    pub fn nec(&mut self, i: usize) -> usize {
        let g = Formula::boxed(self.formula(i).clone());
        self.push(g, Justification::Nec(i))
    }

    fn split(&self, i: usize) -> (Formula, Formula) {
        match self.formula(i) {
            Formula::Implies(a, b) => ((**a).clone(), (**b).clone()),
            other => panic!("line {i} ({other}) is not an implication"),
        }
    }

    /// From `A → B` infer `C ▷ A → C ▷ B`.
    pub fn r1(&mut self, i: usize, c: &str) -> usize {
        let (a, b) = self.split(i);
        let c = f(c);
        self.push(Formula::implies(Formula::rhd(c.clone(), a), Formula::rhd(c, b)), Justification::R1(i))
    }

    /// From `A → B` infer `B ▷ C → A ▷ C`.
    pub fn r2(&mut self, i: usize, c: &str) -> usize {
        let (a, b) = self.split(i);
        let c = f(c);
        self.push(Formula::implies(Formula::rhd(b, c.clone()), Formula::rhd(a, c)), Justification::R2(i))
    }

    /// From `A → B` infer `I A → I B`.
    pub fn ur(&mut self, i: usize) -> usize {
        let (a, b) = self.split(i);
        self.push(Formula::implies(Formula::unary(a), Formula::unary(b)), Justification::UR(i))
    }

    /// From `[]X -> []Y`-free premises: derives `□A → □B` from a provable
    /// `A → B` text via tautology, necessitation and G2.
    pub fn box_mono(&mut self, imp: &str) -> usize {
        let t = self.taut(imp);
        self.box_mono_line(t)
    }

    /// `□A → □B` from line `A → B`.
    pub fn box_mono_line(&mut self, i: usize) -> usize {
        let (a, b) = self.split(i);
        let n = self.nec(i);
        let g2 = self.axiom("G2", &[("A", &print(&a)), ("B", &print(&b))]);
        self.mp(n, g2)
    }

    /// Derives `target` from the given lines by one tautology
    /// `p1 → (p2 → … → target)` and repeated modus ponens.
    pub fn chain(&mut self, premises: &[usize], target: &str) -> usize {
        let target = f(target);
        let t = premises
            .iter()
            .rev()
            .fold(target, |acc, &i| Formula::implies(self.formula(i).clone(), acc));
        let mut cur = self.taut_f(t);
        for &i in premises {
            cur = self.mp(i, cur);
        }
        cur
    }

    pub fn finish(self) -> Proof {
        self.proof
    }
}

impl Proof {
    /// Renders the line-oriented script format with optional headers.
    pub fn to_script(&self, logic: Option<&str>, goal: Option<&Formula>) -> String {
        let mut out = String::new();
        if let Some(l) = logic {
            let _ = writeln!(out, "# logic: {l}");
        }
        if let Some(g) = goal {
            let _ = writeln!(out, "# goal: {}", print(g));
        }
        for (i, s) in self.steps.iter().enumerate() {
            let _ = writeln!(out, "{}. {} ; {}", i + 1, print(&s.formula), s.just);
        }
        out
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Axiom { schema, sub } => {
                write!(f, "axiom {schema}")?;
                if let Some(sub) = sub {
                    let parts: Vec<String> = sub.iter().map(|(k, v)| format!("{k}:={}", print(v))).collect();
                    write!(f, " {{{}}}", parts.join(", "))?;
                }
                Ok(())
            }
            Justification::Taut => f.write_str("taut"),
            Justification::Mp(i, j) => write!(f, "mp {i} {j}"),
            Justification::Nec(i) => write!(f, "nec {i}"),
            Justification::R1(i) => write!(f, "r1 {i}"),
            Justification::R2(i) => write!(f, "r2 {i}"),
            Justification::UR(i) => write!(f, "ur {i}"),
            Justification::Hyp => f.write_str("hyp"),
        }
    }
}

/// A parsed script: proof plus the optional `# logic:` and `# goal:`
/// headers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Script {
    pub logic: Option<String>,
    pub goal: Option<Formula>,
    pub proof: Proof,
}

pub fn parse_script(text: &str) -> Result<Script, Error> {
    let mut logic = None;
    let mut goal = None;
    let mut steps = Vec::new();
    for (ix, raw) in text.lines().enumerate() {
        let line_no = ix + 1;
        let err = |m: String| Error::Script { line: line_no, message: m };
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(v) = rest.strip_prefix("logic:") {
                logic = Some(v.trim().to_string());
            } else if let Some(v) = rest.strip_prefix("goal:") {
                goal = Some(parse(v.trim()).map_err(|e| err(e.to_string()))?);
            }
            continue;
        }
        let (num, rest) = line.split_once('.').ok_or_else(|| err("expected `n. formula ; rule`".into()))?;
        let num: usize = num.trim().parse().map_err(|_| err(format!("bad line number `{num}`")))?;
        if num != steps.len() + 1 {
            return Err(err(format!("expected line number {}, found {num}", steps.len() + 1)));
        }
        let (formula, just) = rest.rsplit_once(';').ok_or_else(|| err("missing `;` before the justification".into()))?;
        let formula = parse(formula.trim()).map_err(|e| err(e.to_string()))?;
        let just = parse_justification(just.trim()).map_err(err)?;
        steps.push(Step { formula, just });
    }
    Ok(Script { logic, goal, proof: Proof { steps } })
}

fn parse_justification(text: &str) -> Result<Justification, String> {
    let (word, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
    let rest = rest.trim();
    let nums = || -> Result<Vec<usize>, String> {
        rest.split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| format!("bad step reference `{t}`")))
            .collect()
    };
    let one = || -> Result<usize, String> {
        match nums()?.as_slice() {
            [i] => Ok(*i),
            _ => Err(format!("`{word}` takes one step reference")),
        }
    };
    Ok(match word.to_ascii_lowercase().as_str() {
        "taut" => Justification::Taut,
        "hyp" => Justification::Hyp,
        "nec" => Justification::Nec(one()?),
        "r1" => Justification::R1(one()?),
        "r2" => Justification::R2(one()?),
        "ur" => Justification::UR(one()?),
        "mp" => match nums()?.as_slice() {
            [i, j] => Justification::Mp(*i, *j),
            _ => return Err("`mp` takes two step references".into()),
        },
        "axiom" => {
            let (name, subs) = match rest.split_once('{') {
                Some((n, s)) => (n.trim(), Some(s.trim().strip_suffix('}').ok_or("unclosed `{`")?)),
                None => (rest, None),
            };
            if name.is_empty() {
                return Err("missing schema name".into());
            }
            let sub = match subs {
                None => None,
                Some(s) => {
                    let mut map = BTreeMap::new();
                    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
                        let (k, v) = part.split_once(":=").ok_or(format!("expected `X:=formula` in `{part}`"))?;
                        let v = parse(v.trim()).map_err(|e| e.to_string())?;
                        map.insert(k.trim().to_string(), v);
                    }
                    Some(map)
                }
            };
            Justification::Axiom { schema: name.to_string(), sub }
        }
        other => return Err(format!("unknown justification `{other}`")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::logic;

    #[test]
    fn builder_and_script_round_trip() {
        let mut b = ProofBuilder::new();
        let a = b.axiom("uJ15", &[("A", "p")]);
        let m = b.box_mono("p -> p | <>p");
        b.chain(&[m, a], "[]p -> I p");
        let pr = b.finish();
        let goal = f("[]p -> I p");
        assert!(check_proof(logic("il-(uJ15)").unwrap(), &pr, &goal).is_accepted());
        let text = pr.to_script(Some("il-(uJ15)"), Some(&goal));
        let back = parse_script(&text).unwrap();
        assert_eq!(back.proof, pr);
        assert_eq!(back.goal, Some(goal.clone()));
        match check_proof(logic("il-").unwrap(), &pr, &goal) {
            Verdict::Rejected { step, reason } => {
                assert_eq!(step, 1);
                assert!(reason.contains("uJ15"));
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn rule_membership_is_enforced() {
        let mut b = ProofBuilder::new();
        let t = b.taut("p -> p");
        b.ur(t);
        let pr = b.finish();
        let goal = f("I p -> I p");
        assert!(check_proof(logic("il-").unwrap(), &pr, &goal).is_accepted());
        let v = check_proof(logic("IL-").unwrap(), &pr, &goal);
        assert_eq!(v, reject(2, "rule uR is not in IL-"));
    }

    #[test]
    fn bad_lines() {
        let goal = f("p");
        let pr = Proof { steps: vec![Step { formula: f("p -> q"), just: Justification::Taut }] };
        assert!(!check_proof(logic("IL-").unwrap(), &pr, &goal).is_accepted());
        assert!(parse_script("1. p ; mp 1").is_err());
        assert!(parse_script("2. p ; taut").is_err());
        assert!(parse_script("1. p -> ; taut").is_err());
        let s = parse_script("1. []_|_ <-> I _|_ ; axiom uJ6").unwrap();
        assert!(check_proof(logic("il-").unwrap(), &s.proof, &f("[]_|_ <-> I _|_")).is_accepted());
    }
}
