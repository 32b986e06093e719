//! The `ilkit` command line.
//!
//! Every verb prints one JSON document (or text, or Graphviz for verbs that
//! produce a model) and exits with 0 for a definitive answer, 2 when a
//! budget ran out without one, and 1 on bad input.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::calculus::{check_proof, logic, parse_script, Logic, Proof};
use crate::decision::{
    bounded_countermodel, canonical_countermodel, correspond, decide, Agreement, ConsistencyOracle, Countermodel,
    Decision,
};
use crate::fixedpoint::{fixed_point, non_fpp_search, verify_fixed_point, FixedPointVerdict};
use crate::semantics::{
    check_condition, count_frames, enumerate_frames, model_from_json, model_to_dot, model_to_json_value, FrameCondition,
    FrameKind, Model,
};
use crate::syntax::{print_with, Glyphs};
use crate::{parse, Error, Formula};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "ilkit", version, about = "Interpretability logics: models, proofs, countermodels, fixed points")]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value = "json")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a formula and print its normal form.
    Parse {
        #[arg(long)]
        formula: String,
    },
    /// Evaluate a formula in a model file.
    Check {
        #[arg(long)]
        model: PathBuf,
        /// Report a single world; all worlds otherwise.
        #[arg(long)]
        world: Option<String>,
        #[arg(long)]
        formula: String,
    },
    /// Test frame conditions on the frame of a model file.
    FrameCheck {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        condition: Vec<String>,
        /// Check every condition of this logic's frame class.
        #[arg(long)]
        logic: Option<String>,
    },
    /// List all frames on `n` worlds up to isomorphism.
    EnumerateFrames {
        #[arg(long)]
        worlds: usize,
        #[arg(long, default_value = "veltman")]
        kind: String,
        #[arg(long)]
        condition: Vec<String>,
        /// Use this logic's frame kind and conditions.
        #[arg(long)]
        logic: Option<String>,
        #[arg(long)]
        count_only: bool,
    },
    /// Check a proof script.
    Prove {
        #[arg(long)]
        logic: Option<String>,
        #[arg(long)]
        script: PathBuf,
        /// Overrides the script's goal header.
        #[arg(long)]
        goal: Option<String>,
    },
    /// Provable, refutable within the bound, or unknown.
    Decide {
        #[arg(long)]
        logic: String,
        #[arg(long)]
        formula: String,
        #[arg(long, default_value_t = 3)]
        max_worlds: usize,
        /// Proof scripts to try before searching.
        #[arg(long)]
        script: Vec<PathBuf>,
    },
    /// Smallest countermodel within the bound.
    Countermodel {
        #[arg(long)]
        logic: String,
        #[arg(long)]
        formula: String,
        #[arg(long, default_value_t = 3)]
        max_worlds: usize,
    },
    /// Build and audit the canonical countermodel of an unprovable formula.
    Canonical {
        #[arg(long)]
        logic: String,
        #[arg(long)]
        formula: String,
        /// Largest frame sampled when collecting maximal consistent sets.
        #[arg(long, default_value_t = 3)]
        max_worlds: usize,
    },
    /// Compare a binary logic and its unary counterpart on a unary formula.
    Correspond {
        #[arg(long)]
        logic: String,
        #[arg(long)]
        formula: String,
        #[arg(long, default_value_t = 3)]
        max_worlds: usize,
        #[arg(long)]
        script: Vec<PathBuf>,
    },
    /// Compute and verify a fixed point, or search for one.
    Fixpoint {
        #[arg(long, default_value = "IL-(J2+,J5)")]
        logic: String,
        #[arg(long)]
        formula: String,
        #[arg(long, default_value = "p")]
        var: String,
        #[arg(long, default_value_t = 3)]
        verify_max_worlds: usize,
        /// Try every candidate up to this depth instead of the composition.
        #[arg(long)]
        search_depth: Option<usize>,
    },
}

/// Exit code, standard output and standard error of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

const DEFINITE: i32 = 0;
const USAGE: i32 = 1;
const UNKNOWN: i32 = 2;

/// Runs one command line; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { DEFINITE };
            let text = e.render().to_string();
            return if code == DEFINITE {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let ctx = Ctx { format: cli.format, glyphs: Glyphs::from_env() };
    match ctx.dispatch(cli.command) {
        Ok((code, out)) => Outcome { code, stdout: out, stderr: String::new() },
        Err(e) => Outcome { code: USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

struct Ctx {
    format: Format,
    glyphs: Glyphs,
}

fn read(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_proofs(paths: &[PathBuf]) -> Result<Vec<Proof>, Error> {
    paths.iter().map(|p| Ok(parse_script(&read(p)?)?.proof)).collect()
}

fn frame_kind(text: &str) -> Result<FrameKind, Error> {
    match text.to_ascii_lowercase().as_str() {
        "veltman" => Ok(FrameKind::Veltman),
        "verbrugge" => Ok(FrameKind::Verbrugge),
        other => Err(Error::Precondition(format!("unknown frame kind `{other}`"))),
    }
}

fn conditions(names: &[String]) -> Result<Vec<FrameCondition>, Error> {
    names.iter().map(|c| c.parse()).collect()
}

impl Ctx {
    fn show(&self, f: &Formula) -> String {
        print_with(f, self.glyphs)
    }

    /// Renders `value` as JSON, `text` as text, and `model` as Graphviz.
    fn emit(&self, value: Value, text: String, model: Option<&Model>) -> Result<String, Error> {
        match self.format {
            Format::Json => Ok(serde_json::to_string_pretty(&value).expect("serializable") + "\n"),
            Format::Text => Ok(text + "\n"),
            Format::Dot => model
                .map(model_to_dot)
                .ok_or_else(|| Error::Precondition("--format dot needs a verb that produces a model".into())),
        }
    }

    fn countermodel(&self, cm: &Countermodel) -> Value {
        json!({ "world": cm.world_name(), "model": model_to_json_value(&cm.model) })
    }

    fn dispatch(&self, cmd: Command) -> Result<(i32, String), Error> {
        match cmd {
            Command::Parse { formula } => {
                let f = parse(&formula)?;
                let vars: Vec<String> = f.vars().iter().map(|v| v.to_string()).collect();
                let v = json!({ "formula": self.show(&f), "unary": f.is_unary(), "size": f.size(), "vars": vars });
                Ok((DEFINITE, self.emit(v, self.show(&f), None)?))
            }
            Command::Check { model, world, formula } => {
                let m = model_from_json(&read(&model)?)?;
                let f = parse(&formula)?;
                match world {
                    Some(w) => {
                        let holds = m.satisfies_named(&w, &f)?;
                        Ok((DEFINITE, self.emit(json!({ "holds": holds }), holds.to_string(), Some(&m))?))
                    }
                    None => {
                        let set = m.truth_set(&f)?;
                        let names: Vec<&str> = set.iter().map(|i| m.frame.names()[i].as_str()).collect();
                        Ok((DEFINITE, self.emit(json!({ "worlds": names }), names.join(" "), Some(&m))?))
                    }
                }
            }
            Command::FrameCheck { model, condition, logic: lid } => {
                let m = model_from_json(&read(&model)?)?;
                let mut conds = conditions(&condition)?;
                if let Some(id) = lid {
                    conds.extend(logic(&id)?.conditions.iter().copied());
                }
                if conds.is_empty() {
                    return Err(Error::Precondition("give --condition or --logic".into()));
                }
                let mut results = serde_json::Map::new();
                let mut all = true;
                for c in conds {
                    let h = check_condition(&m.frame, c)?;
                    all &= h;
                    results.insert(c.name().to_string(), Value::Bool(h));
                }
                let v = json!({ "holds": all, "conditions": results });
                Ok((DEFINITE, self.emit(v, all.to_string(), Some(&m))?))
            }
            Command::EnumerateFrames { worlds, kind, condition, logic: lid, count_only } => {
                let (kind, conds) = match lid {
                    Some(id) => {
                        let l = logic(&id)?;
                        let p = crate::calculus::semantic_partner(l)?;
                        (p.frame_class.unwrap_or(FrameKind::Veltman), p.conditions.clone())
                    }
                    None => (frame_kind(&kind)?, conditions(&condition)?),
                };
                if count_only {
                    let n = count_frames(worlds, kind, &conds);
                    return Ok((DEFINITE, self.emit(json!({ "count": n }), n.to_string(), None)?));
                }
                let frames: Vec<Value> = enumerate_frames(worlds, kind, &conds)
                    .map(|fr| model_to_json_value(&Model::new(fr, Default::default())))
                    .collect();
                let n = frames.len();
                Ok((DEFINITE, self.emit(json!({ "count": n, "frames": frames }), n.to_string(), None)?))
            }
            Command::Prove { logic: lid, script, goal } => self.prove(lid, &script, goal),
            Command::Decide { logic: lid, formula, max_worlds, script } => {
                let l = logic(&lid)?;
                let f = parse(&formula)?;
                let supplied = load_proofs(&script)?;
                let base = json!({ "logic": l.id, "formula": self.show(&f) });
                let (code, mut v, text, model) = match decide(l, &f, max_worlds, &supplied)? {
                    Decision::Provable { source, proof } => (
                        DEFINITE,
                        json!({ "result": "provable", "source": source, "lines": proof.steps.len() }),
                        format!("provable ({})", source.origin),
                        None,
                    ),
                    Decision::Refutable(cm) => (
                        DEFINITE,
                        json!({ "result": "refutable", "countermodel": self.countermodel(&cm) }),
                        format!("refutable at {}", cm.world_name()),
                        Some(cm.model),
                    ),
                    Decision::Unknown => (
                        UNKNOWN,
                        json!({ "result": "unknown", "max_worlds": max_worlds }),
                        format!("unknown (no proof found, no countermodel up to {max_worlds} worlds)"),
                        None,
                    ),
                };
                merge(&mut v, base);
                Ok((code, self.emit(v, text, model.as_ref())?))
            }
            Command::Countermodel { logic: lid, formula, max_worlds } => {
                let l = logic(&lid)?;
                let f = parse(&formula)?;
                match bounded_countermodel(l, &f, max_worlds)? {
                    Some(cm) => {
                        let text = format!("refuted at {} in a {}-world model", cm.world_name(), cm.model.frame.len());
                        Ok((DEFINITE, self.emit(json!({ "found": true, "countermodel": self.countermodel(&cm) }), text, Some(&cm.model))?))
                    }
                    None => {
                        let text = format!("no countermodel up to {max_worlds} worlds");
                        Ok((UNKNOWN, self.emit(json!({ "found": false, "max_worlds": max_worlds }), text, None)?))
                    }
                }
            }
            Command::Canonical { logic: lid, formula, max_worlds } => {
                let l = logic(&lid)?;
                let a = parse(&formula)?;
                let c = canonical_countermodel(l, &a, &ConsistencyOracle::bounded(max_worlds))?;
                let passed = c.audit.passed();
                let v = json!({
                    "logic": l.id,
                    "formula": self.show(&a),
                    "construction": c.construction,
                    "worlds": c.model.frame.len(),
                    "root": c.model.frame.names()[c.root],
                    "audit": c.audit,
                    "passed": passed,
                    "model": model_to_json_value(&c.model),
                });
                let text = format!(
                    "{} on {} worlds, audit {}",
                    c.construction.name(),
                    c.model.frame.len(),
                    if passed { "passed" } else { "failed" }
                );
                Ok((if passed { DEFINITE } else { UNKNOWN }, self.emit(v, text, Some(&c.model))?))
            }
            Command::Correspond { logic: lid, formula, max_worlds, script } => {
                let l = logic(&lid)?;
                let f = parse(&formula)?;
                let r = correspond(l, &f, max_worlds, &load_proofs(&script)?)?;
                let v = json!({
                    "binary": r.binary,
                    "unary": r.unary,
                    "formula": self.show(&r.formula),
                    "verdict": r.verdict,
                    "refutation": r.refutation.as_ref().map(|cm| self.countermodel(cm)),
                    "binary_proof": r.binary_proof,
                    "unary_proof": r.unary_proof,
                });
                let text = serde_json::to_value(r.verdict).expect("serializable").as_str().unwrap_or_default().to_string();
                let code = if r.verdict == Agreement::Unknown { UNKNOWN } else { DEFINITE };
                Ok((code, self.emit(v, text, r.refutation.as_ref().map(|cm| &cm.model))?))
            }
            Command::Fixpoint { logic: lid, formula, var, verify_max_worlds, search_depth } => {
                let l = logic(&lid)?;
                let a = parse(&formula)?;
                match search_depth {
                    Some(depth) => self.fixpoint_search(l, &a, &var, depth, verify_max_worlds),
                    None => self.fixpoint(l, &a, &var, verify_max_worlds),
                }
            }
        }
    }

    fn prove(&self, lid: Option<String>, script: &PathBuf, goal: Option<String>) -> Result<(i32, String), Error> {
        let s = parse_script(&read(script)?)?;
        let id = lid.or(s.logic).ok_or_else(|| Error::Precondition("no logic: give --logic or a `# logic:` header".into()))?;
        let l = logic(&id)?;
        let goal = match goal {
            Some(g) => parse(&g)?,
            None => s.goal.ok_or_else(|| Error::Precondition("no goal: give --goal or a `# goal:` header".into()))?,
        };
        let verdict = check_proof(l, &s.proof, &goal);
        let mut v = json!({ "accepted": verdict.is_accepted(), "logic": l.id, "goal": self.show(&goal) });
        merge(&mut v, serde_json::to_value(&verdict).expect("serializable"));
        let text = if verdict.is_accepted() { "accepted".to_string() } else { "rejected".to_string() };
        Ok((DEFINITE, self.emit(v, text, None)?))
    }

    fn fixpoint(&self, l: &Logic, a: &Formula, p: &str, max_worlds: usize) -> Result<(i32, String), Error> {
        let r = fixed_point(a, p)?;
        let verdict = verify_fixed_point(l, a, p, &r.output, max_worlds, None)?;
        let refutation = match &verdict {
            FixedPointVerdict::Refuted(cm) => Some(cm),
            _ => None,
        };
        let v = json!({
            "logic": l.id,
            "input": self.show(a),
            "variable": p,
            "fixed_point": self.show(&r.output),
            "var_condition_ok": r.var_condition_ok,
            "verdict": verdict.name(),
            "refutation": refutation.map(|cm| self.countermodel(cm)),
        });
        let text = format!("{} ({})", self.show(&r.output), verdict.name());
        Ok((DEFINITE, self.emit(v, text, refutation.map(|cm| &cm.model))?))
    }

    fn fixpoint_search(&self, l: &Logic, a: &Formula, p: &str, depth: usize, max_worlds: usize) -> Result<(i32, String), Error> {
        let rep = non_fpp_search(l, a, p, depth, max_worlds)?;
        let survivors: Vec<String> = rep.survivors().into_iter().map(|f| self.show(f)).collect();
        let outcomes: Vec<Value> = rep
            .outcomes
            .iter()
            .map(|o| json!({ "candidate": self.show(&o.formula), "refuted": o.refutation.is_some() }))
            .collect();
        let v = json!({
            "logic": rep.logic,
            "input": self.show(a),
            "variable": p,
            "depth": depth,
            "max_worlds": max_worlds,
            "candidates": outcomes.len(),
            "all_refuted": rep.all_refuted(),
            "survivors": survivors,
            "outcomes": outcomes,
        });
        let text = format!("{} candidates, {} not refuted: {}", outcomes.len(), survivors.len(), survivors.join(", "));
        Ok((DEFINITE, self.emit(v, text, None)?))
    }
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        for (k, v) in b {
            a.entry(k).or_insert(v);
        }
    }
}
