use std::collections::BTreeMap;
use std::fmt::Write;

use serde_json::{json, Map, Value};

use super::{Frame, Model, Neighbourhood, SRelation, WorldSet};
use crate::Error;

fn bad(msg: impl Into<String>) -> Error {
    Error::ModelFormat(msg.into())
}

fn names_of(frame: &Frame, set: &WorldSet) -> Value {
    Value::Array(set.iter().map(|i| Value::String(frame.names()[i].clone())).collect())
}

/// The model as a JSON value. Verbrugge families in clause form are
/// written under the extra key `S_hit`.
pub fn model_to_json_value(m: &Model) -> Value {
    let fr = &m.frame;
    let n = fr.len();
    let name = |i: usize| Value::String(fr.names()[i].clone());
    let mut r = Vec::new();
    for w in 0..n {
        for x in fr.succ(w).iter() {
            r.push(json!([name(w), name(x)]));
        }
    }
    let mut s = Map::new();
    let mut s_hit = Map::new();
    match fr.s_relation() {
        SRelation::Veltman(rows) => {
            for (w, row) in rows.iter().enumerate() {
                let pairs: Vec<Value> = row
                    .iter()
                    .enumerate()
                    .flat_map(|(x, ys)| ys.iter().map(move |y| (x, y)))
                    .map(|(x, y)| json!([name(x), name(y)]))
                    .collect();
                if !pairs.is_empty() {
                    s.insert(fr.names()[w].clone(), Value::Array(pairs));
                }
            }
        }
        SRelation::Verbrugge(rows) => {
            for (w, row) in rows.iter().enumerate() {
                let mut gens = Vec::new();
                let mut hits = Vec::new();
                for (x, fam) in row.iter().enumerate() {
                    if fam.is_void() {
                        continue;
                    }
                    match fam {
                        Neighbourhood::Generators(gs) => {
                            for g in gs.iter().filter(|g| !g.is_empty()) {
                                gens.push(json!([name(x), names_of(fr, g)]));
                            }
                        }
                        Neighbourhood::Hitting(cs) => {
                            let cs: Vec<Value> = cs.iter().map(|c| names_of(fr, c)).collect();
                            hits.push(json!([name(x), cs]));
                        }
                    }
                }
                if !gens.is_empty() {
                    s.insert(fr.names()[w].clone(), Value::Array(gens));
                }
                if !hits.is_empty() {
                    s_hit.insert(fr.names()[w].clone(), Value::Array(hits));
                }
            }
        }
    }
    let val: Map<String, Value> = m
        .val
        .iter()
        .map(|(p, set)| (p.clone(), names_of(fr, set)))
        .collect();
    let mut out = Map::new();
    out.insert("kind".into(), Value::String(fr.kind().to_string()));
    out.insert("worlds".into(), Value::Array((0..n).map(name).collect()));
    out.insert("R".into(), Value::Array(r));
    out.insert("S".into(), Value::Object(s));
    if !s_hit.is_empty() {
        out.insert("S_hit".into(), Value::Object(s_hit));
    }
    out.insert("val".into(), Value::Object(val));
    Value::Object(out)
}

pub fn model_to_json(m: &Model) -> String {
    serde_json::to_string_pretty(&model_to_json_value(m)).expect("serializable")
}

fn world_ix(names: &[String], v: &Value) -> Result<usize, Error> {
    let s = v.as_str().ok_or_else(|| bad("world names must be strings"))?;
    names
        .iter()
        .position(|n| n == s)
        .ok_or_else(|| Error::UnknownWorld(s.to_string()))
}

fn world_set(names: &[String], v: &Value) -> Result<WorldSet, Error> {
    v.as_array()
        .ok_or_else(|| bad("expected an array of worlds"))?
        .iter()
        .map(|x| world_ix(names, x))
        .collect()
}

fn pair(v: &Value) -> Result<(&Value, &Value), Error> {
    match v.as_array().map(Vec::as_slice) {
        Some([a, b]) => Ok((a, b)),
        _ => Err(bad("expected a two-element array")),
    }
}

/// Parses the model JSON format. `R` must already be transitive.
pub fn model_from_json(text: &str) -> Result<Model, Error> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
    let kind = obj.get("kind").and_then(Value::as_str).unwrap_or("veltman");
    let names: Vec<String> = obj
        .get("worlds")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing `worlds`"))?
        .iter()
        .map(|w| w.as_str().map(str::to_string).ok_or_else(|| bad("world names must be strings")))
        .collect::<Result<_, _>>()?;
    let n = names.len();
    let mut succ = vec![WorldSet::empty(); n];
    for p in obj.get("R").and_then(Value::as_array).into_iter().flatten() {
        let (a, b) = pair(p)?;
        succ[world_ix(&names, a)?].insert(world_ix(&names, b)?);
    }
    let s_obj = obj.get("S").and_then(Value::as_object);
    let entries = |key: &str| -> Vec<(String, Value)> {
        obj.get(key)
            .and_then(Value::as_object)
            .map(|m| m.iter().map(|(k, v)| (k.clone(), v.clone())).collect())
            .unwrap_or_default()
    };
    let s = match kind {
        "veltman" => {
            let mut rows = vec![vec![WorldSet::empty(); n]; n];
            for (w, list) in s_obj.into_iter().flatten() {
                let w = names.iter().position(|n| n == w).ok_or_else(|| Error::UnknownWorld(w.clone()))?;
                for p in list.as_array().ok_or_else(|| bad("S entries must be arrays"))? {
                    let (x, y) = pair(p)?;
                    rows[w][world_ix(&names, x)?].insert(world_ix(&names, y)?);
                }
            }
            SRelation::Veltman(rows)
        }
        "verbrugge" => {
            let mut gens: Vec<Vec<Vec<WorldSet>>> = vec![vec![Vec::new(); n]; n];
            let mut hits: Vec<Vec<Option<Vec<WorldSet>>>> = vec![vec![None; n]; n];
            for (w, list) in entries("S") {
                let w = names.iter().position(|n| *n == w).ok_or(Error::UnknownWorld(w))?;
                for p in list.as_array().ok_or_else(|| bad("S entries must be arrays"))? {
                    let (x, set) = pair(p)?;
                    let set = world_set(&names, set)?;
                    if set.is_empty() {
                        return Err(bad("Verbrugge S targets must be nonempty"));
                    }
                    gens[w][world_ix(&names, x)?].push(set);
                }
            }
            for (w, list) in entries("S_hit") {
                let w = names.iter().position(|n| *n == w).ok_or(Error::UnknownWorld(w))?;
                for p in list.as_array().ok_or_else(|| bad("S_hit entries must be arrays"))? {
                    let (x, clauses) = pair(p)?;
                    let clauses = clauses
                        .as_array()
                        .ok_or_else(|| bad("S_hit clauses must be arrays"))?
                        .iter()
                        .map(|c| world_set(&names, c))
                        .collect::<Result<Vec<_>, _>>()?;
                    hits[w][world_ix(&names, x)?] = Some(clauses);
                }
            }
            let mut rows = Vec::with_capacity(n);
            for w in 0..n {
                let mut row = Vec::with_capacity(n);
                for x in 0..n {
                    let fam = match (hits[w][x].take(), gens[w][x].is_empty()) {
                        (Some(cs), true) => Neighbourhood::Hitting(cs),
                        (None, _) => Neighbourhood::Generators(std::mem::take(&mut gens[w][x])),
                        (Some(_), false) => {
                            return Err(bad("a pair may not appear in both S and S_hit"));
                        }
                    };
                    row.push(fam);
                }
                rows.push(row);
            }
            SRelation::Verbrugge(rows)
        }
        other => return Err(bad(format!("unknown kind `{other}`"))),
    };
    let frame = Frame::new(names.clone(), succ, s)?;
    let mut val = BTreeMap::new();
    for (p, set) in obj.get("val").and_then(Value::as_object).into_iter().flatten() {
        val.insert(p.clone(), world_set(&names, set)?);
    }
    Ok(Model::new(frame, val))
}

/// Graphviz rendering: `R` edges solid, `S_w` edges dashed and labeled.
pub fn model_to_dot(m: &Model) -> String {
    let fr = &m.frame;
    let mut out = String::from("digraph model {\n  node [shape=circle];\n");
    for (i, name) in fr.names().iter().enumerate() {
        let true_vars: Vec<&str> = m
            .val
            .iter()
            .filter(|(_, s)| s.contains(i))
            .map(|(p, _)| p.as_str())
            .collect();
        let _ = writeln!(out, "  \"{name}\" [label=\"{name}\\n{}\"];", true_vars.join(","));
    }
    for w in 0..fr.len() {
        for x in fr.succ(w).iter() {
            let _ = writeln!(out, "  \"{}\" -> \"{}\";", fr.names()[w], fr.names()[x]);
        }
    }
    let nm = |i: usize| &fr.names()[i];
    match fr.s_relation() {
        SRelation::Veltman(rows) => {
            for (w, row) in rows.iter().enumerate() {
                for (x, ys) in row.iter().enumerate() {
                    for y in ys.iter() {
                        let _ = writeln!(
                            out,
                            "  \"{}\" -> \"{}\" [style=dashed, label=\"S_{}\"];",
                            nm(x),
                            nm(y),
                            nm(w)
                        );
                    }
                }
            }
        }
        SRelation::Verbrugge(rows) => {
            for (w, row) in rows.iter().enumerate() {
                for (x, fam) in row.iter().enumerate() {
                    if fam.is_void() {
                        continue;
                    }
                    let (tag, sets) = match fam {
                        Neighbourhood::Generators(g) => ("", g),
                        Neighbourhood::Hitting(c) => ("hit ", c),
                    };
                    for (k, set) in sets.iter().enumerate() {
                        for y in set.iter() {
                            let _ = writeln!(
                                out,
                                "  \"{}\" -> \"{}\" [style=dashed, label=\"S_{} {tag}{k}\"];",
                                nm(x),
                                nm(y),
                                nm(w)
                            );
                        }
                    }
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const REMARK: &str = r#"{"kind":"veltman","worlds":["w","x","y"],
        "R":[["w","x"],["w","y"],["x","y"]],
        "S":{"w":[["x","x"],["y","y"]],"x":[["y","y"]]},
        "val":{"p":["y"]}}"#;

    #[test]
    fn round_trip() {
        let m = model_from_json(REMARK).unwrap();
        let again = model_from_json(&model_to_json(&m)).unwrap();
        assert_eq!(m, again);
        let v = Model::new(m.frame.to_verbrugge(), m.val.clone());
        assert_eq!(model_from_json(&model_to_json(&v)).unwrap(), v);
        let g = Model::new(v.frame.with_generators(), m.val.clone());
        assert_eq!(model_from_json(&model_to_json(&g)).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(model_from_json("[]").is_err());
        assert!(model_from_json(r#"{"worlds":["a"],"R":[["a","b"]]}"#).is_err());
        assert!(model_from_json(r#"{"worlds":["a"],"R":[["a","a"]]}"#).is_err());
    }

    #[test]
    fn dot_has_dashed_s_edges() {
        let dot = model_to_dot(&model_from_json(REMARK).unwrap());
        assert!(dot.contains("\"w\" -> \"x\";"));
        assert!(dot.contains("\"x\" -> \"x\" [style=dashed, label=\"S_w\"]"));
    }
}
