use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::{parse, Error, Formula};

/// A named axiom schema. Metavariables are written as the variables
/// `A`, `B`, `C` in the pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schema {
    pub name: &'static str,
    pub pattern: Formula,
}

const CATALOG: [(&str, &str); 18] = [
    ("G2", "[](A -> B) -> ([]A -> []B)"),
    ("G3", "[]([]A -> A) -> []A"),
    ("J1", "[](A -> B) -> A |> B"),
    ("J2", "(A |> B) & (B |> C) -> A |> C"),
    ("J2+", "(A |> (B | C)) & (B |> C) -> A |> C"),
    ("J3", "(A |> C) & (B |> C) -> (A | B) |> C"),
    ("J4", "A |> B -> (<>A -> <>B)"),
    ("J4+", "[](A -> B) -> (C |> A -> C |> B)"),
    ("J5", "<>A |> A"),
    ("J6", "[]A <-> (~A |> _|_)"),
    ("uJ6", "[]_|_ <-> I _|_"),
    ("uJ1", "[]A -> I A"),
    ("uJ15", "[](A | <>A) -> I A"),
    ("uJ25", "[](A -> <>B) -> (I A -> I B)"),
    ("I1", "I []_|_"),
    ("I2", "[](A -> B) -> (I A -> I B)"),
    ("I3", "I (A | <>A) -> I A"),
    ("I4", "I A & <>~_|_ -> <>A"),
];

/// Every schema with a pattern. Tautologies are not listed; they are
/// recognized by the tautology checker instead.
pub fn catalog() -> &'static [Schema] {
    static CELL: OnceLock<Vec<Schema>> = OnceLock::new();
    CELL.get_or_init(|| {
        CATALOG
            .iter()
            .map(|(name, text)| Schema {
                name,
                pattern: parse(text).expect("catalog patterns parse"),
            })
            .collect()
    })
}

/// Looks a schema up by name, ignoring case.
pub fn schema(name: &str) -> Result<&'static Schema, Error> {
    catalog()
        .iter()
        .find(|s| s.name.eq_ignore_ascii_case(name.trim()))
        .ok_or_else(|| Error::UnknownSchema(name.to_string()))
}

impl Schema {
    pub fn metavars(&self) -> Vec<String> {
        self.pattern.vars().iter().map(|v| v.to_string()).collect()
    }

    pub fn instantiate(&self, sub: &BTreeMap<String, Formula>) -> Result<Formula, Error> {
        for v in self.metavars() {
            if !sub.contains_key(&v) {
                return Err(Error::MissingBinding {
                    schema: self.name.to_string(),
                    var: v,
                });
            }
        }
        Ok(self.pattern.substitute_all(&|v| sub.get(v).cloned()))
    }

    /// The metavariable assignment making `f` an instance, if any.
    pub fn match_instance(&self, f: &Formula) -> Option<BTreeMap<String, Formula>> {
        let mut sub = BTreeMap::new();
        unify(&self.pattern, f, &mut sub).then_some(sub)
    }
}

fn unify(pattern: &Formula, f: &Formula, sub: &mut BTreeMap<String, Formula>) -> bool {
    match (pattern, f) {
        (Formula::Var(v), _) => match sub.get(v.as_ref()) {
            Some(bound) => bound == f,
            None => {
                sub.insert(v.to_string(), f.clone());
                true
            }
        },
        (Formula::Bottom, Formula::Bottom) => true,
        (Formula::Implies(a, b), Formula::Implies(c, d)) | (Formula::Rhd(a, b), Formula::Rhd(c, d)) => {
            unify(a, c, sub) && unify(b, d, sub)
        }
        (Formula::Box(a), Formula::Box(c)) => unify(a, c, sub),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(pairs: &[(&str, &str)]) -> BTreeMap<String, Formula> {
        pairs.iter().map(|(k, v)| (k.to_string(), parse(v).unwrap())).collect()
    }

    #[test]
    fn instantiation_examples() {
        let j6 = schema("J6").unwrap().instantiate(&sub(&[("A", "_|_")])).unwrap();
        assert_eq!(j6, parse("[]_|_ <-> (~_|_ |> _|_)").unwrap());
        // the same formula is the unary uJ6 axiom
        assert_eq!(j6, schema("uJ6").unwrap().pattern);
        let uj1 = schema("uj1").unwrap().instantiate(&sub(&[("A", "p")])).unwrap();
        assert_eq!(uj1, parse("[]p -> I p").unwrap());
        let i4 = schema("I4").unwrap().instantiate(&sub(&[("A", "_|_")])).unwrap();
        assert_eq!(i4, parse("I _|_ & <>~_|_ -> <>_|_").unwrap());
    }

    #[test]
    fn missing_binding_and_unknown_name() {
        assert!(matches!(
            schema("J1").unwrap().instantiate(&sub(&[("A", "p")])),
            Err(Error::MissingBinding { .. })
        ));
        assert!(schema("J9").is_err());
    }

    #[test]
    fn matching_recovers_bindings() {
        let j2p = schema("J2+").unwrap();
        let s = sub(&[("A", "p"), ("B", "[]q"), ("C", "r & s")]);
        let inst = j2p.instantiate(&s).unwrap();
        assert_eq!(j2p.match_instance(&inst), Some(s));
        assert_eq!(j2p.match_instance(&parse("p -> q").unwrap()), None);
        // repeated metavariables must agree
        assert_eq!(schema("J5").unwrap().match_instance(&parse("<>p |> q").unwrap()), None);
    }
}
