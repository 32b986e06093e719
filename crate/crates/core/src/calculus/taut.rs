use std::collections::HashMap;

use crate::Formula;

/// Decides whether `f` is a propositional tautology when variables and
/// `□`/`▷` subformulas are read as atoms.
///
/// Uses a signed tableau with non-branching rules first.
pub fn is_tautology(f: &Formula) -> bool {
    closes(vec![(false, f.clone())], &mut HashMap::new())
}

/// True iff every branch of the tableau for the signed formulas closes.
fn closes(mut todo: Vec<(bool, Formula)>, atoms: &mut HashMap<Formula, bool>) -> bool {
    let mut deferred: Vec<(Formula, Formula)> = Vec::new();
    let mut assigned: Vec<Formula> = Vec::new();
    let result = loop {
        if let Some((sign, f)) = todo.pop() {
            match (&f, sign) {
                (Formula::Bottom, true) => break true,
                (Formula::Bottom, false) => {}
                (Formula::Implies(a, b), false) => {
                    todo.push((true, (**a).clone()));
                    todo.push((false, (**b).clone()));
                }
                (Formula::Implies(a, b), true) => deferred.push(((**a).clone(), (**b).clone())),
                _ => match atoms.get(&f) {
                    Some(&v) if v != sign => break true,
                    Some(_) => {}
                    None => {
                        atoms.insert(f.clone(), sign);
                        assigned.push(f);
                    }
                },
            }
            continue;
        }
        // branch on a true implication whose parts are still open
        let pick = deferred.iter().position(|(a, b)| !decided(a, false, atoms) && !decided(b, true, atoms));
        let Some(i) = pick else {
            break deferred.iter().any(|(a, b)| refuted(a, false, atoms) && refuted(b, true, atoms));
        };
        let (a, b) = deferred.swap_remove(i);
        let mut rest: Vec<(bool, Formula)> = deferred
            .drain(..)
            .map(|(x, y)| (true, Formula::implies(x, y)))
            .collect();
        let mut left = rest.clone();
        left.push((false, a));
        rest.push((true, b));
        break closes(left, atoms) && closes(rest, atoms);
    };
    for a in assigned {
        atoms.remove(&a);
    }
    result
}

/// `f` already has the given truth value under the atom assignment.
fn decided(f: &Formula, sign: bool, atoms: &HashMap<Formula, bool>) -> bool {
    value(f, atoms) == Some(sign)
}

fn refuted(f: &Formula, sign: bool, atoms: &HashMap<Formula, bool>) -> bool {
    value(f, atoms) == Some(!sign)
}

/// Partial evaluation under the atom assignment.
fn value(f: &Formula, atoms: &HashMap<Formula, bool>) -> Option<bool> {
    match f {
        Formula::Bottom => Some(false),
        Formula::Implies(a, b) => match (value(a, atoms), value(b, atoms)) {
            (Some(false), _) | (_, Some(true)) => Some(true),
            (Some(true), Some(false)) => Some(false),
            _ => None,
        },
        _ => atoms.get(f).copied(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse;
    use proptest::prelude::*;

    fn t(s: &str) -> bool {
        is_tautology(&parse(s).unwrap())
    }

    #[test]
    fn classic_cases() {
        assert!(t("p -> p"));
        assert!(t("p | ~p"));
        assert!(t("(p -> q) -> (q -> r) -> p -> r"));
        assert!(t("((p -> q) -> p) -> p"));
        assert!(t("[]p & I q -> I q"));
        assert!(t("~~(p |> q) -> (p |> q)"));
        assert!(!t("p -> q"));
        assert!(!t("[]p -> p"));
        assert!(!t("p |> q -> q |> p"));
        assert!(t("~_|_"));
        assert!(!t("_|_"));
    }

    /// Truth-table oracle over the skeleton atoms.
    fn table(f: &Formula) -> bool {
        let mut atoms = Vec::new();
        fn collect(f: &Formula, out: &mut Vec<Formula>) {
            match f {
                Formula::Bottom => {}
                Formula::Implies(a, b) => {
                    collect(a, out);
                    collect(b, out);
                }
                _ => {
                    if !out.contains(f) {
                        out.push(f.clone())
                    }
                }
            }
        }
        collect(f, &mut atoms);
        fn eval(f: &Formula, atoms: &[Formula], code: u32) -> bool {
            match f {
                Formula::Bottom => false,
                Formula::Implies(a, b) => !eval(a, atoms, code) || eval(b, atoms, code),
                _ => code >> atoms.iter().position(|x| x == f).unwrap() & 1 == 1,
            }
        }
        (0..1u32 << atoms.len()).all(|c| eval(f, &atoms, c))
    }

    fn arb_prop() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            Just(Formula::bot()),
            Just(Formula::var("p")),
            Just(Formula::var("q")),
            Just(Formula::boxed(Formula::var("p"))),
        ];
        leaf.prop_recursive(5, 40, 2, |inner| {
            (inner.clone(), inner).prop_map(|(a, b)| Formula::implies(a, b))
        })
    }

    proptest! {
        #[test]
        fn agrees_with_truth_tables(f in arb_prop()) {
            prop_assert_eq!(is_tautology(&f), table(&f));
        }
    }
}
