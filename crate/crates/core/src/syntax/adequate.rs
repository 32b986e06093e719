//! Adequate sets: finite formula sets closed under subformulas, `~`, and the
//! box-closure rule over their `I`-arguments.

use std::collections::BTreeSet;

use super::Formula;

/// A finite adequate set `Φ` together with `Φ_I = {C : I C ∈ Φ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdequateSet {
    formulas: Vec<Formula>,
    phi_i: Vec<Formula>,
}

/// The five boxed formulas required for each ordered pair `(C, E)` in `Φ_I`.
pub fn box_closure_formulas(c: &Formula, e: &Formula) -> [Formula; 5] {
    let c_or_dc = Formula::or(c.clone(), Formula::diamond(c.clone()));
    [
        Formula::boxed(c.clone()),
        Formula::boxed(c_or_dc.clone()),
        Formula::boxed(Formula::implies(e.clone(), Formula::diamond(c.clone()))),
        Formula::boxed(Formula::implies(e.clone(), c.clone())),
        Formula::boxed(Formula::implies(e.clone(), c_or_dc)),
    ]
}

fn i_arguments(set: &BTreeSet<Formula>) -> BTreeSet<Formula> {
    set.iter().filter_map(|f| f.as_unary().cloned()).collect()
}

impl AdequateSet {
    /// The least set containing `seed ∪ {I⊥}` closed under the three rules.
    pub fn closure<'a, I: IntoIterator<Item = &'a Formula>>(seed: I) -> AdequateSet {
        let mut set = BTreeSet::new();
        Formula::unary(Formula::bot()).collect_subformulas(&mut set);
        for f in seed {
            f.collect_subformulas(&mut set);
        }
        loop {
            let before = set.len();
            let tildes: Vec<Formula> = set.iter().map(Formula::tilde).collect();
            for t in tildes {
                t.collect_subformulas(&mut set);
            }
            let phi_i = i_arguments(&set);
            for c in &phi_i {
                for e in &phi_i {
                    for f in box_closure_formulas(c, e) {
                        f.collect_subformulas(&mut set);
                    }
                }
            }
            if set.len() == before {
                break;
            }
        }
        let phi_i = i_arguments(&set).into_iter().collect();
        AdequateSet {
            formulas: set.into_iter().collect(),
            phi_i,
        }
    }

    /// Formulas in the fixed (derived `Ord`) order.
    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn phi_i(&self) -> &[Formula] {
        &self.phi_i
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn index_of(&self, f: &Formula) -> Option<usize> {
        self.formulas.binary_search(f).ok()
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.index_of(f).is_some()
    }

    /// Reports the first violated adequacy condition, if any.
    pub fn check(&self) -> Result<(), String> {
        for f in &self.formulas {
            for s in f.subformulas() {
                if !self.contains(&s) {
                    return Err(format!("subformula {s} of {f} missing"));
                }
            }
            if !self.contains(&f.tilde()) {
                return Err(format!("~{f} missing"));
            }
        }
        if !self.phi_i.contains(&Formula::bot()) {
            return Err("_|_ not in Phi_I".into());
        }
        for c in &self.phi_i {
            for e in &self.phi_i {
                for f in box_closure_formulas(c, e) {
                    if !self.contains(&f) {
                        return Err(format!("{f} missing for C = {c}, E = {e}"));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    #[test]
    fn closure_of_empty_seed() {
        let phi = AdequateSet::closure([]);
        assert!(phi.check().is_ok());
        assert_eq!(phi.phi_i(), &[Formula::bot()]);
        assert!(phi.contains(&parse("I _|_").unwrap()));
        assert!(phi.contains(&Formula::bot()));
        for f in box_closure_formulas(&Formula::bot(), &Formula::bot()) {
            assert!(phi.contains(&f));
        }
    }

    #[test]
    fn closure_of_unary_seed() {
        let phi = AdequateSet::closure([&parse("I p").unwrap()]);
        assert!(phi.check().is_ok());
        assert!(phi.phi_i().contains(&Formula::var("p")));
        for s in ["[]p", "[](p | <>p)", "[](p -> <>_|_)", "[](_|_ -> <>p)", "[](_|_ -> p | <>p)"] {
            assert!(phi.contains(&parse(s).unwrap()), "{s}");
        }
    }
}
