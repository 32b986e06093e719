//! The formula AST over `⊥`, variables, `→`, `□` and `▷`.
//!
//! Every derived connective is expanded into the base grammar by the
//! constructors below, so syntactic identity of formulas is plain structural
//! equality. The fixed encoding is:
//!
//! | connective | encoding        |
//! |------------|-----------------|
//! | `⊤`        | `⊥ → ⊥`         |
//! | `¬A`       | `A → ⊥`         |
//! | `A ∧ B`    | `¬(A → ¬B)`     |
//! | `A ∨ B`    | `¬A → B`        |
//! | `A ↔ B`    | `(A → B) ∧ (B → A)` |
//! | `◊A`       | `¬□¬A`          |
//! | `I A`      | `⊤ ▷ A`         |

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// A formula of the language with `□` and the binary `▷`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Bottom,
    Var(Arc<str>),
    Implies(Arc<Formula>, Arc<Formula>),
    Box(Arc<Formula>),
    Rhd(Arc<Formula>, Arc<Formula>),
}

use Formula::*;

impl Formula {
    pub fn bot() -> Formula {
        Bottom
    }

    pub fn var(name: &str) -> Formula {
        Var(Arc::from(name))
    }

    pub fn top() -> Formula {
        Formula::implies(Bottom, Bottom)
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Implies(Arc::new(a), Arc::new(b))
    }

    pub fn not(a: Formula) -> Formula {
        Formula::implies(a, Bottom)
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::not(Formula::implies(a, Formula::not(b)))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::implies(Formula::not(a), b)
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(
            Formula::implies(a.clone(), b.clone()),
            Formula::implies(b, a),
        )
    }

    pub fn boxed(a: Formula) -> Formula {
        Box(Arc::new(a))
    }

    pub fn diamond(a: Formula) -> Formula {
        Formula::not(Formula::boxed(Formula::not(a)))
    }

    pub fn rhd(a: Formula, b: Formula) -> Formula {
        Rhd(Arc::new(a), Arc::new(b))
    }

    /// `I A`, stored as `⊤ ▷ A`.
    pub fn unary(a: Formula) -> Formula {
        Formula::rhd(Formula::top(), a)
    }

    /// Conjunction of a list, `⊤` when empty.
    pub fn conj<I: IntoIterator<Item = Formula>>(items: I) -> Formula {
        let mut it = items.into_iter();
        match it.next() {
            None => Formula::top(),
            Some(first) => it.fold(first, Formula::and),
        }
    }

    pub fn is_top(&self) -> bool {
        matches!(self, Implies(a, b) if **a == Bottom && **b == Bottom)
    }

    /// `Some(B)` when `self` is `¬B`, i.e. `B → ⊥`.
    pub fn as_negation(&self) -> Option<&Formula> {
        match self {
            Implies(a, b) if **b == Bottom => Some(a),
            _ => None,
        }
    }

    /// `Some((A, B))` when `self` is `A ∧ B` in the fixed encoding.
    pub fn as_conjunction(&self) -> Option<(&Formula, &Formula)> {
        let inner = self.as_negation()?;
        match inner {
            Implies(a, nb) => nb.as_negation().map(|b| (&**a, b)),
            _ => None,
        }
    }

    /// `Some(A)` when `self` is `◊A`.
    pub fn as_diamond(&self) -> Option<&Formula> {
        match self.as_negation()? {
            Box(inner) => inner.as_negation(),
            _ => None,
        }
    }

    /// `Some(A)` when `self` is `I A`.
    pub fn as_unary(&self) -> Option<&Formula> {
        match self {
            Rhd(l, r) if l.is_top() => Some(r),
            _ => None,
        }
    }

    /// The `~` operator: `B` if `self` is `¬B`, otherwise `¬self`.
    pub fn tilde(&self) -> Formula {
        match self.as_negation() {
            Some(b) => b.clone(),
            None => Formula::not(self.clone()),
        }
    }

    /// All subformulas, including `self`.
    pub fn subformulas(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        self.collect_subformulas(&mut out);
        out
    }

    pub(crate) fn collect_subformulas(&self, out: &mut BTreeSet<Formula>) {
        if !out.insert(self.clone()) {
            return;
        }
        match self {
            Bottom | Var(_) => {}
            Implies(a, b) | Rhd(a, b) => {
                a.collect_subformulas(out);
                b.collect_subformulas(out);
            }
            Box(a) => a.collect_subformulas(out),
        }
    }

    /// Variables occurring in the formula.
    pub fn vars(&self) -> BTreeSet<Arc<str>> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Arc<str>>) {
        match self {
            Bottom => {}
            Var(v) => {
                out.insert(v.clone());
            }
            Implies(a, b) | Rhd(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Box(a) => a.collect_vars(out),
        }
    }

    pub fn contains_var(&self, p: &str) -> bool {
        match self {
            Bottom => false,
            Var(v) => &**v == p,
            Implies(a, b) | Rhd(a, b) => a.contains_var(p) || b.contains_var(p),
            Box(a) => a.contains_var(p),
        }
    }

    /// Replaces every occurrence of `Var(p)` by `g`.
    pub fn substitute(&self, p: &str, g: &Formula) -> Formula {
        match self {
            Bottom => Bottom,
            Var(v) if &**v == p => g.clone(),
            Var(_) => self.clone(),
            Implies(a, b) => Formula::implies(a.substitute(p, g), b.substitute(p, g)),
            Rhd(a, b) => Formula::rhd(a.substitute(p, g), b.substitute(p, g)),
            Box(a) => Formula::boxed(a.substitute(p, g)),
        }
    }

    /// Simultaneous substitution of several variables.
    pub fn substitute_all(&self, map: &dyn Fn(&str) -> Option<Formula>) -> Formula {
        match self {
            Bottom => Bottom,
            Var(v) => map(v).unwrap_or_else(|| self.clone()),
            Implies(a, b) => Formula::implies(a.substitute_all(map), b.substitute_all(map)),
            Rhd(a, b) => Formula::rhd(a.substitute_all(map), b.substitute_all(map)),
            Box(a) => Formula::boxed(a.substitute_all(map)),
        }
    }

    /// True iff every occurrence of `p` lies under some `□` or `▷`.
    pub fn is_modalized(&self, p: &str) -> bool {
        match self {
            Bottom => true,
            Var(v) => &**v != p,
            Implies(a, b) => a.is_modalized(p) && b.is_modalized(p),
            Box(_) | Rhd(..) => true,
        }
    }

    /// True iff every `▷` has `⊤` on its left.
    pub fn is_unary(&self) -> bool {
        match self {
            Bottom | Var(_) => true,
            Implies(a, b) => a.is_unary() && b.is_unary(),
            Box(a) => a.is_unary(),
            Rhd(a, b) => a.is_top() && b.is_unary(),
        }
    }

    /// Number of nodes in the encoded tree.
    pub fn size(&self) -> usize {
        match self {
            Bottom | Var(_) => 1,
            Implies(a, b) | Rhd(a, b) => 1 + a.size() + b.size(),
            Box(a) => 1 + a.size(),
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::syntax::print(self))
    }
}

/// Serialized as its printed form.
impl serde::Serialize for Formula {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::syntax::print(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::var("p")
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(Formula::not(p()).tilde(), p());
        assert_eq!(p().tilde(), Formula::not(p()));
        let nnp = Formula::not(Formula::not(p()));
        assert_eq!(nnp.tilde(), Formula::not(p()));
    }

    #[test]
    fn subformula_examples() {
        let bp = Formula::boxed(p());
        assert_eq!(bp.subformulas(), [bp.clone(), p()].into_iter().collect());
        let ip = Formula::unary(p());
        let expected: BTreeSet<_> = [ip.clone(), Formula::top(), Formula::bot(), p()]
            .into_iter()
            .collect();
        assert_eq!(ip.subformulas(), expected);
        assert_eq!(p().subformulas().len(), 1);
    }

    #[test]
    fn substitution_examples() {
        let bp = Formula::boxed(p());
        assert_eq!(bp.substitute("p", &Formula::bot()), Formula::boxed(Formula::bot()));
        let inp = Formula::unary(Formula::not(p()));
        assert_eq!(
            inp.substitute("p", &Formula::var("q")),
            Formula::unary(Formula::not(Formula::var("q")))
        );
        let q = Formula::var("q");
        assert_eq!(q.substitute("p", &Formula::bot()), q);
    }

    #[test]
    fn modalized_examples() {
        assert!(Formula::boxed(p()).is_modalized("p"));
        assert!(!Formula::implies(p(), Formula::boxed(p())).is_modalized("p"));
        assert!(Formula::unary(Formula::not(p())).is_modalized("p"));
    }

    #[test]
    fn unary_examples() {
        assert!(Formula::unary(p()).is_unary());
        assert!(!Formula::rhd(p(), Formula::var("q")).is_unary());
        assert!(Formula::boxed(Formula::unary(Formula::bot())).is_unary());
    }

    #[test]
    fn derived_shapes_are_recognised() {
        let q = Formula::var("q");
        assert_eq!(Formula::and(p(), q.clone()).as_conjunction(), Some((&p(), &q)));
        assert_eq!(Formula::diamond(p()).as_diamond(), Some(&p()));
        assert_eq!(Formula::unary(q.clone()).as_unary(), Some(&q));
        assert!(Formula::not(Formula::bot()).is_top());
    }
}
