use super::proof::{f, Proof, ProofBuilder};
use crate::Formula;

/// A checked derivation shipped with the crate.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: &'static str,
    /// Registry id of the logic the script is written for.
    pub logic: &'static str,
    pub goal: Formula,
    pub proof: Proof,
    /// What the script establishes, in words.
    pub claim: &'static str,
}

/// `□(a → b) → (b ▷ c → a ▷ c)` over the base system.
fn box_antitone(b: &mut ProofBuilder, a: &str, bb: &str, c: &str) -> usize {
    let neg = format!("~(({a}) & ~({bb}))");
    let l1 = b.box_mono(&format!("(({a}) -> ({bb})) -> {neg}"));
    let l2 = b.axiom("J6", &[("A", &neg)]);
    let t3 = b.taut(&format!("(({a}) & ~({bb})) -> ~{neg}"));
    let l3 = b.r2(t3, "_|_");
    let t4 = b.taut(&format!("_|_ -> ({c})"));
    let l4 = b.r1(t4, &format!("({a}) & ~({bb})"));
    let t5 = b.taut(&format!("({a}) & ({bb}) -> ({bb})"));
    let l5 = b.r2(t5, c);
    let l6 = b.axiom(
        "J3",
        &[("A", &format!("({a}) & ({bb})")), ("B", &format!("({a}) & ~({bb})")), ("C", c)],
    );
    let t7 = b.taut(&format!("({a}) -> ((({a}) & ({bb})) | (({a}) & ~({bb})))"));
    let l7 = b.r2(t7, c);
    b.chain(
        &[l1, l2, l3, l4, l5, l6, l7],
        &format!("[](({a}) -> ({bb})) -> (({bb}) |> ({c}) -> ({a}) |> ({c}))"),
    )
}

/// `□(p → q) → (p ∧ ¬q) ▷ q` over the base system.
fn box_to_rhd(b: &mut ProofBuilder) -> usize {
    let l1 = b.box_mono("(p -> q) -> ~(p & ~q)");
    let l2 = b.axiom("J6", &[("A", "~(p & ~q)")]);
    let t3 = b.taut("(p & ~q) -> ~~(p & ~q)");
    let l3 = b.r2(t3, "_|_");
    let t4 = b.taut("_|_ -> q");
    let l4 = b.r1(t4, "p & ~q");
    b.chain(&[l1, l2, l3, l4], "[](p -> q) -> (p & ~q) |> q")
}

/// `I □⊥` from uJ1 and I3 (by way of uJ15) and G3.
fn i1_from_uj1_i3(b: &mut ProofBuilder) -> usize {
    let g3 = b.axiom("G3", &[("A", "_|_")]);
    let x = b.chain(&[g3], "[]_|_ | <>[]_|_");
    let bx = b.nec(x);
    let u = b.axiom("uJ1", &[("A", "[]_|_ | <>[]_|_")]);
    let i3 = b.axiom("I3", &[("A", "[]_|_")]);
    b.chain(&[bx, u, i3], "I []_|_")
}

/// `I p ∧ ◊⊤ → ◊p` from I2 and uJ6.
fn i4_from_i2(b: &mut ProofBuilder) -> usize {
    let l1 = b.axiom("I2", &[("A", "p"), ("B", "_|_")]);
    let l2 = b.axiom("uJ6", &[]);
    let l3 = b.box_mono("_|_ -> ~~_|_");
    b.chain(&[l1, l2, l3], "I p & <>~_|_ -> <>p")
}

/// `□⊥ ↔ I ⊥` in de Rijke's system.
fn uj6_in_il(b: &mut ProofBuilder) -> usize {
    let l1 = b.axiom("I4", &[("A", "_|_")]);
    let t = b.taut("~_|_");
    let l2 = b.nec(t);
    let l3 = b.box_mono("~~_|_ -> _|_");
    let l4 = b.box_mono("_|_ -> ([]_|_ -> _|_)");
    let l5 = b.axiom("I2", &[("A", "[]_|_"), ("B", "_|_")]);
    let l6 = b.axiom("I1", &[]);
    b.chain(&[l1, l2, l3, l4, l5, l6], "[]_|_ <-> I _|_")
}

fn entry(name: &'static str, logic: &'static str, goal: &str, claim: &'static str, b: ProofBuilder) -> CorpusEntry {
    CorpusEntry { name, logic, goal: f(goal), proof: b.finish(), claim }
}

/// Every shipped derivation, in a fixed order.
pub fn proof_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();

    let mut b = ProofBuilder::new();
    box_antitone(&mut b, "p", "q", "r");
    out.push(entry(
        "fact-p1-1",
        "IL-",
        "[](p -> q) -> (q |> r -> p |> r)",
        "box-antitonicity of the left argument",
        b,
    ));

    let mut b = ProofBuilder::new();
    let l1 = b.axiom("J2+", &[("A", "p"), ("B", "q"), ("C", "r")]);
    let t = b.taut("q -> q | r");
    let l2 = b.r1(t, "p");
    b.chain(&[l1, l2], "(p |> q) & (q |> r) -> p |> r");
    out.push(entry("fact-p1-2", "IL-(J2+)", "(p |> q) & (q |> r) -> p |> r", "J2 from J2+", b));

    let mut b = ProofBuilder::new();
    let l1 = box_to_rhd(&mut b);
    let t = b.taut("p -> ((p & ~q) | q)");
    let l2 = b.r1(t, "r");
    let l3 = b.axiom("J2+", &[("A", "r"), ("B", "p & ~q"), ("C", "q")]);
    b.chain(&[l1, l2, l3], "[](p -> q) -> (r |> p -> r |> q)");
    out.push(entry("fact-p1-3", "IL-(J2+)", "[](p -> q) -> (r |> p -> r |> q)", "J4+ from J2+", b));

    let mut b = ProofBuilder::new();
    let h = b.hyp("p -> q");
    b.r1(h, "~_|_");
    out.push(entry("prop-sound-1", "IL-", "I p -> I q", "R1 yields the unary rule", b));

    let mut b = ProofBuilder::new();
    b.axiom("J6", &[("A", "_|_")]);
    out.push(entry("prop-sound-2", "IL-", "[]_|_ <-> I _|_", "uJ6 over the base system", b));

    let mut b = ProofBuilder::new();
    let l1 = b.axiom("J1", &[("A", "~_|_"), ("B", "p")]);
    let l2 = b.box_mono("p -> (~_|_ -> p)");
    b.chain(&[l2, l1], "[]p -> I p");
    out.push(entry("prop-sound-3", "IL-(J1)", "[]p -> I p", "uJ1 from J1", b));

    let mut b = ProofBuilder::new();
    let l1 = b.axiom("J4", &[("A", "~_|_"), ("B", "p")]);
    b.chain(&[l1], "I p & <>~_|_ -> <>p");
    out.push(entry("prop-sound-4", "IL-(J4)", "I p & <>~_|_ -> <>p", "I4 from J4", b));

    let mut b = ProofBuilder::new();
    b.axiom("J4+", &[("A", "p"), ("B", "q"), ("C", "~_|_")]);
    out.push(entry("prop-sound-5", "IL-(J4+)", "[](p -> q) -> (I p -> I q)", "I2 from J4+", b));

    let mut b = ProofBuilder::new();
    let l1 = b.box_mono("(p | <>p) -> ([]~p -> p)");
    let l2 = b.axiom("J1", &[("A", "[]~p"), ("B", "p")]);
    let l3 = b.axiom("J5", &[("A", "p")]);
    let l4 = b.axiom("J3", &[("A", "<>p"), ("B", "[]~p"), ("C", "p")]);
    let t = b.taut("~_|_ -> (<>p | []~p)");
    let l5 = b.r2(t, "p");
    b.chain(&[l1, l2, l3, l4, l5], "[](p | <>p) -> I p");
    out.push(entry("prop-sound-6", "IL-(J1,J5)", "[](p | <>p) -> I p", "uJ15 from J1 and J5", b));

    let mut b = ProofBuilder::new();
    let l1 = box_antitone(&mut b, "p", "<>q", "q");
    let l2 = b.axiom("J5", &[("A", "q")]);
    let l3 = b.axiom("J2", &[("A", "~_|_"), ("B", "p"), ("C", "q")]);
    b.chain(&[l1, l2, l3], "[](p -> <>q) -> (I p -> I q)");
    out.push(entry(
        "prop-sound-7",
        "IL-(J2,J5)",
        "[](p -> <>q) -> (I p -> I q)",
        "uJ25 from J2 and J5",
        b,
    ));

    let mut b = ProofBuilder::new();
    let t = b.taut("(p | <>p) -> (<>p | p)");
    let l1 = b.r1(t, "~_|_");
    let l2 = b.axiom("J2+", &[("A", "~_|_"), ("B", "<>p"), ("C", "p")]);
    let l3 = b.axiom("J5", &[("A", "p")]);
    b.chain(&[l1, l2, l3], "I (p | <>p) -> I p");
    out.push(entry("prop-sound-8", "IL-(J2+,J5)", "I (p | <>p) -> I p", "I3 from J2+ and J5", b));

    let mut b = ProofBuilder::new();
    let l1 = b.axiom("uJ1", &[("A", "p | <>p")]);
    let l2 = b.axiom("I3", &[("A", "p")]);
    b.chain(&[l1, l2], "[](p | <>p) -> I p");
    out.push(entry("prop-relation-1", "il-(uJ1,I3)", "[](p | <>p) -> I p", "uJ15 from uJ1 and I3", b));

    let mut b = ProofBuilder::new();
    let l1 = b.box_mono("p -> p | <>p");
    let l2 = b.axiom("uJ15", &[("A", "p")]);
    b.chain(&[l1, l2], "[]p -> I p");
    out.push(entry("prop-relation-2", "il-(uJ15)", "[]p -> I p", "uJ1 from uJ15", b));

    let mut b = ProofBuilder::new();
    let g3 = b.axiom("G3", &[("A", "_|_")]);
    let x = b.chain(&[g3], "[]_|_ | <>[]_|_");
    let bx = b.nec(x);
    let u = b.axiom("uJ15", &[("A", "[]_|_")]);
    b.mp(bx, u);
    out.push(entry("prop-relation-3", "il-(uJ15)", "I []_|_", "I1 from uJ15", b));

    let mut b = ProofBuilder::new();
    let l1 = b.box_mono("(p | <>p) -> ([]~p -> p)");
    let l2 = b.axiom("I2", &[("A", "[]~p"), ("B", "p")]);
    let l3 = b.box_mono("_|_ -> ~p");
    let l4 = b.ur(l3);
    let l5 = b.axiom("I1", &[]);
    b.chain(&[l1, l2, l4, l5], "[](p | <>p) -> I p");
    out.push(entry("prop-relation-4", "il-(I1,I2)", "[](p | <>p) -> I p", "uJ15 from I1 and I2", b));

    let mut b = ProofBuilder::new();
    i4_from_i2(&mut b);
    out.push(entry("prop-relation-5", "il-(I2)", "I p & <>~_|_ -> <>p", "I4 from I2", b));

    let mut b = ProofBuilder::new();
    uj6_in_il(&mut b);
    out.push(entry("prop-relation-6", "il", "[]_|_ <-> I _|_", "uJ6 in de Rijke's system", b));

    let mut b = ProofBuilder::new();
    let h = b.hyp("p -> q");
    let n = b.nec(h);
    let i2 = b.axiom("I2", &[("A", "p"), ("B", "q")]);
    b.mp(n, i2);
    out.push(entry("prop-relation-7", "il", "I p -> I q", "de Rijke's system admits the unary rule", b));

    let mut b = ProofBuilder::new();
    let l1 = i1_from_uj1_i3(&mut b);
    let l2 = i4_from_i2(&mut b);
    b.chain(&[l1, l2], "I []_|_ & (I p & <>~_|_ -> <>p)");
    out.push(entry(
        "cor-il-equiv-forward",
        "il-(uJ1,I2,I3)",
        "I []_|_ & (I p & <>~_|_ -> <>p)",
        "the axioms I1 and I4 hold in il-(uJ1,I2,I3)",
        b,
    ));

    let mut b = ProofBuilder::new();
    let l1 = uj6_in_il(&mut b);
    let l2 = b.box_mono("p -> ([]_|_ -> p)");
    let l3 = b.axiom("I2", &[("A", "[]_|_"), ("B", "p")]);
    let l4 = b.axiom("I1", &[]);
    b.chain(&[l1, l2, l3, l4], "([]_|_ <-> I _|_) & ([]p -> I p)");
    out.push(entry(
        "cor-il-equiv-backward",
        "il",
        "([]_|_ <-> I _|_) & ([]p -> I p)",
        "the axioms uJ6 and uJ1 hold in de Rijke's system",
        b,
    ));

    out
}

/// Looks a corpus entry up by name.
pub fn corpus_entry(name: &str) -> Option<CorpusEntry> {
    proof_corpus().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{check_proof, logic};

    #[test]
    fn every_entry_is_accepted() {
        let corpus = proof_corpus();
        assert_eq!(corpus.len(), 20);
        for e in &corpus {
            let v = check_proof(logic(e.logic).unwrap(), &e.proof, &e.goal);
            assert!(v.is_accepted(), "{}: {v:?}", e.name);
        }
    }
}
