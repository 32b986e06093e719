//! Check the shipped derivations, then one script in a logic that lacks
//! the axiom it uses.

use ilkit::calculus::{check_proof, logic, parse_script, proof_corpus};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for e in proof_corpus() {
        let l = logic(e.logic)?;
        let v = check_proof(l, &e.proof, &e.goal);
        println!("{:24} {:14} {:3} lines  {:?}", e.name, l.id, e.proof.steps.len(), v);
    }
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/prop-relation-2.prf"))?;
    let s = parse_script(&text)?;
    let goal = s.goal.expect("script has a goal header");
    for id in ["il-(uJ15)", "il-"] {
        println!("{id}: {:?}", check_proof(logic(id)?, &s.proof, &goal));
    }
    Ok(())
}
