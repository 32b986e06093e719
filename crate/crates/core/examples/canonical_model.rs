//! Build the canonical countermodel of one unprovable formula in each
//! construction family and print its audit.

use ilkit::calculus::logic;
use ilkit::decision::{canonical_countermodel, ConsistencyOracle};
use ilkit::parse;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = parse("[](p | <>p) -> I p")?;
    let oracle = ConsistencyOracle::bounded(3);
    for id in ["IL-(J1)", "IL-(J2+,J5)", "IL-(J4)", "IL-(J2,J5)", "IL-(J2,J4+)"] {
        let c = canonical_countermodel(logic(id)?, &a, &oracle)?;
        println!(
            "{id:12} {:28} {:3} worlds  root {:8} conditions {:?}  truth lemma failures {}  passed {}",
            c.construction.name(),
            c.model.frame.len(),
            c.model.frame.names()[c.root],
            c.audit.conditions,
            c.audit.truth_lemma_failures.len(),
            c.audit.passed()
        );
    }
    match canonical_countermodel(logic("IL-(J1,J5)")?, &a, &oracle) {
        Ok(_) => println!("unexpected model"),
        Err(e) => println!("IL-(J1,J5): {e}"),
    }
    Ok(())
}
