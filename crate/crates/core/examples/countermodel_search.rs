//! Decide a few formulas in several logics: a checked proof, a countermodel
//! within three worlds, or unknown.

use ilkit::calculus::logic;
use ilkit::decision::{decide, verify_countermodel, Decision};
use ilkit::parse;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("IL-", "<>p |> p"),
        ("IL-(J5)", "<>p |> p"),
        ("IL-(J5)", "[](p -> q) -> p |> q"),
        ("IL-(J1)", "[](p | <>p) -> I p"),
        ("IL-(J1,J5)", "[](p | <>p) -> I p"),
        ("IL-(J2)", "p |> p"),
        ("IL", "[]p -> [][]p"),
    ];
    for (id, text) in cases {
        let l = logic(id)?;
        let f = parse(text)?;
        let verdict = match decide(l, &f, 3, &[])? {
            Decision::Provable { source, proof } => format!("provable via {} ({} lines)", source.origin, proof.steps.len()),
            Decision::Refutable(cm) => {
                assert!(verify_countermodel(l, &f, &cm)?);
                format!("refuted at {} in a {}-world {} model", cm.world_name(), cm.model.frame.len(), cm.model.frame.kind())
            }
            Decision::Unknown => "unknown within 3 worlds".to_string(),
        };
        println!("{id:12} {text:26} {verdict}");
    }
    Ok(())
}
