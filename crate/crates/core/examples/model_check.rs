//! Evaluate formulas in the shipped remark model and test frame conditions.

use ilkit::parse;
use ilkit::semantics::{check_condition, model_from_json, FrameCondition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/remark.json"))?;
    let m = model_from_json(&text)?;
    for f in ["[](p | <>p)", "I p", "[](p | <>p) -> I p", "<>p |> p", "[]_|_"] {
        let set = m.truth_set(&parse(f)?)?;
        let names: Vec<&str> = set.iter().map(|i| m.frame.names()[i].as_str()).collect();
        println!("{f:24} true at {names:?}");
    }
    for c in [FrameCondition::FcJ1, FrameCondition::FcJ2Plus, FrameCondition::FcJ4Plus, FrameCondition::FcJ5] {
        println!("{c}: {}", check_condition(&m.frame, c)?);
    }
    Ok(())
}
