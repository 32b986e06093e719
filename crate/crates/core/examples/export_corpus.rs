//! Writes the shipped proof scripts and the remark model into `corpus/`.
//!
//! Run with `cargo run --example export_corpus`; the golden test compares
//! the files on disk with freshly generated ones.

use std::fs;
use std::path::Path;

use ilkit::calculus::proof_corpus;
use ilkit::semantics::{model_from_json, model_to_json};

const REMARK: &str = r#"{"kind":"veltman","worlds":["w","x","y"],
    "R":[["w","x"],["w","y"],["x","y"]],
    "S":{"w":[["x","x"],["y","y"]],"x":[["y","y"]]},
    "val":{"p":["y"]}}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    fs::create_dir_all(&dir)?;
    for e in proof_corpus() {
        let path = dir.join(format!("{}.prf", e.name));
        fs::write(&path, e.proof.to_script(Some(e.logic), Some(&e.goal)))?;
        println!("{}", path.display());
    }
    let remark = model_from_json(REMARK)?;
    fs::write(dir.join("remark.json"), model_to_json(&remark) + "\n")?;
    println!("{}", dir.join("remark.json").display());
    Ok(())
}
