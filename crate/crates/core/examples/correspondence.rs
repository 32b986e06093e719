//! Compare each binary logic with its unary counterpart on a handful of
//! unary formulas.

use ilkit::calculus::{logic_counterpart, registry, Language};
use ilkit::decision::correspond;
use ilkit::parse;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let formulas = ["[](p | <>p) -> I p", "[]p -> I p", "I p -> I (p & []~p)", "[]_|_ <-> I _|_"];
    for l in registry().iter().filter(|l| l.language == Language::Binary) {
        let verdicts: Vec<String> = formulas
            .iter()
            .map(|t| {
                let r = correspond(l, &parse(t).unwrap(), 2, &[]).unwrap();
                serde_json::to_value(r.verdict).unwrap().as_str().unwrap().to_string()
            })
            .collect();
        println!("{:16} {:18} {}", l.id, logic_counterpart(l)?.id, verdicts.join("  "));
    }
    Ok(())
}
