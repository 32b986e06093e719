//! Compute fixed points of modalized unary formulas, verify them, and run
//! the candidate search where no fixed point is expected.

use ilkit::calculus::logic;
use ilkit::fixedpoint::{fixed_point, non_fpp_search, verify_fixed_point};
use ilkit::parse;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l = logic("IL-(J2+,J5)")?;
    for text in ["I p", "I ~p", "[]~p", "q & I p", "I p & []~p", "I []p"] {
        let a = parse(text)?;
        let r = fixed_point(&a, "p")?;
        let v = verify_fixed_point(l, &a, "p", &r.output, 3, None)?;
        println!("{text:14} F = {:40} {}", r.output.to_string(), v.name());
    }
    let strong = logic("IL-(J1,J4+,J5)")?;
    let rep = non_fpp_search(strong, &parse("I ~p")?, "p", 2, 3)?;
    println!(
        "{}: {} candidates for I ~p up to depth 2, {} not refuted",
        rep.logic,
        rep.outcomes.len(),
        rep.survivors().len()
    );
    Ok(())
}
