//! Parse formulas, show their encoding into the base connectives and print
//! them back in both glyph sets.

use ilkit::syntax::{print_with, AdequateSet, Glyphs};
use ilkit::parse;

fn main() {
    for text in ["[](p | <>p) -> I p", "p |> q & <>r", "~~p", "(p | q) |> p & q", "⊤ ▷ ¬p"] {
        match parse(text) {
            Ok(f) => {
                println!("{text}");
                println!("  ascii   {}", print_with(&f, Glyphs::Ascii));
                println!("  unicode {}", print_with(&f, Glyphs::Unicode));
                println!("  unary {}, size {}, ~A = {}", f.is_unary(), f.size(), f.tilde());
            }
            Err(e) => println!("{text}\n  {e}"),
        }
    }
    let a = parse("[](p | <>p) -> I p").unwrap();
    let phi = AdequateSet::closure([&a]);
    println!("adequate closure: {} formulas, {} I-arguments", phi.len(), phi.phi_i().len());
}
