use super::Formula;

/// Output glyph set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Glyphs {
    #[default]
    Ascii,
    Unicode,
}

impl Glyphs {
    /// Reads `ILKIT_GLYPHS` (`unicode` or `ascii`).
    pub fn from_env() -> Glyphs {
        match std::env::var("ILKIT_GLYPHS") {
            Ok(v) if v.eq_ignore_ascii_case("unicode") => Glyphs::Unicode,
            _ => Glyphs::Ascii,
        }
    }

    fn table(self) -> [&'static str; 10] {
        match self {
            Glyphs::Ascii => ["_|_", "~", " & ", " -> ", " <-> ", " |> ", "[]", "<>", "I ", "~_|_"],
            Glyphs::Unicode => ["⊥", "¬", " ∧ ", " → ", " ↔ ", " ▷ ", "□", "◊", "I ", "⊤"],
        }
    }
}

const IFF: u8 = 0;
const IMP: u8 = 1;
const RHD: u8 = 2;
const OR: u8 = 3;
const AND: u8 = 4;
const PREFIX: u8 = 5;
const ATOM: u8 = 6;

/// Prints with ASCII glyphs; the output always reparses to the same formula.
pub fn print(f: &Formula) -> String {
    print_with(f, Glyphs::Ascii)
}

pub fn print_with(f: &Formula, glyphs: Glyphs) -> String {
    let mut out = String::new();
    write(f, 0, glyphs, &mut out);
    out
}

fn as_iff(f: &Formula) -> Option<(&Formula, &Formula)> {
    let (x, y) = f.as_conjunction()?;
    match (x, y) {
        (Formula::Implies(a, b), Formula::Implies(c, d)) if a == d && b == c => Some((a, b)),
        _ => None,
    }
}

fn write(f: &Formula, ctx: u8, g: Glyphs, out: &mut String) {
    let t = g.table();
    let (level, body): (u8, Box<dyn FnOnce(&mut String) + '_>) = if f.is_top() {
        (ATOM, Box::new(move |o: &mut String| o.push_str(t[9])))
    } else if let Some((a, b)) = as_iff(f) {
        (
            IFF,
            Box::new(move |o: &mut String| {
                write(a, IMP, g, o);
                o.push_str(t[4]);
                write(b, IMP, g, o);
            }),
        )
    } else if let Some((a, b)) = f.as_conjunction() {
        (
            AND,
            Box::new(move |o: &mut String| {
                write(a, AND, g, o);
                o.push_str(t[2]);
                write(b, PREFIX, g, o);
            }),
        )
    } else if let Some(a) = f.as_diamond() {
        (
            PREFIX,
            Box::new(move |o: &mut String| {
                o.push_str(t[7]);
                write(a, PREFIX, g, o);
            }),
        )
    } else if let Some(a) = f.as_negation() {
        (
            PREFIX,
            Box::new(move |o: &mut String| {
                o.push_str(t[1]);
                write(a, PREFIX, g, o);
            }),
        )
    } else if let Some(a) = f.as_unary() {
        (
            PREFIX,
            Box::new(move |o: &mut String| {
                o.push_str(t[8]);
                write(a, PREFIX, g, o);
            }),
        )
    } else {
        match f {
            Formula::Bottom => (ATOM, Box::new(move |o: &mut String| o.push_str(t[0]))),
            Formula::Var(v) => (ATOM, Box::new(move |o: &mut String| o.push_str(v))),
            Formula::Implies(a, b) => (
                IMP,
                Box::new(move |o: &mut String| {
                    write(a, RHD, g, o);
                    o.push_str(t[3]);
                    write(b, IMP, g, o);
                }),
            ),
            Formula::Box(a) => (
                PREFIX,
                Box::new(move |o: &mut String| {
                    o.push_str(t[6]);
                    write(a, PREFIX, g, o);
                }),
            ),
            Formula::Rhd(a, b) => (
                RHD,
                Box::new(move |o: &mut String| {
                    write(a, OR, g, o);
                    o.push_str(t[5]);
                    write(b, OR, g, o);
                }),
            ),
        }
    };
    if level < ctx {
        out.push('(');
        body(out);
        out.push(')');
    } else {
        body(out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    #[test]
    fn printing_examples() {
        assert_eq!(print(&Formula::boxed(Formula::bot())), "[]_|_");
        assert_eq!(print(&Formula::unary(Formula::bot())), "I _|_");
        let f = parse("p -> q -> r").unwrap();
        assert_eq!(print(&f), "p -> q -> r");
        let g = parse("(p -> q) -> r").unwrap();
        assert_eq!(print(&g), "(p -> q) -> r");
    }

    #[test]
    fn sugar() {
        assert_eq!(print(&parse("<>p & ~q").unwrap()), "<>p & ~q");
        assert_eq!(print(&parse("[]p <-> (~p |> _|_)").unwrap()), "[]p <-> ~p |> _|_");
        assert_eq!(print(&parse("(p |> q) -> r").unwrap()), "p |> q -> r");
        assert_eq!(print(&parse("p & (q & r)").unwrap()), "p & (q & r)");
        assert_eq!(
            print_with(&parse("I []_|_ -> <>~_|_").unwrap(), Glyphs::Unicode),
            "I □⊥ → ◊⊤"
        );
    }
}
