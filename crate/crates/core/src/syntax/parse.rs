//! Recursive-descent parser for the ASCII/Unicode formula syntax.
//!
//! Precedence, loosest first: `<->`, `->` (right-assoc), `|>`
//! (non-associative), `|`, `&` (both left-assoc), then the prefix operators
//! `~ [] <> I`. `∧` binds tighter than `∨`.

use super::Formula;
use crate::Error;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Bot,
    Top,
    Ident(String),
    Not,
    And,
    Or,
    Imp,
    Iff,
    Rhd,
    Box,
    Dia,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, Error> {
    const SYMBOLS: &[(&str, Tok)] = &[
        ("<->", Tok::Iff),
        ("_|_", Tok::Bot),
        ("->", Tok::Imp),
        ("|>", Tok::Rhd),
        ("[]", Tok::Box),
        ("<>", Tok::Dia),
        ("~", Tok::Not),
        ("&", Tok::And),
        ("|", Tok::Or),
        ("(", Tok::LParen),
        (")", Tok::RParen),
        ("⊥", Tok::Bot),
        ("⊤", Tok::Top),
        ("¬", Tok::Not),
        ("∧", Tok::And),
        ("∨", Tok::Or),
        ("→", Tok::Imp),
        ("↔", Tok::Iff),
        ("▷", Tok::Rhd),
        ("□", Tok::Box),
        ("◊", Tok::Dia),
        ("◇", Tok::Dia),
    ];
    let mut out = Vec::new();
    let mut i = 0;
    'outer: while i < text.len() {
        let rest = &text[i..];
        let c = rest.chars().next().unwrap();
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        for (sym, tok) in SYMBOLS {
            if rest.starts_with(sym) {
                out.push((i, tok.clone()));
                i += sym.len();
                continue 'outer;
            }
        }
        if c.is_ascii_alphabetic() {
            let len = rest
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_' || ch == '\''))
                .unwrap_or(rest.len());
            out.push((i, Tok::Ident(rest[..len].to_string())));
            i += len;
            continue;
        }
        return Err(Error::Parse {
            position: i,
            message: format!("unexpected character {c:?}"),
        });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, Error> {
        Err(Error::Parse {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn iff(&mut self) -> Result<Formula, Error> {
        let left = self.imp()?;
        if self.eat(&Tok::Iff) {
            let right = self.imp()?;
            if self.peek() == Some(&Tok::Iff) {
                return self.err("`<->` is not associative; add parentheses");
            }
            return Ok(Formula::iff(left, right));
        }
        Ok(left)
    }

    fn imp(&mut self) -> Result<Formula, Error> {
        let left = self.rhd()?;
        if self.eat(&Tok::Imp) {
            let right = self.imp()?;
            return Ok(Formula::implies(left, right));
        }
        Ok(left)
    }

    fn rhd(&mut self) -> Result<Formula, Error> {
        let left = self.or()?;
        if self.eat(&Tok::Rhd) {
            let right = self.or()?;
            if self.peek() == Some(&Tok::Rhd) {
                return self.err("`|>` is not associative; add parentheses");
            }
            return Ok(Formula::rhd(left, right));
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<Formula, Error> {
        let mut left = self.and()?;
        while self.eat(&Tok::Or) {
            let right = self.and()?;
            left = Formula::or(left, right);
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Formula, Error> {
        let mut left = self.prefix()?;
        while self.eat(&Tok::And) {
            let right = self.prefix()?;
            left = Formula::and(left, right);
        }
        Ok(left)
    }

    fn prefix(&mut self) -> Result<Formula, Error> {
        match self.peek() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(Formula::not(self.prefix()?))
            }
            Some(Tok::Box) => {
                self.pos += 1;
                Ok(Formula::boxed(self.prefix()?))
            }
            Some(Tok::Dia) => {
                self.pos += 1;
                Ok(Formula::diamond(self.prefix()?))
            }
            Some(Tok::Ident(name)) if name == "I" => {
                self.pos += 1;
                Ok(Formula::unary(self.prefix()?))
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula, Error> {
        let Some(tok) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        self.pos += 1;
        match tok {
            Tok::Bot => Ok(Formula::bot()),
            Tok::Top => Ok(Formula::top()),
            Tok::Ident(name) => Ok(Formula::var(&name)),
            Tok::LParen => {
                let inner = self.iff()?;
                if !self.eat(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            other => {
                self.pos -= 1;
                self.err(format!("unexpected token {other:?}"))
            }
        }
    }
}

/// Parses a formula. Errors carry the byte offset of the offending token.
pub fn parse(text: &str) -> Result<Formula, Error> {
    let toks = tokenize(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let f = parser.iff()?;
    if parser.pos != parser.toks.len() {
        return parser.err("trailing input");
    }
    Ok(f)
}
