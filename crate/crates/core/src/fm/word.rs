//! Group words: `a b c` generators, `A B C` inverses, juxtaposition,
//! `[u,v,…]` left-normed commutators, `^n` powers, parentheses, `1` for the
//! identity. The empty string is the identity.

use std::fmt;

use super::{FMElement, FmError, FreeMetabelian};
use crate::ops::GroupOps;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Word {
    Gen { index: usize, inverse: bool },
    Product(Vec<Word>),
    Power(Box<Word>, i64),
    Commutator(Vec<Word>),
}

impl Word {
    pub fn identity() -> Self {
        Word::Product(Vec::new())
    }

    pub fn generator(index: usize) -> Self {
        Word::Gen {
            index,
            inverse: false,
        }
    }

    /// Highest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        match self {
            Word::Gen { index, .. } => Some(*index),
            Word::Product(ws) | Word::Commutator(ws) => ws.iter().filter_map(Word::max_generator).max(),
            Word::Power(w, _) => w.max_generator(),
        }
    }

    /// Evaluate with generator `i` sent to `gens[i]`.
    pub fn eval<G: GroupOps>(&self, g: &G, gens: &[G::Elem]) -> Result<G::Elem, FmError> {
        Ok(match self {
            Word::Gen { index, inverse } => {
                let x = gens.get(*index).ok_or(FmError::GeneratorOutOfRange {
                    index: *index,
                    rank: gens.len(),
                })?;
                if *inverse {
                    g.inverse(x)
                } else {
                    x.clone()
                }
            }
            Word::Product(ws) => {
                let mut acc = g.identity();
                for w in ws {
                    acc = g.op(&acc, &w.eval(g, gens)?);
                }
                acc
            }
            Word::Power(w, n) => g.pow(&w.eval(g, gens)?, *n),
            Word::Commutator(ws) => {
                let xs = ws.iter().map(|w| w.eval(g, gens)).collect::<Result<Vec<_>, _>>()?;
                g.commutator_seq(&xs)
            }
        })
    }

    pub fn to_fm(&self, rank: usize) -> Result<FMElement, FmError> {
        let g = FreeMetabelian::new(rank)?;
        self.eval(&g, &g.generators())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Gen { index, inverse } => {
                let c = (b'a' + *index as u8) as char;
                write!(f, "{}", if *inverse { c.to_ascii_uppercase() } else { c })
            }
            Word::Product(ws) if ws.is_empty() => f.write_str("1"),
            Word::Product(ws) => {
                for w in ws {
                    match w {
                        Word::Product(_) => write!(f, "({w})")?,
                        _ => write!(f, "{w}")?,
                    }
                }
                Ok(())
            }
            Word::Power(w, n) => match **w {
                Word::Product(ref ws) if ws.len() != 1 => write!(f, "({w})^{n}"),
                Word::Power(..) => write!(f, "({w})^{n}"),
                _ => write!(f, "{w}^{n}"),
            },
            Word::Commutator(ws) => {
                let parts: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

struct Parser<'s> {
    src: &'s [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, FmError> {
        Err(FmError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), FmError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn product(&mut self) -> Result<Word, FmError> {
        let mut items = Vec::new();
        while let Some(c) = self.peek() {
            if matches!(c, b',' | b']' | b')') {
                break;
            }
            items.push(self.factor()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Word::Product(items)
        })
    }

    fn factor(&mut self) -> Result<Word, FmError> {
        let mut w = self.atom()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            w = Word::Power(Box::new(w), self.integer()?);
        }
        Ok(w)
    }

    fn atom(&mut self) -> Result<Word, FmError> {
        let c = self.peek().expect("caller checked for input");
        self.pos += 1;
        match c {
            b'a'..=b'c' => Ok(Word::generator((c - b'a') as usize)),
            b'A'..=b'C' => Ok(Word::Gen {
                index: (c - b'A') as usize,
                inverse: true,
            }),
            b'1' => Ok(Word::identity()),
            b'(' => {
                let w = self.product()?;
                self.expect(b')')?;
                Ok(match w {
                    Word::Product(ws) if ws.len() == 1 => ws.into_iter().next().unwrap(),
                    w => w,
                })
            }
            b'[' => {
                let mut parts = vec![self.product()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    parts.push(self.product()?);
                }
                self.expect(b']')?;
                if parts.len() < 2 {
                    self.pos -= 1;
                    return self.err("a commutator needs at least two entries");
                }
                Ok(Word::Commutator(parts))
            }
            _ => {
                self.pos -= 1;
                self.err(format!("unexpected `{}`", c as char))
            }
        }
    }

    fn integer(&mut self) -> Result<i64, FmError> {
        self.peek();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("expected an integer exponent")
        })
    }
}

pub fn parse_word(s: &str) -> Result<Word, FmError> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let w = p.product()?;
    if p.peek().is_some() {
        return p.err(format!("unexpected `{}`", p.src[p.pos] as char));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fm(s: &str) -> FMElement {
        parse_word(s).unwrap().to_fm(3).unwrap()
    }

    #[test]
    fn basic_syntax() {
        let g = FreeMetabelian::new(3).unwrap();
        let [a, b, c]: [FMElement; 3] = g.generators().try_into().unwrap();
        assert_eq!(fm(""), g.identity());
        assert_eq!(fm("1"), g.identity());
        assert_eq!(fm("aA"), g.identity());
        assert_eq!(fm("a b"), g.op(&a, &b));
        assert_eq!(fm("a^-2"), g.pow(&a, -2));
        assert_eq!(fm("(ab)^3"), g.pow(&g.op(&a, &b), 3));
        assert_eq!(fm("[a,b]"), g.commutator(&a, &b));
        assert_eq!(fm("[a,b,c]"), g.commutator(&g.commutator(&a, &b), &c));
        assert_eq!(fm("[ab, C]^2 c"), g.op(&g.pow(&g.commutator(&g.op(&a, &b), &g.inverse(&c)), 2), &c));
    }

    #[test]
    fn errors() {
        for bad in ["d", "a^", "[a]", "(a", "a)", "[a,b", "a^x"] {
            assert!(matches!(parse_word(bad), Err(FmError::Parse { .. })), "{bad}");
        }
        assert_eq!(
            parse_word("c").unwrap().to_fm(2),
            Err(FmError::GeneratorOutOfRange { index: 2, rank: 2 })
        );
    }

    #[test]
    fn display_reparses() {
        for s in ["a b^2 C", "[a,b,a]^-1 (ab)^2", "((a^2)^3)", "[aB, [b,c]]", ""] {
            let w = parse_word(s).unwrap();
            let again = parse_word(&w.to_string()).unwrap();
            assert_eq!(again.to_fm(3).unwrap(), w.to_fm(3).unwrap(), "{s} -> {w}");
        }
    }
}
