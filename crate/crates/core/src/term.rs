//! Text syntax for objects of Θ_n.
//!
//! ```text
//! TERM := "*"
//!       | "[" INT "]"                      i[p], all blocks terminal
//!       | "[" INT ";" INT ("," INT)* "]"   [p](i[q_1], …, i[q_p])
//!       | "[" INT "](" ARG ("," ARG)* ")"
//! ARG  := TERM | INT                       a bare INT q means [q]
//! ```
//!
//! Terms are untyped until resolved at a level: `[2]` is `[2](*,*)` in Θ_1
//! and `[2;0,0]` in Θ_2.

use crate::error::{Error, Result};
use crate::simplex::Ordinal;
use crate::theta::ThetaObject;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Term {
    Star,
    Bracket { p: usize, args: Args, pos: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Args {
    None,
    Widths(Vec<usize>),
    Terms(Vec<Term>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::Parse { pos: start, msg: "integer too large".into() })
    }

    fn term(&mut self) -> Result<Term> {
        match self.peek() {
            Some(b'*') => {
                self.pos += 1;
                Ok(Term::Star)
            }
            Some(b'[') => {
                let pos = self.pos;
                self.pos += 1;
                let p = self.int()?;
                match self.peek() {
                    Some(b']') => {
                        self.pos += 1;
                        if self.peek() == Some(b'(') {
                            self.pos += 1;
                            let mut terms = vec![self.arg()?];
                            while self.peek() == Some(b',') {
                                self.pos += 1;
                                terms.push(self.arg()?);
                            }
                            self.expect(b')')?;
                            Ok(Term::Bracket { p, args: Args::Terms(terms), pos })
                        } else {
                            Ok(Term::Bracket { p, args: Args::None, pos })
                        }
                    }
                    Some(b';') => {
                        self.pos += 1;
                        let mut qs = vec![self.int()?];
                        while self.peek() == Some(b',') {
                            self.pos += 1;
                            qs.push(self.int()?);
                        }
                        self.expect(b']')?;
                        Ok(Term::Bracket { p, args: Args::Widths(qs), pos })
                    }
                    _ => self.err("expected ']' or ';'"),
                }
            }
            Some(_) => self.err("expected '[' or '*'"),
            None => self.err("unexpected end of input"),
        }
    }

    fn arg(&mut self) -> Result<Term> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let pos = self.pos;
                let p = self.int()?;
                Ok(Term::Bracket { p, args: Args::None, pos })
            }
            _ => self.term(),
        }
    }
}

fn resolve(t: &Term, level: usize) -> Result<ThetaObject> {
    match t {
        Term::Star => Ok(ThetaObject::terminal(level)),
        Term::Bracket { p, args, pos } => {
            let at = |msg: String| Error::Parse { pos: *pos, msg };
            if level == 0 {
                return if *p == 0 && *args == Args::None {
                    Ok(ThetaObject::point())
                } else {
                    Err(at(format!("[{p}] has blocks but the level is 0")))
                };
            }
            match args {
                Args::None => ThetaObject::inclusion(Ordinal(*p), level),
                Args::Widths(qs) => {
                    if qs.len() != *p {
                        return Err(at(format!("[{p};…] lists {} widths", qs.len())));
                    }
                    if level < 2 {
                        return Err(at("the [p;q…] form needs level >= 2".into()));
                    }
                    let sub = qs
                        .iter()
                        .map(|&q| ThetaObject::inclusion(Ordinal(q), level - 1))
                        .collect::<Result<Vec<_>>>()?;
                    ThetaObject::new(level, sub)
                }
                Args::Terms(ts) => {
                    if ts.len() != *p {
                        return Err(at(format!("[{p}](…) lists {} blocks", ts.len())));
                    }
                    let sub = ts.iter().map(|s| resolve(s, level - 1)).collect::<Result<Vec<_>>>()?;
                    ThetaObject::new(level, sub)
                }
            }
        }
    }
}

/// Parses a term as an object of Θ_level.
pub fn parse_object(s: &str, level: usize) -> Result<ThetaObject> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let t = p.term()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    resolve(&t, level)
}

/// The smallest level at which the term makes sense.
pub fn natural_level(s: &str) -> Result<usize> {
    fn depth(t: &Term) -> usize {
        match t {
            Term::Star => 0,
            Term::Bracket { p: 0, args: Args::None, .. } => 1,
            Term::Bracket { args: Args::None, .. } => 1,
            Term::Bracket { args: Args::Widths(_), .. } => 2,
            Term::Bracket { args: Args::Terms(ts), .. } => 1 + ts.iter().map(depth).max().unwrap_or(0),
        }
    }
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let t = p.term()?;
    Ok(depth(&t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::enumerate_objects;
    use proptest::prelude::*;

    #[test]
    fn sugar_and_general_forms_agree() {
        let a = parse_object("[3;1,0,2]", 2).unwrap();
        let b = parse_object("[3]([1],[0],[2])", 2).unwrap();
        let c = parse_object("[3](1,0,2)", 2).unwrap();
        let d = parse_object("[3; 1, 0, 2]", 2).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a, d);
        assert_eq!(a.to_string(), "[3;1,0,2]");
    }

    #[test]
    fn level_dependent_reading() {
        assert_eq!(parse_object("[2]", 1).unwrap().to_string(), "[2]");
        assert_eq!(parse_object("[2]", 2).unwrap().to_string(), "[2;0,0]");
        assert_eq!(parse_object("*", 0).unwrap(), ThetaObject::point());
        assert_eq!(parse_object("[0]", 0).unwrap(), ThetaObject::point());
        assert_eq!(parse_object("[1](*)", 1).unwrap().to_string(), "[1]");
        assert_eq!(parse_object("[1]([1;1])", 3).unwrap().to_string(), "[1]([1;1])");
    }

    #[test]
    fn malformed_terms_report_position() {
        for (s, lvl) in [("[1;1", 2), ("[2;1]", 2), ("[a]", 1), ("[1](", 2), ("[1] x", 1), ("[1;0]", 1)] {
            match parse_object(s, lvl) {
                Err(Error::Parse { .. }) => {}
                other => panic!("{s}: expected parse error, got {other:?}"),
            }
        }
        match parse_object("[1;1", 2) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn natural_levels() {
        assert_eq!(natural_level("[3;1,0,2]").unwrap(), 2);
        assert_eq!(natural_level("[2]").unwrap(), 1);
        assert_eq!(natural_level("[1]([1;1])").unwrap(), 3);
    }

    proptest! {
        #[test]
        fn printed_objects_reparse(level in 0usize..4, pick in 0usize..10_000) {
            let objs = enumerate_objects(level, if level >= 3 { 1 } else { 2 });
            let x = &objs[pick % objs.len()];
            prop_assert_eq!(&parse_object(&x.to_string(), level).unwrap(), x);
        }
    }
}
