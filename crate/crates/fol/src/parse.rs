//! Recursive-descent parser for the surface grammar in the crate docs.
//!
//! Symbols are resolved against a [`Signature`] during the parse, so unknown
//! symbols and arity mismatches are reported with the byte offset where the
//! offending identifier starts.

use crate::formula::{Formula, Term};
use crate::signature::Signature;
use crate::{FolError, Result};

const RESERVED: [&str; 3] = ["exists", "forall", "in"];

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Amp,
    Pipe,
    Bang,
    Arrow,
    Equals,
    Vcheck,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Vcheck => "`@Vcheck`".into(),
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

fn lex(source: &str) -> Result<Vec<(Tok, usize)>> {
    let mut toks = Vec::new();
    let bytes: Vec<char> = source.chars().collect();
    // Identifiers are ASCII, so char index == byte offset holds for every
    // position an error can point at as long as the input is ASCII; for
    // non-ASCII input the offset is the char index, still unambiguous.
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let at = i;
        match c {
            '(' => toks.push((Tok::LParen, at)),
            ')' => toks.push((Tok::RParen, at)),
            ',' => toks.push((Tok::Comma, at)),
            '.' => toks.push((Tok::Dot, at)),
            '&' => toks.push((Tok::Amp, at)),
            '|' => toks.push((Tok::Pipe, at)),
            '!' => toks.push((Tok::Bang, at)),
            '=' => toks.push((Tok::Equals, at)),
            '-' => {
                if bytes.get(i + 1) == Some(&'>') {
                    toks.push((Tok::Arrow, at));
                    i += 1;
                } else {
                    return Err(FolError::Syntax {
                        at,
                        message: "`-` must be part of `->`".into(),
                    });
                }
            }
            '@' => {
                let mut j = i + 1;
                while j < bytes.len() && is_ident_continue(bytes[j]) {
                    j += 1;
                }
                let word: String = bytes[i + 1..j].iter().collect();
                if word != "Vcheck" {
                    return Err(FolError::Syntax {
                        at,
                        message: format!("expected `@Vcheck`, found `@{word}`"),
                    });
                }
                toks.push((Tok::Vcheck, at));
                i = j - 1;
            }
            _ if is_ident_start(c) => {
                let mut j = i + 1;
                while j < bytes.len() && is_ident_continue(bytes[j]) {
                    j += 1;
                }
                toks.push((Tok::Ident(bytes[i..j].iter().collect()), at));
                i = j - 1;
            }
            _ => {
                return Err(FolError::Syntax {
                    at,
                    message: format!("unexpected character `{c}`"),
                });
            }
        }
        i += 1;
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    sig: &'a Signature,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|&(_, at)| at)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: &Tok) -> Result<usize> {
        match self.bump() {
            Some((t, at)) if &t == want => Ok(at),
            Some((t, at)) => Err(FolError::Syntax {
                at,
                message: format!("expected {}, found {}", want.describe(), t.describe()),
            }),
            None => Err(FolError::Syntax {
                at: self.end,
                message: format!("expected {}, found end of input", want.describe()),
            }),
        }
    }

    /// An identifier usable as a variable or name: keywords are excluded.
    fn term(&mut self) -> Result<Term> {
        match self.bump() {
            Some((Tok::Ident(s), at)) => {
                if RESERVED.contains(&s.as_str()) {
                    Err(FolError::Syntax {
                        at,
                        message: format!("`{s}` is reserved and cannot be a term"),
                    })
                } else {
                    Ok(Term(s))
                }
            }
            Some((t, at)) => Err(FolError::Syntax {
                at,
                message: format!("expected a term, found {}", t.describe()),
            }),
            None => Err(FolError::Syntax {
                at: self.end,
                message: "expected a term, found end of input".into(),
            }),
        }
    }

    fn term_list(&mut self) -> Result<Vec<Term>> {
        self.expect(&Tok::LParen)?;
        let mut args = Vec::new();
        if self.peek() == Some(&Tok::RParen) {
            self.bump();
            return Ok(args);
        }
        loop {
            args.push(self.term()?);
            match self.bump() {
                Some((Tok::Comma, _)) => continue,
                Some((Tok::RParen, _)) => return Ok(args),
                Some((t, at)) => {
                    return Err(FolError::Syntax {
                        at,
                        message: format!("expected `,` or `)`, found {}", t.describe()),
                    });
                }
                None => {
                    return Err(FolError::Syntax {
                        at: self.end,
                        message: "unclosed argument list".into(),
                    });
                }
            }
        }
    }

    fn check_arity(&self, name: &str, expected: usize, got: usize, at: usize) -> Result<()> {
        if expected == got {
            Ok(())
        } else {
            Err(FolError::ArityMismatch {
                name: name.to_string(),
                expected,
                got,
                at,
            })
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        let lhs = self.or_level()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.bump();
            // Right associative: p -> q -> r is p -> (q -> r).
            let rhs = self.formula()?;
            Ok(lhs.implies(rhs))
        } else {
            Ok(lhs)
        }
    }

    fn or_level(&mut self) -> Result<Formula> {
        let mut acc = self.and_level()?;
        while self.peek() == Some(&Tok::Pipe) {
            self.bump();
            acc = acc.or(self.and_level()?);
        }
        Ok(acc)
    }

    fn and_level(&mut self) -> Result<Formula> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Tok::Amp) {
            self.bump();
            acc = acc.and(self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek() {
            Some(Tok::Bang) => {
                self.bump();
                Ok(self.unary()?.negate())
            }
            Some(Tok::Ident(s)) if s == "exists" || s == "forall" => {
                let (kw, _) = self.bump().expect("peeked");
                let var = self.term()?;
                self.expect(&Tok::Dot)?;
                // The body extends as far right as possible.
                let body = self.formula()?;
                Ok(match kw {
                    Tok::Ident(s) if s == "exists" => Formula::Exists(var.0, Box::new(body)),
                    _ => Formula::Forall(var.0, Box::new(body)),
                })
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula> {
        let mut f = if self.peek() == Some(&Tok::LParen) {
            self.bump();
            let inner = self.formula()?;
            self.expect(&Tok::RParen)?;
            inner
        } else {
            self.atom()?
        };
        while self.peek() == Some(&Tok::Vcheck) {
            self.bump();
            f = f.vcheck();
        }
        Ok(f)
    }

    fn atom(&mut self) -> Result<Formula> {
        let at = self.here();
        let head = self.term()?;
        match self.peek() {
            // R(t1, ..., tn)
            Some(Tok::LParen) => {
                let name = head.0;
                if let Some(arity) = self.sig.relation_arity(&name) {
                    let args = self.term_list()?;
                    self.check_arity(&name, arity, args.len(), at)?;
                    Ok(Formula::Rel(name, args))
                } else if self.sig.function_arity(&name).is_some() {
                    Err(FolError::Syntax {
                        at,
                        message: format!(
                            "function symbol `{name}` may only appear as `y = {name}(...)`"
                        ),
                    })
                } else {
                    Err(FolError::UnknownSymbol { name, at })
                }
            }
            // t = s  or  y = f(s1, ..., sn)
            Some(Tok::Equals) => {
                self.bump();
                let rhs_at = self.here();
                let rhs = self.term()?;
                if self.peek() == Some(&Tok::LParen) {
                    let name = rhs.0;
                    if let Some(arity) = self.sig.function_arity(&name) {
                        let args = self.term_list()?;
                        self.check_arity(&name, arity, args.len(), rhs_at)?;
                        Ok(Formula::FnEq(head, name, args))
                    } else if self.sig.relation_arity(&name).is_some() {
                        Err(FolError::Syntax {
                            at: rhs_at,
                            message: format!("relation symbol `{name}` used in term position"),
                        })
                    } else {
                        Err(FolError::UnknownSymbol { name, at: rhs_at })
                    }
                } else {
                    Ok(Formula::Eq(head, rhs))
                }
            }
            // t in s, surface syntax for the declared binary relation `in`.
            Some(Tok::Ident(kw)) if kw == "in" => {
                let (_, in_at) = self.bump().expect("peeked");
                if self.sig.relation_arity("in") != Some(2) {
                    return Err(FolError::UnknownSymbol {
                        name: "in".into(),
                        at: in_at,
                    });
                }
                let rhs = self.term()?;
                Ok(Formula::Rel("in".into(), vec![head, rhs]))
            }
            // Bare identifier: a nullary relation symbol.
            _ => {
                let name = head.0;
                match self.sig.relation_arity(&name) {
                    Some(0) => Ok(Formula::Rel(name, Vec::new())),
                    Some(arity) => Err(FolError::ArityMismatch {
                        name,
                        expected: arity,
                        got: 0,
                        at,
                    }),
                    None => Err(FolError::UnknownSymbol { name, at }),
                }
            }
        }
    }
}

/// Parses `source` against `sig`.  See the crate docs for the grammar.
pub fn parse(source: &str, sig: &Signature) -> Result<Formula> {
    let toks = lex(source)?;
    let mut p = Parser {
        toks,
        pos: 0,
        sig,
        end: source.chars().count(),
    };
    let f = p.formula()?;
    if let Some((t, at)) = p.bump() {
        return Err(FolError::Syntax {
            at,
            message: format!("trailing input starting with {}", t.describe()),
        });
    }
    Ok(f)
}
