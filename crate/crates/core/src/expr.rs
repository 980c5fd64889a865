//! Preradical expression language.
//!
//! Atoms: `zero`, `one`, `soc`, `jac`, `sing`, `alpha(M,[[..]])`,
//! `omega(M,[[..]])`, `filter([[..]], ...)`. Binary operators by falling
//! precedence: `*` (product) and `:` (coproduct), then `&` (meet), then
//! `|` (join). `hat`, `sq`, `circ`, `bar`, `tilde` are prefix functions.
//! Module names resolve against universe rep labels; submodules and left
//! ideals are written as generator matrices.

use crate::error::{Error, Result};
use crate::filters::{preradical_of_filter, FilterTable};
use crate::preradical::PreradicalTable;
use crate::submodule::Submodule;
use crate::universe::Universe;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Zero,
    One,
    Soc,
    Jac,
    Sing,
    Alpha(String, Vec<Vec<u64>>),
    Omega(String, Vec<Vec<u64>>),
    Filter(Vec<Vec<Vec<u64>>>),
    Hat(Box<Expr>),
    Sq(Box<Expr>),
    Circ(Box<Expr>),
    Bar(Box<Expr>),
    Tilde(Box<Expr>),
    Meet(Box<Expr>, Box<Expr>),
    Join(Box<Expr>, Box<Expr>),
    Prod(Box<Expr>, Box<Expr>),
    Coprod(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(u64),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Amp,
    Pipe,
    Star,
    Colon,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            '&' => Tok::Amp,
            '|' => Tok::Pipe,
            '*' => Tok::Star,
            ':' => Tok::Colon,
            _ if c.is_ascii_alphanumeric() || c == '_' || c == '+' || c == '#' => {
                let start = i;
                while i < bytes.len() {
                    let d = bytes[i] as char;
                    if d.is_ascii_alphanumeric() || d == '_' || d == '+' || d == '#' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                let word = &src[start..i];
                if word.bytes().all(|b| b.is_ascii_digit()) {
                    out.push((
                        start,
                        Tok::Int(word.parse().map_err(|_| Error::Parse {
                            pos: start,
                            msg: format!("integer {word} out of range"),
                        })?),
                    ));
                } else {
                    out.push((start, Tok::Ident(word.to_string())));
                }
                continue;
            }
            _ => {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character {c:?}"),
                })
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let pos = self.here();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            got => Err(Error::Parse {
                pos,
                msg: format!("expected {what}, found {}", describe(got.as_ref())),
            }),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while self.peek() == Some(&Tok::Pipe) {
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::Join(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Tok::Amp) {
            self.bump();
            let rhs = self.factor()?;
            lhs = Expr::Meet(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let mut lhs = self.atom()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.atom()?;
                    lhs = Expr::Prod(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Colon) => {
                    self.bump();
                    let rhs = self.atom()?;
                    lhs = Expr::Coprod(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => match name.as_str() {
                "zero" => Ok(Expr::Zero),
                "one" => Ok(Expr::One),
                "soc" => Ok(Expr::Soc),
                "jac" => Ok(Expr::Jac),
                "sing" => Ok(Expr::Sing),
                "hat" | "sq" | "circ" | "bar" | "tilde" => {
                    self.expect(Tok::LParen, "`(`")?;
                    let inner = Box::new(self.expr()?);
                    self.expect(Tok::RParen, "`)`")?;
                    Ok(match name.as_str() {
                        "hat" => Expr::Hat(inner),
                        "sq" => Expr::Sq(inner),
                        "circ" => Expr::Circ(inner),
                        "bar" => Expr::Bar(inner),
                        _ => Expr::Tilde(inner),
                    })
                }
                "alpha" | "omega" => {
                    self.expect(Tok::LParen, "`(`")?;
                    let label = self.module_label()?;
                    self.expect(Tok::Comma, "`,`")?;
                    let gens = self.matrix()?;
                    self.expect(Tok::RParen, "`)`")?;
                    Ok(if name == "alpha" {
                        Expr::Alpha(label, gens)
                    } else {
                        Expr::Omega(label, gens)
                    })
                }
                "filter" => {
                    self.expect(Tok::LParen, "`(`")?;
                    let mut ideals = vec![self.matrix()?];
                    while self.peek() == Some(&Tok::Comma) {
                        self.bump();
                        ideals.push(self.matrix()?);
                    }
                    self.expect(Tok::RParen, "`)`")?;
                    Ok(Expr::Filter(ideals))
                }
                _ => Err(Error::Parse {
                    pos,
                    msg: format!("unknown atom `{name}`"),
                }),
            },
            got => Err(Error::Parse {
                pos,
                msg: format!("expected an expression, found {}", describe(got.as_ref())),
            }),
        }
    }

    fn module_label(&mut self) -> Result<String> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Ident(s)) => Ok(s),
            Some(Tok::Int(n)) => Ok(n.to_string()),
            got => Err(Error::Parse {
                pos,
                msg: format!("expected a module label, found {}", describe(got.as_ref())),
            }),
        }
    }

    fn matrix(&mut self) -> Result<Vec<Vec<u64>>> {
        self.expect(Tok::LBracket, "`[`")?;
        let mut rows = Vec::new();
        if self.peek() == Some(&Tok::RBracket) {
            self.bump();
            return Ok(rows);
        }
        loop {
            rows.push(self.row()?);
            match self.peek() {
                Some(Tok::Comma) => {
                    self.bump();
                }
                _ => break,
            }
        }
        self.expect(Tok::RBracket, "`]`")?;
        Ok(rows)
    }

    fn row(&mut self) -> Result<Vec<u64>> {
        self.expect(Tok::LBracket, "`[`")?;
        let mut row = Vec::new();
        if self.peek() == Some(&Tok::RBracket) {
            self.bump();
            return Ok(row);
        }
        loop {
            let pos = self.here();
            match self.bump() {
                Some(Tok::Int(n)) => row.push(n),
                got => {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("expected an integer, found {}", describe(got.as_ref())),
                    })
                }
            }
            match self.peek() {
                Some(Tok::Comma) => {
                    self.bump();
                }
                _ => break,
            }
        }
        self.expect(Tok::RBracket, "`]`")?;
        Ok(row)
    }
}

fn describe(t: Option<&Tok>) -> String {
    match t {
        None => "end of input".to_string(),
        Some(Tok::Ident(s)) => format!("`{s}`"),
        Some(Tok::Int(n)) => format!("`{n}`"),
        Some(Tok::LParen) => "`(`".to_string(),
        Some(Tok::RParen) => "`)`".to_string(),
        Some(Tok::LBracket) => "`[`".to_string(),
        Some(Tok::RBracket) => "`]`".to_string(),
        Some(Tok::Comma) => "`,`".to_string(),
        Some(Tok::Amp) => "`&`".to_string(),
        Some(Tok::Pipe) => "`|`".to_string(),
        Some(Tok::Star) => "`*`".to_string(),
        Some(Tok::Colon) => "`:`".to_string(),
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: src.len(),
    };
    let e = p.expr()?;
    if p.pos < toks.len() {
        return Err(Error::Parse {
            pos: p.here(),
            msg: format!("trailing input, found {}", describe(p.peek())),
        });
    }
    Ok(e)
}

pub fn eval(e: &Expr, u: &Arc<Universe>) -> Result<PreradicalTable> {
    match e {
        Expr::Zero => Ok(PreradicalTable::zero(u)),
        Expr::One => Ok(PreradicalTable::one(u)),
        Expr::Soc => PreradicalTable::socle(u),
        Expr::Jac => PreradicalTable::jacobson(u),
        Expr::Sing => PreradicalTable::singular(u),
        Expr::Alpha(label, gens) => {
            let m = u
                .rep_by_label(label)
                .ok_or_else(|| Error::UnknownModule(label.clone()))?;
            let n = Submodule::from_generators(u.rep(m), gens);
            PreradicalTable::alpha(u, m, &n)
        }
        Expr::Omega(label, gens) => {
            let m = u
                .rep_by_label(label)
                .ok_or_else(|| Error::UnknownModule(label.clone()))?;
            let n = Submodule::from_generators(u.rep(m), gens);
            PreradicalTable::omega(u, m, &n)
        }
        Expr::Filter(ideal_gens) => {
            let ring = u.ring();
            let reg = u.rep(u.regular_rep());
            let ideals = ideal_gens
                .iter()
                .map(|gens| Submodule::from_generators(reg, gens))
                .collect();
            let f = FilterTable::new(Arc::clone(ring), ideals)?;
            preradical_of_filter(&f, u)
        }
        Expr::Hat(inner) => eval(inner, u)?.hat(),
        Expr::Sq(inner) => eval(inner, u)?.square(),
        Expr::Circ(inner) => eval(inner, u)?.circ(),
        Expr::Bar(inner) => eval(inner, u)?.bar(),
        Expr::Tilde(inner) => eval(inner, u)?.tilde(),
        Expr::Meet(a, b) => eval(a, u)?.meet(&eval(b, u)?),
        Expr::Join(a, b) => eval(a, u)?.join(&eval(b, u)?),
        Expr::Prod(a, b) => eval(a, u)?.prod(&eval(b, u)?),
        Expr::Coprod(a, b) => eval(a, u)?.coprod(&eval(b, u)?),
    }
}

/// Parse and evaluate in one step.
pub fn eval_str(src: &str, u: &Arc<Universe>) -> Result<PreradicalTable> {
    eval(&parse(src)?, u)
}
