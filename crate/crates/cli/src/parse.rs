//! Lexer and recursive-descent parser for the ring DSL.
//!
//! ```text
//! ring    := term { "x" term }
//! term    := primary { "[" ident "]" "/" "(" elems ")" | "/" "(" elems ")" }
//! primary := "Z" "/" int | "GF" "(" int [ "^" int ] ")" | "(" ring ")"
//!          | "idealize" "(" ring "," modspec ")"
//! modspec := cyc { "+" cyc }
//! cyc     := "R" [ "/" "(" elems ")" ] | "0"
//! elems   := elem { "," elem }
//! elem    := prod { ("+" | "-") prod }
//! prod    := unary { "*" unary }
//! unary   := "-" unary | power
//! power   := atom [ "^" int ]
//! atom    := int | ident | "(" elems ")"
//! ```

use crate::ast::{Cyclic, ElemExpr, ModSpec, RingExpr};
use crate::error::CliError;

pub const MAX_INPUT: usize = 64 * 1024;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Punct(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Token>, CliError> {
    if src.len() > MAX_INPUT {
        return Err(CliError::Parse {
            line: 1,
            col: 1,
            msg: format!("input longer than {MAX_INPUT} bytes"),
        });
    }
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l, k) = (line, col);
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                col += 1;
            }
            Tok::Int(s.parse().map_err(|_| CliError::Parse {
                line: l,
                col: k,
                msg: format!("integer {s} is too large"),
            })?)
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                col += 1;
            }
            Tok::Ident(s)
        } else if "/()[],+-*^;".contains(c) {
            chars.next();
            col += 1;
            Tok::Punct(c)
        } else {
            return Err(CliError::Parse {
                line: l,
                col: k,
                msg: format!("unexpected character {c:?}"),
            });
        };
        out.push(Token { tok, line: l, col: k });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Parser, CliError> {
        Ok(Parser {
            toks: lex(src)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, CliError> {
        let t = &self.toks[self.pos];
        Err(CliError::Parse {
            line: t.line,
            col: t.col,
            msg: msg.into(),
        })
    }

    fn describe(&self) -> String {
        match self.peek() {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("{s:?}"),
            Tok::Punct(c) => format!("{c:?}"),
            Tok::End => "end of input".into(),
        }
    }

    fn is_punct(&self, c: char) -> bool {
        *self.peek() == Tok::Punct(c)
    }

    fn is_ident(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Ident(x) if x == s)
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        if self.is_punct(c) {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {c:?}, found {}", self.describe()))
        }
    }

    fn int(&mut self, what: &str) -> Result<u64, CliError> {
        match self.peek() {
            Tok::Int(n) => {
                let n = *n;
                self.bump();
                Ok(n)
            }
            _ => self.error(format!("expected {what}, found {}", self.describe())),
        }
    }

    fn positive(&mut self, what: &str) -> Result<u64, CliError> {
        let n = self.int(what)?;
        if n == 0 {
            self.pos -= 1;
            return self.error(format!("{what} must be positive"));
        }
        Ok(n)
    }

    fn finish(&mut self) -> Result<(), CliError> {
        if *self.peek() != Tok::End {
            return self.error(format!("unexpected {}", self.describe()));
        }
        Ok(())
    }

    fn ring(&mut self) -> Result<RingExpr, CliError> {
        let mut items = vec![self.term()?];
        while self.is_ident("x") {
            self.bump();
            items.push(self.term()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            RingExpr::Product(items)
        })
    }

    fn term(&mut self) -> Result<RingExpr, CliError> {
        let mut base = self.primary()?;
        loop {
            if self.is_punct('[') {
                self.bump();
                let var = match self.bump() {
                    Tok::Ident(s) => s,
                    _ => {
                        self.pos -= 1;
                        return self.error("expected a variable name");
                    }
                };
                self.expect(']')?;
                self.expect('/')?;
                self.expect('(')?;
                let mut polys = self.elems()?;
                self.expect(')')?;
                let monic = polys.remove(0);
                base = RingExpr::PolyQuot {
                    base: Box::new(base),
                    var,
                    monic,
                    relations: polys,
                };
            } else if self.is_punct('/') && *self.peek_at(1) == Tok::Punct('(') {
                self.bump();
                self.bump();
                let gens = self.elems()?;
                self.expect(')')?;
                base = RingExpr::Quot {
                    base: Box::new(base),
                    gens,
                };
            } else {
                return Ok(base);
            }
        }
    }

    fn primary(&mut self) -> Result<RingExpr, CliError> {
        if self.is_ident("Z") {
            self.bump();
            self.expect('/')?;
            return Ok(RingExpr::ZMod(self.positive("modulus")?));
        }
        if self.is_ident("GF") {
            self.bump();
            self.expect('(')?;
            let p = self.positive("characteristic")?;
            let k = if self.is_punct('^') {
                self.bump();
                let k = self.positive("degree")?;
                u32::try_from(k).or_else(|_| self.error("degree too large"))?
            } else {
                1
            };
            self.expect(')')?;
            return Ok(RingExpr::Gf { p, k });
        }
        if self.is_ident("idealize") {
            self.bump();
            self.expect('(')?;
            let base = self.ring()?;
            self.expect(',')?;
            let module = self.modspec()?;
            self.expect(')')?;
            return Ok(RingExpr::Idealize {
                base: Box::new(base),
                module,
            });
        }
        if self.is_punct('(') {
            self.bump();
            let r = self.ring()?;
            self.expect(')')?;
            return Ok(r);
        }
        self.error(format!("expected a ring, found {}", self.describe()))
    }

    fn modspec(&mut self) -> Result<ModSpec, CliError> {
        let mut out = vec![self.cyclic()?];
        while self.is_punct('+') {
            self.bump();
            out.push(self.cyclic()?);
        }
        Ok(ModSpec(out))
    }

    fn cyclic(&mut self) -> Result<Cyclic, CliError> {
        if *self.peek() == Tok::Int(0) {
            self.bump();
            return Ok(Cyclic::Zero);
        }
        if !self.is_ident("R") {
            return self.error(format!("expected R, R/(…) or 0, found {}", self.describe()));
        }
        self.bump();
        if self.is_punct('/') {
            self.bump();
            self.expect('(')?;
            let gens = self.elems()?;
            self.expect(')')?;
            return Ok(Cyclic::Quotient(gens));
        }
        Ok(Cyclic::Free)
    }

    fn elems(&mut self) -> Result<Vec<ElemExpr>, CliError> {
        let mut out = vec![self.elem()?];
        while self.is_punct(',') {
            self.bump();
            out.push(self.elem()?);
        }
        Ok(out)
    }

    fn elem(&mut self) -> Result<ElemExpr, CliError> {
        let mut acc = self.prod()?;
        loop {
            if self.is_punct('+') {
                self.bump();
                acc = ElemExpr::Add(Box::new(acc), Box::new(self.prod()?));
            } else if self.is_punct('-') {
                self.bump();
                acc = ElemExpr::Sub(Box::new(acc), Box::new(self.prod()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn prod(&mut self) -> Result<ElemExpr, CliError> {
        let mut acc = self.unary()?;
        while self.is_punct('*') {
            self.bump();
            acc = ElemExpr::Mul(Box::new(acc), Box::new(self.unary()?));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<ElemExpr, CliError> {
        if self.is_punct('-') {
            self.bump();
            return Ok(ElemExpr::Neg(Box::new(self.unary()?)));
        }
        let a = self.atom()?;
        if self.is_punct('^') {
            self.bump();
            let e = self.int("exponent")?;
            let e = u32::try_from(e).or_else(|_| self.error("exponent too large"))?;
            return Ok(ElemExpr::Pow(Box::new(a), e));
        }
        Ok(a)
    }

    fn atom(&mut self) -> Result<ElemExpr, CliError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(ElemExpr::Int(n))
            }
            Tok::Ident(s) => {
                self.bump();
                Ok(ElemExpr::Sym(s))
            }
            Tok::Punct('(') => {
                self.bump();
                let mut items = self.elems()?;
                self.expect(')')?;
                Ok(if items.len() == 1 {
                    items.pop().unwrap()
                } else {
                    ElemExpr::Tuple(items)
                })
            }
            _ => self.error(format!("expected an element, found {}", self.describe())),
        }
    }
}

pub fn parse_ring(src: &str) -> Result<RingExpr, CliError> {
    let mut p = Parser::new(src)?;
    let r = p.ring()?;
    p.finish()?;
    Ok(r)
}

pub fn parse_elem(src: &str) -> Result<ElemExpr, CliError> {
    let mut p = Parser::new(src)?;
    let e = p.elem()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_modspec(src: &str) -> Result<ModSpec, CliError> {
    let mut p = Parser::new(src)?;
    let m = p.modspec()?;
    p.finish()?;
    Ok(m)
}

/// `"(g11, g12); (g21); ()"`: one generator list per ideal; `()` is the
/// zero ideal.
pub fn parse_ideal_family(src: &str) -> Result<Vec<Vec<ElemExpr>>, CliError> {
    let mut p = Parser::new(src)?;
    let mut out = Vec::new();
    loop {
        p.expect('(')?;
        if p.is_punct(')') {
            p.bump();
            out.push(Vec::new());
        } else {
            out.push(p.elems()?);
            p.expect(')')?;
        }
        if p.is_punct(';') {
            p.bump();
            continue;
        }
        p.finish()?;
        return Ok(out);
    }
}
