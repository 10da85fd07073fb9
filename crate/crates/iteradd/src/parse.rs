//! Text formats for fields, elements and polynomials.
//!
//! - field: `p=<int> r=<int> [mod=c0,c1,...,1]`
//! - element: an expression in the generator `a`, e.g. `a^2+2a`
//! - polynomial: an expression in `x` with element coefficients, e.g.
//!   `x^8 + a*x`, or the sparse additive form `{(0,'a'),(3,'1')}` listing
//!   `(i, c)` for the term `c X^{p^i}`.

use std::collections::BTreeMap;

use iteradd_core::{AdditivePoly, AffinePoly, DensePoly, FieldCtx, FqElem};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("field spec: {0}")]
    Field(String),
    #[error("at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] iteradd_core::Error),
}

pub type Result<T> = std::result::Result<T, ParseError>;

pub fn parse_field(spec: &str) -> Result<FieldCtx> {
    let mut p = None;
    let mut r = None;
    let mut modulus = None;
    for part in spec.split_whitespace() {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| ParseError::Field(format!("expected key=value, got `{part}`")))?;
        let int = |v: &str| v.parse::<u64>().map_err(|_| ParseError::Field(format!("bad integer `{v}` for {key}")));
        match key {
            "p" => p = Some(int(value)?),
            "r" => r = Some(int(value)? as usize),
            "mod" => {
                modulus = Some(value.split(',').map(|c| int(c.trim())).collect::<Result<Vec<u64>>>()?);
            }
            _ => return Err(ParseError::Field(format!("unknown key `{key}`"))),
        }
    }
    let p = p.ok_or_else(|| ParseError::Field("missing p".into()))?;
    let r = r.unwrap_or(1);
    if r == 0 {
        return Err(ParseError::Field("r must be at least 1".into()));
    }
    Ok(FieldCtx::new(p, r, modulus.as_deref())?)
}

/// Sparse polynomial in `x` over `F_q`, exponent to coefficient.
type Terms = BTreeMap<u64, FqElem>;

const MAX_EXPONENT: u64 = 1 << 40;
const MAX_TERMS: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Gen,
    Var,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v = s[start..i]
                    .parse::<u64>()
                    .map_err(|_| ParseError::Syntax { pos: start, msg: "integer too large".into() })?;
                out.push((start, Tok::Int(v)));
                continue;
            }
            b'a' => Tok::Gen,
            b'x' | b'X' => Tok::Var,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                return Err(ParseError::Syntax { pos: i, msg: format!("unexpected character `{}`", c as char) });
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    field: &'a FieldCtx,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|t| t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(ParseError::Syntax { pos: self.offset(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Terms> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                neg(self.field, &self.term()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(t @ (Tok::Plus | Tok::Minus)) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if t == Tok::Plus { add(self.field, &acc, &rhs) } else { add(self.field, &acc, &neg(self.field, &rhs)) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Terms> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => self.pos += 1,
                // juxtaposition, as in `2a` or `3x^2`
                Some(Tok::Int(_) | Tok::Gen | Tok::Var | Tok::LParen) => {}
                _ => return Ok(acc),
            }
            let rhs = self.power()?;
            acc = mul(self.field, &acc, &rhs)?;
        }
    }

    fn power(&mut self) -> Result<Terms> {
        let base = self.atom()?;
        if self.peek() != Some(Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let Some(Tok::Int(e)) = self.peek() else {
            return self.err("expected an integer exponent");
        };
        self.pos += 1;
        pow(self.field, &base, e)
    }

    fn atom(&mut self) -> Result<Terms> {
        let f = self.field;
        let t = match self.peek() {
            Some(t) => t,
            None => return self.err("unexpected end of input"),
        };
        self.pos += 1;
        match t {
            Tok::Int(v) => Ok(constant(f.elem_reduced(&[v % f.p()]))),
            Tok::Gen => Ok(constant(f.gen())),
            Tok::Var => Ok(BTreeMap::from([(1, f.one())])),
            Tok::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => {
                self.pos -= 1;
                self.err("expected a number, `a`, `x` or `(`")
            }
        }
    }
}

fn constant(c: FqElem) -> Terms {
    if c.is_zero() {
        Terms::new()
    } else {
        BTreeMap::from([(0, c)])
    }
}

fn add(f: &FieldCtx, a: &Terms, b: &Terms) -> Terms {
    let mut out = a.clone();
    for (&e, &c) in b {
        let v = f.add(out.get(&e).copied().unwrap_or(FqElem::ZERO), c);
        if v.is_zero() {
            out.remove(&e);
        } else {
            out.insert(e, v);
        }
    }
    out
}

fn neg(f: &FieldCtx, a: &Terms) -> Terms {
    a.iter().map(|(&e, &c)| (e, f.neg(c))).collect()
}

fn mul(f: &FieldCtx, a: &Terms, b: &Terms) -> Result<Terms> {
    let mut out = Terms::new();
    for (&ea, &ca) in a {
        for (&eb, &cb) in b {
            let e = ea + eb;
            if e > MAX_EXPONENT {
                return Err(ParseError::Invalid(format!("exponent {e} exceeds {MAX_EXPONENT}")));
            }
            let v = f.add(out.get(&e).copied().unwrap_or(FqElem::ZERO), f.mul(ca, cb));
            if v.is_zero() {
                out.remove(&e);
            } else {
                out.insert(e, v);
            }
        }
    }
    if out.len() > MAX_TERMS {
        return Err(ParseError::Invalid(format!("more than {MAX_TERMS} terms")));
    }
    Ok(out)
}

fn pow(f: &FieldCtx, base: &Terms, mut e: u64) -> Result<Terms> {
    if base.len() == 1 {
        let (&d, &c) = base.iter().next().unwrap();
        let d = d.checked_mul(e).filter(|&d| d <= MAX_EXPONENT);
        let d = d.ok_or_else(|| ParseError::Invalid("exponent too large".into()))?;
        return Ok(BTreeMap::from([(d, f.pow(c, e))]));
    }
    let mut acc = constant(f.one());
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(f, &acc, &b)?;
        }
        e >>= 1;
        if e > 0 {
            b = mul(f, &b, &b)?;
        }
    }
    Ok(acc)
}

fn parse_terms(field: &FieldCtx, s: &str) -> Result<Terms> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(ParseError::Syntax { pos: 0, msg: "empty expression".into() });
    }
    let mut parser = Parser { field, toks, pos: 0, end: s.len() };
    let terms = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return parser.err("trailing input");
    }
    Ok(terms)
}

pub fn parse_element(field: &FieldCtx, s: &str) -> Result<FqElem> {
    let terms = parse_terms(field, s)?;
    match terms.keys().next_back() {
        None => Ok(field.zero()),
        Some(0) => Ok(terms[&0]),
        Some(_) => Err(ParseError::Invalid(format!("`{s}` is not a field element"))),
    }
}

/// A parsed polynomial, with its additive form when it is affine.
#[derive(Clone, Debug)]
pub struct ParsedPoly {
    pub terms: BTreeMap<u64, FqElem>,
    pub affine: Option<AffinePoly>,
}

impl ParsedPoly {
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn require_affine(&self) -> Result<&AffinePoly> {
        self.affine.as_ref().ok_or_else(|| {
            ParseError::Invalid("polynomial is not affine: every exponent must be a power of p".into())
        })
    }

    pub fn to_dense(&self, field: &FieldCtx) -> Result<DensePoly> {
        let deg = self.degree().unwrap_or(0);
        if deg > 1 << 24 {
            return Err(ParseError::Invalid(format!("degree {deg} too large for a dense polynomial")));
        }
        let terms: Vec<(usize, FqElem)> = self.terms.iter().map(|(&e, &c)| (e as usize, c)).collect();
        Ok(DensePoly::from_terms(field, &terms))
    }
}

fn affine_from_terms(field: &FieldCtx, terms: &Terms) -> Option<AffinePoly> {
    let p = field.p();
    let mut additive = Vec::new();
    let mut shift = field.zero();
    for (&e, &c) in terms {
        if e == 0 {
            shift = c;
            continue;
        }
        let mut i = 0usize;
        let mut v = e;
        while v % p == 0 {
            v /= p;
            i += 1;
        }
        if v != 1 {
            return None;
        }
        additive.push((i, c));
    }
    Some(AffinePoly::new(AdditivePoly::from_terms(field, &additive), shift))
}

fn parse_sparse(field: &FieldCtx, s: &str) -> Result<ParsedPoly> {
    let inner = s
        .trim()
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| ParseError::Invalid("sparse form must be enclosed in braces".into()))?;
    let mut additive = Vec::new();
    let mut rest = inner.trim();
    while !rest.is_empty() {
        let body_start = rest
            .strip_prefix('(')
            .ok_or_else(|| ParseError::Invalid(format!("expected `(` in sparse form near `{rest}`")))?;
        let close = body_start
            .find(')')
            .ok_or_else(|| ParseError::Invalid("unterminated pair in sparse form".into()))?;
        let body = &body_start[..close];
        let (idx, coeff) = body
            .split_once(',')
            .ok_or_else(|| ParseError::Invalid(format!("expected (i, c), got `({body})`")))?;
        let i = idx
            .trim()
            .parse::<usize>()
            .map_err(|_| ParseError::Invalid(format!("bad index `{}`", idx.trim())))?;
        let coeff = coeff.trim().trim_matches(|c| c == '\'' || c == '"');
        let c = parse_element(field, coeff)?;
        additive.push((i, c));
        rest = body_start[close + 1..].trim_start();
        rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
    }
    let a = AdditivePoly::from_terms(field, &additive);
    let mut terms = Terms::new();
    for (i, &c) in a.coeffs().iter().enumerate() {
        if !c.is_zero() {
            let e = field
                .p()
                .checked_pow(i as u32)
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or_else(|| ParseError::Invalid(format!("index {i} too large")))?;
            terms.insert(e, c);
        }
    }
    Ok(ParsedPoly { terms, affine: Some(AffinePoly::additive(a)) })
}

pub fn parse_poly(field: &FieldCtx, s: &str) -> Result<ParsedPoly> {
    if s.trim_start().starts_with('{') {
        return parse_sparse(field, s);
    }
    let terms = parse_terms(field, s)?;
    let affine = affine_from_terms(field, &terms);
    Ok(ParsedPoly { terms, affine })
}
