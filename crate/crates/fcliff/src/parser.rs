//! Grammar, parser, and canonical pretty-printer for operator expressions.
//!
//! sum     := [sign] term (('+'|'-') term)*
//! term    := [coeff '*'] factor+  |  coeff
//! coeff   := atom ('*' atom)*  |  '(' csum ')'
//! atom    := rational | float | ident | '(' cexpr ',' cexpr ')'
//! factors := pauli 'X0'/'Y3'/'Z5', majorana 'g1(0)'..'g3(k)',
//!            fermion 'a0^' 'a1' 'n2' 'h3' (or 'a+(0)' 'a(1)' 'n(2)' 'h(3)'),
//!            'I' for the identity in every algebra
//!
//! Whitespace-insensitive; an optional leading "qubits: M" / "modes: M"
//! header declares the register width, otherwise it is inferred as the
//! largest index plus one. Formatting is canonical: parse(format(x)) == x.

use crate::clifford::Generator;
use num_traits::Signed;

use crate::coeff::{rat, Coeff, ExactComplex, Monomial, Rational, SymbolicCoeff};
use crate::fermion::{FermionicString, FermionicSum, ModeOp};
use crate::majorana::{MajoranaString, MajoranaSum};
use crate::pauli::{Axis, PauliString, PauliSum};
use crate::{AlgebraKind, Angle, Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Float(f64),
    Ident(String),
    Star,
    Plus,
    Minus,
    Caret,
    Slash,
    LParen,
    RParen,
    Comma,
    Colon,
}

#[derive(Debug, Clone)]
struct Lexed {
    tok: Tok,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<Lexed>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let pos = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '*' => {
                out.push(Lexed { tok: Tok::Star, pos });
                i += 1;
            }
            '+' => {
                out.push(Lexed { tok: Tok::Plus, pos });
                i += 1;
            }
            '-' => {
                out.push(Lexed { tok: Tok::Minus, pos });
                i += 1;
            }
            '^' => {
                out.push(Lexed { tok: Tok::Caret, pos });
                i += 1;
            }
            '/' => {
                out.push(Lexed { tok: Tok::Slash, pos });
                i += 1;
            }
            '(' => {
                out.push(Lexed { tok: Tok::LParen, pos });
                i += 1;
            }
            ')' => {
                out.push(Lexed { tok: Tok::RParen, pos });
                i += 1;
            }
            ',' => {
                out.push(Lexed { tok: Tok::Comma, pos });
                i += 1;
            }
            ':' => {
                out.push(Lexed { tok: Tok::Colon, pos });
                i += 1;
            }
            '0'..='9' | '.' => {
                let start = i;
                let mut is_float = false;
                while i < bytes.len() {
                    match bytes[i] as char {
                        '0'..='9' => i += 1,
                        '.' => {
                            is_float = true;
                            i += 1;
                        }
                        'e' | 'E'
                            if i + 1 < bytes.len()
                                && matches!(bytes[i + 1] as char, '0'..='9' | '+' | '-') =>
                        {
                            is_float = true;
                            i += 2;
                        }
                        _ => break,
                    }
                }
                let slice = &text[start..i];
                let tok = if is_float {
                    Tok::Float(
                        slice
                            .parse()
                            .map_err(|_| Error::parse(start, format!("bad number `{slice}`")))?,
                    )
                } else {
                    Tok::Int(
                        slice
                            .parse()
                            .map_err(|_| Error::parse(start, format!("bad integer `{slice}`")))?,
                    )
                };
                out.push(Lexed { tok, pos: start });
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && matches!(bytes[i] as char, 'a'..='z' | 'A'..='Z' | '0'..='9' | '_')
                {
                    i += 1;
                }
                let mut name = text[start..i].to_string();
                // verbose creation "a+(0)": glue the sign onto the head token
                if name == "a"
                    && i + 1 < bytes.len()
                    && bytes[i] as char == '+'
                    && bytes[i + 1] as char == '('
                {
                    name.push('+');
                    i += 1;
                }
                out.push(Lexed {
                    tok: Tok::Ident(name),
                    pos: start,
                });
            }
            _ => return Err(Error::parse(pos, format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum RawFactor {
    Pauli(usize, Axis),
    Majorana(usize, u8),
    Fermion(usize, ModeOp),
    Identity,
}

impl RawFactor {
    fn index(&self) -> Option<usize> {
        match self {
            RawFactor::Pauli(q, _) | RawFactor::Majorana(q, _) | RawFactor::Fermion(q, _) => {
                Some(*q)
            }
            RawFactor::Identity => None,
        }
    }
}

#[derive(Debug, Clone)]
struct RawTerm {
    negate: bool,
    coeff: Option<Coeff>,
    factors: Vec<RawFactor>,
}

/// Any of the three operator sums, as produced by the parser.
#[derive(Debug, Clone, PartialEq)]
pub enum AnySum {
    Pauli(PauliSum),
    Majorana(MajoranaSum),
    Fermionic(FermionicSum),
}

impl AnySum {
    pub fn kind(&self) -> AlgebraKind {
        match self {
            AnySum::Pauli(_) => AlgebraKind::Pauli,
            AnySum::Majorana(_) => AlgebraKind::Majorana,
            AnySum::Fermionic(_) => AlgebraKind::Fermionic,
        }
    }
}

struct Parser<'a> {
    toks: &'a [Lexed],
    pos: usize,
    text_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|l| &l.tok)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|l| l.pos)
            .unwrap_or(self.text_len)
    }

    fn next(&mut self) -> Option<&Lexed> {
        let l = self.toks.get(self.pos);
        if l.is_some() {
            self.pos += 1;
        }
        l
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        let pos = self.here();
        match self.next() {
            Some(l) if l.tok == tok => Ok(()),
            _ => Err(Error::parse(pos, format!("expected {what}"))),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// rational: INT [ '/' INT ]
    fn rational(&mut self) -> Result<Rational> {
        let pos = self.here();
        let Some(Tok::Int(n)) = self.peek().cloned() else {
            return Err(Error::parse(pos, "expected a rational number"));
        };
        self.pos += 1;
        if self.eat(&Tok::Slash) {
            let pos = self.here();
            let Some(Tok::Int(d)) = self.peek().cloned() else {
                return Err(Error::parse(pos, "expected a denominator"));
            };
            self.pos += 1;
            if d == 0 {
                return Err(Error::parse(pos, "zero denominator"));
            }
            Ok(rat(n, d))
        } else {
            Ok(Rational::from_integer(n))
        }
    }

    /// csum := [sign] cprod (('+'|'-') cprod)*
    fn coeff_sum(&mut self) -> Result<Coeff> {
        let mut acc = Coeff::zero();
        let mut negate = self.eat(&Tok::Minus);
        if !negate {
            self.eat(&Tok::Plus);
        }
        loop {
            let c = self.coeff_product()?;
            acc = if negate { acc.sub(&c) } else { acc.add(&c) };
            if self.eat(&Tok::Plus) {
                negate = false;
            } else if self.eat(&Tok::Minus) {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    /// cprod := atom ('*' atom)*
    fn coeff_product(&mut self) -> Result<Coeff> {
        let mut acc = self.coeff_atom()?;
        while self.eat(&Tok::Star) {
            let b = self.coeff_atom()?;
            acc = acc.mul(&b);
        }
        Ok(acc)
    }

    fn coeff_atom(&mut self) -> Result<Coeff> {
        let pos = self.here();
        match self.peek().cloned() {
            Some(Tok::Int(_)) => Ok(Coeff::from_rational(self.rational()?)),
            Some(Tok::Float(v)) => {
                self.pos += 1;
                Ok(Coeff::Float(v.into()))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Coeff::from_symbol(&name))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let first = self.coeff_sum()?;
                if self.eat(&Tok::Comma) {
                    let second = self.coeff_sum()?;
                    self.expect(Tok::RParen, "`)` after complex pair")?;
                    Ok(first.add(&second.mul_i_pow(1)))
                } else {
                    self.expect(Tok::RParen, "`)` after coefficient group")?;
                    Ok(first)
                }
            }
            _ => Err(Error::parse(pos, "expected a coefficient")),
        }
    }

    /// A single operator factor of the given algebra.
    fn factor(&mut self, kind: AlgebraKind) -> Result<RawFactor> {
        let pos = self.here();
        let Some(Tok::Ident(name)) = self.peek().cloned() else {
            return Err(Error::parse(pos, "expected an operator factor"));
        };
        self.pos += 1;
        if name == "I" {
            return Ok(RawFactor::Identity);
        }
        match kind {
            AlgebraKind::Pauli => {
                let (head, digits) = name.split_at(1);
                let axis = match head {
                    "X" => Axis::X,
                    "Y" => Axis::Y,
                    "Z" => Axis::Z,
                    _ => {
                        return Err(Error::parse(
                            pos,
                            format!("`{name}` is not a Pauli factor"),
                        ))
                    }
                };
                let q: usize = digits
                    .parse()
                    .map_err(|_| Error::parse(pos, format!("bad qubit index in `{name}`")))?;
                Ok(RawFactor::Pauli(q, axis))
            }
            AlgebraKind::Majorana => {
                let flavor = match name.as_str() {
                    "g1" => 1u8,
                    "g2" => 2,
                    "g3" => 3,
                    _ => {
                        return Err(Error::parse(
                            pos,
                            format!("`{name}` is not a Majorana factor"),
                        ))
                    }
                };
                self.expect(Tok::LParen, "`(` after Majorana factor")?;
                let ipos = self.here();
                let Some(Tok::Int(idx)) = self.peek().cloned() else {
                    return Err(Error::parse(ipos, "expected a mode index"));
                };
                self.pos += 1;
                self.expect(Tok::RParen, "`)` after mode index")?;
                Ok(RawFactor::Majorana(idx as usize, flavor))
            }
            AlgebraKind::Fermionic => {
                // verbose forms a+(0), a(1), n(2), h(3)
                if matches!(name.as_str(), "a" | "a+" | "n" | "h")
                    && self.peek() == Some(&Tok::LParen)
                {
                    self.pos += 1;
                    let ipos = self.here();
                    let Some(Tok::Int(idx)) = self.peek().cloned() else {
                        return Err(Error::parse(ipos, "expected a mode index"));
                    };
                    self.pos += 1;
                    self.expect(Tok::RParen, "`)` after mode index")?;
                    let op = match name.as_str() {
                        "a" => ModeOp::An,
                        "a+" => ModeOp::Cr,
                        "n" => ModeOp::Num,
                        _ => ModeOp::Hole,
                    };
                    return Ok(RawFactor::Fermion(idx as usize, op));
                }
                let (head, digits) = name.split_at(1);
                let idx: usize = digits
                    .parse()
                    .map_err(|_| Error::parse(pos, format!("bad mode index in `{name}`")))?;
                let op = match head {
                    "a" => {
                        if self.eat(&Tok::Caret) {
                            ModeOp::Cr
                        } else {
                            ModeOp::An
                        }
                    }
                    "n" => ModeOp::Num,
                    "h" => ModeOp::Hole,
                    _ => {
                        return Err(Error::parse(
                            pos,
                            format!("`{name}` is not a fermionic factor"),
                        ))
                    }
                };
                Ok(RawFactor::Fermion(idx, op))
            }
        }
    }

    fn looks_like_factor(&self, kind: AlgebraKind) -> bool {
        let Some(Tok::Ident(name)) = self.peek() else {
            return false;
        };
        if name == "I" {
            return true;
        }
        match kind {
            AlgebraKind::Pauli => {
                name.len() > 1
                    && matches!(&name[..1], "X" | "Y" | "Z")
                    && name[1..].bytes().all(|b| b.is_ascii_digit())
            }
            AlgebraKind::Majorana => matches!(name.as_str(), "g1" | "g2" | "g3"),
            AlgebraKind::Fermionic => {
                matches!(name.as_str(), "a" | "a+" | "n" | "h")
                    || (name.len() > 1
                        && matches!(&name[..1], "a" | "n" | "h")
                        && name[1..].bytes().all(|b| b.is_ascii_digit()))
            }
        }
    }

    /// term := [coeff '*'] factor+ | coeff
    ///
    /// The last top-level `*` separates the coefficient from the factor
    /// list; a term without one is a factor list, or a bare scalar when it
    /// starts with a number or parenthesis.
    fn term(&mut self, kind: AlgebraKind) -> Result<RawTerm> {
        let start = self.pos;
        let mut depth = 0usize;
        let mut last_star = None;
        let mut end = self.toks.len();
        for idx in start..self.toks.len() {
            match &self.toks[idx].tok {
                Tok::LParen => depth += 1,
                Tok::RParen => depth = depth.saturating_sub(1),
                Tok::Star if depth == 0 => last_star = Some(idx),
                Tok::Plus | Tok::Minus if depth == 0 => {
                    end = idx;
                    break;
                }
                _ => {}
            }
        }
        if start == end {
            return Err(Error::parse(self.here(), "expected a term"));
        }
        let parse_coeff_range = |from: usize, to: usize| -> Result<Coeff> {
            let mut sub = Parser {
                toks: &self.toks[from..to],
                pos: 0,
                text_len: self.text_len,
            };
            let c = sub.coeff_product()?;
            if sub.peek().is_some() {
                return Err(Error::parse(sub.here(), "unexpected token in coefficient"));
            }
            Ok(c)
        };
        let coeff = match last_star {
            Some(s) => {
                let c = parse_coeff_range(start, s)?;
                self.pos = s + 1;
                Some(c)
            }
            None => {
                if matches!(
                    self.peek(),
                    Some(Tok::Int(_)) | Some(Tok::Float(_)) | Some(Tok::LParen)
                ) {
                    let c = parse_coeff_range(start, end)?;
                    self.pos = end;
                    return Ok(RawTerm {
                        negate: false,
                        coeff: Some(c),
                        factors: vec![RawFactor::Identity],
                    });
                }
                None
            }
        };
        let mut factors = Vec::new();
        while self.pos < end {
            factors.push(self.factor(kind)?);
        }
        if factors.is_empty() {
            return Err(Error::parse(self.here(), "expected operator factors"));
        }
        Ok(RawTerm {
            negate: false,
            coeff,
            factors,
        })
    }

    fn sum(&mut self, kind: AlgebraKind) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        let mut negate = self.eat(&Tok::Minus);
        if !negate {
            self.eat(&Tok::Plus);
        }
        loop {
            let mut term = self.term(kind)?;
            term.negate = negate;
            terms.push(term);
            if self.eat(&Tok::Plus) {
                negate = false;
            } else if self.eat(&Tok::Minus) {
                negate = true;
            } else if self.peek().is_none() {
                return Ok(terms);
            } else {
                return Err(Error::parse(self.here(), "expected `+`, `-` or end"));
            }
        }
    }
}

/// Parse an operator-sum expression; register width is the declared header
/// width, the explicit override, or the largest index plus one.
pub fn parse(text: &str, kind: AlgebraKind, width: Option<usize>) -> Result<AnySum> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        text_len: text.len(),
    };
    // optional "qubits: M" / "modes: M" header
    let mut declared = width;
    if let Some(Tok::Ident(name)) = p.peek() {
        if (name == "qubits" || name == "modes") && toks.get(p.pos + 1).map(|l| &l.tok) == Some(&Tok::Colon)
        {
            p.pos += 2;
            let pos = p.here();
            let Some(Tok::Int(m)) = p.peek().cloned() else {
                return Err(Error::parse(pos, "expected a width after the header"));
            };
            p.pos += 1;
            declared = Some(m as usize);
        }
    }
    let terms = p.sum(kind)?;
    let max_index = terms
        .iter()
        .flat_map(|t| t.factors.iter().filter_map(RawFactor::index))
        .max();
    let width = match declared {
        Some(w) => {
            if let Some(mi) = max_index {
                if mi >= w {
                    return Err(Error::IndexOutOfRange { index: mi, width: w });
                }
            }
            w
        }
        None => max_index.map(|m| m + 1).unwrap_or(1),
    };
    build_sum(&terms, kind, width)
}

fn build_sum(terms: &[RawTerm], kind: AlgebraKind, width: usize) -> Result<AnySum> {
    match kind {
        AlgebraKind::Pauli => {
            let mut sum = PauliSum::zero(width);
            for t in terms {
                let mut axes = Vec::new();
                for f in &t.factors {
                    if let RawFactor::Pauli(q, a) = f {
                        axes.push((*q, *a));
                    }
                }
                let string = PauliString::from_axes(width, &axes)?;
                sum.add_string(&string, term_coeff(t));
            }
            Ok(AnySum::Pauli(sum))
        }
        AlgebraKind::Majorana => {
            let mut sum = MajoranaSum::zero(width);
            for t in terms {
                let mut raw = Vec::new();
                for f in &t.factors {
                    if let RawFactor::Majorana(m, flavor) = f {
                        raw.push((*m, *flavor));
                    }
                }
                let string = MajoranaString::normalize(width, &raw, 0)?;
                sum.add_string(&string, term_coeff(t));
            }
            Ok(AnySum::Majorana(sum))
        }
        AlgebraKind::Fermionic => {
            let mut sum = FermionicSum::zero(width);
            for t in terms {
                let mut raw = Vec::new();
                for f in &t.factors {
                    if let RawFactor::Fermion(m, op) = f {
                        raw.push((*m, *op));
                    }
                }
                let string = FermionicString::normalize(width, &raw, 0)?;
                sum.add_string(&string, term_coeff(t));
            }
            Ok(AnySum::Fermionic(sum))
        }
    }
}

fn term_coeff(t: &RawTerm) -> Coeff {
    let c = t.coeff.clone().unwrap_or_else(Coeff::one);
    if t.negate {
        c.neg()
    } else {
        c
    }
}

/// Coefficient rendered as a term prefix: (sign, body); multi-term exact
/// values get parenthesized, a unit coefficient renders as None.
fn coeff_prefix(c: &Coeff) -> (bool, Option<String>) {
    match c {
        Coeff::Float(z) => (false, Some(format!("({},{})", z.re, z.im))),
        Coeff::Exact(e) => {
            let re_terms = e.re.terms().count();
            let im_terms = e.im.terms().count();
            if re_terms + im_terms > 1 {
                return (false, Some(format!("({c})")));
            }
            if im_terms == 1 {
                let (m, r) = e.im.terms().next().unwrap();
                let (sign, body) = monomial_body(m, r, true);
                return (sign, Some(body));
            }
            let (m, r) = e.re.terms().next().unwrap();
            if m.is_unit() && r.abs() == Rational::from_integer(1) {
                return (*r < Rational::from_integer(0), None);
            }
            let (sign, body) = monomial_body(m, r, false);
            (sign, Some(body))
        }
    }
}

fn monomial_body(m: &Monomial, r: &Rational, imaginary: bool) -> (bool, String) {
    let mut factors = Vec::new();
    if imaginary {
        factors.push("(0,1)".to_string());
    }
    let mag = r.abs();
    if mag != Rational::from_integer(1) || (!imaginary && m.is_unit()) {
        factors.push(mag.to_string());
    }
    factors.extend(m.factors());
    if factors.is_empty() {
        factors.push("1".to_string());
    }
    (r < &Rational::from_integer(0), factors.join("*"))
}

fn join_terms(parts: Vec<(bool, String)>) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (neg, body)) in parts.into_iter().enumerate() {
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

fn render_term(c: &Coeff, label: &str) -> (bool, String) {
    let (neg, prefix) = coeff_prefix(c);
    match prefix {
        None => (neg, label.to_string()),
        Some(p) => {
            if label == "I" {
                (neg, p)
            } else {
                (neg, format!("{p} * {label}"))
            }
        }
    }
}

pub fn format_pauli_sum(sum: &PauliSum) -> String {
    let parts = sum
        .labeled_terms()
        .into_iter()
        .map(|(p, c)| render_term(&c, &p.label()))
        .collect();
    join_terms(parts)
}

pub fn format_majorana_sum(sum: &MajoranaSum) -> String {
    let parts = sum
        .terms()
        .map(|(g, c)| {
            let label = if g.is_identity_op() {
                "I".to_string()
            } else {
                g.indices()
                    .iter()
                    .map(|i| format!("g{}({})", if i % 2 == 0 { 1 } else { 2 }, i / 2))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            render_term(c, &label)
        })
        .collect();
    join_terms(parts)
}

/// Fermionic terms render with every index block ascending; the reversal of
/// the canonical descending annihilation block folds its sign into the
/// printed coefficient.
pub fn format_fermionic_sum(sum: &FermionicSum) -> String {
    let parts = sum
        .terms()
        .map(|(s, c)| {
            let f = s.annihilations().len() as u32;
            let reversal = (f * f.saturating_sub(1) / 2) % 2;
            let coeff = c.mul_i_pow((2 * reversal) as u8);
            let label = if s.is_identity_op() {
                "I".to_string()
            } else {
                let mut labels = Vec::new();
                for m in s.creations() {
                    labels.push(format!("a{m}^"));
                }
                for m in s.annihilations() {
                    labels.push(format!("a{m}"));
                }
                for m in s.holes() {
                    labels.push(format!("h{m}"));
                }
                for m in s.numbers() {
                    labels.push(format!("n{m}"));
                }
                labels.join(" ")
            };
            render_term(&coeff, &label)
        })
        .collect();
    join_terms(parts)
}

pub fn format_any(sum: &AnySum) -> String {
    match sum {
        AnySum::Pauli(s) => format_pauli_sum(s),
        AnySum::Majorana(s) => format_majorana_sum(s),
        AnySum::Fermionic(s) => format_fermionic_sum(s),
    }
}

/// Exact real symbolic expression (one side of a JSON coefficient).
pub fn parse_symbolic(text: &str) -> Result<SymbolicCoeff> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        text_len: text.len(),
    };
    let c = p.coeff_sum()?;
    if p.peek().is_some() {
        return Err(Error::parse(p.here(), "trailing input after coefficient"));
    }
    match c {
        Coeff::Exact(e) => {
            if !e.im.is_zero() {
                return Err(Error::Invalid("expected a real coefficient".into()));
            }
            Ok(e.re)
        }
        Coeff::Float(_) => Err(Error::Invalid("expected an exact coefficient".into())),
    }
}

/// Parse a full coefficient expression (exact or float).
pub fn parse_coeff(text: &str) -> Result<Coeff> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        text_len: text.len(),
    };
    let c = p.coeff_sum()?;
    if p.peek().is_some() {
        return Err(Error::parse(p.here(), "trailing input after coefficient"));
    }
    Ok(c)
}

pub fn format_symbolic(s: &SymbolicCoeff) -> String {
    Coeff::Exact(ExactComplex {
        re: s.clone(),
        im: SymbolicCoeff::zero(),
    })
    .to_string()
}

/// Generators in the text forms "halfbody-(0)", "halfbody+(0)",
/// "pair-(0,1)", "exc-(0,1)", "num(0)" and "num(0)@pi/4" (inline angle).
pub fn parse_generator(text: &str) -> Result<(Generator, Option<Angle>)> {
    let t = text.trim();
    let (body, angle) = match t.split_once('@') {
        Some((b, a)) => (b.trim(), Some(Angle::parse(a)?)),
        None => (t, None),
    };
    let open = body
        .find('(')
        .ok_or_else(|| Error::Invalid(format!("bad generator `{t}`")))?;
    if !body.ends_with(')') {
        return Err(Error::Invalid(format!("bad generator `{t}`")));
    }
    let head = &body[..open];
    let args: Vec<usize> = body[open + 1..body.len() - 1]
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Invalid(format!("bad generator index in `{t}`")))
        })
        .collect::<Result<_>>()?;
    let herm = head.ends_with('+');
    let kind = head.trim_end_matches(['+', '-']);
    let gen = match (kind, args.as_slice()) {
        ("halfbody", [p]) => Generator::HalfBody { p: *p, herm },
        ("pair", [p, q]) => Generator::PairCreate {
            p: *p,
            q: *q,
            herm,
        },
        ("exc", [p, q]) => Generator::SingleExc {
            p: *p,
            q: *q,
            herm,
        },
        ("num", [p]) => Generator::Number { p: *p },
        _ => return Err(Error::Invalid(format!("bad generator `{t}`"))),
    };
    Ok((gen, angle))
}
