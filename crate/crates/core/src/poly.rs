//! Sparse polynomials over a standard graded polynomial ring.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::extint::ExtInt;
use crate::field::{Coeff, CoefficientField};
use crate::monomial::Monomial;

/// `field[x0, …, x{n−1}]` with every variable of degree one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyRing {
    pub field: CoefficientField,
    pub nvars: usize,
}

impl PolyRing {
    pub fn new(field: CoefficientField, nvars: usize) -> Self {
        PolyRing { field, nvars }
    }

    pub fn variable_names(&self) -> Vec<String> {
        (0..self.nvars).map(|i| format!("x{i}")).collect()
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::monomial(*self, Monomial::variable(self.nvars, i), self.field.one())
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(*self)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(*self, self.field.one())
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        Parser::new(*self, text).parse()
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.field)?;
        for i in 0..self.nvars {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{i}")?;
        }
        write!(f, "]")
    }
}

/// Terms are kept sorted by grevlex, highest first, with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, Coeff)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
}

/// Checked binary arithmetic.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    if a.ring != b.ring {
        return Err(AlgebraError::RingMismatch(format!("{} vs {}", a.ring, b.ring)));
    }
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Mul => a.mul(b),
    })
}

impl Polynomial {
    pub fn zero(ring: PolyRing) -> Self {
        Polynomial {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: PolyRing, c: Coeff) -> Self {
        Polynomial::monomial(ring, Monomial::one(ring.nvars), c)
    }

    pub fn monomial(ring: PolyRing, m: Monomial, c: Coeff) -> Self {
        if ring.field.is_zero(&c) {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring,
            terms: vec![(m, c)],
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: PolyRing, terms: Vec<(Monomial, Coeff)>) -> Self {
        let f = ring.field;
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(v) => *v = f.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !f.is_zero(c))
            .collect();
        Polynomial { ring, terms }
    }

    /// Trusts the caller that terms are sorted, distinct and nonzero.
    pub(crate) fn from_sorted_terms(ring: PolyRing, terms: Vec<(Monomial, Coeff)>) -> Self {
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn field(&self) -> CoefficientField {
        self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    /// Maximal total degree, −∞ for zero.
    pub fn degree(&self) -> ExtInt {
        match self.terms.iter().map(|(m, _)| m.degree()).max() {
            Some(d) => ExtInt::Fin(d as i64),
            None => ExtInt::NegInf,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(n, _)| n.degree() == m.degree()),
        }
    }

    /// Distinct degrees of the terms, highest first.
    pub fn term_degrees(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self.terms.iter().map(|(m, _)| m.degree() as i64).collect();
        ds.sort_unstable_by(|a, b| b.cmp(a));
        ds.dedup();
        ds
    }

    /// Whether the polynomial is a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn constant_value(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => Some(self.ring.field.zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    fn check(&self, other: &Polynomial) {
        assert_eq!(self.ring, other.ring, "ring mismatch");
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check(other);
        let f = self.ring.field;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = f.add(&a[i].1, &b[j].1);
                    if !f.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Polynomial {
            ring: self.ring,
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.ring.field;
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        let f = self.ring.field;
        if f.is_zero(c) {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(m, d)| (m.clone(), f.mul(c, d)))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let f = self.ring.field;
        if f.is_zero(c) {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(n, d)| (n.mul(m), f.mul(c, d)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.ring);
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(self.ring);
        for (m, c) in &small.terms {
            acc = acc.add(&big.mul_term(m, c));
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `f^q` for `q` a power of the characteristic, computed termwise.
    pub fn frobenius(&self, q: u64) -> Result<Polynomial> {
        let p = self.ring.field.characteristic();
        if p == 0 {
            return Err(AlgebraError::Unsupported(
                "Frobenius requires positive characteristic".into(),
            ));
        }
        let mut r = q;
        while r > 1 && r % p == 0 {
            r /= p;
        }
        if r != 1 {
            return Err(AlgebraError::InvalidArgument(format!(
                "{q} is not a power of {p}"
            )));
        }
        let f = self.ring.field;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.pow(q as u32), f.pow(c, q)))
            .collect();
        // termwise powering preserves the order since grevlex is multiplicative
        Ok(Polynomial {
            ring: self.ring,
            terms,
        })
    }

    pub fn make_monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.ring.field.inv(c);
                self.scale(&inv)
            }
        }
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> Polynomial {
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .cloned()
                .collect(),
        }
    }

    /// Formal partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let f = self.ring.field;
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(i) > 0)
            .map(|(m, c)| (m.lower(i), f.mul(c, &f.from_i64(m.exponent(i) as i64))))
            .collect();
        Polynomial::from_terms(self.ring, terms)
    }

    /// Whether the polynomial is a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field;
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = field.is_negative(c);
            let abs = if neg { field.neg(c) } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", field.format(&abs))?;
            } else if field.is_one(&abs) {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", field.format(&abs))?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    ring: PolyRing,
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(ring: PolyRing, src: &'a str) -> Self {
        Parser { ring, src, pos: 0 }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(AlgebraError::Parse(format!(
            "{msg} at offset {} in `{}`",
            self.pos,
            self.src.trim()
        )))
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek_raw() {
            self.pos += c.len_utf8();
        }
    }

    fn parse(mut self) -> Result<Polynomial> {
        let p = self.expr()?;
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.bump();
                self.term()?.neg()
            }
            Some('+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some('-') => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .or_else(|_| self.err("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek_raw() {
            if c.is_ascii_digit() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        Ok(self.src[start..self.pos].parse().unwrap())
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected `)`");
                }
                self.bump();
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.peek() == Some('/') {
                    self.bump();
                    self.integer()?
                } else {
                    BigInt::from(1)
                };
                let c = self.ring.field.from_ratio(&num, &den)?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some('x') => {
                self.bump();
                let start = self.pos;
                while let Some(c) = self.peek_raw() {
                    if c.is_ascii_digit() {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                if start == self.pos {
                    return self.err("expected variable index after `x`");
                }
                let i: usize = match self.src[start..self.pos].parse() {
                    Ok(i) => i,
                    Err(_) => return self.err("variable index out of range"),
                };
                if i >= self.ring.nvars {
                    return self.err(&format!(
                        "unknown variable x{i} (ring has {} variables)",
                        self.ring.nvars
                    ));
                }
                Ok(self.ring.var(i))
            }
            Some(c) => self.err(&format!("unexpected character `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }
}
