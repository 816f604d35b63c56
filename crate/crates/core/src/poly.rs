//! Noncommutative polynomials over a field and their text syntax.
//!
//! Words are sequences of generator indices, ordered degree-lexicographically
//! with lower indices first, so the generator listed last in a presentation
//! is the largest letter.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A monomial in the free algebra.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: u8) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    /// Render with compressed powers, e.g. `u^2*v`.
    pub fn render(&self, names: &[char]) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let g = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == g {
                j += 1;
            }
            let name = names.get(g as usize).copied().unwrap_or('?');
            if j - i == 1 {
                parts.push(name.to_string());
            } else {
                parts.push(format!("{name}^{}", j - i));
            }
            i = j;
        }
        parts.join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}

/// Element of the free algebra `k<x_0, ..., x_{n-1}>`.
#[derive(Clone, PartialEq)]
pub struct Poly<F> {
    terms: BTreeMap<Word, F>,
}

impl<F: Field> Default for Poly<F> {
    fn default() -> Self {
        Poly::zero()
    }
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Poly::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Poly::monomial(Word::empty(), c)
    }

    pub fn monomial(w: Word, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Poly { terms }
    }

    pub fn word(w: Word) -> Self {
        Poly::monomial(w, F::one())
    }

    pub fn gen(g: u8) -> Self {
        Poly::word(Word::letter(g))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, F)>) -> Self {
        let mut p = Poly::zero();
        for (w, c) in terms {
            p.add_term(w, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    /// Largest word and its coefficient.
    pub fn leading(&self) -> Option<(&Word, &F)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<usize> {
        self.leading().map(|(w, _)| w.len())
    }

    /// Common degree of all terms, `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let d = self.degree()?;
        self.terms.keys().all(|w| w.len() == d).then_some(d)
    }

    /// The constant term, if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => {
                let (w, c) = self.terms.iter().next().unwrap();
                w.is_empty().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x = x.add_ref(c);
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add(&self, rhs: &Poly<F>) -> Poly<F> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, rhs: &Poly<F>) -> Poly<F> {
        self.add(&rhs.scale(&-F::one()))
    }

    pub fn scale(&self, c: &F) -> Poly<F> {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x.mul_ref(c)))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Poly<F>) -> Poly<F> {
        let mut out = Poly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.concat(b), &x.mul_ref(y));
            }
        }
        out
    }

    pub fn pow(&self, n: usize) -> Poly<F> {
        let mut out = Poly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Scale so the leading coefficient is one.
    pub fn monic(&self) -> Poly<F> {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero lead")),
            None => self.clone(),
        }
    }

    /// Substitute each generator by a polynomial.
    pub fn substitute(&self, images: &[Poly<F>]) -> Poly<F> {
        let mut out = Poly::zero();
        for (w, c) in &self.terms {
            let mut m = Poly::constant(c.clone());
            for &g in w.letters() {
                m = m.mul(&images[g as usize]);
            }
            out = out.add(&m);
        }
        out
    }

    pub fn max_letter(&self) -> Option<u8> {
        self.terms.keys().flat_map(|w| w.0.iter().copied()).max()
    }

    /// Render with the given generator names, terms in increasing order.
    pub fn render(&self, names: &[char]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            let neg_one = (-c.clone()).is_one();
            let (neg, body) = if w.is_empty() {
                match cs.strip_prefix('-') {
                    Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                    _ if cs.contains(' ') => (false, format!("({cs})")),
                    _ => (false, cs),
                }
            } else if c.is_one() {
                (false, w.render(names))
            } else if neg_one {
                (true, w.render(names))
            } else if cs.contains(' ') {
                (false, format!("({cs})*{}", w.render(names)))
            } else if let Some(rest) = cs.strip_prefix('-') {
                (true, format!("{rest}*{}", w.render(names)))
            } else {
                (false, format!("{cs}*{}", w.render(names)))
            };
            match (k, neg) {
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (0, false) => out.push_str(&body),
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
            }
        }
        out
    }
}

impl<F: fmt::Debug> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

struct Parser<'a, S> {
    src: &'a [u8],
    pos: usize,
    names: &'a [char],
    _marker: std::marker::PhantomData<S>,
}

impl<'a, S: Scalar> Parser<'a, S> {
    fn new(src: &'a str, names: &'a [char]) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
            names,
            _marker: std::marker::PhantomData,
        }
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

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.pos, msg))
    }

    fn expr(&mut self) -> Result<Poly<S>> {
        let mut acc = Poly::zero();
        let mut sign = S::one();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                sign = -S::one();
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = acc.add(&t.scale(&sign));
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = S::one();
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -S::one();
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(c: u8) -> bool {
        c.is_ascii_alphanumeric() || c == b'('
    }

    fn term(&mut self) -> Result<Poly<S>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') | Some(b'.') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let f = self.factor()?;
                    let Some(c) = f.as_constant() else {
                        return Err(Error::parse(at, "division by a non-scalar"));
                    };
                    let inv = c.inv().ok_or(Error::parse(at, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                Some(c) if Self::starts_factor(c) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly<S>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return self.err("expected exponent");
            }
            let n: usize = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| Error::parse(start, "exponent too large"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly<S>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.src[start..self.pos])
                    .unwrap()
                    .parse()
                    .expect("digits");
                Ok(Poly::constant(
                    S::from_big(&n, &BigInt::one()).expect("integer"),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                let ch = c as char;
                if let Some(g) = self.names.iter().position(|&n| n == ch) {
                    return Ok(Poly::gen(g as u8));
                }
                match S::atom(ch) {
                    Some(s) => Ok(Poly::constant(s)),
                    None => Err(Error::parse(self.pos - 1, format!("unknown symbol '{ch}'"))),
                }
            }
            Some(c) => self.err(format!("unexpected '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse a polynomial in the single-letter generators `names`.
///
/// Accepts `+ - * /`, `.` as multiplication, juxtaposition, `^n` and
/// parentheses. Letters that are not generators are scalar constants
/// (`i`, `w`/`z` for the cyclotomic field).
pub fn parse_poly<S: Scalar>(src: &str, names: &[char]) -> Result<Poly<S>> {
    let mut p = Parser::<S>::new(src, names);
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parse a scalar expression such as `(1+i)/2` or `1/2*z^3`.
pub fn parse_scalar<S: Scalar>(src: &str) -> Result<S> {
    let p = parse_poly::<S>(src, &[])?;
    p.as_constant()
        .ok_or_else(|| Error::parse(0, "expected a scalar"))
}
