//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Polynomials live in one of two parallel alphabets, `x1, x2, ...` or
//! `y1, y2, ...`. All arithmetic is exact (`BigRational` coefficients), terms
//! are kept in graded-lexicographic order, and the text rendering re-parses
//! to an equal polynomial.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Which variable family a polynomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Alphabet {
    #[default]
    X,
    Y,
}

impl Alphabet {
    pub fn letter(self) -> char {
        match self {
            Alphabet::X => 'x',
            Alphabet::Y => 'y',
        }
    }

    fn name(self) -> &'static str {
        match self {
            Alphabet::X => "x",
            Alphabet::Y => "y",
        }
    }
}

/// Exponent vector of a monomial, indexed by variable position (0-based
/// internally, variable `x1` is position 0). Trailing zeros are trimmed, so
/// equal monomials have equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        ExponentVector(exponents)
    }

    /// The constant monomial.
    pub fn unit() -> Self {
        ExponentVector(Vec::new())
    }

    /// The monomial `x_i` for a 1-based variable index.
    pub fn variable(i: usize) -> Self {
        assert!(i >= 1, "variable indices are 1-based");
        let mut v = vec![0; i];
        v[i - 1] = 1;
        ExponentVector::new(v)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of the 1-based variable `i` (zero beyond the stored prefix).
    pub fn exponent(&self, i: usize) -> u32 {
        assert!(i >= 1);
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest variable index with nonzero exponent (0 for the constant).
    pub fn max_variable(&self) -> usize {
        self.0.len()
    }

    /// Product of two monomials: add exponents.
    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        let n = self.0.len().max(other.0.len());
        let mut v = vec![0u32; n];
        for (i, &e) in self.0.iter().enumerate() {
            v[i] += e;
        }
        for (i, &e) in other.0.iter().enumerate() {
            v[i] += e;
        }
        ExponentVector::new(v)
    }

    /// `α! = ∏ α_i!`.
    pub fn factorial(&self) -> BigInt {
        self.0.iter().map(|&e| factorial(e as usize)).product()
    }

    /// Swap the exponents of the 1-based variables `a` and `b`.
    pub fn swap_variables(&self, a: usize, b: usize) -> ExponentVector {
        assert!(a >= 1 && b >= 1);
        let n = self.0.len().max(a).max(b);
        let mut v = vec![0u32; n];
        v[..self.0.len()].copy_from_slice(&self.0);
        v.swap(a - 1, b - 1);
        ExponentVector::new(v)
    }
}

/// Graded lexicographic: compare total degree first, then exponents
/// position by position (missing entries count as zero).
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                let n = self.0.len().max(other.0.len());
                for i in 0..n {
                    let a = self.0.get(i).copied().unwrap_or(0);
                    let b = other.0.get(i).copied().unwrap_or(0);
                    match a.cmp(&b) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Sparse exact-rational multivariate polynomial.
///
/// Invariants: no zero coefficients are stored, and the term map is keyed in
/// graded-lex order. Equality is term-map plus alphabet equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<ExponentVector, BigRational>,
    alphabet: Alphabet,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::zero_in(Alphabet::X)
    }

    pub fn zero_in(alphabet: Alphabet) -> Self {
        Polynomial { terms: BTreeMap::new(), alphabet }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::constant_in(c, Alphabet::X)
    }

    pub fn constant_in(c: BigRational, alphabet: Alphabet) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ExponentVector::unit(), c);
        }
        Polynomial { terms, alphabet }
    }

    pub fn from_integer(n: i64) -> Self {
        Polynomial::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// The variable `x_i` (1-based) in the given alphabet.
    pub fn variable(i: usize, alphabet: Alphabet) -> Self {
        Polynomial::monomial(ExponentVector::variable(i), BigRational::one(), alphabet)
    }

    pub fn monomial(ev: ExponentVector, coeff: BigRational, alphabet: Alphabet) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(ev, coeff);
        }
        Polynomial { terms, alphabet }
    }

    /// Sum an arbitrary term list into canonical form (duplicates combined,
    /// zeros dropped).
    pub fn from_terms<I>(alphabet: Alphabet, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, BigRational)>,
    {
        let mut map: BTreeMap<ExponentVector, BigRational> = BTreeMap::new();
        for (ev, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(ev).or_insert_with(BigRational::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        Polynomial { terms: map, alphabet }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Retag into another alphabet, keeping the term map.
    pub fn with_alphabet(mut self, alphabet: Alphabet) -> Self {
        self.alphabet = alphabet;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, ev: &ExponentVector) -> BigRational {
        self.terms.get(ev).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Maximum total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|ev| ev.total_degree()).max()
    }

    /// `Some(d)` if every term has total degree `d` (zero counts as
    /// homogeneous of any degree and reports `None`).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|ev| ev.total_degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Largest variable index appearing in any term.
    pub fn max_variable(&self) -> usize {
        self.terms.keys().map(|ev| ev.max_variable()).max().unwrap_or(0)
    }

    fn require_same_alphabet(&self, other: &Polynomial) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.name(),
                right: other.alphabet.name(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.require_same_alphabet(other)?;
        let mut terms = self.terms.clone();
        for (ev, c) in &other.terms {
            let entry = terms.entry(ev.clone()).or_insert_with(BigRational::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Polynomial { terms, alphabet: self.alphabet })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&-other.clone())
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.require_same_alphabet(other)?;
        let mut terms: BTreeMap<ExponentVector, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let ev = ea.mul(eb);
                let entry = terms.entry(ev).or_insert_with(BigRational::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Polynomial { terms, alphabet: self.alphabet })
    }

    pub fn scale(&self, factor: &BigRational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero_in(self.alphabet);
        }
        let terms = self
            .terms
            .iter()
            .map(|(ev, c)| (ev.clone(), c * factor))
            .collect();
        Polynomial { terms, alphabet: self.alphabet }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::constant_in(BigRational::one(), self.alphabet);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Differential inner product: the bilinear extension of
    /// `⟨x^α, x^β⟩ = δ_{αβ} · α!` (apply `f` as a constant-coefficient
    /// differential operator to `g`, evaluate at the origin).
    pub fn inner_product(&self, other: &Polynomial) -> BigRational {
        debug_assert_eq!(self.alphabet, other.alphabet);
        let mut acc = BigRational::zero();
        for (ev, c) in &self.terms {
            if let Some(d) = other.terms.get(ev) {
                acc += c * d * BigRational::from_integer(ev.factorial());
            }
        }
        acc
    }

    /// Substitute `0` for every variable of index greater than `n`.
    pub fn project(&self, n: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(ev, _)| ev.max_variable() <= n)
            .map(|(ev, c)| (ev.clone(), c.clone()))
            .collect();
        Polynomial { terms, alphabet: self.alphabet }
    }

    /// Term-wise map sending a term of total degree `p` and exponents `α` to
    /// `p!/α!` times itself.
    pub fn bar_transform(&self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(ev, c)| {
                let p = factorial(ev.total_degree() as usize);
                let ratio = BigRational::new(p, ev.factorial());
                (ev.clone(), c * ratio)
            })
            .collect();
        Polynomial { terms, alphabet: self.alphabet }
    }

    /// Swap the variables `x_a` and `x_b` (1-based) in every term.
    pub fn swap_variables(&self, a: usize, b: usize) -> Polynomial {
        Polynomial::from_terms(
            self.alphabet,
            self.terms
                .iter()
                .map(|(ev, c)| (ev.swap_variables(a, b), c.clone())),
        )
    }
}

/// `X_d = x_d − x_{d+1}` (or `Y_d` in the y alphabet).
pub fn x_difference(d: usize, alphabet: Alphabet) -> Polynomial {
    assert!(d >= 1);
    &Polynomial::variable(d, alphabet) - &Polynomial::variable(d + 1, alphabet)
}

impl std::ops::Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

/// Render `x3^2*x5`-style monomial text, or `None` for the constant.
pub(crate) fn monomial_string(ev: &ExponentVector, letter: char) -> Option<String> {
    if ev.is_unit() {
        return None;
    }
    let factors: Vec<String> = ev
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("{letter}{}", i + 1)
            } else {
                format!("{letter}{}^{e}", i + 1)
            }
        })
        .collect();
    Some(factors.join("*"))
}

/// Append one term to a polynomial rendering under the shared sign and
/// coefficient conventions (`1*` elided, leading `-` attached).
pub(crate) fn push_term(out: &mut String, first: bool, coeff: &BigRational, mono: Option<String>) {
    let negative = coeff.is_negative();
    if first {
        if negative {
            out.push('-');
        }
    } else if negative {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    let magnitude = coeff.abs();
    match mono {
        None => out.push_str(&magnitude.to_string()),
        Some(m) => {
            if !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
                out.push('*');
            }
            out.push_str(&m);
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let letter = self.alphabet.letter();
        let mut out = String::new();
        for (idx, (ev, coeff)) in self.terms.iter().rev().enumerate() {
            push_term(&mut out, idx == 0, coeff, monomial_string(ev, letter));
        }
        write!(f, "{out}")
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Polynomial> {
        Parser::new(s).parse()
    }
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { input: s.as_bytes(), pos: 0 }
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.input.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn parse(&mut self) -> Result<Polynomial> {
        let mut alphabet: Option<Alphabet> = None;
        let mut terms: Vec<(ExponentVector, BigRational)> = Vec::new();

        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.error("empty polynomial"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                None if !first => break,
                _ if first => 1,
                _ => return Err(self.error("expected '+' or '-'")),
            };
            first = false;
            self.skip_ws();
            let (ev, coeff, alpha) = self.parse_term()?;
            if let Some(a) = alpha {
                match alphabet {
                    None => alphabet = Some(a),
                    Some(prev) if prev != a => {
                        return Err(self.error("mixed x and y variables"));
                    }
                    Some(_) => {}
                }
            }
            let signed = if sign < 0 { -coeff } else { coeff };
            terms.push((ev, signed));
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
        }
        Ok(Polynomial::from_terms(alphabet.unwrap_or(Alphabet::X), terms))
    }

    /// One term: an optional rational coefficient and/or a product of
    /// variable powers joined by `*`.
    fn parse_term(&mut self) -> Result<(ExponentVector, BigRational, Option<Alphabet>)> {
        let mut coeff = BigRational::one();
        let mut exponents: Vec<u32> = Vec::new();
        let mut alphabet = None;
        let mut saw_factor = false;

        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            coeff = self.parse_rational()?;
            saw_factor = true;
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') if saw_factor => {
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(b'x') | Some(b'y') if !saw_factor => {}
                _ => break,
            }
            let (var, exp, a) = self.parse_factor()?;
            match alphabet {
                None => alphabet = Some(a),
                Some(prev) if prev != a => return Err(self.error("mixed x and y variables")),
                Some(_) => {}
            }
            if exponents.len() < var {
                exponents.resize(var, 0);
            }
            exponents[var - 1] += exp;
            saw_factor = true;
        }
        if !saw_factor {
            return Err(self.error("expected coefficient or variable"));
        }
        Ok((ExponentVector::new(exponents), coeff, alphabet))
    }

    fn parse_factor(&mut self) -> Result<(usize, u32, Alphabet)> {
        let alphabet = match self.peek() {
            Some(b'x') => Alphabet::X,
            Some(b'y') => Alphabet::Y,
            _ => return Err(self.error("expected variable")),
        };
        self.pos += 1;
        let index = self.parse_usize()?;
        if index == 0 {
            return Err(self.error("variable indices are 1-based"));
        }
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.parse_usize()?;
            u32::try_from(e).map_err(|_| self.error("exponent too large"))?
        } else {
            1
        };
        Ok((index, exp, alphabet))
    }

    fn parse_usize(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected number"));
        }
        std::str::from_utf8(&self.input[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("number too large"))
    }

    fn parse_rational(&mut self) -> Result<BigRational> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        let numer: BigInt = std::str::from_utf8(&self.input[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("bad integer"))?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let dstart = self.pos;
            while self.peek().is_some_and(|b| b.is_ascii_digit()) {
                self.pos += 1;
            }
            if dstart == self.pos {
                return Err(self.error("expected denominator"));
            }
            let denom: BigInt = std::str::from_utf8(&self.input[dstart..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.error("bad denominator"))?;
            if denom.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }
}

/// Convenience for tests and internal construction: `x_i` in the x alphabet.
pub fn xvar(i: usize) -> Polynomial {
    Polynomial::variable(i, Alphabet::X)
}
