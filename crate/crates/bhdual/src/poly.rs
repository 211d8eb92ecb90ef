//! Exact sparse polynomials in the variables `x`, `y`, `z` over the rationals.
//!
//! Everything downstream — classification, weight systems, cusp coordinate
//! transforms — works on these polynomials, so the representation is kept
//! canonical at all times: a term map from monomials to nonzero rational
//! coefficients. No floating point appears anywhere in this crate.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact coefficient type: arbitrary-precision rational.
pub type Coeff = BigRational;

/// One of the three variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    /// All variables, in the fixed order `x, y, z`.
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    /// Index of the variable in the fixed order: x → 0, y → 1, z → 2.
    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }

    /// Inverse of [`Var::index`]. Panics on an index outside 0..3.
    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
        })
    }
}

/// A monomial `x^ex · y^ey · z^ez`.
///
/// The derived `Ord` is lexicographic on `(ex, ey, ez)`; the canonical *term
/// order* used for rendering and for exponent-matrix rows is the reverse
/// (lexicographic descending), so that `x`-heavy terms come first and the
/// Fermat polynomial prints as `x^2+y^3+z^7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub ex: u32,
    pub ey: u32,
    pub ez: u32,
}

impl Monomial {
    /// The empty monomial (the constant `1`).
    pub const ONE: Monomial = Monomial { ex: 0, ey: 0, ez: 0 };

    pub fn new(ex: u32, ey: u32, ez: u32) -> Monomial {
        Monomial { ex, ey, ez }
    }

    /// The exponent of a single variable.
    pub fn exponent(self, v: Var) -> u32 {
        match v {
            Var::X => self.ex,
            Var::Y => self.ey,
            Var::Z => self.ez,
        }
    }

    /// Exponents as an array indexed by [`Var::index`].
    pub fn exponents(self) -> [u32; 3] {
        [self.ex, self.ey, self.ez]
    }

    /// Total degree.
    pub fn degree(self) -> u64 {
        self.ex as u64 + self.ey as u64 + self.ez as u64
    }

    /// Product of two monomials (exponents add; panics on u32 overflow,
    /// which is unreachable for the degrees this crate manipulates).
    pub fn product(self, other: Monomial) -> Monomial {
        Monomial {
            ex: self.ex.checked_add(other.ex).expect("exponent overflow"),
            ey: self.ey.checked_add(other.ey).expect("exponent overflow"),
            ez: self.ez.checked_add(other.ez).expect("exponent overflow"),
        }
    }
}

impl fmt::Display for Monomial {
    /// Factors in `x, y, z` order, `^1` omitted; the constant monomial
    /// renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return f.write_str("1");
        }
        for (v, e) in Var::ALL.into_iter().zip(self.exponents()) {
            match e {
                0 => {}
                1 => write!(f, "{v}")?,
                _ => write!(f, "{v}^{e}")?,
            }
        }
        Ok(())
    }
}

/// A sparse polynomial in `x, y, z` with rational coefficients.
///
/// Canonical form: the term map never stores a zero coefficient, so equality
/// of values is equality of polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    /// The zero polynomial (empty term map).
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Coeff) -> Polynomial {
        Polynomial::from_terms([(Monomial::ONE, c)])
    }

    /// The polynomial `1`.
    pub fn one() -> Polynomial {
        Polynomial::constant(Coeff::one())
    }

    /// The single-variable polynomial `v`.
    pub fn variable(v: Var) -> Polynomial {
        let mut m = Monomial::ONE;
        match v {
            Var::X => m.ex = 1,
            Var::Y => m.ey = 1,
            Var::Z => m.ez = 1,
        }
        Polynomial::from_terms([(m, Coeff::one())])
    }

    /// Build from (monomial, coefficient) pairs; repeated monomials are
    /// summed and zero coefficients dropped.
    pub fn from_terms(pairs: impl IntoIterator<Item = (Monomial, Coeff)>) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in pairs {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of a monomial, if present.
    pub fn coeff(&self, m: Monomial) -> Option<&Coeff> {
        self.terms.get(&m)
    }

    /// Terms in canonical (lexicographic descending) order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (Monomial, &Coeff)> {
        self.terms.iter().rev().map(|(m, c)| (*m, c))
    }

    /// The set of monomials with nonzero coefficient, descending.
    pub fn support(&self) -> Vec<Monomial> {
        self.terms.keys().rev().copied().collect()
    }

    /// Whether `v` occurs (with positive exponent) in some term.
    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    /// `self` raised to a non-negative integer power, by repeated exact
    /// multiplication.
    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Simultaneous substitution: every variable is replaced by its image
    /// under `s` (identity where unset), and the composite is expanded
    /// exactly. Powers of each image are computed once per needed exponent.
    pub fn substitute(&self, s: &Substitution) -> Polynomial {
        // Power tables: powers[v][e] = image(v)^e, built lazily up to the
        // largest exponent of v occurring in self.
        let mut powers: [Vec<Polynomial>; 3] = [
            vec![Polynomial::one()],
            vec![Polynomial::one()],
            vec![Polynomial::one()],
        ];
        for (i, v) in Var::ALL.into_iter().enumerate() {
            let image = s.image(v);
            let max_e = self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0);
            for _ in 0..max_e {
                let next = &powers[i][powers[i].len() - 1] * &image;
                powers[i].push(next);
            }
        }
        let mut acc = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for (i, e) in m.exponents().into_iter().enumerate() {
                t = &t * &powers[i][e as usize];
            }
            for (tm, tc) in t.terms {
                acc.add_term(tm, tc);
            }
        }
        acc
    }

    /// The 3×3 exponent matrix of a three-term polynomial in all three
    /// variables. Rows are the exponent vectors of the terms in canonical
    /// (lexicographic descending) order, so the row order is independent of
    /// how the input text listed the terms.
    pub fn exponent_matrix(&self) -> Result<[[u64; 3]; 3], PolyError> {
        if self.num_terms() != 3 {
            return Err(PolyError::NotThreeMonomials(self.num_terms()));
        }
        for v in Var::ALL {
            if !self.involves(v) {
                return Err(PolyError::MissingVariable(v));
            }
        }
        let mut rows = [[0u64; 3]; 3];
        for (row, (m, _)) in rows.iter_mut().zip(self.terms_desc()) {
            for (cell, e) in row.iter_mut().zip(m.exponents()) {
                *cell = e as u64;
            }
        }
        Ok(rows)
    }

    /// Parse the text grammar; see the module-level grammar notes on
    /// [`parse_polynomial`].
    pub fn parse(text: &str) -> Result<Polynomial, ParseError> {
        parse_polynomial(text)
    }
}

impl fmt::Display for Polynomial {
    /// Canonical rendering: terms in lexicographic descending monomial
    /// order, joined by `+`/`-`; `*` omitted, `^1` omitted, unit
    /// coefficients omitted. The zero polynomial renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            let a = c.abs();
            if m == Monomial::ONE {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.product(*m2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// A simultaneous variable substitution x, y, z → polynomials; variables
/// without an explicit image map to themselves.
#[derive(Debug, Clone, Default)]
pub struct Substitution {
    images: [Option<Polynomial>; 3],
}

impl Substitution {
    /// The identity substitution.
    pub fn identity() -> Substitution {
        Substitution::default()
    }

    /// Set the image of one variable (builder style).
    pub fn with(mut self, v: Var, image: Polynomial) -> Substitution {
        self.images[v.index()] = Some(image);
        self
    }

    /// The image of `v` (the variable itself if unset).
    pub fn image(&self, v: Var) -> Polynomial {
        self.images[v.index()]
            .clone()
            .unwrap_or_else(|| Polynomial::variable(v))
    }
}

/// Structural errors raised when a polynomial is not a candidate exponent
/// matrix.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("expected exactly 3 monomials, found {0}")]
    NotThreeMonomials(usize),
    #[error("variable {0} appears in no monomial")]
    MissingVariable(Var),
}

/// Parse errors, annotated with the byte position in the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: expected {expected}")]
    Syntax { pos: usize, expected: &'static str },
    #[error("unknown variable '{found}' at position {pos}: only x, y, z are allowed")]
    Variable { pos: usize, found: char },
    #[error("zero denominator at position {pos}")]
    ZeroDenominator { pos: usize },
    #[error("exponent at position {pos} is out of range")]
    ExponentTooLarge { pos: usize },
}

/// Parse a polynomial from ASCII text.
///
/// Grammar (whitespace ignored everywhere):
///
/// ```text
/// poly   := ['-'] term (('+'|'-') term)*
/// term   := coeff | [coeff ['*']] factor (['*'] factor)*
/// coeff  := uint ['/' uint]
/// factor := ('x'|'y'|'z') ['^' uint]
/// ```
///
/// Juxtaposition multiplies (`zy^3` is `z·y³`), coefficients may be
/// rational (`3/2xy`), and like terms cancel, so `x^2-x^2` parses to the
/// zero polynomial. Printing a parsed polynomial and re-parsing is the
/// identity.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    p.parse_poly()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_poly(&mut self) -> Result<Polynomial, ParseError> {
        let mut out = Polynomial::zero();
        self.skip_ws();
        let mut negate = self.eat(b'-');
        loop {
            let (m, c) = self.parse_term()?;
            out.add_term(m, if negate { -c } else { c });
            self.skip_ws();
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(_) => {
                    return Err(ParseError::Syntax {
                        pos: self.pos,
                        expected: "'+', '-', or end of input",
                    })
                }
            }
            self.pos += 1;
            self.skip_ws();
        }
    }

    /// One term: an optional coefficient followed by zero or more variable
    /// factors (a bare coefficient is a valid constant term).
    fn parse_term(&mut self) -> Result<(Monomial, Coeff), ParseError> {
        self.skip_ws();
        let mut mono = Monomial::ONE;
        let coeff = match self.peek() {
            Some(b) if b.is_ascii_digit() => self.parse_coeff()?,
            Some(_) => {
                let (v, e) = self.parse_factor()?;
                mono = mono.product(var_power(v, e));
                Coeff::one()
            }
            None => {
                return Err(ParseError::Syntax {
                    pos: self.pos,
                    expected: "a term",
                })
            }
        };
        loop {
            self.skip_ws();
            let explicit_star = self.eat(b'*');
            if explicit_star {
                self.skip_ws();
            }
            match self.peek() {
                Some(b) if b.is_ascii_alphabetic() => {
                    let (v, e) = self.parse_factor()?;
                    mono = mono.product(var_power(v, e));
                }
                _ if explicit_star => {
                    // A '*' must be followed by a factor.
                    return Err(ParseError::Syntax {
                        pos: self.pos,
                        expected: "a variable after '*'",
                    });
                }
                _ => break,
            }
        }
        Ok((mono, coeff))
    }

    fn parse_coeff(&mut self) -> Result<Coeff, ParseError> {
        let numer = self.parse_bigint()?;
        self.skip_ws();
        if self.eat(b'/') {
            self.skip_ws();
            let denom_pos = self.pos;
            let denom = self.parse_bigint()?;
            if denom.is_zero() {
                return Err(ParseError::ZeroDenominator { pos: denom_pos });
            }
            Ok(Coeff::new(numer, denom))
        } else {
            Ok(Coeff::from_integer(numer))
        }
    }

    fn parse_bigint(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::Syntax {
                pos: start,
                expected: "an unsigned integer",
            });
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(digits.parse::<BigInt>().unwrap())
    }

    fn parse_factor(&mut self) -> Result<(Var, u32), ParseError> {
        let pos = self.pos;
        let v = match self.peek() {
            Some(b'x') => Var::X,
            Some(b'y') => Var::Y,
            Some(b'z') => Var::Z,
            Some(b) if b.is_ascii_alphabetic() => {
                return Err(ParseError::Variable {
                    pos,
                    found: b as char,
                })
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos,
                    expected: "a variable (x, y, or z)",
                })
            }
        };
        self.pos += 1;
        self.skip_ws();
        if self.eat(b'^') {
            self.skip_ws();
            let epos = self.pos;
            let digits = self.parse_bigint()?;
            let e: u32 = digits
                .try_into()
                .map_err(|_| ParseError::ExponentTooLarge { pos: epos })?;
            Ok((v, e))
        } else {
            Ok((v, 1))
        }
    }
}

fn var_power(v: Var, e: u32) -> Monomial {
    let mut m = Monomial::ONE;
    match v {
        Var::X => m.ex = e,
        Var::Y => m.ey = e,
        Var::Z => m.ez = e,
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Polynomial {
        parse_polynomial(text).expect(text)
    }

    #[test]
    fn parses_fermat() {
        let f = p("x^2+y^3+z^7");
        assert_eq!(f.num_terms(), 3);
        for (_, c) in f.terms_desc() {
            assert!(c.is_one());
        }
        assert_eq!(f.to_string(), "x^2+y^3+z^7");
    }

    #[test]
    fn parses_loop_monomials() {
        let f = p("x^3y+y^2z+z^2x");
        let support = f.support();
        assert_eq!(
            support,
            vec![
                Monomial::new(3, 1, 0),
                Monomial::new(1, 0, 2),
                Monomial::new(0, 2, 1),
            ]
        );
    }

    #[test]
    fn cancellation_yields_zero() {
        assert!(p("x^2 - x^2").is_zero());
        assert_eq!(p("x^2-x^2").to_string(), "0");
    }

    #[test]
    fn juxtaposition_and_stars_agree() {
        assert_eq!(p("zy^3"), p("z*y^3"));
        assert_eq!(p("2*x*y"), p("2xy"));
        assert_eq!(p("x y z"), p("xyz"));
        assert_eq!(p("x^2x"), p("x^3"));
    }

    #[test]
    fn rational_coefficients() {
        let f = p("3/2x + 1/2x");
        assert_eq!(f, p("2x"));
        assert_eq!(p("2/4xy").to_string(), "1/2xy");
    }

    #[test]
    fn leading_minus_and_constants() {
        assert_eq!(p("-x+1").to_string(), "-x+1");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("5").to_string(), "5");
        assert_eq!(p("-3/7").to_string(), "-3/7");
    }

    #[test]
    fn rendering_is_canonical() {
        // Same polynomial in scrambled term order renders identically.
        assert_eq!(p("z^7 + x^2 + y^3").to_string(), "x^2+y^3+z^7");
        assert_eq!(p("y^2z + x^3y + z^2x").to_string(), "x^3y+xz^2+y^2z");
        // Unit coefficient, '^1', and '*' are all omitted.
        assert_eq!(p("1*x^1*y^1").to_string(), "xy");
    }

    #[test]
    fn print_parse_roundtrip() {
        for text in [
            "x^2+y^3+z^7",
            "x^3y+xz^2+y^2z",
            "-2xz^4+x^2+z^8",
            "1/3x^2y-5z",
            "0",
            "7",
        ] {
            let f = p(text);
            assert_eq!(p(&f.to_string()), f, "roundtrip of {text}");
        }
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_polynomial("x^2 + + y") {
            Err(ParseError::Syntax { pos: 6, .. }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        match parse_polynomial("x^") {
            Err(ParseError::Syntax { pos: 2, .. }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        match parse_polynomial("2*") {
            Err(ParseError::Syntax { pos: 2, .. }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        match parse_polynomial("") {
            Err(ParseError::Syntax { pos: 0, .. }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn variable_errors() {
        match parse_polynomial("x + w^2") {
            Err(ParseError::Variable { pos: 4, found: 'w' }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        match parse_polynomial("2a") {
            Err(ParseError::Variable { pos: 1, found: 'a' }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn zero_denominator_rejected() {
        match parse_polynomial("1/0x") {
            Err(ParseError::ZeroDenominator { pos: 2 }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn substitute_type_ii_shear() {
        // x ↦ x − z⁴ applied to x², expanded by hand: x² − 2xz⁴ + z⁸.
        let f = p("x^2");
        let s = Substitution::identity().with(Var::X, p("x-z^4"));
        assert_eq!(f.substitute(&s), p("x^2-2xz^4+z^8"));
    }

    #[test]
    fn substitute_identity_is_identity() {
        let f = p("x^3y+y^2z+z^2x");
        assert_eq!(f.substitute(&Substitution::identity()), f);
    }

    #[test]
    fn substitute_loop_shear() {
        // z ↦ z − x applied to xyz: xyz − x²y.
        let f = p("xyz");
        let s = Substitution::identity().with(Var::Z, p("z-x"));
        assert_eq!(f.substitute(&s), p("xyz-x^2y"));
    }

    #[test]
    fn substitute_distributes_over_addition() {
        let s = Substitution::identity()
            .with(Var::X, p("x-z^2"))
            .with(Var::Y, p("y+1"));
        let a = p("x^2y - 3z");
        let b = p("xy + y^2 - 2");
        let lhs = (&a + &b).substitute(&s);
        let rhs = &a.substitute(&s) + &b.substitute(&s);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exponent_matrix_fermat() {
        let e = p("x^2+y^3+z^7").exponent_matrix().unwrap();
        assert_eq!(e, [[2, 0, 0], [0, 3, 0], [0, 0, 7]]);
    }

    #[test]
    fn exponent_matrix_is_term_order_independent() {
        let a = p("x^2y+y^3z+z^4x").exponent_matrix().unwrap();
        let b = p("z^4x+x^2y+y^3z").exponent_matrix().unwrap();
        assert_eq!(a, b);
        // Canonical (lex-descending) row order.
        assert_eq!(a, [[2, 1, 0], [1, 0, 4], [0, 3, 1]]);
    }

    #[test]
    fn exponent_matrix_errors() {
        assert_eq!(
            p("x^2+xy").exponent_matrix(),
            Err(PolyError::NotThreeMonomials(2))
        );
        assert_eq!(
            p("x^2+x^3+x^4").exponent_matrix(),
            Err(PolyError::MissingVariable(Var::Y))
        );
        assert_eq!(
            p("x^2+y^3+x^3y").exponent_matrix(),
            Err(PolyError::MissingVariable(Var::Z))
        );
    }

    #[test]
    fn pow_expands_binomials() {
        assert_eq!(p("x+y").pow(3), p("x^3+3x^2y+3xy^2+y^3"));
        assert_eq!(p("x-1").pow(0), Polynomial::one());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_monomial() -> impl Strategy<Value = Monomial> {
            (0u32..6, 0u32..6, 0u32..6).prop_map(|(a, b, c)| Monomial::new(a, b, c))
        }

        fn arb_poly() -> impl Strategy<Value = Polynomial> {
            proptest::collection::vec((arb_monomial(), -9i64..=9), 0..6).prop_map(|ts| {
                Polynomial::from_terms(
                    ts.into_iter()
                        .map(|(m, c)| (m, Coeff::from_integer(c.into()))),
                )
            })
        }

        proptest! {
            #[test]
            fn addition_commutes(a in arb_poly(), b in arb_poly()) {
                prop_assert_eq!(&a + &b, &b + &a);
            }

            #[test]
            fn multiplication_commutes(a in arb_poly(), b in arb_poly()) {
                prop_assert_eq!(&a * &b, &b * &a);
            }

            #[test]
            fn multiplication_associates(
                a in arb_poly(), b in arb_poly(), c in arb_poly()
            ) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            }

            #[test]
            fn distributivity(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            }

            #[test]
            fn subtraction_of_self_is_zero(a in arb_poly()) {
                prop_assert!((&a - &a).is_zero());
            }

            #[test]
            fn print_parse_is_identity(a in arb_poly()) {
                let text = a.to_string();
                prop_assert_eq!(parse_polynomial(&text).unwrap(), a);
            }

            #[test]
            fn substitution_is_additive(a in arb_poly(), b in arb_poly()) {
                let s = Substitution::identity()
                    .with(Var::X, parse_polynomial("x-z^2").unwrap())
                    .with(Var::Z, parse_polynomial("z-y").unwrap());
                prop_assert_eq!(
                    (&a + &b).substitute(&s),
                    &a.substitute(&s) + &b.substitute(&s)
                );
            }
        }
    }
}
