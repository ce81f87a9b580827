//! Sparse bivariate polynomials over arbitrary-precision integers.
//!
//! Monomials are ordered lexicographically with x before y; that order makes
//! `x*y - x - y` monic-leading, so the exact division used by the splitting
//! formulas never leaves the integers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor's leading coefficient must be 1 or -1 under lex order")]
    NonUnitLeading,
    #[error("polynomial is not divisible by the divisor")]
    NotDivisible,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Exponent pair (x^a, y^b). The derived `Ord` is lexicographic with x first,
/// which is exactly the monomial order division relies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

/// Invariant: no stored coefficient is zero, so `==` on the term maps is
/// polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::term(c, 0, 0)
    }

    pub fn x() -> Self {
        Poly::term(1, 1, 0)
    }

    pub fn y() -> Self {
        Poly::term(1, 0, 1)
    }

    /// The single term c * x^a * y^b.
    pub fn term(c: impl Into<BigInt>, a: u32, b: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial { x: a, y: b }, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, a: u32, b: u32) -> BigInt {
        self.terms
            .get(&Monomial { x: a, y: b })
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Largest monomial under lex order, with its coefficient. None for zero.
    pub fn leading(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.last_key_value().map(|(m, c)| (*m, c))
    }

    pub fn max_x_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.x).max().unwrap_or(0)
    }

    pub fn max_y_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.y).max().unwrap_or(0)
    }

    fn insert_add(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = Monomial {
                    x: ma.x + mb.x,
                    y: ma.y + mb.y,
                };
                out.insert_add(m, &(ca * cb));
            }
        }
        out
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Poly {
        self.mul(&Poly::constant(c))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Swap the roles of x and y (planar duality on Tutte polynomials).
    pub fn swap_vars(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial { x: m.y, y: m.x }, c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, x0: &BigInt, y0: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            acc += c * x0.pow(m.x) * y0.pow(m.y);
        }
        acc
    }

    pub fn eval_i64(&self, x0: i64, y0: i64) -> BigInt {
        self.eval(&BigInt::from(x0), &BigInt::from(y0))
    }

    /// Exact division: returns q with self = q * d. The divisor's leading
    /// coefficient must be a unit so every quotient step stays integral; any
    /// nonzero remainder is reported as `NotDivisible`.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly, PolyError> {
        let (dm, dc) = d.leading().ok_or(PolyError::DivisionByZero)?;
        if !dc.magnitude().is_one() {
            return Err(PolyError::NonUnitLeading);
        }
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            if rm.x < dm.x || rm.y < dm.y {
                return Err(PolyError::NotDivisible);
            }
            let qm = Monomial {
                x: rm.x - dm.x,
                y: rm.y - dm.y,
            };
            // dc is 1 or -1, so this is an exact integer step.
            let qc = rc * dc;
            let t = Poly::term(qc.clone(), qm.x, qm.y);
            rem = rem.sub(&t.mul(d));
            quot.insert_add(qm, &qc);
        }
        Ok(quot)
    }

    /// Canonical text: terms by x-degree descending then y-degree descending,
    /// `c*x^a*y^b` with unit coefficients and unit exponents omitted.
    pub fn to_canonical_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.sign() == Sign::Minus;
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.magnitude();
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || (m.x == 0 && m.y == 0) {
                parts.push(mag.to_string());
            }
            if m.x == 1 {
                parts.push("x".to_string());
            } else if m.x > 1 {
                parts.push(format!("x^{}", m.x));
            }
            if m.y == 1 {
                parts.push("y".to_string());
            } else if m.y > 1 {
                parts.push(format!("y^{}", m.y));
            }
            out.push_str(&parts.join("*"));
        }
        out
    }

    /// Inverse of `to_canonical_text`; also tolerates omitted `*` between a
    /// coefficient or variable and the next factor, and arbitrary spacing.
    pub fn parse(text: &str) -> Result<Poly, PolyError> {
        Parser::new(text).parse()
    }

    /// JSON form: `[[a, b, "coefficient"], ...]` in canonical term order.
    pub fn to_json(&self) -> String {
        let triples: Vec<(u32, u32, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| (m.x, m.y, c.to_string()))
            .collect();
        serde_json::to_string(&triples).expect("serializing plain triples cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Poly, PolyError> {
        let triples: Vec<(u32, u32, String)> =
            serde_json::from_str(text).map_err(|e| PolyError::Parse {
                pos: e.column().saturating_sub(1),
                msg: e.to_string(),
            })?;
        let mut out = Poly::zero();
        for (a, b, c) in triples {
            let c: BigInt = c.parse().map_err(|_| PolyError::Parse {
                pos: 0,
                msg: format!("bad coefficient {c:?}"),
            })?;
            out.insert_add(Monomial { x: a, y: b }, &c);
        }
        Ok(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_text())
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs)
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::sub(self, rhs)
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, msg: impl Into<String>) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Poly, PolyError> {
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.error("empty input"));
        }
        let mut out = Poly::zero();
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
                None => return Err(self.error("expected a term")),
                Some(_) if first => 1,
                Some(c) => {
                    return Err(self.error(format!("expected + or -, found {:?}", c as char)))
                }
            };
            self.skip_ws();
            let term = self.parse_term()?;
            out = out.add(&term.scale(sign));
            first = false;
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
        }
        Ok(out)
    }

    /// term := digits? (['*'] var)* with at least one of the two present;
    /// var := ('x'|'y') ('^' digits)?
    fn parse_term(&mut self) -> Result<Poly, PolyError> {
        let mut coeff: Option<BigInt> = None;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = Some(self.parse_int()?);
        }
        let mut xe: u32 = 0;
        let mut ye: u32 = 0;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
            }
            match self.peek() {
                Some(b'x') | Some(b'y') => {
                    let var = self.bytes[self.pos];
                    self.pos += 1;
                    let mut e: u32 = 1;
                    self.skip_ws();
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        let v = self.parse_int()?;
                        e = u32::try_from(v).map_err(|_| self.error("exponent out of range"))?;
                    }
                    if var == b'x' {
                        xe = xe
                            .checked_add(e)
                            .ok_or_else(|| self.error("exponent overflow"))?;
                    } else {
                        ye = ye
                            .checked_add(e)
                            .ok_or_else(|| self.error("exponent overflow"))?;
                    }
                }
                _ => break,
            }
        }
        match (coeff, xe, ye) {
            (None, 0, 0) => Err(self.error("expected a term")),
            (c, a, b) => Ok(Poly::term(c.unwrap_or_else(BigInt::one), a, b)),
        }
    }

    fn parse_int(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        s.parse().map_err(|_| self.error("bad integer"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn add_cancels() {
        let sum = p("x + y").add(&p("x - y"));
        assert_eq!(sum, p("2*x"));
        assert_eq!(p("x^2 + x + y").add(&Poly::zero()), p("x^2 + x + y"));
        assert_eq!(p("x^2+x+y").add(&p("x^2+x+y")), p("2x^2 + 2x + 2y"));
    }

    #[test]
    fn mul_basics() {
        assert_eq!(p("x+1").mul(&p("y+1")), p("xy + x + y + 1"));
        assert_eq!(p("x^3+2y").mul(&Poly::one()), p("x^3+2y"));
        assert_eq!(p("x+y").mul(&p("x-y")), p("x^2 - y^2"));
    }

    #[test]
    fn div_exact_recovers_factor() {
        let d = p("xy - x - y");
        let q = p("x + y");
        assert_eq!(q.mul(&d).div_exact(&d).unwrap(), q);
        assert_eq!(Poly::zero().div_exact(&d).unwrap(), Poly::zero());
    }

    #[test]
    fn div_exact_two_cycle_numerator() {
        // Splitting numerator for H1 = H2 = K2 glued into the 2-cycle:
        // (y-1)*x*x + (x-1)*y*y - x*y - y*x over (xy-x-y) is T(C2) = x + y.
        let num = p("y-1")
            .mul(&p("x^2"))
            .add(&p("x-1").mul(&p("y^2")))
            .sub(&p("2xy"));
        assert_eq!(num.div_exact(&p("xy-x-y")).unwrap(), p("x + y"));
    }

    #[test]
    fn div_errors() {
        assert_eq!(
            p("x").div_exact(&Poly::zero()),
            Err(PolyError::DivisionByZero)
        );
        assert_eq!(p("x^2").div_exact(&p("2x")), Err(PolyError::NonUnitLeading));
        assert_eq!(p("x + 1").div_exact(&p("x")), Err(PolyError::NotDivisible));
    }

    #[test]
    fn eval_points() {
        assert_eq!(p("x^2 + x + y").eval_i64(1, 1), BigInt::from(3));
        assert_eq!(p("x^5+x^4+x^3+x^2+x+y").eval_i64(1, 1), BigInt::from(6));
        assert_eq!(p("x^3 - 2y").eval_i64(-2, 3), BigInt::from(-14));
    }

    #[test]
    fn canonical_text_format() {
        assert_eq!(p("y + x + x^2").to_canonical_text(), "x^2 + x + y");
        assert_eq!(Poly::zero().to_canonical_text(), "0");
        assert_eq!(Poly::parse("0").unwrap(), Poly::zero());
        assert_eq!(p("-x^5y").to_canonical_text(), "-x^5*y");
        assert_eq!(
            p("3x^2y^4 - 7 + y").to_canonical_text(),
            "3*x^2*y^4 + y - 7"
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "x +", "5^2", "x^", "z", "x**2", "1 2"] {
            assert!(
                matches!(Poly::parse(bad), Err(PolyError::Parse { .. })),
                "{bad:?} should fail"
            );
        }
    }

    #[test]
    fn json_round_trip() {
        let poly = p("2x^3y - 5x + 7y^2 - 1");
        let json = poly.to_json();
        assert_eq!(Poly::from_json(&json).unwrap(), poly);
        assert_eq!(
            p("x^2 + x + y").to_json(),
            r#"[[2,0,"1"],[1,0,"1"],[0,1,"1"]]"#
        );
    }

    #[test]
    fn swap_vars_involution() {
        let poly = p("x^3y - 2x + y^2");
        assert_eq!(poly.swap_vars().swap_vars(), poly);
        assert_eq!(p("x").swap_vars(), p("y"));
    }

    prop_compose! {
        fn arb_poly()(terms in prop::collection::vec(((0u32..6, 0u32..6), -20i64..=20), 0..6)) -> Poly {
            let mut out = Poly::zero();
            for ((a, b), c) in terms {
                out = out.add(&Poly::term(c, a, b));
            }
            out
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn div_round_trip(a in arb_poly(), which in 0usize..3) {
            let d = match which {
                0 => Poly::parse("xy - x - y").unwrap(),
                1 => Poly::x(),
                _ => Poly::parse("x^2y - 1").unwrap(),
            };
            prop_assert_eq!(a.mul(&d).div_exact(&d).unwrap(), a);
        }

        #[test]
        fn text_round_trip(a in arb_poly()) {
            prop_assert_eq!(Poly::parse(&a.to_canonical_text()).unwrap(), a.clone());
            prop_assert_eq!(Poly::from_json(&a.to_json()).unwrap(), a);
        }

        #[test]
        fn eval_is_homomorphism(a in arb_poly(), b in arb_poly(), x0 in -5i64..=5, y0 in -5i64..=5) {
            let (x0, y0) = (BigInt::from(x0), BigInt::from(y0));
            prop_assert_eq!(a.add(&b).eval(&x0, &y0), a.eval(&x0, &y0) + b.eval(&x0, &y0));
            prop_assert_eq!(a.mul(&b).eval(&x0, &y0), a.eval(&x0, &y0) * b.eval(&x0, &y0));
        }
    }
}
