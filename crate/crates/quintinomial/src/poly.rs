//! Dense univariate polynomials over the integers.
//!
//! Coefficients are `BigInt`, stored low-to-high: `coeffs[i]` is the
//! coefficient of `x^i`.  The zero polynomial is the empty vector, and every
//! constructor/operation keeps the representation normalized (no trailing
//! zero limbs), so `==` is structural equality of polynomials.
//!
//! Resultants use the subresultant polynomial remainder sequence — not naive
//! fraction-field Euclid — so intermediate coefficient growth stays polynomial
//! while every division in sight is exact.  The sign convention is pinned to
//! the Sylvester determinant; `oracle::sylvester_resultant` re-derives it
//! independently in the test suite.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

use crate::arith::gcd_big;
use crate::error::Error;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::from_coeffs(vec![c.into()])
    }

    /// `x^deg` with unit coefficient.
    pub fn monomial(deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn lc(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().map_or(false, |c| c.is_one())
    }

    pub fn scalar_mul(&self, k: &BigInt) -> IntPoly {
        if k.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `p(x^k)`; `k >= 1`.
    pub fn compose_x_pow(&self, k: usize) -> IntPoly {
        assert!(k >= 1, "compose_x_pow needs k >= 1");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        IntPoly { coeffs }
    }

    /// Pseudo-division: returns `(q, r)` with
    /// `lc(d)^(deg self - deg d + 1) * self = q*d + r` and `deg r < deg d`.
    pub fn pseudo_div_rem(&self, d: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = d.degree().unwrap();
        let Some(m) = self.degree() else {
            return Ok((IntPoly::zero(), IntPoly::zero()));
        };
        if m < n {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let lcd = d.lc().unwrap().clone();
        let mut q = IntPoly::zero();
        let mut r = self.clone();
        let mut scale_left = m - n + 1;
        while !r.is_zero() && r.degree().unwrap() >= n {
            let k = r.degree().unwrap() - n;
            let lead = r.lc().unwrap().clone();
            let term = IntPoly::monomial(k).scalar_mul(&lead);
            q = &q.scalar_mul(&lcd) + &term;
            r = &r.scalar_mul(&lcd) - &(&term * d);
            scale_left -= 1;
        }
        // Top up so the identity uses exactly lc(d)^(m-n+1).
        for _ in 0..scale_left {
            q = q.scalar_mul(&lcd);
            r = r.scalar_mul(&lcd);
        }
        Ok((q, r))
    }

    /// Exact division in `Z[x]`: `Some(q)` iff `self == q * d` with integer `q`.
    pub fn exact_div(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let n = d.degree().unwrap();
        let m = self.degree().unwrap();
        if m < n {
            return None;
        }
        let lcd = d.lc().unwrap();
        let mut q = vec![BigInt::zero(); m - n + 1];
        let mut r = self.clone();
        while !r.is_zero() && r.degree().unwrap() >= n {
            let k = r.degree().unwrap() - n;
            let (quot, rem) = num_integer::div_rem(r.lc().unwrap().clone(), lcd.clone());
            if !rem.is_zero() {
                return None;
            }
            q[k] = quot.clone();
            r = &r - &(&IntPoly::monomial(k).scalar_mul(&quot) * d);
        }
        r.is_zero().then(|| IntPoly::from_coeffs(q))
    }

    /// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = gcd_big(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Splits into `(content, primitive)` with a positive content; the sign
    /// stays with the primitive part, e.g. `-4x -> (4, -x)`.
    pub fn content_and_primitive(&self) -> (BigInt, IntPoly) {
        if self.is_zero() {
            return (BigInt::zero(), IntPoly::zero());
        }
        let c = self.content();
        let prim = IntPoly::from_coeffs(self.coeffs.iter().map(|x| x / &c).collect());
        (c, prim)
    }

    /// Comma-separated ascending coefficients, the CLI/file exchange format.
    pub fn to_csv(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl std::ops::Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly { coeffs }
    }
}

/// Resultant of two nonzero polynomials, Sylvester-determinant convention:
/// `resultant(x-2, x-3) == -1`.
///
/// Subresultant PRS after Cohen, "A Course in Computational Algebraic Number
/// Theory", alg. 3.3.7; every interior division is exact by the subresultant
/// theory.
pub fn resultant(p: &IntPoly, q: &IntPoly) -> Result<BigInt> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut a = p.clone();
    let mut b = q.clone();
    let mut sign = 1i8;
    if a.degree() < b.degree() {
        if a.degree().unwrap() % 2 == 1 && b.degree().unwrap() % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.degree() == Some(0) {
        // Res(a, c) = c^(deg a); covers the constant/constant case too.
        return Ok(if sign < 0 { -BigInt::one() } else { BigInt::one() }
            * b.coeff(0).pow(a.degree().unwrap() as u32));
    }
    let (cont_a, mut a) = a.content_and_primitive();
    let (cont_b, mut b) = b.content_and_primitive();
    // Contents factor out of the resultant with the opposite degrees.
    let mut t = cont_a.pow(b.degree().unwrap() as u32) * cont_b.pow(a.degree().unwrap() as u32);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let (_, r) = a.pseudo_div_rem(&b)?;
        if r.is_zero() {
            // Nonconstant common factor: the resultant vanishes.
            return Ok(BigInt::zero());
        }
        a = b;
        let divisor = &g * h.pow(delta);
        b = r
            .exact_div(&IntPoly::constant(divisor))
            .expect("subresultant interior division is exact");
        g = a.lc().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            // h^(1-delta) g^delta, always an exact integer.
            let num = g.pow(delta);
            if delta == 1 {
                num
            } else {
                num / h.pow(delta - 1)
            }
        };
        if b.degree().unwrap() == 0 {
            break;
        }
    }
    let da = a.degree().unwrap() as u32;
    let res_prim = if da == 1 {
        b.coeff(0)
    } else {
        b.coeff(0).pow(da) / h.pow(da - 1)
    };
    t *= res_prim;
    if sign < 0 {
        t = -t;
    }
    Ok(t)
}

/// Discriminant via `(-1)^(d(d-1)/2) * resultant(p, p') / lc(p)`.
pub fn discriminant(p: &IntPoly) -> Result<BigInt> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if d < 1 {
        return Err(Error::pre("discriminant needs degree >= 1"));
    }
    if d == 1 {
        return Ok(BigInt::one());
    }
    let res = resultant(p, &p.derivative())?;
    let signed = if (d * (d - 1) / 2) % 2 == 1 { -res } else { res };
    let (quot, rem) = num_integer::div_rem(signed, p.lc().unwrap().clone());
    debug_assert!(rem.is_zero(), "lc always divides res(p, p')");
    Ok(quot)
}

impl fmt::Display for IntPoly {
    /// Human-readable descending form, e.g. `x^4 + x^3 + 2x^2 + x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    /// Parses the comma-separated ascending coefficient form, `"1,1,2,1,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let c = BigInt::from_str(tok)
                .map_err(|_| Error::InvalidInput(format!("bad coefficient {tok:?}")))?;
            coeffs.push(c);
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

// JSON form: array of decimal strings, ascending — exact at any size.
impl serde::Serialize for IntPoly {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> serde::Deserialize<'de> for IntPoly {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(de)?;
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in strings {
            coeffs.push(
                BigInt::from_str(&s)
                    .map_err(|e| serde::de::Error::custom(format!("bad coefficient: {e}")))?,
            );
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn normalization_and_degree() {
        assert!(IntPoly::from_i64(&[0, 0, 0]).is_zero());
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(p(&[1, 0, 3]).degree(), Some(2));
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
    }

    #[test]
    fn product_of_quadratics() {
        // (x^2+1)(x^2+x+1) = x^4+x^3+2x^2+x+1
        let prod = &p(&[1, 0, 1]) * &p(&[1, 1, 1]);
        assert_eq!(prod, p(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn eval_horner() {
        // x^3 - 2x + 5 at -3
        assert_eq!(p(&[5, -2, 0, 1]).eval(&BigInt::from(-3)), BigInt::from(-16));
        assert_eq!(IntPoly::zero().eval(&BigInt::from(7)), BigInt::zero());
    }

    #[test]
    fn derivative_basic() {
        assert_eq!(p(&[7, 3, 0, 2]).derivative(), p(&[3, 0, 6]));
        assert_eq!(p(&[9]).derivative(), IntPoly::zero());
    }

    #[test]
    fn content_keeps_sign_in_primitive_part() {
        let (c, prim) = p(&[0, -4]).content_and_primitive();
        assert_eq!(c, BigInt::from(4));
        assert_eq!(prim, p(&[0, -1]));
        let (c, prim) = p(&[6, -9, 12]).content_and_primitive();
        assert_eq!(c, BigInt::from(3));
        assert_eq!(prim, p(&[2, -3, 4]));
    }

    #[test]
    fn exact_division() {
        let a = &p(&[1, 1, 2, 1, 1]) * &p(&[-3, 2]);
        assert_eq!(a.exact_div(&p(&[-3, 2])), Some(p(&[1, 1, 2, 1, 1])));
        assert_eq!(p(&[1, 1, 1]).exact_div(&p(&[1, 1])), None);
        assert_eq!(p(&[2, 2]).exact_div(&p(&[0, 4])), None);
    }

    #[test]
    fn resultant_frozen_values() {
        assert_eq!(
            resultant(&p(&[-2, 1]), &p(&[-3, 1])).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            resultant(&p(&[-1, 0, 1]), &p(&[-4, 0, 1])).unwrap(),
            BigInt::from(9)
        );
        // Shared factor x-1 => 0.
        assert_eq!(
            resultant(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(),
            BigInt::zero()
        );
        // Constant arguments: c^(deg q).
        assert_eq!(resultant(&p(&[7]), &p(&[1, 2, 3])).unwrap(), BigInt::from(49));
        assert_eq!(resultant(&p(&[4]), &p(&[9])).unwrap(), BigInt::one());
        assert_eq!(
            resultant(&IntPoly::zero(), &p(&[1, 1])).unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn discriminant_frozen_values() {
        // Cyclotomic Phi_5.
        assert_eq!(
            discriminant(&p(&[1, 1, 1, 1, 1])).unwrap(),
            BigInt::from(125)
        );
        assert_eq!(discriminant(&p(&[1, 0, 1])).unwrap(), BigInt::from(-4));
        // ax^2+bx+c -> b^2-4ac.
        assert_eq!(discriminant(&p(&[5, 3, 2])).unwrap(), BigInt::from(9 - 40));
        assert_eq!(discriminant(&p(&[1, 1])).unwrap(), BigInt::one());
    }

    #[test]
    fn resultant_matches_sylvester_oracle_on_random_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5e5u64);
        for _ in 0..300 {
            let da = rng.gen_range(0..=5);
            let db = rng.gen_range(0..=5);
            let mk = |deg: usize, rng: &mut rand_chacha::ChaCha8Rng| loop {
                let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-9..=9)).collect();
                c[deg] = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
                let q = IntPoly::from_i64(&c);
                if !q.is_zero() {
                    break q;
                }
            };
            let a = mk(da, &mut rng);
            let b = mk(db, &mut rng);
            assert_eq!(
                resultant(&a, &b).unwrap(),
                crate::oracle::sylvester_resultant(&a, &b),
                "a={a} b={b}"
            );
        }
    }

    #[test]
    fn resultant_against_linear_pins_the_evaluation_convention() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x11ea);
        for _ in 0..50 {
            let deg = rng.gen_range(1..=6);
            let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-9..=9)).collect();
            c[deg] = rng.gen_range(1..=9);
            let f = IntPoly::from_i64(&c);
            let a = rng.gen_range(-9..=9i64);
            let lin = IntPoly::from_i64(&[-a, 1]); // x - a
            let expect = {
                let v = f.eval(&BigInt::from(a));
                if deg % 2 == 1 {
                    -v
                } else {
                    v
                }
            };
            assert_eq!(resultant(&f, &lin).unwrap(), expect);
        }
    }

    #[test]
    fn csv_and_display_forms() {
        let f = p(&[1, 1, 2, 1, 1]);
        assert_eq!(f.to_csv(), "1,1,2,1,1");
        assert_eq!(f.to_string(), "x^4 + x^3 + 2x^2 + x + 1");
        assert_eq!("1,1,2,1,1".parse::<IntPoly>().unwrap(), f);
        assert_eq!(p(&[-1, 0, -3]).to_string(), "-3x^2 - 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert!(" 1, x, 3".parse::<IntPoly>().is_err());
    }

    #[test]
    fn json_roundtrip_is_exact() {
        let f = p(&[0, -4, 0, 123]);
        let js = serde_json::to_string(&f).unwrap();
        assert_eq!(js, r#"["0","-4","0","123"]"#);
        assert_eq!(serde_json::from_str::<IntPoly>(&js).unwrap(), f);
    }

    proptest! {
        #[test]
        fn ring_laws(a in vec_coeffs(), b in vec_coeffs(), c in vec_coeffs()) {
            let (a, b, c) = (IntPoly::from_i64(&a), IntPoly::from_i64(&b), IntPoly::from_i64(&c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn pseudo_division_identity(a in vec_coeffs(), b in vec_coeffs()) {
            let a = IntPoly::from_i64(&a);
            let b = IntPoly::from_i64(&b);
            prop_assume!(!b.is_zero());
            let (q, r) = a.pseudo_div_rem(&b).unwrap();
            let (da, db) = (a.degree().map_or(-1, |d| d as i64), b.degree().unwrap() as i64);
            let scale = if da >= db {
                b.lc().unwrap().pow((da - db + 1) as u32)
            } else {
                num_bigint::BigInt::from(1)
            };
            prop_assert_eq!(a.scalar_mul(&scale), &(&q * &b) + &r);
            prop_assert!(r.is_zero() || r.degree().unwrap() < b.degree().unwrap());
        }

        #[test]
        fn content_times_primitive_reassembles(a in vec_coeffs()) {
            let a = IntPoly::from_i64(&a);
            let (c, prim) = a.content_and_primitive();
            prop_assert_eq!(prim.scalar_mul(&c), a.clone());
            if !a.is_zero() {
                prop_assert_eq!(prim.content(), num_bigint::BigInt::from(1));
            }
        }

        #[test]
        fn parse_display_roundtrip(a in vec_coeffs()) {
            let a = IntPoly::from_i64(&a);
            prop_assert_eq!(a.to_csv().parse::<IntPoly>().unwrap(), a.clone());
        }
    }

    fn vec_coeffs() -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-20i64..=20, 0..=7)
    }
}
