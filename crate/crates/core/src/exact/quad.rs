//! Elements `a + b·c` of the quadratic field ℚ(c), where `c² = d` for a
//! rational `d` that is not a square.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// True when `d` is the square of a rational.
pub fn is_rational_square(d: &Rational) -> bool {
    fn is_square(n: &BigInt) -> bool {
        if n.is_negative() {
            return false;
        }
        let r = n.sqrt();
        &r * &r == *n
    }
    is_square(d.numer()) && is_square(d.denom())
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    d: Rational,
}

impl QuadExt {
    /// `a + b·c` with `c² = d`; rejects square `d`.
    pub fn new(a: Rational, b: Rational, d: Rational) -> Result<Self> {
        if is_rational_square(&d) {
            return Err(Error::SquareGenerator(d.to_string()));
        }
        Ok(QuadExt { a, b, d })
    }

    pub(crate) fn new_unchecked(a: Rational, b: Rational, d: Rational) -> Self {
        QuadExt { a, b, d }
    }

    /// The generator `c` itself.
    pub fn generator(d: Rational) -> Result<Self> {
        QuadExt::new(Rational::zero(), Rational::one(), d)
    }

    pub fn from_rational(a: Rational, d: Rational) -> Result<Self> {
        QuadExt::new(a, Rational::zero(), d)
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -&self.b, d: self.d.clone() }
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.d * &self.b * &self.b
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(QuadExt { a: &self.a / &n, b: -&self.b / &n, d: self.d.clone() })
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(self * &other.inv()?)
    }

    /// `c^n` expressed as `a + b·c`.
    pub fn generator_pow(d: &Rational, n: usize) -> Self {
        let half = num_traits::pow(d.clone(), n / 2);
        if n % 2 == 0 {
            QuadExt { a: half, b: Rational::zero(), d: d.clone() }
        } else {
            QuadExt { a: Rational::zero(), b: half, d: d.clone() }
        }
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(self.d, other.d, "operands live in different quadratic fields");
    }
}

impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, o: &QuadExt) -> QuadExt {
        self.check_field(o);
        QuadExt { a: &self.a + &o.a, b: &self.b + &o.b, d: self.d.clone() }
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, o: &QuadExt) -> QuadExt {
        self.check_field(o);
        QuadExt { a: &self.a - &o.a, b: &self.b - &o.b, d: self.d.clone() }
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, o: &QuadExt) -> QuadExt {
        self.check_field(o);
        QuadExt {
            a: &self.a * &o.a + &self.d * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
            d: self.d.clone(),
        }
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { a: -&self.a, b: -&self.b, d: self.d.clone() }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "({})*c", self.b),
            (false, false) => write!(f, "{} + ({})*c", self.a, self.b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn field_operations() {
        let d = q(-1, 2);
        let x = QuadExt::new(q(1, 3), q(2, 1), d.clone()).unwrap();
        let y = QuadExt::new(q(-5, 1), q(1, 4), d.clone()).unwrap();
        let one = QuadExt::from_rational(q(1, 1), d.clone()).unwrap();
        assert_eq!(&x * &x.inv().unwrap(), one);
        assert_eq!(&(&x * &y).div(&y).unwrap(), &x);
        let c = QuadExt::generator(d.clone()).unwrap();
        assert_eq!(&c * &c, QuadExt::from_rational(d.clone(), d.clone()).unwrap());
        assert_eq!(QuadExt::generator_pow(&d, 3), QuadExt::new(q(0, 1), q(-1, 2), d).unwrap());
    }

    #[test]
    fn squares_are_rejected() {
        assert!(QuadExt::generator(q(4, 9)).is_err());
        assert!(QuadExt::generator(q(0, 1)).is_err());
        assert!(QuadExt::generator(q(-1, 6)).is_ok());
        assert!(QuadExt::generator(q(2, 1)).is_ok());
    }
}
