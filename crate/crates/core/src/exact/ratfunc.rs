//! Reduced rational functions over ℚ or ℚ(c).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{ExtPoly, Poly, QuadExt, Rational};
use crate::error::{Error, Result};

/// The polynomial operations a coefficient ring must provide to carry
/// rational functions.
pub trait PolyRing: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    type Scalar: Clone + PartialEq + fmt::Debug;

    /// Zero in the same ring as `self` (the extension constant is carried
    /// by values, not types).
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn constant_like(&self, c: Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn degree(&self) -> Option<usize>;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn derivative(&self) -> Self;
    fn scale_rational(&self, s: &Rational) -> Self;
    fn monic_with_factor(&self) -> (Self, Self::Scalar);
    /// Multiplies by the inverse of a non-zero scalar.
    fn div_scalar(&self, s: &Self::Scalar) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    fn gcd_cofactors(&self, other: &Self) -> (Self, Self, Self);
    /// Coefficients in ascending order, as exact decimal strings.
    fn coefficient_strings(&self) -> Vec<String>;
}

impl PolyRing for Poly {
    type Scalar = Rational;

    fn zero_like(&self) -> Self {
        Poly::zero()
    }
    fn one_like(&self) -> Self {
        Poly::one()
    }
    fn constant_like(&self, c: Rational) -> Self {
        Poly::constant(c)
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn degree(&self) -> Option<usize> {
        Poly::degree(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn derivative(&self) -> Self {
        Poly::derivative(self)
    }
    fn scale_rational(&self, s: &Rational) -> Self {
        self.scale(s)
    }
    fn monic_with_factor(&self) -> (Self, Rational) {
        let lc = self.leading_coeff();
        (self.scale(&lc.recip()), lc)
    }
    fn div_scalar(&self, s: &Rational) -> Self {
        self.scale(&s.recip())
    }
    fn div_exact(&self, o: &Self) -> Self {
        Poly::div_exact(self, o)
    }
    fn gcd_cofactors(&self, o: &Self) -> (Self, Self, Self) {
        Poly::gcd_cofactors(self, o)
    }
    fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs().iter().map(ToString::to_string).collect()
    }
}

impl PolyRing for ExtPoly {
    type Scalar = QuadExt;

    fn zero_like(&self) -> Self {
        ExtPoly::zero(self.d().clone())
    }
    fn one_like(&self) -> Self {
        ExtPoly::one(self.d().clone())
    }
    fn constant_like(&self, c: Rational) -> Self {
        ExtPoly::from_parts_unchecked(Poly::constant(c), Poly::zero(), self.d().clone())
    }
    fn is_zero(&self) -> bool {
        ExtPoly::is_zero(self)
    }
    fn degree(&self) -> Option<usize> {
        ExtPoly::degree(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn derivative(&self) -> Self {
        ExtPoly::derivative(self)
    }
    fn scale_rational(&self, s: &Rational) -> Self {
        ExtPoly::scale_rational(self, s)
    }
    fn monic_with_factor(&self) -> (Self, QuadExt) {
        let lc = self.leading_coeff();
        (self.scale(&lc.inv().expect("non-zero leading coefficient")), lc)
    }
    fn div_scalar(&self, s: &QuadExt) -> Self {
        self.scale(&s.inv().expect("non-zero scalar"))
    }
    fn div_exact(&self, o: &Self) -> Self {
        ExtPoly::div_exact(self, o)
    }
    fn gcd_cofactors(&self, o: &Self) -> (Self, Self, Self) {
        ExtPoly::gcd_cofactors(self, o)
    }
    fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs().iter().map(ToString::to_string).collect()
    }
}

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq)]
pub struct RationalFunction<P: PolyRing> {
    num: P,
    den: P,
}

pub type RatFn = RationalFunction<Poly>;
pub type ExtRatFn = RationalFunction<ExtPoly>;

impl<P: PolyRing> RationalFunction<P> {
    /// Reduces `num / den`; fails if `den` is zero.
    pub fn new(num: P, den: P) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction { num: den.zero_like(), den: den.one_like() });
        }
        let (_, n, d) = num.gcd_cofactors(&den);
        Ok(Self::from_coprime(n, d))
    }

    /// Skips the gcd when the caller knows `num` and `den` are coprime.
    pub fn from_coprime(num: P, den: P) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunction { num: den.zero_like(), den: den.one_like() };
        }
        let (den, lc) = den.monic_with_factor();
        RationalFunction { num: num.div_scalar(&lc), den }
    }

    pub fn from_poly(p: P) -> Self {
        let den = p.one_like();
        RationalFunction { num: p, den }
    }

    pub fn zero_like(&self) -> Self {
        Self::from_poly(self.num.zero_like())
    }

    pub fn constant_like(&self, c: Rational) -> Self {
        Self::from_poly(self.num.constant_like(c))
    }

    pub fn num(&self) -> &P {
        &self.num
    }

    pub fn den(&self) -> &P {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn scale_rational(&self, s: &Rational) -> Self {
        if num_traits::Zero::is_zero(s) {
            return self.zero_like();
        }
        RationalFunction { num: self.num.scale_rational(s), den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn derivative(&self) -> Self {
        if self.is_polynomial() {
            return Self::from_poly(self.num.derivative());
        }
        // with b = g·b1 and b' = g·e: (a/b)' = (a'·b1 − a·e) / (b·b1)
        let db = self.den.derivative();
        let (_, b1, e) = self.den.gcd_cofactors(&db);
        let num = self.num.derivative().mul(&b1).sub(&self.num.mul(&e));
        let den = self.den.mul(&b1);
        Self::new(num, den).expect("non-zero denominator")
    }

    /// Logarithmic derivative `p'/p` of a non-zero polynomial.
    pub fn log_derivative(p: &P) -> Result<Self> {
        Self::new(p.derivative(), p.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::from_poly(self.num.one_like());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    fn add_impl(&self, other: &Self, subtract: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if subtract { -other } else { other.clone() };
        }
        let combine = |x: &P, y: &P| if subtract { x.sub(y) } else { x.add(y) };
        if self.den == other.den {
            return Self::new(combine(&self.num, &other.num), self.den.clone())
                .expect("non-zero denominator");
        }
        // Henrici: only the common factor of the denominators can cancel
        let (g, b1, d1) = self.den.gcd_cofactors(&other.den);
        let num = combine(&self.num.mul(&d1), &other.num.mul(&b1));
        if g.degree() == Some(0) {
            return Self::from_coprime(num, b1.mul(&d1));
        }
        let (_, num, g_rest) = num.gcd_cofactors(&g);
        Self::from_coprime(num, b1.mul(&d1).mul(&g_rest))
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return self.zero_like();
        }
        let (_, a, d) = self.num.gcd_cofactors(&other.den);
        let (_, c, b) = other.num.gcd_cofactors(&self.den);
        Self::from_coprime(a.mul(&c), b.mul(&d))
    }
}

impl RatFn {
    /// `f(c·z)` over ℚ(c) for `c² = d`.
    pub fn scale_argument(&self, d: &Rational) -> Result<ExtRatFn> {
        let num = ExtPoly::scale_argument(&self.num, d)?;
        let den = ExtPoly::scale_argument(&self.den, d)?;
        // substitution is a ring automorphism, so coprimality survives
        Ok(ExtRatFn::from_coprime(num, den))
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if num_traits::Zero::is_zero(&d) {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    pub fn z() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
}

impl ExtRatFn {
    /// Multiplies by a scalar of ℚ(c).
    pub fn scale(&self, s: &QuadExt) -> Self {
        if s.is_zero() {
            return self.zero_like();
        }
        RationalFunction { num: self.num.scale(s), den: self.den.clone() }
    }

    /// Lifts a rational function over ℚ into ℚ(c).
    pub fn embed(f: &RatFn, d: &Rational) -> Result<Self> {
        let num = ExtPoly::from_poly(f.num.clone(), d.clone())?;
        let den = ExtPoly::from_poly(f.den.clone(), d.clone())?;
        Ok(RationalFunction { num, den })
    }
}

macro_rules! rf_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<P: PolyRing> $trait<&RationalFunction<P>> for &RationalFunction<P> {
            type Output = RationalFunction<P>;
            fn $method(self, rhs: &RationalFunction<P>) -> RationalFunction<P> {
                $body(self, rhs)
            }
        }
        impl<P: PolyRing> $trait<RationalFunction<P>> for RationalFunction<P> {
            type Output = RationalFunction<P>;
            fn $method(self, rhs: RationalFunction<P>) -> RationalFunction<P> {
                $body(&self, &rhs)
            }
        }
        impl<P: PolyRing> $trait<&RationalFunction<P>> for RationalFunction<P> {
            type Output = RationalFunction<P>;
            fn $method(self, rhs: &RationalFunction<P>) -> RationalFunction<P> {
                $body(&self, rhs)
            }
        }
        impl<P: PolyRing> $trait<RationalFunction<P>> for &RationalFunction<P> {
            type Output = RationalFunction<P>;
            fn $method(self, rhs: RationalFunction<P>) -> RationalFunction<P> {
                $body(self, &rhs)
            }
        }
    };
}

rf_binop!(Add, add, |a: &RationalFunction<P>, b| a.add_impl(b, false));
rf_binop!(Sub, sub, |a: &RationalFunction<P>, b| a.add_impl(b, true));
rf_binop!(Mul, mul, |a: &RationalFunction<P>, b| a.mul_impl(b));

impl<P: PolyRing> Div<&RationalFunction<P>> for &RationalFunction<P> {
    type Output = Result<RationalFunction<P>>;
    fn div(self, rhs: &RationalFunction<P>) -> Result<RationalFunction<P>> {
        Ok(self * &rhs.recip()?)
    }
}

impl<P: PolyRing> Neg for &RationalFunction<P> {
    type Output = RationalFunction<P>;
    fn neg(self) -> RationalFunction<P> {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }
}

impl<P: PolyRing> Neg for RationalFunction<P> {
    type Output = RationalFunction<P>;
    fn neg(self) -> RationalFunction<P> {
        -&self
    }
}

impl<P: PolyRing> fmt::Display for RationalFunction<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.num, self.den)
    }
}

impl<P: PolyRing> fmt::Debug for RationalFunction<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({} / {})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFn {
        RatFn::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    #[test]
    fn reduces_to_lowest_terms() {
        let f = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(f, RatFn::from_poly(Poly::from_ints(&[1, 1])));
        let h = rf(&[0, 8], &[-2, 0, 4]);
        assert_eq!(h.num(), &Poly::from_ints(&[0, 2]));
        assert_eq!(h.den(), &Poly::from_coeffs(&[q(-1, 2), q(0, 1), q(1, 1)]));
    }

    #[test]
    fn derivative_and_arithmetic() {
        let inv_z = rf(&[1], &[0, 1]);
        assert_eq!(inv_z.derivative(), rf(&[-1], &[0, 0, 1]));
        let a = rf(&[1, 2], &[3, 0, 1]);
        let b = rf(&[0, 1], &[1, 1]);
        assert_eq!((&a + &b).derivative(), a.derivative() + b.derivative());
        assert_eq!((&a * &b).derivative(), &a.derivative() * &b + &a * &b.derivative());
        assert_eq!(&(&a / &b).unwrap() * &b, a);
        assert!((&a - &a).is_zero());
        assert!(matches!(&a / &RatFn::zero(), Err(Error::DivisionByZero)));
        assert!(RatFn::new(Poly::one(), Poly::zero()).is_err());
        // repeated factor in the denominator
        let c = rf(&[1], &[1, 2, 1]);
        assert_eq!(c.derivative(), rf(&[-2], &[1, 3, 3, 1]));
    }

    #[test]
    fn scale_argument_of_hermite_log_derivative() {
        let d = q(-1, 2);
        let f = RatFn::log_derivative(&Poly::from_ints(&[-2, 0, 4])).unwrap();
        let g = f.scale_argument(&d).unwrap();
        // 4cz / (-z² - 1) up to normalisation: −4c·z / (z² + 1)
        let expected = ExtRatFn::new(
            ExtPoly::new(Poly::zero(), Poly::from_ints(&[0, -4]), d.clone()).unwrap(),
            ExtPoly::from_poly(Poly::from_ints(&[1, 0, 1]), d.clone()).unwrap(),
        )
        .unwrap();
        assert_eq!(g, expected);
    }
}
