//! Dense univariate polynomials with rational coefficients.
//!
//! A polynomial is stored as integer numerators over one positive common
//! denominator, reduced so that the denominator is coprime to the content of
//! the numerators. The representation is canonical, so structural equality is
//! polynomial equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modular::{self, bigint_mod, GcdOutcome, ModularGcdProblem};
use super::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    num: Vec<BigInt>,
    den: BigInt,
}

fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
    }
    g
}

impl Poly {
    /// Builds `num / den` and normalizes. Panics if `den` is zero.
    pub fn from_parts(mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        while num.last().is_some_and(Zero::is_zero) {
            num.pop();
        }
        if num.is_empty() {
            return Poly::zero();
        }
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        if !den.is_one() {
            let g = content(&num).gcd(&den);
            if !g.is_one() {
                for c in num.iter_mut() {
                    *c /= &g;
                }
                den /= &g;
            }
        }
        Poly { num, den }
    }

    pub fn zero() -> Self {
        Poly { num: Vec::new(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Poly::from_ints(&[1])
    }

    /// The polynomial `z`.
    pub fn x() -> Self {
        Poly::from_ints(&[0, 1])
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_parts(vec![c.numer().clone()], c.denom().clone())
    }

    /// `c·z^n`.
    pub fn monomial(c: Rational, n: usize) -> Self {
        let mut num = vec![BigInt::zero(); n + 1];
        num[n] = c.numer().clone();
        Poly::from_parts(num, c.denom().clone())
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_parts(coeffs.iter().map(|&c| BigInt::from(c)).collect(), BigInt::one())
    }

    pub fn from_bigints(coeffs: Vec<BigInt>) -> Self {
        Poly::from_parts(coeffs, BigInt::one())
    }

    pub fn from_coeffs(coeffs: &[Rational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Poly::from_parts(num, den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.num.len().checked_sub(1)
    }

    /// Number of stored coefficients, `degree + 1` (0 for zero).
    pub fn len(&self) -> usize {
        self.num.len()
    }

    pub fn is_empty(&self) -> bool {
        self.num.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        match self.num.get(i) {
            Some(c) => Rational::new(c.clone(), self.den.clone()),
            None => Rational::zero(),
        }
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        (0..self.num.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn leading_coeff(&self) -> Rational {
        match self.degree() {
            Some(d) => self.coeff(d),
            None => Rational::zero(),
        }
    }

    /// Integer numerators; the polynomial equals `numerators() / denominator()`.
    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// Number of vanishing low-order coefficients, i.e. the multiplicity of
    /// the root at the origin. `None` for the zero polynomial.
    pub fn trailing_zeros(&self) -> Option<usize> {
        self.num.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.num.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc / Rational::from_integer(self.den.clone())
    }

    /// Value of the integer numerator polynomial at an integer point.
    pub fn eval_numerator(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.num.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly::from_parts(
            self.num.iter().map(|c| c * s.numer()).collect(),
            &self.den * s.denom(),
        )
    }

    pub fn scale_int(&self, s: &BigInt) -> Self {
        self.scale(&Rational::from_integer(s.clone()))
    }

    pub fn derivative(&self) -> Self {
        if self.num.len() <= 1 {
            return Poly::zero();
        }
        let num = self.num[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigInt::from(i + 1))
            .collect();
        Poly::from_parts(num, self.den.clone())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.leading_coeff();
        self.scale(&lc.recip())
    }

    /// Multiplication by `z^n`.
    pub fn shift_up(&self, n: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut num = vec![BigInt::zero(); n];
        num.extend(self.num.iter().cloned());
        Poly { num, den: self.den.clone() }
    }

    /// Multiplication by `z - a` for an integer `a`.
    pub fn mul_linear(&self, a: &BigInt) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let n = self.num.len();
        let mut num = vec![BigInt::zero(); n + 1];
        for (i, c) in self.num.iter().enumerate() {
            num[i + 1] += c;
            num[i] -= c * a;
        }
        Poly::from_parts(num, self.den.clone())
    }

    /// Substitution `z ↦ s·z`.
    pub fn scale_variable(&self, s: &Rational) -> Self {
        let mut pow = Rational::one();
        let coeffs: Vec<Rational> = (0..self.num.len())
            .map(|i| {
                let c = self.coeff(i) * &pow;
                pow *= s;
                c
            })
            .collect();
        Poly::from_coeffs(&coeffs)
    }

    /// Primitive integer part: `self = unit · primitive` with the leading
    /// coefficient of `primitive` positive.
    fn primitive(&self) -> (Rational, Vec<BigInt>) {
        let mut g = content(&self.num);
        if self.num.last().is_some_and(Signed::is_negative) {
            g = -g;
        }
        let prim = self.num.iter().map(|c| c / &g).collect();
        (Rational::new(g, self.den.clone()), prim)
    }

    /// Quotient `self / other` when the division is exact, `None` otherwise.
    ///
    /// By Gauss's lemma an exact quotient of primitive integer polynomials is
    /// itself an integer polynomial, so the long division runs over ℤ and
    /// stops at the first coefficient that is not divisible.
    pub fn try_div_exact(&self, other: &Poly) -> Option<Poly> {
        assert!(!other.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (ua, a) = self.primitive();
        let (ub, b) = other.primitive();
        let q = div_exact_int(&a, &b)?;
        Some(Poly::from_bigints(q).scale(&(ua / ub)))
    }

    /// Exact quotient; panics if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Poly) -> Poly {
        self.try_div_exact(other)
            .expect("polynomial division was expected to be exact")
    }

    /// Euclidean division over ℚ.
    pub fn div_rem(&self, other: &Poly) -> (Poly, Poly) {
        assert!(!other.is_zero(), "division by the zero polynomial");
        let db = other.degree().unwrap();
        let lc_inv = other.leading_coeff().recip();
        let b = other.coeffs();
        let mut r = self.coeffs();
        if r.len() <= db {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - db];
        for i in (db..r.len()).rev() {
            let t = &r[i] * &lc_inv;
            if !t.is_zero() {
                for (j, bj) in b.iter().enumerate() {
                    r[i - db + j] -= &t * bj;
                }
            }
            q[i - db] = t;
        }
        r.truncate(db);
        (Poly::from_coeffs(&q), Poly::from_coeffs(&r))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.gcd_cofactors(other).0
    }

    /// `(g, self / g, other / g)` with `g` the monic gcd.
    pub fn gcd_cofactors(&self, other: &Poly) -> (Poly, Poly, Poly) {
        if self.is_zero() {
            if other.is_zero() {
                return (Poly::zero(), Poly::zero(), Poly::zero());
            }
            let lc = other.leading_coeff();
            return (other.monic(), Poly::zero(), Poly::constant(lc));
        }
        if other.is_zero() {
            let lc = self.leading_coeff();
            return (self.monic(), Poly::constant(lc), Poly::zero());
        }
        if self.degree() == Some(0) || other.degree() == Some(0) {
            return (Poly::one(), self.clone(), other.clone());
        }
        match modular::modular_gcd(&RationalGcd { a: self, b: other }) {
            GcdOutcome::Coprime => (Poly::one(), self.clone(), other.clone()),
            GcdOutcome::Found(t) => t,
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Reduction of the integer numerators modulo `p`.
    pub(crate) fn numerators_mod(&self, p: u64) -> Vec<u64> {
        self.num.iter().map(|c| bigint_mod(c, p)).collect()
    }
}

/// Exact long division of integer polynomials, `None` if `b ∤ a` over ℤ.
fn div_exact_int(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<BigInt> = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (db..a.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let (t, rem) = r[i].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate().take(db) {
            if !bj.is_zero() {
                r[i - db + j] -= &t * bj;
            }
        }
        r[i] = BigInt::zero();
        q[i - db] = t;
    }
    if r[..db].iter().all(Zero::is_zero) {
        Some(q)
    } else {
        None
    }
}

struct RationalGcd<'a> {
    a: &'a Poly,
    b: &'a Poly,
}

impl ModularGcdProblem for RationalGcd<'_> {
    type Lifted = (Poly, Poly, Poly);

    fn embed(&self, p: u64) -> Option<Vec<(Vec<u64>, Vec<u64>)>> {
        let a = self.a.numerators_mod(p);
        let b = self.b.numerators_mod(p);
        if *a.last()? == 0 || *b.last()? == 0 {
            return None;
        }
        Some(vec![(a, b)])
    }

    fn components(&self, _p: u64, images: &[Vec<u64>]) -> Vec<u64> {
        images[0].clone()
    }

    fn lift(&self, components: &[Rational], _degree: usize) -> Option<Self::Lifted> {
        let g = Poly::from_coeffs(components);
        let ca = self.a.try_div_exact(&g)?;
        let cb = self.b.try_div_exact(&g)?;
        Some((g, ca, cb))
    }
}

fn add_impl(a: &Poly, b: &Poly, negate_b: bool) -> Poly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let den = a.den.lcm(&b.den);
    let fa = &den / &a.den;
    let fb = &den / &b.den;
    let n = a.num.len().max(b.num.len());
    let mut num = Vec::with_capacity(n);
    for i in 0..n {
        let mut c = match a.num.get(i) {
            Some(x) if fa.is_one() => x.clone(),
            Some(x) => x * &fa,
            None => BigInt::zero(),
        };
        if let Some(y) = b.num.get(i) {
            let t = if fb.is_one() { y.clone() } else { y * &fb };
            if negate_b {
                c -= t;
            } else {
                c += t;
            }
        }
        num.push(c);
    }
    Poly::from_parts(num, den)
}

fn mul_impl(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut num = vec![BigInt::zero(); a.num.len() + b.num.len() - 1];
    for (i, x) in a.num.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.num.iter().enumerate() {
            if !y.is_zero() {
                num[i + j] += x * y;
            }
        }
    }
    Poly::from_parts(num, &a.den * &b.den)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $body(self, rhs)
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $body(&self, &rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $body(&self, rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, false));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, true));
forward_binop!(Mul, mul, mul_impl);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    /// Ascending coefficient list, e.g. `[12, 0, -48, 0, 16]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{self}")
    }
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected a bracketed coefficient list: {s}")))?;
        if inner.trim().is_empty() {
            return Ok(Poly::zero());
        }
        let coeffs = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<Rational>()
                    .map_err(|e| Error::Parse(format!("bad coefficient {:?}: {e}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(&coeffs))
    }
}

impl Default for Poly {
    fn default() -> Self {
        Poly::zero()
    }
}
