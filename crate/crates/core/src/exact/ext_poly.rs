//! Polynomials over ℚ(c), stored as `re + c·im` with `re, im ∈ ℚ[z]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::modular::{self, inv_mod, mul_mod, rational_mod, sqrt_mod, sub_mod, add_mod,
    GcdOutcome, ModularGcdProblem};
use super::quad::{is_rational_square, QuadExt};
use super::{Poly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtPoly {
    re: Poly,
    im: Poly,
    d: Rational,
}

impl ExtPoly {
    /// `re + c·im` with `c² = d`; rejects square `d`.
    pub fn new(re: Poly, im: Poly, d: Rational) -> Result<Self> {
        if is_rational_square(&d) {
            return Err(Error::SquareGenerator(d.to_string()));
        }
        Ok(ExtPoly { re, im, d })
    }

    pub(crate) fn from_parts_unchecked(re: Poly, im: Poly, d: Rational) -> Self {
        ExtPoly { re, im, d }
    }

    /// Embeds a rational polynomial.
    pub fn from_poly(p: Poly, d: Rational) -> Result<Self> {
        ExtPoly::new(p, Poly::zero(), d)
    }

    pub fn zero(d: Rational) -> Self {
        ExtPoly { re: Poly::zero(), im: Poly::zero(), d }
    }

    pub fn one(d: Rational) -> Self {
        ExtPoly { re: Poly::one(), im: Poly::zero(), d }
    }

    pub fn re(&self) -> &Poly {
        &self.re
    }

    pub fn im(&self) -> &Poly {
        &self.im
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        self.re.degree().max(self.im.degree())
    }

    pub fn coeff(&self, i: usize) -> QuadExt {
        QuadExt::new_unchecked(self.re.coeff(i), self.im.coeff(i), self.d.clone())
    }

    pub fn coeffs(&self) -> Vec<QuadExt> {
        match self.degree() {
            Some(n) => (0..=n).map(|i| self.coeff(i)).collect(),
            None => Vec::new(),
        }
    }

    pub fn leading_coeff(&self) -> QuadExt {
        match self.degree() {
            Some(n) => self.coeff(n),
            None => QuadExt::new_unchecked(Rational::zero(), Rational::zero(), self.d.clone()),
        }
    }

    pub fn conj(&self) -> Self {
        ExtPoly { re: self.re.clone(), im: -&self.im, d: self.d.clone() }
    }

    /// `self · conj(self) = re² − d·im²`, a rational polynomial.
    pub fn norm(&self) -> Poly {
        &self.re * &self.re - (&self.im * &self.im).scale(&self.d)
    }

    pub fn scale(&self, s: &QuadExt) -> Self {
        // (a + bc)(re + c im) = (a re + d b im) + c (b re + a im)
        let re = self.re.scale(&s.a) + self.im.scale(&(&self.d * &s.b));
        let im = self.re.scale(&s.b) + self.im.scale(&s.a);
        ExtPoly { re, im, d: self.d.clone() }
    }

    pub fn scale_rational(&self, s: &Rational) -> Self {
        ExtPoly { re: self.re.scale(s), im: self.im.scale(s), d: self.d.clone() }
    }

    pub fn derivative(&self) -> Self {
        ExtPoly { re: self.re.derivative(), im: self.im.derivative(), d: self.d.clone() }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading_coeff().inv().expect("non-zero leading coefficient");
        self.scale(&inv)
    }

    /// `p(c·z)` for a rational polynomial `p`: the coefficient of `z^j`
    /// picks up `c^j`, which is rational for even `j`.
    pub fn scale_argument(p: &Poly, d: &Rational) -> Result<Self> {
        if is_rational_square(d) {
            return Err(Error::SquareGenerator(d.to_string()));
        }
        let mut re = Vec::new();
        let mut im = Vec::new();
        let mut pow = Rational::one();
        for (j, c) in p.coeffs().into_iter().enumerate() {
            if j % 2 == 0 {
                re.push(c * &pow);
                im.push(Rational::zero());
            } else {
                re.push(Rational::zero());
                im.push(c * &pow);
                pow *= d;
            }
        }
        Ok(ExtPoly { re: Poly::from_coeffs(&re), im: Poly::from_coeffs(&im), d: d.clone() })
    }

    /// Quotient when exact, via `a / g = a·ḡ / N(g)` with `N(g) ∈ ℚ[z]`.
    pub fn try_div_exact(&self, other: &ExtPoly) -> Option<ExtPoly> {
        assert!(!other.is_zero(), "division by the zero polynomial");
        self.check_field(other);
        if other.im.is_zero() {
            return Some(ExtPoly {
                re: self.re.try_div_exact(&other.re)?,
                im: self.im.try_div_exact(&other.re)?,
                d: self.d.clone(),
            });
        }
        let num = self * &other.conj();
        let n = other.norm();
        Some(ExtPoly {
            re: num.re.try_div_exact(&n)?,
            im: num.im.try_div_exact(&n)?,
            d: self.d.clone(),
        })
    }

    pub fn div_exact(&self, other: &ExtPoly) -> ExtPoly {
        self.try_div_exact(other)
            .expect("polynomial division was expected to be exact")
    }

    /// `(g, self / g, other / g)` with `g` the monic gcd.
    pub fn gcd_cofactors(&self, other: &ExtPoly) -> (ExtPoly, ExtPoly, ExtPoly) {
        self.check_field(other);
        let d = self.d.clone();
        if self.is_zero() {
            if other.is_zero() {
                return (self.clone(), self.clone(), self.clone());
            }
            let lc = other.leading_coeff();
            let lc_poly = ExtPoly::one(d).scale(&lc);
            return (other.monic(), self.clone(), lc_poly);
        }
        if other.is_zero() {
            let lc = self.leading_coeff();
            let lc_poly = ExtPoly::one(d).scale(&lc);
            return (self.monic(), lc_poly, other.clone());
        }
        if self.degree() == Some(0) || other.degree() == Some(0) {
            return (ExtPoly::one(d), self.clone(), other.clone());
        }
        if self.im.is_zero() && other.im.is_zero() {
            // a gcd over ℚ stays a gcd over any extension field
            let (g, ca, cb) = self.re.gcd_cofactors(&other.re);
            return (
                ExtPoly { re: g, im: Poly::zero(), d: d.clone() },
                ExtPoly { re: ca, im: Poly::zero(), d: d.clone() },
                ExtPoly { re: cb, im: Poly::zero(), d },
            );
        }
        match modular::modular_gcd(&ExtGcd { a: self, b: other }) {
            GcdOutcome::Coprime => (ExtPoly::one(d), self.clone(), other.clone()),
            GcdOutcome::Found(t) => t,
        }
    }

    pub fn gcd(&self, other: &ExtPoly) -> ExtPoly {
        self.gcd_cofactors(other).0
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(self.d, other.d, "operands live in different quadratic fields");
    }

    /// Images `re ± r·im` in F_p[z], where `r² ≡ d`.
    fn embeddings(&self, p: u64, r: u64) -> Option<[Vec<u64>; 2]> {
        let n = self.degree()? + 1;
        let re = poly_mod(&self.re, p)?;
        let im = poly_mod(&self.im, p)?;
        let mut plus = vec![0u64; n];
        let mut minus = vec![0u64; n];
        for j in 0..n {
            let x = re.get(j).copied().unwrap_or(0);
            let y = mul_mod(im.get(j).copied().unwrap_or(0), r, p);
            plus[j] = add_mod(x, y, p);
            minus[j] = sub_mod(x, y, p);
        }
        if plus[n - 1] == 0 || minus[n - 1] == 0 {
            return None;
        }
        Some([plus, minus])
    }
}

fn poly_mod(p: &Poly, modulus: u64) -> Option<Vec<u64>> {
    let den = rational_mod(&Rational::from_integer(p.denominator().clone()), modulus)?;
    if den == 0 {
        return None;
    }
    let inv = inv_mod(den, modulus);
    Some(p.numerators_mod(modulus).into_iter().map(|c| mul_mod(c, inv, modulus)).collect())
}

struct ExtGcd<'a> {
    a: &'a ExtPoly,
    b: &'a ExtPoly,
}

impl ExtGcd<'_> {
    fn root(&self, p: u64) -> Option<u64> {
        let dm = rational_mod(&self.a.d, p)?;
        if dm == 0 {
            return None;
        }
        sqrt_mod(dm, p)
    }
}

impl ModularGcdProblem for ExtGcd<'_> {
    type Lifted = (ExtPoly, ExtPoly, ExtPoly);

    fn embed(&self, p: u64) -> Option<Vec<(Vec<u64>, Vec<u64>)>> {
        let r = self.root(p)?;
        let [ap, am] = self.a.embeddings(p, r)?;
        let [bp, bm] = self.b.embeddings(p, r)?;
        Some(vec![(ap, bp), (am, bm)])
    }

    fn components(&self, p: u64, images: &[Vec<u64>]) -> Vec<u64> {
        let r = self.root(p).expect("prime accepted by embed");
        let inv2 = inv_mod(2, p);
        let inv2r = inv_mod(mul_mod(2, r, p), p);
        let (gp, gm) = (&images[0], &images[1]);
        let re = gp.iter().zip(gm).map(|(&x, &y)| mul_mod(add_mod(x, y, p), inv2, p));
        let im = gp.iter().zip(gm).map(|(&x, &y)| mul_mod(sub_mod(x, y, p), inv2r, p));
        re.chain(im).collect()
    }

    fn lift(&self, components: &[Rational], degree: usize) -> Option<Self::Lifted> {
        let (re, im) = components.split_at(degree + 1);
        let g = ExtPoly {
            re: Poly::from_coeffs(re),
            im: Poly::from_coeffs(im),
            d: self.a.d.clone(),
        };
        let ca = self.a.try_div_exact(&g)?;
        let cb = self.b.try_div_exact(&g)?;
        Some((g, ca, cb))
    }
}

impl Add for &ExtPoly {
    type Output = ExtPoly;
    fn add(self, o: &ExtPoly) -> ExtPoly {
        self.check_field(o);
        ExtPoly { re: &self.re + &o.re, im: &self.im + &o.im, d: self.d.clone() }
    }
}

impl Sub for &ExtPoly {
    type Output = ExtPoly;
    fn sub(self, o: &ExtPoly) -> ExtPoly {
        self.check_field(o);
        ExtPoly { re: &self.re - &o.re, im: &self.im - &o.im, d: self.d.clone() }
    }
}

impl Mul for &ExtPoly {
    type Output = ExtPoly;
    fn mul(self, o: &ExtPoly) -> ExtPoly {
        self.check_field(o);
        if self.im.is_zero() && o.im.is_zero() {
            return ExtPoly { re: &self.re * &o.re, im: Poly::zero(), d: self.d.clone() };
        }
        // Karatsuba-style: three products instead of four
        let rr = &self.re * &o.re;
        let ii = &self.im * &o.im;
        let cross = (&self.re + &self.im) * (&o.re + &o.im);
        ExtPoly {
            re: &rr + &ii.scale(&self.d),
            im: cross - rr - ii,
            d: self.d.clone(),
        }
    }
}

impl Neg for &ExtPoly {
    type Output = ExtPoly;
    fn neg(self) -> ExtPoly {
        ExtPoly { re: -&self.re, im: -&self.im, d: self.d.clone() }
    }
}

impl fmt::Display for ExtPoly {
    /// Ascending list of `[a, b]` pairs, one per coefficient `a + b·c`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{}, {}]", c.a, c.b)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for ExtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtPoly(c^2 = {}){self}", self.d)
    }
}
