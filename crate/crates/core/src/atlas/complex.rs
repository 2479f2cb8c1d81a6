//! Minimal complex arithmetic over `astro_float::BigFloat` at a fixed
//! working precision.

use astro_float::{BigFloat, RoundingMode, Sign, Word};
use num_bigint::{BigInt, Sign as BigSign};
use num_integer::Integer;
use num_traits::{Signed, Zero};

const RM: RoundingMode = RoundingMode::ToEven;

/// Rounds `n` to a float with `prec` bits.
pub fn float_from_bigint(n: &BigInt, prec: usize) -> BigFloat {
    if n.is_zero() {
        return BigFloat::from_u64(0, prec);
    }
    let words: Vec<Word> = n.magnitude().to_u64_digits();
    let sign = if n.is_negative() { Sign::Neg } else { Sign::Pos };
    let e = 64 * words.len() as i32;
    let mut x = BigFloat::from_words(&words, sign, e);
    x.set_precision(prec, RM).expect("valid precision");
    x
}

/// `(M, shift)` with `x = M · 2^shift` exactly.
fn exact_parts(x: &BigFloat) -> (BigInt, i64) {
    match x.as_raw_parts() {
        Some((m, _, s, e, _)) => {
            let mag = BigInt::from_slice(
                BigSign::Plus,
                &m.iter().flat_map(|w| [*w as u32, (*w >> 32) as u32]).collect::<Vec<u32>>(),
            );
            let mag = if s == Sign::Neg { -mag } else { mag };
            (mag, e as i64 - 64 * m.len() as i64)
        }
        None => (BigInt::zero(), 0),
    }
}

/// `round(x · 10^digits)` as an integer.
pub fn scaled_decimal(x: &BigFloat, digits: u32) -> BigInt {
    let (m, shift) = exact_parts(x);
    let v = m * num_traits::pow(BigInt::from(10), digits as usize);
    if shift >= 0 {
        return v << shift as usize;
    }
    let den = BigInt::from(1) << (-shift) as usize;
    let (q, r) = v.div_mod_floor(&den);
    if r * 2 >= den {
        q + 1
    } else {
        q
    }
}

/// Fixed-point decimal text with at most `digits` fractional digits and
/// trailing zeros stripped; values that round to zero print as `0`.
pub fn format_decimal(x: &BigFloat, digits: u32) -> String {
    let v = scaled_decimal(x, digits);
    if v.is_zero() {
        return "0".to_string();
    }
    let neg = v.is_negative();
    let s = v.abs().to_string();
    let d = digits as usize;
    let (int_part, frac) = if s.len() > d {
        (s[..s.len() - d].to_string(), s[s.len() - d..].to_string())
    } else {
        ("0".to_string(), format!("{}{}", "0".repeat(d - s.len()), s))
    };
    let frac = frac.trim_end_matches('0');
    let sign = if neg { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

pub fn to_f64(x: &BigFloat) -> f64 {
    match x.as_raw_parts() {
        Some((m, _, s, e, _)) => {
            let top = *m.last().unwrap_or(&0) as f64 / 2f64.powi(64);
            let v = top * 2f64.powi(e);
            if s == Sign::Neg {
                -v
            } else {
                v
            }
        }
        None => f64::NAN,
    }
}

/// `log2 |x|`, or `−∞` for zero.
pub fn log2_abs(x: &BigFloat) -> f64 {
    match x.as_raw_parts() {
        Some((m, _, _, e, _)) if !x.is_zero() => {
            let top = *m.last().unwrap_or(&0) as f64 / 2f64.powi(64);
            top.log2() + e as f64
        }
        _ => f64::NEG_INFINITY,
    }
}

#[derive(Clone, Debug)]
pub struct Complex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Complex {
    pub fn zero(prec: usize) -> Self {
        Complex { re: BigFloat::from_u64(0, prec), im: BigFloat::from_u64(0, prec) }
    }

    pub fn from_f64(re: f64, im: f64, prec: usize) -> Self {
        Complex { re: BigFloat::from_f64(re, prec), im: BigFloat::from_f64(im, prec) }
    }

    pub fn from_real(re: BigFloat, prec: usize) -> Self {
        Complex { re, im: BigFloat::from_u64(0, prec) }
    }

    pub fn with_precision(&self, prec: usize) -> Self {
        let mut out = self.clone();
        out.re.set_precision(prec, RM).expect("valid precision");
        out.im.set_precision(prec, RM).expect("valid precision");
        out
    }

    pub fn add(&self, o: &Self, p: usize) -> Self {
        Complex { re: self.re.add(&o.re, p, RM), im: self.im.add(&o.im, p, RM) }
    }

    pub fn sub(&self, o: &Self, p: usize) -> Self {
        Complex { re: self.re.sub(&o.re, p, RM), im: self.im.sub(&o.im, p, RM) }
    }

    pub fn mul(&self, o: &Self, p: usize) -> Self {
        let re = self.re.mul(&o.re, p, RM).sub(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.re.mul(&o.im, p, RM).add(&self.im.mul(&o.re, p, RM), p, RM);
        Complex { re, im }
    }

    pub fn mul_real(&self, r: &BigFloat, p: usize) -> Self {
        Complex { re: self.re.mul(r, p, RM), im: self.im.mul(r, p, RM) }
    }

    pub fn norm_sqr(&self, p: usize) -> BigFloat {
        self.re.mul(&self.re, p, RM).add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    pub fn abs(&self, p: usize) -> BigFloat {
        self.norm_sqr(p).sqrt(p, RM)
    }

    /// `self / o`; the caller guarantees `o ≠ 0`.
    pub fn div(&self, o: &Self, p: usize) -> Self {
        let n = o.norm_sqr(p);
        let conj = Complex { re: o.re.clone(), im: o.im.neg() };
        let t = self.mul(&conj, p);
        Complex { re: t.re.div(&n, p, RM), im: t.im.div(&n, p, RM) }
    }

    pub fn conj(&self) -> Self {
        Complex { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.re), to_f64(&self.im))
    }
}

/// `(p(z), p′(z))` by Horner's rule; `coeffs` ascending.
pub fn horner(coeffs: &[BigFloat], z: &Complex, p: usize) -> (Complex, Complex) {
    let mut val = Complex::zero(p);
    let mut der = Complex::zero(p);
    for c in coeffs.iter().rev() {
        der = der.mul(z, p).add(&val, p);
        val = val.mul(z, p).add(&Complex::from_real(c.clone(), p), p);
    }
    (val, der)
}
