//! Aberth–Ehrlich simultaneous root finding in multiprecision arithmetic.

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::complex::{float_from_bigint, horner, log2_abs, Complex};
use crate::error::{Error, Result};
use crate::exact::Poly;

/// Precision ceiling reached by doubling.
pub const MAX_PRECISION: usize = 1024;

#[derive(Clone, Debug)]
pub struct RootSet {
    /// Zeros with multiplicity; the exact zeros at the origin come first.
    pub roots: Vec<Complex>,
    pub precision_bits: usize,
    /// Largest of the normalized residuals
    /// `|p(z)| / (‖p‖_∞ · max(1,|z|)^deg)` and the relative size of the last
    /// Newton correction, over all roots.
    pub residual_bound: f64,
    pub origin_multiplicity: usize,
    /// Total working precision used by the final pass.
    pub working_precision: usize,
}

impl RootSet {
    pub fn empty(precision_bits: usize) -> Self {
        RootSet {
            roots: Vec::new(),
            precision_bits,
            residual_bound: 0.0,
            origin_multiplicity: 0,
            working_precision: precision_bits,
        }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Greedy matching of every root with a distinct partner close to its
    /// conjugate, within `tol · max(1, |z|)`.
    pub fn conjugate_pairing(&self, tol: f64) -> bool {
        let pts: Vec<(f64, f64)> = self.roots.iter().map(Complex::to_f64).collect();
        let mut used = vec![false; pts.len()];
        for i in 0..pts.len() {
            if used[i] {
                continue;
            }
            let (x, y) = pts[i];
            let scale = x.hypot(y).max(1.0);
            let best = (0..pts.len())
                .filter(|&j| !used[j] && j != i)
                .map(|j| (j, (pts[j].0 - x).hypot(pts[j].1 + y)))
                .min_by(|a, b| a.1.total_cmp(&b.1));
            let self_conj = y.abs() * 2.0 <= tol * scale;
            match best {
                Some((j, d)) if d <= tol * scale && (!self_conj || d < y.abs() * 2.0) => {
                    used[i] = true;
                    used[j] = true;
                }
                _ if self_conj => used[i] = true,
                _ => return false,
            }
        }
        true
    }
}

/// Starting points on a circle whose radius is the geometric mean of the
/// root moduli, rotated off the real axis.
fn initial_guesses(coeffs: &[BigInt], prec: usize) -> Vec<Complex> {
    let n = coeffs.len() - 1;
    let lead = log2_abs(&float_from_bigint(&coeffs[n], 64));
    let tail = log2_abs(&float_from_bigint(&coeffs[0], 64));
    let radius = (((tail - lead) / n as f64).exp2()).clamp(1e-6, 1e6);
    (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex::from_f64(radius * theta.cos(), radius * theta.sin(), prec)
        })
        .collect()
}

struct Pass {
    roots: Vec<Complex>,
    /// Relative size of each root's last correction, as `log2`.
    step_log2: Vec<f64>,
}

/// Aberth sweeps at precision `prec` until every correction drops below
/// `2^{-tol_bits}` relative to `max(1, |z|)`.
fn aberth(coeffs: &[BigFloat], start: Vec<Complex>, prec: usize, tol_bits: f64, max_iter: usize) -> Pass {
    let n = start.len();
    let mut z: Vec<Complex> = start.iter().map(|c| c.with_precision(prec)).collect();
    let mut step_log2 = vec![f64::INFINITY; n];
    let mut done = vec![false; n];
    let one = BigFloat::from_u64(1, prec);
    for _ in 0..max_iter {
        let updates: Vec<Option<(Complex, f64)>> = (0..n)
            .into_par_iter()
            .map(|i| {
                if done[i] {
                    return None;
                }
                let (v, d) = horner(coeffs, &z[i], prec);
                if v.is_zero() {
                    return Some((Complex::zero(prec), f64::NEG_INFINITY));
                }
                let ratio = v.div(&d, prec);
                let mut s = Complex::zero(prec);
                for j in 0..n {
                    if j != i {
                        let diff = z[i].sub(&z[j], prec);
                        if !diff.is_zero() {
                            s = s.add(&Complex::from_real(one.clone(), prec).div(&diff, prec), prec);
                        }
                    }
                }
                let denom = Complex::from_real(one.clone(), prec).sub(&ratio.mul(&s, prec), prec);
                let w = if denom.is_zero() { ratio } else { ratio.div(&denom, prec) };
                let scale = log2_abs(&z[i].abs(prec)).max(0.0);
                Some((w.clone(), log2_abs(&w.abs(prec)) - scale))
            })
            .collect();
        for (i, u) in updates.into_iter().enumerate() {
            if let Some((w, lg)) = u {
                z[i] = z[i].sub(&w, prec);
                step_log2[i] = lg;
                if lg <= -tol_bits {
                    done[i] = true;
                }
            }
        }
        if done.iter().all(|&d| d) {
            return Pass { roots: z, step_log2 };
        }
    }
    Pass { roots: z, step_log2 }
}

/// `log2` of `|p(z)| / (‖p‖_∞ · max(1,|z|)^deg)`.
fn normalized_residual_log2(coeffs: &[BigFloat], norm_log2: f64, z: &Complex, prec: usize) -> f64 {
    let (v, _) = horner(coeffs, z, prec);
    let deg = (coeffs.len() - 1) as f64;
    let r = log2_abs(&z.abs(prec)).max(0.0);
    log2_abs(&v.abs(prec)) - norm_log2 - deg * r
}

/// Complex zeros of `p` with multiplicity.
///
/// The multiplicity at the origin is read off the exact trailing zero
/// coefficients; the remaining zeros come from Aberth iteration on the
/// deflated polynomial, doubling the working precision up to
/// [`MAX_PRECISION`] until all residuals fall below `2^{-precision_bits/2}`.
pub fn find_roots(p: &Poly, precision_bits: usize) -> Result<RootSet> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if precision_bits < 32 {
        return Err(Error::Parse(format!("precision {precision_bits} is below 32 bits")));
    }
    let m0 = p.trailing_zeros().expect("non-zero polynomial");
    let ints: Vec<BigInt> = p.numerators()[m0..].to_vec();
    let origin: Vec<Complex> = (0..m0).map(|_| Complex::zero(precision_bits)).collect();
    if deg == m0 {
        let mut rs = RootSet::empty(precision_bits);
        rs.roots = origin;
        rs.origin_multiplicity = m0;
        return Ok(rs);
    }
    let target = -(precision_bits as f64) / 2.0;
    let mut prec = precision_bits;
    let mut start = initial_guesses(&ints, prec);
    let n = ints.len() - 1;
    loop {
        let work = prec + 32;
        let coeffs: Vec<BigFloat> = ints.iter().map(|c| float_from_bigint(c, work)).collect();
        let norm_log2 = ints
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| log2_abs(&float_from_bigint(c, 64)))
            .fold(f64::NEG_INFINITY, f64::max);
        let pass = aberth(&coeffs, start, work, prec as f64 * 0.75, 100 + 8 * n);
        let residuals: Vec<f64> = pass
            .roots
            .par_iter()
            .map(|z| normalized_residual_log2(&coeffs, norm_log2, z, work))
            .collect();
        let worst = residuals
            .iter()
            .chain(pass.step_log2.iter())
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        let unconverged: Vec<usize> = residuals
            .iter()
            .zip(&pass.step_log2)
            .enumerate()
            .filter(|(_, (&r, &s))| r >= target || s >= target)
            .map(|(i, _)| i + m0)
            .collect();
        if unconverged.is_empty() {
            let mut roots = origin;
            roots.extend(pass.roots.into_iter().map(|z| z.with_precision(precision_bits)));
            return Ok(RootSet {
                roots,
                precision_bits,
                residual_bound: worst.exp2(),
                origin_multiplicity: m0,
                working_precision: work,
            });
        }
        if prec >= MAX_PRECISION.max(precision_bits) {
            return Err(Error::NonConvergence { precision: work as u32, unconverged });
        }
        prec = (prec * 2).min(MAX_PRECISION.max(precision_bits));
        start = pass.roots;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::hermite;

    #[test]
    fn quadratic() {
        let p = Poly::from_ints(&[4, 0, 8]);
        let rs = find_roots(&p, 128).unwrap();
        assert_eq!(rs.len(), 2);
        let mut ims: Vec<f64> = rs.roots.iter().map(|z| z.to_f64().1).collect();
        ims.sort_by(f64::total_cmp);
        assert!((ims[1] - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((ims[0] + std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!(rs.residual_bound < 2f64.powi(-64));
        assert!(rs.conjugate_pairing(10.0 * rs.residual_bound));
    }

    #[test]
    fn triple_origin() {
        let rs = find_roots(&Poly::from_ints(&[0, 0, 0, 1]), 128).unwrap();
        assert_eq!(rs.origin_multiplicity, 3);
        assert!(rs.roots.iter().all(Complex::is_zero));
    }

    #[test]
    fn hermite_four() {
        let rs = find_roots(&hermite(4), 128).unwrap();
        let mut re: Vec<f64> = rs.roots.iter().map(|z| z.to_f64().0).collect();
        re.sort_by(f64::total_cmp);
        let expect = [-1.650680123885785, -0.524647623275290, 0.524647623275290, 1.650680123885785];
        for (a, b) in re.iter().zip(expect) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert!(find_roots(&Poly::zero(), 128).is_err());
        assert!(find_roots(&Poly::one(), 128).unwrap().is_empty());
    }
}
