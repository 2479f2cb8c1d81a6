//! Exact determinants of polynomial matrices and Wronskians.
//!
//! Two independent algorithms are provided: fraction-free Bareiss
//! elimination over ℚ[z], and evaluation at consecutive integers followed by
//! integer Bareiss determinants and Newton interpolation. They must agree
//! exactly; [`DetMethod::Auto`] picks interpolation for large outputs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DetMethod {
    #[default]
    Auto,
    Bareiss,
    Interpolation,
}

/// Output degree from which [`DetMethod::Auto`] switches to interpolation.
const INTERPOLATION_MIN_DEGREE: usize = 24;
const INTERPOLATION_MIN_SIZE: usize = 4;

/// Determinant of a square polynomial matrix.
///
/// `degree_bound` must bound the degree of the result; it sets the number
/// of sample points for interpolation and is ignored by Bareiss.
pub fn determinant(matrix: &[Vec<Poly>], degree_bound: usize, method: DetMethod) -> Poly {
    let n = matrix.len();
    assert!(matrix.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return Poly::one();
    }
    let method = match method {
        DetMethod::Auto
            if n >= INTERPOLATION_MIN_SIZE && degree_bound >= INTERPOLATION_MIN_DEGREE =>
        {
            DetMethod::Interpolation
        }
        DetMethod::Auto => DetMethod::Bareiss,
        m => m,
    };
    match method {
        DetMethod::Interpolation => det_interpolation(matrix, degree_bound),
        _ => det_bareiss(matrix.to_vec()),
    }
}

/// Fraction-free elimination with row swaps on vanishing pivots.
fn det_bareiss(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Poly::zero(),
            }
        }
        if k + 1 == n {
            break;
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        rest.par_iter_mut().for_each(|row| {
            for j in k + 1..n {
                let t = &pivot_row[k] * &row[j] - &row[k] * &pivot_row[j];
                row[j] = if prev.degree() == Some(0) && prev == Poly::one() {
                    t
                } else {
                    t.div_exact(&prev)
                };
            }
            row[k] = Poly::zero();
        });
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Integer Bareiss determinant.
pub(crate) fn det_integer(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

fn det_interpolation(matrix: &[Vec<Poly>], degree_bound: usize) -> Poly {
    let n = matrix.len();
    // scale each row to integer entries
    let row_dens: Vec<BigInt> = matrix
        .iter()
        .map(|row| row.iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denominator())))
        .collect();
    let factors: Vec<Vec<BigInt>> = matrix
        .iter()
        .zip(&row_dens)
        .map(|(row, l)| row.iter().map(|e| l / e.denominator()).collect())
        .collect();

    let count = degree_bound + 1;
    let x0 = -BigInt::from(degree_bound / 2);
    let mut values: Vec<BigInt> = (0..count)
        .into_par_iter()
        .map(|j| {
            let x = &x0 + BigInt::from(j);
            let m: Vec<Vec<BigInt>> = (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| matrix[r][c].eval_numerator(&x) * &factors[r][c])
                        .collect()
                })
                .collect();
            det_integer(m)
        })
        .collect();

    // forward differences: values[k] becomes Δ^k v_0
    for k in 1..count {
        for j in (k..count).rev() {
            let t = &values[j] - &values[j - 1];
            values[j] = t;
        }
    }
    // Newton form scaled by D!: Σ Δ^k v_0 · (D!/k!) · ∏_{i<k} (x − x0 − i)
    let dmax = count - 1;
    let mut fact_ratio = vec![BigInt::one(); count];
    for k in (0..dmax).rev() {
        fact_ratio[k] = &fact_ratio[k + 1] * BigInt::from(k + 1);
    }
    let mut acc = Poly::from_bigints(vec![&values[dmax] * &fact_ratio[dmax]]);
    for k in (0..dmax).rev() {
        let shift = &x0 + BigInt::from(k);
        acc = acc.mul_linear(&shift)
            + Poly::from_bigints(vec![&values[k] * &fact_ratio[k]]);
    }
    let scale = row_dens.iter().fold(fact_ratio[0].clone(), |acc, l| acc * l);
    acc.scale(&super::Rational::new(BigInt::one(), scale))
}

/// Matrix `[D^j f_i]` with rows indexed by `i`.
pub fn wronskian_matrix(fs: &[Poly]) -> Vec<Vec<Poly>> {
    let m = fs.len();
    fs.iter()
        .map(|f| {
            let mut row = Vec::with_capacity(m);
            let mut g = f.clone();
            for _ in 0..m {
                let next = g.derivative();
                row.push(g);
                g = next;
            }
            row
        })
        .collect()
}

/// `Σ deg f_i − m(m−1)/2`, which bounds the Wronskian degree; `None` when
/// the Wronskian is forced to vanish.
pub fn wronskian_degree_bound(fs: &[Poly]) -> Option<usize> {
    let mut total = 0usize;
    for f in fs {
        total += f.degree()?;
    }
    let m = fs.len();
    total.checked_sub(m * m.saturating_sub(1) / 2)
}

pub fn wronskian_with(fs: &[Poly], method: DetMethod) -> Poly {
    if fs.is_empty() {
        return Poly::one();
    }
    let Some(bound) = wronskian_degree_bound(fs) else {
        return Poly::zero();
    };
    determinant(&wronskian_matrix(fs), bound, method)
}

/// Wronskian `det [D_z^j f_i]`.
pub fn wronskian(fs: &[Poly]) -> Poly {
    wronskian_with(fs, DetMethod::Auto)
}

#[cfg(test)]
mod tests {
    use super::super::hermite::hermite;
    use super::*;

    #[test]
    fn small_wronskians() {
        assert_eq!(wronskian(&[hermite(1)]), Poly::from_ints(&[0, 2]));
        assert_eq!(wronskian(&[hermite(1), hermite(2)]), Poly::from_ints(&[4, 0, 8]));
        assert_eq!(wronskian(&[]), Poly::one());
        assert_eq!(wronskian(&[hermite(2), hermite(2)]), Poly::zero());
    }

    #[test]
    fn both_methods_agree() {
        let fs: Vec<Poly> = [1, 2, 4, 7, 8, 11].iter().map(|&n| hermite(n)).collect();
        let a = wronskian_with(&fs, DetMethod::Bareiss);
        let b = wronskian_with(&fs, DetMethod::Interpolation);
        assert_eq!(a, b);
        assert_eq!(a.degree(), Some(33 - 15));
    }

    #[test]
    fn integer_determinant() {
        let m = vec![
            vec![BigInt::from(0), BigInt::from(2), BigInt::from(1)],
            vec![BigInt::from(3), BigInt::from(1), BigInt::from(0)],
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)],
        ];
        assert_eq!(det_integer(m), BigInt::from(-4));
    }
}
