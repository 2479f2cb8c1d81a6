//! Hermite polynomials `H_n` and their conjugates `θ_n(z) = i^{-n} H_n(iz)`.

use num_bigint::BigInt;

use super::Poly;

/// Coefficient rows of the three-term recurrence
/// `y_{n+1} = 2z·y_n + sign·2n·y_{n−1}`, up to and including degree `n`.
fn recurrence(n: usize, sign: i64) -> Vec<BigInt> {
    let mut prev: Vec<BigInt> = vec![BigInt::from(1)];
    if n == 0 {
        return prev;
    }
    let mut cur: Vec<BigInt> = vec![BigInt::from(0), BigInt::from(2)];
    for m in 1..n {
        let mut next = vec![BigInt::from(0); m + 2];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c * 2;
        }
        let f = BigInt::from(sign * 2 * m as i64);
        for (i, c) in prev.iter().enumerate() {
            next[i] += c * &f;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Physicists' Hermite polynomial: `H_0 = 1`, `H_1 = 2z`,
/// `H_{n+1} = 2z·H_n − 2n·H_{n−1}`.
pub fn hermite(n: usize) -> Poly {
    Poly::from_bigints(recurrence(n, -1))
}

/// Conjugate Hermite polynomial: `θ_{n+1} = 2z·θ_n + 2n·θ_{n−1}`, which
/// has only non-negative coefficients.
pub fn conjugate_hermite(n: usize) -> Poly {
    Poly::from_bigints(recurrence(n, 1))
}
