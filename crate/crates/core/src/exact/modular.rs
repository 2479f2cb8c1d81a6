//! Word-size modular arithmetic and the multi-modular gcd driver.
//!
//! Polynomial gcds over ℚ and over ℚ(c) are computed by reducing modulo a
//! stream of 62-bit primes, taking monic gcds in F_p[z], lifting the
//! coefficients by Chinese remaindering and rational reconstruction, and
//! accepting a candidate only once exact trial division succeeds. A prime
//! whose modular gcd is constant proves coprimality outright.

use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse modulo a prime; `a` must be non-zero mod `p`.
#[inline]
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

const CACHED_PRIMES: usize = 256;

fn cached_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(CACHED_PRIMES);
        let mut n = (1u64 << 62) - 1;
        while out.len() < CACHED_PRIMES {
            if is_prime(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

/// Descending stream of primes just below 2^62.
pub(crate) fn primes() -> impl Iterator<Item = u64> {
    let cached = cached_primes();
    let last = *cached.last().expect("prime cache is non-empty");
    cached.iter().copied().chain(
        (0..)
            .map(move |i: u64| last - 2 * (i + 1))
            .filter(|&n| is_prime(n)),
    )
}

/// Square root modulo an odd prime (Tonelli–Shanks). Returns `None` for
/// non-residues.
pub(crate) fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2u64;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0u32;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1u64 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    // canonical choice so that both embeddings are reproducible
    Some(r.min(p - r))
}

pub(crate) fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    let r = (x.magnitude() % p).to_u64().expect("residue fits in u64");
    if x.sign() == Sign::Minus && r != 0 {
        p - r
    } else {
        r
    }
}

/// Image of a rational in F_p, `None` if the denominator vanishes mod p.
pub(crate) fn rational_mod(x: &Rational, p: u64) -> Option<u64> {
    let d = bigint_mod(x.denom(), p);
    if d == 0 {
        return None;
    }
    Some(mul_mod(bigint_mod(x.numer(), p), inv_mod(d, p), p))
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn make_monic(v: &mut [u64], p: u64) {
    if let Some(&lc) = v.last() {
        let inv = inv_mod(lc, p);
        for c in v.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
}

fn rem_mod(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    while a.len() > db {
        let top = a.len() - 1;
        let q = mul_mod(a[top], inv, p);
        if q != 0 {
            let shift = top - db;
            for (j, &bj) in b.iter().enumerate() {
                a[shift + j] = sub_mod(a[shift + j], mul_mod(q, bj, p), p);
            }
        }
        a.pop();
        trim(a);
    }
}

/// Monic gcd in F_p[z] of two non-zero polynomials given ascending.
pub(crate) fn gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        rem_mod(&mut a, &b, p);
        std::mem::swap(&mut a, &mut b);
    }
    make_monic(&mut a, p);
    a
}

/// Symmetric-free CRT accumulator over a vector of residues.
struct Crt {
    modulus: BigInt,
    residues: Vec<BigInt>,
}

impl Crt {
    fn new(p: u64, residues: &[u64]) -> Self {
        Crt {
            modulus: BigInt::from(p),
            residues: residues.iter().map(|&r| BigInt::from(r)).collect(),
        }
    }

    fn absorb(&mut self, p: u64, residues: &[u64]) {
        let m_inv = inv_mod(bigint_mod(&self.modulus, p), p);
        for (x, &r) in self.residues.iter_mut().zip(residues) {
            let diff = sub_mod(r, bigint_mod(x, p), p);
            let t = mul_mod(diff, m_inv, p);
            *x += &self.modulus * BigInt::from(t);
        }
        self.modulus *= BigInt::from(p);
    }
}

/// Wang's rational reconstruction of `u` modulo `m`.
pub(crate) fn rational_reconstruct(u: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / BigInt::from(2u8)).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

/// Outcome of a modular gcd computation.
pub(crate) enum GcdOutcome<T> {
    Coprime,
    Found(T),
}

/// The pieces a coefficient domain must supply to the multi-modular driver.
pub(crate) trait ModularGcdProblem {
    type Lifted;
    /// Images of both operands under every embedding into F_p, or `None`
    /// when the prime must be skipped.
    fn embed(&self, p: u64) -> Option<Vec<(Vec<u64>, Vec<u64>)>>;
    /// Component residues of the monic gcd from its images under the
    /// embeddings returned by [`embed`](Self::embed).
    fn components(&self, p: u64, images: &[Vec<u64>]) -> Vec<u64>;
    /// Build the candidate gcd from reconstructed components and verify it
    /// by exact division.
    fn lift(&self, components: &[Rational], degree: usize) -> Option<Self::Lifted>;
}

pub(crate) fn modular_gcd<P: ModularGcdProblem>(problem: &P) -> GcdOutcome<P::Lifted> {
    let mut best_degree = usize::MAX;
    let mut crt: Option<Crt> = None;
    let mut previous: Option<Vec<Rational>> = None;

    for p in primes() {
        let Some(pairs) = problem.embed(p) else {
            continue;
        };
        let images: Vec<Vec<u64>> = pairs.iter().map(|(a, b)| gcd_mod(a, b, p)).collect();
        let degree = images.iter().map(|g| g.len() - 1).min().expect("at least one embedding");
        if degree == 0 {
            return GcdOutcome::Coprime;
        }
        if images.iter().any(|g| g.len() - 1 != degree) || degree > best_degree {
            continue;
        }
        let residues = problem.components(p, &images);
        if degree < best_degree {
            best_degree = degree;
            crt = Some(Crt::new(p, &residues));
            previous = None;
            continue;
        }
        let acc = crt.as_mut().expect("accumulator initialised with best degree");
        acc.absorb(p, &residues);

        let reconstructed: Option<Vec<Rational>> = acc
            .residues
            .iter()
            .map(|u| rational_reconstruct(u, &acc.modulus))
            .collect();
        let Some(reconstructed) = reconstructed else {
            previous = None;
            continue;
        };
        if previous.as_ref() == Some(&reconstructed) {
            if let Some(lifted) = problem.lift(&reconstructed, degree) {
                return GcdOutcome::Found(lifted);
            }
        }
        previous = Some(reconstructed);
    }
    unreachable!("prime stream is infinite")
}
