//! Rational solutions of the symmetric `A_{2n}` Painlevé systems
//!
//! ```text
//! f_i′ + f_i (Σ_{j=1}^n f_{i+2j−1} − Σ_{j=1}^n f_{i+2j}) = α_i,   i mod 2n+1
//! ```
//!
//! with `Σ f_i = z` and `Σ α_i = 1`, obtained from odd dressing chains by
//! `f_i(z) = c·(w_i + w_{i+1})(cz)`, `α_i = c²a_i`, `c² = −1/Δ`.
//!
//! The functions live in ℚ(c)(z). Odd cycles have odd `k`, so `c²` is never
//! a rational square for them; for hand-built tuples with `c = 1`, such as
//! the seeds, the coefficients are plain rationals and are carried in ℚ(i) with zero
//! imaginary part.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::chain::{chain_solution, ChainSolution};
use crate::cyclic::{a4_blocks, build_cycle, Signature};
use crate::error::{Error, Result};
use crate::exact::{is_rational_square, ExtPoly, ExtRatFn, Poly, PolyRing, QuadExt, RatFn, Rational, RationalFunction};
use crate::report::{IdentityCheck, Report};

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Square root of a rational square, non-negative.
fn rational_sqrt(q: &Rational) -> Rational {
    Rational::new(q.numer().sqrt(), q.denom().sqrt())
}

/// Generator used to store coefficients: `c²` itself unless it is a square.
pub fn ambient_generator(c_squared: &Rational) -> Rational {
    if is_rational_square(c_squared) {
        int(-1)
    } else {
        c_squared.clone()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PainleveSolution {
    pub n: usize,
    pub f: Vec<ExtRatFn>,
    pub alpha: Vec<Rational>,
    /// `c² = −1/Δ`.
    pub c_squared: Rational,
}

impl PainleveSolution {
    pub fn period(&self) -> usize {
        2 * self.n + 1
    }

    /// Builds a solution with rational coefficients and `c = 1`.
    pub fn from_rational(f: &[RatFn], alpha: Vec<Rational>) -> Result<Self> {
        if f.len() % 2 == 0 {
            return Err(Error::EvenPeriod(f.len()));
        }
        if alpha.len() != f.len() {
            return Err(Error::ParameterCount { expected: f.len(), got: alpha.len() });
        }
        let d = int(-1);
        let f = f.iter().map(|g| ExtRatFn::embed(g, &d)).collect::<Result<_>>()?;
        Ok(PainleveSolution { n: alpha.len() / 2, f, alpha, c_squared: Rational::one() })
    }

    /// Solutions of the A_4 system, in the order listed: one non-zero
    /// component, three consecutive equal components, all equal.
    pub fn seeds() -> Vec<PainleveSolution> {
        let z = RatFn::z();
        let seed = |m: usize| {
            let share = int(1) / int(m as i64);
            let f: Vec<RatFn> =
                (0..5).map(|i| if i < m { z.scale_rational(&share) } else { RatFn::zero() }).collect();
            let alpha = (0..5).map(|i| if i < m { share.clone() } else { Rational::zero() }).collect();
            PainleveSolution::from_rational(&f, alpha).expect("odd length")
        };
        vec![seed(1), seed(3), seed(5)]
    }
}

/// `g(r·z)` for rational `r`.
fn rescale_rational(g: &RatFn, r: &Rational) -> RatFn {
    RatFn::from_coprime(g.num().scale_variable(r), g.den().scale_variable(r))
}

/// `c·g(c·z)` in the ambient field of `c²`.
fn rescale(g: &RatFn, c_squared: &Rational) -> Result<ExtRatFn> {
    if is_rational_square(c_squared) {
        let r = rational_sqrt(c_squared);
        ExtRatFn::embed(&rescale_rational(g, &r).scale_rational(&r), &int(-1))
    } else {
        let c = QuadExt::generator(c_squared.clone())?;
        Ok(g.scale_argument(c_squared)?.scale(&c))
    }
}

pub fn to_painleve(sol: &ChainSolution) -> Result<PainleveSolution> {
    let p = sol.period();
    if p % 2 == 0 {
        return Err(Error::EvenPeriod(p));
    }
    if sol.delta.is_zero() {
        return Err(Error::ZeroShift);
    }
    let c_squared = -Rational::one() / &sol.delta;
    let f = (0..p)
        .into_par_iter()
        .map(|i| rescale(&(&sol.w[i] + &sol.w[(i + 1) % p]), &c_squared))
        .collect::<Result<Vec<_>>>()?;
    let alpha = sol.a.iter().map(|a| a * &c_squared).collect();
    Ok(PainleveSolution { n: p / 2, f, alpha, c_squared })
}

/// Residuals `f_i′ + f_i(Σ f_{i+2j−1} − Σ f_{i+2j}) − α_i` of any odd tuple.
pub fn system_residuals<P: PolyRing>(f: &[RationalFunction<P>], alpha: &[Rational]) -> Vec<RationalFunction<P>> {
    let p = f.len();
    let n = p / 2;
    (0..p)
        .into_par_iter()
        .map(|i| {
            let mut bracket = f[i].zero_like();
            for j in 1..=n {
                bracket = &bracket + &f[(i + 2 * j - 1) % p];
                bracket = &bracket - &f[(i + 2 * j) % p];
            }
            let lhs = &f[i].derivative() + &(&f[i] * &bracket);
            &lhs - &f[i].constant_like(alpha[i].clone())
        })
        .collect()
}

/// Checks the system entries `system[i]`, then `sum_f` (`Σf = z`) and
/// `sum_alpha` (`Σα = 1`).
pub fn verify_painleve(ps: &PainleveSolution) -> Report {
    let mut report = Report::default();
    if ps.f.len() != ps.period() || ps.alpha.len() != ps.period() {
        report.push(IdentityCheck::from_bool(
            "shape",
            false,
            Some(format!("expected {} components", ps.period())),
        ));
        return report;
    }
    for (i, r) in system_residuals(&ps.f, &ps.alpha).iter().enumerate() {
        report.push(IdentityCheck::from_residual(format!("system[{i}]"), r));
    }
    let d = ambient_generator(&ps.c_squared);
    let z = ExtRatFn::embed(&RatFn::z(), &d).expect("non-square generator");
    let sum = ps.f.iter().fold(z.zero_like(), |acc, g| &acc + g);
    report.push(IdentityCheck::from_residual("sum_f", &(&sum - &z)));
    let sum_alpha = ps.alpha.iter().fold(Rational::zero(), |acc, a| acc + a) - Rational::one();
    report.push(IdentityCheck::from_residual("sum_alpha", &RatFn::constant(sum_alpha)));
    report
}

/// `w_i = ½ Σ_{j=0}^{p−1} (−1)^j f_{i+j}`, the inverse of `f_i = w_i + w_{i+1}`.
pub fn inverse_map<P: PolyRing>(f: &[RationalFunction<P>]) -> Result<Vec<RationalFunction<P>>> {
    let p = f.len();
    if p % 2 == 0 {
        return Err(Error::EvenPeriod(p));
    }
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    Ok((0..p)
        .map(|i| {
            let mut acc = f[i].zero_like();
            for j in 0..p {
                let term = &f[(i + j) % p];
                acc = if j % 2 == 0 { &acc + term } else { &acc - term };
            }
            acc.scale_rational(&half)
        })
        .collect())
}

/// Chain solution behind the A_4 labelling `(signature, n, perm)`; `perm`
/// is a permutation of `0..5` ending in 0.
pub fn a4_chain_solution(signature: &Signature, n: &[u64; 4], perm: &[usize]) -> Result<ChainSolution> {
    if perm.last() != Some(&0) {
        return Err(Error::InvalidPermutation {
            perm: perm.to_vec(),
            reason: "normalized permutations end in 0".into(),
        });
    }
    let blocks = a4_blocks(signature, n)?;
    chain_solution(&build_cycle(&blocks, perm)?)
}

/// Rational solution of the A_4 system labelled by `(signature, n, perm)`.
pub fn a4_solution(signature: &Signature, n: &[u64; 4], perm: &[usize]) -> Result<PainleveSolution> {
    to_painleve(&a4_chain_solution(signature, n, perm)?)
}

#[derive(Serialize, Deserialize)]
struct RawFunction {
    num: Vec<[String; 2]>,
    den: Vec<[String; 2]>,
}

#[derive(Serialize, Deserialize)]
struct RawSolution {
    n: usize,
    alpha: Vec<String>,
    c_squared: String,
    f: Vec<RawFunction>,
}

fn pairs(p: &ExtPoly) -> Vec<[String; 2]> {
    p.coeffs().iter().map(|q| [q.a.to_string(), q.b.to_string()]).collect()
}

fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|e| Error::Parse(format!("rational {s:?}: {e}")))
}

fn unpair(raw: &[[String; 2]], d: &Rational, rational_only: bool) -> Result<ExtPoly> {
    let mut re = Vec::with_capacity(raw.len());
    let mut im = Vec::with_capacity(raw.len());
    for [a, b] in raw {
        re.push(parse_rational(a)?);
        let b = parse_rational(b)?;
        if rational_only && !b.is_zero() {
            return Err(Error::Parse("c is rational but a coefficient carries c".into()));
        }
        im.push(b);
    }
    ExtPoly::new(Poly::from_coeffs(&re), Poly::from_coeffs(&im), d.clone())
}

impl Serialize for PainleveSolution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawSolution {
            n: self.n,
            alpha: self.alpha.iter().map(ToString::to_string).collect(),
            c_squared: self.c_squared.to_string(),
            f: self.f.iter().map(|g| RawFunction { num: pairs(g.num()), den: pairs(g.den()) }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PainleveSolution {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawSolution::deserialize(de)?;
        let build = || -> Result<PainleveSolution> {
            let c_squared = parse_rational(&raw.c_squared)?;
            let d = ambient_generator(&c_squared);
            let rational_only = is_rational_square(&c_squared);
            let alpha = raw.alpha.iter().map(|a| parse_rational(a)).collect::<Result<_>>()?;
            let f = raw
                .f
                .iter()
                .map(|g| {
                    let num = unpair(&g.num, &d, rational_only)?;
                    let den = unpair(&g.den, &d, rational_only)?;
                    ExtRatFn::new(num, den)
                })
                .collect::<Result<_>>()?;
            Ok(PainleveSolution { n: raw.n, f, alpha, c_squared })
        };
        build().map_err(D::Error::custom)
    }
}
