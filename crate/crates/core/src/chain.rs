//! Rational solutions of cyclic dressing chains built from Maya cycles.
//!
//! A cycle `M_0 → … → M_p = M_0 + k` yields
//! `w_i = s_i·z + (log H_{M_{i+1}})′ − (log H_{M_i})′` and the weights
//! `a_i = λ_i − λ_{i+1}`, which solve
//! `(w_i + w_{i+1})′ + w_{i+1}² − w_i² = a_i` with shift `Δ = 2k`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::cyclic::MayaCycle;
use crate::exact::{Poly, RatFn, Rational};
use crate::maya::MayaDiagram;
use crate::pseudo_wronskian::{hermite_label, normalized_via_standard_form};
use crate::report::{IdentityCheck, Report};

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `(log H_M)′` for a pseudo-Wronskian.
fn log_derivative(tau: &Poly) -> RatFn {
    RatFn::log_derivative(tau).expect("pseudo-Wronskians never vanish")
}

/// `U = z² − 2·ℓ′ + 2s` from the log-derivative `ℓ` of `H_M`.
fn potential_from(ell: &RatFn, index: i64) -> RatFn {
    let z2 = RatFn::from_poly(Poly::from_coeffs(&[int(2 * index), int(0), int(1)]));
    &z2 - &ell.derivative().scale_rational(&int(2))
}

/// Rational extension `U_M = z² − 2(log H_M)″ + 2s_M` of the oscillator.
pub fn potential(m: &MayaDiagram) -> RatFn {
    let tau = normalized_via_standard_form(m);
    potential_from(&log_derivative(&tau), m.index())
}

#[derive(Clone, Debug)]
pub struct ChainSolution {
    pub cycle: MayaCycle,
    /// `Ĥ_{M_0}, …, Ĥ_{M_p}`.
    pub taus: Vec<Poly>,
    pub w: Vec<RatFn>,
    pub a: Vec<Rational>,
    pub delta: Rational,
    /// `U_{M_0}, …, U_{M_p}`.
    pub potentials: Vec<RatFn>,
    /// `λ_i` as rationals, kept alongside `a` so corrupted data can be
    /// checked independently.
    pub lambdas: Vec<Rational>,
}

impl ChainSolution {
    pub fn period(&self) -> usize {
        self.w.len()
    }

    /// Hermite index lists of `H_{M_0}, …, H_{M_p}`.
    pub fn hermite_labels(&self) -> Vec<String> {
        self.cycle.diagrams.iter().map(hermite_label).collect()
    }

    /// `w_i ↦ −w_{p−1−i}`, `a_i ↦ −a_{p−2−i}`, `Δ ↦ −Δ`, the solution
    /// attached to the reversed cycle.
    pub fn reversed(&self) -> ChainSolution {
        let p = self.period();
        let w = (0..p).map(|i| -&self.w[p - 1 - i]).collect();
        let a = (0..p).map(|i| -&self.a[(2 * p - 2 - i) % p]).collect();
        let mut taus = self.taus.clone();
        taus.reverse();
        let mut potentials = self.potentials.clone();
        potentials.reverse();
        let mut lambdas = self.lambdas.clone();
        lambdas.reverse();
        ChainSolution {
            cycle: self.cycle.reversed(),
            taus,
            w,
            a,
            delta: -&self.delta,
            potentials,
            lambdas,
        }
    }
}

/// Assembles `w`, `a`, `Δ` and the potentials for a cycle.
pub fn chain_solution(cycle: &MayaCycle) -> crate::Result<ChainSolution> {
    cycle.validate()?;
    let p = cycle.period();
    let mut taus: Vec<Poly> = cycle.diagrams[..p]
        .par_iter()
        .map(normalized_via_standard_form)
        .collect();
    // Ĥ is translation invariant and M_p = M_0 + k
    taus.push(taus[0].clone());
    let ells: Vec<RatFn> = taus.par_iter().map(log_derivative).collect();
    let z = RatFn::z();
    let w: Vec<RatFn> = (0..p)
        .into_par_iter()
        .map(|i| &(&z.scale_rational(&int(cycle.signs[i] as i64)) + &ells[i + 1]) - &ells[i])
        .collect();
    let potentials: Vec<RatFn> = (0..=p)
        .into_par_iter()
        .map(|i| potential_from(&ells[i], cycle.diagrams[i].index()))
        .collect();
    Ok(ChainSolution {
        cycle: cycle.clone(),
        taus,
        w,
        a: cycle.a.iter().map(|&x| int(x)).collect(),
        delta: int(cycle.delta()),
        potentials,
        lambdas: cycle.lambdas.iter().map(|&x| int(x)).collect(),
    })
}

/// Checks every dressing-chain identity as an exact rational function.
///
/// The entries are `chain[i]`, `riccati_plus[i]`, `riccati_minus[i]`,
/// `potential_step[i]`, `weight_sum`, `first_integral` and `closure`.
pub fn verify_chain(sol: &ChainSolution) -> Report {
    let p = sol.period();
    let w = &sol.w;
    let u = &sol.potentials;
    let per_index: Vec<[IdentityCheck; 4]> = (0..p)
        .into_par_iter()
        .map(|i| {
            let j = (i + 1) % p;
            let dw = w[i].derivative();
            let wi2 = &w[i] * &w[i];
            let chain = &(&(&w[i] + &w[j]).derivative() + &(&w[j] * &w[j])) - &wi2;
            let chain = &chain - &RatFn::constant(sol.a[i].clone());
            let lam = RatFn::constant(sol.lambdas[i].clone());
            let plus = &(&dw + &wi2) - &(&u[i] - &lam);
            let minus = &(&wi2 - &dw) - &(&u[i + 1] - &lam);
            let step = &(&u[i + 1] - &u[i]) + &dw.scale_rational(&int(2));
            [
                IdentityCheck::from_residual(format!("chain[{i}]"), &chain),
                IdentityCheck::from_residual(format!("riccati_plus[{i}]"), &plus),
                IdentityCheck::from_residual(format!("riccati_minus[{i}]"), &minus),
                IdentityCheck::from_residual(format!("potential_step[{i}]"), &step),
            ]
        })
        .collect();
    let mut report = Report::default();
    for group in per_index {
        for c in group {
            report.push(c);
        }
    }
    let sum_a = sol.a.iter().fold(Rational::zero(), |acc, x| acc + x) + &sol.delta;
    report.push(IdentityCheck::from_residual("weight_sum", &RatFn::constant(sum_a)));
    let half_delta = &sol.delta / int(2);
    let first_integral = w
        .iter()
        .fold(RatFn::z().scale_rational(&half_delta), |acc, wi| &acc + wi);
    report.push(IdentityCheck::from_residual("first_integral", &first_integral));
    let closure = &(&u[p] - &u[0]) - &RatFn::constant(sol.delta.clone());
    report.push(IdentityCheck::from_residual("closure", &closure));
    report
}

/// Log-derivative `u = εz + (log H_{M′} − log H_M)′` of the seed function
/// attached to the flip of `M` at `m`, with `ε = +1` when `m ∈ M`.
pub fn seed_log_derivative(m: &MayaDiagram, site: i64) -> RatFn {
    let flipped = m.flip(site);
    let eps = if m.contains(site) { 1 } else { -1 };
    let ell = log_derivative(&normalized_via_standard_form(m));
    let ell2 = log_derivative(&normalized_via_standard_form(&flipped));
    &(&RatFn::z().scale_rational(&int(eps)) + &ell2) - &ell
}

/// Checks `−(u′ + u²) + U_M − (2m + 1) = 0` for the seed function of the
/// flip at `m`, i.e. that it is an eigenfunction with eigenvalue `2m + 1`.
pub fn verify_eigenfunction(m: &MayaDiagram, site: i64) -> Report {
    let u = seed_log_derivative(m, site);
    let lhs = &(&RatFn::zero() - &(&u.derivative() + &(&u * &u))) + &potential(m);
    let residual = &lhs - &RatFn::constant(int(2 * site + 1));
    let mut report = Report::default();
    report.push(IdentityCheck::from_residual(format!("eigenfunction[{site}]"), &residual));
    report
}

/// Checks `U_{flip(M,m)} − U_M + 2u′ = 0` with `u` the seed log-derivative.
pub fn verify_flip_darboux(m: &MayaDiagram, site: i64) -> Report {
    let u = seed_log_derivative(m, site);
    let residual =
        &(&potential(&m.flip(site)) - &potential(m)) + &u.derivative().scale_rational(&int(2));
    let mut report = Report::default();
    report.push(IdentityCheck::from_residual(format!("flip_darboux[{site}]"), &residual));
    report
}

/// Replaces `a_i` by `a_i + 1`; used as a negative control.
pub fn corrupt_weight(sol: &ChainSolution, i: usize) -> ChainSolution {
    let mut out = sol.clone();
    out.a[i] += Rational::one();
    out
}
