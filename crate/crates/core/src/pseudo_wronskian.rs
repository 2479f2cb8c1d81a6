//! Hermite pseudo-Wronskians `H_M` of arbitrary Maya diagrams.
//!
//! For the Frobenius symbol `(s_1 > … > s_r | t_1 > … > t_q)` the
//! polynomial `H_M` is the `(r+q)×(r+q)` determinant whose first `r` rows
//! are `θ_{s_i}, θ_{s_i+1}, …, θ_{s_i+r+q−1}` and whose last `q` rows are
//! `H_t, D H_t, …, D^{r+q−1} H_t` for `t = t_q < … < t_1`.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::exact::{conjugate_hermite, determinant, hermite, wronskian, DetMethod, Poly, Rational};
use crate::maya::MayaDiagram;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoWronskian {
    pub maya: MayaDiagram,
    pub poly: Poly,
    /// Number of θ rows, `|M_−|`.
    pub r: usize,
    /// Number of Hermite rows, `|M_+|`.
    pub q: usize,
}

/// Matrix of the pseudo-Wronskian, θ rows first.
pub fn pseudo_wronskian_matrix(m: &MayaDiagram) -> Vec<Vec<Poly>> {
    let sym = m.frobenius();
    let n = sym.s_list.len() + sym.t_list.len();
    let mut rows: Vec<Vec<Poly>> = sym
        .s_list
        .iter()
        .map(|&s| (0..n).map(|j| conjugate_hermite(s as usize + j)).collect())
        .collect();
    for &t in sym.t_list.iter().rev() {
        let mut row = Vec::with_capacity(n);
        let mut g = hermite(t as usize);
        for _ in 0..n {
            let next = g.derivative();
            row.push(g);
            g = next;
        }
        rows.push(row);
    }
    rows
}

/// Upper bound for `deg H_M`, attained by giving the θ rows the last `r`
/// columns and the Hermite rows the first `q`.
pub fn degree_bound(m: &MayaDiagram) -> usize {
    let sym = m.frobenius();
    let r = sym.s_list.len() as i64;
    let q = sym.t_list.len() as i64;
    let ss: i64 = sym.s_list.iter().sum();
    let ts: i64 = sym.t_list.iter().sum();
    (ss + r * q + r * (r - 1) / 2 + ts - q * (q - 1) / 2) as usize
}

pub fn pseudo_wronskian_with(m: &MayaDiagram, method: DetMethod) -> PseudoWronskian {
    let r = m.empty_neg().len();
    let q = m.filled_nonneg().len();
    let poly = determinant(&pseudo_wronskian_matrix(m), degree_bound(m), method);
    PseudoWronskian { maya: m.clone(), poly, r, q }
}

pub fn pseudo_wronskian(m: &MayaDiagram) -> PseudoWronskian {
    if m.empty_neg().is_empty() {
        let fs: Vec<Poly> = m.filled_nonneg().iter().map(|&t| hermite(t as usize)).collect();
        let q = fs.len();
        return PseudoWronskian { maya: m.clone(), poly: wronskian(&fs), r: 0, q };
    }
    pseudo_wronskian_with(m, DetMethod::Auto)
}

/// `(−1)^{rq} ∏_{i<j}(2s_j − 2s_i) ∏_{i<j}(2t_i − 2t_j)`, the constant
/// dividing `H_M` in the normalized pseudo-Wronskian.
pub fn normalization_constant(m: &MayaDiagram) -> BigInt {
    let sym = m.frobenius();
    let mut c = BigInt::one();
    let (s, t) = (&sym.s_list, &sym.t_list);
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            c *= BigInt::from(2 * s[j] - 2 * s[i]);
        }
    }
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            c *= BigInt::from(2 * t[i] - 2 * t[j]);
        }
    }
    if (s.len() * t.len()) % 2 == 1 {
        c = -c;
    }
    c
}

/// `Ĥ_M`, which satisfies `Ĥ_M = Ĥ_{M+k}` for every shift `k`.
pub fn normalized_pseudo_wronskian(m: &MayaDiagram) -> Poly {
    let pw = pseudo_wronskian(m);
    pw.poly.scale(&Rational::new(BigInt::one(), normalization_constant(m)))
}

/// `Ĥ_M` computed through the standard-form representative, which is a
/// plain Hermite Wronskian and usually the cheapest member of the class.
pub fn normalized_via_standard_form(m: &MayaDiagram) -> Poly {
    normalized_pseudo_wronskian(&m.standard_form().0)
}

/// Normalized pseudo-Wronskians of several diagrams, computed in parallel.
pub fn normalized_many(ms: &[MayaDiagram]) -> Vec<Poly> {
    ms.par_iter().map(normalized_via_standard_form).collect()
}

/// `Wr(H_a,H_b,…)` with ascending indices when `M` has no θ rows and
/// `pWr(θ: s_1,…,s_r | H: t_q,…,t_1)` otherwise. The empty Wronskian prints
/// as `Wr()`.
pub fn hermite_label(m: &MayaDiagram) -> String {
    let hs: Vec<String> = m.filled_nonneg().iter().map(|t| format!("H_{t}")).collect();
    if m.empty_neg().is_empty() {
        return format!("Wr({})", hs.join(","));
    }
    let ths: Vec<String> =
        m.frobenius().s_list.iter().map(|s| format!("θ_{s}")).collect();
    format!("pWr({} | {})", ths.join(","), hs.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maya::xi;

    fn x(beta: &[i64]) -> MayaDiagram {
        xi(beta).unwrap()
    }

    #[test]
    fn small_pseudo_wronskians() {
        assert_eq!(pseudo_wronskian(&MayaDiagram::trivial()).poly, Poly::one());
        // two θ rows: θ_1² − θ_0 θ_2 = −2
        let m = x(&[-2]);
        assert_eq!(pseudo_wronskian(&m).poly, Poly::from_ints(&[-2]));
        assert_eq!(normalized_pseudo_wronskian(&m), Poly::one());
        let m = x(&[2]);
        assert_eq!(pseudo_wronskian(&m).poly, Poly::from_ints(&[2]));
        assert_eq!(normalized_pseudo_wronskian(&m), Poly::one());
    }

    #[test]
    fn standard_form_is_a_plain_wronskian() {
        let m = MayaDiagram::from_parts(vec![2, 3, 4, 6], vec![]).unwrap();
        assert_eq!(hermite_label(&m), "Wr(H_2,H_3,H_4,H_6)");
        let fs: Vec<Poly> = [2, 3, 4, 6].iter().map(|&n| hermite(n)).collect();
        assert_eq!(pseudo_wronskian(&m).poly, wronskian(&fs));
        assert_eq!(pseudo_wronskian_with(&m, DetMethod::Bareiss).poly, wronskian(&fs));
    }

    #[test]
    fn mixed_determinant_matches_shift_partner() {
        let m = x(&[0, 1, 4]);
        let shifted = m.shift(-1);
        assert_eq!(shifted.frobenius().s_list, vec![0]);
        let pw = pseudo_wronskian(&shifted);
        assert_eq!((pw.r, pw.q), (1, 3));
        assert_eq!(normalized_pseudo_wronskian(&m), normalized_pseudo_wronskian(&shifted));
        assert_eq!(hermite_label(&shifted), "pWr(θ_0 | H_0,H_1,H_2)");
        assert_eq!(pw.poly.degree(), Some(degree_bound(&shifted)));
    }

    #[test]
    fn degree_bound_is_attained_for_standard_form() {
        let m = MayaDiagram::from_parts(vec![1, 2, 4, 7, 8, 11], vec![]).unwrap();
        assert_eq!(pseudo_wronskian(&m).poly.degree(), Some(degree_bound(&m)));
    }
}
