//! The special polynomial families `H^{(s)}_{n_1,n_2,n_3,n_4}`: Hermite
//! Wronskians over the index set `M_+` of the seed diagram `Ξ_5(blocks)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cyclic::{a4_blocks, Signature};
use crate::error::{Error, Result};
use crate::exact::{hermite, wronskian, Poly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WronskianFamilySpec {
    pub signature: Signature,
    pub n: [u64; 4],
}

fn runs(pieces: &[(i64, i64, u64)]) -> Vec<i64> {
    pieces
        .iter()
        .flat_map(|&(start, step, count)| (0..count as i64).map(move |j| start + step * j))
        .collect()
}

impl WronskianFamilySpec {
    pub fn new(signature: Signature, n: [u64; 4]) -> Result<Self> {
        if !signature.is_a4() {
            return Err(Error::InvalidSignature {
                parts: signature.parts().to_vec(),
                reason: "families are defined for the period-5 signatures".into(),
            });
        }
        Ok(WronskianFamilySpec { signature, n })
    }

    /// Closed-form index lists for `(5)`, `(3,1,1)` and `(1,1,1,1,1)`.
    fn closed_form(&self) -> Option<Vec<i64>> {
        let [n1, n2, n3, n4] = self.n.map(|x| x as i64);
        let u = |x: i64| x as u64;
        match self.signature.parts() {
            [5] => Some(runs(&[(n1, 1, u(n2)), (n1 + n2 + n3, 1, u(n4))])),
            [3, 1, 1] => Some(runs(&[(3 * n1, 3, u(n2)), (1, 3, u(n3)), (2, 3, u(n4))])),
            [1, 1, 1, 1, 1] => Some(runs(&[(1, 5, u(n1)), (2, 5, u(n2)), (3, 5, u(n3)), (4, 5, u(n4))])),
            _ => None,
        }
    }

    /// `M_+` of the seed diagram read from its k-block coordinates.
    pub fn indices_from_diagram(&self) -> Result<Vec<i64>> {
        let m = a4_blocks(&self.signature, &self.n)?.to_diagram();
        Ok(m.filled_nonneg().to_vec())
    }

    /// Sorted Hermite indices of the family member, rejecting repeats.
    pub fn index_list(&self) -> Result<Vec<i64>> {
        let raw = match self.closed_form() {
            Some(v) => v,
            None => self.indices_from_diagram()?,
        };
        let mut set = BTreeSet::new();
        for &i in &raw {
            if !set.insert(i) {
                return Err(Error::DuplicateIndex(i as usize));
            }
        }
        Ok(set.into_iter().collect())
    }

    /// `Σ indices − m(m−1)/2`.
    pub fn expected_degree(&self) -> Result<usize> {
        let idx = self.index_list()?;
        let m = idx.len() as i64;
        Ok((idx.iter().sum::<i64>() - m * (m - 1) / 2) as usize)
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self.signature.parts().iter().map(ToString::to_string).collect();
        let n: Vec<String> = self.n.iter().map(ToString::to_string).collect();
        format!("H^({})_{}", parts.join(","), n.join(","))
    }
}

/// The exact Hermite Wronskian of the family member.
pub fn family_polynomial(spec: &WronskianFamilySpec) -> Result<Poly> {
    let fs: Vec<Poly> = spec.index_list()?.iter().map(|&i| hermite(i as usize)).collect();
    Ok(wronskian(&fs))
}

pub fn is_triangular(m: usize) -> bool {
    let mut t = 0;
    let mut k = 0;
    while t < m {
        k += 1;
        t += k;
    }
    t == m
}
