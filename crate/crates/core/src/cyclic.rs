//! Interlacing, k-modular decomposition and cyclic Maya diagrams.
//!
//! A Maya diagram `M` is `(p, k)`-cyclic when `p` flips take it to `M + k`.
//! Such diagrams are the interlacing of `k` diagrams whose genera fix the
//! signature `(p_0, …, p_{k−1})`, `p_i = 2g_i + 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maya::{BlockCoordinates, MayaDiagram};

/// `Θ(M^(0), …, M^(k−1)) = ⋃ (k·M^(i) + i)`.
pub fn interlace(diagrams: &[MayaDiagram]) -> MayaDiagram {
    let k = diagrams.len() as i64;
    assert!(k >= 1, "interlacing needs at least one diagram");
    let (mut lo, mut hi) = (0i64, 0i64);
    for (i, m) in diagrams.iter().enumerate() {
        let (a, b) = m.window();
        lo = lo.min(k * a + i as i64);
        hi = hi.max(k * b + i as i64);
    }
    MayaDiagram::from_window(lo, hi, |m| {
        let i = m.rem_euclid(k);
        diagrams[i as usize].contains(m.div_euclid(k))
    })
}

/// Interlacing of finite sets, `Θ(A_0, …, A_{k−1}) = ⋃ (k·A_i + i)`, with
/// the order of the arguments kept.
pub fn interlace_sets(sets: &[Vec<i64>]) -> Vec<i64> {
    let k = sets.len() as i64;
    sets.iter()
        .enumerate()
        .flat_map(|(i, s)| s.iter().map(move |&m| k * m + i as i64))
        .collect()
}

/// `M^(i) = {m : k·m + i ∈ M}` for `i = 0, …, k−1`.
pub fn modular_decompose(m: &MayaDiagram, k: usize) -> Vec<MayaDiagram> {
    assert!(k >= 1, "modulus must be positive");
    let kk = k as i64;
    let (a, b) = m.window();
    (0..kk)
        .map(|i| {
            let lo = (a - i).div_euclid(kk) - 1;
            let hi = (b - i).div_euclid(kk) + 2;
            MayaDiagram::from_window(lo, hi, |x| m.contains(kk * x + i))
        })
        .collect()
}

/// Ordered k-tuple of odd positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Signature {
    parts: Vec<usize>,
}

impl Signature {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidSignature { parts, reason: "no parts".into() });
        }
        if parts.iter().any(|&p| p % 2 == 0) {
            return Err(Error::InvalidSignature { parts, reason: "parts must be odd".into() });
        }
        Ok(Signature { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Period `p = Σ p_i`.
    pub fn period(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Shift `k`, the number of parts.
    pub fn shift(&self) -> usize {
        self.parts.len()
    }

    /// True for the five signatures of the A_4 classification.
    pub fn is_a4(&self) -> bool {
        self.period() == 5
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Shifts `k` with `1 ≤ k ≤ p` and `k ≡ p (mod 2)`.
pub fn admissible_shifts(p: usize) -> Result<Vec<usize>> {
    if p % 2 == 0 {
        return Err(Error::EvenPeriod(p));
    }
    Ok((1..=p).filter(|k| k % 2 == p % 2).collect())
}

/// All ordered k-tuples of odd positive integers summing to `p`, in a
/// fixed order (lexicographic on the parts, decreasing).
pub fn enumerate_signatures(p: usize, k: usize) -> Result<Vec<Signature>> {
    if !admissible_shifts(p)?.contains(&k) {
        return Err(Error::InadmissibleShift { p, k });
    }
    fn rec(rest: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Signature>) {
        if slots == 0 {
            if rest == 0 {
                out.push(Signature { parts: prefix.clone() });
            }
            return;
        }
        let max = rest.saturating_sub(slots - 1);
        let mut part = if max % 2 == 1 { max } else { max.saturating_sub(1) };
        while part >= 1 {
            prefix.push(part);
            rec(rest - part, slots - 1, prefix, out);
            prefix.pop();
            if part < 2 {
                break;
            }
            part -= 2;
        }
    }
    let mut out = Vec::new();
    rec(p, k, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `(β^(0) | … | β^(k−1))`: one block-coordinate tuple per residue class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KBlockCoordinates {
    blocks: Vec<BlockCoordinates>,
}

impl KBlockCoordinates {
    pub fn new(blocks: Vec<BlockCoordinates>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::NonPositiveShift(0));
        }
        Ok(KBlockCoordinates { blocks })
    }

    /// From raw integer tuples; repeated entries are allowed.
    pub fn from_slices(blocks: &[&[i64]]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|b| BlockCoordinates::multiset(b.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        KBlockCoordinates::new(blocks)
    }

    /// k-block coordinates of `M`, via the k-modular decomposition.
    pub fn of_diagram(m: &MayaDiagram, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::NonPositiveShift(0));
        }
        let blocks = modular_decompose(m, k).iter().map(|d| d.block_coordinates()).collect();
        KBlockCoordinates::new(blocks)
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[BlockCoordinates] {
        &self.blocks
    }

    pub fn signature(&self) -> Signature {
        Signature { parts: self.blocks.iter().map(BlockCoordinates::len).collect() }
    }

    pub fn period(&self) -> usize {
        self.blocks.iter().map(BlockCoordinates::len).sum()
    }

    pub fn is_strict(&self) -> bool {
        self.blocks.iter().all(BlockCoordinates::is_strict)
    }

    /// `Ξ_k(β) = Θ(Ξ(β^(0)), …, Ξ(β^(k−1)))`.
    pub fn to_diagram(&self) -> MayaDiagram {
        let parts: Vec<MayaDiagram> = self.blocks.iter().map(BlockCoordinates::to_diagram).collect();
        interlace(&parts)
    }

    /// `(kβ^(0)_j)_j, (kβ^(1)_j + 1)_j, …, (kβ^(k−1)_j + k−1)_j`, the
    /// enumeration of `Υ(M, M+k)` in residue-then-value order.
    pub fn canonical_flip_sequence(&self) -> Vec<i64> {
        let sets: Vec<Vec<i64>> = self.blocks.iter().map(|b| b.as_slice().to_vec()).collect();
        interlace_sets(&sets)
    }
}

impl std::fmt::Display for KBlockCoordinates {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.as_slice().iter().map(i64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "({})", parts.join("|"))
    }
}

/// Normalized k-block coordinates for a signature and `p − 1` non-negative
/// integers: the first block starts at 0 and each block lists the partial
/// sums of its own run of `n`'s.
///
/// For `p = 5` this is the A_4 table, e.g. `(5) ↦ (0, n_1, n_1+n_2, …)` and
/// `(1,1,3) ↦ (0 | n_1 | n_2, n_2+n_3, n_2+n_3+n_4)`.
pub fn normalized_blocks(signature: &Signature, n: &[u64]) -> Result<KBlockCoordinates> {
    let p = signature.period();
    if n.len() != p - 1 {
        return Err(Error::ParameterCount { expected: p - 1, got: n.len() });
    }
    let mut it = n.iter().map(|&x| x as i64);
    let mut blocks = Vec::with_capacity(signature.shift());
    for (i, &len) in signature.parts().iter().enumerate() {
        let mut beta = Vec::with_capacity(len);
        let mut acc = 0i64;
        if i == 0 {
            beta.push(0);
        }
        while beta.len() < len {
            acc += it.next().expect("count checked above");
            beta.push(acc);
        }
        blocks.push(BlockCoordinates::multiset(beta)?);
    }
    KBlockCoordinates::new(blocks)
}

/// A_4 front door: [`normalized_blocks`] restricted to the five p = 5
/// signatures.
pub fn a4_blocks(signature: &Signature, n: &[u64; 4]) -> Result<KBlockCoordinates> {
    if !signature.is_a4() {
        return Err(Error::InvalidSignature {
            parts: signature.parts().to_vec(),
            reason: "A_4 signatures have period 5".into(),
        });
    }
    normalized_blocks(signature, n)
}

/// Checks that `perm` is a bijection of `{0, …, p−1}`.
pub fn validate_permutation(perm: &[usize], p: usize) -> Result<()> {
    if perm.len() != p {
        return Err(Error::InvalidPermutation {
            perm: perm.to_vec(),
            reason: format!("expected {p} entries"),
        });
    }
    let mut seen = vec![false; p];
    for &x in perm {
        if x >= p || std::mem::replace(&mut seen[x], true) {
            return Err(Error::InvalidPermutation {
                perm: perm.to_vec(),
                reason: "not a bijection of 0..p".into(),
            });
        }
    }
    Ok(())
}

/// A chain `M_0 → M_1 → … → M_p = M_0 + k` of single flips.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MayaCycle {
    /// Signed shift: `M_p = M_0 + k`. Negative only for reversed cycles.
    pub k: i64,
    pub signature: Signature,
    /// k-block coordinates whose canonical flip sequence `perm` indexes.
    pub blocks: KBlockCoordinates,
    pub perm: Vec<usize>,
    /// `μ_{π_0}, …, μ_{π_{p−1}}`.
    pub flip_sites: Vec<i64>,
    /// `+1` when the flip removes a box present in `M_i`, else `−1`.
    pub signs: Vec<i8>,
    /// `λ_i = 2μ_{π_i} + 1`.
    pub lambdas: Vec<i64>,
    /// `a_i = λ_i − λ_{i+1}` with `λ_p = λ_0 + 2k`.
    pub a: Vec<i64>,
    pub diagrams: Vec<MayaDiagram>,
}

impl MayaCycle {
    pub fn period(&self) -> usize {
        self.flip_sites.len()
    }

    /// `Δ = −Σ a_i = 2k`.
    pub fn delta(&self) -> i64 {
        2 * self.k
    }

    /// Reversed chain `M_p → … → M_0`, a cycle with shift `−k`.
    pub fn reversed(&self) -> MayaCycle {
        let p = self.period();
        let diagrams: Vec<MayaDiagram> = self.diagrams.iter().rev().cloned().collect();
        let perm: Vec<usize> = self.perm.iter().rev().copied().collect();
        let flip_sites: Vec<i64> = self.flip_sites.iter().rev().copied().collect();
        let signs = (0..p).map(|i| -self.signs[p - 1 - i]).collect();
        let lambdas: Vec<i64> = flip_sites.iter().map(|m| 2 * m + 1).collect();
        let k = -self.k;
        let a = cycle_weights(&lambdas, k);
        MayaCycle {
            k,
            signature: self.signature.clone(),
            blocks: self.blocks.clone(),
            perm,
            flip_sites,
            signs,
            lambdas,
            a,
            diagrams,
        }
    }

    /// Re-derives every field from `blocks`, `perm` and `k` and compares.
    pub fn validate(&self) -> Result<()> {
        let p = self.period();
        let bad = |what: &str| Err(Error::MalformedCycle(what.to_string()));
        if self.diagrams.len() != p + 1
            || self.signs.len() != p
            || self.lambdas.len() != p
            || self.a.len() != p
            || self.perm.len() != p
        {
            return bad("field lengths disagree with the period");
        }
        for i in 0..p {
            if self.diagrams[i].flip(self.flip_sites[i]) != self.diagrams[i + 1] {
                return bad("consecutive diagrams are not related by the recorded flip");
            }
            let expected = if self.diagrams[i].contains(self.flip_sites[i]) { 1 } else { -1 };
            if self.signs[i] != expected {
                return bad("sign does not match membership of the flip site");
            }
            if self.lambdas[i] != 2 * self.flip_sites[i] + 1 {
                return bad("eigenvalue does not match flip site");
            }
        }
        if self.diagrams[p] != self.diagrams[0].shift(self.k) {
            return bad("chain does not close on M_0 + k");
        }
        if self.a != cycle_weights(&self.lambdas, self.k) {
            return bad("weights do not match eigenvalues");
        }
        Ok(())
    }
}

fn cycle_weights(lambdas: &[i64], k: i64) -> Vec<i64> {
    let p = lambdas.len();
    (0..p)
        .map(|i| {
            let next = if i + 1 == p { lambdas[0] + 2 * k } else { lambdas[i + 1] };
            lambdas[i] - next
        })
        .collect()
}

/// `M_{i+1} = flip(M_i, μ_{π_i})` starting from `M_0 = Ξ_k(blocks)`.
pub fn build_cycle(blocks: &KBlockCoordinates, perm: &[usize]) -> Result<MayaCycle> {
    let p = blocks.period();
    validate_permutation(perm, p)?;
    let mu = blocks.canonical_flip_sequence();
    let flip_sites: Vec<i64> = perm.iter().map(|&j| mu[j]).collect();
    let mut diagrams = Vec::with_capacity(p + 1);
    diagrams.push(blocks.to_diagram());
    let mut signs = Vec::with_capacity(p);
    for &m in &flip_sites {
        let cur = diagrams.last().unwrap();
        signs.push(if cur.contains(m) { 1 } else { -1 });
        let next = cur.flip(m);
        diagrams.push(next);
    }
    let k = blocks.k() as i64;
    if diagrams[p] != diagrams[0].shift(k) {
        return Err(Error::MalformedCycle(format!(
            "flips of {blocks} do not close on M_0 + {k}"
        )));
    }
    let lambdas: Vec<i64> = flip_sites.iter().map(|m| 2 * m + 1).collect();
    let a = cycle_weights(&lambdas, k);
    Ok(MayaCycle {
        k,
        signature: blocks.signature(),
        blocks: blocks.clone(),
        perm: perm.to_vec(),
        flip_sites,
        signs,
        lambdas,
        a,
        diagrams,
    })
}

/// Cycle from a signature, `p − 1` normalized parameters and a permutation.
pub fn normalized_cycle(signature: &Signature, n: &[u64], perm: &[usize]) -> Result<MayaCycle> {
    build_cycle(&normalized_blocks(signature, n)?, perm)
}
