//! Maya diagrams: sets of integers containing every sufficiently negative
//! integer and no sufficiently positive one.
//!
//! Only the finite perturbation of `ℤ_{<0}` is stored: the filled
//! non-negative boxes `M_+` and the empty negative boxes, the latter encoded
//! as `−m−1 ≥ 0`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MayaDiagram {
    filled_nonneg: Vec<i64>,
    empty_neg: Vec<i64>,
}

/// Frobenius symbol `(s_1, …, s_r | t_1, …, t_q)`, both lists decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusSymbol {
    pub s_list: Vec<i64>,
    pub t_list: Vec<i64>,
}

impl FrobeniusSymbol {
    pub fn index(&self) -> i64 {
        self.t_list.len() as i64 - self.s_list.len() as i64
    }
}

impl fmt::Display for FrobeniusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({} | {})", join(&self.s_list), join(&self.t_list))
    }
}

/// Block coordinates `β = (β_0, …, β_{2g})`, describing
/// `Ξ(β) = (−∞, β_0) ∪ [β_1, β_2) ∪ … ∪ [β_{2g−1}, β_{2g})`.
///
/// Strictly increasing coordinates are canonical. Non-decreasing ones
/// describe degenerate multisets and must be built with
/// [`BlockCoordinates::multiset`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BlockCoordinates {
    beta: Vec<i64>,
}

fn check_odd(beta: &[i64]) -> Result<()> {
    if beta.len() % 2 == 0 {
        return Err(Error::EvenBlockLength(beta.len()));
    }
    Ok(())
}

impl BlockCoordinates {
    pub fn new(beta: Vec<i64>) -> Result<Self> {
        check_odd(&beta)?;
        if beta.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::BlockOrder { expected: "strictly increasing", got: beta });
        }
        Ok(BlockCoordinates { beta })
    }

    /// Non-decreasing coordinates; repeated entries are zero-length blocks.
    pub fn multiset(beta: Vec<i64>) -> Result<Self> {
        check_odd(&beta)?;
        if beta.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::BlockOrder { expected: "non-decreasing", got: beta });
        }
        Ok(BlockCoordinates { beta })
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.beta
    }

    pub fn len(&self) -> usize {
        self.beta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beta.is_empty()
    }

    /// `(len − 1) / 2`; an upper bound for the genus when degenerate.
    pub fn genus(&self) -> usize {
        (self.beta.len() - 1) / 2
    }

    pub fn is_strict(&self) -> bool {
        self.beta.windows(2).all(|w| w[0] < w[1])
    }

    pub fn shifted(&self, k: i64) -> Self {
        BlockCoordinates { beta: self.beta.iter().map(|b| b + k).collect() }
    }

    pub fn to_diagram(&self) -> MayaDiagram {
        xi(&self.beta).expect("validated at construction")
    }
}

impl fmt::Display for BlockCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.beta.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `Ξ(β)` for non-decreasing odd-length `β`.
pub fn xi(beta: &[i64]) -> Result<MayaDiagram> {
    check_odd(beta)?;
    if beta.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::BlockOrder { expected: "non-decreasing", got: beta.to_vec() });
    }
    let lo = beta[0];
    let hi = *beta.last().unwrap();
    Ok(MayaDiagram::from_window(lo, hi, |m| {
        if m < beta[0] {
            return true;
        }
        beta[1..]
            .chunks(2)
            .any(|c| c.len() == 2 && c[0] <= m && m < c[1])
    }))
}

fn strictly_increasing_nonneg(v: &[i64]) -> bool {
    v.iter().all(|&x| x >= 0) && v.windows(2).all(|w| w[0] < w[1])
}

impl MayaDiagram {
    /// The trivial diagram `ℤ_{<0} = Ξ(0)`.
    pub fn trivial() -> Self {
        MayaDiagram::default()
    }

    pub fn from_parts(filled_nonneg: Vec<i64>, empty_neg: Vec<i64>) -> Result<Self> {
        if !strictly_increasing_nonneg(&filled_nonneg) || !strictly_increasing_nonneg(&empty_neg)
        {
            return Err(Error::Parse(
                "Maya diagram data must be strictly increasing and non-negative".into(),
            ));
        }
        Ok(MayaDiagram { filled_nonneg, empty_neg })
    }

    /// Builds a diagram from a membership predicate that is authoritative on
    /// `[lo, hi)`; everything below `lo` is filled and everything from `hi`
    /// on is empty.
    pub fn from_window(lo: i64, hi: i64, contains: impl Fn(i64) -> bool) -> Self {
        let member = |m: i64| {
            if m < lo {
                true
            } else if m >= hi {
                false
            } else {
                contains(m)
            }
        };
        let filled_nonneg = (0..hi.max(0)).filter(|&m| member(m)).collect();
        let mut empty_neg: Vec<i64> =
            (lo.min(0)..0).filter(|&m| !member(m)).map(|m| -m - 1).collect();
        empty_neg.sort_unstable();
        MayaDiagram { filled_nonneg, empty_neg }
    }

    /// Diagram whose finite part is given explicitly: `set` lists the
    /// members in `[lo, ∞)`, and all integers below `lo` are members.
    pub fn from_members_above(lo: i64, set: &BTreeSet<i64>) -> Self {
        let hi = set.iter().next_back().map_or(lo, |&m| m + 1).max(lo);
        MayaDiagram::from_window(lo, hi, |m| set.contains(&m))
    }

    pub fn filled_nonneg(&self) -> &[i64] {
        &self.filled_nonneg
    }

    pub fn empty_neg(&self) -> &[i64] {
        &self.empty_neg
    }

    pub fn contains(&self, m: i64) -> bool {
        if m >= 0 {
            self.filled_nonneg.binary_search(&m).is_ok()
        } else {
            self.empty_neg.binary_search(&(-m - 1)).is_err()
        }
    }

    /// `s_M = |M_+| − |M_−|`.
    pub fn index(&self) -> i64 {
        self.filled_nonneg.len() as i64 - self.empty_neg.len() as i64
    }

    /// `(lo, hi)` such that every `m < lo` is a member and no `m ≥ hi` is.
    pub fn window(&self) -> (i64, i64) {
        let lo = self.empty_neg.last().map_or(0, |&e| -e - 1);
        let hi = self.filled_nonneg.last().map_or(0, |&f| f + 1);
        (lo, hi)
    }

    pub fn frobenius(&self) -> FrobeniusSymbol {
        FrobeniusSymbol {
            s_list: self.empty_neg.iter().rev().copied().collect(),
            t_list: self.filled_nonneg.iter().rev().copied().collect(),
        }
    }

    pub fn from_frobenius(sym: &FrobeniusSymbol) -> Result<Self> {
        let mut empty_neg = sym.s_list.clone();
        let mut filled_nonneg = sym.t_list.clone();
        empty_neg.reverse();
        filled_nonneg.reverse();
        MayaDiagram::from_parts(filled_nonneg, empty_neg)
    }

    /// `M + k`.
    pub fn shift(&self, k: i64) -> Self {
        if k == 0 {
            return self.clone();
        }
        let (lo, hi) = self.window();
        MayaDiagram::from_window(lo + k, hi + k, |m| self.contains(m - k))
    }

    /// `(M − k, k)` with `k = β_0`, so that the returned diagram has only
    /// filled boxes left of the origin and an empty box at 0.
    pub fn standard_form(&self) -> (Self, i64) {
        let k = self.first_missing();
        (self.shift(-k), k)
    }

    /// Smallest integer not in `M`, which is `β_0`.
    pub fn first_missing(&self) -> i64 {
        let (lo, hi) = self.window();
        (lo..=hi).find(|&m| !self.contains(m)).expect("hi is never a member")
    }

    pub fn block_coordinates(&self) -> BlockCoordinates {
        let (lo, hi) = self.window();
        let mut beta = Vec::new();
        let mut state = true;
        for m in lo..=hi {
            let c = self.contains(m);
            if c != state {
                beta.push(m);
                state = c;
            }
        }
        BlockCoordinates { beta }
    }

    pub fn genus(&self) -> usize {
        self.block_coordinates().genus()
    }

    /// Toggles the membership of `m`.
    pub fn flip(&self, m: i64) -> Self {
        let mut out = self.clone();
        let (list, key) = if m >= 0 {
            (&mut out.filled_nonneg, m)
        } else {
            (&mut out.empty_neg, -m - 1)
        };
        match list.binary_search(&key) {
            Ok(i) => {
                list.remove(i);
            }
            Err(i) => list.insert(i, key),
        }
        out
    }

    /// Composition of flips at every site of the multiset `mu`.
    pub fn multi_flip(&self, mu: &[i64]) -> Self {
        let mut odd = BTreeSet::new();
        for &m in mu {
            if !odd.remove(&m) {
                odd.insert(m);
            }
        }
        odd.into_iter().fold(self.clone(), |acc, m| acc.flip(m))
    }

    /// `Υ(M, M′) = (M ∖ M′) ∪ (M′ ∖ M)`, ascending.
    pub fn symmetric_difference(&self, other: &Self) -> Vec<i64> {
        let (a, b) = self.window();
        let (c, d) = other.window();
        (a.min(c)..b.max(d))
            .filter(|&m| self.contains(m) != other.contains(m))
            .collect()
    }

    /// Equality of unlabelled diagrams, i.e. up to translation.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.standard_form().0 == other.standard_form().0
    }

    /// `#`/`.` boxes for `lo ≤ m < hi`, with `|` just before position 0.
    pub fn render(&self, lo: i64, hi: i64) -> String {
        let mut s = String::new();
        for m in lo..hi {
            if m == 0 {
                s.push('|');
            }
            s.push(if self.contains(m) { '#' } else { '.' });
        }
        if hi == 0 {
            s.push('|');
        }
        s
    }
}

impl fmt::Debug for MayaDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ξ{}", self.block_coordinates())
    }
}

impl fmt::Display for MayaDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ξ{}", self.block_coordinates())
    }
}

/// Serialized as strict block coordinates.
impl Serialize for MayaDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.block_coordinates().serialize(s)
    }
}

impl<'de> Deserialize<'de> for MayaDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let beta = Vec::<i64>::deserialize(d)?;
        xi(&beta).map_err(serde::de::Error::custom)
    }
}
