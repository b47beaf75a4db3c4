//! Bit sequences and the standard single-symbol insertions and deletions.
//!
//! Positions follow the usual conventions of the coding literature: deletions
//! and the moment statistic use 1-based positions, insertions take a 0-based
//! gap index `0..=n` (gap `i` sits after the first `i` symbols).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::weyla;

/// A finite sequence over `{0, 1}`. The empty sequence is the null word.
///
/// Ordering is lexicographic on the symbol string, which is also the order
/// used for every set-valued output.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSeq(Vec<u8>);

impl BitSeq {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidBit(b));
        }
        Ok(Self(bits))
    }

    pub(crate) fn from_vec_unchecked(bits: Vec<u8>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        Self(bits)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn ones(n: usize) -> Self {
        Self(vec![1; n])
    }

    /// Indicator sequence of a set of 1-based positions.
    pub fn from_support(n: usize, support: &BTreeSet<usize>) -> Result<Self> {
        let mut bits = vec![0; n];
        for &i in support {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    min: 1,
                    max: n,
                });
            }
            bits[i - 1] = 1;
        }
        Ok(Self(bits))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.0
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    /// 1-based positions of the ones.
    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == 1)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn concat(&self, other: &BitSeq) -> BitSeq {
        let mut bits = self.0.clone();
        bits.extend_from_slice(&other.0);
        Self(bits)
    }

    pub fn complement(&self) -> BitSeq {
        Self(self.0.iter().map(|&b| 1 - b).collect())
    }

    /// Moment `x_1 + 2 x_2 + ... + n x_n`.
    pub fn moment(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &b)| (i as u64 + 1) * b as u64).sum()
    }

    /// Number of pairs `i < j` with `x_i = 1` and `x_j = 0`.
    pub fn inversions(&self) -> u64 {
        let mut ones = 0u64;
        let mut inv = 0u64;
        for &b in &self.0 {
            if b == 1 {
                ones += 1;
            } else {
                inv += ones;
            }
        }
        inv
    }

    /// Number of zeros minus number of ones.
    pub fn balance(&self) -> i64 {
        self.len() as i64 - 2 * self.weight() as i64
    }

    /// Insert bit `b` at gap `i` (`0 <= i <= n`).
    pub fn insert(&self, i: usize, b: u8) -> Result<BitSeq> {
        if i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                min: 0,
                max: self.len(),
            });
        }
        if b > 1 {
            return Err(Error::InvalidBit(b));
        }
        let mut bits = Vec::with_capacity(self.len() + 1);
        bits.extend_from_slice(&self.0[..i]);
        bits.push(b);
        bits.extend_from_slice(&self.0[i..]);
        Ok(Self(bits))
    }

    /// Delete the symbol at 1-based position `i`.
    pub fn delete(&self, i: usize) -> Result<BitSeq> {
        if self.is_empty() {
            return Err(Error::EmptySequence);
        }
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                min: 1,
                max: self.len(),
            });
        }
        let mut bits = self.0.clone();
        bits.remove(i - 1);
        Ok(Self(bits))
    }

    /// All of `{0,1}^n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = BitSeq> {
        assert!(n < 64, "exhaustive enumeration limited to n < 64");
        (0u64..1u64 << n).map(move |m| Self((0..n).map(|i| ((m >> (n - 1 - i)) & 1) as u8).collect()))
    }

    /// All sequences of length `n` and weight `w`, in lexicographic order.
    pub fn with_weight(n: usize, w: usize) -> Vec<BitSeq> {
        let mut out = Vec::new();
        if w > n {
            return out;
        }
        let mut cur = Vec::with_capacity(n);
        fn rec(n: usize, w: usize, cur: &mut Vec<u8>, out: &mut Vec<BitSeq>) {
            let placed = cur.iter().filter(|&&b| b == 1).count();
            if cur.len() == n {
                out.push(BitSeq(cur.clone()));
                return;
            }
            let left = n - cur.len();
            if left > w - placed {
                cur.push(0);
                rec(n, w, cur, out);
                cur.pop();
            }
            if placed < w {
                cur.push(1);
                rec(n, w, cur, out);
                cur.pop();
            }
        }
        rec(n, w, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for BitSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidSymbol(other)),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Self)
    }
}

impl Serialize for BitSeq {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BitSeq {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Which single-step insertion drives an iterated sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SphereFamilyId {
    Standard,
    Path,
    Bai,
}

impl SphereFamilyId {
    pub fn single_step(self, x: &BitSeq) -> BTreeSet<BitSeq> {
        match self {
            SphereFamilyId::Standard => insertion_sphere(x),
            SphereFamilyId::Path => weyla::path_insertion_sphere(x),
            SphereFamilyId::Bai => weyla::bai_sphere(x),
        }
    }
}

impl FromStr for SphereFamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Self::Standard),
            "path" => Ok(Self::Path),
            "bai" | "ba" => Ok(Self::Bai),
            other => Err(Error::InvalidParameter(format!("unknown sphere family {other:?}"))),
        }
    }
}

/// All `2(n+1)` single insertions in gap-major order, with multiplicity.
pub fn insertion_multiset(x: &BitSeq) -> Vec<BitSeq> {
    (0..=x.len())
        .flat_map(|i| [0u8, 1].map(|b| x.insert(i, b).expect("gap in range")))
        .collect()
}

pub fn insertion_sphere(x: &BitSeq) -> BTreeSet<BitSeq> {
    insertion_multiset(x).into_iter().collect()
}

pub fn deletion_sphere(x: &BitSeq) -> Result<BTreeSet<BitSeq>> {
    if x.is_empty() {
        return Err(Error::EmptySequence);
    }
    (1..=x.len()).map(|i| x.delete(i)).collect()
}

/// Closure of `t` single-step insertions of the chosen family, breadth first.
///
/// Memory is bounded by the sum of the layer sizes.
pub fn iterated_sphere(x: &BitSeq, t: usize, family: SphereFamilyId) -> BTreeSet<BitSeq> {
    // every word at depth d has length |x| + d (or + 2d), so layers never meet
    let mut layer: BTreeSet<BitSeq> = BTreeSet::from([x.clone()]);
    for _ in 0..t {
        layer = layer.iter().flat_map(|y| family.single_step(y)).collect();
    }
    layer
}

/// Inverse of `(i, b) -> m + b + (-1)^{b+1} i` on `{0..m} x {0,1}`.
///
/// Walking `j = 0..=2m+1` lists the insertions into a length-`m` sequence so
/// that the moment of the result never decreases and grows by at most one.
pub fn psi(m: usize, j: usize) -> Result<(usize, u8)> {
    if j > 2 * m + 1 {
        return Err(Error::IndexOutOfRange {
            index: j,
            min: 0,
            max: 2 * m + 1,
        });
    }
    Ok(if j <= m { (m - j, 0) } else { (j - m - 1, 1) })
}

pub fn psi_inverse(m: usize, i: usize, b: u8) -> Result<usize> {
    if i > m {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 0,
            max: m,
        });
    }
    match b {
        0 => Ok(m - i),
        1 => Ok(m + 1 + i),
        other => Err(Error::InvalidBit(other)),
    }
}

/// The `j`-th insertion of `x` in `psi` order.
pub fn psi_insert(x: &BitSeq, j: usize) -> Result<BitSeq> {
    let (i, b) = psi(x.len(), j)?;
    x.insert(i, b)
}
