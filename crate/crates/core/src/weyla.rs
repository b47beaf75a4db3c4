//! Type `A_{v,h}`: constant-weight sequences as lattice paths, their minuscule
//! elements, and the two insertion families coming from reduced words of the
//! highest-coroot reflection.
//!
//! A sequence in `Y_{v,h}` has `v` zeros (vertical steps) and `h` ones
//! (horizontal steps). Coordinates of `R^{v,h}` run over `-v..=h-1`; storage
//! offsets add `v`. The simple reflection `s_i` swaps coordinates `i-1` and `i`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitseq::BitSeq;
use crate::error::{Error, Result};

/// A monotone lattice path: `v` vertical (`0`) and `h` horizontal (`1`) steps.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "BitSeq", from = "BitSeq")]
pub struct LatticePath {
    bits: BitSeq,
}

impl From<BitSeq> for LatticePath {
    fn from(bits: BitSeq) -> Self {
        Self { bits }
    }
}

impl From<LatticePath> for BitSeq {
    fn from(p: LatticePath) -> Self {
        p.bits
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.bits)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bits)
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Self { bits: s.parse()? })
    }
}

impl LatticePath {
    pub fn new(bits: BitSeq) -> Self {
        Self { bits }
    }

    /// Checks that `bits` lies in `Y_{v,h}`.
    pub fn with_shape(v: usize, h: usize, bits: BitSeq) -> Result<Self> {
        check_shape(&bits, v, h)?;
        Ok(Self { bits })
    }

    pub fn v(&self) -> usize {
        self.bits.len() - self.bits.weight()
    }

    pub fn h(&self) -> usize {
        self.bits.weight()
    }

    pub fn bits(&self) -> &BitSeq {
        &self.bits
    }

    /// Cells of the Young diagram cut out by the path.
    pub fn cells(&self) -> u64 {
        self.bits.inversions()
    }

    pub fn path_insert(&self, j: usize) -> Result<LatticePath> {
        path_insert(&self.bits, j).map(Self::new)
    }

    pub fn h_insert(&self, j: usize) -> Result<LatticePath> {
        h_insert(&self.bits, j).map(Self::new)
    }

    /// ASCII drawing from `(0,0)` (bottom left) to `(h,v)`, cells of the
    /// diagram on the upper-left side marked `#`.
    pub fn render(&self) -> String {
        let (v, h) = (self.v(), self.h());
        let (width, height) = (2 * h + 1, 2 * v + 1);
        let mut grid = vec![vec![' '; width]; height];
        for row in (0..height).step_by(2) {
            for col in (0..width).step_by(2) {
                grid[row][col] = '.';
            }
        }
        // ones seen before the k-th vertical step = cells in that row
        let mut ones = 0;
        let mut rows = Vec::with_capacity(v);
        let (mut col, mut row) = (0usize, 2 * v);
        grid[row][col] = '+';
        for &b in self.bits.bits() {
            if b == 1 {
                grid[row][col + 1] = '-';
                col += 2;
                ones += 1;
            } else {
                grid[row - 1][col] = '|';
                row -= 2;
                rows.push(ones);
            }
            grid[row][col] = '+';
        }
        for (cy, &filled) in rows.iter().enumerate() {
            for cx in 0..filled {
                grid[2 * v - (2 * cy + 1)][2 * cx + 1] = '#';
            }
        }
        grid.into_iter()
            .map(|r| r.into_iter().collect::<String>().trim_end().to_string())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

pub(crate) fn check_shape(x: &BitSeq, v: usize, h: usize) -> Result<()> {
    if x.len() != v + h || x.weight() != h {
        return Err(Error::ShapeMismatch {
            x: x.to_string(),
            len: x.len(),
            weight: x.weight(),
            expected_len: v + h,
            expected_weight: h,
        });
    }
    Ok(())
}

/// All of `Y_{v,h}` in lexicographic order.
pub fn all_paths(v: usize, h: usize) -> Vec<BitSeq> {
    BitSeq::with_weight(v + h, h)
}

/// The minuscule element `w_J` of `W(A_{v,h})` for a `v`-subset `J` of `-v..=h-1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MinusculeA {
    v: usize,
    h: usize,
    subset: BTreeSet<i64>,
}

impl fmt::Debug for MinusculeA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w_{:?} (v={}, h={})", self.subset, self.v, self.h)
    }
}

impl MinusculeA {
    pub fn from_subset(v: usize, h: usize, subset: BTreeSet<i64>) -> Result<Self> {
        if subset.len() != v {
            return Err(Error::InvalidSubset(format!(
                "expected {v} elements, got {}",
                subset.len()
            )));
        }
        if let Some(&bad) = subset.iter().find(|&&j| j < -(v as i64) || j >= h as i64) {
            return Err(Error::InvalidSubset(format!(
                "{bad} is not in {}..={}",
                -(v as i64),
                h as i64 - 1
            )));
        }
        Ok(Self { v, h, subset })
    }

    pub fn identity(v: usize, h: usize) -> Self {
        Self {
            v,
            h,
            subset: (-(v as i64)..0).collect(),
        }
    }

    pub fn all(v: usize, h: usize) -> impl Iterator<Item = MinusculeA> {
        all_paths(v, h)
            .into_iter()
            .map(move |x| g01_inv(v, h, &x).expect("shape holds"))
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn subset(&self) -> &BTreeSet<i64> {
        &self.subset
    }

    /// `j_k` paired with `k = -v, ..., -1`.
    fn indexed(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (-(self.v as i64)..0).zip(self.subset.iter().copied())
    }

    /// Reduced word `w_{-v,j_{-v}} ... w_{-1,j_{-1}}` with
    /// `w_{k,j} = s_j s_{j-1} ... s_{k+1}` (empty when `j <= k`).
    pub fn word(&self) -> Vec<i64> {
        self.indexed().flat_map(|(k, j)| ((k + 1)..=j).rev()).collect()
    }

    pub fn length(&self) -> u64 {
        self.indexed().map(|(k, j)| (j - k) as u64).sum()
    }

    /// `w_J lambda_{v,h}` (doubled): `+1` on `J`, `-1` elsewhere.
    pub fn orbit_point(&self) -> Vec<i64> {
        let lambda: Vec<i64> = (0..self.v + self.h).map(|i| if i < self.v { 1 } else { -1 }).collect();
        apply_word(self.v, self.h, &self.word(), &lambda).expect("letters in range")
    }
}

/// Right coset `w W_0(A_{v,h})`, labelled by `w lambda_{v,h}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetA {
    v: usize,
    h: usize,
    orbit: Vec<i64>,
}

impl CosetA {
    pub fn orbit_point(&self) -> &[i64] {
        &self.orbit
    }
}

/// `x_i = 0` iff `i` is in `J`.
pub fn g01(w: &MinusculeA) -> BitSeq {
    let v = w.v as i64;
    BitSeq::from_vec_unchecked(
        (-v..w.h as i64)
            .map(|i| if w.subset.contains(&i) { 0 } else { 1 })
            .collect(),
    )
}

pub fn g01_inv(v: usize, h: usize, x: &BitSeq) -> Result<MinusculeA> {
    check_shape(x, v, h)?;
    let subset = x
        .bits()
        .iter()
        .enumerate()
        .filter(|(_, &b)| b == 0)
        .map(|(i, _)| i as i64 - v as i64)
        .collect();
    Ok(MinusculeA { v, h, subset })
}

/// `+1/2` on `J`, `-1/2` elsewhere (doubled).
pub fn g_half(w: &MinusculeA) -> Vec<i64> {
    let v = w.v as i64;
    (-v..w.h as i64)
        .map(|i| if w.subset.contains(&i) { 1 } else { -1 })
        .collect()
}

pub fn g_half_inv(v: usize, h: usize, lambda: &[i64]) -> Result<MinusculeA> {
    if lambda.len() != v + h {
        return Err(Error::DimensionMismatch {
            expected: v + h,
            actual: lambda.len(),
        });
    }
    let mut subset = BTreeSet::new();
    for (i, &d) in lambda.iter().enumerate() {
        match d {
            1 => {
                subset.insert(i as i64 - v as i64);
            }
            -1 => {}
            other => return Err(Error::NotHalfVector(other)),
        }
    }
    MinusculeA::from_subset(v, h, subset)
}

pub fn g_coset(w: &MinusculeA) -> CosetA {
    CosetA {
        v: w.v,
        h: w.h,
        orbit: w.orbit_point(),
    }
}

/// Minimal representative of a coset.
pub fn g_coset_inv(c: &CosetA) -> Result<MinusculeA> {
    g_half_inv(c.v, c.h, &c.orbit)
}

/// Apply `s_{i_1} ... s_{i_r}` (rightmost first) of `W(A_{v,h})` to a vector
/// indexed by `-v..=h-1`.
pub fn apply_word<T: Clone>(v: usize, h: usize, word: &[i64], vector: &[T]) -> Result<Vec<T>> {
    if vector.len() != v + h {
        return Err(Error::DimensionMismatch {
            expected: v + h,
            actual: vector.len(),
        });
    }
    let mut out = vector.to_vec();
    for &i in word.iter().rev() {
        if i <= -(v as i64) || i >= h as i64 {
            return Err(Error::InvalidGenerator { index: i, rank: v + h });
        }
        let p = (i + v as i64) as usize;
        out.swap(p - 1, p);
    }
    Ok(out)
}

/// Inversion count of the permutation `s_{i_1} ... s_{i_r}`: its Coxeter length.
pub fn word_permutation_length(v: usize, h: usize, word: &[i64]) -> Result<u64> {
    let ids: Vec<usize> = (0..v + h).collect();
    let perm = apply_word(v, h, word, &ids)?;
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    Ok(inv)
}

/// `y -> 0 y 1`.
pub fn kappa(y: &BitSeq) -> BitSeq {
    BitSeq::zeros(1).concat(y).concat(&BitSeq::ones(1))
}

/// Letters of `K_j` acting in `W(A_{v+1,h+1})`, leftmost first:
/// `K_j = L_j ... L_1` with `L_k = s_{h+1-k}` for `k <= v+h+1`, and
/// `L_k = s_{k-2v-h-1}` afterwards.
pub fn path_insert_word(v: usize, h: usize, j: usize) -> Result<Vec<i64>> {
    let n = v + h;
    if j > 2 * n + 1 {
        return Err(Error::IndexOutOfRange {
            index: j,
            min: 0,
            max: 2 * n + 1,
        });
    }
    let (v, h) = (v as i64, h as i64);
    Ok((1..=j as i64)
        .rev()
        .map(|k| if k <= v + h + 1 { h + 1 - k } else { k - 2 * v - h - 1 })
        .collect())
}

/// Path insertion `K_j`: for `j <= n` prepend `0` and insert `1` at gap `n-j`;
/// for `j > n` prepend `1` and insert `0` at gap `j-n-1`.
pub fn path_insert(y: &BitSeq, j: usize) -> Result<BitSeq> {
    let n = y.len();
    if j > 2 * n + 1 {
        return Err(Error::IndexOutOfRange {
            index: j,
            min: 0,
            max: 2 * n + 1,
        });
    }
    let (lead, gap, bit) = if j <= n { (0u8, n - j, 1u8) } else { (1, j - n - 1, 0) };
    let mut bits = vec![lead];
    bits.extend_from_slice(y.insert(gap, bit)?.bits());
    Ok(BitSeq::from_vec_unchecked(bits))
}

pub fn path_insertion_sphere(y: &BitSeq) -> BTreeSet<BitSeq> {
    (0..=2 * y.len() + 1)
        .map(|j| path_insert(y, j).expect("j in range"))
        .collect()
}

/// Delete the first step together with one later step of the other kind.
pub fn path_deletion_sphere(y: &BitSeq) -> BTreeSet<BitSeq> {
    let bits = y.bits();
    let Some(&first) = bits.first() else {
        return BTreeSet::new();
    };
    (1..bits.len())
        .filter(|&j| bits[j] != first)
        .map(|j| {
            let rest: Vec<u8> = bits[1..]
                .iter()
                .enumerate()
                .filter(|&(k, _)| k + 1 != j)
                .map(|(_, &b)| b)
                .collect();
            BitSeq::from_vec_unchecked(rest)
        })
        .collect()
}

/// The `k`-th letter (1-based) of the reduced word
/// `s_{-v} s_h s_{-(v-1)} s_{h-1} ... s_{h-1} s_{-(v-1)} s_h s_{-v}` counted from the right.
fn h_letter(v: i64, h: i64, k: i64) -> i64 {
    let n = v + h;
    let k = if k > n + 1 { 2 * n + 2 - k } else { k };
    if k % 2 == 1 {
        -v + (k - 1) / 2
    } else {
        h + 1 - k / 2
    }
}

pub fn h_insert_word(v: usize, h: usize, j: usize) -> Result<Vec<i64>> {
    let n = v + h;
    if j > 2 * n + 1 {
        return Err(Error::IndexOutOfRange {
            index: j,
            min: 0,
            max: 2 * n + 1,
        });
    }
    Ok((1..=j as i64).rev().map(|k| h_letter(v as i64, h as i64, k)).collect())
}

/// `H_j`: a `0` drifting right from the front and a `1` drifting left from the
/// back, one step per letter alternately; they cross at `j = n+1`.
pub fn h_insert(y: &BitSeq, j: usize) -> Result<BitSeq> {
    let n = y.len();
    if j > 2 * n + 1 {
        return Err(Error::IndexOutOfRange {
            index: j,
            min: 0,
            max: 2 * n + 1,
        });
    }
    let (steps, left_bit, right_bit) = if j <= n { (j, 0u8, 1u8) } else { (2 * n + 1 - j, 1, 0) };
    let front = steps.div_ceil(2);
    let back = n - steps / 2;
    let bits = y.bits();
    let mut out = Vec::with_capacity(n + 2);
    out.extend_from_slice(&bits[..front]);
    out.push(left_bit);
    out.extend_from_slice(&bits[front..back]);
    out.push(right_bit);
    out.extend_from_slice(&bits[back..]);
    Ok(BitSeq::from_vec_unchecked(out))
}

pub fn h_insertion_sphere(y: &BitSeq) -> BTreeSet<BitSeq> {
    (0..=2 * y.len() + 1)
        .map(|j| h_insert(y, j).expect("j in range"))
        .collect()
}

/// `x_1 x_n x_2 x_{n-1} x_3 ...`.
pub fn azby(x: &BitSeq) -> BitSeq {
    let bits = x.bits();
    BitSeq::from_vec_unchecked(azby_order(bits.len()).into_iter().map(|p| bits[p]).collect())
}

pub fn azby_inverse(x: &BitSeq) -> BitSeq {
    let bits = x.bits();
    let mut out = vec![0u8; bits.len()];
    for (k, p) in azby_order(bits.len()).into_iter().enumerate() {
        out[p] = bits[k];
    }
    BitSeq::from_vec_unchecked(out)
}

/// Source positions (0-based) read by `azby`, in output order.
fn azby_order(n: usize) -> Vec<usize> {
    let (mut lo, mut hi) = (0usize, n);
    let mut order = Vec::with_capacity(n);
    while lo < hi {
        order.push(lo);
        lo += 1;
        if lo < hi {
            hi -= 1;
            order.push(hi);
        }
    }
    order
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BaiPattern {
    #[serde(rename = "01")]
    ZeroOne,
    #[serde(rename = "10")]
    OneZero,
}

impl BaiPattern {
    fn bits(self) -> [u8; 2] {
        match self {
            BaiPattern::ZeroOne => [0, 1],
            BaiPattern::OneZero => [1, 0],
        }
    }
}

impl FromStr for BaiPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "01" => Ok(Self::ZeroOne),
            "10" => Ok(Self::OneZero),
            other => Err(Error::InvalidParameter(format!(
                "BAI pattern must be 01 or 10, got {other:?}"
            ))),
        }
    }
}

/// Balanced adjacent insertion of `01` or `10` at a gap.
pub fn bai_insert(x: &BitSeq, gap: usize, pattern: BaiPattern) -> Result<BitSeq> {
    if gap > x.len() {
        return Err(Error::IndexOutOfRange {
            index: gap,
            min: 0,
            max: x.len(),
        });
    }
    let mut bits = x.bits()[..gap].to_vec();
    bits.extend_from_slice(&pattern.bits());
    bits.extend_from_slice(&x.bits()[gap..]);
    Ok(BitSeq::from_vec_unchecked(bits))
}

pub fn bai_sphere(x: &BitSeq) -> BTreeSet<BitSeq> {
    (0..=x.len())
        .flat_map(|g| [BaiPattern::ZeroOne, BaiPattern::OneZero].map(|p| bai_insert(x, g, p).expect("gap in range")))
        .collect()
}

/// Results of deleting an adjacent unequal pair.
pub fn bad_deletion_sphere(x: &BitSeq) -> BTreeSet<BitSeq> {
    let bits = x.bits();
    (1..bits.len())
        .filter(|&k| bits[k - 1] != bits[k])
        .map(|k| {
            let mut out = bits[..k - 1].to_vec();
            out.extend_from_slice(&bits[k + 1..]);
            BitSeq::from_vec_unchecked(out)
        })
        .collect()
}

/// `sigma H_j sigma^{-1}`: the `j`-th balanced adjacent insertion in the order
/// induced by the second reduced word.
pub fn bai_op(x: &BitSeq, j: usize) -> Result<BitSeq> {
    Ok(azby(&h_insert(&azby_inverse(x), j)?))
}
