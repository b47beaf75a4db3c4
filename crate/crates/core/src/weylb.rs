//! The Weyl group of type `B_n` with simple roots `e_1, e_2 - e_1, ..., e_n - e_{n-1}`.
//!
//! Elements are signed permutations in window notation. Generators are
//! indexed from 1: `s_1` flips the sign of coordinate 1 and `s_i` (`i >= 2`)
//! swaps coordinates `i-1` and `i`. Vectors with half-integer entries are
//! stored doubled so that all arithmetic is exact.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitseq::BitSeq;
use crate::error::{Error, Result};

/// A rational vector whose entries are multiples of 1/2, stored doubled.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfVec(pub Vec<i64>);

impl HalfVec {
    /// `lambda_B = (1/2, ..., 1/2)`.
    pub fn lambda_b(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn from_doubled(doubled: Vec<i64>) -> Self {
        Self(doubled)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn doubled(&self) -> &[i64] {
        &self.0
    }

    /// Append a trailing `+1/2` coordinate.
    pub fn embed(&self) -> Self {
        let mut v = self.0.clone();
        v.push(1);
        Self(v)
    }

    /// 1-based positions holding `-1/2`; fails unless every entry is `+-1/2`.
    pub fn negative_positions(&self) -> Result<BTreeSet<usize>> {
        let mut out = BTreeSet::new();
        for (i, &d) in self.0.iter().enumerate() {
            match d {
                1 => {}
                -1 => {
                    out.insert(i + 1);
                }
                other => return Err(Error::NotHalfVector(other)),
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for HalfVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, &d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if d % 2 == 0 {
                write!(f, "{}", d / 2)?;
            } else {
                write!(f, "{d}/2")?;
            }
        }
        write!(f, ")")
    }
}

/// Root data for `B_n` in the chosen positive system.
#[derive(Debug, Clone)]
pub struct RootSystemB {
    rank: usize,
    simple: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
}

impl RootSystemB {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidParameter("root system of rank 0".into()));
        }
        let unit = |i: usize| {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            v
        };
        let mut simple = vec![unit(0)];
        for i in 1..rank {
            let mut v = unit(i);
            v[i - 1] = -1;
            simple.push(v);
        }
        let mut positive: Vec<Vec<i64>> = (0..rank).map(unit).collect();
        for j in 0..rank {
            for i in 0..j {
                for sign in [-1, 1] {
                    let mut v = unit(j);
                    v[i] = sign;
                    positive.push(v);
                }
            }
        }
        Ok(Self { rank, simple, positive })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// Coefficients of `v` in the basis of simple roots.
    pub fn simple_coordinates(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                actual: v.len(),
            });
        }
        let mut c = vec![0; self.rank];
        let mut acc = 0;
        for k in (0..self.rank).rev() {
            acc += v[k];
            c[k] = acc;
        }
        Ok(c)
    }
}

/// A root is positive iff its coefficient at the largest occupied index is positive.
fn is_positive_root(v: &[i64]) -> bool {
    v.iter().rev().find(|&&c| c != 0).is_some_and(|&c| c > 0)
}

/// An element of `W(B_n)` as a signed permutation `k -> window[k-1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPerm {
    window: Vec<i32>,
}

impl TryFrom<Vec<i32>> for SignedPerm {
    type Error = Error;

    fn try_from(window: Vec<i32>) -> Result<Self> {
        Self::from_window(window)
    }
}

impl From<SignedPerm> for Vec<i32> {
    fn from(w: SignedPerm) -> Self {
        w.window
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.window)
    }
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        Self {
            window: (1..=n as i32).collect(),
        }
    }

    pub fn from_window(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n];
        for &e in &window {
            let a = e.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidSignedPerm(window));
            }
            seen[a - 1] = true;
        }
        Ok(Self { window })
    }

    /// The simple reflection `s_i` of `W(B_n)`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::InvalidGenerator {
                index: i as i64,
                rank: n,
            });
        }
        let mut w = Self::identity(n);
        if i == 1 {
            w.window[0] = -1;
        } else {
            w.window.swap(i - 2, i - 1);
        }
        Ok(w)
    }

    /// `s_{i_1} s_{i_2} ... s_{i_r}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        word.iter()
            .try_fold(Self::identity(n), |acc, &i| Ok(acc.compose(&Self::generator(n, i)?)))
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &e)| e == i as i32 + 1)
    }

    fn image(&self, k: i32) -> i32 {
        let e = self.window[k.unsigned_abs() as usize - 1];
        if k < 0 {
            -e
        } else {
            e
        }
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        assert_eq!(
            self.rank(),
            other.rank(),
            "composing signed permutations of different rank"
        );
        SignedPerm {
            window: other.window.iter().map(|&k| self.image(k)).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut window = vec![0; self.rank()];
        for (k, &e) in self.window.iter().enumerate() {
            let target = e.unsigned_abs() as usize - 1;
            window[target] = e.signum() * (k as i32 + 1);
        }
        SignedPerm { window }
    }

    /// Extend to rank `m >= n`, fixing the new coordinates.
    pub fn embed(&self, m: usize) -> Result<SignedPerm> {
        if m < self.rank() {
            return Err(Error::RankMismatch {
                operator: m,
                element: self.rank(),
            });
        }
        let mut window = self.window.clone();
        window.extend(self.rank() as i32 + 1..=m as i32);
        Ok(SignedPerm { window })
    }

    fn apply_raw(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (k, &e) in self.window.iter().enumerate() {
            out[e.unsigned_abs() as usize - 1] = e.signum() as i64 * v[k];
        }
        out
    }

    /// Linear action on a vector of length `rank`.
    pub fn apply(&self, v: &HalfVec) -> Result<HalfVec> {
        self.apply_integral(v.doubled()).map(HalfVec)
    }

    pub fn apply_integral(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                actual: v.len(),
            });
        }
        Ok(self.apply_raw(v))
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let n = self.rank();
        let mut count = 0;
        let mut root = vec![0i64; n];
        for j in 0..n {
            root[j] = 1;
            if !is_positive_root(&self.apply_raw(&root)) {
                count += 1;
            }
            for i in 0..j {
                for sign in [-1, 1] {
                    root[i] = sign;
                    if !is_positive_root(&self.apply_raw(&root)) {
                        count += 1;
                    }
                }
                root[i] = 0;
            }
            root[j] = 0;
        }
        count
    }

    /// Reduced word obtained by peeling off the smallest left descent each step.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.rank();
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        let mut len = w.length();
        while len > 0 {
            let (i, shorter) = (1..=n)
                .map(|i| (i, Self::generator(n, i).expect("in range").compose(&w)))
                .find(|(_, u)| u.length() < len)
                .expect("a non-identity element has a left descent");
            word.push(i);
            w = shorter;
            len -= 1;
        }
        word
    }
}

/// The minuscule element `w_J` of `W(B_n)`, stored by its index set `J`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MinusculeB {
    rank: usize,
    subset: BTreeSet<usize>,
}

impl fmt::Debug for MinusculeB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w_{:?} (rank {})", self.subset, self.rank)
    }
}

impl MinusculeB {
    pub fn from_subset(n: usize, subset: BTreeSet<usize>) -> Result<Self> {
        if let Some(&bad) = subset.iter().find(|&&j| j == 0 || j > n) {
            return Err(Error::InvalidSubset(format!("{bad} is not in 1..={n}")));
        }
        Ok(Self { rank: n, subset })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rank: n,
            subset: BTreeSet::new(),
        }
    }

    /// All `2^n` elements of `M_n`, ordered by their indicator sequences.
    pub fn all(n: usize) -> impl Iterator<Item = MinusculeB> {
        BitSeq::all(n).map(move |x| Self {
            rank: n,
            subset: x.support(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn subset(&self) -> &BTreeSet<usize> {
        &self.subset
    }

    /// Reduced word `(s_{j_1} ... s_1)(s_{j_2} ... s_1) ... (s_{j_t} ... s_1)` for
    /// `j_1 < ... < j_t`; the block for the largest index acts first.
    pub fn word(&self) -> Vec<usize> {
        self.subset.iter().flat_map(|&j| (1..=j).rev()).collect()
    }

    pub fn length(&self) -> usize {
        self.subset.iter().sum()
    }

    pub fn to_signed_perm(&self) -> SignedPerm {
        SignedPerm::from_word(self.rank, &self.word()).expect("word letters lie in 1..=rank")
    }

    /// Same `J`, regarded in `M_m` for `m >= n`.
    pub fn embed(&self, m: usize) -> Result<MinusculeB> {
        if m < self.rank {
            return Err(Error::RankMismatch {
                operator: m,
                element: self.rank,
            });
        }
        Ok(Self {
            rank: m,
            subset: self.subset.clone(),
        })
    }
}

/// A right coset `w W(A_{n-1})`, labelled by the orbit point `w lambda_B`
/// (the stabilizer of `lambda_B` is exactly `W(A_{n-1})`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetB {
    orbit: HalfVec,
}

impl CosetB {
    pub fn of(w: &SignedPerm) -> Self {
        Self {
            orbit: w.apply(&HalfVec::lambda_b(w.rank())).expect("rank matches"),
        }
    }

    pub fn orbit_point(&self) -> &HalfVec {
        &self.orbit
    }

    pub fn rank(&self) -> usize {
        self.orbit.len()
    }
}

// The four bijections out of subsets of {1..n}.

pub fn f01(n: usize, subset: &BTreeSet<usize>) -> Result<BitSeq> {
    BitSeq::from_support(n, subset)
}

pub fn f01_inv(x: &BitSeq) -> BTreeSet<usize> {
    x.support()
}

pub fn f_half(n: usize, subset: &BTreeSet<usize>) -> Result<HalfVec> {
    MinusculeB::from_subset(n, subset.clone())?;
    Ok(HalfVec(
        (1..=n).map(|i| if subset.contains(&i) { -1 } else { 1 }).collect(),
    ))
}

pub fn f_half_inv(lambda: &HalfVec) -> Result<BTreeSet<usize>> {
    lambda.negative_positions()
}

pub fn f_m(n: usize, subset: &BTreeSet<usize>) -> Result<MinusculeB> {
    MinusculeB::from_subset(n, subset.clone())
}

pub fn f_m_inv(w: &MinusculeB) -> BTreeSet<usize> {
    w.subset.clone()
}

pub fn f_coset(n: usize, subset: &BTreeSet<usize>) -> Result<CosetB> {
    Ok(CosetB::of(&f_m(n, subset)?.to_signed_perm()))
}

pub fn f_coset_inv(coset: &CosetB) -> Result<BTreeSet<usize>> {
    coset.orbit.negative_positions()
}

// Closed forms of the compositions between them.

/// `lambda_B - x`.
pub fn half_from_bits(x: &BitSeq) -> HalfVec {
    HalfVec(x.bits().iter().map(|&b| 1 - 2 * b as i64).collect())
}

/// `w_{supp(x)}`.
pub fn minuscule_from_bits(x: &BitSeq) -> MinusculeB {
    MinusculeB {
        rank: x.len(),
        subset: x.support(),
    }
}

/// `lambda_B - lambda`.
pub fn bits_from_half(lambda: &HalfVec) -> Result<BitSeq> {
    lambda.negative_positions()?;
    Ok(BitSeq::from_vec_unchecked(
        lambda.doubled().iter().map(|&d| ((1 - d) / 2) as u8).collect(),
    ))
}

/// `w_{neg(lambda)}`.
pub fn minuscule_from_half(lambda: &HalfVec) -> Result<MinusculeB> {
    Ok(MinusculeB {
        rank: lambda.len(),
        subset: lambda.negative_positions()?,
    })
}

/// `[w]`.
pub fn coset_from_minuscule(w: &MinusculeB) -> CosetB {
    CosetB::of(&w.to_signed_perm())
}

/// `w lambda_B`.
pub fn half_from_minuscule(w: &MinusculeB) -> HalfVec {
    w.to_signed_perm()
        .apply(&HalfVec::lambda_b(w.rank))
        .expect("rank matches")
}

/// `w lambda_B` for any representative of the coset.
pub fn half_from_coset(coset: &CosetB) -> HalfVec {
    coset.orbit.clone()
}

/// The minimal coset representative of `[w]`.
pub fn minuscule_from_coset(coset: &CosetB) -> Result<MinusculeB> {
    minuscule_from_half(&coset.orbit)
}

/// `lambda_B - w lambda_B`.
pub fn bits_from_minuscule(w: &MinusculeB) -> BitSeq {
    bits_from_half(&half_from_minuscule(w)).expect("orbit of lambda_B has entries +-1/2")
}

/// Word of the insertion operator `I_j^{(n)}`: the right subword of length `j` of
/// `s_{n+1} s_n ... s_2 s_1 s_2 ... s_{n+1}` in `W(B_{n+1})`.
pub fn insertion_op_word(n: usize, j: usize) -> Result<Vec<usize>> {
    if j > 2 * n + 1 {
        return Err(Error::IndexOutOfRange {
            index: j,
            min: 0,
            max: 2 * n + 1,
        });
    }
    let full: Vec<usize> = (1..=n + 1).rev().chain(2..=n + 1).collect();
    Ok(full[2 * n + 1 - j..].to_vec())
}

pub fn insertion_op(n: usize, j: usize) -> Result<SignedPerm> {
    SignedPerm::from_word(n + 1, &insertion_op_word(n, j)?)
}

/// `v w`: the minimal coset representative of `[v w]`, with `w` embedded into
/// the rank of `v` when it is smaller.
pub fn act_on_minuscule(v: &SignedPerm, w: &MinusculeB) -> Result<MinusculeB> {
    if w.rank > v.rank() {
        return Err(Error::RankMismatch {
            operator: v.rank(),
            element: w.rank,
        });
    }
    let w = w.embed(v.rank())?;
    let image = v.compose(&w.to_signed_perm());
    minuscule_from_coset(&CosetB::of(&image))
}
