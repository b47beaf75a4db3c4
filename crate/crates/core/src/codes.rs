//! Levenshtein codes, lattice-path codes and BAD codes, with sphere-search
//! decoders and a generic perfectness checker.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitseq::{deletion_sphere, insertion_sphere, psi_insert, BitSeq};
use crate::error::{Error, Result};
use crate::weyla::{
    all_paths, azby, azby_inverse, bad_deletion_sphere, bai_sphere, check_shape, path_deletion_sphere, path_insert,
    LatticePath,
};
use crate::weylb::MinusculeB;

/// A residue-class code.
///
/// `Levenshtein { n, a }` is `L_{n,a}` (moment mod `n+1`), `Path { v, h, a }`
/// is `Y_{v,h,a}` (inversions mod `v+h`), and `Bad { v, h, a }` is
/// `B_{v,h,a} = sigma(Y_{v,h,a})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CodeSpec {
    #[serde(rename = "vt", alias = "levenshtein")]
    Levenshtein {
        n: usize,
        a: u64,
    },
    Path {
        v: usize,
        h: usize,
        a: u64,
    },
    Bad {
        v: usize,
        h: usize,
        a: u64,
    },
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CodeSpec::Levenshtein { n, a } => write!(f, "L_{{{n},{a}}}"),
            CodeSpec::Path { v, h, a } => write!(f, "Y_{{{v},{h},{a}}}"),
            CodeSpec::Bad { v, h, a } => write!(f, "B_{{{v},{h},{a}}}"),
        }
    }
}

impl CodeSpec {
    pub fn levenshtein(n: usize, a: i64) -> Self {
        CodeSpec::Levenshtein {
            n,
            a: a.rem_euclid(n as i64 + 1) as u64,
        }
    }

    pub fn path(v: usize, h: usize, a: i64) -> Result<Self> {
        let m = Self::path_modulus(v, h)?;
        Ok(CodeSpec::Path {
            v,
            h,
            a: a.rem_euclid(m as i64) as u64,
        })
    }

    pub fn bad(v: usize, h: usize, a: i64) -> Result<Self> {
        let m = Self::path_modulus(v, h)?;
        Ok(CodeSpec::Bad {
            v,
            h,
            a: a.rem_euclid(m as i64) as u64,
        })
    }

    fn path_modulus(v: usize, h: usize) -> Result<u64> {
        if v + h == 0 {
            return Err(Error::InvalidParameter("v + h must be at least 1".into()));
        }
        Ok((v + h) as u64)
    }

    pub fn modulus(&self) -> u64 {
        match *self {
            CodeSpec::Levenshtein { n, .. } => n as u64 + 1,
            CodeSpec::Path { v, h, .. } | CodeSpec::Bad { v, h, .. } => (v + h) as u64,
        }
    }

    pub fn residue(&self) -> u64 {
        match *self {
            CodeSpec::Levenshtein { a, .. } | CodeSpec::Path { a, .. } | CodeSpec::Bad { a, .. } => a,
        }
    }

    /// Codeword length.
    pub fn length(&self) -> usize {
        match *self {
            CodeSpec::Levenshtein { n, .. } => n,
            CodeSpec::Path { v, h, .. } | CodeSpec::Bad { v, h, .. } => v + h,
        }
    }

    fn check_input(&self, x: &BitSeq) -> Result<()> {
        match *self {
            CodeSpec::Levenshtein { n, .. } => {
                if x.len() != n {
                    return Err(Error::LengthMismatch {
                        expected: n,
                        actual: x.len(),
                    });
                }
                Ok(())
            }
            CodeSpec::Path { v, h, .. } | CodeSpec::Bad { v, h, .. } => check_shape(x, v, h),
        }
    }

    /// The statistic whose residue defines membership: `rho`, `inv`, or `inv o sigma^{-1}`.
    pub fn statistic(&self, x: &BitSeq) -> Result<u64> {
        self.check_input(x)?;
        Ok(match self {
            CodeSpec::Levenshtein { .. } => x.moment(),
            CodeSpec::Path { .. } => x.inversions(),
            CodeSpec::Bad { .. } => azby_inverse(x).inversions(),
        })
    }

    pub fn membership(&self, x: &BitSeq) -> Result<bool> {
        Ok(self.statistic(x)? % self.modulus() == self.residue() % self.modulus())
    }

    /// All codewords in lexicographic order.
    pub fn enumerate(&self, limit: EnumerationLimit) -> Result<Vec<BitSeq>> {
        limit.check("codeword length", self.length())?;
        let ambient: Vec<BitSeq> = match *self {
            CodeSpec::Levenshtein { n, .. } => BitSeq::all(n).collect(),
            CodeSpec::Path { v, h, .. } => all_paths(v, h),
            CodeSpec::Bad { v, h, .. } => {
                let mut out: Vec<BitSeq> = all_paths(v, h).iter().map(azby).collect();
                out.sort();
                out
            }
        };
        Ok(ambient
            .into_iter()
            .filter(|x| self.membership(x).expect("ambient has the right shape"))
            .collect())
    }
}

/// Refuses materialization of sets indexed by sequences longer than `max_len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationLimit {
    pub max_len: usize,
}

impl Default for EnumerationLimit {
    fn default() -> Self {
        Self { max_len: 20 }
    }
}

impl EnumerationLimit {
    pub fn unbounded() -> Self {
        Self { max_len: usize::MAX }
    }

    pub fn check(&self, what: &'static str, size: usize) -> Result<()> {
        if size > self.max_len {
            return Err(Error::SizeGuard {
                what: what.to_string(),
                size,
                bound: self.max_len,
            });
        }
        Ok(())
    }
}

/// Decode a received word of length `n-1` (one deletion) or `n` (no error).
///
/// The `psi`-ordered insertions of `z` have consecutive moments, so the first
/// one hitting the residue is the unique codeword.
pub fn vt_decode_deletion(z: &BitSeq, n: usize, a: u64) -> Result<BitSeq> {
    let code = CodeSpec::levenshtein(n, a as i64);
    if z.len() == n {
        return if code.membership(z)? {
            Ok(z.clone())
        } else {
            Err(Error::NoCandidate(format!("{z} has length {n} but is not in {code}")))
        };
    }
    if z.len() + 1 != n {
        return Err(Error::LengthMismatch {
            expected: n.saturating_sub(1),
            actual: z.len(),
        });
    }
    for j in 0..=2 * z.len() + 1 {
        let y = psi_insert(z, j)?;
        if code.membership(&y)? {
            return Ok(y);
        }
    }
    Err(Error::NoCandidate(format!("no insertion of {z} lies in {code}")))
}

/// Decode a received word of length `n+1` (one insertion) or `n` (no error).
/// Ambiguity is reported, never resolved silently.
pub fn vt_decode_insertion(z: &BitSeq, n: usize, a: u64) -> Result<BitSeq> {
    let code = CodeSpec::levenshtein(n, a as i64);
    if z.len() == n {
        return if code.membership(z)? {
            Ok(z.clone())
        } else {
            Err(Error::NoCandidate(format!("{z} has length {n} but is not in {code}")))
        };
    }
    if z.len() != n + 1 {
        return Err(Error::LengthMismatch {
            expected: n + 1,
            actual: z.len(),
        });
    }
    let candidates: Vec<BitSeq> = deletion_sphere(z)?
        .into_iter()
        .filter(|c| code.membership(c).expect("length n"))
        .collect();
    match candidates.len() {
        0 => Err(Error::NoCandidate(format!("no deletion of {z} lies in {code}"))),
        1 => Ok(candidates.into_iter().next().expect("one candidate")),
        _ => Err(Error::MultipleCandidates {
            received: z.to_string(),
            candidates: candidates.iter().map(ToString::to_string).collect(),
        }),
    }
}

/// The codeword of `Y_{v+1,h+1,a}` whose path-deletion sphere contains `z`.
pub fn path_decode(z: &BitSeq, v: usize, h: usize, a: u64) -> Result<LatticePath> {
    check_shape(z, v, h)?;
    let modulus = (v + h + 2) as u64;
    for j in 0..=2 * (v + h) + 1 {
        let y = path_insert(z, j)?;
        if y.inversions() % modulus == a % modulus {
            return Ok(LatticePath::new(y));
        }
    }
    Err(Error::NoCandidate(format!(
        "no path insertion of {z} has inv = {a} mod {modulus}"
    )))
}

/// The codeword of `B_{v+1,h+1,a}` whose BAD sphere contains `z`.
pub fn bad_decode(z: &BitSeq, v: usize, h: usize, a: u64) -> Result<BitSeq> {
    check_shape(z, v, h)?;
    let modulus = (v + h + 2) as u64;
    bai_sphere(z)
        .into_iter()
        .find(|c| azby_inverse(c).inversions() % modulus == a % modulus)
        .ok_or_else(|| Error::NoCandidate(format!("no BAI of {z} has inv o sigma^-1 = {a} mod {modulus}")))
}

/// An ambient element hit by two spheres.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Overlap<T> {
    pub element: T,
    pub first: T,
    pub second: T,
}

/// A sphere element that is not in the ambient set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stray<T> {
    pub codeword: T,
    pub element: T,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectCertificate<T> {
    pub perfect: bool,
    pub codewords: usize,
    pub ambient: usize,
    pub uncovered: Vec<T>,
    pub overlaps: Vec<Overlap<T>>,
    pub outside: Vec<Stray<T>>,
}

impl<T> PerfectCertificate<T> {
    pub fn witness(&self) -> Option<String>
    where
        T: fmt::Display,
    {
        if let Some(o) = self.overlaps.first() {
            return Some(format!(
                "{} lies in the spheres of {} and {}",
                o.element, o.first, o.second
            ));
        }
        if let Some(u) = self.uncovered.first() {
            return Some(format!("{u} is not covered"));
        }
        self.outside
            .first()
            .map(|s| format!("{} (from {}) is outside the ambient set", s.element, s.codeword))
    }
}

/// Checks that the spheres of `codebook` partition `ambient`. Every failure is
/// listed, in order.
pub fn verify_perfect<T, F>(codebook: &[T], sphere: F, ambient: &BTreeSet<T>) -> PerfectCertificate<T>
where
    T: Ord + Clone,
    F: Fn(&T) -> BTreeSet<T>,
{
    let mut owner: BTreeMap<T, T> = BTreeMap::new();
    let mut overlaps = Vec::new();
    let mut outside = Vec::new();
    for c in codebook {
        for e in sphere(c) {
            if !ambient.contains(&e) {
                outside.push(Stray {
                    codeword: c.clone(),
                    element: e,
                });
                continue;
            }
            match owner.get(&e) {
                Some(prev) => overlaps.push(Overlap {
                    element: e,
                    first: prev.clone(),
                    second: c.clone(),
                }),
                None => {
                    owner.insert(e, c.clone());
                }
            }
        }
    }
    let uncovered: Vec<T> = ambient.iter().filter(|e| !owner.contains_key(e)).cloned().collect();
    PerfectCertificate {
        perfect: uncovered.is_empty() && overlaps.is_empty() && outside.is_empty(),
        codewords: codebook.len(),
        ambient: ambient.len(),
        uncovered,
        overlaps,
        outside,
    }
}

/// `L_{n,a}` against single deletions into `{0,1}^{n-1}` (`n >= 1`).
pub fn perfect_vt(n: usize, a: u64, limit: EnumerationLimit) -> Result<PerfectCertificate<BitSeq>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let code = CodeSpec::levenshtein(n, a as i64).enumerate(limit)?;
    let ambient: BTreeSet<BitSeq> = BitSeq::all(n - 1).collect();
    Ok(verify_perfect(&code, |c| deletion_sphere(c).expect("n >= 1"), &ambient))
}

/// `Y_{v+1,h+1,a}` against path deletions into `Y_{v,h}`.
pub fn perfect_path(v: usize, h: usize, a: u64, limit: EnumerationLimit) -> Result<PerfectCertificate<BitSeq>> {
    let code = CodeSpec::path(v + 1, h + 1, a as i64)?.enumerate(limit)?;
    let ambient: BTreeSet<BitSeq> = all_paths(v, h).into_iter().collect();
    Ok(verify_perfect(&code, path_deletion_sphere, &ambient))
}

/// `B_{v+1,h+1,a}` against BADs into `Y_{v,h}`.
pub fn perfect_bad(v: usize, h: usize, a: u64, limit: EnumerationLimit) -> Result<PerfectCertificate<BitSeq>> {
    let code = CodeSpec::bad(v + 1, h + 1, a as i64)?.enumerate(limit)?;
    let ambient: BTreeSet<BitSeq> = all_paths(v, h).into_iter().collect();
    Ok(verify_perfect(&code, bad_deletion_sphere, &ambient))
}

/// `M_{n,a}`: minuscule elements of `W(B_n)` with length `a` mod `n+1`.
pub fn minuscule_code(n: usize, a: u64) -> Vec<MinusculeB> {
    let m = n as u64 + 1;
    MinusculeB::all(n).filter(|w| w.length() as u64 % m == a % m).collect()
}

/// Insertion sphere of `x` filtered to a code: used by tests of the
/// insertion side.
pub fn codewords_in_insertion_sphere(code: &CodeSpec, x: &BitSeq) -> Vec<BitSeq> {
    insertion_sphere(x)
        .into_iter()
        .filter(|y| code.membership(y).unwrap_or(false))
        .collect()
}

/// The outcome of one decode, shaped for JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeReport {
    pub code: CodeSpec,
    pub input: BitSeq,
    pub output: BitSeq,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylb::{bits_from_minuscule, f01, f_m_inv};

    fn b(s: &str) -> BitSeq {
        s.parse().unwrap()
    }

    fn strs(v: &[BitSeq]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn membership_examples() {
        assert!(CodeSpec::levenshtein(3, 0).membership(&b("101")).unwrap());
        assert!(CodeSpec::path(3, 4, 1).unwrap().membership(&b("0010111")).unwrap());
        assert!(CodeSpec::bad(3, 3, 1).unwrap().membership(&b("010110")).unwrap());
        assert!(CodeSpec::levenshtein(3, 0).membership(&b("10")).is_err());
        assert!(CodeSpec::path(3, 4, 1).unwrap().membership(&b("0000111")).is_err());
        assert!(CodeSpec::path(0, 0, 0).is_err());
        assert_eq!(CodeSpec::levenshtein(3, -1), CodeSpec::Levenshtein { n: 3, a: 3 });
    }

    #[test]
    fn membership_matches_residue_oracle() {
        for n in 0..=8 {
            for a in 0..=n as u64 {
                let code = CodeSpec::levenshtein(n, a as i64);
                for x in BitSeq::all(n) {
                    let rho: u64 = x
                        .bits()
                        .iter()
                        .enumerate()
                        .map(|(i, &b)| (i as u64 + 1) * b as u64)
                        .sum();
                    assert_eq!(code.membership(&x).unwrap(), rho % (n as u64 + 1) == a);
                }
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let lim = EnumerationLimit::default();
        assert_eq!(
            strs(&CodeSpec::levenshtein(3, 0).enumerate(lim).unwrap()),
            ["000", "101"]
        );
        let mut y331 = strs(&CodeSpec::path(3, 3, 1).unwrap().enumerate(lim).unwrap());
        y331.sort();
        assert_eq!(y331, ["001011", "101100", "110010"]);
        assert_eq!(
            strs(&CodeSpec::bad(3, 3, 1).unwrap().enumerate(lim).unwrap()),
            ["010110", "100011", "101100"]
        );
        assert_eq!(CodeSpec::path(3, 4, 1).unwrap().enumerate(lim).unwrap().len(), 5);
        let too_big = CodeSpec::levenshtein(21, 0).enumerate(lim);
        assert!(matches!(
            too_big,
            Err(Error::SizeGuard {
                size: 21,
                bound: 20,
                ..
            })
        ));
    }

    #[test]
    fn vt_deletion_examples() {
        assert_eq!(vt_decode_deletion(&b("00"), 3, 0).unwrap(), b("000"));
        assert_eq!(vt_decode_deletion(&b("10"), 3, 0).unwrap(), b("101"));
        assert_eq!(vt_decode_deletion(&b("101"), 3, 0).unwrap(), b("101"));
        assert!(matches!(
            vt_decode_deletion(&b("100"), 3, 0),
            Err(Error::NoCandidate(_))
        ));
        assert!(matches!(
            vt_decode_deletion(&b("1"), 3, 0),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn vt_deletion_round_trip() {
        for n in 1..=12 {
            for a in 0..=n as u64 {
                for c in CodeSpec::levenshtein(n, a as i64)
                    .enumerate(EnumerationLimit::default())
                    .unwrap()
                {
                    for i in 1..=n {
                        assert_eq!(vt_decode_deletion(&c.delete(i).unwrap(), n, a).unwrap(), c);
                    }
                }
            }
        }
    }

    #[test]
    fn vt_insertion_examples() {
        assert_eq!(vt_decode_insertion(&b("0000"), 3, 0).unwrap(), b("000"));
        assert_eq!(vt_decode_insertion(&b("1010"), 3, 0).unwrap(), b("101"));
        assert!(matches!(
            vt_decode_insertion(&b("10101"), 3, 0),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn vt_insertion_round_trip_and_uniqueness() {
        for n in 1..=10 {
            for a in 0..=n as u64 {
                let code = CodeSpec::levenshtein(n, a as i64);
                for c in code.enumerate(EnumerationLimit::default()).unwrap() {
                    for y in insertion_sphere(&c) {
                        assert_eq!(vt_decode_insertion(&y, n, a).unwrap(), c);
                    }
                }
            }
        }
    }

    #[test]
    fn path_decode_examples() {
        assert_eq!(path_decode(&b("11100"), 2, 3, 1).unwrap().to_string(), "0111100");
        assert_eq!(path_decode(&b("01011"), 2, 3, 1).unwrap().to_string(), "0010111");
        assert_eq!(path_decode(&b("10101"), 2, 3, 1).unwrap().to_string(), "1101001");
        assert!(path_decode(&b("1110"), 2, 3, 1).is_err());
    }

    #[test]
    fn bad_decode_examples() {
        assert_eq!(bad_decode(&b("0101"), 2, 2, 1).unwrap(), b("010110"));
        assert_eq!(bad_decode(&b("1010"), 2, 2, 1).unwrap(), b("101100"));
        assert_eq!(bad_decode(&b("1001"), 2, 2, 1).unwrap(), b("100011"));
    }

    #[test]
    fn verify_perfect_examples() {
        let lim = EnumerationLimit::default();
        assert!(perfect_vt(4, 0, lim).unwrap().perfect);
        assert!(perfect_bad(2, 2, 1, lim).unwrap().perfect);
        let ambient: BTreeSet<BitSeq> = BitSeq::all(3).collect();
        let cert = verify_perfect(&[b("0000")], |c| deletion_sphere(c).unwrap(), &ambient);
        assert!(!cert.perfect);
        assert!(cert.uncovered.contains(&b("111")));
        assert_eq!(cert.uncovered.len(), 7);
        // two codewords of L_{3,0} and L_{3,1} together overlap
        let cert = verify_perfect(
            &[b("000"), b("100")],
            |c| deletion_sphere(c).unwrap(),
            &BitSeq::all(2).collect(),
        );
        assert_eq!(
            cert.overlaps,
            vec![Overlap {
                element: b("00"),
                first: b("000"),
                second: b("100")
            }]
        );
        assert!(cert.witness().unwrap().contains("00 lies in"));
        let cert = verify_perfect(&[b("000")], |c| deletion_sphere(c).unwrap(), &BTreeSet::new());
        assert_eq!(cert.outside.len(), 1);
    }

    #[test]
    fn small_perfectness_ranges() {
        let lim = EnumerationLimit::default();
        for n in 1..=9 {
            for a in 0..=n as u64 {
                assert!(perfect_vt(n, a, lim).unwrap().perfect, "L_{{{n},{a}}}");
            }
        }
        for n in 0..=6 {
            for v in 0..=n {
                for a in 0..(n + 2) as u64 {
                    assert!(perfect_path(v, n - v, a, lim).unwrap().perfect);
                    assert!(perfect_bad(v, n - v, a, lim).unwrap().perfect);
                }
            }
        }
    }

    #[test]
    fn path_example_partition() {
        let code = CodeSpec::path(3, 4, 1)
            .unwrap()
            .enumerate(EnumerationLimit::default())
            .unwrap();
        assert_eq!(strs(&code), ["0010111", "0111100", "1011010", "1100110", "1101001"]);
        let sizes: Vec<usize> = code.iter().map(|c| path_deletion_sphere(c).len()).collect();
        assert_eq!(sizes, [2, 1, 3, 2, 2]);
        assert!(perfect_path(2, 3, 1, EnumerationLimit::default()).unwrap().perfect);
    }

    #[test]
    fn minuscule_code_maps_onto_levenshtein_code() {
        for n in 0..=8 {
            for a in 0..=n as u64 {
                let mut image: Vec<BitSeq> = minuscule_code(n, a)
                    .iter()
                    .map(|w| f01(n, &f_m_inv(w)).unwrap())
                    .collect();
                image.sort();
                let direct = CodeSpec::levenshtein(n, a as i64)
                    .enumerate(EnumerationLimit::default())
                    .unwrap();
                assert_eq!(image, direct);
                for w in minuscule_code(n, a) {
                    assert_eq!(bits_from_minuscule(&w), f01(n, &f_m_inv(&w)).unwrap());
                }
            }
        }
    }

    #[test]
    fn codes_in_insertion_spheres() {
        let code = CodeSpec::levenshtein(4, 0);
        for x in BitSeq::all(3) {
            assert_eq!(codewords_in_insertion_sphere(&code, &x).len(), 1);
        }
    }

    #[test]
    fn spec_serializes_with_kind_tag() {
        let json = serde_json::to_string(&CodeSpec::levenshtein(3, 0)).unwrap();
        assert_eq!(json, r#"{"kind":"vt","n":3,"a":0}"#);
        let back: CodeSpec = serde_json::from_str(r#"{"kind":"bad","v":3,"h":3,"a":1}"#).unwrap();
        assert_eq!(back, CodeSpec::bad(3, 3, 1).unwrap());
    }
}
