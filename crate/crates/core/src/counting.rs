//! Closed-form counts: code cardinalities, generating polynomials,
//! q-binomials, sphere sizes and the Catalan/Dyck decomposition.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bitseq::{iterated_sphere, BitSeq, SphereFamilyId};
use crate::error::{Error, Result};
use crate::weylb::MinusculeB;

/// Integer polynomial in one variable; `coeffs[i]` multiplies `q^i`.
/// Never has a trailing zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    /// `sum_e q^e` over the given exponents (with multiplicity).
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exponents: I) -> Self {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for e in exponents {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += 1;
        }
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn eval(&self, q: i64) -> BigInt {
        let q = BigInt::from(q);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &q + c)
    }

    /// Reduce modulo `q^m - 1` by folding exponents mod `m` (`m >= 1`).
    pub fn fold(&self, m: usize) -> IntPoly {
        assert!(m >= 1, "fold modulus must be positive");
        let mut coeffs = vec![BigInt::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i % m] += c;
        }
        Self::new(coeffs)
    }

    /// `prod_{i=1..n} (1 + q^i)`.
    pub fn moment_product(n: usize) -> IntPoly {
        (1..=n).fold(Self::one(), |acc, i| acc.mul(&Self::one().add(&Self::monomial(i))))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(BigJson::from))
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<BigJson> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|b| b.to_bigint().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(IntPoly::new)
    }
}

/// JSON carrier for big integers: a plain number when it fits in 64 bits,
/// a decimal string otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BigJson {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for BigJson {
    fn from(v: &BigInt) -> Self {
        v.to_i64().map_or_else(|| BigJson::Big(v.to_string()), BigJson::Small)
    }
}

impl From<&BigUint> for BigJson {
    fn from(v: &BigUint) -> Self {
        v.to_i64().map_or_else(|| BigJson::Big(v.to_string()), BigJson::Small)
    }
}

impl BigJson {
    pub fn to_bigint(&self) -> std::result::Result<BigInt, String> {
        match self {
            BigJson::Small(v) => Ok(BigInt::from(*v)),
            BigJson::Big(s) => s.parse().map_err(|_| format!("not an integer: {s:?}")),
        }
    }
}

/// Moebius and totient sieves up to a limit, with direct fallback above it,
/// and memoized Catalan numbers.
#[derive(Debug)]
pub struct ArithTables {
    mu: Vec<i8>,
    phi: Vec<u64>,
    catalan: Mutex<Vec<BigUint>>,
}

impl ArithTables {
    pub fn new(limit: usize) -> Self {
        let limit = limit.max(1);
        let mut mu = vec![0i8; limit + 1];
        let mut phi = vec![0u64; limit + 1];
        let mut composite = vec![false; limit + 1];
        let mut primes: Vec<usize> = Vec::new();
        mu[1] = 1;
        phi[1] = 1;
        for i in 2..=limit {
            if !composite[i] {
                primes.push(i);
                mu[i] = -1;
                phi[i] = i as u64 - 1;
            }
            for &p in &primes {
                let ip = i * p;
                if ip > limit {
                    break;
                }
                composite[ip] = true;
                if i % p == 0 {
                    mu[ip] = 0;
                    phi[ip] = phi[i] * p as u64;
                    break;
                }
                mu[ip] = -mu[i];
                phi[ip] = phi[i] * (p as u64 - 1);
            }
        }
        Self {
            mu,
            phi,
            catalan: Mutex::new(vec![BigUint::one()]),
        }
    }

    /// Process-wide tables covering arguments up to `10^4`.
    pub fn shared() -> &'static ArithTables {
        static TABLES: OnceLock<ArithTables> = OnceLock::new();
        TABLES.get_or_init(|| ArithTables::new(10_000))
    }

    pub fn limit(&self) -> usize {
        self.mu.len() - 1
    }

    pub fn mu(&self, n: u64) -> i8 {
        assert!(n >= 1, "mu is defined on positive integers");
        match self.mu.get(n as usize) {
            Some(&m) => m,
            None => mu_direct(n),
        }
    }

    pub fn phi(&self, n: u64) -> u64 {
        assert!(n >= 1, "phi is defined on positive integers");
        match self.phi.get(n as usize) {
            Some(&p) => p,
            None => phi_direct(n),
        }
    }

    pub fn catalan(&self, i: usize) -> BigUint {
        let mut memo = self.catalan.lock().expect("catalan memo poisoned");
        while memo.len() <= i {
            let k = memo.len() - 1;
            // C_{k+1} = C_k * 2(2k+1) / (k+2)
            let next = &memo[k] * BigUint::from(2 * (2 * k as u64 + 1)) / BigUint::from(k as u64 + 2);
            memo.push(next);
        }
        memo[i].clone()
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn mu_direct(n: u64) -> i8 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn phi_direct(n: u64) -> u64 {
    factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// `mu(d/(d,a)) phi(d) / phi(d/(d,a))`; the quotient is exact since `phi(m) | phi(d)` for `m | d`.
fn ramanujan_weight(t: &ArithTables, d: u64, a: u64) -> Result<BigInt> {
    let e = d / d.gcd(&a);
    let (num, den) = (t.phi(d), t.phi(e));
    if num % den != 0 {
        return Err(Error::InexactDivision(format!("phi({d}) / phi({e})")));
    }
    Ok(BigInt::from(t.mu(e)) * BigInt::from(num / den))
}

fn exact_quotient(sum: BigInt, den: u64, what: &str) -> Result<BigUint> {
    let (q, r) = sum.div_rem(&BigInt::from(den));
    if !r.is_zero() || q.is_negative() {
        return Err(Error::InexactDivision(format!("{what}: {sum} / {den}")));
    }
    Ok(q.magnitude().clone())
}

/// `#L_{n,a} = 1/(2(n+1)) sum_{d odd, d | n+1} mu(d/(d,a)) phi(d)/phi(d/(d,a)) 2^{(n+1)/d}`.
pub fn card_levenshtein(n: u64, a: u64) -> Result<BigUint> {
    let t = ArithTables::shared();
    let m = n + 1;
    let a = a % m;
    let mut sum = BigInt::zero();
    for d in divisors(m).into_iter().filter(|d| d % 2 == 1) {
        sum += ramanujan_weight(t, d, a)? * (BigInt::one() << ((m / d) as usize));
    }
    exact_quotient(sum, 2 * m, "card_levenshtein")
}

/// `#Y_{v,h,a} = #B_{v,h,a} = 1/(v+h) sum_{d | (v,h)} mu(d/(d,a)) phi(d)/phi(d/(d,a)) binom((v+h)/d, v/d)`.
pub fn card_path_code(v: u64, h: u64, a: u64) -> Result<BigUint> {
    let n = v + h;
    if n == 0 {
        return Err(Error::InvalidParameter("v + h must be at least 1".into()));
    }
    let t = ArithTables::shared();
    let a = a % n;
    let mut sum = BigInt::zero();
    for d in divisors(v.gcd(&h)) {
        sum += ramanujan_weight(t, d, a)? * BigInt::from(binomial(n / d, v / d));
    }
    exact_quotient(sum, n, "card_path_code")
}

/// `[n over k]_q` by `[n k] = [n-1 k-1] + q^k [n-1 k]`; zero when `k > n`.
pub fn gaussian_binomial(n: usize, k: usize) -> IntPoly {
    if k > n {
        return IntPoly::zero();
    }
    // row[j] = [m over j] for the current m
    let mut row = vec![IntPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity((m + 1).min(k + 1));
        for j in 0..=m.min(k) {
            let left = if j == 0 { IntPoly::zero() } else { row[j - 1].clone() };
            let right = row.get(j).map(|p| p.shift(j)).unwrap_or_default();
            next.push(left.add(&right));
        }
        row = next;
    }
    row.swap_remove(k)
}

/// `sum_{x in {0,1}^n} q^{rho(x)}` by enumeration.
pub fn genfun_moment(n: usize) -> IntPoly {
    IntPoly::from_exponents(BitSeq::all(n).map(|x| x.moment() as usize))
}

/// `sum_{w in M_n} q^{l(w)}` by enumeration, with lengths from signed permutations.
pub fn genfun_length(n: usize) -> IntPoly {
    IntPoly::from_exponents(MinusculeB::all(n).map(|w| w.to_signed_perm().length()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenfunReport {
    pub n: usize,
    pub moment: IntPoly,
    pub length: IntPoly,
    pub product: IntPoly,
    pub equal: bool,
}

pub fn genfun_report(n: usize) -> GenfunReport {
    let (moment, length, product) = (genfun_moment(n), genfun_length(n), IntPoly::moment_product(n));
    let equal = moment == product && length == product;
    GenfunReport {
        n,
        moment,
        length,
        product,
        equal,
    }
}

/// `#iS^{(t)}(x) = sum_{i<=t} binom(n+t, i)` for `x` of length `n`.
pub fn sphere_size_standard(n: u64, t: u64) -> BigUint {
    (0..=t).map(|i| binomial(n + t, i)).sum()
}

/// `#iS^{(t)}_{BA}(x) = binom(n+2t, t)`.
pub fn sphere_size_bai(n: u64, t: u64) -> BigUint {
    binomial(n + 2 * t, t)
}

/// Formula against enumeration, for JSON reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountCheck {
    pub formula: BigJson,
    pub enumeration: BigJson,
    pub equal: bool,
}

impl CountCheck {
    pub fn new(formula: &BigUint, enumeration: u64) -> Self {
        let e = BigUint::from(enumeration);
        Self {
            formula: formula.into(),
            enumeration: (&e).into(),
            equal: *formula == e,
        }
    }
}

pub const PAPER_PATH_SPHERE_00: [&str; 15] = [
    "110000", "101000", "100100", "100010", "100001", "011000", "010100", "010010", "010001", "001100", "001010",
    "001001", "000110", "000101", "000011",
];

pub const PAPER_PATH_SPHERE_01: [&str; 16] = [
    "010101", "001101", "001011", "011001", "011010", "010110", "010011", "000111", "100101", "101001", "101010",
    "100011", "100110", "110001", "110010", "110100",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSphereFacts {
    /// `#iS^{(0)} = 1` and `#iS^{(1)} = n+2` for every `x` up to this length.
    pub checked_up_to: usize,
    pub small_radii_ok: bool,
    pub size_00: usize,
    pub size_01: usize,
    pub members_00_match: bool,
    pub members_01_match: bool,
    pub ok: bool,
}

/// Path spheres of radius 0 and 1 have size `1` and `n+2`; radius 2 depends on `x`.
pub fn path_sphere_facts() -> PathSphereFacts {
    let checked_up_to = 6;
    let small_radii_ok = (0..=checked_up_to).all(|n| {
        BitSeq::all(n).all(|x| {
            iterated_sphere(&x, 0, SphereFamilyId::Path).len() == 1
                && iterated_sphere(&x, 1, SphereFamilyId::Path).len() == n + 2
        })
    });
    let parse = |xs: &[&str]| -> BTreeSet<BitSeq> { xs.iter().map(|s| s.parse().expect("bit literal")).collect() };
    let s00 = iterated_sphere(&"00".parse().expect("bits"), 2, SphereFamilyId::Path);
    let s01 = iterated_sphere(&"01".parse().expect("bits"), 2, SphereFamilyId::Path);
    let members_00_match = s00 == parse(&PAPER_PATH_SPHERE_00);
    let members_01_match = s01 == parse(&PAPER_PATH_SPHERE_01);
    let (size_00, size_01) = (s00.len(), s01.len());
    PathSphereFacts {
        checked_up_to,
        small_radii_ok,
        size_00,
        size_01,
        members_00_match,
        members_01_match,
        ok: small_radii_ok && size_00 == 15 && size_01 == 16 && members_00_match && members_01_match,
    }
}

/// `DYC(c, lead)`: length `2c`, first bit `lead`, and every prefix has at least
/// as many `lead` bits as others. Lexicographic order.
pub fn dyck_enumerate(c: usize, lead: u8) -> Vec<BitSeq> {
    fn go(c: usize, lead: u8, prefix: &mut Vec<u8>, ahead: usize, out: &mut Vec<BitSeq>) {
        if prefix.len() == 2 * c {
            out.push(BitSeq::from_vec_unchecked(prefix.clone()));
            return;
        }
        let used_lead = (prefix.len() + ahead) / 2;
        for bit in [0u8, 1] {
            if bit == lead && used_lead < c {
                prefix.push(bit);
                go(c, lead, prefix, ahead + 1, out);
                prefix.pop();
            } else if bit != lead && ahead > 0 {
                prefix.push(bit);
                go(c, lead, prefix, ahead - 1, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(c, lead, &mut Vec::with_capacity(2 * c), 0, &mut out);
    out
}

/// `x = p_1 y_1 p_2 y_2 ... p_n y_n l` with `p_i in DYC(c_i, 1-y_i)` and `l`
/// balanced of length `2 c_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DyckDecomposition {
    pub counts: Vec<usize>,
    pub factors: Vec<BitSeq>,
    pub tail: BitSeq,
}

/// Greedy shortest-prefix factorization; yields the lexicographically least counts.
pub fn dyck_decompose(x: &BitSeq, y: &BitSeq) -> Result<DyckDecomposition> {
    let fail = |why: &str| Error::NotDecomposable(format!("{x} over {y}: {why}"));
    if x.len() < y.len() || !(x.len() - y.len()).is_multiple_of(2) {
        return Err(fail("length difference is not a non-negative even number"));
    }
    let bits = x.bits();
    let mut pos = 0;
    let mut counts = Vec::with_capacity(y.len() + 1);
    let mut factors = Vec::with_capacity(y.len());
    for &target in y.bits() {
        // balance of the current prefix, counting the flipped bit as +1
        let start = pos;
        let mut balance = 0i64;
        loop {
            let Some(&b) = bits.get(pos) else {
                return Err(fail("ran out of bits"));
            };
            pos += 1;
            if b == target {
                if balance == 0 {
                    break;
                }
                balance -= 1;
            } else {
                balance += 1;
            }
        }
        let p = &bits[start..pos - 1];
        counts.push(p.len() / 2);
        factors.push(BitSeq::from_vec_unchecked(p.to_vec()));
    }
    let tail = BitSeq::from_vec_unchecked(bits[pos..].to_vec());
    if tail.balance() != 0 {
        return Err(fail("tail is not balanced"));
    }
    counts.push(tail.len() / 2);
    Ok(DyckDecomposition { counts, factors, tail })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalanReport {
    pub n: usize,
    pub t: usize,
    pub lhs: BigJson,
    pub rhs: BigJson,
    pub equal: bool,
}

/// `sum (c_{n+1}+1) C_{c_1} ... C_{c_{n+1}}` over compositions of `t` into `n+1`
/// parts, against `binom(n+2t, t)`.
pub fn catalan_identity(n: usize, t: usize) -> CatalanReport {
    fn go(tables: &ArithTables, parts_left: usize, remaining: usize, acc: BigUint, total: &mut BigUint) {
        if parts_left == 1 {
            let last = remaining;
            *total += acc * tables.catalan(last) * BigUint::from(last as u64 + 1);
            return;
        }
        for c in 0..=remaining {
            go(tables, parts_left - 1, remaining - c, &acc * tables.catalan(c), total);
        }
    }
    let mut lhs = BigUint::zero();
    go(ArithTables::shared(), n + 1, t, BigUint::one(), &mut lhs);
    let rhs = sphere_size_bai(n as u64, t as u64);
    CatalanReport {
        n,
        t,
        equal: lhs == rhs,
        lhs: (&lhs).into(),
        rhs: (&rhs).into(),
    }
}
