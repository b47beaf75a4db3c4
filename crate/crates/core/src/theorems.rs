//! Exhaustive verification runners, one per theorem, up to a size bound.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::bitseq::{iterated_sphere, psi_inverse, BitSeq, SphereFamilyId};
use crate::codes::{perfect_bad, perfect_path, perfect_vt, CodeSpec, EnumerationLimit, PerfectCertificate};
use crate::counting::{
    card_levenshtein, card_path_code, catalan_identity, genfun_report, path_sphere_facts, sphere_size_bai,
    sphere_size_standard,
};
use crate::error::{Error, Result};
use crate::genins::{check_i1_i2, h_family, k_family, InsertionFamily};
use crate::weyla::{all_paths, bad_deletion_sphere, path_deletion_sphere};
use crate::weylb::{act_on_minuscule, bits_from_minuscule, insertion_op, minuscule_from_bits, MinusculeB};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    PerfectVt,
    PerfectPath,
    PerfectBad,
    Main1,
    MomentLength,
    I1i2K,
    I1i2H,
    Genfun,
    Cardinalities,
    SphereSizes,
    CatalanIdentity,
}

impl Theorem {
    pub const ALL: [Theorem; 11] = [
        Theorem::PerfectVt,
        Theorem::PerfectPath,
        Theorem::PerfectBad,
        Theorem::Main1,
        Theorem::MomentLength,
        Theorem::I1i2K,
        Theorem::I1i2H,
        Theorem::Genfun,
        Theorem::Cardinalities,
        Theorem::SphereSizes,
        Theorem::CatalanIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::PerfectVt => "perfect-vt",
            Theorem::PerfectPath => "perfect-path",
            Theorem::PerfectBad => "perfect-bad",
            Theorem::Main1 => "main1",
            Theorem::MomentLength => "moment-length",
            Theorem::I1i2K => "i1i2-k",
            Theorem::I1i2H => "i1i2-h",
            Theorem::Genfun => "genfun",
            Theorem::Cardinalities => "cardinalities",
            Theorem::SphereSizes => "sphere-sizes",
            Theorem::CatalanIdentity => "catalan-identity",
        }
    }

    /// What `max_size` bounds.
    pub fn size_meaning(self) -> &'static str {
        match self {
            Theorem::PerfectVt => "codeword length n",
            Theorem::PerfectPath | Theorem::PerfectBad => "codeword length v+h+2",
            Theorem::Main1 | Theorem::MomentLength | Theorem::Genfun => "rank n",
            Theorem::I1i2K | Theorem::I1i2H => "v+h",
            Theorem::Cardinalities => "n and v+h",
            Theorem::SphereSizes => "base length n (t <= 3)",
            Theorem::CatalanIdentity => "n (t <= 5)",
        }
    }

    /// The default bound: the largest size checked in the test suite.
    pub fn default_max_size(self) -> usize {
        match self {
            Theorem::PerfectVt => 12,
            Theorem::PerfectPath | Theorem::PerfectBad => 11,
            Theorem::Main1 => 6,
            Theorem::MomentLength => 8,
            Theorem::I1i2K | Theorem::I1i2H => 8,
            Theorem::Genfun => 10,
            Theorem::Cardinalities => 14,
            Theorem::SphereSizes => 8,
            Theorem::CatalanIdentity => 8,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown theorem {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub max_size: usize,
    pub passed: bool,
    /// Number of instances checked.
    pub cases: u64,
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
}

struct Tally {
    cases: u64,
    witness: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            cases: 0,
            witness: None,
        }
    }

    /// Records one instance; keeps the first failure.
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn report(self, theorem: Theorem, max_size: usize, details: Option<serde_json::Value>) -> TheoremReport {
        TheoremReport {
            theorem,
            max_size,
            passed: self.witness.is_none(),
            cases: self.cases,
            witness: self.witness,
            details,
        }
    }
}

fn cert_witness(cert: &PerfectCertificate<BitSeq>) -> String {
    cert.witness().unwrap_or_else(|| "not perfect".into())
}

/// Runs `theorem` on every instance up to `max_size`.
pub fn run(theorem: Theorem, max_size: usize) -> Result<TheoremReport> {
    let lim = EnumerationLimit::unbounded();
    let mut tally = Tally::new();
    let mut details = None;
    match theorem {
        Theorem::PerfectVt => {
            for n in 2..=max_size {
                for a in 0..=n as u64 {
                    let cert = perfect_vt(n, a, lim)?;
                    tally.check(cert.perfect, || format!("L_{{{n},{a}}}: {}", cert_witness(&cert)));
                }
            }
        }
        Theorem::PerfectPath | Theorem::PerfectBad => {
            let path = theorem == Theorem::PerfectPath;
            for n in 0..=max_size.saturating_sub(2) {
                for v in 0..=n {
                    let h = n - v;
                    for a in 0..(n + 2) as u64 {
                        let cert = if path {
                            perfect_path(v, h, a, lim)?
                        } else {
                            perfect_bad(v, h, a, lim)?
                        };
                        tally.check(cert.perfect, || format!("v={v} h={h} a={a}: {}", cert_witness(&cert)));
                    }
                }
            }
            let (v, h, a) = if path { (2, 3, 1) } else { (2, 2, 1) };
            if v + h + 2 <= max_size {
                details = Some(example_partition(path, v, h, a)?);
            }
        }
        Theorem::Main1 => {
            for n in 0..=max_size {
                for w in MinusculeB::all(n) {
                    let x = bits_from_minuscule(&w);
                    for i in 0..=n {
                        for bit in 0..=1u8 {
                            let j = psi_inverse(n, i, bit)?;
                            let acted = bits_from_minuscule(&act_on_minuscule(&insertion_op(n, j)?, &w)?);
                            let inserted = x.insert(i, bit)?;
                            tally.check(acted == inserted, || {
                                format!(
                                    "n={n} J={:?} i={i} b={bit}: action gives {acted}, insertion {inserted}",
                                    w.subset()
                                )
                            });
                        }
                    }
                }
            }
        }
        Theorem::MomentLength => {
            for n in 0..=max_size {
                for x in BitSeq::all(n) {
                    let len = minuscule_from_bits(&x).to_signed_perm().length() as u64;
                    tally.check(len == x.moment(), || {
                        format!("x={x}: length {len}, moment {}", x.moment())
                    });
                }
            }
        }
        Theorem::I1i2K | Theorem::I1i2H => {
            let mut spans = Vec::new();
            for n in 0..=max_size {
                for v in 0..=n {
                    let h = n - v;
                    let fam: InsertionFamily<BitSeq> = if theorem == Theorem::I1i2K {
                        k_family(v, h)
                    } else {
                        h_family(v, h)
                    };
                    let report = check_i1_i2(&fam)?;
                    let stated = (v + h + 2) as i64;
                    spans.push(json!({"v": v, "h": h, "axioms": report.ok, "s": report.s}));
                    tally.check(report.ok && report.s == Some(stated), || match &report.witness {
                        Some(w) => format!(
                            "v={v} h={h}: axiom violated: {}",
                            serde_json::to_string(w).unwrap_or_default()
                        ),
                        None => format!(
                            "v={v} h={h}: axioms hold but S = {}, stated S = v+h+2 = {stated}",
                            report.s.map_or_else(|| "undefined".to_string(), |s| s.to_string())
                        ),
                    });
                }
            }
            details = Some(json!({ "spans": spans }));
        }
        Theorem::Genfun => {
            for n in 0..=max_size {
                let r = genfun_report(n);
                tally.check(r.equal, || {
                    format!("n={n}: moment {} length {} product {}", r.moment, r.length, r.product)
                });
            }
        }
        Theorem::Cardinalities => {
            for n in 1..=max_size {
                let m = n as u64 + 1;
                let mut counts = vec![0u64; n + 1];
                for x in BitSeq::all(n) {
                    counts[(x.moment() % m) as usize] += 1;
                }
                for (a, &count) in counts.iter().enumerate() {
                    let formula = card_levenshtein(n as u64, a as u64)?;
                    tally.check(formula == count.into(), || {
                        format!("#L_{{{n},{a}}}: formula {formula}, enumeration {count}")
                    });
                }
                for v in 0..=n {
                    let h = n - v;
                    let mut counts = vec![0u64; n];
                    for x in all_paths(v, h) {
                        counts[(x.inversions() % n as u64) as usize] += 1;
                    }
                    for (a, &count) in counts.iter().enumerate() {
                        let formula = card_path_code(v as u64, h as u64, a as u64)?;
                        tally.check(formula == count.into(), || {
                            format!("#Y_{{{v},{h},{a}}}: formula {formula}, enumeration {count}")
                        });
                    }
                }
            }
            if max_size >= 7 {
                let y341 = card_path_code(3, 4, 1)?;
                let b331 = CodeSpec::bad(3, 3, 1)?.enumerate(lim)?.len();
                tally.check(y341 == 5u32.into(), || format!("#Y_{{3,4,1}} = {y341}, expected 5"));
                tally.check(b331 == 3, || format!("#B_{{3,3,1}} = {b331}, expected 3"));
            }
        }
        Theorem::SphereSizes => {
            for n in 0..=max_size {
                for x in sample(n, 20) {
                    for t in 0..=3usize {
                        let std = iterated_sphere(&x, t, SphereFamilyId::Standard).len();
                        let want = sphere_size_standard(n as u64, t as u64);
                        tally.check(want == std.into(), || format!("standard x={x} t={t}: {std} != {want}"));
                        let bai = iterated_sphere(&x, t, SphereFamilyId::Bai).len();
                        let want = sphere_size_bai(n as u64, t as u64);
                        tally.check(want == bai.into(), || format!("BAI x={x} t={t}: {bai} != {want}"));
                    }
                }
            }
            let facts = path_sphere_facts();
            tally.check(facts.ok, || format!("path sphere facts: {facts:?}"));
            details = Some(serde_json::to_value(&facts).map_err(|e| Error::InvalidParameter(e.to_string()))?);
        }
        Theorem::CatalanIdentity => {
            for n in 0..=max_size {
                for t in 0..=5 {
                    let r = catalan_identity(n, t);
                    tally.check(r.equal, || format!("n={n} t={t}: lhs {:?} rhs {:?}", r.lhs, r.rhs));
                }
            }
        }
    }
    Ok(tally.report(theorem, max_size, details))
}

/// All of `{0,1}^n` when small, otherwise `count` evenly spaced elements.
pub fn sample(n: usize, count: usize) -> Vec<BitSeq> {
    let total = 1u128 << n;
    if total <= count as u128 {
        return BitSeq::all(n).collect();
    }
    (0..count as u128)
        .map(|k| {
            let idx = k * (total - 1) / (count as u128 - 1);
            let bits = (0..n).map(|i| ((idx >> (n - 1 - i)) & 1) as u8).collect();
            BitSeq::new(bits).expect("bits are 0/1")
        })
        .collect()
}

/// Codewords of the `(v+1, h+1, a)` code and their deletion spheres.
fn example_partition(path: bool, v: usize, h: usize, a: u64) -> Result<serde_json::Value> {
    let lim = EnumerationLimit::unbounded();
    let code = if path {
        CodeSpec::path(v + 1, h + 1, a as i64)?
    } else {
        CodeSpec::bad(v + 1, h + 1, a as i64)?
    };
    let words = code.enumerate(lim)?;
    let spheres: Vec<_> = words
        .iter()
        .map(|c| {
            let s = if path {
                path_deletion_sphere(c)
            } else {
                bad_deletion_sphere(c)
            };
            json!({"codeword": c, "sphere": s})
        })
        .collect();
    Ok(json!({"code": code, "ambient": all_paths(v, h).len(), "partition": spheres}))
}
