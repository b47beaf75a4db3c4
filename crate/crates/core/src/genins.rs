//! Generalized insertions and deletions over finite, materialized sets.
//!
//! An [`InsertionFamily`] is a list of total maps `I_0, ..., I_r : X -> Y`
//! with a weight `f : Y -> Z`. A [`DeletionFamily`] is a list of partial maps
//! `Y -> X`, stored as graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::bitseq::{psi_insert, BitSeq};
use crate::codes::{verify_perfect, PerfectCertificate};
use crate::error::{Error, Result};
use crate::weyla::{all_paths, azby, azby_inverse, bai_op, h_insert, path_insert};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionFamily<T> {
    name: String,
    domain: Vec<T>,
    codomain: Vec<T>,
    weight: Vec<i64>,
    /// `ops[j][i]` is the codomain index of `I_j(domain[i])`.
    ops: Vec<Vec<usize>>,
    domain_index: BTreeMap<T, usize>,
    codomain_index: BTreeMap<T, usize>,
}

fn index_of<T: Ord + Clone>(values: &[T], what: &str) -> Result<BTreeMap<T, usize>> {
    let mut index = BTreeMap::new();
    for (i, v) in values.iter().enumerate() {
        if index.insert(v.clone(), i).is_some() {
            return Err(Error::InvalidParameter(format!("duplicate value in {what}")));
        }
    }
    Ok(index)
}

impl<T: Ord + Clone + Display> InsertionFamily<T> {
    /// Tabulates `op(x, j)` for `j = 0..op_count` over the domain.
    pub fn from_fn<W, F>(
        name: &str,
        domain: Vec<T>,
        codomain: Vec<T>,
        weight: W,
        op_count: usize,
        op: F,
    ) -> Result<Self>
    where
        W: Fn(&T) -> i64,
        F: Fn(&T, usize) -> Result<T>,
    {
        let weights = codomain.iter().map(&weight).collect();
        let codomain_index = index_of(&codomain, "codomain")?;
        let mut ops = Vec::with_capacity(op_count);
        for j in 0..op_count {
            let mut table = Vec::with_capacity(domain.len());
            for x in &domain {
                let y = op(x, j)?;
                let &k = codomain_index
                    .get(&y)
                    .ok_or_else(|| Error::NotInFamily(y.to_string(), "codomain"))?;
                table.push(k);
            }
            ops.push(table);
        }
        Ok(Self {
            name: name.to_string(),
            domain_index: index_of(&domain, "domain")?,
            domain,
            codomain,
            weight: weights,
            ops,
            codomain_index,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> &[T] {
        &self.domain
    }

    pub fn codomain(&self) -> &[T] {
        &self.codomain
    }

    pub fn op_count(&self) -> usize {
        self.ops.len()
    }

    pub fn weight_of(&self, y: &T) -> Result<i64> {
        Ok(self.weight[self.codomain_pos(y)?])
    }

    fn domain_pos(&self, x: &T) -> Result<usize> {
        self.domain_index
            .get(x)
            .copied()
            .ok_or_else(|| Error::NotInFamily(x.to_string(), "domain"))
    }

    fn codomain_pos(&self, y: &T) -> Result<usize> {
        self.codomain_index
            .get(y)
            .copied()
            .ok_or_else(|| Error::NotInFamily(y.to_string(), "codomain"))
    }

    pub fn apply(&self, j: usize, x: &T) -> Result<T> {
        let table = self.ops.get(j).ok_or(Error::IndexOutOfRange {
            index: j,
            min: 0,
            max: self.ops.len().saturating_sub(1),
        })?;
        Ok(self.codomain[table[self.domain_pos(x)?]].clone())
    }

    /// Swap two operators; used to build negative cases.
    pub fn swap_ops(&mut self, i: usize, j: usize) {
        self.ops.swap(i, j);
    }

    /// `iS(x) = { I(x) : I in the family }`.
    pub fn insertion_sphere(&self, x: &T) -> Result<BTreeSet<T>> {
        let i = self.domain_pos(x)?;
        Ok(self.ops.iter().map(|t| self.codomain[t[i]].clone()).collect())
    }

    /// `dS(y) = { w in X : y in iS(w) }`.
    pub fn deletion_sphere(&self, y: &T) -> Result<BTreeSet<T>> {
        let k = self.codomain_pos(y)?;
        Ok((0..self.domain.len())
            .filter(|&i| self.ops.iter().any(|t| t[i] == k))
            .map(|i| self.domain[i].clone())
            .collect())
    }

    /// Deletion family whose partial maps are the inverses of the operators.
    /// Fails if some operator is not injective.
    pub fn inverse_graphs(&self) -> Result<DeletionFamily<T>> {
        let mut partials = Vec::with_capacity(self.ops.len());
        for (j, table) in self.ops.iter().enumerate() {
            let mut graph = BTreeMap::new();
            for (i, &k) in table.iter().enumerate() {
                if let Some(prev) = graph.insert(self.codomain[k].clone(), self.domain[i].clone()) {
                    return Err(Error::InvalidParameter(format!(
                        "operator {j} sends both {prev} and {} to {}",
                        self.domain[i], self.codomain[k]
                    )));
                }
            }
            partials.push(graph);
        }
        Ok(DeletionFamily { partials })
    }

    pub fn to_descriptor(&self, deletions: Option<&DeletionFamily<T>>) -> FamilyDescriptor {
        FamilyDescriptor {
            domain: self.domain.iter().map(ToString::to_string).collect(),
            codomain: self.codomain.iter().map(ToString::to_string).collect(),
            weight: self
                .codomain
                .iter()
                .zip(&self.weight)
                .map(|(y, &w)| (y.to_string(), w))
                .collect(),
            ops: self
                .ops
                .iter()
                .map(|t| t.iter().map(|&k| self.codomain[k].to_string()).collect())
                .collect(),
            deletions: deletions.map(|d| {
                d.partials
                    .iter()
                    .map(|g| g.iter().map(|(y, x)| (y.to_string(), x.to_string())).collect())
                    .collect()
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom")]
pub enum InsertionWitness<T> {
    /// `I_{j+1}(x) != I_j(x)` but the weight did not go up by one.
    I1 { x: T, j: usize, before: i64, after: i64 },
    /// `f(I_r(x)) - f(I_0(x))` differs from the span seen at `reference`.
    I2 {
        x: T,
        span: i64,
        reference: T,
        reference_span: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionReport<T> {
    pub ok: bool,
    /// `None` when the domain is empty.
    pub s: Option<i64>,
    pub witness: Option<InsertionWitness<T>>,
}

/// Exhaustive check of (I1) and (I2). Returns `S` on success.
pub fn check_i1_i2<T: Ord + Clone + Display>(fam: &InsertionFamily<T>) -> Result<InsertionReport<T>> {
    if fam.ops.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let r = fam.ops.len() - 1;
    let mut reference: Option<(usize, i64)> = None;
    for (i, x) in fam.domain.iter().enumerate() {
        for j in 0..r {
            let (cur, next) = (fam.ops[j][i], fam.ops[j + 1][i]);
            if cur != next && fam.weight[next] != fam.weight[cur] + 1 {
                return Ok(InsertionReport {
                    ok: false,
                    s: None,
                    witness: Some(InsertionWitness::I1 {
                        x: x.clone(),
                        j,
                        before: fam.weight[cur],
                        after: fam.weight[next],
                    }),
                });
            }
        }
        let span = fam.weight[fam.ops[r][i]] - fam.weight[fam.ops[0][i]];
        match reference {
            None => reference = Some((i, span)),
            Some((ri, rs)) if rs != span => {
                return Ok(InsertionReport {
                    ok: false,
                    s: None,
                    witness: Some(InsertionWitness::I2 {
                        x: x.clone(),
                        span,
                        reference: fam.domain[ri].clone(),
                        reference_span: rs,
                    }),
                });
            }
            Some(_) => {}
        }
    }
    Ok(InsertionReport {
        ok: true,
        s: reference.map(|(_, s)| s),
        witness: None,
    })
}

/// Partial maps `Y -> X` given by their graphs `y -> x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionFamily<T: Ord> {
    pub partials: Vec<BTreeMap<T, T>>,
}

impl<T: Ord + Clone> DeletionFamily<T> {
    pub fn empty() -> Self {
        Self { partials: Vec::new() }
    }

    /// Tabulates `del(y, k)` for `k = 0..count` over `codomain`; `None` means undefined.
    pub fn from_fn<F>(codomain: &[T], count: usize, del: F) -> Self
    where
        F: Fn(&T, usize) -> Option<T>,
    {
        let partials = (0..count)
            .map(|k| {
                codomain
                    .iter()
                    .filter_map(|y| del(y, k).map(|x| (y.clone(), x)))
                    .collect()
            })
            .collect();
        Self { partials }
    }

    /// `{ D(y) : D defined at y }`.
    pub fn sphere(&self, y: &T) -> BTreeSet<T> {
        self.partials.iter().filter_map(|g| g.get(y).cloned()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom")]
pub enum DeletionWitness<T> {
    /// `D_k(y) = x` but no insertion sends `x` to `y`.
    D1 { k: usize, y: T, x: T },
    /// No deletion undoes `I_j` at `x`.
    D2 { j: usize, x: T, y: T },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionReport<T> {
    pub ok: bool,
    pub witness: Option<DeletionWitness<T>>,
}

/// Exhaustive check of (D1) and (D2) against `fam`. Points where a partial map
/// is undefined, or whose image lies outside `X`, are skipped by (D1).
pub fn check_d1_d2<T: Ord + Clone + Display>(
    del: &DeletionFamily<T>,
    fam: &InsertionFamily<T>,
) -> Result<DeletionReport<T>> {
    for (k, graph) in del.partials.iter().enumerate() {
        for (y, x) in graph {
            if fam.codomain_index.contains_key(y) && !fam.insertion_sphere(x).map(|s| s.contains(y)).unwrap_or(false) {
                return Ok(DeletionReport {
                    ok: false,
                    witness: Some(DeletionWitness::D1 {
                        k,
                        y: y.clone(),
                        x: x.clone(),
                    }),
                });
            }
        }
    }
    for (j, table) in fam.ops.iter().enumerate() {
        for (i, &k) in table.iter().enumerate() {
            let (x, y) = (&fam.domain[i], &fam.codomain[k]);
            if !del.partials.iter().any(|g| g.get(y) == Some(x)) {
                return Ok(DeletionReport {
                    ok: false,
                    witness: Some(DeletionWitness::D2 {
                        j,
                        x: x.clone(),
                        y: y.clone(),
                    }),
                });
            }
        }
    }
    Ok(DeletionReport {
        ok: true,
        witness: None,
    })
}

/// `x = D(y)` for some `D` iff `y = I(x)` for some `I`, over `X x Y`.
/// Returns the first pair where the two sides disagree.
pub fn check_rel_ins_and_del<T: Ord + Clone + Display>(
    del: &DeletionFamily<T>,
    fam: &InsertionFamily<T>,
) -> Option<(T, T)> {
    let by_insertion: BTreeSet<(T, T)> = fam
        .ops
        .iter()
        .flat_map(|t| {
            t.iter()
                .enumerate()
                .map(|(i, &k)| (fam.domain[i].clone(), fam.codomain[k].clone()))
        })
        .collect();
    let by_deletion: BTreeSet<(T, T)> = del
        .partials
        .iter()
        .flat_map(|g| g.iter().map(|(y, x)| (x.clone(), y.clone())))
        .filter(|(x, y)| fam.domain_index.contains_key(x) && fam.codomain_index.contains_key(y))
        .collect();
    by_insertion.symmetric_difference(&by_deletion).next().cloned()
}

/// Parts 1-3 of the sphere lemma for one `x`: `#iS(x) = S+1`, `f` injective on
/// `iS(x)`, and `f(iS(x))` the consecutive run starting at `f(I_0(x))`.
pub fn check_sphere_lemma<T: Ord + Clone + Display>(fam: &InsertionFamily<T>, s: i64, x: &T) -> Result<bool> {
    let sphere = fam.insertion_sphere(x)?;
    let start = fam.weight_of(&fam.apply(0, x)?)?;
    let mut weights: Vec<i64> = sphere.iter().map(|y| fam.weight_of(y)).collect::<Result<_>>()?;
    weights.sort_unstable();
    let expected: Vec<i64> = (start..=start + s).collect();
    Ok(sphere.len() as i64 == s + 1 && weights == expected)
}

/// `C_a = { y in Y : f(y) = a mod S+1 }`, in codomain order.
pub fn construct_ca<T: Ord + Clone + Display>(fam: &InsertionFamily<T>, a: i64) -> Result<Vec<T>> {
    let report = check_i1_i2(fam)?;
    let s = match (report.ok, report.s) {
        (true, Some(s)) => s,
        (true, None) => return Ok(Vec::new()),
        (false, _) => {
            return Err(Error::AxiomViolation(format!("{} fails (I1)/(I2)", fam.name)));
        }
    };
    let m = s + 1;
    Ok(fam
        .codomain
        .iter()
        .zip(&fam.weight)
        .filter(|(_, &w)| (w - a).rem_euclid(m) == 0)
        .map(|(y, _)| y.clone())
        .collect())
}

/// `C_a` checked against the partial deletions over the domain.
pub fn verify_generalized_perfect<T: Ord + Clone + Display>(
    fam: &InsertionFamily<T>,
    del: &DeletionFamily<T>,
    a: i64,
) -> Result<PerfectCertificate<T>> {
    let code = construct_ca(fam, a)?;
    let ambient: BTreeSet<T> = fam.domain.iter().cloned().collect();
    Ok(verify_perfect(&code, |y| del.sphere(y), &ambient))
}

/// Ordered single insertions on `{0,1}^n` (`I_j = I_{psi(n,j)}`), weighted by moment.
pub fn standard_family(n: usize) -> InsertionFamily<BitSeq> {
    InsertionFamily::from_fn(
        "standard",
        BitSeq::all(n).collect(),
        BitSeq::all(n + 1).collect(),
        |y| y.moment() as i64,
        2 * n + 2,
        psi_insert,
    )
    .expect("insertions land in {0,1}^{n+1}")
}

/// `D_i` deletes position `i` (1-based), `i = 1..=n+1`.
pub fn standard_deletions(n: usize) -> DeletionFamily<BitSeq> {
    let codomain: Vec<BitSeq> = BitSeq::all(n + 1).collect();
    DeletionFamily::from_fn(&codomain, n + 1, |y, k| y.delete(k + 1).ok())
}

/// Path insertions `K_j` from `Y_{v,h}` to `Y_{v+1,h+1}`, weighted by `inv`.
pub fn k_family(v: usize, h: usize) -> InsertionFamily<BitSeq> {
    InsertionFamily::from_fn(
        "K",
        all_paths(v, h),
        all_paths(v + 1, h + 1),
        |y| y.inversions() as i64,
        2 * (v + h) + 2,
        path_insert,
    )
    .expect("path insertions land in Y_{v+1,h+1}")
}

/// `H_j` from `Y_{v,h}` to `Y_{v+1,h+1}`, weighted by `inv`.
pub fn h_family(v: usize, h: usize) -> InsertionFamily<BitSeq> {
    InsertionFamily::from_fn(
        "H",
        all_paths(v, h),
        all_paths(v + 1, h + 1),
        |y| y.inversions() as i64,
        2 * (v + h) + 2,
        h_insert,
    )
    .expect("H operators land in Y_{v+1,h+1}")
}

/// Balanced adjacent insertions ordered as `sigma H_j sigma^{-1}`, weighted by `inv o sigma^{-1}`.
pub fn bai_family(v: usize, h: usize) -> InsertionFamily<BitSeq> {
    let sorted = |mut xs: Vec<BitSeq>| {
        xs.sort();
        xs
    };
    InsertionFamily::from_fn(
        "BAI",
        sorted(all_paths(v, h).iter().map(azby).collect()),
        sorted(all_paths(v + 1, h + 1).iter().map(azby).collect()),
        |y| azby_inverse(y).inversions() as i64,
        2 * (v + h) + 2,
        bai_op,
    )
    .expect("BAIs land in sigma(Y_{v+1,h+1})")
}

/// `D_j` (`j = 2..=n+2`) removes the first step and step `j` when they differ.
pub fn path_deletions(v: usize, h: usize) -> DeletionFamily<BitSeq> {
    let n = v + h;
    let codomain = all_paths(v + 1, h + 1);
    DeletionFamily::from_fn(&codomain, n + 1, |y, k| {
        let (bits, j) = (y.bits(), k + 1);
        (bits[0] != bits[j]).then(|| y.delete(j + 1).and_then(|z| z.delete(1)).expect("in range"))
    })
}

/// `D_k` (`k = 1..=n+1`) removes positions `k, k+1` when they differ.
pub fn bad_deletions(v: usize, h: usize) -> DeletionFamily<BitSeq> {
    let n = v + h;
    let codomain = all_paths(v + 1, h + 1);
    DeletionFamily::from_fn(&codomain, n + 1, |y, k| {
        let bits = y.bits();
        (bits[k] != bits[k + 1]).then(|| y.delete(k + 2).and_then(|z| z.delete(k + 1)).expect("in range"))
    })
}

/// Which registered family to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RegisteredFamily {
    Standard,
    K,
    H,
    Bai,
}

/// JSON form of a family: ops are arrays aligned with `domain`; each deletion
/// is a `{y: x}` object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDescriptor {
    pub domain: Vec<String>,
    pub codomain: Vec<String>,
    pub weight: BTreeMap<String, i64>,
    pub ops: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deletions: Option<Vec<BTreeMap<String, String>>>,
}

impl FamilyDescriptor {
    pub fn to_family(&self, name: &str) -> Result<InsertionFamily<String>> {
        for y in &self.codomain {
            if !self.weight.contains_key(y) {
                return Err(Error::InvalidParameter(format!("no weight for {y:?}")));
            }
        }
        for (j, op) in self.ops.iter().enumerate() {
            if op.len() != self.domain.len() {
                return Err(Error::InvalidParameter(format!(
                    "op {j} has {} values for a domain of {}",
                    op.len(),
                    self.domain.len()
                )));
            }
        }
        let domain_index = index_of(&self.domain, "domain")?;
        InsertionFamily::from_fn(
            name,
            self.domain.clone(),
            self.codomain.clone(),
            |y| self.weight[y],
            self.ops.len(),
            |x, j| Ok(self.ops[j][domain_index[x]].clone()),
        )
    }

    pub fn deletion_family(&self) -> Option<DeletionFamily<String>> {
        self.deletions
            .as_ref()
            .map(|ds| DeletionFamily { partials: ds.to_vec() })
    }
}
