//! Inputs shared by the benchmarks in `benches/`.

use idweyl_core::codes::{CodeSpec, EnumerationLimit};
use idweyl_core::BitSeq;

/// Every single-deletion received word of every codeword of `L_{n,a}`.
pub fn vt_received(n: usize, a: i64) -> Vec<BitSeq> {
    CodeSpec::levenshtein(n, a)
        .enumerate(EnumerationLimit::default())
        .expect("n is small")
        .iter()
        .flat_map(|c| (1..=n).map(move |i| c.delete(i).expect("i in range")))
        .collect()
}

/// A fixed, irregular word of length `n`.
pub fn word(n: usize) -> BitSeq {
    BitSeq::new((0..n).map(|i| ((i * 7 + i / 3) % 5 < 2) as u8).collect()).expect("bits are 0/1")
}
