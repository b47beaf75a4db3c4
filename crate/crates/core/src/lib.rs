//! Insertion/deletion codes and the Weyl-group combinatorics behind them.
//!
//! Bit sequences ([`BitSeq`]) are the common currency. [`weylb`] models
//! `W(B_n)` and its minuscule elements, [`weyla`] the type `A_{v,h}` lattice
//! paths with their insertion operators, [`codes`] the Levenshtein, path and
//! BAD codes with decoders, [`genins`] the abstract insertion/deletion axioms,
//! and [`counting`] the closed-form enumerations.
//!
//! ```
//! use idweyl_core::{codes::vt_decode_deletion, BitSeq};
//!
//! let received: BitSeq = "10".parse().unwrap();
//! assert_eq!(vt_decode_deletion(&received, 3, 0).unwrap().to_string(), "101");
//! ```

pub mod bitseq;
pub mod codes;
pub mod counting;
pub mod error;
pub mod genins;
pub mod theorems;
pub mod weyla;
pub mod weylb;

pub use bitseq::{BitSeq, SphereFamilyId};
pub use codes::{CodeSpec, EnumerationLimit, PerfectCertificate};
pub use counting::{ArithTables, BigJson, IntPoly};
pub use error::{Error, Result};
pub use genins::{DeletionFamily, FamilyDescriptor, InsertionFamily};
pub use num_bigint::{BigInt, BigUint};
pub use theorems::{Theorem, TheoremReport};
pub use weyla::{BaiPattern, LatticePath, MinusculeA};
pub use weylb::{HalfVec, MinusculeB, RootSystemB, SignedPerm};
