//! Exact subtree polynomials and mean subtree order of free trees.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function over immutable values: trees, integer polynomials and reduced
//! rationals. IO, file formats and threading live in the `mso` companion
//! crate.
//!
//! Module map:
//!
//! * [`tree`]: validated free trees over dense ids `0..n`.
//! * [`canon`]: isomorphism-invariant codes (AHU on the center).
//! * [`structure`]: center, stem, twigs, limbs and the core of a tree.
//! * [`poly`]: global and local subtree polynomials, means, the gluing
//!   composition and a brute-force oracle.
//! * [`families`]: named tree families and their closed-form counts.
//! * [`enumeration`]: isomorphism-free streams of trees.
//! * [`lab`]: optimal-tree searches and verification suites.
#![no_std]

extern crate alloc;

mod error;

pub mod canon;
pub mod enumeration;
pub mod exact;
pub mod families;
pub mod lab;
pub mod poly;
pub mod structure;
pub mod tree;

pub use canon::{canonical_code, CanonicalCode};
pub use error::{Error, Result};
pub use exact::Rational;
pub use families::{ClosedFormCounts, FamilySpec};
pub use poly::{SubtreePolynomial, SubtreeTotals};
pub use structure::{Classification, LimbProfile};
pub use tree::Tree;
