//! Exact arithmetic for complete residue systems and roots of unity.
//!
//! A set of `h` integers is a *complete residue system* mod `h` when its
//! canonical residues hit every class in `{0, ..., h-1}` exactly once. This
//! crate provides:
//!
//! - [`modular`]: checked `i64` gcd/extended-gcd machinery, canonical
//!   residues, and congruence predicates;
//! - [`crs`]: the candidate type, the membership test, and the scaling,
//!   affine, and multiple-shift transformations whose effect on membership
//!   is governed by coprimality;
//! - [`cyclo`]: roots of unity as exact reduced turn fractions, and set
//!   algebra (exponent sets, elementwise powers) over them;
//! - [`branches`]: branches of the complex p-th root, the constructive
//!   solver for branch assignments that map the h-th roots of unity onto
//!   themselves, and an exhaustive brute-force search that double-checks it.
//!
//! Everything is exact: points on the unit circle are reduced fractions of
//! a full turn, and all integer arithmetic is overflow-checked. Floating
//! point appears only in [`cyclo::CyclotomicPoint::complex_value`], provided
//! for numeric cross-checks.
//!
//! All types are immutable values and all operations are pure functions, so
//! everything here is safe to use from any number of threads at once.
//!
//! ```
//! use crs_core::{apply_branches, solve_branch_vector, BranchOutcome, Modulus, RootSet};
//!
//! let h = Modulus::new(5)?;
//! match solve_branch_vector(h, 3)? {
//!     BranchOutcome::Solved(bv) => {
//!         assert_eq!(bv.indices(), [0, 1, 2, 0, 1]);
//!         assert_eq!(apply_branches(&bv)?, RootSet::omega(h));
//!     }
//!     BranchOutcome::NoSolution { .. } => unreachable!("gcd(5, 3) = 1"),
//! }
//! # Ok::<(), crs_core::Error>(())
//! ```

#![forbid(unsafe_code)]

pub mod branches;
pub mod crs;
pub mod cyclo;
pub mod error;
pub mod modular;

pub use branches::{
    apply_branches, branch_root, brute_force_search, rational_power_power_first,
    rational_power_root_first, solve_branch_vector, BranchOutcome, BranchSearchReport,
    BranchVector,
};
pub use crs::{CrsCandidate, ResidueProfile};
pub use cyclo::{CyclotomicPoint, RootSet};
pub use error::{Error, Result};
pub use modular::{canonical_residue, congruent, egcd, gcd, mod_inverse, Modulus};
