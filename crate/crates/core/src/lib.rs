//! Fractional Dehn twist coefficients of braids and their behaviour under
//! fully ramified branched covers of the disk open book.
//!
//! - [`braid`]: braid words, permutations, the full twist.
//! - [`dehornoy`]: handle reduction, σ-positivity, the Dehornoy order.
//! - [`fdtc`]: certified FDTC intervals and exact values for periodic braids.
//! - [`cover`]: monodromy representations, full ramification, Riemann–Hurwitz.
//! - [`transfer`]: the division formula `c(φ̃, C̃) = c(φ, L, C) / d(π, C̃)` with
//!   its hypothesis guards, and right-veering propagation.
//! - [`classifier`]: rules turning FDTC bounds into topological and contact
//!   conclusions, each with a hypothesis checklist.
//! - [`report`]: the pipelines behind the `fdtc` command line tool.
//!
//! ```
//! use fdtc::{BraidWord, FdtcEngine, Rational};
//!
//! let half_twist = BraidWord::parse("s1", 2).unwrap();
//! let value = FdtcEngine::default().fdtc(&half_twist, 12, 24).unwrap();
//! assert_eq!(value.exact_value(), Some(Rational::new(1, 2)));
//! ```

pub mod braid;
pub mod classifier;
pub mod cover;
pub mod dehornoy;
pub mod fdtc;
pub mod perm;
pub mod rational;
pub mod report;
pub mod transfer;

pub use braid::{full_twist, BraidError, BraidWord, Letter};
pub use classifier::{Assertion, AssertionKind, Verdict, VerdictStatus};
pub use cover::{standard_cyclic, CoverGeometry, CoverSpec, MonodromyRep};
pub use dehornoy::{HandleReducer, SigmaClass};
pub use fdtc::{FdtcEngine, FdtcValue, PeriodicCertificate, RightVeeringStatus};
pub use perm::Permutation;
pub use rational::Rational;
pub use transfer::{lift_fdtc, TransferInput, TransferResult};
