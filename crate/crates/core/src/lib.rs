//! Semigroups of transformations of a finite chain that preserve, or
//! preserve and reflect, one fixed distance between points.
//!
//! Points are `1..=n`. Maps act on the right and compose left to right:
//! `x(αβ) = (xα)β`.
//!
//! ```
//! use lenpres_core::{length::enumerate, SemigroupSpec};
//!
//! let t31 = enumerate(&SemigroupSpec::preserving(3, 1)?)?;
//! assert_eq!(t31.len(), 6);
//! # Ok::<(), lenpres_core::Error>(())
//! ```

pub mod algebra;
pub mod error;
pub mod io;
pub mod length;
mod parallel;
pub mod transform;
pub mod verify;
pub mod witnesses;

pub use algebra::{ElementSet, RegularityReport};
pub use error::{Error, Result};
pub use length::{Decomposition, SemigroupSpec, Variant};
pub use transform::{Transformation, MAX_DEGREE};
pub use verify::{verify_all, ClaimResult, VerifyOptions};
pub use witnesses::Derivation;
