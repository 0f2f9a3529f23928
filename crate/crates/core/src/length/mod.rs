//! Membership in `T_n(l)` and `T*_n(l)`, the two decompositions of `X_n`
//! relative to a length, and enumeration of both semigroups.
//!
//! `T_n(l)` holds the maps that send every pair of points at distance `l` to
//! a pair at distance `l`. `T*_n(l)` additionally requires the converse: a
//! pair of images at distance `l` must come from a pair at distance `l`.

mod decompose;
mod enumerate;
pub mod lemmas;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::transform::{check_degree, Transformation};

pub use decompose::{classes, decompose, ClassDecomposition, Decomposition};
pub use enumerate::{enumerate, enumerate_naive, enumerate_with_workers, MAX_ELEMENTS};

/// Which semigroup of a given degree and length is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    /// All of `T_n`.
    #[serde(rename = "full")]
    Full,
    /// `T_n(l)`.
    #[serde(rename = "plain")]
    Preserving,
    /// `T*_n(l)`.
    #[serde(rename = "star")]
    Reflecting,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Full => "full",
            Variant::Preserving => "plain",
            Variant::Reflecting => "star",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Variant::Full),
            "plain" => Ok(Variant::Preserving),
            "star" => Ok(Variant::Reflecting),
            other => Err(Error::UnknownVariant(other.to_string())),
        }
    }
}

/// Validates `n >= 2` within capacity and `1 <= l <= n - 1`.
pub fn check_length(n: usize, l: usize) -> Result<()> {
    check_degree(n)?;
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, found: n });
    }
    if l == 0 || l >= n {
        return Err(Error::InvalidLength {
            degree: n,
            length: l,
        });
    }
    Ok(())
}

/// Names `T_n`, `T_n(l)` or `T*_n(l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SemigroupSpec {
    pub n: usize,
    pub l: usize,
    pub variant: Variant,
}

impl SemigroupSpec {
    pub fn new(n: usize, l: usize, variant: Variant) -> Result<Self> {
        check_length(n, l)?;
        Ok(Self { n, l, variant })
    }

    pub fn preserving(n: usize, l: usize) -> Result<Self> {
        Self::new(n, l, Variant::Preserving)
    }

    pub fn reflecting(n: usize, l: usize) -> Result<Self> {
        Self::new(n, l, Variant::Reflecting)
    }

    /// Membership test. Panics if `a` has the wrong degree.
    pub fn contains(&self, a: &Transformation) -> bool {
        assert_eq!(a.degree(), self.n, "degree mismatch");
        match self.variant {
            Variant::Full => true,
            Variant::Preserving => preserves_raw(a.raw(), self.l),
            Variant::Reflecting => reflects_raw(a.raw(), self.l),
        }
    }

    /// `T_n`, `T_n(l)` or `T*_n(l)`.
    pub fn label(&self) -> String {
        match self.variant {
            Variant::Full => format!("T_{}", self.n),
            Variant::Preserving => format!("T_{}({})", self.n, self.l),
            Variant::Reflecting => format!("T*_{}({})", self.n, self.l),
        }
    }

    pub fn cache_file_name(&self) -> String {
        format!("T_{}_{}_{}.txt", self.n, self.l, self.variant.name())
    }
}

impl fmt::Display for SemigroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

pub(crate) fn preserves_raw(raw: &[u8], l: usize) -> bool {
    let l8 = l as u8;
    raw.iter()
        .zip(&raw[l..])
        .all(|(&a, &b)| a.abs_diff(b) == l8)
}

pub(crate) fn reflects_raw(raw: &[u8], l: usize) -> bool {
    if !preserves_raw(raw, l) {
        return false;
    }
    let l8 = l as u8;
    let n = raw.len();
    for x in 0..n {
        for y in x + 1..n {
            if raw[x].abs_diff(raw[y]) == l8 && y - x != l {
                return false;
            }
        }
    }
    true
}

fn check_against(a: &Transformation, l: usize) -> Result<()> {
    check_length(a.degree(), l)
}

/// True iff every pair at distance `l` is sent to a pair at distance `l`.
pub fn preserves_length(a: &Transformation, l: usize) -> Result<bool> {
    check_against(a, l)?;
    Ok(preserves_raw(a.raw(), l))
}

/// True iff `|x - y| = l ⇔ |x·a - y·a| = l` for all points.
pub fn reflects_length(a: &Transformation, l: usize) -> Result<bool> {
    check_against(a, l)?;
    Ok(reflects_raw(a.raw(), l))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// `|x - y| = l` but the images are not at distance `l`.
    Broken,
    /// The images are at distance `l` but `|x - y| ≠ l`.
    Unlicensed,
}

/// A pair of points witnessing non-membership. Points and images are 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LengthViolation {
    pub x: usize,
    pub y: usize,
    pub x_image: usize,
    pub y_image: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for LengthViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::Broken => "distance not preserved",
            ViolationKind::Unlicensed => "image distance not reflected",
        };
        write!(
            f,
            "points ({}, {}) map to ({}, {}): {what}",
            self.x, self.y, self.x_image, self.y_image
        )
    }
}

/// First pair `x < y` that keeps `a` out of the named semigroup, scanning
/// point gaps in increasing order and then `x` in increasing order.
pub fn first_violation(
    a: &Transformation,
    spec: &SemigroupSpec,
) -> Result<Option<LengthViolation>> {
    if a.degree() != spec.n {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: spec.n,
        });
    }
    let raw = a.raw();
    let n = spec.n;
    let l = spec.l;
    let gaps: Vec<usize> = match spec.variant {
        Variant::Full => return Ok(None),
        Variant::Preserving => vec![l],
        Variant::Reflecting => (1..n).collect(),
    };
    for gap in gaps {
        for x in 0..n - gap {
            let y = x + gap;
            let image_gap = raw[x].abs_diff(raw[y]) as usize;
            let kind = if gap == l && image_gap != l {
                ViolationKind::Broken
            } else if gap != l && image_gap == l {
                ViolationKind::Unlicensed
            } else {
                continue;
            };
            return Ok(Some(LengthViolation {
                x: x + 1,
                y: y + 1,
                x_image: raw[x] as usize + 1,
                y_image: raw[y] as usize + 1,
                kind,
            }));
        }
    }
    Ok(None)
}
