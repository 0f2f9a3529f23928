//! The element type shared by every semigroup in the crate.
//!
//! A [`Transformation`] is a total self-map of `X_n = {1, ..., n}`. Maps act
//! on the right and compose left to right, so `x·(ab) = (x·a)·b`. Points are
//! 1-indexed everywhere in the public API; storage is 0-indexed.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported degree. Enumeration cost grows like `n^n`.
pub const MAX_DEGREE: usize = 12;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Transformation {
    degree: u8,
    // 0-indexed images; entries past `degree` stay zero.
    map: [u8; MAX_DEGREE],
}

pub(crate) fn check_degree(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::DegreeTooSmall { min: 1, found: 0 });
    }
    if n > MAX_DEGREE {
        return Err(Error::Capacity(n));
    }
    Ok(())
}

impl Transformation {
    /// Builds `x ↦ images[x - 1]` from 1-indexed images.
    pub fn new(n: usize, images: &[usize]) -> Result<Self> {
        check_degree(n)?;
        if images.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: images.len(),
            });
        }
        let mut map = [0u8; MAX_DEGREE];
        for (x, &value) in images.iter().enumerate() {
            if value == 0 || value > n {
                return Err(Error::ImageOutOfRange {
                    point: x + 1,
                    value,
                    degree: n,
                });
            }
            map[x] = (value - 1) as u8;
        }
        Ok(Self {
            degree: n as u8,
            map,
        })
    }

    /// The identity on `X_n`.
    ///
    /// Panics if `n` is zero or above [`MAX_DEGREE`].
    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n), "degree {n} out of range");
        let mut map = [0u8; MAX_DEGREE];
        for (x, slot) in map.iter_mut().enumerate().take(n) {
            *slot = x as u8;
        }
        Self {
            degree: n as u8,
            map,
        }
    }

    /// The constant map onto `value` (1-indexed).
    pub fn constant(n: usize, value: usize) -> Result<Self> {
        Self::new(n, &vec![value; n])
    }

    /// Builds from 0-indexed images without validation.
    pub(crate) fn from_raw(raw: &[u8]) -> Self {
        debug_assert!(!raw.is_empty() && raw.len() <= MAX_DEGREE);
        debug_assert!(raw.iter().all(|&v| (v as usize) < raw.len()));
        let mut map = [0u8; MAX_DEGREE];
        map[..raw.len()].copy_from_slice(raw);
        Self {
            degree: raw.len() as u8,
            map,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    /// 0-indexed image table.
    pub(crate) fn raw(&self) -> &[u8] {
        &self.map[..self.degree as usize]
    }

    /// Image of the 1-indexed point `x`. Panics if `x` is outside `1..=n`.
    pub fn apply(&self, x: usize) -> usize {
        assert!(
            (1..=self.degree()).contains(&x),
            "point {x} outside 1..={}",
            self.degree
        );
        self.map[x - 1] as usize + 1
    }

    /// 1-indexed images in point order.
    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.raw().iter().map(|&v| v as usize + 1)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.images().collect()
    }

    /// Left-to-right product: the result sends `x` to `(x·self)·other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked [`compose`](Self::compose). Panics on mismatched degrees.
    #[inline]
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut map = [0u8; MAX_DEGREE];
        let n = self.degree as usize;
        for (out, &v) in map[..n].iter_mut().zip(&self.map[..n]) {
            *out = other.map[v as usize];
        }
        Self {
            degree: self.degree,
            map,
        }
    }

    /// Sorted distinct images.
    pub fn image_set(&self) -> BTreeSet<usize> {
        self.images().collect()
    }

    /// Bit `v` set iff the 0-indexed value `v` is an image.
    pub(crate) fn image_mask(&self) -> u16 {
        self.raw().iter().fold(0u16, |m, &v| m | (1 << v))
    }

    /// Bit `x` set iff `x·self = v` (both 0-indexed).
    pub(crate) fn preimage_mask(&self, v: u8) -> u16 {
        self.raw()
            .iter()
            .enumerate()
            .filter(|&(_, &w)| w == v)
            .fold(0u16, |m, (x, _)| m | (1 << x))
    }

    /// All `x` with `x·self = y`, possibly empty.
    pub fn preimage(&self, y: usize) -> Result<BTreeSet<usize>> {
        if !(1..=self.degree()).contains(&y) {
            return Err(Error::PointOutOfRange {
                point: y,
                degree: self.degree(),
            });
        }
        Ok(self
            .images()
            .enumerate()
            .filter(|&(_, v)| v == y)
            .map(|(x, _)| x + 1)
            .collect())
    }

    pub fn rank(&self) -> usize {
        self.image_mask().count_ones() as usize
    }

    pub fn is_bijective(&self) -> bool {
        self.rank() == self.degree()
    }

    pub fn is_idempotent(&self) -> bool {
        self.then(self) == *self
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_bijective() {
            return None;
        }
        let mut map = [0u8; MAX_DEGREE];
        for (x, &v) in self.raw().iter().enumerate() {
            map[v as usize] = x as u8;
        }
        Some(Self {
            degree: self.degree,
            map,
        })
    }

    /// Parses a line of whitespace-separated 1-indexed images and checks that
    /// it has exactly `n` entries.
    pub fn parse_with_degree(line: &str, n: usize) -> Result<Self> {
        let t: Self = line.parse()?;
        if t.degree() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: t.degree(),
            });
        }
        Ok(t)
    }
}

impl Ord for Transformation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.raw().cmp(other.raw())
    }
}

impl PartialOrd for Transformation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.images().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_string().replace(' ', ","))
    }
}

impl FromStr for Transformation {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let mut images = Vec::new();
        for token in line.split_whitespace() {
            let value: usize = token.parse().map_err(|_| Error::Parse {
                token: token.to_string(),
            })?;
            images.push(value);
        }
        if images.is_empty() {
            return Err(Error::EmptyLine);
        }
        Self::new(images.len(), &images)
    }
}

impl Serialize for Transformation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(images: &[usize]) -> Transformation {
        Transformation::new(images.len(), images).unwrap()
    }

    #[test]
    fn make_accepts_valid_tables() {
        let swap = t(&[2, 1]);
        assert_eq!(swap.apply(1), 2);
        assert_eq!(swap.apply(2), 1);
        assert_eq!(t(&[1, 2, 3]), Transformation::identity(3));
    }

    #[test]
    fn make_rejects_bad_tables() {
        assert_eq!(
            Transformation::new(3, &[1, 2, 4]),
            Err(Error::ImageOutOfRange {
                point: 3,
                value: 4,
                degree: 3
            })
        );
        assert!(matches!(
            Transformation::new(3, &[1, 2]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            Transformation::new(2, &[0, 1]),
            Err(Error::ImageOutOfRange { .. })
        ));
        assert_eq!(Transformation::new(13, &[1; 13]), Err(Error::Capacity(13)));
    }

    #[test]
    fn compose_examples() {
        let a = t(&[1, 1, 3, 3, 5, 5]);
        assert_eq!(a.compose(&a).unwrap(), a);
        let swap = t(&[2, 1]);
        assert_eq!(swap.then(&swap), t(&[1, 2]));
        let b = t(&[6, 5, 4, 5, 4, 3]);
        assert_eq!(Transformation::identity(6).then(&b), b);
        assert!(matches!(
            swap.compose(&b),
            Err(Error::DegreeMismatch { left: 2, right: 6 })
        ));
    }

    #[test]
    fn compose_is_left_to_right() {
        // x(ab) = (xa)b
        let a = t(&[2, 3, 1]);
        let b = t(&[1, 1, 2]);
        assert_eq!(a.then(&b), t(&[1, 2, 1]));
        assert_eq!(b.then(&a), t(&[2, 2, 3]));
    }

    #[test]
    fn identity_shape() {
        assert_eq!(Transformation::identity(2).to_vec(), vec![1, 2]);
        assert!(Transformation::identity(5).is_bijective());
        assert!(Transformation::identity(5).is_idempotent());
    }

    #[test]
    fn image_and_preimage() {
        let a = t(&[1, 1, 3, 3, 5, 5]);
        assert_eq!(a.image_set().into_iter().collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(
            t(&[6, 5, 4, 5, 4, 3])
                .image_set()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![3, 4, 5, 6]
        );
        assert_eq!(
            Transformation::identity(4).image_set().len(),
            4,
            "identity is onto"
        );
        assert_eq!(
            a.preimage(1).unwrap().into_iter().collect::<Vec<_>>(),
            vec![1, 2]
        );
        assert!(a.preimage(2).unwrap().is_empty());
        assert_eq!(
            Transformation::identity(4)
                .preimage(3)
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![3]
        );
        assert!(matches!(
            a.preimage(7),
            Err(Error::PointOutOfRange {
                point: 7,
                degree: 6
            })
        ));
    }

    #[test]
    fn inverse_of_permutation() {
        let p = t(&[3, 1, 2]);
        let q = p.inverse().unwrap();
        assert_eq!(p.then(&q), Transformation::identity(3));
        assert!(t(&[1, 1, 2]).inverse().is_none());
    }

    #[test]
    fn text_format() {
        let a: Transformation = "6 5 4 5 4 3".parse().unwrap();
        assert_eq!(a, t(&[6, 5, 4, 5, 4, 3]));
        assert_eq!(a.to_string(), "6 5 4 5 4 3");
        assert_eq!(
            "1 2".parse::<Transformation>().unwrap(),
            Transformation::identity(2)
        );
        assert_eq!(
            "1 x 3".parse::<Transformation>(),
            Err(Error::Parse { token: "x".into() })
        );
        assert!(matches!(
            "1 2 4".parse::<Transformation>(),
            Err(Error::ImageOutOfRange { .. })
        ));
        assert_eq!("  ".parse::<Transformation>(), Err(Error::EmptyLine));
        assert!(Transformation::parse_with_degree("1 2", 3).is_err());
    }

    #[test]
    fn ordering_is_lexicographic() {
        let mut v = vec![t(&[2, 1]), t(&[1, 2]), t(&[1, 1]), t(&[2, 2])];
        v.sort();
        assert_eq!(v, vec![t(&[1, 1]), t(&[1, 2]), t(&[2, 1]), t(&[2, 2])]);
    }

    fn arb_triple() -> impl Strategy<Value = (Transformation, Transformation, Transformation)> {
        (1usize..=8).prop_flat_map(|n| {
            let m = prop::collection::vec(1..=n, n);
            (m.clone(), m.clone(), m).prop_map(move |(a, b, c)| {
                (
                    Transformation::new(n, &a).unwrap(),
                    Transformation::new(n, &b).unwrap(),
                    Transformation::new(n, &c).unwrap(),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn compose_associative((a, b, c) in arb_triple()) {
            prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        }

        #[test]
        fn identity_is_neutral((a, _, _) in arb_triple()) {
            let id = Transformation::identity(a.degree());
            prop_assert_eq!(id.then(&a), a);
            prop_assert_eq!(a.then(&id), a);
        }

        #[test]
        fn product_image_within_right_factor((a, b, _) in arb_triple()) {
            prop_assert!(a.then(&b).image_set().is_subset(&b.image_set()));
        }

        #[test]
        fn preimage_matches_pointwise((a, _, _) in arb_triple()) {
            for y in 1..=a.degree() {
                let pre = a.preimage(y).unwrap();
                for x in 1..=a.degree() {
                    prop_assert_eq!(pre.contains(&x), a.apply(x) == y);
                }
            }
        }

        #[test]
        fn text_round_trip((a, _, _) in arb_triple()) {
            prop_assert_eq!(a.to_string().parse::<Transformation>().unwrap(), a);
        }
    }
}
