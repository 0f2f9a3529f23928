use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::check_length;
use crate::error::{Error, Result};

/// How `X_n` splits relative to the length `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    /// `2l >= n`: partner pairs `(x, x + l)` for `x = 1..n-l`, and the points
    /// `n-l+1..l` that have no partner at distance `l` (empty when `2l = n`).
    PairMiddle {
        pairs: Vec<(usize, usize)>,
        middle: Vec<usize>,
    },
    /// `2l < n`: arithmetic progressions with step `l`.
    Classes(ClassDecomposition),
}

/// The classes `A_i = {i, i+l, ..., i + m_i·l}` for `i = 1..l`, defined when
/// `2l <= n`. Each `m_i` is the largest integer with `i + m_i·l <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDecomposition {
    n: usize,
    l: usize,
    multiplicities: Vec<usize>,
}

impl ClassDecomposition {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> usize {
        self.l
    }

    /// Number of classes, equal to `l`.
    pub fn count(&self) -> usize {
        self.l
    }

    /// `m_i` for the 1-indexed class `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.multiplicities[i - 1]
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Members of `A_i` in increasing order.
    pub fn members(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let l = self.l;
        (0..=self.multiplicity(i)).map(move |k| i + k * l)
    }

    /// The class index `i` with `x ∈ A_i`.
    pub fn class_of(&self, x: usize) -> usize {
        (x - 1) % self.l + 1
    }

    /// Class indices with multiplicity exactly `m`, ascending.
    pub fn with_multiplicity(&self, m: usize) -> Vec<usize> {
        (1..=self.l)
            .filter(|&i| self.multiplicity(i) == m)
            .collect()
    }
}

/// Class decomposition for `2l <= n`.
pub fn classes(n: usize, l: usize) -> Result<ClassDecomposition> {
    check_length(n, l)?;
    if 2 * l > n {
        return Err(Error::Precondition(format!(
            "class decomposition needs 2l <= n (n = {n}, l = {l})"
        )));
    }
    let multiplicities = (1..=l).map(|i| (n - i) / l).collect();
    Ok(ClassDecomposition {
        n,
        l,
        multiplicities,
    })
}

/// The regime-appropriate decomposition. The boundary `2l = n` is reported as
/// pairs with an empty middle.
pub fn decompose(n: usize, l: usize) -> Result<Decomposition> {
    check_length(n, l)?;
    if 2 * l >= n {
        Ok(Decomposition::PairMiddle {
            pairs: (1..=n - l).map(|x| (x, x + l)).collect(),
            middle: (n - l + 1..=l).collect(),
        })
    } else {
        classes(n, l).map(Decomposition::Classes)
    }
}

#[derive(Serialize)]
struct ClassView {
    index: usize,
    members: Vec<usize>,
    multiplicity: usize,
}

impl Serialize for ClassDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let views: Vec<ClassView> = (1..=self.l)
            .map(|i| ClassView {
                index: i,
                members: self.members(i).collect(),
                multiplicity: self.multiplicity(i),
            })
            .collect();
        views.serialize(serializer)
    }
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Decomposition::PairMiddle { pairs, middle } => {
                let mut s = serializer.serialize_struct("Decomposition", 3)?;
                s.serialize_field("regime", "pair-middle")?;
                s.serialize_field("pairs", pairs)?;
                s.serialize_field("middle", middle)?;
                s.end()
            }
            Decomposition::Classes(classes) => {
                let mut s = serializer.serialize_struct("Decomposition", 2)?;
                s.serialize_field("regime", "classes")?;
                s.serialize_field("classes", classes)?;
                s.end()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_length_pairs_and_middle() {
        assert_eq!(
            decompose(5, 3).unwrap(),
            Decomposition::PairMiddle {
                pairs: vec![(1, 4), (2, 5)],
                middle: vec![3],
            }
        );
        assert_eq!(
            decompose(4, 2).unwrap(),
            Decomposition::PairMiddle {
                pairs: vec![(1, 3), (2, 4)],
                middle: vec![],
            }
        );
    }

    #[test]
    fn small_length_classes() {
        let Decomposition::Classes(c) = decompose(7, 2).unwrap() else {
            panic!("expected classes");
        };
        assert_eq!(c.members(1).collect::<Vec<_>>(), vec![1, 3, 5, 7]);
        assert_eq!(c.members(2).collect::<Vec<_>>(), vec![2, 4, 6]);
        assert_eq!(c.multiplicities(), &[3, 2]);
        assert_eq!(c.class_of(6), 2);
        assert_eq!(c.with_multiplicity(3), vec![1]);
    }

    #[test]
    fn classes_partition_and_are_monotone() {
        for n in 2..=12 {
            for l in 1..=n / 2 {
                let c = classes(n, l).unwrap();
                let mut seen = vec![false; n + 1];
                for i in 1..=l {
                    assert_eq!(c.members(i).count(), c.multiplicity(i) + 1);
                    for x in c.members(i) {
                        assert!(!seen[x]);
                        seen[x] = true;
                        assert_eq!(c.class_of(x), i);
                    }
                }
                assert!(seen[1..].iter().all(|&s| s));
                assert!(c.multiplicities().windows(2).all(|w| w[0] >= w[1]));
                assert!(c.multiplicities().iter().all(|&m| m >= 1));
            }
        }
    }

    #[test]
    fn middle_points_have_no_partner() {
        for n in 2..=12 {
            for l in 1..n {
                if let Decomposition::PairMiddle { pairs, middle } = decompose(n, l).unwrap() {
                    assert!(2 * l >= n);
                    assert_eq!(middle.is_empty(), 2 * l == n);
                    for &x in &middle {
                        assert!((1..=n).all(|y| x.abs_diff(y) != l));
                    }
                    assert_eq!(pairs.len() * 2 + middle.len(), n);
                }
            }
        }
    }

    #[test]
    fn half_length_views_coincide() {
        // At 2l = n both views describe the same partner pairs.
        for l in 1..=6 {
            let n = 2 * l;
            let Decomposition::PairMiddle { pairs, .. } = decompose(n, l).unwrap() else {
                panic!("expected pairs");
            };
            let c = classes(n, l).unwrap();
            assert!(c.multiplicities().iter().all(|&m| m == 1));
            let from_classes: Vec<(usize, usize)> = (1..=l)
                .map(|i| {
                    let m: Vec<usize> = c.members(i).collect();
                    (m[0], m[1])
                })
                .collect();
            assert_eq!(pairs, from_classes);
        }
    }

    #[test]
    fn classes_reject_large_length() {
        assert!(classes(5, 3).is_err());
    }
}
