//! Structural facts about elements of `T*_n(l)` (and of `T_n(n/2)`), as
//! executable checks. Each check takes an element already known to be in the
//! relevant semigroup and returns a description of the first failure.

use std::collections::BTreeSet;

use serde::Serialize;

use super::decompose::ClassDecomposition;
use crate::transform::Transformation;

/// Facts about `α ∈ T*_n(l)` when `2l <= n`, phrased over the classes
/// `A_1..A_l` with multiplicities `m_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassLemma {
    /// `x < y` and `xα = yα` imply `y = x + 2l`.
    FiberGap,
    /// Each class maps into a single class.
    ClassImage,
    /// Points of distinct classes have distinct images.
    ClassSeparation,
    /// A class with `m_i >= 3` maps to a strictly monotone progression of step `l`.
    Monotone,
    /// A class with `m_i >= 3` keeps its size under `α`.
    SizePreserved,
    /// `m_i < m_j`, `m_j >= 3` imply `A_i ∩ A_jα = ∅` and `A_j ∩ A_iα = ∅`.
    MultiplicitySeparation,
    /// The classes of each multiplicity `m >= 3` are permuted by `α`.
    Permutation,
    /// A missing image point is an endpoint of a class with `m_j = 2`, and
    /// the other endpoint and the midpoint are images.
    MissingPoints,
}

impl ClassLemma {
    pub const ALL: [ClassLemma; 8] = [
        ClassLemma::FiberGap,
        ClassLemma::ClassImage,
        ClassLemma::ClassSeparation,
        ClassLemma::Monotone,
        ClassLemma::SizePreserved,
        ClassLemma::MultiplicitySeparation,
        ClassLemma::Permutation,
        ClassLemma::MissingPoints,
    ];

    /// Whether the hypothesis can hold for some class of this decomposition.
    pub fn applies(self, classes: &ClassDecomposition) -> bool {
        let long = classes.multiplicity(1) >= 3;
        match self {
            ClassLemma::Monotone | ClassLemma::SizePreserved | ClassLemma::Permutation => long,
            ClassLemma::MultiplicitySeparation => {
                long && classes
                    .multiplicities()
                    .iter()
                    .any(|&m| m < classes.multiplicity(1))
            }
            _ => true,
        }
    }

    pub fn check(self, a: &Transformation, classes: &ClassDecomposition) -> Result<(), String> {
        match self {
            ClassLemma::FiberGap => fiber_gap(a, classes.length()),
            ClassLemma::ClassImage => class_image(a, classes),
            ClassLemma::ClassSeparation => class_separation(a, classes),
            ClassLemma::Monotone => monotone(a, classes),
            ClassLemma::SizePreserved => size_preserved(a, classes),
            ClassLemma::MultiplicitySeparation => multiplicity_separation(a, classes),
            ClassLemma::Permutation => permutation(a, classes),
            ClassLemma::MissingPoints => missing_points(a, classes),
        }
    }
}

fn image_of(a: &Transformation, points: impl Iterator<Item = usize>) -> BTreeSet<usize> {
    points.map(|x| a.apply(x)).collect()
}

fn fiber_gap(a: &Transformation, l: usize) -> Result<(), String> {
    let n = a.degree();
    for x in 1..=n {
        for y in x + 1..=n {
            if a.apply(x) == a.apply(y) && y != x + 2 * l {
                return Err(format!("{x} and {y} share image {}", a.apply(x)));
            }
        }
    }
    Ok(())
}

fn class_image(a: &Transformation, c: &ClassDecomposition) -> Result<(), String> {
    for i in 1..=c.count() {
        let targets: BTreeSet<usize> = c.members(i).map(|x| c.class_of(a.apply(x))).collect();
        if targets.len() != 1 {
            return Err(format!("A_{i} meets classes {targets:?}"));
        }
    }
    Ok(())
}

fn class_separation(a: &Transformation, c: &ClassDecomposition) -> Result<(), String> {
    for i in 1..=c.count() {
        for j in i + 1..=c.count() {
            let common: Vec<usize> = image_of(a, c.members(i))
                .intersection(&image_of(a, c.members(j)))
                .copied()
                .collect();
            if !common.is_empty() {
                return Err(format!("A_{i} and A_{j} share images {common:?}"));
            }
        }
    }
    Ok(())
}

fn monotone(a: &Transformation, c: &ClassDecomposition) -> Result<(), String> {
    let l = c.length() as isize;
    for i in 1..=c.count() {
        if c.multiplicity(i) < 3 {
            continue;
        }
        let images: Vec<isize> = c.members(i).map(|x| a.apply(x) as isize).collect();
        let up = images.windows(2).all(|w| w[1] - w[0] == l);
        let down = images.windows(2).all(|w| w[0] - w[1] == l);
        if !up && !down {
            return Err(format!(
                "A_{i} images {images:?} are not a progression of step {l}"
            ));
        }
    }
    Ok(())
}

fn size_preserved(a: &Transformation, c: &ClassDecomposition) -> Result<(), String> {
    for i in 1..=c.count() {
        let m = c.multiplicity(i);
        if m >= 3 && image_of(a, c.members(i)).len() != m + 1 {
            return Err(format!("A_{i} collapses under the map"));
        }
    }
    Ok(())
}

fn multiplicity_separation(a: &Transformation, c: &ClassDecomposition) -> Result<(), String> {
    for j in 1..=c.count() {
        if c.multiplicity(j) < 3 {
            continue;
        }
        for i in 1..=c.count() {
            if c.multiplicity(i) >= c.multiplicity(j) {
                continue;
            }
            let ai: BTreeSet<usize> = c.members(i).collect();
            let aj: BTreeSet<usize> = c.members(j).collect();
            if !ai.is_disjoint(&image_of(a, c.members(j))) {
                return Err(format!("A_{i} meets the image of A_{j}"));
            }
            if !aj.is_disjoint(&image_of(a, c.members(i))) {
                return Err(format!("A_{j} meets the image of A_{i}"));
            }
        }
    }
    Ok(())
}

fn permutation(a: &Transformation, c: &ClassDecomposition) -> Result<(), String> {
    let mut seen = BTreeSet::new();
    for &m in c.multiplicities() {
        if m < 3 || !seen.insert(m) {
            continue;
        }
        let group = c.with_multiplicity(m);
        let mut targets = BTreeSet::new();
        for &j in &group {
            let img = image_of(a, c.members(j));
            let hit = group
                .iter()
                .copied()
                .find(|&k| c.members(k).collect::<BTreeSet<_>>() == img);
            match hit {
                Some(k) => {
                    targets.insert(k);
                }
                None => return Err(format!("image of A_{j} is not a class of multiplicity {m}")),
            }
        }
        if targets.len() != group.len() {
            return Err(format!("classes of multiplicity {m} are not permuted"));
        }
    }
    Ok(())
}

fn missing_points(a: &Transformation, c: &ClassDecomposition) -> Result<(), String> {
    let n = a.degree();
    let l = c.length();
    let image = a.image_set();
    if image.len() == n {
        return Ok(());
    }
    for j in c.with_multiplicity(2) {
        if !image.contains(&(j + l)) {
            return Err(format!("midpoint {} of A_{j} is not an image", j + l));
        }
    }
    for u in (1..=n).filter(|u| !image.contains(u)) {
        let explained = c.with_multiplicity(2).into_iter().any(|j| {
            (u == j && image.contains(&(j + 2 * l))) || (u == j + 2 * l && image.contains(&j))
        });
        if !explained {
            return Err(format!(
                "missing point {u} is not an endpoint of a class with m = 2"
            ));
        }
    }
    Ok(())
}

/// Structure of `α ∈ T*_n(l)` when `2l > n`: the unpartnered middle maps into
/// itself, each partner pair maps onto an oriented partner pair, and distinct
/// pairs have disjoint images.
pub fn check_pair_middle(a: &Transformation, l: usize) -> Result<(), String> {
    let n = a.degree();
    let middle = n - l + 1..=l;
    for x in middle.clone() {
        if !middle.contains(&a.apply(x)) {
            return Err(format!("middle point {x} leaves the middle"));
        }
    }
    let mut used = BTreeSet::new();
    for x in 1..=n - l {
        let (p, q) = (a.apply(x), a.apply(x + l));
        let lo = p.min(q);
        if lo > n - l || p.max(q) != lo + l {
            return Err(format!("pair ({x}, {}) maps to ({p}, {q})", x + l));
        }
        if !used.insert(lo) {
            return Err(format!("pair ({x}, {}) reuses image pair {lo}", x + l));
        }
    }
    Ok(())
}

/// Structure of `α ∈ T_{2l}(l)`: each pair `(x, x + l)` maps to `(i, l + i)`
/// or `(l + i, i)` with `1 <= i <= l`.
pub fn check_half_pairs(a: &Transformation, l: usize) -> Result<(), String> {
    for x in 1..=l {
        let (p, q) = (a.apply(x), a.apply(x + l));
        let lo = p.min(q);
        if lo > l || p.max(q) != lo + l {
            return Err(format!("pair ({x}, {}) maps to ({p}, {q})", x + l));
        }
    }
    Ok(())
}
