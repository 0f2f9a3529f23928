use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::{SemigroupSpec, Variant};
use crate::algebra::ElementSet;
use crate::error::{Error, Result};
use crate::parallel::run_with_workers;
use crate::transform::{Transformation, MAX_DEGREE};

/// Upper bound on the size of any enumerated set.
pub const MAX_ELEMENTS: usize = 16_000_000;

/// Largest degree the `n^n` filter accepts.
const NAIVE_MAX_DEGREE: usize = 8;

/// Depth-first search over image tables in point order. Once `x > l`, the
/// image of `x` must sit at distance `l` from the image of `x - l`, which
/// leaves at most two candidates. For `T*_n(l)` a per-value position index
/// rejects any new image pair at distance `l` that does not come from the
/// partner `x - l`.
struct Search<'a> {
    n: usize,
    l: usize,
    variant: Variant,
    raw: [u8; MAX_DEGREE],
    // positions currently mapped to each value
    by_value: [u16; MAX_DEGREE],
    out: Vec<Transformation>,
    produced: &'a AtomicUsize,
}

impl<'a> Search<'a> {
    fn new(spec: &SemigroupSpec, produced: &'a AtomicUsize) -> Self {
        Self {
            n: spec.n,
            l: spec.l,
            variant: spec.variant,
            raw: [0; MAX_DEGREE],
            by_value: [0; MAX_DEGREE],
            out: Vec::new(),
            produced,
        }
    }

    fn subtree(mut self, first: u8) -> Result<Vec<Transformation>> {
        self.raw[0] = first;
        self.by_value[first as usize] = 1;
        self.place(1)?;
        Ok(self.out)
    }

    fn licensed(&self, x: usize, v: usize) -> bool {
        let partner = if x >= self.l { 1u16 << (x - self.l) } else { 0 };
        let mut near = 0u16;
        if v >= self.l {
            near |= self.by_value[v - self.l];
        }
        if v + self.l < self.n {
            near |= self.by_value[v + self.l];
        }
        near & !partner == 0
    }

    fn try_value(&mut self, x: usize, v: usize) -> Result<()> {
        if self.variant == Variant::Reflecting && !self.licensed(x, v) {
            return Ok(());
        }
        self.raw[x] = v as u8;
        self.by_value[v] |= 1 << x;
        let res = self.place(x + 1);
        self.by_value[v] &= !(1 << x);
        res
    }

    fn place(&mut self, x: usize) -> Result<()> {
        if x == self.n {
            if self.produced.fetch_add(1, Ordering::Relaxed) >= MAX_ELEMENTS {
                return Err(Error::TooManyElements(MAX_ELEMENTS));
            }
            self.out.push(Transformation::from_raw(&self.raw[..self.n]));
            return Ok(());
        }
        if self.variant != Variant::Full && x >= self.l {
            let p = self.raw[x - self.l] as usize;
            if p >= self.l {
                self.try_value(x, p - self.l)?;
            }
            if p + self.l < self.n {
                self.try_value(x, p + self.l)?;
            }
        } else {
            for v in 0..self.n {
                self.try_value(x, v)?;
            }
        }
        Ok(())
    }
}

fn check_full_budget(spec: &SemigroupSpec) -> Result<()> {
    if spec.variant == Variant::Full {
        let total = (spec.n as u128).pow(spec.n as u32);
        if total > MAX_ELEMENTS as u128 {
            return Err(Error::TooManyElements(MAX_ELEMENTS));
        }
    }
    Ok(())
}

/// The elements of the named semigroup in canonical order.
pub fn enumerate(spec: &SemigroupSpec) -> Result<ElementSet> {
    check_full_budget(spec)?;
    let produced = AtomicUsize::new(0);
    let mut elements = Vec::new();
    for first in 0..spec.n as u8 {
        elements.extend(Search::new(spec, &produced).subtree(first)?);
    }
    Ok(ElementSet::from_sorted(spec.n, elements))
}

/// [`enumerate`] with the search tree split by the image of the point 1
/// across `workers` threads (`0` uses the global pool). The subtrees are
/// concatenated in order, so the result is identical to the sequential one.
pub fn enumerate_with_workers(spec: &SemigroupSpec, workers: usize) -> Result<ElementSet> {
    check_full_budget(spec)?;
    let produced = AtomicUsize::new(0);
    let parts = run_with_workers(workers, || {
        (0..spec.n as u8)
            .into_par_iter()
            .map(|first| Search::new(spec, &produced).subtree(first))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(ElementSet::from_sorted(spec.n, parts.concat()))
}

/// Filters all `n^n` maps through the membership predicate. Reference
/// implementation for [`enumerate`]; limited to `n <= 8`.
pub fn enumerate_naive(spec: &SemigroupSpec) -> Result<ElementSet> {
    let n = spec.n;
    if n > NAIVE_MAX_DEGREE {
        return Err(Error::Capacity(n));
    }
    let mut raw = vec![0u8; n];
    let mut elements = Vec::new();
    'outer: loop {
        let t = Transformation::from_raw(&raw);
        if spec.contains(&t) {
            elements.push(t);
        }
        // odometer, last point fastest, keeps lexicographic order
        for x in (0..n).rev() {
            raw[x] += 1;
            if (raw[x] as usize) < n {
                continue 'outer;
            }
            raw[x] = 0;
        }
        break;
    }
    Ok(ElementSet::from_sorted(n, elements))
}
