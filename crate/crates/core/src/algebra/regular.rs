use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use super::closure::check_closed;
use super::ElementSet;
use crate::error::Result;
use crate::length::SemigroupSpec;
use crate::parallel::run_with_workers;
use crate::transform::Transformation;

/// True iff `aβa = a`.
pub fn is_witness(a: &Transformation, beta: &Transformation) -> bool {
    a.degree() == beta.degree() && a.then(beta).then(a) == *a
}

/// Work done by a witness search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SearchStats {
    /// Carrier elements ruled out or accepted, either tested directly or
    /// skipped because they share a failing prefix with a tested candidate.
    pub elements_scanned: u64,
    /// Candidates tested against `aβa = a`.
    pub compositions: u64,
}

impl std::ops::AddAssign for SearchStats {
    fn add_assign(&mut self, rhs: Self) {
        self.elements_scanned += rhs.elements_scanned;
        self.compositions += rhs.compositions;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessSearch {
    pub witness: Option<Transformation>,
    pub stats: SearchStats,
}

impl WitnessSearch {
    /// No witness, and every element of `carrier` was accounted for.
    pub fn exhausted(&self, carrier: &ElementSet) -> bool {
        self.witness.is_none() && self.stats.elements_scanned == carrier.len() as u64
    }
}

/// For each point `u`, the 0-indexed values `β` may send `u` to.
/// `aβa = a` holds iff `uβ ∈ u·a⁻¹` for every image point `u` of `a`.
fn allowed_masks(a: &Transformation) -> Vec<u16> {
    let image = a.image_mask();
    (0..a.degree() as u8)
        .map(|u| {
            if image & (1 << u) != 0 {
                a.preimage_mask(u)
            } else {
                u16::MAX
            }
        })
        .collect()
}

fn first_failure(allowed: &[u16], beta: &[u8]) -> Option<usize> {
    beta.iter()
        .zip(allowed)
        .position(|(&v, &mask)| mask & (1 << v) == 0)
}

fn search_slice(a: &Transformation, candidates: &[Transformation]) -> (Option<usize>, SearchStats) {
    let allowed = allowed_masks(a);
    let mut stats = SearchStats::default();
    let mut idx = 0;
    while idx < candidates.len() {
        let beta = candidates[idx].raw();
        stats.compositions += 1;
        match first_failure(&allowed, beta) {
            None => {
                stats.elements_scanned += 1;
                return (Some(idx), stats);
            }
            Some(p) => {
                // Everything sharing beta[..=p] fails at p too; in canonical
                // order those elements are contiguous.
                let prefix = &beta[..=p];
                let rest = &candidates[idx + 1..];
                let same = rest.partition_point(|t| &t.raw()[..=p] == prefix);
                stats.elements_scanned += 1 + same as u64;
                idx += 1 + same;
            }
        }
    }
    (None, stats)
}

/// The canonically smallest `β ∈ carrier` with `aβa = a`.
///
/// Candidates are visited in canonical order; when a candidate fails at
/// point `p`, the block of candidates sharing its images on `1..=p` is
/// skipped in one step. `a` need not belong to `carrier`.
pub fn find_witness(a: &Transformation, carrier: &ElementSet) -> WitnessSearch {
    if a.degree() != carrier.degree() {
        return WitnessSearch {
            witness: None,
            stats: SearchStats::default(),
        };
    }
    let (found, stats) = search_slice(a, carrier.as_slice());
    let witness = found.map(|i| carrier.as_slice()[i]);
    debug_assert!(witness.map_or(true, |b| is_witness(a, &b)));
    WitnessSearch { witness, stats }
}

/// Plain linear scan with explicit composition. Reference for [`find_witness`].
pub fn find_witness_linear(a: &Transformation, carrier: &ElementSet) -> Option<Transformation> {
    carrier.iter().copied().find(|b| is_witness(a, b))
}

/// [`find_witness`] over `workers` contiguous chunks of the carrier; the
/// smallest witness across chunks wins, so the answer does not depend on
/// the number of workers.
pub fn find_witness_with_workers(
    a: &Transformation,
    carrier: &ElementSet,
    workers: usize,
) -> Option<Transformation> {
    if a.degree() != carrier.degree() || carrier.is_empty() {
        return None;
    }
    let chunks = workers.max(1);
    let size = carrier.len().div_ceil(chunks);
    run_with_workers(workers, || {
        carrier
            .as_slice()
            .par_chunks(size)
            .enumerate()
            .filter_map(|(c, chunk)| search_slice(a, chunk).0.map(|i| c * size + i))
            .min()
            .map(|i| carrier.as_slice()[i])
    })
}

/// Some witness of regularity of `a` relative to `carrier`, if one exists.
pub fn is_regular_element(a: &Transformation, carrier: &ElementSet) -> Option<Transformation> {
    find_witness(a, carrier).witness
}

/// What a report is about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Carrier {
    Spec(SemigroupSpec),
    Described { description: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementVerdict {
    pub element: Transformation,
    pub witness: Option<Transformation>,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ReportStats {
    pub elements_scanned: u64,
    pub compositions: u64,
    pub closure_generators: usize,
    pub closure_products: u64,
}

/// Per-element regularity verdicts for a composition-closed set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub carrier: Carrier,
    pub size: usize,
    pub regular: bool,
    pub verdicts: Vec<ElementVerdict>,
    pub stats: ReportStats,
}

impl RegularityReport {
    pub fn irregular_elements(&self) -> impl Iterator<Item = &Transformation> {
        self.verdicts
            .iter()
            .filter(|v| v.witness.is_none())
            .map(|v| &v.element)
    }

    pub fn witness_of(&self, a: &Transformation) -> Option<Transformation> {
        self.verdicts
            .binary_search_by(|v| v.element.cmp(a))
            .ok()
            .and_then(|i| self.verdicts[i].witness)
    }
}

struct Witnesses<'a>(&'a [ElementVerdict]);

impl Serialize for Witnesses<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        for v in self.0 {
            if let Some(w) = &v.witness {
                map.serialize_entry(&v.element.to_string(), &w.to_string())?;
            }
        }
        map.end()
    }
}

impl Serialize for RegularityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let irregular: Vec<&Transformation> = self.irregular_elements().collect();
        let mut s = serializer.serialize_struct("RegularityReport", 6)?;
        s.serialize_field("spec", &self.carrier)?;
        s.serialize_field("size", &self.size)?;
        s.serialize_field("regular", &self.regular)?;
        s.serialize_field("irregular_elements", &irregular)?;
        s.serialize_field("witnesses", &Witnesses(&self.verdicts))?;
        s.serialize_field("stats", &self.stats)?;
        s.end()
    }
}

/// Checks closure, then searches a witness for every element.
/// Fails with [`Error::NotClosed`](crate::Error::NotClosed) when some product
/// leaves the set.
pub fn is_regular_semigroup(set: &ElementSet, carrier: Carrier) -> Result<RegularityReport> {
    let verdicts = |set: &ElementSet| {
        set.iter()
            .map(|a| verdict(a, set))
            .collect::<Vec<ElementVerdict>>()
    };
    build_report(set, carrier, verdicts)
}

/// [`is_regular_semigroup`] with elements spread over `workers` threads.
/// The report is identical for every worker count.
pub fn is_regular_semigroup_with_workers(
    set: &ElementSet,
    carrier: Carrier,
    workers: usize,
) -> Result<RegularityReport> {
    run_with_workers(workers, || {
        build_report(set, carrier, |set| {
            set.as_slice()
                .par_iter()
                .map(|a| verdict(a, set))
                .collect::<Vec<ElementVerdict>>()
        })
    })
}

fn verdict(a: &Transformation, set: &ElementSet) -> ElementVerdict {
    let search = find_witness(a, set);
    ElementVerdict {
        element: *a,
        witness: search.witness,
        stats: search.stats,
    }
}

fn build_report<F>(set: &ElementSet, carrier: Carrier, verdicts: F) -> Result<RegularityReport>
where
    F: FnOnce(&ElementSet) -> Vec<ElementVerdict>,
{
    let closed = check_closed(set)?;
    let verdicts = verdicts(set);
    let mut search = SearchStats::default();
    for v in &verdicts {
        search += v.stats;
        if let Some(w) = &v.witness {
            assert!(is_witness(&v.element, w), "reported witness fails aβa = a");
        }
    }
    Ok(RegularityReport {
        carrier,
        size: set.len(),
        regular: verdicts.iter().all(|v| v.witness.is_some()),
        verdicts,
        stats: ReportStats {
            elements_scanned: search.elements_scanned,
            compositions: search.compositions,
            closure_generators: closed.generators,
            closure_products: closed.products,
        },
    })
}
