//! Replays every claim about `T_n(l)` and `T*_n(l)` against exhaustive
//! enumeration for all `2 <= n <= max_n`, `1 <= l < n`.

mod data;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::rc::Rc;
use std::time::Instant;

use serde::Serialize;

use crate::algebra::{
    check_closed, closure, find_witness, is_regular_semigroup_with_workers, is_witness, Carrier,
    ElementSet, RegularityReport,
};
use crate::error::{Error, Result};
use crate::io::load_or_enumerate;
use crate::length::lemmas::{check_half_pairs, check_pair_middle, ClassLemma};
use crate::length::{classes, SemigroupSpec};
use crate::transform::Transformation;
use crate::witnesses::{
    counterexample_t1, counterexample_tl, strictness_witness, witness_half, witness_star_large,
    witness_star_small, Derivation,
};

pub use data::{closing_examples, listed_generators};

/// Default upper degree for [`verify_all`].
pub const DEFAULT_MAX_N: usize = 7;
/// Largest degree accepted, and only with `allow_large`.
pub const LARGE_MAX_N: usize = 8;

/// Whether `T_n(l)` is regular according to the classification.
pub fn predicted_regular(n: usize, l: usize) -> bool {
    l + 1 == n || (l == 1 && n <= 5) || (2 <= l && l + 2 <= n && n % 2 == 0 && 2 * l == n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    NotApplicable,
}

impl ClaimStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::NotApplicable => "not-applicable",
        }
    }
}

/// Outcome of one claim at one `(n, l)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellEvidence {
    pub n: usize,
    pub l: usize,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_element: Option<String>,
}

impl CellEvidence {
    fn new(n: usize, l: usize, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            n,
            l,
            passed,
            detail: detail.into(),
            element: None,
            failing_element: None,
        }
    }

    fn with_element(mut self, t: &Transformation) -> Self {
        self.element = Some(t.to_string());
        self
    }

    fn failing(n: usize, l: usize, detail: impl Into<String>, t: &Transformation) -> Self {
        let mut c = Self::new(n, l, false, detail);
        c.failing_element = Some(t.to_string());
        c
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClaimParameters {
    pub max_n: usize,
    pub cells: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub statement: String,
    pub parameters: ClaimParameters,
    pub status: ClaimStatus,
    pub evidence: Vec<CellEvidence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Worker threads; `0` uses the global pool.
    pub workers: usize,
    /// Permit `max_n = 8`.
    pub allow_large: bool,
    /// Record wall-clock time per claim. Makes the report run-dependent.
    pub timings: bool,
    /// Reuse enumerations stored here.
    pub cache_dir: Option<PathBuf>,
}

type Key = (usize, usize);

struct Context {
    max_n: usize,
    opts: VerifyOptions,
    plain: BTreeMap<Key, Rc<ElementSet>>,
    star: BTreeMap<Key, Rc<ElementSet>>,
    reports: BTreeMap<Key, Rc<RegularityReport>>,
}

impl Context {
    fn cells(&self) -> impl Iterator<Item = Key> {
        let max_n = self.max_n;
        (2..=max_n).flat_map(|n| (1..n).map(move |l| (n, l)))
    }

    fn load(&self, spec: SemigroupSpec) -> Result<Rc<ElementSet>> {
        let set = load_or_enumerate(&spec, self.opts.cache_dir.as_deref(), self.opts.workers)?;
        Ok(Rc::new(set))
    }

    fn plain(&mut self, n: usize, l: usize) -> Result<Rc<ElementSet>> {
        if let Some(s) = self.plain.get(&(n, l)) {
            return Ok(s.clone());
        }
        let s = self.load(SemigroupSpec::preserving(n, l)?)?;
        self.plain.insert((n, l), s.clone());
        Ok(s)
    }

    fn star(&mut self, n: usize, l: usize) -> Result<Rc<ElementSet>> {
        if let Some(s) = self.star.get(&(n, l)) {
            return Ok(s.clone());
        }
        let s = self.load(SemigroupSpec::reflecting(n, l)?)?;
        self.star.insert((n, l), s.clone());
        Ok(s)
    }

    fn report(&mut self, n: usize, l: usize) -> Result<Rc<RegularityReport>> {
        if let Some(r) = self.reports.get(&(n, l)) {
            return Ok(r.clone());
        }
        let set = self.plain(n, l)?;
        let spec = SemigroupSpec::preserving(n, l)?;
        let r = Rc::new(is_regular_semigroup_with_workers(
            &set,
            Carrier::Spec(spec),
            self.opts.workers,
        )?);
        self.reports.insert((n, l), r.clone());
        Ok(r)
    }
}

type Check = fn(&mut Context) -> Result<Vec<CellEvidence>>;
type BoxedCheck = Box<dyn Fn(&mut Context) -> Result<Vec<CellEvidence>>>;

struct Claim {
    id: String,
    statement: String,
    check: BoxedCheck,
}

impl Claim {
    fn new(id: &str, statement: &str, check: Check) -> Self {
        Self {
            id: id.to_string(),
            statement: statement.to_string(),
            check: Box::new(check),
        }
    }
}

fn inventory() -> Vec<Claim> {
    let mut claims = vec![
        Claim::new(
            "constant-map-excluded",
            "T_n(l) is a proper subset of T_n: constant maps are never members",
            constant_map_excluded,
        ),
        Claim::new(
            "subsemigroup-closure",
            "T_n(l) and T*_n(l) are closed under composition; id lies in T*_n(l) ⊆ T_n(l)",
            subsemigroup_closure,
        ),
        Claim::new(
            "preserving-reflecting-equality-locus",
            "T_n(l) = T*_n(l) iff (n, l) is (2, 1) or (3, 1); otherwise an explicit map separates them",
            equality_locus,
        ),
        Claim::new(
            "listed-generators",
            "the listed sets generate T_n(1) for n = 2..5, and the result is regular",
            listed_generators_claim,
        ),
        Claim::new(
            "length-one-regular-iff-small-degree",
            "T_n(1) is regular iff n <= 5",
            length_one_regular,
        ),
        Claim::new(
            "length-one-counterexample",
            "for n >= 6 the constructed map lies in T_n(1) and has no witness",
            length_one_counterexample,
        ),
        Claim::new(
            "odd-degree-not-regular",
            "for odd n >= 5 and 2 <= l <= n-2, T_n(l) is not regular; the constructed map has no witness",
            |ctx| off_half_not_regular(ctx, true),
        ),
        Claim::new(
            "even-degree-off-half-not-regular",
            "for even n >= 6 and 2 <= l <= n-2 with l != n/2, T_n(l) is not regular; the constructed map has no witness",
            |ctx| off_half_not_regular(ctx, false),
        ),
        Claim::new(
            "half-length-pair-structure",
            "every element of T_2l(l) maps each pair (x, x+l) onto some pair (i, i+l) in either order",
            half_length_pairs,
        ),
        Claim::new(
            "half-length-regular",
            "T_2l(l) is regular; the pair-scan construction gives a witness for every element",
            half_length_regular,
        ),
        Claim::new(
            "max-length-regular",
            "T_n(n-1) is regular, has 2n^(n-2) elements, and sends {1, n} onto {1, n}",
            max_length_regular,
        ),
        Claim::new(
            "regularity-dichotomy",
            "T_n(l) is regular iff l = n-1, or l = 1 and n <= 5, or n is even and l = n/2",
            regularity_dichotomy,
        ),
        Claim::new(
            "reflecting-large-structure",
            "for 2l > n every element of T*_n(l) keeps the middle inside itself and maps pairs bijectively onto pairs",
            reflecting_large_structure,
        ),
        Claim::new(
            "reflecting-large-regular",
            "for 2l > n, T*_n(l) is regular with an explicit witness for every element",
            reflecting_large_regular,
        ),
        Claim::new(
            "reflecting-small-regular",
            "for 2l <= n, T*_n(l) is regular with an explicit witness for every element",
            reflecting_small_regular,
        ),
        Claim::new(
            "reflecting-not-largest-regular",
            "the listed maps satisfy α = α³, so are regular in T_n(l), yet lie outside T*_n(l)",
            not_largest_regular,
        ),
    ];
    for lemma in ClassLemma::ALL {
        let (id, statement) = lemma_text(lemma);
        claims.push(Claim {
            id: id.to_string(),
            statement: statement.to_string(),
            check: Box::new(move |ctx| class_lemma(ctx, lemma)),
        });
    }
    claims.sort_by(|a, b| a.id.cmp(&b.id));
    claims
}

fn lemma_text(lemma: ClassLemma) -> (&'static str, &'static str) {
    match lemma {
        ClassLemma::FiberGap => (
            "class-fiber-gap",
            "in T*_n(l) with 2l <= n, x < y and xα = yα force y = x + 2l",
        ),
        ClassLemma::ClassImage => (
            "class-image",
            "in T*_n(l) with 2l <= n, each class A_i maps into a single class",
        ),
        ClassLemma::ClassSeparation => (
            "class-separation",
            "in T*_n(l) with 2l <= n, points of different classes have different images",
        ),
        ClassLemma::Monotone => (
            "class-monotone",
            "in T*_n(l) with 2l <= n, a class with m_i >= 3 maps to a monotone progression of step l",
        ),
        ClassLemma::SizePreserved => (
            "class-size-preserved",
            "in T*_n(l) with 2l <= n, a class with m_i >= 3 keeps its size",
        ),
        ClassLemma::MultiplicitySeparation => (
            "class-multiplicity-separation",
            "in T*_n(l) with 2l <= n, m_i < m_j with m_j >= 3 gives A_i ∩ A_jα = ∅ and A_j ∩ A_iα = ∅",
        ),
        ClassLemma::Permutation => (
            "class-permutation",
            "in T*_n(l) with 2l <= n, the classes of each multiplicity m >= 3 are permuted",
        ),
        ClassLemma::MissingPoints => (
            "class-missing-points",
            "in T*_n(l) with 2l <= n, non-image points are endpoints of classes with m_j = 2 whose midpoint and other endpoint are images",
        ),
    }
}

/// Runs every claim for `2 <= n <= max_n`. `max_n` may be at most
/// [`DEFAULT_MAX_N`], or [`LARGE_MAX_N`] with `allow_large`. The result is
/// sorted by claim id and, without `timings`, identical for every run and
/// worker count.
pub fn verify_all(max_n: usize, opts: &VerifyOptions) -> Result<Vec<ClaimResult>> {
    if max_n < 2 {
        return Err(Error::DegreeTooSmall {
            min: 2,
            found: max_n,
        });
    }
    let limit = if opts.allow_large {
        LARGE_MAX_N
    } else {
        DEFAULT_MAX_N
    };
    if max_n > limit {
        return Err(Error::Precondition(format!(
            "max_n = {max_n} exceeds {limit}{}",
            if opts.allow_large {
                ""
            } else {
                "; pass allow_large for 8"
            }
        )));
    }
    let mut ctx = Context {
        max_n,
        opts: opts.clone(),
        plain: BTreeMap::new(),
        star: BTreeMap::new(),
        reports: BTreeMap::new(),
    };
    inventory()
        .into_iter()
        .map(|claim| {
            let start = Instant::now();
            let evidence = (claim.check)(&mut ctx)?;
            let status = if evidence.is_empty() {
                ClaimStatus::NotApplicable
            } else if evidence.iter().all(|c| c.passed) {
                ClaimStatus::Pass
            } else {
                ClaimStatus::Fail
            };
            Ok(ClaimResult {
                id: claim.id,
                statement: claim.statement,
                parameters: ClaimParameters {
                    max_n,
                    cells: evidence.len(),
                },
                status,
                evidence,
                elapsed_ms: opts.timings.then(|| start.elapsed().as_millis() as u64),
            })
        })
        .collect()
}

/// True iff no claim failed.
pub fn all_passed(results: &[ClaimResult]) -> bool {
    results.iter().all(|r| r.status != ClaimStatus::Fail)
}

/// Plain-text traceability table: claim id, statement, cells, status.
pub fn render_table(results: &[ClaimResult]) -> String {
    let id_w = results.iter().map(|r| r.id.len()).max().unwrap_or(5).max(5);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<id_w$}  {:>5}  {:<14}  statement",
        "claim", "cells", "status"
    );
    for r in results {
        let _ = writeln!(
            out,
            "{:<id_w$}  {:>5}  {:<14}  {}",
            r.id,
            r.parameters.cells,
            r.status.as_str(),
            r.statement
        );
        for c in r.evidence.iter().filter(|c| !c.passed) {
            let _ = writeln!(
                out,
                "{:<id_w$}  n={} l={}: {}{}",
                "",
                c.n,
                c.l,
                c.detail,
                c.failing_element
                    .as_ref()
                    .map(|e| format!(" [{e}]"))
                    .unwrap_or_default()
            );
        }
    }
    let failed = results
        .iter()
        .filter(|r| r.status == ClaimStatus::Fail)
        .count();
    let _ = writeln!(out, "{} claims, {failed} failed", results.len());
    out
}

// ---- checks ----

fn constant_map_excluded(ctx: &mut Context) -> Result<Vec<CellEvidence>> {
    let mut out = Vec::new();
    for (n, l) in ctx.cells().collect::<Vec<_>>() {
        let set = ctx.plain(n, l)?;
        let c = Transformation::constant(n, 1)?;
        let total = (n as u64).pow(n as u32);
        let passed = !set.contains(&c) && (set.len() as u64) < total;
        out.push(
            CellEvidence::new(
                n,
                l,
                passed,
                format!("|T_{n}({l})| = {} < {total}", set.len()),
            )
            .with_element(&c),
        );
    }
    Ok(out)
}

fn subsemigroup_closure(ctx: &mut Context) -> Result<Vec<CellEvidence>> {
    let mut out = Vec::new();
    for (n, l) in ctx.cells().collect::<Vec<_>>() {
        let report = ctx.report(n, l)?;
        let plain = ctx.plain(n, l)?;
        let star = ctx.star(n, l)?;
        let cell = match check_closed(&star) {
            Err(e) => CellEvidence::new(n, l, false, e.to_string()),
            Ok(cert) => {
                let id = Transformation::identity(n);
                let passed = star.contains(&id) && star.is_subset(&plain);
                CellEvidence::new(
                    n,
                    l,
                    passed,
                    format!(
                        "closed with {} and {} generators",
                        report.stats.closure_generators, cert.generators
                    ),
                )
            }
        };
        out.push(cell);
    }
    Ok(out)
}

fn equality_locus(ctx: &mut Context) -> Result<Vec<CellEvidence>> {
    let mut out = Vec::new();
    for (n, l) in ctx.cells().collect::<Vec<_>>() {
        let plain = ctx.plain(n, l)?;
        let star = ctx.star(n, l)?;
        let equal = *plain == *star;
        let expected = l == 1 && n <= 3;
        let sizes = format!("|T| = {}, |T*| = {}", plain.len(), star.len());
        let cell = if expected {
            CellEvidence::new(n, l, equal, format!("equal: {sizes}"))
        } else {
            match strictness_witness(n, l) {
                Ok(Derivation { result: a, .. }) => {
                    let passed = !equal && plain.contains(&a) && !star.contains(&a);
                    CellEvidence::new(n, l, passed, format!("strict: {sizes}")).with_element(&a)
                }
                Err(e) => CellEvidence::new(n, l, false, e.to_string()),
            }
        };
        out.push(cell);
    }
    Ok(out)
}

fn listed_generators_claim(ctx: &mut Context) -> Result<Vec<CellEvidence>> {
    let mut out = Vec::new();
    for n in 2..=ctx.max_n.min(5) {
        let gens = listed_generators(n).expect("listed for n <= 5");
        let generated = closure(&gens)?;
        let target = ctx.plain(n, 1)?;
        let cell = if generated != *target {
            CellEvidence::new(
                n,
                1,
                false,
                format!(
                    "closure has {} elements, T_{n}(1) has {}",
                    generated.len(),
                    target.len()
                ),
            )
        } else {
            let report = ctx.report(n, 1)?;
            CellEvidence::new(
                n,
                1,
                report.regular,
                format!(
                    "{} generators give all {} elements; regular = {}",
                    gens.len(),
                    generated.len(),
                    report.regular
                ),
            )
        };
        out.push(cell);
    }
    Ok(out)
}

fn regular_detail(r: &RegularityReport) -> String {
    let bad: Vec<&Transformation> = r.irregular_elements().collect();
    match bad.first() {
        None => format!("regular, {} elements", r.size),
        Some(first) => format!(
            "not regular: {} of {} elements irregular, first {first}",
            bad.len(),
            r.size
        ),
    }
}

fn length_one_regular(ctx: &mut Context) -> Result<Vec<CellEvidence>> {
    let mut out = Vec::new();
    for n in 2..=ctx.max_n {
        let r = ctx.report(n, 1)?;
        let mut cell = CellEvidence::new(n, 1, r.regular == (n <= 5), regular_detail(&r));
        if n >= 6 {
            let a = counterexample_t1(n)?.result;
            cell.passed &= r.irregular_elements().any(|t| *t == a);
            cell = cell.with_element(&a);
        }
        out.push(cell);
    }
    Ok(out)
}

/// `a` lies in `set` and exhaustive search over `set` finds no witness.
fn no_witness_cell(n: usize, l: usize, a: &Transformation, set: &ElementSet) -> CellEvidence {
    if !set.contains(a) {
        return CellEvidence::failing(n, l, "not a member", a);
    }
    let search = find_witness(a, set);
    if let Some(w) = search.witness {
        return CellEvidence::failing(n, l, format!("has witness {w}"), a);
    }
    let passed = search.exhausted(set);
    CellEvidence::new(
        n,
        l,
        passed,
        format!(
            "no witness: scanned {} of {} elements with {} compositions",
            search.stats.elements_scanned,
            set.len(),
            search.stats.compositions
        ),
    )
    .with_element(a)
}

fn length_one_counterexample(ctx: &mut Context) -> Result<Vec<CellEvidence>> {
    let mut out = Vec::new();
    for n in 6..=ctx.max_n {
        let set = ctx.plain(n, 1)?;
        let a = counterexample_t1(n)?.result;
        out.push(no_witness_cell(n, 1, &a, &set));
    }
    Ok(out)
}

fn off_half_not_regular(ctx: &mut Context, odd: bool) -> Result<Vec<CellEvidence>> {
    let mut out = Vec::new();
    for (n, l) in ctx.cells().collect::<Vec<_>>() {
        let applies = (n % 2 == 1) == odd && l >= 2 && l + 2 <= n && 2 * l != n;
        if !applies {
            continue;
        }
        let set = ctx.plain(n, l)?;
        let r = ctx.report(n, l)?;
        let a = counterexample_tl(n, l)?.result;
        let mut cell = no_witness_cell(n, l, &a, &set);
        if r.regular {
            cell.passed = false;
            cell.detail = format!("T_{n}({l}) is regular; {}", cell.detail);
        }
        out.push(cell);
    }
    Ok(out)
}

fn half_cells(ctx: &Context) -> Vec<Key> {
    ctx.cells().filter(|&(n, l)| n == 2 * l).collect()
}

fn all_elements<F>(n: usize, l: usize, set: &ElementSet, what: &str, mut check: F) -> CellEvidence
where
    F: FnMut(&Transformation) -> std::result::Result<(), String>,
{
    for a in set {
        if let Err(msg) = check(a) {
            return CellEvidence::failing(n, l, msg, a);
        }
    }
    CellEvidence::new(n, l, true, format!("{what} for all {} elements", set.len()))
}

fn half_length_pairs(ctx: &mut Context) -> Result<Vec<CellEvidence>> {
    let mut out = Vec::new();
    for (n, l) in half_cells(ctx) {
        let set = ctx.plain(n, l)?;
        out.push(all_elements(n, l, &set, "pair structure holds", |a| {
            check_half_pairs(a, l)
        }));
    }
    Ok(out)
}

fn constructive_cell(
    n: usize,
    l: usize,
    set: &ElementSet,
    construct: impl Fn(&Transformation) -> Result<Derivation>,
) -> CellEvidence {
    all_elements(n, l, set, "explicit witness valid", |a| {
        let b = construct(a).map_err(|e| e.to_string())?.result;
        if !is_witness(a, &b) {
            return Err(format!("constructed {b} fails aβa = a"));
        }
        if !set.contains(&b) {
            return Err(format!("constructed {b} lies outside the semigroup"));
        }
        Ok(())
    })
}

fn half_length_regular(ctx: &mut Context) -> Result<Vec<CellEvidence>> {
    let mut out = Vec::new();
    for (n, l) in half_cells(ctx) {
        let set = ctx.plain(n, l)?;
        let r = ctx.report(n, l)?;
        let mut cell = constructive_cell(n, l, &set, |a| witness_half(a, l));
        if !r.regular {
            cell.passed = false;
            cell.detail = regular_detail(&r);
        }
        out.push(cell);
    }
    Ok(out)
}

fn max_length_regular(ctx: &mut Context) -> Result<Vec<CellEvidence>> {
    let mut out = Vec::new();
    for n in 2..=ctx.max_n {
        let l = n - 1;
        let set = ctx.plain(n, l)?;
        let r = ctx.report(n, l)?;
        let expected = 2 * n.pow(n as u32 - 2);
        let mut cell = all_elements(n, l, &set, "endpoints map to endpoints", |a| {
            match (a.apply(1), a.apply(n)) {
                (1, x) | (x, 1) if x == n => Ok(()),
                (p, q) => Err(format!("endpoints map to ({p}, {q})")),
            }
        });
        if cell.passed {
            cell.passed = r.regular && set.len() == expected;
            cell.detail = format!("{}; expected size {expected}", regular_detail(&r));
        }
        out.push(cell);
    }
    Ok(out)
}

fn regularity_dichotomy(ctx: &mut Context) -> Result<Vec<CellEvidence>> {
    let mut out = Vec::new();
    for (n, l) in ctx.cells().collect::<Vec<_>>() {
        let r = ctx.report(n, l)?;
        let predicted = predicted_regular(n, l);
        let mut cell = CellEvidence::new(
            n,
            l,
            r.regular == predicted,
            format!(
                "predicted {}; {}",
                if predicted { "regular" } else { "not regular" },
                regular_detail(&r)
            ),
        );
        if let Some(first) = r.irregular_elements().next() {
            cell = cell.with_element(first);
        }
        out.push(cell);
    }
    Ok(out)
}

fn large_cells(ctx: &Context) -> Vec<Key> {
    ctx.cells().filter(|&(n, l)| 2 * l > n).collect()
}

fn small_cells(ctx: &Context) -> Vec<Key> {
    ctx.cells().filter(|&(n, l)| 2 * l <= n).collect()
}

fn reflecting_large_structure(ctx: &mut Context) -> Result<Vec<CellEvidence>> {
    let mut out = Vec::new();
    for (n, l) in large_cells(ctx) {
        let set = ctx.star(n, l)?;
        out.push(all_elements(
            n,
            l,
            &set,
            "pair/middle structure holds",
            |a| check_pair_middle(a, l),
        ));
    }
    Ok(out)
}

fn reflecting_large_regular(ctx: &mut Context) -> Result<Vec<CellEvidence>> {
    let mut out = Vec::new();
    for (n, l) in large_cells(ctx) {
        let set = ctx.star(n, l)?;
        out.push(constructive_cell(n, l, &set, |a| witness_star_large(a, l)));
    }
    Ok(out)
}

fn reflecting_small_regular(ctx: &mut Context) -> Result<Vec<CellEvidence>> {
    let mut out = Vec::new();
    for (n, l) in small_cells(ctx) {
        let set = ctx.star(n, l)?;
        out.push(constructive_cell(n, l, &set, |a| witness_star_small(a, l)));
    }
    Ok(out)
}

fn class_lemma(ctx: &mut Context, lemma: ClassLemma) -> Result<Vec<CellEvidence>> {
    let mut out = Vec::new();
    for (n, l) in small_cells(ctx) {
        let c = classes(n, l)?;
        if !lemma.applies(&c) {
            continue;
        }
        let set = ctx.star(n, l)?;
        out.push(all_elements(n, l, &set, "holds", |a| lemma.check(a, &c)));
    }
    Ok(out)
}

fn not_largest_regular(ctx: &mut Context) -> Result<Vec<CellEvidence>> {
    let mut out = Vec::new();
    for (n, l, a) in closing_examples() {
        if n > ctx.max_n {
            continue;
        }
        let plain = ctx.plain(n, l)?;
        let star = ctx.star(n, l)?;
        let cubed = a.then(&a).then(&a) == a;
        let witness = find_witness(&a, &plain).witness;
        let passed = cubed && plain.contains(&a) && !star.contains(&a) && witness.is_some();
        out.push(
            CellEvidence::new(
                n,
                l,
                passed,
                format!(
                    "α = α³: {cubed}; in T_{n}({l}): {}; in T*_{n}({l}): {}; smallest witness {}",
                    plain.contains(&a),
                    star.contains(&a),
                    witness.map_or("none".to_string(), |w| w.to_string())
                ),
            )
            .with_element(&a),
        );
    }
    Ok(out)
}
