//! Explicit constructions: regularity witnesses for the regular cases,
//! non-regular elements for the others, and members of `T_n(l) \ T*_n(l)`.
//!
//! Every constructor returns a [`Derivation`] carrying a short trace of the
//! case it took and the parameters it used.

mod counter;

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::length::{
    check_length, classes, preserves_length, reflects_length, SemigroupSpec, Variant,
};
use crate::transform::Transformation;

pub use counter::{counterexample_t1, counterexample_tl, strictness_witness};

/// A constructed map and the steps that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub result: Transformation,
    pub trace: Vec<String>,
}

impl Serialize for Derivation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Derivation", 2)?;
        s.serialize_field("result", &self.result.to_string())?;
        s.serialize_field("trace", &self.trace)?;
        s.end()
    }
}

/// A preimage `d_x` chosen for every image point `x`: the smallest one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreimageChoice {
    chosen: BTreeMap<usize, usize>,
}

impl PreimageChoice {
    pub fn smallest(a: &Transformation) -> Self {
        let mut chosen = BTreeMap::new();
        for x in 1..=a.degree() {
            chosen.entry(a.apply(x)).or_insert(x);
        }
        Self { chosen }
    }

    /// `d_x`, if `x` is an image point.
    pub fn get(&self, x: usize) -> Option<usize> {
        self.chosen.get(&x).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.chosen.iter().map(|(&x, &d)| (x, d))
    }
}

fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

fn finish(a: &Transformation, beta: Vec<usize>, trace: Vec<String>) -> Result<Derivation> {
    let result = Transformation::new(a.degree(), &beta)?;
    Ok(Derivation { result, trace })
}

/// Witness for `a ∈ T_{2l}(l)`: image pairs `{u, v}` go back to the first
/// pair `(x, x + l)` hitting them, other points stay put.
pub fn witness_half(a: &Transformation, l: usize) -> Result<Derivation> {
    let n = a.degree();
    if n != 2 * l {
        return Err(precondition(format!(
            "witness_half needs n = 2l, got n = {n}, l = {l}"
        )));
    }
    if !preserves_length(a, l)? {
        return Err(precondition(format!("{a} does not preserve length {l}")));
    }
    let mut beta: Vec<usize> = (1..=n).collect();
    let mut assigned = vec![false; n + 1];
    let mut trace = vec![format!(
        "n = 2l = {n}: scan pairs (x, x+{l}) for x = 1..{l}"
    )];
    for x in 1..=l {
        let (p, q) = (a.apply(x), a.apply(x + l));
        if assigned[p] {
            continue;
        }
        assigned[p] = true;
        assigned[q] = true;
        beta[p - 1] = x;
        beta[q - 1] = x + l;
        trace.push(format!(
            "image pair {{{p}, {q}}} from ({x}, {}): d_{p} = {x}, d_{q} = {}",
            x + l,
            x + l
        ));
    }
    let fixed: Vec<String> = (1..=n)
        .filter(|&z| !assigned[z])
        .map(|z| z.to_string())
        .collect();
    if !fixed.is_empty() {
        trace.push(format!("non-image points fixed: {}", fixed.join(" ")));
    }
    finish(a, beta, trace)
}

fn require_reflecting(a: &Transformation, l: usize) -> Result<()> {
    if !reflects_length(a, l)? {
        return Err(precondition(format!(
            "{a} does not preserve and reflect length {l}"
        )));
    }
    Ok(())
}

/// Witness for `a ∈ T*_n(l)` with `2l > n`: invert `a` on the paired
/// points, send middle image points to their smallest preimage, fix the
/// remaining middle points.
pub fn witness_star_large(a: &Transformation, l: usize) -> Result<Derivation> {
    let n = a.degree();
    check_length(n, l)?;
    if 2 * l <= n {
        return Err(precondition(format!(
            "witness_star_large needs 2l > n, got n = {n}, l = {l}"
        )));
    }
    require_reflecting(a, l)?;
    let d = PreimageChoice::smallest(a);
    let mut beta: Vec<usize> = (1..=n).collect();
    let mut trace = vec![format!(
        "2l > n: pairs (x, x+{l}) for x = 1..{}, middle {}..{l}",
        n - l,
        n - l + 1
    )];
    for x in (1..=n - l).chain(l + 1..=n) {
        beta[a.apply(x) - 1] = x;
    }
    trace.push("paired points: inverse of the bijection between pairs".to_string());
    for u in n - l + 1..=l {
        if let Some(du) = d.get(u) {
            beta[u - 1] = du;
            trace.push(format!("middle image {u}: d_{u} = {du}"));
        }
    }
    finish(a, beta, trace)
}

/// Witness for `a ∈ T*_n(l)` with `2l <= n`. A bijection gets its inverse.
/// Otherwise image points go to their smallest preimage `d_x`, and each
/// missing endpoint of a two-step class is sent to the preimage of the
/// opposite endpoint.
pub fn witness_star_small(a: &Transformation, l: usize) -> Result<Derivation> {
    let n = a.degree();
    check_length(n, l)?;
    if 2 * l > n {
        return Err(precondition(format!(
            "witness_star_small needs 2l <= n, got n = {n}, l = {l}"
        )));
    }
    require_reflecting(a, l)?;
    if let Some(inv) = a.inverse() {
        return Ok(Derivation {
            result: inv,
            trace: vec!["2l <= n, bijective: inverse permutation".to_string()],
        });
    }
    let c = classes(n, l)?;
    let d = PreimageChoice::smallest(a);
    let mut beta = vec![0usize; n];
    let mut trace = vec![format!(
        "2l <= n, not bijective: classes with m = {:?}",
        c.multiplicities()
    )];
    for (x, dx) in d.iter() {
        beta[x - 1] = dx;
        trace.push(format!("d_{x} = {dx}"));
    }
    for u in (1..=n).filter(|&u| d.get(u).is_none()) {
        let low = c.with_multiplicity(2).into_iter().find(|&j| j == u);
        let high = c.with_multiplicity(2).into_iter().find(|&j| j + 2 * l == u);
        let (source, what) = match (low, high) {
            (Some(j), _) if d.get(j + 2 * l).is_some() => (
                j + 2 * l,
                format!("missing {u} = j with j + 2l = {}", j + 2 * l),
            ),
            (_, Some(j)) if d.get(j).is_some() => (j, format!("missing {u} = j + 2l with j = {j}")),
            _ => {
                return Err(precondition(format!(
                    "missing point {u} is not an endpoint of a two-step class"
                )))
            }
        };
        let target = d.get(source).expect("checked above");
        beta[u - 1] = target;
        trace.push(format!("{what}: {u} -> d_{source} = {target}"));
    }
    finish(a, beta, trace)
}

/// How a regularity witness was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessSource {
    Constructed,
    OracleFound,
}

/// The construction that applies to `a` in the named semigroup, if any:
/// the half-length pair scan for `T_{2l}(l)` and the two reflecting
/// constructions for `T*_n(l)`. Other cases have no construction.
pub fn regime_witness(a: &Transformation, spec: &SemigroupSpec) -> Result<Option<Derivation>> {
    if a.degree() != spec.n {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: spec.n,
        });
    }
    let (n, l) = (spec.n, spec.l);
    match spec.variant {
        Variant::Reflecting if 2 * l > n => witness_star_large(a, l).map(Some),
        Variant::Reflecting => witness_star_small(a, l).map(Some),
        Variant::Preserving if n == 2 * l => witness_half(a, l).map(Some),
        _ => Ok(None),
    }
}
