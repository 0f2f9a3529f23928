use std::cmp::Reverse;
use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::ElementSet;
use crate::error::{Error, Result};
use crate::parallel::run_with_workers;
use crate::transform::Transformation;

fn two_sided_products(s: &Transformation, gens: &[Transformation]) -> Vec<Transformation> {
    gens.iter().flat_map(|g| [s.then(g), g.then(s)]).collect()
}

/// The subsemigroup generated by `generators`: breadth-first products of the
/// frontier with every generator on both sides until nothing new appears.
pub fn closure(generators: &ElementSet) -> Result<ElementSet> {
    closure_impl(generators, |frontier, gens| {
        frontier
            .iter()
            .flat_map(|s| two_sided_products(s, gens))
            .collect()
    })
}

/// [`closure`] with each frontier level multiplied out on `workers` threads.
pub fn closure_with_workers(generators: &ElementSet, workers: usize) -> Result<ElementSet> {
    run_with_workers(workers, || {
        closure_impl(generators, |frontier, gens| {
            frontier
                .par_iter()
                .flat_map_iter(|s| two_sided_products(s, gens))
                .collect()
        })
    })
}

fn closure_impl<F>(generators: &ElementSet, products: F) -> Result<ElementSet>
where
    F: Fn(&[Transformation], &[Transformation]) -> Vec<Transformation>,
{
    let gens = generators.as_slice();
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let mut seen: BTreeSet<Transformation> = gens.iter().copied().collect();
    let mut frontier = gens.to_vec();
    while !frontier.is_empty() {
        frontier = products(&frontier, gens)
            .into_iter()
            .filter(|p| seen.insert(*p))
            .collect();
    }
    Ok(ElementSet::from_sorted(
        generators.degree(),
        seen.into_iter().collect(),
    ))
}

/// Evidence that a set is closed under composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ClosedCertificate {
    /// Size of the generating set found along the way.
    pub generators: usize,
    /// Products computed.
    pub products: u64,
}

/// Checks `S·S ⊆ S` without forming all `|S|^2` products.
///
/// Greedily picks generators from `S` (highest rank first) and grows
/// `C = ⟨G⟩` by right multiplication. Every product lands in `S` or the
/// check fails with that pair. Once every element of `S` lies in `C`, `S`
/// equals a generated subsemigroup and is therefore closed.
pub fn check_closed(set: &ElementSet) -> Result<ClosedCertificate> {
    let elems = set.as_slice();
    let mut in_c = vec![false; elems.len()];
    let mut members: Vec<usize> = Vec::new();
    let mut gens: Vec<usize> = Vec::new();
    let mut queue: Vec<usize> = Vec::new();
    let mut products = 0u64;

    let mut order: Vec<usize> = (0..elems.len()).collect();
    order.sort_by_key(|&i| (Reverse(elems[i].rank()), i));

    let mut absorb = |left: usize,
                      right: usize,
                      in_c: &mut Vec<bool>,
                      members: &mut Vec<usize>,
                      queue: &mut Vec<usize>|
     -> Result<()> {
        let p = elems[left].then(&elems[right]);
        products += 1;
        match set.index_of(&p) {
            Some(k) => {
                if !in_c[k] {
                    in_c[k] = true;
                    members.push(k);
                    queue.push(k);
                }
                Ok(())
            }
            None => Err(Error::NotClosed {
                left: elems[left].to_string(),
                right: elems[right].to_string(),
                product: p.to_string(),
            }),
        }
    };

    for cand in order {
        if in_c[cand] {
            continue;
        }
        gens.push(cand);
        let old = members.len();
        in_c[cand] = true;
        members.push(cand);
        queue.push(cand);
        for k in 0..old {
            absorb(members[k], cand, &mut in_c, &mut members, &mut queue)?;
        }
        while let Some(e) = queue.pop() {
            for &g in &gens {
                absorb(e, g, &mut in_c, &mut members, &mut queue)?;
            }
        }
    }
    Ok(ClosedCertificate {
        generators: gens.len(),
        products,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::length::{enumerate, SemigroupSpec};

    fn set(lines: &[&str]) -> ElementSet {
        let ts: Vec<Transformation> = lines.iter().map(|l| l.parse().unwrap()).collect();
        ElementSet::new(ts[0].degree(), ts).unwrap()
    }

    fn brute_closed(s: &ElementSet) -> bool {
        s.iter().all(|a| s.iter().all(|b| s.contains(&a.then(b))))
    }

    #[test]
    fn swap_generates_t2_1() {
        let c = closure(&set(&["2 1"])).unwrap();
        assert_eq!(c, set(&["1 2", "2 1"]));
    }

    #[test]
    fn identity_is_closed() {
        let id = set(&["1 2 3"]);
        assert_eq!(closure(&id).unwrap(), id);
    }

    #[test]
    fn empty_generators_rejected() {
        let empty = ElementSet::new(3, []).unwrap();
        assert_eq!(closure(&empty), Err(Error::EmptyGenerators));
    }

    #[test]
    fn closure_is_idempotent_and_minimal() {
        let g = set(&["2 3 2 1", "3 4 3 2"]);
        let c = closure(&g).unwrap();
        assert_eq!(closure(&c).unwrap(), c);
        assert!(brute_closed(&c));
        let t41 = enumerate(&SemigroupSpec::preserving(4, 1).unwrap()).unwrap();
        assert!(c.is_subset(&t41));
        assert_eq!(closure_with_workers(&g, 2).unwrap(), c);
    }

    #[test]
    fn closed_check_matches_brute_force() {
        for n in 2..=5 {
            for l in 1..n {
                let s = enumerate(&SemigroupSpec::preserving(n, l).unwrap()).unwrap();
                assert!(check_closed(&s).is_ok());
            }
        }
        let open = set(&["2 3 2 1", "3 4 3 2"]);
        assert!(!brute_closed(&open));
        let err = check_closed(&open).unwrap_err();
        let Error::NotClosed {
            left,
            right,
            product,
        } = err
        else {
            panic!("unexpected error");
        };
        let (a, b): (Transformation, Transformation) =
            (left.parse().unwrap(), right.parse().unwrap());
        assert!(open.contains(&a) && open.contains(&b));
        assert_eq!(a.then(&b).to_string(), product);
        assert!(!open.contains(&product.parse().unwrap()));
    }

    #[test]
    fn closed_check_on_generated_sets() {
        let gens = ["2 3 4 5 4", "3 2 1 2 3"];
        let c = closure(&set(&gens)).unwrap();
        assert!(brute_closed(&c));
        assert!(check_closed(&c).is_ok());
    }
}
