use super::{precondition, Derivation};
use crate::error::{Error, Result};
use crate::length::check_length;
use crate::transform::{check_degree, Transformation};

fn build(n: usize, images: Vec<usize>, trace: Vec<String>) -> Result<Derivation> {
    Ok(Derivation {
        result: Transformation::new(n, &images)?,
        trace,
    })
}

/// A non-regular element of `T_n(1)` for `n >= 6`, chosen by `n mod 4`.
pub fn counterexample_t1(n: usize) -> Result<Derivation> {
    check_degree(n)?;
    if n < 6 {
        return Err(Error::DegreeTooSmall { min: 6, found: n });
    }
    let mut trace = vec![format!("n = {n}, n mod 4 = {}", n % 4)];
    let images: Vec<usize> = match n % 4 {
        2 | 0 => {
            let h = n / 2;
            // n ≡ 0 ends with the two points n-1, n mapped to h, h-1
            let tail_start = if n % 4 == 2 { n } else { n - 1 };
            trace.push(format!(
                "h = {h}: x <= h reversed, h < x < {tail_start} alternate {} / {}, tail descends from h",
                h + 2,
                h + 1
            ));
            (1..=n)
                .map(|x| {
                    if x <= h {
                        n + 1 - x
                    } else if x < tail_start {
                        if (x - h) % 2 == 1 {
                            h + 2
                        } else {
                            h + 1
                        }
                    } else {
                        h - (x - tail_start)
                    }
                })
                .collect()
        }
        3 => {
            let m = n.div_ceil(2);
            trace.push(format!(
                "1 -> {}, 2..={m} reversed from {n}, then alternate {} / {}, n -> {m}",
                n - 1,
                m + 2,
                m + 1
            ));
            (1..=n)
                .map(|x| {
                    if x == 1 {
                        n - 1
                    } else if x <= m {
                        n + 2 - x
                    } else if x < n {
                        if (x - m) % 2 == 1 {
                            m + 2
                        } else {
                            m + 1
                        }
                    } else {
                        m
                    }
                })
                .collect()
        }
        _ => {
            let m = (n - 1) / 2;
            trace.push(format!(
                "x <= {m} reversed, then alternate {} / {}, n -> {}",
                m + 3,
                m + 2,
                m + 1
            ));
            (1..=n)
                .map(|x| {
                    if x <= m {
                        n + 1 - x
                    } else if x < n {
                        if (x - m) % 2 == 1 {
                            m + 3
                        } else {
                            m + 2
                        }
                    } else {
                        m + 1
                    }
                })
                .collect()
        }
    };
    build(n, images, trace)
}

fn excluded_half(n: usize, l: usize) -> bool {
    n % 2 == 0 && 2 * l == n
}

/// A non-regular element of `T_n(l)` for `2 <= l <= n - 2`, `l ≠ n/2`.
pub fn counterexample_tl(n: usize, l: usize) -> Result<Derivation> {
    check_length(n, l)?;
    if l < 2 || l + 2 > n || excluded_half(n, l) {
        return Err(precondition(format!(
            "counterexample_tl needs 2 <= l <= n-2 and l != n/2, got n = {n}, l = {l}"
        )));
    }
    if 2 * l > n {
        let trace = vec![format!(
            "2l > n: 1..={} -> 1, {l} -> 2, {}..={n} -> {}",
            l - 1,
            l + 1,
            l + 1
        )];
        let images = (1..=n)
            .map(|x| {
                if x < l {
                    1
                } else if x == l {
                    2
                } else {
                    l + 1
                }
            })
            .collect();
        return build(n, images, trace);
    }
    let (q, r) = ((n - 1) / l, (n - 1) % l);
    let mut trace = vec![format!("2l < n: n - 1 = {q}*{l} + {r}")];
    let mut images: Vec<usize> = (1..=n).collect();
    for k in 0..=q {
        let base = k * l;
        let u = if base + l < n {
            base + l + 1
        } else {
            base - l + 1
        };
        let v = if k % 2 == 0 { l + 1 } else { 1 };
        images[base] = u;
        if base + 1 < n {
            images[base + 1] = v;
            trace.push(format!("k = {k}: u_{k} = {u}, v_{k} = {v}"));
        } else {
            trace.push(format!("k = {k}: u_{k} = {u}"));
        }
    }
    let last = match r {
        0 => n - l,
        1 if q % 2 == 1 => 1,
        1 => l + 1,
        _ => n,
    };
    debug_assert_eq!(images[n - 1], last);
    images[n - 1] = last;
    trace.push(format!("r = {r}: n -> {last}"));
    build(n, images, trace)
}

/// An element of `T_n(l)` outside `T*_n(l)`. None exists for
/// `(n, l) ∈ {(2, 1), (3, 1)}`.
pub fn strictness_witness(n: usize, l: usize) -> Result<Derivation> {
    check_length(n, l)?;
    if l == 1 && n <= 3 {
        return Err(precondition(format!(
            "T_{n}(1) = T*_{n}(1): no strictness witness"
        )));
    }
    let (images, trace): (Vec<usize>, String) = if 2 * l > n {
        (
            (1..=n).map(|x| if x > l { l + 1 } else { 1 }).collect(),
            format!("2l > n: pairs -> (1, {}), middle -> 1", l + 1),
        )
    } else if l == 1 {
        (
            (1..=n).map(|x| if x % 2 == 1 { 1 } else { 2 }).collect(),
            "l = 1: alternate 1, 2".to_string(),
        )
    } else {
        (
            (1..=n)
                .map(|x| if ((x - 1) / l) % 2 == 0 { 1 } else { l + 1 })
                .collect(),
            format!("2l <= n: blocks of {l} alternate 1 / {}", l + 1),
        )
    };
    build(n, images, vec![trace])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::find_witness;
    use crate::length::{enumerate, preserves_length, reflects_length, SemigroupSpec};

    fn v(d: Result<Derivation>) -> Vec<usize> {
        d.unwrap().result.to_vec()
    }

    #[test]
    fn length_one_examples() {
        assert_eq!(v(counterexample_t1(6)), [6, 5, 4, 5, 4, 3]);
        assert_eq!(v(counterexample_t1(8)), [8, 7, 6, 5, 6, 5, 4, 3]);
        assert_eq!(v(counterexample_t1(7)), [6, 7, 6, 5, 6, 5, 4]);
        assert_eq!(v(counterexample_t1(9)), [9, 8, 7, 6, 7, 6, 7, 6, 5]);
        assert!(counterexample_t1(5).is_err());
    }

    #[test]
    fn listed_seven_point_map_is_regular() {
        // [6,7,6,5,4,5,4] lies in T_7(1) but is regular there
        let a = Transformation::new(7, &[6, 7, 6, 5, 4, 5, 4]).unwrap();
        let s = enumerate(&SemigroupSpec::preserving(7, 1).unwrap()).unwrap();
        assert!(s.contains(&a));
        assert!(find_witness(&a, &s).witness.is_some());
    }

    #[test]
    fn general_length_examples() {
        assert_eq!(v(counterexample_tl(5, 3)), [1, 1, 2, 4, 4]);
        assert_eq!(v(counterexample_tl(7, 2)), [3, 3, 5, 1, 7, 3, 5]);
        assert_eq!(v(counterexample_tl(6, 2)), [3, 3, 5, 1, 3, 3]);
        assert!(counterexample_tl(6, 3).is_err());
        assert!(counterexample_tl(6, 1).is_err());
        assert!(counterexample_tl(6, 5).is_err());
    }

    #[test]
    fn strictness_examples() {
        assert_eq!(v(strictness_witness(3, 2)), [1, 1, 3]);
        assert_eq!(v(strictness_witness(5, 3)), [1, 1, 1, 4, 4]);
        assert_eq!(v(strictness_witness(6, 1)), [1, 2, 1, 2, 1, 2]);
        assert_eq!(v(strictness_witness(4, 2)), [1, 1, 3, 3]);
        assert!(strictness_witness(2, 1).is_err());
        assert!(strictness_witness(3, 1).is_err());
    }

    #[test]
    fn strictness_witnesses_lie_in_the_difference() {
        for n in 2..=12 {
            for l in 1..n {
                if let Ok(d) = strictness_witness(n, l) {
                    assert!(preserves_length(&d.result, l).unwrap(), "{n} {l}");
                    assert!(!reflects_length(&d.result, l).unwrap(), "{n} {l}");
                }
            }
        }
    }

    #[test]
    fn counterexamples_are_members_and_not_regular() {
        for n in 6..=7 {
            let a = counterexample_t1(n).unwrap().result;
            let s = enumerate(&SemigroupSpec::preserving(n, 1).unwrap()).unwrap();
            let search = find_witness(&a, &s);
            assert!(s.contains(&a) && search.exhausted(&s), "n = {n}");
        }
        for n in 5..=7 {
            for l in 2..=n - 2 {
                let Ok(d) = counterexample_tl(n, l) else {
                    continue;
                };
                let s = enumerate(&SemigroupSpec::preserving(n, l).unwrap()).unwrap();
                let search = find_witness(&d.result, &s);
                assert!(
                    s.contains(&d.result) && search.exhausted(&s),
                    "n = {n}, l = {l}"
                );
            }
        }
    }

    #[test]
    fn constructors_stay_in_range_up_to_capacity() {
        for n in 6..=12 {
            assert!(preserves_length(&counterexample_t1(n).unwrap().result, 1).unwrap());
            for l in 2..=n - 2 {
                if let Ok(d) = counterexample_tl(n, l) {
                    assert!(preserves_length(&d.result, l).unwrap(), "{n} {l}");
                }
            }
        }
    }
}
