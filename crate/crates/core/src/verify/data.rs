use crate::algebra::ElementSet;
use crate::transform::Transformation;

/// Generating sets of `T_n(1)` for `n = 2..=5`.
pub fn listed_generators(n: usize) -> Option<ElementSet> {
    let lines: &[&str] = match n {
        2 => &["2 1"],
        3 => &["2 1 2", "3 2 1"],
        4 => &["2 3 2 1", "3 4 3 2", "4 3 2 1"],
        5 => &["2 3 4 5 4", "3 2 1 2 3", "4 3 2 1 2", "5 4 3 2 1"],
        _ => return None,
    };
    let gens = lines
        .iter()
        .map(|l| Transformation::parse_with_degree(l, n).expect("valid generator"));
    Some(ElementSet::new(n, gens).expect("valid generator set"))
}

/// Idempotent-cubed maps in `T_n(l) \ T*_n(l)`, as `(n, l, α)`.
pub fn closing_examples() -> Vec<(usize, usize, Transformation)> {
    vec![
        (
            5,
            3,
            Transformation::new(5, &[1, 1, 3, 4, 4]).expect("valid"),
        ),
        (
            6,
            2,
            Transformation::new(6, &[1, 1, 3, 3, 5, 5]).expect("valid"),
        ),
    ]
}
