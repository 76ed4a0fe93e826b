//! Published tuple lists that the workbench reproduces.
//!
//! Tuples use the six-entry convention `(a1, a2, b1, b2, c1, c2)` for
//! `x(a1 x + a2)/2 + y(b1 y + b2)/2 + z(c1 z + c2)/2`.

use crate::forms::{Component, TernaryTuple};

/// Universal sums obtained from theta-function dissections.
pub const UNIVERSAL_BY_DISSECTION: [[i64; 6]; 34] = [
    [8, 2, 5, 1, 3, 1],
    [8, 2, 6, 2, 3, 1],
    [8, 2, 6, 4, 4, 2],
    [8, 2, 6, 4, 6, 2],
    [8, 2, 7, 1, 3, 1],
    [8, 4, 4, 0, 3, 1],
    [8, 4, 6, 4, 4, 0],
    [8, 6, 5, 1, 3, 1],
    [8, 6, 6, 4, 4, 2],
    [8, 6, 6, 4, 6, 2],
    [8, 6, 7, 1, 3, 1],
    [9, 5, 4, 2, 2, 0],
    [9, 5, 6, 2, 3, 1],
    [9, 5, 8, 4, 3, 1],
    [9, 7, 6, 4, 3, 1],
    [9, 7, 8, 4, 4, 2],
    [9, 1, 3, 1, 2, 0],
    [9, 5, 3, 1, 2, 0],
    [9, 7, 3, 1, 2, 0],
    [9, 1, 5, 1, 3, 1],
    [9, 5, 5, 1, 3, 1],
    [9, 7, 5, 1, 3, 1],
    [9, 1, 5, 3, 3, 1],
    [9, 5, 5, 3, 3, 1],
    [9, 7, 5, 3, 3, 1],
    [12, 6, 6, 4, 2, 0],
    [12, 6, 6, 4, 4, 2],
    [12, 6, 8, 4, 6, 4],
    [12, 8, 4, 2, 3, 1],
    [12, 8, 6, 4, 6, 2],
    [12, 8, 9, 3, 3, 1],
    [12, 8, 12, 6, 3, 1],
    [16, 8, 6, 2, 2, 0],
    [16, 8, 8, 4, 6, 4],
];

/// Universal sums proved through diagonal ternary forms, grouped by the
/// leading component.
pub const UNIVERSAL_BY_FORMS_LEAD8: [[i64; 6]; 14] = [
    [8, 2, 3, 1, 2, 0],
    [8, 2, 3, 1, 3, 1],
    [8, 2, 4, 2, 2, 0],
    [8, 2, 4, 2, 4, 0],
    [8, 2, 5, 1, 4, 2],
    [8, 2, 5, 3, 5, 1],
    [8, 4, 6, 4, 6, 2],
    [8, 4, 8, 2, 3, 1],
    [8, 4, 8, 4, 6, 4],
    [8, 6, 3, 1, 2, 0],
    [8, 6, 4, 2, 4, 0],
    [8, 6, 4, 2, 4, 2],
    [8, 6, 5, 1, 4, 2],
    [8, 6, 8, 4, 3, 1],
];

pub const UNIVERSAL_BY_FORMS_LEAD9: [[i64; 6]; 13] = [
    [9, 1, 4, 2, 3, 1],
    [9, 3, 9, 1, 3, 1],
    [9, 5, 4, 2, 4, 2],
    [9, 5, 5, 3, 5, 1],
    [9, 5, 8, 4, 2, 0],
    [9, 5, 9, 3, 3, 1],
    [9, 7, 4, 2, 4, 2],
    [9, 7, 5, 3, 5, 1],
    [9, 7, 8, 4, 2, 0],
    [9, 1, 3, 1, 3, 1],
    [9, 5, 3, 1, 3, 1],
    [9, 7, 3, 1, 3, 1],
    [10, 6, 10, 2, 6, 4],
];

pub const UNIVERSAL_BY_FORMS_LEAD12: [[i64; 6]; 11] = [
    [12, 4, 3, 1, 2, 0],
    [12, 4, 6, 4, 6, 2],
    [12, 8, 3, 1, 3, 1],
    [12, 6, 8, 2, 3, 1],
    [12, 6, 8, 6, 3, 1],
    [12, 8, 3, 1, 2, 0],
    [12, 8, 5, 3, 5, 1],
    [12, 8, 4, 2, 4, 2],
    [12, 8, 8, 4, 2, 0],
    [12, 8, 8, 4, 3, 1],
    [12, 8, 12, 4, 2, 0],
];

pub const UNIVERSAL_BY_FORMS_LEAD16: [[i64; 6]; 6] = [
    [16, 8, 6, 4, 4, 0],
    [16, 8, 6, 4, 6, 2],
    [18, 6, 6, 4, 6, 2],
    [20, 10, 5, 1, 4, 2],
    [20, 10, 5, 3, 4, 2],
    [24, 12, 6, 2, 2, 0],
];

/// All form-theoretic groups in order.
pub const UNIVERSAL_BY_FORMS: [&[[i64; 6]]; 4] = [
    &UNIVERSAL_BY_FORMS_LEAD8,
    &UNIVERSAL_BY_FORMS_LEAD9,
    &UNIVERSAL_BY_FORMS_LEAD12,
    &UNIVERSAL_BY_FORMS_LEAD16,
];

/// Almost universal sums; no exceptional sets are published for these.
pub const ALMOST_UNIVERSAL: [[i64; 6]; 10] = [
    [6, 0, 3, 3, 3, 1],
    [3, 3, 3, 1, 6, 4],
    [6, 0, 4, 4, 3, 1],
    [4, 4, 3, 1, 6, 4],
    [4, 0, 6, 0, 3, 1],
    [4, 0, 3, 1, 6, 4],
    [2, 2, 6, 2, 3, 1],
    [2, 2, 6, 6, 3, 1],
    [4, 0, 6, 2, 3, 1],
    [4, 0, 6, 6, 3, 1],
];

/// Universal `a T(x) + b T(y) + c T(z)` with `a <= b <= c`.
pub const TRIANGULAR_UNIVERSAL: [[i64; 3]; 7] = [
    [1, 1, 1],
    [1, 1, 2],
    [1, 1, 4],
    [1, 1, 5],
    [1, 2, 2],
    [1, 2, 3],
    [1, 2, 4],
];

/// `(b, c)` with `p5(x) + b p5(y) + c p5(z)` universal.
pub const PENTAGONAL_PAIRS: [(i64, i64); 20] = [
    (1, 1),
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (1, 8),
    (1, 9),
    (1, 10),
    (2, 2),
    (2, 3),
    (2, 4),
    (2, 6),
    (2, 8),
    (3, 3),
    (3, 4),
    (3, 6),
    (3, 7),
    (3, 8),
    (3, 9),
];

pub fn triangular_tuple(a: i64, b: i64, c: i64) -> TernaryTuple {
    TernaryTuple::from_array([a, a, b, b, c, c]).expect("positive coefficients")
}

pub fn pentagonal_tuple(b: i64, c: i64) -> TernaryTuple {
    TernaryTuple::from_array([3, 1, 3 * b, b, 3 * c, c]).expect("positive coefficients")
}

pub fn tuples(list: &[[i64; 6]]) -> Vec<TernaryTuple> {
    list.iter()
        .map(|&t| TernaryTuple::from_array(t).expect("listed tuples are valid"))
        .collect()
}

/// Two-variable sums with equal value sets, as component pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence {
    pub name: String,
    pub lhs: Vec<Component>,
    pub rhs: Vec<Component>,
}

fn comps(list: &[(i64, i64)]) -> Vec<Component> {
    list.iter()
        .map(|&(a, b)| Component::new(a, b).expect("valid component"))
        .collect()
}

fn equivalence(name: &str, lhs: &[(i64, i64)], rhs: &[(i64, i64)]) -> Equivalence {
    Equivalence {
        name: name.to_string(),
        lhs: comps(lhs),
        rhs: comps(rhs),
    }
}

pub fn equivalences() -> Vec<Equivalence> {
    let mut out = vec![
        equivalence("T+T ~ x^2+2T", &[(1, 1), (1, 1)], &[(2, 0), (2, 2)]),
        equivalence("T+p5 ~ p5+3p5", &[(1, 1), (3, 1)], &[(3, 1), (9, 3)]),
    ];
    for (a, b) in [(2, 1), (3, 1), (4, 1), (4, 2)] {
        out.push(equivalence(
            &format!("x(ax+b)+y(ay+a-b) ~ aT+x(ax+a-2b)/2 [a={a},b={b}]"),
            &[(2 * a, 2 * b), (2 * a, 2 * a - 2 * b)],
            &[(a, a), (a, a - 2 * b)],
        ));
    }
    out.extend([
        equivalence("2p5+p8 ~ 3T+p5", &[(6, 2), (6, 4)], &[(3, 3), (3, 1)]),
        equivalence("x^2+T ~ p5+2p5", &[(2, 0), (1, 1)], &[(3, 1), (6, 2)]),
        equivalence("T+2T ~ p5+p8", &[(1, 1), (2, 2)], &[(3, 1), (6, 4)]),
        equivalence("x^2+4T ~ 4p5+p8", &[(2, 0), (4, 4)], &[(12, 4), (6, 4)]),
        equivalence(
            "T+T ~ x(5x+1)/2+y(5y+3)/2",
            &[(1, 1), (1, 1)],
            &[(5, 1), (5, 3)],
        ),
    ]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_are_valid_and_distinct() {
        let mut all: Vec<[i64; 6]> = UNIVERSAL_BY_DISSECTION.to_vec();
        for g in UNIVERSAL_BY_FORMS {
            all.extend_from_slice(g);
        }
        let n = all.len();
        assert_eq!(tuples(&all).len(), n);
        all.sort();
        all.dedup();
        assert_eq!(all.len(), n);
    }

    #[test]
    fn equivalence_count() {
        assert_eq!(equivalences().len(), 11);
    }
}
