//! Exhaustive checkers for the re-representation facts used when a
//! congruence condition has to be forced onto a representation.
//!
//! Each checker first tests its hypothesis; an input outside the hypothesis
//! yields [`LemmaOutcome::HypothesisNotMet`], which is not a failure.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LemmaOutcome {
    HypothesisNotMet,
    Holds,
    Violated,
}

impl LemmaOutcome {
    fn from_search(found: bool) -> Self {
        if found {
            LemmaOutcome::Holds
        } else {
            LemmaOutcome::Violated
        }
    }
}

fn isqrt(n: i64) -> i64 {
    super::isqrt(n)
}

/// All `(x, y)` with `x, y >= 0` and `x^2 + m y^2 = w`.
fn binary_reps(w: i64, m: i64) -> Vec<(i64, i64)> {
    if w < 0 {
        return Vec::new();
    }
    (0..=isqrt(w / m))
        .filter_map(|y| {
            let r = w - m * y * y;
            let x = isqrt(r);
            (x * x == r).then_some((x, y))
        })
        .collect()
}

fn odd(v: i64) -> bool {
    v % 2 != 0
}

fn coprime_to_six(v: i64) -> bool {
    v % 2 != 0 && v % 3 != 0
}

/// `w = x^2 + 3y^2 ≡ 4 (mod 8)` can be rewritten with both `u, v` odd.
pub fn odd_rewrite(w: i64) -> LemmaOutcome {
    if w % 8 != 4 {
        return LemmaOutcome::HypothesisNotMet;
    }
    let reps = binary_reps(w, 3);
    if reps.is_empty() {
        return LemmaOutcome::HypothesisNotMet;
    }
    LemmaOutcome::from_search(reps.iter().any(|&(u, v)| odd(u) && odd(v)))
}

/// `w = x^2 + 3y^2` with `x, y` odd and `3 ∤ x` can be rewritten with
/// `u, v` both prime to 6.
pub fn coprime_six_rewrite(w: i64) -> LemmaOutcome {
    let reps = binary_reps(w, 3);
    if !reps.iter().any(|&(x, y)| odd(x) && odd(y) && x % 3 != 0) {
        return LemmaOutcome::HypothesisNotMet;
    }
    LemmaOutcome::from_search(
        reps.iter()
            .any(|&(u, v)| coprime_to_six(u) && coprime_to_six(v)),
    )
}

/// Positive `w = x^2 + m y^2`, `m ∈ {2, 5, 8}`, has a representation with
/// `u` or `v` not divisible by 3.
pub fn mod3_rewrite(w: i64, m: i64) -> LemmaOutcome {
    if ![2, 5, 8].contains(&m) || w <= 0 {
        return LemmaOutcome::HypothesisNotMet;
    }
    let reps = binary_reps(w, m);
    if reps.is_empty() {
        return LemmaOutcome::HypothesisNotMet;
    }
    LemmaOutcome::from_search(reps.iter().any(|&(u, v)| u % 3 != 0 || v % 3 != 0))
}

/// If `x, y, z` are not all divisible by 3, then `9(x^2 + y^2 + z^2)` is a
/// sum of three squares not all divisible by 3.
pub fn ninefold_rewrite(x: i64, y: i64, z: i64) -> LemmaOutcome {
    if x % 3 == 0 && y % 3 == 0 && z % 3 == 0 {
        return LemmaOutcome::HypothesisNotMet;
    }
    LemmaOutcome::from_search(primitive_triple(9 * (x * x + y * y + z * z)).is_some())
}

/// Result of running a checker over every input up to a limit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sweep {
    pub limit: i64,
    /// Inputs that met the hypothesis.
    pub checked: usize,
    pub first_violation: Option<i64>,
}

impl Sweep {
    pub fn ok(&self) -> bool {
        self.first_violation.is_none()
    }
}

fn sweep(limit: i64, check: impl Fn(i64) -> LemmaOutcome) -> Sweep {
    let mut checked = 0;
    for w in 0..=limit {
        match check(w) {
            LemmaOutcome::HypothesisNotMet => {}
            LemmaOutcome::Holds => checked += 1,
            LemmaOutcome::Violated => {
                return Sweep {
                    limit,
                    checked: checked + 1,
                    first_violation: Some(w),
                }
            }
        }
    }
    Sweep {
        limit,
        checked,
        first_violation: None,
    }
}

pub fn sweep_odd_rewrite(limit: i64) -> Sweep {
    sweep(limit, odd_rewrite)
}

pub fn sweep_coprime_six_rewrite(limit: i64) -> Sweep {
    sweep(limit, coprime_six_rewrite)
}

pub fn sweep_mod3_rewrite(limit: i64, m: i64) -> Sweep {
    sweep(limit, |w| mod3_rewrite(w, m))
}

/// Covers every triple with `x^2 + y^2 + z^2 <= limit`; the conclusion only
/// depends on the sum, so one witness triple per sum suffices.
pub fn sweep_ninefold_rewrite(limit: i64) -> Sweep {
    sweep(limit, |n| match primitive_triple(n) {
        Some((x, y, z)) => ninefold_rewrite(x, y, z),
        None => LemmaOutcome::HypothesisNotMet,
    })
}

/// Some `u <= v <= w` with `u^2 + v^2 + w^2 = n`, not all divisible by 3.
fn primitive_triple(n: i64) -> Option<(i64, i64, i64)> {
    let mut u = 0;
    while 3 * u * u <= n {
        let mut v = u;
        while u * u + 2 * v * v <= n {
            let rem = n - u * u - v * v;
            let w = isqrt(rem);
            if w * w == rem && !(u % 3 == 0 && v % 3 == 0 && w % 3 == 0) {
                return Some((u, v, w));
            }
            v += 1;
        }
        u += 1;
    }
    None
}
