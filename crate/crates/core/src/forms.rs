//! Ternary sums `x(a1 x + a2)/2 + y(b1 y + b2)/2 + z(c1 z + c2)/2`,
//! their representation counts and bounded universality scans.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::qseries::QSeries;
use crate::theta::{theta_product, ThetaFactor};

/// One quadratic component `x(ax + b)/2` with `a > 0` and `a ≡ b (mod 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Component {
    pub a: i64,
    pub b: i64,
}

impl Component {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a <= 0 || (a - b) % 2 != 0 {
            return Err(Error::InvalidComponent { a, b });
        }
        Ok(Self { a, b })
    }

    pub fn value(&self, x: i64) -> i64 {
        component_value(self.a, self.b, x)
    }

    /// The theta factor `f(q^{(a+b)/2}, q^{(a-b)/2})` generating this component.
    pub fn factor(&self) -> ThetaFactor {
        ThetaFactor::new((self.a + self.b) / 2, (self.a - self.b) / 2)
            .expect("a > 0 gives i + j > 0")
    }

    pub fn from_factor(f: ThetaFactor) -> Self {
        let (a, b) = f.component();
        Self { a, b }
    }

    /// `x -> -x` flips the sign of `b` without changing the value set.
    pub fn canonical(&self) -> Self {
        Self {
            a: self.a,
            b: self.b.abs(),
        }
    }
}

/// `x(a x + b)/2`, exact.
pub fn component_value(a: i64, b: i64, x: i64) -> i64 {
    x * (a * x + b) / 2
}

/// The generalized `m`-gonal number `((m-2)x^2 - (m-4)x)/2`.
pub fn polygonal(m: i64, x: i64) -> Result<i64> {
    if m < 3 {
        return Err(Error::InvalidPolygonalOrder(m));
    }
    Ok(((m - 2) * x * x - (m - 4) * x) / 2)
}

/// The tuple `(a1, a2, b1, b2, c1, c2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TernaryTuple {
    components: [Component; 3],
}

impl TernaryTuple {
    pub fn new(a1: i64, a2: i64, b1: i64, b2: i64, c1: i64, c2: i64) -> Result<Self> {
        Ok(Self {
            components: [
                Component::new(a1, a2)?,
                Component::new(b1, b2)?,
                Component::new(c1, c2)?,
            ],
        })
    }

    pub fn from_array(t: [i64; 6]) -> Result<Self> {
        Self::new(t[0], t[1], t[2], t[3], t[4], t[5])
    }

    pub fn from_components(components: [Component; 3]) -> Self {
        Self { components }
    }

    pub fn components(&self) -> &[Component; 3] {
        &self.components
    }

    pub fn to_array(&self) -> [i64; 6] {
        let [x, y, z] = self.components;
        [x.a, x.b, y.a, y.b, z.a, z.b]
    }

    pub fn value(&self, x: i64, y: i64, z: i64) -> i64 {
        let [cx, cy, cz] = self.components;
        cx.value(x) + cy.value(y) + cz.value(z)
    }

    /// All linear coefficients made nonnegative.
    pub fn canonical(&self) -> Self {
        Self {
            components: self.components.map(|c| c.canonical()),
        }
    }

    /// Canonical, with components ordered by descending `(a, b)`.
    pub fn standard(&self) -> Self {
        let mut components = self.canonical().components;
        components.sort_by(|x, y| y.cmp(x));
        Self { components }
    }

    pub fn factors(&self) -> [ThetaFactor; 3] {
        self.components.map(|c| c.factor())
    }
}

impl fmt::Display for TernaryTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.to_array();
        write!(f, "({},{},{},{},{},{})", t[0], t[1], t[2], t[3], t[4], t[5])
    }
}

impl Serialize for TernaryTuple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_array().serialize(s)
    }
}

/// Accepts `8,6,4,2,4,2`, `(8,6,4,2,4,2)` or whitespace separated entries.
impl FromStr for TernaryTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "ternary tuple",
            input: s.to_owned(),
        };
        let nums = parse_int_list(s).ok_or_else(err)?;
        let arr: [i64; 6] = nums.try_into().map_err(|_| err())?;
        Self::from_array(arr)
    }
}

pub(crate) fn parse_int_list(s: &str) -> Option<Vec<i64>> {
    s.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().ok())
        .collect()
}

/// Representation counts `R(n) = #{(x,y,z) : value = n}` through `q^order`.
pub fn rep_series<T: Coeff>(t: &TernaryTuple, order: usize) -> Result<QSeries<T>> {
    theta_product(&t.factors(), order)
}

/// Counts for a sum of any number of components (two-variable sums included).
pub fn component_sum_series<T: Coeff>(
    components: &[Component],
    order: usize,
) -> Result<QSeries<T>> {
    let factors: Vec<ThetaFactor> = components.iter().map(|c| c.factor()).collect();
    theta_product(&factors, order)
}

/// Represented/unrepresented flags for `0..=order`.
pub fn value_set<T: Coeff>(s: &QSeries<T>) -> Vec<bool> {
    s.coeffs().iter().map(|c| !c.is_zero()).collect()
}

/// A bounded universality verdict: no claim is made past `bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalityScan {
    pub bound: usize,
    pub gaps: Vec<usize>,
}

impl UniversalityScan {
    pub fn is_universal(&self) -> bool {
        self.gaps.is_empty()
    }
}

pub fn is_universal_up_to(t: &TernaryTuple, bound: usize) -> Result<UniversalityScan> {
    let gaps = rep_series::<i64>(t, bound)?.zeros();
    Ok(UniversalityScan { bound, gaps })
}

/// Empirical exceptional set of a sum believed to be almost universal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionalSet {
    pub bound: usize,
    pub gaps: Vec<usize>,
    pub largest: Option<usize>,
    /// No gap lies in `(bound/2, bound]`. A heuristic, never a proof.
    pub stabilized: bool,
}

pub fn exceptional_set(t: &TernaryTuple, bound: usize) -> Result<ExceptionalSet> {
    Ok(exceptional_from_gaps(
        is_universal_up_to(t, bound)?.gaps,
        bound,
    ))
}

pub fn exceptional_from_gaps(gaps: Vec<usize>, bound: usize) -> ExceptionalSet {
    let largest = gaps.last().copied();
    let stabilized = largest.is_none_or(|g| g <= bound / 2);
    ExceptionalSet {
        bound,
        gaps,
        largest,
        stabilized,
    }
}

/// Equal value sets on `0..=bound`.
pub fn equivalent_up_to(t1: &TernaryTuple, t2: &TernaryTuple, bound: usize) -> Result<bool> {
    let a = value_set(&rep_series::<i64>(t1, bound)?);
    let b = value_set(&rep_series::<i64>(t2, bound)?);
    Ok(a == b)
}

/// Equal value sets of two component sums (of any length) on `0..=bound`.
pub fn sums_equivalent_up_to(lhs: &[Component], rhs: &[Component], bound: usize) -> Result<bool> {
    let a = value_set(&component_sum_series::<i64>(lhs, bound)?);
    let b = value_set(&component_sum_series::<i64>(rhs, bound)?);
    Ok(a == b)
}

/// Scans many tuples; the output order matches the input order.
pub fn scan_many(tuples: &[TernaryTuple], bound: usize) -> Vec<Result<UniversalityScan>> {
    tuples
        .par_iter()
        .map(|t| is_universal_up_to(t, bound))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Series;

    fn t(a: [i64; 6]) -> TernaryTuple {
        TernaryTuple::from_array(a).unwrap()
    }

    #[test]
    fn values() {
        assert_eq!(component_value(3, 1, 2), 7);
        assert_eq!(component_value(9, 5, 0), 0);
        assert_eq!(component_value(9, 5, -1), 2);
        assert_eq!(polygonal(5, 2).unwrap(), 5);
        assert_eq!(polygonal(7, 0).unwrap(), 0);
        assert_eq!(polygonal(8, -2).unwrap(), 16);
        assert!(polygonal(2, 1).is_err());
    }

    #[test]
    fn parity_enforced() {
        assert!(TernaryTuple::new(3, 0, 1, 1, 1, 1).is_err());
        assert!(TernaryTuple::new(0, 0, 1, 1, 1, 1).is_err());
        assert!(TernaryTuple::new(3, 3, 1, -1, 2, 4).is_ok());
    }

    #[test]
    fn parse_and_display() {
        let x: TernaryTuple = "(8,6,4,2,4,2)".parse().unwrap();
        assert_eq!(x, t([8, 6, 4, 2, 4, 2]));
        assert_eq!(x.to_string(), "(8,6,4,2,4,2)");
        assert_eq!("8 6 4 2 4 2".parse::<TernaryTuple>().unwrap(), x);
        assert!("8,6,4,2,4".parse::<TernaryTuple>().is_err());
        assert!("8,5,4,2,4,2".parse::<TernaryTuple>().is_err());
    }

    #[test]
    fn standard_order() {
        assert_eq!(t([3, -1, 10, 2, 6, 2]).standard(), t([10, 2, 6, 2, 3, 1]));
    }

    #[test]
    fn rep_counts() {
        let r: Series = rep_series(&t([3, 1, 3, 1, 3, 1]), 10).unwrap();
        assert_eq!(*r.coeff(0), 1);
        let r: Series = rep_series(&t([2, 0, 2, 0, 2, 0]), 10).unwrap();
        assert_eq!(*r.coeff(7), 0);
        assert_eq!(*r.coeff(1), 6);
        let r: Series = rep_series(&t([4, 2, 4, 2, 4, 2]), 10).unwrap();
        assert_eq!(*r.coeff(1), 3);
    }

    #[test]
    fn universality_small() {
        let scan = is_universal_up_to(&t([4, 2, 4, 2, 4, 2]), 10_000).unwrap();
        assert!(scan.is_universal());
        let scan = is_universal_up_to(&t([2, 0, 2, 0, 2, 0]), 100).unwrap();
        assert!(scan.gaps.contains(&7));
        assert_eq!(scan.bound, 100);
    }

    #[test]
    fn exceptional_three_squares() {
        let ex = exceptional_set(&t([2, 0, 2, 0, 2, 0]), 100).unwrap();
        assert_eq!(
            ex.gaps,
            vec![7, 15, 23, 28, 31, 39, 47, 55, 60, 63, 71, 79, 87, 92, 95]
        );
        assert_eq!(ex.largest, Some(95));
        assert!(!ex.stabilized);
        let ex = exceptional_set(&t([4, 2, 4, 2, 4, 2]), 100).unwrap();
        assert!(ex.gaps.is_empty() && ex.stabilized && ex.largest.is_none());
    }

    #[test]
    fn reflexive_equivalence() {
        let x = t([8, 6, 4, 2, 4, 2]);
        assert!(equivalent_up_to(&x, &x, 1000).unwrap());
        assert!(!equivalent_up_to(&x, &t([2, 0, 2, 0, 2, 0]), 1000).unwrap());
    }

    #[test]
    fn scan_many_keeps_order() {
        let ts = [t([2, 0, 2, 0, 2, 0]), t([4, 2, 4, 2, 4, 2])];
        let out = scan_many(&ts, 50);
        assert!(!out[0].as_ref().unwrap().is_universal());
        assert!(out[1].as_ref().unwrap().is_universal());
    }
}
