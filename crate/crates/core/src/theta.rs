//! Ramanujan's two-variable theta function specialised to powers of `q`.
//!
//! `f(q^i, q^j) = sum_{x in Z} q^{x((i+j)x + i - j)/2}`, so every factor is
//! the generating function of one quadratic component `x(ax + b)/2` with
//! `a = i + j`, `b = i - j`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeff::{from_count, Coeff};
use crate::error::{Error, Result};
use crate::qseries::QSeries;

/// The factor `f(q^i, q^j)`. Serialized as the pair `[i, j]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[i64; 2]", into = "[i64; 2]")]
pub struct ThetaFactor {
    i: i64,
    j: i64,
}

impl ThetaFactor {
    pub fn new(i: i64, j: i64) -> Result<Self> {
        if i + j <= 0 {
            return Err(Error::InvalidFactor { i, j });
        }
        Ok(Self { i, j })
    }

    pub fn i(&self) -> i64 {
        self.i
    }

    pub fn j(&self) -> i64 {
        self.j
    }

    /// `f(q^{si}, q^{sj})`, the factor with `q` replaced by `q^s`.
    pub fn scaled(&self, s: i64) -> Result<Self> {
        Self::new(self.i * s, self.j * s)
    }

    /// `f(q^{i/k}, q^{j/k})` when `k` divides both exponents.
    pub fn divided_by(&self, k: i64) -> Option<Self> {
        if k <= 0 || self.i % k != 0 || self.j % k != 0 {
            return None;
        }
        Self::new(self.i / k, self.j / k).ok()
    }

    pub fn swapped(&self) -> Self {
        Self {
            i: self.j,
            j: self.i,
        }
    }

    /// Exponent contributed by the summation index `x`.
    pub fn exponent(&self, x: i64) -> i64 {
        x * ((self.i + self.j) * x + self.i - self.j) / 2
    }

    /// `(i + j, |i - j|)`: the component `x(ax + b)/2` with the same value set.
    pub fn component(&self) -> (i64, i64) {
        (self.i + self.j, (self.i - self.j).abs())
    }
}

impl TryFrom<[i64; 2]> for ThetaFactor {
    type Error = Error;

    fn try_from([i, j]: [i64; 2]) -> Result<Self> {
        Self::new(i, j)
    }
}

impl From<ThetaFactor> for [i64; 2] {
    fn from(f: ThetaFactor) -> Self {
        [f.i, f.j]
    }
}

impl fmt::Display for ThetaFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f(q^{}, q^{})", self.i, self.j)
    }
}

/// The classical one-variable specialisations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedTheta {
    /// `phi(q) = f(q, q)`, squares.
    Phi,
    /// `psi(q) = f(q, q^3)`, triangular numbers.
    Psi,
    /// `X(q) = f(q, q^2)`, generalized pentagonal numbers.
    X,
    /// `Y(q) = f(q, q^5)`, generalized octagonal numbers.
    Y,
}

impl NamedTheta {
    pub fn factor(self, scale: i64) -> Result<ThetaFactor> {
        let (i, j) = match self {
            NamedTheta::Phi => (1, 1),
            NamedTheta::Psi => (1, 3),
            NamedTheta::X => (1, 2),
            NamedTheta::Y => (1, 5),
        };
        ThetaFactor::new(i * scale, j * scale)
    }
}

impl std::str::FromStr for NamedTheta {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi" => Ok(NamedTheta::Phi),
            "psi" => Ok(NamedTheta::Psi),
            "X" | "x" => Ok(NamedTheta::X),
            "Y" | "y" => Ok(NamedTheta::Y),
            _ => Err(Error::Parse {
                what: "theta name",
                input: s.to_owned(),
            }),
        }
    }
}

/// Summation indices `x` whose exponent lands in `0..=order`.
pub(crate) fn exponents_up_to(a: i64, b: i64, order: usize) -> impl Iterator<Item = usize> {
    // a x^2 + b x <= 2 order  =>  |x| <= (|b| + sqrt(b^2 + 8 a order)) / 2a
    let disc = (b * b) as f64 + 8.0 * a as f64 * order as f64;
    let reach = ((b.abs() as f64 + disc.sqrt()) / (2 * a) as f64).ceil() as i64 + 1;
    (-reach..=reach).filter_map(move |x| {
        let e = x * (a * x + b) / 2;
        (0..=order as i64).contains(&e).then_some(e as usize)
    })
}

/// Coefficients of `f(q^i, q^j)` through `q^order`.
///
/// Negative exponents (possible only when `i` or `j` is negative) fall
/// outside the truncated window and are dropped.
pub fn theta_series<T: Coeff>(factor: ThetaFactor, order: usize) -> QSeries<T> {
    let (a, b) = (factor.i + factor.j, factor.i - factor.j);
    let mut counts = vec![0i64; order + 1];
    for e in exponents_up_to(a, b, order) {
        counts[e] += 1;
    }
    let coeffs = counts.into_iter().map(from_count).collect();
    QSeries::from_coeffs(coeffs).expect("order + 1 coefficients")
}

pub fn named_series<T: Coeff>(name: NamedTheta, scale: i64, order: usize) -> Result<QSeries<T>> {
    Ok(theta_series(name.factor(scale)?, order))
}

pub fn factor_to_component(factor: ThetaFactor) -> (i64, i64) {
    factor.component()
}

/// Product of several theta factors.
pub fn theta_product<T: Coeff>(factors: &[ThetaFactor], order: usize) -> Result<QSeries<T>> {
    let mut series: Vec<QSeries<T>> = factors.iter().map(|&f| theta_series(f, order)).collect();
    // sparsest factors last so the dense partial product meets them
    series.sort_by_key(|s| std::cmp::Reverse(s.nonzero_terms().count()));
    let mut acc = QSeries::one(order);
    for s in &series {
        acc = acc.mul(s)?;
    }
    Ok(acc)
}
