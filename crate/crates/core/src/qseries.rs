//! Truncated power series with exact integer coefficients.
//!
//! A [`QSeries`] of order `N` holds the coefficients of `q^0 ..= q^N`. Binary
//! operations require equal orders; nothing is re-truncated implicitly.

use crate::coeff::Coeff;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> QSeries<T> {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = T::one();
        s
    }

    /// `c q^exponent`, or the zero series when the exponent is past `order`.
    pub fn monomial(exponent: usize, c: T, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = c;
        }
        s
    }

    /// The order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(Self { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`. Panics when `n > order`.
    pub fn coeff(&self, n: usize) -> &T {
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&T> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn nonzero_terms(&self) -> impl Iterator<Item = (usize, &T)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Exponents whose coefficient vanishes, ascending.
    pub fn zeros(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_zero())
            .map(|(n, _)| n)
            .collect()
    }

    /// Explicitly drops every term above `order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: order,
            });
        }
        Ok(Self {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .map(|(n, (a, b))| a.checked_add(b).ok_or(Error::Overflow { index: n }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .map(|(n, (a, b))| a.checked_sub(b).ok_or(Error::Overflow { index: n }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { coeffs })
    }

    pub fn scale(&self, c: &T) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, a)| a.checked_mul(c).ok_or(Error::Overflow { index: n }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { coeffs })
    }

    /// Multiplies by `q^d`, dropping the `d` highest terms.
    pub fn shift(&self, d: usize) -> Result<Self> {
        let order = self.order();
        if d > order {
            return Err(Error::ShiftOutOfRange { shift: d, order });
        }
        let mut coeffs = vec![T::zero(); d];
        coeffs.extend_from_slice(&self.coeffs[..=order - d]);
        Ok(Self { coeffs })
    }

    /// Cauchy product truncated at the common order.
    ///
    /// The outer loop runs over the nonzero terms of the sparser operand, so
    /// a theta series with `O(sqrt N)` terms times a dense series costs
    /// `O(N sqrt N)`, and two theta series cost the product of their supports.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let order = self.order();
        let lhs: Vec<(usize, &T)> = self.nonzero_terms().collect();
        let rhs: Vec<(usize, &T)> = other.nonzero_terms().collect();
        let (outer, inner, inner_dense) = if lhs.len() <= rhs.len() {
            (lhs, rhs, other)
        } else {
            (rhs, lhs, self)
        };

        let mut acc = vec![T::zero(); order + 1];
        if outer.is_empty() {
            return Ok(Self { coeffs: acc });
        }

        if products_in_bound(&outer, &inner) {
            if inner.len() * 4 > order + 1 {
                for &(e, c) in &outer {
                    T::axpy_in_bound(&mut acc[e..], &inner_dense.coeffs[..=order - e], c);
                }
            } else {
                for &(e, c) in &outer {
                    for &(f, d) in &inner {
                        if e + f > order {
                            break;
                        }
                        acc[e + f].mul_add_in_bound(c, d);
                    }
                }
            }
        } else {
            for &(e, c) in &outer {
                for &(f, d) in &inner {
                    let n = e + f;
                    if n > order {
                        break;
                    }
                    let p = c.checked_mul(d).ok_or(Error::Overflow { index: n })?;
                    acc[n] = acc[n].checked_add(&p).ok_or(Error::Overflow { index: n })?;
                }
            }
        }
        Ok(Self { coeffs: acc })
    }

    /// The sub-series `sum_n c(k n + r) q^n`.
    pub fn extract_progression(&self, k: usize, r: usize) -> Result<Self> {
        let order = self.order();
        if k == 0 || r >= k || r > order {
            return Err(Error::BadProgression {
                modulus: k,
                residue: r,
                order,
            });
        }
        let coeffs = self.coeffs[r..].iter().step_by(k).cloned().collect();
        Ok(Self { coeffs })
    }
}

/// True when the L1 norms of both operands multiply to something representable,
/// which bounds every partial sum of the product.
fn products_in_bound<T: Coeff>(outer: &[(usize, &T)], inner: &[(usize, &T)]) -> bool {
    let Some(max) = T::bound() else {
        return true;
    };
    let l1 = |terms: &[(usize, &T)]| -> Option<T> {
        terms.iter().try_fold(T::zero(), |acc, (_, c)| {
            let abs = if c.is_negative() {
                T::zero().checked_sub(c)?
            } else {
                (*c).clone()
            };
            acc.checked_add(&abs)
        })
    };
    match (l1(outer), l1(inner)) {
        (Some(a), Some(b)) => a.checked_mul(&b).is_some_and(|p| p <= max),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Series;

    fn s(v: &[i64]) -> Series {
        Series::from_coeffs(v.to_vec()).unwrap()
    }

    #[test]
    fn add_pointwise() {
        assert_eq!(s(&[1, 1, 0]).add(&s(&[0, 1, 2])).unwrap(), s(&[1, 2, 2]));
        let x = s(&[3, -1, 4]);
        assert_eq!(x.add(&Series::zero(2)).unwrap(), x);
        // triangular numbers plus squares up to 3
        assert_eq!(
            s(&[1, 1, 0, 1]).add(&s(&[1, 2, 0, 0])).unwrap(),
            s(&[2, 3, 0, 1])
        );
    }

    #[test]
    fn add_order_mismatch() {
        assert_eq!(
            s(&[1]).add(&s(&[1, 2])),
            Err(Error::OrderMismatch { left: 0, right: 1 })
        );
    }

    #[test]
    fn scale_and_shift() {
        assert_eq!(s(&[1, 1, 0]).scale(&2).unwrap(), s(&[2, 2, 0]));
        assert_eq!(s(&[1, 1, 0, 1]).scale(&4).unwrap(), s(&[4, 4, 0, 4]));
        let x = s(&[7, 8]);
        assert_eq!(x.scale(&1).unwrap(), x);

        assert_eq!(s(&[1, 2, 3]).shift(1).unwrap(), s(&[0, 1, 2]));
        assert_eq!(x.shift(0).unwrap(), x);
        assert_eq!(s(&[1, 1, 0, 1, 0]).shift(2).unwrap(), s(&[0, 0, 1, 1, 0]));
        assert_eq!(
            s(&[1, 2]).shift(2),
            Err(Error::ShiftOutOfRange { shift: 2, order: 1 })
        );
    }

    #[test]
    fn scale_overflow() {
        assert_eq!(
            s(&[0, i64::MAX]).scale(&2),
            Err(Error::Overflow { index: 1 })
        );
    }

    #[test]
    fn mul_small() {
        let psi = s(&[1, 1, 0, 1, 0, 0, 1]);
        let sq = psi.mul(&psi).unwrap();
        assert_eq!(*sq.coeff(0), 1);
        assert_eq!(*sq.coeff(1), 2);
        let x = s(&[2, -1, 5, 0, 3, 0, 0]);
        assert_eq!(x.mul(&Series::one(6)).unwrap(), x);
    }

    #[test]
    fn mul_overflow_is_reported() {
        let big = s(&[i64::MAX / 2, 3, 0]);
        let err = big.mul(&s(&[3, 0, 0])).unwrap_err();
        assert_eq!(err, Error::Overflow { index: 0 });
        // bound check fails but the product itself fits
        let ok = s(&[i64::MAX / 2, 0, 0]).mul(&s(&[1, 0, 1])).unwrap();
        assert_eq!(ok.coeffs(), &[i64::MAX / 2, 0, i64::MAX / 2]);
    }

    #[test]
    fn progression() {
        let phi = s(&[1, 2, 0, 0, 2, 0, 0, 0, 0, 2]);
        assert_eq!(phi.extract_progression(2, 1).unwrap(), s(&[2, 0, 0, 0, 2]));
        assert_eq!(phi.extract_progression(1, 0).unwrap(), phi);
        assert_eq!(
            s(&[5, 6, 7, 8]).extract_progression(2, 0).unwrap(),
            s(&[5, 7])
        );
        assert!(phi.extract_progression(2, 2).is_err());
        assert!(phi.extract_progression(0, 0).is_err());
    }

    #[test]
    fn empty_rejected() {
        assert_eq!(Series::from_coeffs(vec![]), Err(Error::EmptySeries));
    }
}
