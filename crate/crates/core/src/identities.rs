//! Cataloged theta-product identities and the dissection engine.
//!
//! A dissection record states
//!
//! ```text
//! f(q^i,q^j) f(q^s,q^t) f(q^u,q^v) = sum_r m_r q^{shift_r} prod f(q^{k a}, q^{k b})
//! ```
//!
//! with shifts `0..k`. Comparing coefficients of `q^{kn + shift_r}` gives
//! `R(kn + shift_r) = m_r R_r(n)`, so the left tuple is (almost) universal
//! exactly when every right tuple is.

use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coeff::{from_count, Coeff};
use crate::error::{Error, Result};
use crate::forms::{rep_series, Component, TernaryTuple};
use crate::qseries::QSeries;
use crate::theta::{theta_product, ThetaFactor};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhsTerm {
    pub m: i64,
    pub shift: usize,
    pub factors: Vec<ThetaFactor>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRecord {
    pub id: String,
    pub k: usize,
    pub lhs: Vec<ThetaFactor>,
    pub rhs: Vec<RhsTerm>,
    pub source: String,
}

impl IdentityRecord {
    fn malformed(&self, reason: impl Into<String>) -> Error {
        Error::MalformedRecord {
            id: self.id.clone(),
            reason: reason.into(),
        }
    }

    /// Structural checks shared by every record: positive multipliers,
    /// distinct shifts below `k`, and right-hand exponents divisible by `k`.
    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(self.malformed("k must be positive"));
        }
        if self.lhs.is_empty() || self.rhs.is_empty() {
            return Err(self.malformed("both sides need at least one term"));
        }
        let mut seen = vec![false; self.k];
        for term in &self.rhs {
            if term.m < 1 {
                return Err(self.malformed(format!("multiplier {} is not positive", term.m)));
            }
            if term.shift >= self.k || std::mem::replace(&mut seen[term.shift], true) {
                return Err(self.malformed(format!("shift {} repeated or >= k", term.shift)));
            }
            if let Some(f) = term
                .factors
                .iter()
                .find(|f| f.divided_by(self.k as i64).is_none())
            {
                return Err(Error::MalformedRecord {
                    id: self.id.clone(),
                    reason: format!("{f} not divisible by k = {}", self.k),
                });
            }
        }
        Ok(())
    }

    /// Three factors on each side and every shift `0..k` present.
    pub fn is_dissection(&self) -> bool {
        self.validate().is_ok()
            && self.lhs.len() == 3
            && self.rhs.len() == self.k
            && self.rhs.iter().all(|t| t.factors.len() == 3)
    }
}

/// A mismatch between the two sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch<T> {
    pub n: usize,
    pub lhs: T,
    pub rhs: T,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck<T> {
    pub order: usize,
    pub first_mismatch: Option<Mismatch<T>>,
}

impl<T> IdentityCheck<T> {
    pub fn ok(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

pub fn lhs_series<T: Coeff>(rec: &IdentityRecord, order: usize) -> Result<QSeries<T>> {
    theta_product(&rec.lhs, order)
}

pub fn rhs_series<T: Coeff>(rec: &IdentityRecord, order: usize) -> Result<QSeries<T>> {
    let mut acc = QSeries::zero(order);
    for term in &rec.rhs {
        if term.shift > order {
            continue;
        }
        let body = theta_product::<T>(&term.factors, order)?
            .scale(&from_count(term.m))?
            .shift(term.shift)?;
        acc = acc.add(&body)?;
    }
    Ok(acc)
}

/// Compares both sides coefficient by coefficient through `q^order`.
pub fn verify_identity<T: Coeff>(rec: &IdentityRecord, order: usize) -> Result<IdentityCheck<T>> {
    rec.validate()?;
    let lhs = lhs_series::<T>(rec, order)?;
    let rhs = rhs_series::<T>(rec, order)?;
    let first_mismatch = lhs
        .coeffs()
        .iter()
        .zip(rhs.coeffs())
        .position(|(a, b)| a != b)
        .map(|n| Mismatch {
            n,
            lhs: lhs.coeff(n).clone(),
            rhs: rhs.coeff(n).clone(),
        });
    Ok(IdentityCheck {
        order,
        first_mismatch,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DissectionComponent {
    pub shift: usize,
    pub multiplier: i64,
    pub tuple: TernaryTuple,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dissection {
    pub k: usize,
    pub lhs: TernaryTuple,
    /// Ordered by shift.
    pub components: Vec<DissectionComponent>,
}

fn tuple_of(factors: &[ThetaFactor]) -> TernaryTuple {
    let c: Vec<Component> = factors.iter().map(|&f| Component::from_factor(f)).collect();
    TernaryTuple::from_components([c[0], c[1], c[2]]).standard()
}

pub fn dissect_components(rec: &IdentityRecord) -> Result<Dissection> {
    rec.validate()?;
    if !rec.is_dissection() {
        return Err(rec.malformed("not a three-factor dissection with shifts 0..k"));
    }
    let k = rec.k as i64;
    let mut components: Vec<DissectionComponent> = rec
        .rhs
        .iter()
        .map(|term| {
            let reduced: Vec<ThetaFactor> = term
                .factors
                .iter()
                .map(|f| f.divided_by(k).expect("validated divisibility"))
                .collect();
            DissectionComponent {
                shift: term.shift,
                multiplier: term.m,
                tuple: tuple_of(&reduced),
            }
        })
        .collect();
    components.sort_by_key(|c| c.shift);
    Ok(Dissection {
        k: rec.k,
        lhs: tuple_of(&rec.lhs),
        components,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountFailure {
    pub shift: usize,
    pub n: usize,
    pub lhs_count: i64,
    pub expected: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DissectionCheck {
    pub order: usize,
    pub first_failure: Option<CountFailure>,
}

impl DissectionCheck {
    pub fn ok(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// `R(kn + shift) = m R_shift(n)` for every component and `kn + shift <= order`.
pub fn check_dissection_counts(rec: &IdentityRecord, order: usize) -> Result<DissectionCheck> {
    let d = dissect_components(rec)?;
    check_counts(&d, order)
}

pub fn check_counts(d: &Dissection, order: usize) -> Result<DissectionCheck> {
    let lhs = rep_series::<i64>(&d.lhs, order)?;
    for c in &d.components {
        if c.shift > order {
            continue;
        }
        let part = lhs.extract_progression(d.k, c.shift)?;
        let expected = rep_series::<i64>(&c.tuple, part.order())?.scale(&c.multiplier)?;
        if let Some(n) = (0..=part.order()).find(|&n| part.coeff(n) != expected.coeff(n)) {
            return Ok(DissectionCheck {
                order,
                first_failure: Some(CountFailure {
                    shift: c.shift,
                    n,
                    lhs_count: *part.coeff(n),
                    expected: *expected.coeff(n),
                }),
            });
        }
    }
    Ok(DissectionCheck {
        order,
        first_failure: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentGaps {
    pub shift: usize,
    pub tuple: TernaryTuple,
    pub gaps: Vec<usize>,
}

/// Gap sets of both sides of a dissection and whether they correspond.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferReport {
    pub k: usize,
    pub lhs: TernaryTuple,
    /// Components are scanned through `bound`, the left tuple through `k(bound+1) - 1`.
    pub bound: usize,
    pub lhs_bound: usize,
    pub lhs_gaps: Vec<usize>,
    pub components: Vec<ComponentGaps>,
    /// `{k n + shift : n a gap of the component}`, sorted.
    pub mapped_gaps: Vec<usize>,
    pub consistent: bool,
}

impl TransferReport {
    pub fn lhs_universal(&self) -> bool {
        self.lhs_gaps.is_empty()
    }

    pub fn components_universal(&self) -> bool {
        self.components.iter().all(|c| c.gaps.is_empty())
    }
}

pub fn universality_transfer(rec: &IdentityRecord, bound: usize) -> Result<TransferReport> {
    transfer(&dissect_components(rec)?, bound)
}

/// Scans a dissection's tuples and checks the gap correspondence.
/// Works on any [`Dissection`], including hand-modified ones.
pub fn transfer(d: &Dissection, bound: usize) -> Result<TransferReport> {
    let lhs_bound = d.k * (bound + 1) - 1;
    let lhs_gaps = rep_series::<i64>(&d.lhs, lhs_bound)?.zeros();
    let mut components = Vec::with_capacity(d.components.len());
    let mut mapped_gaps = Vec::new();
    for c in &d.components {
        let gaps = rep_series::<i64>(&c.tuple, bound)?.zeros();
        mapped_gaps.extend(gaps.iter().map(|&n| d.k * n + c.shift));
        components.push(ComponentGaps {
            shift: c.shift,
            tuple: c.tuple,
            gaps,
        });
    }
    mapped_gaps.sort_unstable();
    let consistent = mapped_gaps == lhs_gaps;
    Ok(TransferReport {
        k: d.k,
        lhs: d.lhs,
        bound,
        lhs_bound,
        lhs_gaps,
        components,
        mapped_gaps,
        consistent,
    })
}

/// `f(a, ab^2) f(b, a^2 b) = f(a, b) psi(ab)` at `a = q^alpha`, `b = q^beta`.
pub fn psi_product_record(alpha: i64, beta: i64) -> Result<IdentityRecord> {
    let f = ThetaFactor::new;
    Ok(IdentityRecord {
        id: format!("psi-product-{alpha}-{beta}"),
        k: 1,
        lhs: vec![f(alpha, alpha + 2 * beta)?, f(beta, 2 * alpha + beta)?],
        rhs: vec![RhsTerm {
            m: 1,
            shift: 0,
            factors: vec![f(alpha, beta)?, f(alpha + beta, 3 * (alpha + beta))?],
        }],
        source: "f(a,ab^2) f(b,a^2 b) = f(a,b) psi(ab)".into(),
    })
}

pub fn verify_psi_product(alpha: i64, beta: i64, order: usize) -> Result<IdentityCheck<i64>> {
    verify_identity(&psi_product_record(alpha, beta)?, order)
}

/// An ordered list of identity records.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    records: Vec<IdentityRecord>,
}

const DEFAULT_CATALOG: &str = include_str!("../catalog/identities.json");

impl Catalog {
    pub fn bundled() -> Self {
        Self::parse(DEFAULT_CATALOG).expect("bundled identity catalog is valid")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let records: Vec<IdentityRecord> = serde_json::from_str(text)?;
        for r in &records {
            r.validate()?;
        }
        let mut ids: Vec<&str> = records.iter().map(|r| r.id.as_str()).collect();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Catalog(format!("duplicate id {:?}", w[0])));
        }
        Ok(Self { records })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Catalog(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn records(&self) -> &[IdentityRecord] {
        &self.records
    }

    pub fn get(&self, id: &str) -> Result<&IdentityRecord> {
        self.records
            .iter()
            .find(|r| r.id == id)
            .ok_or_else(|| Error::UnknownIdentity(id.to_owned()))
    }

    pub fn dissections(&self) -> impl Iterator<Item = &IdentityRecord> {
        self.records.iter().filter(|r| r.is_dissection())
    }

    /// Verifies every record; results follow catalog order.
    pub fn verify_all(&self, order: usize) -> Vec<(String, Result<IdentityCheck<i64>>)> {
        self.records
            .par_iter()
            .map(|r| (r.id.clone(), verify_identity(r, order)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(i: i64, j: i64) -> ThetaFactor {
        ThetaFactor::new(i, j).unwrap()
    }

    fn tuple(a: [i64; 6]) -> TernaryTuple {
        TernaryTuple::from_array(a).unwrap()
    }

    fn square_split(m: i64) -> IdentityRecord {
        IdentityRecord {
            id: "phi-2-dissection".into(),
            k: 2,
            lhs: vec![f(1, 1)],
            rhs: vec![
                RhsTerm {
                    m: 1,
                    shift: 0,
                    factors: vec![f(4, 4)],
                },
                RhsTerm {
                    m,
                    shift: 1,
                    factors: vec![f(8, 24)],
                },
            ],
            source: String::new(),
        }
    }

    #[test]
    fn square_split_verifies() {
        let check = verify_identity::<i64>(&square_split(2), 1000).unwrap();
        assert!(check.ok());
    }

    #[test]
    fn corrupted_multiplier_detected() {
        let check = verify_identity::<i64>(&square_split(3), 1000).unwrap();
        assert_eq!(
            check.first_mismatch,
            Some(Mismatch {
                n: 1,
                lhs: 2,
                rhs: 3
            })
        );
    }

    #[test]
    fn trivial_dissection() {
        let lhs = vec![f(1, 3), f(2, 4), f(6, 4)];
        let rec = IdentityRecord {
            id: "trivial".into(),
            k: 1,
            lhs: lhs.clone(),
            rhs: vec![RhsTerm {
                m: 1,
                shift: 0,
                factors: lhs,
            }],
            source: String::new(),
        };
        let d = dissect_components(&rec).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].tuple, d.lhs);
        assert_eq!(d.lhs, tuple([10, 2, 6, 2, 4, 2]));
        assert!(check_dissection_counts(&rec, 500).unwrap().ok());
    }

    #[test]
    fn malformed_records() {
        let mut rec = square_split(2);
        rec.rhs[1].factors = vec![f(7, 24)];
        assert!(matches!(rec.validate(), Err(Error::MalformedRecord { .. })));
        let mut rec = square_split(2);
        rec.rhs[1].shift = 0;
        assert!(rec.validate().is_err());
        let mut rec = square_split(2);
        rec.rhs[0].m = 0;
        assert!(rec.validate().is_err());
        // one lhs factor: valid identity, not a dissection
        assert!(square_split(2).validate().is_ok());
        assert!(dissect_components(&square_split(2)).is_err());
    }

    #[test]
    fn psi_products() {
        for (a, b, n) in [(2, 4, 2000), (1, 1, 500), (3, 1, 2000), (1, 2, 2000)] {
            assert!(verify_psi_product(a, b, n).unwrap().ok(), "({a},{b})");
        }
    }

    #[test]
    fn bundled_catalog_loads() {
        let c = Catalog::bundled();
        assert!(c.get("psi1-x2-f6.4").is_ok());
        assert!(matches!(c.get("nope"), Err(Error::UnknownIdentity(_))));
        let dup = format!(
            "[{0},{0}]",
            serde_json::to_string(c.get("psi1-x2-f6.4").unwrap()).unwrap()
        );
        assert!(Catalog::parse(&dup).is_err());
    }
}
