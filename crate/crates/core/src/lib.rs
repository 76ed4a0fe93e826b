//! Exact q-series workbench for ternary sums of generalized polygonal numbers.
//!
//! Truncated power series with overflow-checked integer coefficients, Ramanujan
//! theta products, representation counting, universality scans, dissection
//! identities and diagonal ternary forms.
//!
//! ```
//! use univsum::{is_universal_up_to, TernaryTuple};
//!
//! let t: TernaryTuple = "(8,2,5,1,3,1)".parse().unwrap();
//! assert!(is_universal_up_to(&t, 2000).unwrap().is_universal());
//! ```

pub mod claims;
pub mod coeff;
mod error;
pub mod forms;
pub mod identities;
pub mod qseries;
pub mod reduction;
pub mod ternary;
pub mod theta;

use num_bigint::BigInt;

pub use coeff::Coeff;
pub use error::{Error, Result};
pub use forms::{
    equivalent_up_to, exceptional_set, is_universal_up_to, rep_series, scan_many,
    sums_equivalent_up_to, Component, ExceptionalSet, TernaryTuple, UniversalityScan,
};
pub use identities::{
    check_dissection_counts, dissect_components, universality_transfer, verify_identity, Catalog,
    IdentityRecord, RhsTerm,
};
pub use qseries::QSeries;
pub use reduction::{reduce_to_squares, SquareReduction, SquareTerm};
pub use ternary::{
    constrained_rep_exists, empirical_excluded, reduction_bridge, rep_series_diag, verify_dickson,
    DiagonalForm, ExclusionRule, RuleRecord,
};
pub use theta::{named_series, theta_product, theta_series, NamedTheta, ThetaFactor};

/// Series with 64-bit coefficients; enough for every count at desk scale.
pub type Series = QSeries<i64>;
pub type WideSeries = QSeries<i128>;
pub type BigSeries = QSeries<BigInt>;
