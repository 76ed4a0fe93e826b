//! Diagonal ternary forms `ax^2 + by^2 + cz^2`: excluded sets, closed-form
//! exclusion rules and congruence-constrained representations.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::forms::{rep_series, TernaryTuple};
use crate::qseries::QSeries;
use crate::reduction::reduce_to_squares;
use crate::theta::{theta_product, NamedTheta};

pub mod lemmas;

/// `ax^2 + by^2 + cz^2` with `0 < a <= b <= c`. Serialized as `[a, b, c]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[i64; 3]", into = "[i64; 3]")]
pub struct DiagonalForm {
    a: i64,
    b: i64,
    c: i64,
}

impl DiagonalForm {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if a <= 0 || b <= 0 || c <= 0 {
            return Err(Error::InvalidForm);
        }
        let mut v = [a, b, c];
        v.sort_unstable();
        Ok(Self {
            a: v[0],
            b: v[1],
            c: v[2],
        })
    }

    pub fn coeffs(&self) -> [i64; 3] {
        [self.a, self.b, self.c]
    }
}

impl TryFrom<[i64; 3]> for DiagonalForm {
    type Error = Error;

    fn try_from([a, b, c]: [i64; 3]) -> Result<Self> {
        Self::new(a, b, c)
    }
}

impl From<DiagonalForm> for [i64; 3] {
    fn from(f: DiagonalForm) -> Self {
        f.coeffs()
    }
}

impl fmt::Display for DiagonalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Counts of representations over `Z^3`, as `phi(q^a) phi(q^b) phi(q^c)`.
pub fn rep_series_diag<T: Coeff>(f: &DiagonalForm, order: usize) -> Result<QSeries<T>> {
    let factors = f
        .coeffs()
        .map(|d| NamedTheta::Phi.factor(d).expect("positive coefficient"));
    theta_product(&factors, order)
}

pub fn empirical_excluded(f: &DiagonalForm, bound: usize) -> Result<Vec<usize>> {
    Ok(rep_series_diag::<i64>(f, bound)?.zeros())
}

/// A union of progressions `{M k + rho : k >= 0}` and scaled families
/// `{u^s (v t + w) : s, t >= 0}`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ExclusionRule {
    #[serde(default)]
    pub residue_families: Vec<(u64, u64)>,
    #[serde(default)]
    pub scaled_families: Vec<(u64, u64, u64)>,
}

impl ExclusionRule {
    pub fn excludes(&self, n: u64) -> bool {
        self.residue_families
            .iter()
            .any(|&(m, rho)| n >= rho && (n - rho).is_multiple_of(m))
            || self
                .scaled_families
                .iter()
                .any(|&(u, v, w)| in_scaled_family(n, u, v, w))
    }
}

/// Strips factors of `u` one at a time, testing the residue at each level.
fn in_scaled_family(n: u64, u: u64, v: u64, w: u64) -> bool {
    let mut m = n;
    loop {
        if m >= w && (m - w).is_multiple_of(v) {
            return true;
        }
        if m == 0 || u <= 1 || !m.is_multiple_of(u) {
            return false;
        }
        m /= u;
    }
}

pub fn rule_excluded(rule: &ExclusionRule, n: u64) -> bool {
    rule.excludes(n)
}

/// An exclusion rule attached to its form, as stored in the rules catalog.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleRecord {
    pub form: DiagonalForm,
    #[serde(flatten)]
    pub rule: ExclusionRule,
    pub source: String,
}

const DEFAULT_RULES: &str = include_str!("../catalog/dickson.json");

pub fn default_rules() -> Vec<RuleRecord> {
    parse_rules(DEFAULT_RULES).expect("bundled rules catalog is valid")
}

pub fn parse_rules(text: &str) -> Result<Vec<RuleRecord>> {
    Ok(serde_json::from_str(text)?)
}

pub fn load_rules(path: &Path) -> Result<Vec<RuleRecord>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Catalog(format!("{}: {e}", path.display())))?;
    parse_rules(&text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub n: usize,
    pub empirically_excluded: bool,
    pub rule_excludes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DicksonCheck {
    pub bound: usize,
    pub disagreement: Option<Disagreement>,
}

impl DicksonCheck {
    pub fn ok(&self) -> bool {
        self.disagreement.is_none()
    }
}

/// Compares the empirical excluded set with the rule on `0..=bound`.
pub fn verify_dickson(
    f: &DiagonalForm,
    rule: &ExclusionRule,
    bound: usize,
) -> Result<DicksonCheck> {
    let series = rep_series_diag::<i64>(f, bound)?;
    let disagreement = series.coeffs().iter().enumerate().find_map(|(n, c)| {
        let empirically_excluded = *c == 0;
        let rule_excludes = rule.excludes(n as u64);
        (empirically_excluded != rule_excludes).then_some(Disagreement {
            n,
            empirically_excluded,
            rule_excludes,
        })
    });
    Ok(DicksonCheck {
        bound,
        disagreement,
    })
}

/// Allowed residues of one variable modulo `modulus`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VarConstraint {
    pub modulus: i64,
    pub allowed: Vec<i64>,
}

impl VarConstraint {
    pub fn new(modulus: i64, allowed: impl IntoIterator<Item = i64>) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        let mut allowed: Vec<i64> = allowed.into_iter().map(|r| r.rem_euclid(modulus)).collect();
        allowed.sort_unstable();
        allowed.dedup();
        Self { modulus, allowed }
    }

    pub fn any() -> Self {
        Self::new(1, [0])
    }

    pub fn allows(&self, v: i64) -> bool {
        self.allowed
            .binary_search(&v.rem_euclid(self.modulus))
            .is_ok()
    }
}

/// Per-variable residue constraints. With `sign_symmetric`, every allowed
/// residue `r` also allows `-r`, matching the freedom to replace `w` by `-w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceConstraint {
    pub vars: [VarConstraint; 3],
    pub sign_symmetric: bool,
}

impl CongruenceConstraint {
    pub fn new(vars: [VarConstraint; 3], sign_symmetric: bool) -> Self {
        let vars = if sign_symmetric {
            vars.map(|v| {
                let m = v.modulus;
                VarConstraint::new(m, v.allowed.iter().flat_map(|&r| [r, -r]))
            })
        } else {
            vars
        };
        Self {
            vars,
            sign_symmetric,
        }
    }

    pub fn unconstrained() -> Self {
        Self::new(
            [
                VarConstraint::any(),
                VarConstraint::any(),
                VarConstraint::any(),
            ],
            true,
        )
    }
}

fn isqrt(n: i64) -> i64 {
    if n < 0 {
        return -1;
    }
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Values `v` with `d v^2 <= n` that the constraint allows.
fn candidates(d: i64, n: i64, c: &VarConstraint) -> Vec<i64> {
    let reach = isqrt(n / d);
    let m = c.modulus;
    let mut out = Vec::new();
    for &r in &c.allowed {
        // smallest v >= -reach with v ≡ r (mod m)
        let mut v = -reach + (r - (-reach)).rem_euclid(m);
        while v <= reach {
            out.push(v);
            v += m;
        }
    }
    out
}

/// Exhaustive search for `n = d0 x^2 + d1 y^2 + d2 z^2` with each variable
/// meeting its constraint. Constraints pair positionally with `coeffs`.
pub fn constrained_rep_exists(
    coeffs: [i64; 3],
    n: i64,
    constraints: &CongruenceConstraint,
) -> bool {
    if n < 0 || coeffs.iter().any(|&d| d <= 0) {
        return false;
    }
    // solve for the variable with the smallest coefficient
    let solve = (0..3).min_by_key(|&i| coeffs[i]).expect("three variables");
    let [p, q] = match solve {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    };
    let xs = candidates(coeffs[p], n, &constraints.vars[p]);
    let ys = candidates(coeffs[q], n, &constraints.vars[q]);
    let dz = coeffs[solve];
    let cz = &constraints.vars[solve];
    for &x in &xs {
        let rest = n - coeffs[p] * x * x;
        if rest < 0 {
            continue;
        }
        for &y in &ys {
            let rem = rest - coeffs[q] * y * y;
            if rem < 0 || rem % dz != 0 {
                continue;
            }
            let z2 = rem / dz;
            let z = isqrt(z2);
            if z * z == z2 && (cz.allows(z) || cz.allows(-z)) {
                return true;
            }
        }
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeCheck {
    pub bound: usize,
    /// First `n` where the tuple and the constrained diagonal form disagree.
    pub witness: Option<usize>,
}

impl BridgeCheck {
    pub fn ok(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks `n` represented by `t` iff `M n + C` is represented by the reduced
/// diagonal form with every variable in its progression, for all `n <= bound`.
pub fn reduction_bridge(t: &TernaryTuple, bound: usize) -> Result<BridgeCheck> {
    let red = reduce_to_squares(t);
    let constraints = CongruenceConstraint::new(
        red.terms
            .map(|s| VarConstraint::new(s.modulus, [s.residue])),
        true,
    );
    let coeffs = red.form_coeffs();
    let rep = rep_series::<i64>(t, bound)?;
    let witness = (0..=bound).find(|&n| {
        let direct = *rep.coeff(n) != 0;
        let target = red.multiplier * n as i64 + red.constant;
        direct != constrained_rep_exists(coeffs, target, &constraints)
    });
    Ok(BridgeCheck { bound, witness })
}
