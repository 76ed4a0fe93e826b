//! Completing the square: a ternary sum becomes a diagonal quadratic form
//! evaluated on arithmetic progressions.
//!
//! `x(ax+b)/2 = ((2ax+b)^2 - b^2)/(8a)`, so with `A = lcm(a1, b1, c1)`
//!
//! ```text
//! 8A * value + sum (A/a_i) b_i^2 = sum (A/a_i) (2 a_i x_i + b_i)^2
//! ```
//!
//! Common square factors of `2a_i` and `b_i` are pulled into the coefficient
//! and the whole identity is divided by its content.

use num_integer::Integer;
use serde::Serialize;

use crate::forms::TernaryTuple;

/// `coeff * (modulus * (x + offset) + residue)^2` with `0 <= residue < modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SquareTerm {
    pub coeff: i64,
    pub modulus: i64,
    pub residue: i64,
    /// Variable correspondence `x' = x + offset`; zero whenever the original
    /// linear coefficient already lies in `[0, modulus)`.
    pub offset: i64,
}

impl SquareTerm {
    pub fn linear(&self, x: i64) -> i64 {
        self.modulus * (x + self.offset) + self.residue
    }

    pub fn eval(&self, x: i64) -> i64 {
        let l = self.linear(x);
        self.coeff * l * l
    }
}

/// `multiplier * value(x, y, z) + constant = sum of the three square terms`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SquareReduction {
    pub multiplier: i64,
    pub constant: i64,
    /// One term per component, in tuple order.
    pub terms: [SquareTerm; 3],
}

impl SquareReduction {
    pub fn rhs(&self, x: i64, y: i64, z: i64) -> i64 {
        let [tx, ty, tz] = self.terms;
        tx.eval(x) + ty.eval(y) + tz.eval(z)
    }

    /// Coefficients of the diagonal form, in tuple order.
    pub fn form_coeffs(&self) -> [i64; 3] {
        self.terms.map(|t| t.coeff)
    }
}

pub fn reduce_to_squares(t: &TernaryTuple) -> SquareReduction {
    let comps = t.components();
    let lcm = comps.iter().fold(1i64, |acc, c| acc.lcm(&c.a));

    let mut constant = 0i64;
    let raw = comps.map(|c| {
        let weight = lcm / c.a;
        constant += weight * c.b * c.b;
        let g = (2 * c.a).gcd(&c.b);
        (weight * g * g, 2 * c.a / g, c.b / g)
    });

    let multiplier = 8 * lcm;
    let content = raw
        .iter()
        .fold(multiplier.gcd(&constant), |acc, &(d, _, _)| acc.gcd(&d));

    let terms = raw.map(|(d, m, r)| SquareTerm {
        coeff: d / content,
        modulus: m,
        residue: r.rem_euclid(m),
        offset: r.div_euclid(m),
    });
    SquareReduction {
        multiplier: multiplier / content,
        constant: constant / content,
        terms,
    }
}
