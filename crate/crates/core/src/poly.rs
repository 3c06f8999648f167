//! Polynomials over `Z_p` and Lagrange interpolation.

use std::collections::HashSet;

use rand::RngCore;

use crate::error::{invalid, Result};
use crate::field::Scalar;

/// Polynomial stored lowest-degree first; `coeffs[0]` is the constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self> {
        let Some(first) = coeffs.first() else {
            return Err(invalid("polynomial needs at least one coefficient"));
        };
        if coeffs.iter().any(|c| c.field() != first.field()) {
            return Err(invalid("coefficients from different fields"));
        }
        Ok(Self { coeffs })
    }

    /// Random polynomial of the given degree with a fixed constant term.
    /// Non-constant coefficients are uniform over `Z_p`, zero included.
    pub fn sample<R: RngCore + ?Sized>(rng: &mut R, degree: usize, constant_term: Scalar) -> Self {
        let field = constant_term.field().clone();
        let mut coeffs = Vec::with_capacity(degree + 1);
        coeffs.push(constant_term);
        coeffs.extend((0..degree).map(|_| field.random(rng)));
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.coeffs[self.coeffs.len() - 1].clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = &(&acc * x) + c;
        }
        acc
    }
}

/// Checks that `set` is a valid interpolation set: non-empty, distinct, nonzero.
pub(crate) fn validate_point_set(set: &[Scalar]) -> Result<()> {
    if set.is_empty() {
        return Err(invalid("interpolation set is empty"));
    }
    let mut seen = HashSet::with_capacity(set.len());
    for p in set {
        if p.is_zero() {
            return Err(invalid("interpolation point 0 is reserved"));
        }
        if p.field() != set[0].field() {
            return Err(invalid("interpolation points from different fields"));
        }
        if !seen.insert(p) {
            return Err(invalid(format!("duplicate interpolation point {p}")));
        }
    }
    Ok(())
}

/// Lagrange basis coefficient `prod_{j in S, j != i} (x - j) / (i - j)`.
pub fn lagrange_coeff(i: &Scalar, set: &[Scalar], x: &Scalar) -> Result<Scalar> {
    validate_point_set(set)?;
    if !set.contains(i) {
        return Err(invalid(format!(
            "point {i} is not in the interpolation set"
        )));
    }
    let field = i.field();
    let mut num = field.one();
    let mut den = field.one();
    for j in set.iter().filter(|j| *j != i) {
        num = &num * &(x - j);
        den = &den * &(i - j);
    }
    let den_inv = den
        .inverse()
        .expect("distinct points give a nonzero denominator");
    Ok(&num * &den_inv)
}

/// Lagrange coefficients of every point of `set`, evaluated at 0.
pub(crate) fn lagrange_coeffs_at_zero(set: &[Scalar]) -> Result<Vec<Scalar>> {
    validate_point_set(set)?;
    let zero = set[0].field().zero();
    set.iter().map(|i| lagrange_coeff(i, set, &zero)).collect()
}

/// Interpolates `(point, value)` pairs and evaluates the result at `x`.
pub fn interpolate(shares: &[(Scalar, Scalar)], x: &Scalar) -> Result<Scalar> {
    let points: Vec<Scalar> = shares.iter().map(|(p, _)| p.clone()).collect();
    validate_point_set(&points)?;
    let mut acc = x.field().zero();
    for (p, v) in shares {
        acc = &acc + &(&lagrange_coeff(p, &points, x)? * v);
    }
    Ok(acc)
}
