//! Symmetric bilinear pairing interface.
//!
//! Scheme code only touches groups through [`PairingGroup`] and
//! [`GroupElement`], so a curve-backed implementation can replace the
//! transparent backend without changes to the scheme.

use std::fmt;

use rand::RngCore;

use crate::error::{invalid, Result};
use crate::field::{Scalar, ScalarField};
use crate::poly::lagrange_coeffs_at_zero;

/// Element of a prime-order group written multiplicatively.
///
/// Combining elements of two different group instances panics.
pub trait GroupElement: Clone + PartialEq + Eq + fmt::Debug + Send + Sync {
    /// Group law.
    fn op(&self, rhs: &Self) -> Self;

    fn inverse(&self) -> Self;

    /// Exponentiation by a scalar of the group's order field.
    fn pow(&self, exp: &Scalar) -> Self;

    fn is_identity(&self) -> bool;

    /// Canonical fixed-width encoding.
    fn to_bytes(&self) -> Vec<u8>;

    fn div(&self, rhs: &Self) -> Self {
        self.op(&rhs.inverse())
    }
}

/// A symmetric pairing `e: G x G -> G_T` over groups of prime order `p`.
pub trait PairingGroup: Clone + PartialEq + fmt::Debug + Send + Sync {
    type G: GroupElement;
    type Gt: GroupElement;

    /// The exponent field `Z_p`.
    fn scalar_field(&self) -> &ScalarField;

    fn generator(&self) -> Self::G;

    fn g_identity(&self) -> Self::G;

    fn gt_identity(&self) -> Self::Gt;

    /// Bilinear, non-degenerate pairing. Elements foreign to this group
    /// instance are rejected.
    fn pair(&self, u: &Self::G, v: &Self::G) -> Result<Self::Gt>;

    fn random_g<R: RngCore + ?Sized>(&self, rng: &mut R) -> Self::G;

    fn random_gt<R: RngCore + ?Sized>(&self, rng: &mut R) -> Self::Gt;

    fn decode_g(&self, bytes: &[u8]) -> Result<Self::G>;

    fn decode_gt(&self, bytes: &[u8]) -> Result<Self::Gt>;

    fn g_len(&self) -> usize;

    fn gt_len(&self) -> usize;

    /// Bytes identifying this group instance, enough to rebuild it.
    fn descriptor(&self) -> Vec<u8>;

    fn from_descriptor(bytes: &[u8]) -> Result<Self>;

    /// `e(g, g)`.
    fn gt_generator(&self) -> Self::Gt {
        let g = self.generator();
        self.pair(&g, &g)
            .expect("generator belongs to its own group")
    }
}

/// Computes `prod_i value_i ^ Delta_{point_i, S}(0)` with `S` the set of
/// share points. For shares `(mu, h^{q(mu)})` of a polynomial of degree
/// `< shares.len()` this is `h^{q(0)}`.
pub fn interpolate_at_zero_in_exponent<E: GroupElement>(shares: &[(Scalar, E)]) -> Result<E> {
    if shares.is_empty() {
        return Err(invalid("no shares to interpolate"));
    }
    let points: Vec<Scalar> = shares.iter().map(|(p, _)| p.clone()).collect();
    let coeffs = lagrange_coeffs_at_zero(&points)?;
    let mut terms = shares.iter().zip(&coeffs).map(|((_, v), c)| v.pow(c));
    let first = terms.next().expect("non-empty");
    Ok(terms.fold(first, |acc, t| acc.op(&t)))
}
