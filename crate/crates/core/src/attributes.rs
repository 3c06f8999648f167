//! Biometric attribute sets.

use std::collections::BTreeSet;

use rand::RngCore;

use crate::error::{decode_err, invalid, Result};
use crate::field::{Scalar, ScalarField};
use crate::wire::{Reader, Writer};

/// A set of distinct, nonzero attributes, kept sorted ascending.
///
/// Point 0 is excluded because it carries the master secret in the key
/// polynomial, and distinctness keeps every Lagrange denominator invertible.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AttributeSet {
    attrs: Vec<Scalar>,
}

impl AttributeSet {
    pub fn new(mut attrs: Vec<Scalar>) -> Result<Self> {
        let Some(first) = attrs.first() else {
            return Err(invalid("attribute set is empty"));
        };
        let field = first.field().clone();
        if attrs.iter().any(|a| a.field() != &field) {
            return Err(invalid("attributes from different fields"));
        }
        if attrs.iter().any(Scalar::is_zero) {
            return Err(invalid("attribute 0 is not allowed"));
        }
        attrs.sort();
        if let Some(w) = attrs.windows(2).find(|w| w[0] == w[1]) {
            return Err(invalid(format!("duplicate attribute {}", w[0])));
        }
        Ok(Self { attrs })
    }

    pub fn from_u64s(field: &ScalarField, values: &[u64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| field.element(v)).collect())
    }

    /// Uniformly random set of `n` attributes avoiding every value of `exclude`.
    pub fn random<R: RngCore + ?Sized>(
        field: &ScalarField,
        n: usize,
        exclude: &[Scalar],
        rng: &mut R,
    ) -> Result<Self> {
        let available = field.modulus() - 1u32 - num_bigint::BigUint::from(exclude.len());
        if available < num_bigint::BigUint::from(n) || n == 0 {
            return Err(invalid(format!("cannot draw {n} fresh attributes")));
        }
        let excluded: BTreeSet<&Scalar> = exclude.iter().collect();
        let mut picked = BTreeSet::new();
        while picked.len() < n {
            let a = field.random_nonzero(rng);
            if !excluded.contains(&a) {
                picked.insert(a);
            }
        }
        Self::new(picked.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.attrs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.attrs.is_empty()
    }

    pub fn field(&self) -> &ScalarField {
        self.attrs[0].field()
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.attrs
    }

    pub fn iter(&self) -> impl Iterator<Item = &Scalar> {
        self.attrs.iter()
    }

    pub fn contains(&self, a: &Scalar) -> bool {
        self.attrs.binary_search(a).is_ok()
    }

    /// Shared attributes, ascending.
    pub fn intersection(&self, other: &AttributeSet) -> Vec<Scalar> {
        self.attrs
            .iter()
            .filter(|a| other.contains(a))
            .cloned()
            .collect()
    }

    pub fn overlap(&self, other: &AttributeSet) -> usize {
        self.attrs.iter().filter(|a| other.contains(a)).count()
    }

    /// Count followed by the fixed-width scalars in ascending order.
    pub(crate) fn write(&self, w: &mut Writer) {
        w.u16(u16::try_from(self.attrs.len()).expect("attribute count fits in u16"));
        for a in &self.attrs {
            w.raw(&a.to_bytes());
        }
    }

    pub(crate) fn read(field: &ScalarField, r: &mut Reader<'_>) -> Result<Self> {
        let n = r.u16()? as usize;
        let mut attrs = Vec::with_capacity(n);
        for _ in 0..n {
            attrs.push(field.decode(r.take(field.byte_len())?)?);
        }
        if attrs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(decode_err("attributes not strictly ascending"));
        }
        Self::new(attrs).map_err(|e| decode_err(e.to_string()))
    }

    /// Canonical byte form: the encoding used inside keys and ciphertexts.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut w = Writer::new();
        self.write(&mut w);
        w.finish()
    }
}
