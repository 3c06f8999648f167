//! Decrypting any ciphertext with any honestly extracted key.
//!
//! Each key entry satisfies `d1 / d2^h = g1^{q(mu)}`, so the holder can
//! strip the identity component from its own key. The stripped values are
//! shares of `g1^s` and do not depend on the ciphertext's attribute set.
//! Since `e(C1, g1^s) = e(g^r, g1)^s = e(g1, g2)^r`, dividing `C3` by the
//! interpolated pairing removes the mask regardless of how little `w` and
//! `w'` overlap.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::attributes::AttributeSet;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::pairing::{GroupElement, PairingGroup};
use crate::poly::lagrange_coeffs_at_zero;
use crate::scheme::{Ciphertext, PublicParams, SecretKey};

/// Everything the attacker computed on the way to the plaintext.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttackTranscript<P: PairingGroup> {
    pub target_w_prime: AttributeSet,
    pub queried_w: AttributeSet,
    pub recovered: P::Gt,
    /// The `d` smallest attributes of the attacker's own key.
    pub chosen_s: Vec<Scalar>,
    /// `mu_i -> g1^{q(mu_i)}` for every attribute of the key.
    pub intermediate: BTreeMap<Scalar, P::G>,
}

impl<P: PairingGroup> AttackTranscript<P> {
    pub fn overlap(&self) -> usize {
        self.queried_w.overlap(&self.target_w_prime)
    }

    /// Whether honest decryption would have refused this key.
    pub fn below_threshold(&self, d: usize) -> bool {
        self.overlap() < d
    }

    pub fn to_json(&self) -> Value {
        let attrs = |w: &AttributeSet| w.iter().map(|a| a.to_string()).collect::<Vec<_>>();
        let stripped: serde_json::Map<String, Value> = self
            .intermediate
            .iter()
            .map(|(mu, u)| (mu.to_string(), Value::String(hex::encode(u.to_bytes()))))
            .collect();
        json!({
            "target_w_prime": attrs(&self.target_w_prime),
            "queried_w": attrs(&self.queried_w),
            "overlap": self.overlap(),
            "chosen_s": self.chosen_s.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
            "stripped_shares": stripped,
            "recovered": hex::encode(self.recovered.to_bytes()),
        })
    }
}

/// Recovers the plaintext of `ct` from `sk`, with no overlap requirement.
pub fn universal_decrypt<P: PairingGroup>(
    pp: &PublicParams<P>,
    sk: &SecretKey<P>,
    ct: &Ciphertext<P>,
) -> Result<(P::Gt, AttackTranscript<P>)> {
    let d = pp.config().d();
    if sk.entries().len() < d {
        return Err(Error::InsufficientShares {
            found: sk.entries().len(),
            required: d,
        });
    }
    let h = sk.binding_value();
    let intermediate: BTreeMap<Scalar, P::G> = sk
        .entries()
        .iter()
        .map(|(mu, e)| (mu.clone(), e.d1.div(&e.d2.pow(&h))))
        .collect();

    let chosen_s: Vec<Scalar> = intermediate.keys().take(d).cloned().collect();
    let coeffs = lagrange_coeffs_at_zero(&chosen_s)?;
    let mut mask = pp.group().gt_identity();
    for (mu, coeff) in chosen_s.iter().zip(&coeffs) {
        mask = mask.op(&pp.group().pair(&ct.c1, &intermediate[mu])?.pow(coeff));
    }
    let recovered = ct.c3.div(&mask);

    let transcript = AttackTranscript {
        target_w_prime: ct.w_prime.clone(),
        queried_w: sk.attributes().clone(),
        recovered: recovered.clone(),
        chosen_s,
        intermediate,
    };
    Ok((recovered, transcript))
}
