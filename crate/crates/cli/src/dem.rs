//! Byte payloads under a random target-group element.
//!
//! The element `K` is encrypted with the scheme; `SHA-256(label || K)` keys
//! ChaCha20-Poly1305 over the payload. The scheme ciphertext is bound in as
//! associated data. Stored layout: `nonce (12) || sealed payload`.

use bioibe::GroupElement;
use chacha20poly1305::aead::{Aead, KeyInit, Payload};
use chacha20poly1305::{ChaCha20Poly1305, Key, Nonce};
use rand::RngCore;
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

const KDF_LABEL: &[u8] = b"bioibe:dem-key:v1";
const NONCE_LEN: usize = 12;

fn cipher<E: GroupElement>(k: &E) -> ChaCha20Poly1305 {
    let digest = Sha256::new()
        .chain_update(KDF_LABEL)
        .chain_update(k.to_bytes())
        .finalize();
    ChaCha20Poly1305::new(Key::from_slice(&digest))
}

pub fn seal<E: GroupElement, R: RngCore>(
    k: &E,
    aad: &[u8],
    payload: &[u8],
    rng: &mut R,
) -> Vec<u8> {
    let mut nonce = [0u8; NONCE_LEN];
    rng.fill_bytes(&mut nonce);
    let sealed = cipher(k)
        .encrypt(Nonce::from_slice(&nonce), Payload { msg: payload, aad })
        .expect("in-memory encryption does not fail");
    let mut out = nonce.to_vec();
    out.extend(sealed);
    out
}

pub fn open<E: GroupElement>(k: &E, aad: &[u8], dem: &[u8]) -> CliResult<Vec<u8>> {
    if dem.len() < NONCE_LEN {
        return Err(CliError::Refused("payload is truncated".into()));
    }
    let (nonce, sealed) = dem.split_at(NONCE_LEN);
    cipher(k)
        .decrypt(Nonce::from_slice(nonce), Payload { msg: sealed, aad })
        .map_err(|_| CliError::Refused("payload failed authentication".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use bioibe::{PairingGroup, TransparentPairing};
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn round_trip_and_tamper() {
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        let group = TransparentPairing::small(101).unwrap();
        let k = group.random_gt(&mut rng);
        let dem = seal(&k, b"ct", b"attack at dawn", &mut rng);
        assert_eq!(open(&k, b"ct", &dem).unwrap(), b"attack at dawn");
        assert!(open(&k, b"other", &dem).is_err());
        let wrong = k.op(&group.gt_generator());
        assert!(open(&wrong, b"ct", &dem).is_err());
        assert!(open(&k, b"ct", &dem[..5]).is_err());
    }
}
