//! Discrete-log-transparent symmetric pairing.
//!
//! An element of `G` is stored as its exponent `a` with respect to the
//! generator `g`, and an element of `G_T` as its exponent with respect to
//! `e(g, g)`. The group law adds exponents and the pairing multiplies them:
//! `e(g^a, g^b) = e(g, g)^{ab}`. The discrete logarithm is public, so this
//! backend offers no security; it exists to make every exponent identity
//! of the scheme and of the attack directly checkable.

use num_bigint::BigUint;
use rand::RngCore;

use crate::error::{decode_err, invalid, Result};
use crate::field::{Scalar, ScalarField};
use crate::pairing::{GroupElement, PairingGroup};
use crate::wire::{Reader, Writer};

/// Tag byte prefixed to encoded elements of `G`.
pub const TAG_G: u8 = 0x01;
/// Tag byte prefixed to encoded elements of `G_T`.
pub const TAG_GT: u8 = 0x02;
/// First byte of a transparent-backend descriptor.
pub const BACKEND_TAG: u8 = 0x54;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransparentPairing {
    field: ScalarField,
}

impl TransparentPairing {
    pub fn new(field: ScalarField) -> Self {
        Self { field }
    }

    /// Backend over the default 256-bit prime.
    pub fn default_256() -> Self {
        Self::new(ScalarField::default_256())
    }

    /// Backend over a small prime, for exhaustive checks.
    pub fn small(p: u64) -> Result<Self> {
        Ok(Self::new(ScalarField::from_u64(p)?))
    }

    pub fn g_from_log(&self, log: Scalar) -> TransparentG {
        assert!(log.field() == &self.field, "exponent from a foreign field");
        TransparentG { log }
    }

    pub fn gt_from_log(&self, log: Scalar) -> TransparentGt {
        assert!(log.field() == &self.field, "exponent from a foreign field");
        TransparentGt { log }
    }

    fn decode_tagged(&self, tag: u8, bytes: &[u8]) -> Result<Scalar> {
        match bytes.split_first() {
            Some((&t, rest)) if t == tag => self.field.decode(rest),
            Some((&t, _)) => Err(decode_err(format!(
                "unexpected element tag {t:#04x}, wanted {tag:#04x}"
            ))),
            None => Err(decode_err("empty group element")),
        }
    }
}

macro_rules! log_element {
    ($name:ident, $tag:expr, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Debug, PartialEq, Eq)]
        pub struct $name {
            log: Scalar,
        }

        impl $name {
            /// Discrete logarithm of the element.
            pub fn log(&self) -> &Scalar {
                &self.log
            }
        }

        impl GroupElement for $name {
            fn op(&self, rhs: &Self) -> Self {
                Self {
                    log: &self.log + &rhs.log,
                }
            }

            fn inverse(&self) -> Self {
                Self { log: -&self.log }
            }

            fn pow(&self, exp: &Scalar) -> Self {
                Self {
                    log: &self.log * exp,
                }
            }

            fn is_identity(&self) -> bool {
                self.log.is_zero()
            }

            fn to_bytes(&self) -> Vec<u8> {
                let mut out = Vec::with_capacity(1 + self.log.field().byte_len());
                out.push($tag);
                out.extend_from_slice(&self.log.to_bytes());
                out
            }
        }
    };
}

log_element!(TransparentG, TAG_G, "Element `g^log` of the source group.");
log_element!(
    TransparentGt,
    TAG_GT,
    "Element `e(g,g)^log` of the target group."
);

impl PairingGroup for TransparentPairing {
    type G = TransparentG;
    type Gt = TransparentGt;

    fn scalar_field(&self) -> &ScalarField {
        &self.field
    }

    fn generator(&self) -> TransparentG {
        TransparentG {
            log: self.field.one(),
        }
    }

    fn g_identity(&self) -> TransparentG {
        TransparentG {
            log: self.field.zero(),
        }
    }

    fn gt_identity(&self) -> TransparentGt {
        TransparentGt {
            log: self.field.zero(),
        }
    }

    fn pair(&self, u: &TransparentG, v: &TransparentG) -> Result<TransparentGt> {
        if u.log.field() != &self.field || v.log.field() != &self.field {
            return Err(invalid("pairing input from a different group instance"));
        }
        Ok(TransparentGt {
            log: &u.log * &v.log,
        })
    }

    fn random_g<R: RngCore + ?Sized>(&self, rng: &mut R) -> TransparentG {
        TransparentG {
            log: self.field.random(rng),
        }
    }

    fn random_gt<R: RngCore + ?Sized>(&self, rng: &mut R) -> TransparentGt {
        TransparentGt {
            log: self.field.random(rng),
        }
    }

    fn decode_g(&self, bytes: &[u8]) -> Result<TransparentG> {
        Ok(TransparentG {
            log: self.decode_tagged(TAG_G, bytes)?,
        })
    }

    fn decode_gt(&self, bytes: &[u8]) -> Result<TransparentGt> {
        Ok(TransparentGt {
            log: self.decode_tagged(TAG_GT, bytes)?,
        })
    }

    fn g_len(&self) -> usize {
        1 + self.field.byte_len()
    }

    fn gt_len(&self) -> usize {
        1 + self.field.byte_len()
    }

    fn descriptor(&self) -> Vec<u8> {
        let mut w = Writer::new();
        w.u8(BACKEND_TAG);
        w.var_bytes(&self.field.modulus().to_bytes_be());
        w.finish()
    }

    fn from_descriptor(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader::new(bytes);
        let tag = r.u8()?;
        if tag != BACKEND_TAG {
            return Err(decode_err(format!("unknown backend tag {tag:#04x}")));
        }
        let modulus = BigUint::from_bytes_be(r.var_bytes()?);
        r.finish()?;
        let field = ScalarField::new(modulus).map_err(|e| decode_err(e.to_string()))?;
        Ok(Self::new(field))
    }
}
