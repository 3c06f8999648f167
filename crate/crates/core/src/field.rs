//! Prime-order exponent field `Z_p`.
//!
//! Every scalar carries a handle to the field it lives in, so arithmetic is
//! always reduced by the right modulus. Mixing scalars from two different
//! fields is a programming error and panics.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, Zero};
use rand::RngCore;

use crate::error::{decode_err, invalid, Error, Result};

/// Order of the secp256k1 group, a 256-bit prime.
pub const DEFAULT_PRIME_HEX: &str =
    "fffffffffffffffffffffffffffffffebaaedce6af48a03bbfd25e8cd0364141";

const MR_BASES: [u32; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// Miller-Rabin over a fixed base set. Deterministic below 3.3e24,
/// error probability below 4^-20 above that.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &b in MR_BASES.iter() {
        let b = BigUint::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let shift = n_minus_one.trailing_zeros().unwrap_or(0);
    let odd = &n_minus_one >> shift;
    'witness: for &b in MR_BASES.iter() {
        let mut x = BigUint::from(b).modpow(&odd, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..shift {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

struct FieldInner {
    modulus: BigUint,
    byte_len: usize,
}

/// Handle to `Z_p` for a fixed prime `p`. Cheap to clone.
#[derive(Clone)]
pub struct ScalarField {
    inner: Arc<FieldInner>,
}

impl ScalarField {
    /// Builds the field for `modulus`, which must be an odd prime.
    pub fn new(modulus: BigUint) -> Result<Self> {
        if modulus < BigUint::from(3u32) || !is_probable_prime(&modulus) {
            return Err(Error::InvalidConfig(format!(
                "field modulus {modulus} is not an odd prime"
            )));
        }
        let byte_len = modulus.bits().div_ceil(8) as usize;
        Ok(Self {
            inner: Arc::new(FieldInner { modulus, byte_len }),
        })
    }

    pub fn from_u64(p: u64) -> Result<Self> {
        Self::new(BigUint::from(p))
    }

    /// The default 256-bit field.
    pub fn default_256() -> Self {
        let p = BigUint::parse_bytes(DEFAULT_PRIME_HEX.as_bytes(), 16).expect("valid hex");
        Self::new(p).expect("default modulus is prime")
    }

    pub fn modulus(&self) -> &BigUint {
        &self.inner.modulus
    }

    /// Width in bytes of every encoded scalar of this field.
    pub fn byte_len(&self) -> usize {
        self.inner.byte_len
    }

    pub fn zero(&self) -> Scalar {
        Scalar::from_reduced(BigUint::zero(), self.clone())
    }

    pub fn one(&self) -> Scalar {
        Scalar::from_reduced(BigUint::one(), self.clone())
    }

    pub fn element(&self, v: u64) -> Scalar {
        self.reduce(BigUint::from(v))
    }

    /// Signed small constant, reduced into `[0, p)`.
    pub fn element_i64(&self, v: i64) -> Scalar {
        let s = self.element(v.unsigned_abs());
        if v < 0 {
            -s
        } else {
            s
        }
    }

    pub fn reduce(&self, v: BigUint) -> Scalar {
        let value = v % self.modulus();
        Scalar::from_reduced(value, self.clone())
    }

    /// Uniform element of `Z_p`.
    pub fn random<R: RngCore + ?Sized>(&self, rng: &mut R) -> Scalar {
        let value = rng.gen_biguint_below(self.modulus());
        Scalar::from_reduced(value, self.clone())
    }

    /// Uniform element of `Z_p^*`.
    pub fn random_nonzero<R: RngCore + ?Sized>(&self, rng: &mut R) -> Scalar {
        let upper = self.modulus() - 1u32;
        let value = rng.gen_biguint_below(&upper) + 1u32;
        Scalar::from_reduced(value, self.clone())
    }

    /// Parses a fixed-width big-endian encoding. Values `>= p` are rejected.
    pub fn decode(&self, bytes: &[u8]) -> Result<Scalar> {
        if bytes.len() != self.byte_len() {
            return Err(decode_err(format!(
                "scalar must be {} bytes, got {}",
                self.byte_len(),
                bytes.len()
            )));
        }
        let value = BigUint::from_bytes_be(bytes);
        if value >= *self.modulus() {
            return Err(decode_err("scalar not reduced modulo p"));
        }
        Ok(Scalar::from_reduced(value, self.clone()))
    }

    pub fn from_hex(&self, s: &str) -> Result<Scalar> {
        let bytes = hex::decode(s).map_err(|e| decode_err(e.to_string()))?;
        self.decode(&bytes)
    }

    /// Parses a decimal literal that must already lie in `[0, p)`.
    pub fn parse_decimal(&self, s: &str) -> Result<Scalar> {
        let value = BigUint::parse_bytes(s.trim().as_bytes(), 10)
            .ok_or_else(|| invalid(format!("`{s}` is not a decimal integer")))?;
        if value >= *self.modulus() {
            return Err(invalid(format!("`{s}` is not below the field modulus")));
        }
        Ok(Scalar::from_reduced(value, self.clone()))
    }
}

impl PartialEq for ScalarField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.modulus == other.inner.modulus
    }
}

impl Eq for ScalarField {}

impl fmt::Debug for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScalarField(p = {})", self.inner.modulus)
    }
}

/// Element of `Z_p`, always kept in `[0, p)`.
#[derive(Clone)]
pub struct Scalar {
    value: BigUint,
    field: ScalarField,
}

impl Scalar {
    fn from_reduced(value: BigUint, field: ScalarField) -> Self {
        debug_assert!(value < *field.modulus());
        Self { value, field }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn field(&self) -> &ScalarField {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        let exp = self.field.modulus() - 2u32;
        Some(Self::from_reduced(
            self.value.modpow(&exp, self.field.modulus()),
            self.field.clone(),
        ))
    }

    pub fn pow(&self, exp: &BigUint) -> Scalar {
        Self::from_reduced(
            self.value.modpow(exp, self.field.modulus()),
            self.field.clone(),
        )
    }

    /// Fixed-width big-endian bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        let raw = self.value.to_bytes_be();
        let width = self.field.byte_len();
        let mut out = vec![0u8; width];
        if !self.is_zero() {
            out[width - raw.len()..].copy_from_slice(&raw);
        }
        out
    }

    pub fn to_hex(&self) -> String {
        hex::encode(self.to_bytes())
    }

    fn check_field(&self, other: &Scalar) {
        assert!(
            self.field == other.field,
            "scalar arithmetic across different fields"
        );
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field == other.field
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value
            .cmp(&other.value)
            .then_with(|| self.field.modulus().cmp(other.field.modulus()))
    }
}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value.hash(state);
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self.value)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.check_field(rhs);
        let mut v = &self.value + &rhs.value;
        if v >= *self.field.modulus() {
            v -= self.field.modulus();
        }
        Scalar::from_reduced(v, self.field.clone())
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.check_field(rhs);
        let v = if self.value >= rhs.value {
            &self.value - &rhs.value
        } else {
            self.field.modulus() - &rhs.value + &self.value
        };
        Scalar::from_reduced(v, self.field.clone())
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.check_field(rhs);
        Scalar::from_reduced(
            (&self.value * &rhs.value) % self.field.modulus(),
            self.field.clone(),
        )
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        if self.is_zero() {
            return self.clone();
        }
        Scalar::from_reduced(self.field.modulus() - &self.value, self.field.clone())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);
