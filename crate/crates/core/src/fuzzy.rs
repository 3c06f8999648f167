//! Code-offset fuzzy extractor over the Hamming metric.
//!
//! `gen` picks a random codeword `c` of a repetition code with block width
//! `2t + 1`, publishes the offset `b xor c` and outputs `ID = H(b)`. `rep`
//! shifts a fresh reading `b'` by the offset, decodes each block by majority
//! and undoes the shift, recovering `b` whenever `dis(b, b') <= t`. When `k`
//! is not a multiple of the block width the last block absorbs the
//! remainder; a wider block still corrects `t` errors.
//!
//! Attribute sets are turned into templates by setting, for every
//! attribute, one bit at a position derived from the attribute by hashing.
//! The template therefore does not depend on attribute order, and two sets
//! with `|w ∩ w'| = m` differ in at most `2(n - m)` bits. A correction
//! radius of `t >= 2(n - d)` makes every pair with overlap at least `d`
//! land on the same identity.

use std::ops::Range;

use rand::{Rng, RngCore};
use sha2::{Digest, Sha256};

use crate::attributes::AttributeSet;
use crate::error::{decode_err, invalid, Error, Result};
use crate::wire::{Reader, Writer};

pub const IDENTITY_LEN: usize = 32;
pub const DEFAULT_TEMPLATE_BITS: usize = 256;
pub const SKETCH_VERSION: u8 = 1;

const H_DOMAIN: &[u8] = b"bioibe:H";
const SLOT_DOMAIN: &[u8] = b"bioibe:attr-slot";

/// Output of the extractor, `ID = H(b)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Identity(pub [u8; IDENTITY_LEN]);

impl Identity {
    pub fn as_bytes(&self) -> &[u8; IDENTITY_LEN] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(self.0)
    }
}

impl std::fmt::Debug for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Identity({})", self.to_hex())
    }
}

/// Fixed-length bit string `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiometricTemplate {
    bits: Vec<bool>,
}

impl BiometricTemplate {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn zeros(k: usize) -> Self {
        Self {
            bits: vec![false; k],
        }
    }

    pub fn random<R: RngCore + ?Sized>(k: usize, rng: &mut R) -> Self {
        Self {
            bits: (0..k).map(|_| rng.gen()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn flip(&mut self, i: usize) {
        self.bits[i] = !self.bits[i];
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn hamming_distance(&self, other: &Self) -> Result<usize> {
        self.check_len(other.len())?;
        Ok(self
            .bits
            .iter()
            .zip(&other.bits)
            .filter(|(a, b)| a != b)
            .count())
    }

    fn xor(&self, other: &Self) -> Self {
        Self {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    fn check_len(&self, k: usize) -> Result<()> {
        if self.len() != k {
            return Err(invalid(format!(
                "template has {} bits, expected {k}",
                self.len()
            )));
        }
        Ok(())
    }

    /// MSB-first packing, zero padded to a whole byte.
    pub fn packed(&self) -> Vec<u8> {
        let mut out = vec![0u8; self.len().div_ceil(8)];
        for (i, _) in self.bits.iter().enumerate().filter(|(_, b)| **b) {
            out[i / 8] |= 0x80 >> (i % 8);
        }
        out
    }

    pub fn unpack(bytes: &[u8], k: usize) -> Result<Self> {
        if bytes.len() != k.div_ceil(8) {
            return Err(decode_err("packed template has the wrong length"));
        }
        let bits: Vec<bool> = (0..k)
            .map(|i| bytes[i / 8] & (0x80 >> (i % 8)) != 0)
            .collect();
        let t = Self { bits };
        if t.packed() != bytes {
            return Err(decode_err("nonzero padding bits in template"));
        }
        Ok(t)
    }
}

/// Template length `k` and correction radius `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzyParams {
    k: usize,
    t: usize,
}

impl FuzzyParams {
    pub fn new(k: usize, t: usize) -> Result<Self> {
        if k == 0 || k > u16::MAX as usize {
            return Err(Error::InvalidConfig(format!(
                "template length {k} out of range"
            )));
        }
        if 2 * t + 1 > k {
            return Err(Error::InvalidConfig(format!(
                "correction radius {t} needs at least {} template bits, have {k}",
                2 * t + 1
            )));
        }
        Ok(Self { k, t })
    }

    /// Smallest radius that absorbs `n - d` differing attributes, over the
    /// default template length.
    pub fn for_threshold(n: usize, d: usize) -> Result<Self> {
        if d == 0 || d > n {
            return Err(Error::InvalidConfig(format!(
                "threshold d = {d} outside 1..={n}"
            )));
        }
        Self::new(DEFAULT_TEMPLATE_BITS, 2 * (n - d))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn block_width(&self) -> usize {
        2 * self.t + 1
    }

    /// Whether two `n`-sets sharing `d` attributes always decode together.
    pub fn absorbs(&self, n: usize, d: usize) -> bool {
        self.t >= 2 * n.saturating_sub(d)
    }
}

/// Public helper string `PAR` published by `gen`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SketchPar {
    offset: BiometricTemplate,
    t: usize,
    block_width: usize,
}

impl SketchPar {
    pub fn k(&self) -> usize {
        self.offset.len()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn block_width(&self) -> usize {
        self.block_width
    }

    pub fn offset(&self) -> &BiometricTemplate {
        &self.offset
    }

    /// `version | k:u16 | t:u16 | block_width:u16 | offset bits (MSB first)`.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut w = Writer::new();
        w.u8(SKETCH_VERSION);
        w.u16(self.k() as u16);
        w.u16(self.t as u16);
        w.u16(self.block_width as u16);
        w.raw(&self.offset.packed());
        w.finish()
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader::new(bytes);
        r.expect_version(SKETCH_VERSION)?;
        let k = r.u16()? as usize;
        let t = r.u16()? as usize;
        let block_width = r.u16()? as usize;
        let params = FuzzyParams::new(k, t).map_err(|e| decode_err(e.to_string()))?;
        if block_width != params.block_width() {
            return Err(decode_err("block width must equal 2t + 1"));
        }
        let offset = BiometricTemplate::unpack(r.take(k.div_ceil(8))?, k)?;
        r.finish()?;
        Ok(Self {
            offset,
            t,
            block_width,
        })
    }
}

fn blocks(k: usize, width: usize) -> impl Iterator<Item = Range<usize>> {
    let count = k / width;
    (0..count).map(move |j| {
        let end = if j + 1 == count { k } else { (j + 1) * width };
        j * width..end
    })
}

fn encode_codeword(message: &[bool], k: usize, width: usize) -> BiometricTemplate {
    let mut bits = vec![false; k];
    for (range, &m) in blocks(k, width).zip(message) {
        bits[range].iter_mut().for_each(|b| *b = m);
    }
    BiometricTemplate::new(bits)
}

/// Majority decoding to the nearest codeword.
fn decode_to_codeword(word: &BiometricTemplate, width: usize) -> BiometricTemplate {
    let mut bits = word.bits.clone();
    for range in blocks(word.len(), width) {
        let ones = word.bits[range.clone()].iter().filter(|b| **b).count();
        let bit = 2 * ones > range.len();
        bits[range].iter_mut().for_each(|b| *b = bit);
    }
    BiometricTemplate::new(bits)
}

/// The identity hash `H` over a template.
pub fn identity_hash(b: &BiometricTemplate) -> Identity {
    let mut h = Sha256::new();
    h.update(H_DOMAIN);
    h.update((b.len() as u16).to_be_bytes());
    h.update(b.packed());
    Identity(h.finalize().into())
}

/// `Gen`: derives `(ID, PAR)` from a template.
pub fn gen<R: RngCore + ?Sized>(
    params: &FuzzyParams,
    b: &BiometricTemplate,
    rng: &mut R,
) -> Result<(Identity, SketchPar)> {
    b.check_len(params.k)?;
    let width = params.block_width();
    let message: Vec<bool> = (0..params.k / width).map(|_| rng.gen()).collect();
    let codeword = encode_codeword(&message, params.k, width);
    let par = SketchPar {
        offset: b.xor(&codeword),
        t: params.t,
        block_width: width,
    };
    Ok((identity_hash(b), par))
}

/// `Rep`: recovers `ID` from a reading within distance `t` of the enrolled template.
pub fn rep(b_prime: &BiometricTemplate, par: &SketchPar) -> Result<Identity> {
    b_prime.check_len(par.k())?;
    let codeword = decode_to_codeword(&b_prime.xor(&par.offset), par.block_width);
    Ok(identity_hash(&codeword.xor(&par.offset)))
}

fn slot(attr_bytes: &[u8], k: usize) -> usize {
    let digest = Sha256::new()
        .chain_update(SLOT_DOMAIN)
        .chain_update(attr_bytes)
        .finalize();
    let mut head = [0u8; 8];
    head.copy_from_slice(&digest[..8]);
    (u64::from_be_bytes(head) % k as u64) as usize
}

/// Order-independent `k`-bit template of an attribute set.
pub fn attrs_to_template(w: &AttributeSet, k: usize) -> Result<BiometricTemplate> {
    if k == 0 {
        return Err(invalid("template length must be positive"));
    }
    let mut bits = vec![false; k];
    for a in w.iter() {
        bits[slot(&a.to_bytes(), k)] = true;
    }
    Ok(BiometricTemplate::new(bits))
}
