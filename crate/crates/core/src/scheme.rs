//! The biometric IBE scheme: Setup, Extract, Encrypt, Decrypt.
//!
//! Keys are bound to the holder's identity through a hash value `h`:
//! `d_{i,1} = (g1 * g^h)^{q(mu_i)}` and `d_{i,2} = g^{q(mu_i)}`. With
//! [`Binding::IdentityOnly`] `h = H1(ID)`, which is what makes honest
//! decryption work for any two readings that extract to the same `ID`.
//! [`Binding::AttributesAndIdentity`] hashes `H1(w || ID)` instead; it is
//! kept to show that decryption then breaks whenever `w != w'`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rand::RngCore;
use sha2::{Digest, Sha256};

use crate::attributes::AttributeSet;
use crate::error::{decode_err, invalid, Error, Result};
use crate::field::{Scalar, ScalarField};
use crate::fuzzy::{self, FuzzyParams, Identity, SketchPar, IDENTITY_LEN};
use crate::pairing::{interpolate_at_zero_in_exponent, GroupElement, PairingGroup};
use crate::poly::Polynomial;
use crate::wire::{Reader, Writer};

/// Version byte leading every canonical encoding in this module.
pub const FORMAT_VERSION: u8 = 1;

const H1_DOMAIN: &[u8] = b"bioibe:H1";

/// How a key is tied to its holder.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Binding {
    /// `H1(ID)`.
    IdentityOnly,
    /// `H1(w || ID)`; decryption fails across different attribute sets.
    AttributesAndIdentity,
}

impl Binding {
    fn code(self) -> u8 {
        match self {
            Binding::IdentityOnly => 0,
            Binding::AttributesAndIdentity => 1,
        }
    }

    fn from_code(c: u8) -> Result<Self> {
        match c {
            0 => Ok(Binding::IdentityOnly),
            1 => Ok(Binding::AttributesAndIdentity),
            _ => Err(decode_err(format!("unknown binding code {c}"))),
        }
    }
}

/// System-wide parameters chosen at setup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SystemConfig {
    n: usize,
    d: usize,
    fuzzy: FuzzyParams,
    binding: Binding,
}

impl SystemConfig {
    /// `n` attributes per identity, threshold `d`, default extractor
    /// parameters and identity-only binding.
    pub fn new(n: usize, d: usize) -> Result<Self> {
        let cfg = Self {
            n,
            d,
            fuzzy: FuzzyParams::for_threshold(n, d)?,
            binding: Binding::IdentityOnly,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_binding(mut self, binding: Binding) -> Self {
        self.binding = binding;
        self
    }

    pub fn with_fuzzy(mut self, fuzzy: FuzzyParams) -> Result<Self> {
        self.fuzzy = fuzzy;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > u16::MAX as usize {
            return Err(Error::InvalidConfig(format!(
                "attribute count n = {} out of range",
                self.n
            )));
        }
        if self.d == 0 || self.d > self.n {
            return Err(Error::InvalidConfig(format!(
                "threshold d = {} must satisfy 1 <= d <= n = {}",
                self.d, self.n
            )));
        }
        if !self.fuzzy.absorbs(self.n, self.d) {
            return Err(Error::InvalidConfig(format!(
                "correction radius t = {} cannot absorb {} differing attributes (needs t >= {})",
                self.fuzzy.t(),
                self.n - self.d,
                2 * (self.n - self.d)
            )));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn fuzzy(&self) -> &FuzzyParams {
        &self.fuzzy
    }

    pub fn binding(&self) -> Binding {
        self.binding
    }

    fn check_attributes(&self, field: &ScalarField, w: &AttributeSet) -> Result<()> {
        if w.len() != self.n {
            return Err(invalid(format!(
                "attribute set has {} elements, system uses n = {}",
                w.len(),
                self.n
            )));
        }
        if w.field() != field {
            return Err(invalid("attribute set from a different field"));
        }
        Ok(())
    }
}

/// `H1`, mapping an identity (optionally prefixed by the attribute set) to
/// `Z_p^*` by rejection sampling over counter-indexed SHA-256 output.
pub fn hash_to_scalar_h1(field: &ScalarField, id: &Identity, w: Option<&AttributeSet>) -> Scalar {
    let mut input = Vec::new();
    match w {
        None => input.push(0u8),
        Some(w) => {
            input.push(1u8);
            input.extend_from_slice(&w.to_bytes());
        }
    }
    input.extend_from_slice(id.as_bytes());

    let width = field.byte_len();
    let excess_bits = width * 8 - field.modulus().bits() as usize;
    for counter in 0u32.. {
        let mut bytes = Vec::with_capacity(width + 32);
        let mut block = 0u32;
        while bytes.len() < width {
            let digest = Sha256::new()
                .chain_update(H1_DOMAIN)
                .chain_update(counter.to_be_bytes())
                .chain_update(block.to_be_bytes())
                .chain_update(&input)
                .finalize();
            bytes.extend_from_slice(&digest);
            block += 1;
        }
        bytes.truncate(width);
        bytes[0] &= 0xff >> excess_bits;
        let candidate = BigUint::from_bytes_be(&bytes);
        if candidate < *field.modulus() {
            let s = field.reduce(candidate);
            if !s.is_zero() {
                return s;
            }
        }
    }
    unreachable!("counter space exhausted")
}

fn binding_value(field: &ScalarField, binding: Binding, id: &Identity, w: &AttributeSet) -> Scalar {
    match binding {
        Binding::IdentityOnly => hash_to_scalar_h1(field, id, None),
        Binding::AttributesAndIdentity => hash_to_scalar_h1(field, id, Some(w)),
    }
}

/// `PP = (G, G_T, e, g, g1, g2, d, H, H1)` plus the extractor parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PublicParams<P: PairingGroup> {
    group: P,
    g: P::G,
    g1: P::G,
    g2: P::G,
    config: SystemConfig,
}

impl<P: PairingGroup> PublicParams<P> {
    pub fn group(&self) -> &P {
        &self.group
    }

    pub fn field(&self) -> &ScalarField {
        self.group.scalar_field()
    }

    pub fn g(&self) -> &P::G {
        &self.g
    }

    pub fn g1(&self) -> &P::G {
        &self.g1
    }

    pub fn g2(&self) -> &P::G {
        &self.g2
    }

    pub fn config(&self) -> &SystemConfig {
        &self.config
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut w = Writer::new();
        w.u8(FORMAT_VERSION);
        w.var_bytes(&self.group.descriptor());
        w.u16(self.config.n as u16);
        w.u16(self.config.d as u16);
        w.u16(self.config.fuzzy.k() as u16);
        w.u16(self.config.fuzzy.t() as u16);
        w.u8(self.config.binding.code());
        w.raw(&self.g.to_bytes());
        w.raw(&self.g1.to_bytes());
        w.raw(&self.g2.to_bytes());
        w.finish()
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader::new(bytes);
        r.expect_version(FORMAT_VERSION)?;
        let group = P::from_descriptor(r.var_bytes()?)?;
        let n = r.u16()? as usize;
        let d = r.u16()? as usize;
        let k = r.u16()? as usize;
        let t = r.u16()? as usize;
        let binding = Binding::from_code(r.u8()?)?;
        let config = FuzzyParams::new(k, t)
            .and_then(|fuzzy| {
                let cfg = SystemConfig {
                    n,
                    d,
                    fuzzy,
                    binding,
                };
                cfg.validate().map(|_| cfg)
            })
            .map_err(|e| decode_err(e.to_string()))?;
        let g = group.decode_g(r.take(group.g_len())?)?;
        let g1 = group.decode_g(r.take(group.g_len())?)?;
        let g2 = group.decode_g(r.take(group.g_len())?)?;
        r.finish()?;
        if g != group.generator() {
            return Err(decode_err("g is not the group generator"));
        }
        Ok(Self {
            group,
            g,
            g1,
            g2,
            config,
        })
    }
}

/// The master secret `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MasterKey {
    s: Scalar,
}

impl MasterKey {
    pub fn secret(&self) -> &Scalar {
        &self.s
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = vec![FORMAT_VERSION];
        out.extend_from_slice(&self.s.to_bytes());
        out
    }

    pub fn from_bytes(field: &ScalarField, bytes: &[u8]) -> Result<Self> {
        let mut r = Reader::new(bytes);
        r.expect_version(FORMAT_VERSION)?;
        let s = field.decode(r.take(field.byte_len())?)?;
        r.finish()?;
        if s.is_zero() {
            return Err(decode_err("master key must be nonzero"));
        }
        Ok(Self { s })
    }
}

/// Key material for one attribute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeyEntry<G> {
    /// `(g1 * g^h)^{q(mu)}`
    pub d1: G,
    /// `g^{q(mu)}`
    pub d2: G,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecretKey<P: PairingGroup> {
    attributes: AttributeSet,
    entries: BTreeMap<Scalar, KeyEntry<P::G>>,
    identity: Identity,
    binding: Binding,
}

impl<P: PairingGroup> SecretKey<P> {
    pub fn attributes(&self) -> &AttributeSet {
        &self.attributes
    }

    pub fn entries(&self) -> &BTreeMap<Scalar, KeyEntry<P::G>> {
        &self.entries
    }

    pub fn identity(&self) -> &Identity {
        &self.identity
    }

    pub fn binding(&self) -> Binding {
        self.binding
    }

    /// The hash value `h` this key was built with.
    pub fn binding_value(&self) -> Scalar {
        binding_value(
            self.attributes.field(),
            self.binding,
            &self.identity,
            &self.attributes,
        )
    }

    /// The same key with only the shares for `attrs` kept. Only keys with
    /// identity-only binding can be restricted, since the other binding
    /// hashes the full attribute set.
    pub fn restricted_to(&self, attrs: &[Scalar]) -> Result<Self> {
        if self.binding != Binding::IdentityOnly {
            return Err(invalid("cannot restrict a key bound to its attribute set"));
        }
        let attributes = AttributeSet::new(attrs.to_vec())?;
        let entries = attributes
            .iter()
            .map(|mu| {
                self.entries
                    .get(mu)
                    .map(|e| (mu.clone(), e.clone()))
                    .ok_or_else(|| invalid(format!("key holds no share for attribute {mu}")))
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            attributes,
            entries,
            identity: self.identity,
            binding: self.binding,
        })
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut w = Writer::new();
        w.u8(FORMAT_VERSION);
        w.u8(self.binding.code());
        w.raw(self.identity.as_bytes());
        w.u16(self.entries.len() as u16);
        for (mu, e) in &self.entries {
            w.raw(&mu.to_bytes());
            w.raw(&e.d1.to_bytes());
            w.raw(&e.d2.to_bytes());
        }
        w.finish()
    }

    pub fn from_bytes(pp: &PublicParams<P>, bytes: &[u8]) -> Result<Self> {
        let group = pp.group();
        let field = pp.field();
        let mut r = Reader::new(bytes);
        r.expect_version(FORMAT_VERSION)?;
        let binding = Binding::from_code(r.u8()?)?;
        let mut id = [0u8; IDENTITY_LEN];
        id.copy_from_slice(r.take(IDENTITY_LEN)?);
        let count = r.u16()? as usize;
        let mut entries = BTreeMap::new();
        let mut attrs = Vec::with_capacity(count);
        for _ in 0..count {
            let mu = field.decode(r.take(field.byte_len())?)?;
            if attrs.last().is_some_and(|prev| *prev >= mu) {
                return Err(decode_err("key attributes not strictly ascending"));
            }
            let d1 = group.decode_g(r.take(group.g_len())?)?;
            let d2 = group.decode_g(r.take(group.g_len())?)?;
            attrs.push(mu.clone());
            entries.insert(mu, KeyEntry { d1, d2 });
        }
        r.finish()?;
        let attributes = AttributeSet::new(attrs).map_err(|e| decode_err(e.to_string()))?;
        Ok(Self {
            attributes,
            entries,
            identity: Identity(id),
            binding,
        })
    }
}

/// `C' = (w', C1, C2, C3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ciphertext<P: PairingGroup> {
    pub w_prime: AttributeSet,
    pub c1: P::G,
    pub c2: P::G,
    pub c3: P::Gt,
}

impl<P: PairingGroup> Ciphertext<P> {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut w = Writer::new();
        w.u8(FORMAT_VERSION);
        self.w_prime.write(&mut w);
        w.raw(&self.c1.to_bytes());
        w.raw(&self.c2.to_bytes());
        w.raw(&self.c3.to_bytes());
        w.finish()
    }

    pub fn from_bytes(pp: &PublicParams<P>, bytes: &[u8]) -> Result<Self> {
        let group = pp.group();
        let mut r = Reader::new(bytes);
        r.expect_version(FORMAT_VERSION)?;
        let w_prime = AttributeSet::read(pp.field(), &mut r)?;
        if w_prime.len() != pp.config.n {
            return Err(decode_err("ciphertext attribute count differs from n"));
        }
        let c1 = group.decode_g(r.take(group.g_len())?)?;
        let c2 = group.decode_g(r.take(group.g_len())?)?;
        let c3 = group.decode_gt(r.take(group.gt_len())?)?;
        r.finish()?;
        Ok(Self {
            w_prime,
            c1,
            c2,
            c3,
        })
    }
}

/// Setup: samples `s` in `Z_p^*` and `g1` in `G`, sets `g2 = g^s`.
pub fn setup<P: PairingGroup, R: RngCore + ?Sized>(
    group: P,
    config: SystemConfig,
    rng: &mut R,
) -> Result<(PublicParams<P>, MasterKey)> {
    config.validate()?;
    let s = group.scalar_field().random_nonzero(rng);
    let g = group.generator();
    let g1 = group.random_g(rng);
    let g2 = g.pow(&s);
    let pp = PublicParams {
        group,
        g,
        g1,
        g2,
        config,
    };
    Ok((pp, MasterKey { s }))
}

/// Extract: derives `(ID, PAR)` from `w` and shares `s` over a fresh
/// polynomial of degree `d - 1`.
pub fn extract<P: PairingGroup, R: RngCore + ?Sized>(
    pp: &PublicParams<P>,
    msk: &MasterKey,
    w: &AttributeSet,
    rng: &mut R,
) -> Result<(SecretKey<P>, SketchPar)> {
    let cfg = &pp.config;
    cfg.check_attributes(pp.field(), w)?;
    let template = fuzzy::attrs_to_template(w, cfg.fuzzy.k())?;
    let (identity, par) = fuzzy::gen(&cfg.fuzzy, &template, rng)?;

    let q = Polynomial::sample(rng, cfg.d - 1, msk.s.clone());
    let h = binding_value(pp.field(), cfg.binding, &identity, w);
    let base = pp.g1.op(&pp.g.pow(&h));
    let entries = w
        .iter()
        .map(|mu| {
            let share = q.eval(mu);
            let entry = KeyEntry {
                d1: base.pow(&share),
                d2: pp.g.pow(&share),
            };
            (mu.clone(), entry)
        })
        .collect();
    let sk = SecretKey {
        attributes: w.clone(),
        entries,
        identity,
        binding: cfg.binding,
    };
    Ok((sk, par))
}

/// Encrypt `m` to the attribute set `w_prime`, using the receiver's
/// published sketch to obtain `ID' = Rep(b', PAR)`.
pub fn encrypt<P: PairingGroup, R: RngCore + ?Sized>(
    pp: &PublicParams<P>,
    m: &P::Gt,
    w_prime: &AttributeSet,
    par: &SketchPar,
    rng: &mut R,
) -> Result<Ciphertext<P>> {
    let cfg = &pp.config;
    cfg.check_attributes(pp.field(), w_prime)?;
    let template = fuzzy::attrs_to_template(w_prime, cfg.fuzzy.k())?;
    let id_prime = fuzzy::rep(&template, par)?;
    let h_prime = binding_value(pp.field(), cfg.binding, &id_prime, w_prime);

    let r = pp.field().random_nonzero(rng);
    let c1 = pp.g.pow(&r);
    let c2 = pp.g.pow(&h_prime).pow(&r);
    let mask = pp.group.pair(&pp.g1, &pp.g2)?.pow(&r);
    Ok(Ciphertext {
        w_prime: w_prime.clone(),
        c1,
        c2,
        c3: m.op(&mask),
    })
}

/// The `d` smallest shared attributes, or an overlap error.
pub fn select_subset<P: PairingGroup>(
    pp: &PublicParams<P>,
    sk: &SecretKey<P>,
    ct: &Ciphertext<P>,
) -> Result<Vec<Scalar>> {
    let shared = sk.attributes.intersection(&ct.w_prime);
    let d = pp.config.d;
    if shared.len() < d {
        return Err(Error::InsufficientOverlap {
            found: shared.len(),
            required: d,
        });
    }
    Ok(shared.into_iter().take(d).collect())
}

/// Decrypt, refusing when `|w ∩ w'| < d`.
pub fn decrypt<P: PairingGroup>(
    pp: &PublicParams<P>,
    sk: &SecretKey<P>,
    ct: &Ciphertext<P>,
) -> Result<P::Gt> {
    let subset = select_subset(pp, sk, ct)?;
    decrypt_with_subset(pp, sk, ct, &subset)
}

/// Decrypt with an explicit choice of `S ⊆ w ∩ w'`, `|S| = d`.
pub fn decrypt_with_subset<P: PairingGroup>(
    pp: &PublicParams<P>,
    sk: &SecretKey<P>,
    ct: &Ciphertext<P>,
    subset: &[Scalar],
) -> Result<P::Gt> {
    if subset.len() != pp.config.d {
        return Err(invalid(format!(
            "subset has {} attributes, threshold is {}",
            subset.len(),
            pp.config.d
        )));
    }
    if let Some(mu) = subset.iter().find(|mu| !ct.w_prime.contains(mu)) {
        return Err(invalid(format!(
            "attribute {mu} is not in the ciphertext set"
        )));
    }
    let (d1_shares, d2_shares) = key_shares(sk, subset)?;
    let d2_combined = interpolate_at_zero_in_exponent(&d2_shares)?;
    let d1_combined = interpolate_at_zero_in_exponent(&d1_shares)?;
    let num = pp.group.pair(&ct.c2, &d2_combined)?;
    let den = pp.group.pair(&ct.c1, &d1_combined)?;
    Ok(ct.c3.op(&num).div(&den))
}

type Shares<G> = Vec<(Scalar, G)>;
type SharePair<G> = (Shares<G>, Shares<G>);

fn key_shares<P: PairingGroup>(sk: &SecretKey<P>, subset: &[Scalar]) -> Result<SharePair<P::G>> {
    let mut d1 = Vec::with_capacity(subset.len());
    let mut d2 = Vec::with_capacity(subset.len());
    for mu in subset {
        let entry = sk
            .entries
            .get(mu)
            .ok_or_else(|| invalid(format!("key holds no share for attribute {mu}")))?;
        d1.push((mu.clone(), entry.d1.clone()));
        d2.push((mu.clone(), entry.d2.clone()));
    }
    Ok((d1, d2))
}

/// `pair(d2, g1 * g^h) == pair(d1, g)` for every entry of the key.
pub fn verify_secret_key<P: PairingGroup>(pp: &PublicParams<P>, sk: &SecretKey<P>) -> Result<bool> {
    let base = pp.g1.op(&pp.g.pow(&sk.binding_value()));
    for entry in sk.entries.values() {
        if pp.group.pair(&entry.d2, &base)? != pp.group.pair(&entry.d1, &pp.g)? {
            return Ok(false);
        }
    }
    Ok(sk.entries.len() == pp.config.n)
}

/// The DH-tuple relation `pair(c1, g^{h'}) == pair(c2, g)`, where `h'` is
/// recomputed from the receiver's sketch.
pub fn verify_ciphertext<P: PairingGroup>(
    pp: &PublicParams<P>,
    ct: &Ciphertext<P>,
    par: &SketchPar,
) -> Result<bool> {
    let template = fuzzy::attrs_to_template(&ct.w_prime, pp.config.fuzzy.k())?;
    let id_prime = fuzzy::rep(&template, par)?;
    let h_prime = binding_value(pp.field(), pp.config.binding, &id_prime, &ct.w_prime);
    Ok(pp.group.pair(&ct.c1, &pp.g.pow(&h_prime))? == pp.group.pair(&ct.c2, &pp.g)?)
}

/// `g^s == g2`.
pub fn verify_master_key<P: PairingGroup>(pp: &PublicParams<P>, msk: &MasterKey) -> bool {
    pp.g.pow(&msk.s) == pp.g2
}
