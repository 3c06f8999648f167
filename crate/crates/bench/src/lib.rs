//! Fixtures shared by the benchmarks.

use bioibe::{
    encrypt, extract, setup, AttributeSet, Ciphertext, MasterKey, PairingGroup, PublicParams,
    SecretKey, SketchPar, SystemConfig, TransparentPairing,
};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

pub type Tp = TransparentPairing;

pub fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

/// A system with one enrolled user and a ciphertext addressed to them.
pub struct Fixture {
    pub pp: PublicParams<Tp>,
    pub msk: MasterKey,
    pub w: AttributeSet,
    pub sk: SecretKey<Tp>,
    pub par: SketchPar,
    pub ct: Ciphertext<Tp>,
    /// A key for a set disjoint from `w`.
    pub outsider: SecretKey<Tp>,
}

impl Fixture {
    pub fn new(group: Tp, n: usize, d: usize) -> Self {
        let mut rng = rng(0xB0);
        let (pp, msk) = setup(group, SystemConfig::new(n, d).unwrap(), &mut rng).unwrap();
        let w = AttributeSet::random(pp.field(), n, &[], &mut rng).unwrap();
        let (sk, par) = extract(&pp, &msk, &w, &mut rng).unwrap();
        let m = pp.group().random_gt(&mut rng);
        let ct = encrypt(&pp, &m, &w, &par, &mut rng).unwrap();
        let other = AttributeSet::random(pp.field(), n, w.as_slice(), &mut rng).unwrap();
        let (outsider, _) = extract(&pp, &msk, &other, &mut rng).unwrap();
        Self {
            pp,
            msk,
            w,
            sk,
            par,
            ct,
            outsider,
        }
    }
}
