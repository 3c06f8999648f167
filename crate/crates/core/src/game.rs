//! Selective-identity IND-CPA game between a challenger and an adversary.
//!
//! One trial runs Init, Setup, Phase 1, Challenge, Phase 2 and Guess. The
//! challenger answers key queries only for attribute sets sharing fewer
//! than `d` attributes with the committed target. Trials are independent:
//! each gets its own seed, split into a challenger stream and an adversary
//! stream, and trials run in parallel.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::attack::universal_decrypt;
use crate::attributes::AttributeSet;
use crate::error::{invalid, Error, Result};
use crate::fuzzy::{self, SketchPar};
use crate::pairing::{GroupElement, PairingGroup};
use crate::scheme::{
    encrypt, extract, setup, Ciphertext, MasterKey, PublicParams, SecretKey, SystemConfig,
};

/// What both parties know before the game starts.
#[derive(Clone, Debug)]
pub struct GameSetting<P: PairingGroup> {
    pub group: P,
    pub config: SystemConfig,
}

/// Key extraction as seen by the adversary.
pub trait KeyOracle<P: PairingGroup> {
    /// Returns the key and published sketch for `w`, or
    /// [`Error::QueryRejected`] when `w` is too close to the target.
    fn extract(&mut self, w: &AttributeSet) -> Result<(SecretKey<P>, SketchPar)>;
}

/// The adversary's final answer.
#[derive(Clone, Debug)]
pub struct Guess<P: PairingGroup> {
    pub bit: u8,
    /// Plaintext the adversary decrypted, if it did.
    pub recovered: Option<P::Gt>,
}

pub trait Adversary<P: PairingGroup> {
    /// Commits to the target attribute set before setup.
    fn init(&mut self, setting: &GameSetting<P>, rng: &mut dyn RngCore) -> Result<AttributeSet>;

    fn receive_params(&mut self, pp: &PublicParams<P>, target_par: &SketchPar);

    fn phase1(&mut self, oracle: &mut dyn KeyOracle<P>, rng: &mut dyn RngCore);

    /// Two messages of equal encoded length.
    fn challenge(&mut self, rng: &mut dyn RngCore) -> (P::Gt, P::Gt);

    fn phase2(&mut self, _oracle: &mut dyn KeyOracle<P>, _rng: &mut dyn RngCore) {}

    fn guess(&mut self, ct: &Ciphertext<P>, rng: &mut dyn RngCore) -> Guess<P>;
}

struct Challenger<'a, P: PairingGroup> {
    pp: &'a PublicParams<P>,
    msk: &'a MasterKey,
    target: &'a AttributeSet,
    rng: &'a mut ChaCha20Rng,
    issued: usize,
    rejected: usize,
}

impl<P: PairingGroup> KeyOracle<P> for Challenger<'_, P> {
    fn extract(&mut self, w: &AttributeSet) -> Result<(SecretKey<P>, SketchPar)> {
        let overlap = w.overlap(self.target);
        let threshold = self.pp.config().d();
        if overlap >= threshold {
            self.rejected += 1;
            return Err(Error::QueryRejected { overlap, threshold });
        }
        let out = extract(self.pp, self.msk, w, self.rng)?;
        self.issued += 1;
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub b: u8,
    pub guess: u8,
    /// Whether the adversary's decrypted plaintext equals `m_b`; absent when
    /// it did not decrypt.
    pub recovered_equals_m_b: Option<bool>,
    pub queries_answered: usize,
    pub queries_rejected: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GameResult {
    pub trials: usize,
    pub wins: usize,
    /// `|wins / trials - 1/2|`, defined as 0 when no trial ran.
    pub advantage: f64,
}

impl GameResult {
    pub fn from_counts(trials: usize, wins: usize) -> Self {
        assert!(wins <= trials);
        let advantage = if trials == 0 {
            0.0
        } else {
            (wins as f64 / trials as f64 - 0.5).abs()
        };
        Self {
            trials,
            wins,
            advantage,
        }
    }

    /// Standard deviation of `wins / trials` for a fair coin.
    pub fn coin_sigma(&self) -> f64 {
        if self.trials == 0 {
            return 0.0;
        }
        0.5 / (self.trials as f64).sqrt()
    }
}

/// Machine-readable report of a game run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GameReport {
    pub adversary: String,
    pub n: usize,
    pub d: usize,
    pub modulus_bits: u64,
    pub summary: GameResult,
    pub trials: Vec<TrialRecord>,
}

fn play_trial<P, A>(
    setting: &GameSetting<P>,
    adversary: &mut A,
    seed: [u8; 32],
) -> Result<TrialRecord>
where
    P: PairingGroup,
    A: Adversary<P>,
{
    let mut master = ChaCha20Rng::from_seed(seed);
    let mut challenger_rng = ChaCha20Rng::from_seed(master.gen());
    let mut adversary_rng = ChaCha20Rng::from_seed(master.gen());

    // Init
    let target = adversary.init(setting, &mut adversary_rng)?;
    if target.len() != setting.config.n() {
        return Err(invalid("target attribute set has the wrong size"));
    }

    // Setup, plus enrolment of the target identity
    let (pp, msk) = setup(setting.group.clone(), setting.config, &mut challenger_rng)?;
    let template = fuzzy::attrs_to_template(&target, setting.config.fuzzy().k())?;
    let (_, target_par) = fuzzy::gen(setting.config.fuzzy(), &template, &mut challenger_rng)?;
    adversary.receive_params(&pp, &target_par);

    let mut challenger = Challenger {
        pp: &pp,
        msk: &msk,
        target: &target,
        rng: &mut challenger_rng,
        issued: 0,
        rejected: 0,
    };
    adversary.phase1(&mut challenger, &mut adversary_rng);

    let (m0, m1) = adversary.challenge(&mut adversary_rng);
    if m0.to_bytes().len() != m1.to_bytes().len() {
        return Err(invalid("challenge messages differ in length"));
    }
    let b: u8 = challenger.rng.gen_range(0..=1);
    let m_b = if b == 0 { &m0 } else { &m1 };
    let ct = encrypt(&pp, m_b, &target, &target_par, challenger.rng)?;

    adversary.phase2(&mut challenger, &mut adversary_rng);
    let guess = adversary.guess(&ct, &mut adversary_rng);

    Ok(TrialRecord {
        b,
        guess: guess.bit,
        recovered_equals_m_b: guess.recovered.map(|m| &m == m_b),
        queries_answered: challenger.issued,
        queries_rejected: challenger.rejected,
    })
}

/// Plays `trials` independent games, each with a fresh adversary.
pub fn run_ind_sid_cpa_game<P, A, F, R>(
    setting: &GameSetting<P>,
    make_adversary: F,
    trials: usize,
    rng: &mut R,
) -> Result<(GameResult, Vec<TrialRecord>)>
where
    P: PairingGroup,
    A: Adversary<P>,
    F: Fn() -> A + Sync,
    R: RngCore + ?Sized,
{
    setting.config.validate()?;
    let seeds: Vec<[u8; 32]> = (0..trials).map(|_| rng.gen()).collect();
    let records = seeds
        .into_par_iter()
        .map(|seed| play_trial(setting, &mut make_adversary(), seed))
        .collect::<Result<Vec<_>>>()?;
    let wins = records.iter().filter(|r| r.b == r.guess).count();
    Ok((GameResult::from_counts(trials, wins), records))
}

/// Guesses a coin flip; the statistical baseline.
#[derive(Clone, Debug)]
pub struct RandomAdversary<P: PairingGroup> {
    group: Option<P>,
}

impl<P: PairingGroup> Default for RandomAdversary<P> {
    fn default() -> Self {
        Self { group: None }
    }
}

impl<P: PairingGroup> RandomAdversary<P> {
    pub fn new() -> Self {
        Self::default()
    }
}

impl<P: PairingGroup> Adversary<P> for RandomAdversary<P> {
    fn init(&mut self, setting: &GameSetting<P>, rng: &mut dyn RngCore) -> Result<AttributeSet> {
        self.group = Some(setting.group.clone());
        AttributeSet::random(setting.group.scalar_field(), setting.config.n(), &[], rng)
    }

    fn receive_params(&mut self, _pp: &PublicParams<P>, _target_par: &SketchPar) {}

    fn phase1(&mut self, _oracle: &mut dyn KeyOracle<P>, _rng: &mut dyn RngCore) {}

    fn challenge(&mut self, rng: &mut dyn RngCore) -> (P::Gt, P::Gt) {
        distinct_messages(self.group.as_ref().expect("init ran"), rng)
    }

    fn guess(&mut self, _ct: &Ciphertext<P>, rng: &mut dyn RngCore) -> Guess<P> {
        Guess {
            bit: rng.gen_range(0..=1),
            recovered: None,
        }
    }
}

fn distinct_messages<P: PairingGroup>(group: &P, rng: &mut dyn RngCore) -> (P::Gt, P::Gt) {
    let m0 = group.random_gt(rng);
    loop {
        let m1 = group.random_gt(rng);
        if m1 != m0 {
            return (m0, m1);
        }
    }
}

/// The chosen-plaintext adversary: one key query for a set that shares
/// `overlap < d` attributes with the target (none by default), no Phase-2
/// queries, then [`universal_decrypt`] on the challenge.
#[derive(Clone, Debug)]
pub struct AttackAdversary<P: PairingGroup> {
    overlap: usize,
    group: Option<P>,
    n: usize,
    target: Option<AttributeSet>,
    pp: Option<PublicParams<P>>,
    key: Option<SecretKey<P>>,
    messages: Option<(P::Gt, P::Gt)>,
}

impl<P: PairingGroup> Default for AttackAdversary<P> {
    fn default() -> Self {
        Self::with_overlap(0)
    }
}

impl<P: PairingGroup> AttackAdversary<P> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Queries a key sharing exactly `overlap` attributes with the target.
    pub fn with_overlap(overlap: usize) -> Self {
        Self {
            overlap,
            group: None,
            n: 0,
            target: None,
            pp: None,
            key: None,
            messages: None,
        }
    }

    pub fn key(&self) -> Option<&SecretKey<P>> {
        self.key.as_ref()
    }
}

impl<P: PairingGroup> Adversary<P> for AttackAdversary<P> {
    fn init(&mut self, setting: &GameSetting<P>, rng: &mut dyn RngCore) -> Result<AttributeSet> {
        self.group = Some(setting.group.clone());
        self.n = setting.config.n();
        let target = AttributeSet::random(setting.group.scalar_field(), self.n, &[], rng)?;
        self.target = Some(target.clone());
        Ok(target)
    }

    fn receive_params(&mut self, pp: &PublicParams<P>, _target_par: &SketchPar) {
        self.pp = Some(pp.clone());
    }

    fn phase1(&mut self, oracle: &mut dyn KeyOracle<P>, rng: &mut dyn RngCore) {
        let target = self.target.as_ref().expect("init ran");
        let keep = self.overlap.min(self.n);
        let fresh =
            match AttributeSet::random(target.field(), self.n - keep, target.as_slice(), rng) {
                Ok(set) => set.as_slice().to_vec(),
                Err(_) => Vec::new(),
            };
        let mut attrs = target.as_slice()[..keep].to_vec();
        attrs.extend(fresh);
        if let Ok(w) = AttributeSet::new(attrs) {
            self.key = oracle.extract(&w).ok().map(|(sk, _)| sk);
        }
    }

    fn challenge(&mut self, rng: &mut dyn RngCore) -> (P::Gt, P::Gt) {
        let group = self.group.as_ref().expect("init ran");
        let msgs = distinct_messages(group, rng);
        self.messages = Some(msgs.clone());
        msgs
    }

    fn guess(&mut self, ct: &Ciphertext<P>, _rng: &mut dyn RngCore) -> Guess<P> {
        let (Some(pp), Some(sk), Some((m0, _))) = (&self.pp, &self.key, &self.messages) else {
            return Guess {
                bit: 0,
                recovered: None,
            };
        };
        match universal_decrypt(pp, sk, ct) {
            Ok((recovered, _)) => Guess {
                bit: if &recovered == m0 { 0 } else { 1 },
                recovered: Some(recovered),
            },
            Err(_) => Guess {
                bit: 0,
                recovered: None,
            },
        }
    }
}
