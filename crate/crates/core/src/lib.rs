//! Biometric identity-based encryption over a symmetric bilinear pairing,
//! together with a chosen-plaintext attack that breaks it and an
//! IND-sID-CPA game harness demonstrating the break.
//!
//! # Layout
//!
//! - [`field`], [`poly`], [`pairing`], [`transparent`]: exponent field,
//!   polynomials and Lagrange coefficients, the pairing interface and the
//!   discrete-log-transparent backend.
//! - [`fuzzy`]: code-offset fuzzy extractor turning attribute sets into
//!   identities.
//! - [`scheme`]: Setup, Extract, Encrypt and Decrypt, in both the
//!   identity-only and the attribute-and-identity binding.
//! - [`attack`]: decryption of any ciphertext with any key.
//! - [`game`]: the IND-sID-CPA challenger with a random and an attacking
//!   adversary.
//! - [`record`]: the versioned JSON envelope used for files on disk.
//!
//! # Warning
//!
//! The scheme implemented here is insecure by construction and the
//! transparent backend publishes discrete logarithms. Nothing in this crate
//! protects data.

pub mod attack;
pub mod attributes;
pub mod error;
pub mod field;
pub mod fuzzy;
pub mod game;
pub mod pairing;
pub mod poly;
pub mod record;
pub mod scheme;
pub mod transparent;
mod wire;

pub use attack::{universal_decrypt, AttackTranscript};
pub use attributes::AttributeSet;
pub use error::{Error, Result};
pub use field::{Scalar, ScalarField};
pub use fuzzy::{BiometricTemplate, FuzzyParams, Identity, SketchPar};
pub use game::{
    run_ind_sid_cpa_game, Adversary, AttackAdversary, GameReport, GameResult, GameSetting,
    RandomAdversary, TrialRecord,
};
pub use pairing::{interpolate_at_zero_in_exponent, GroupElement, PairingGroup};
pub use poly::{lagrange_coeff, Polynomial};
pub use scheme::{
    decrypt, decrypt_with_subset, encrypt, extract, hash_to_scalar_h1, setup, Binding, Ciphertext,
    MasterKey, PublicParams, SecretKey, SystemConfig,
};
pub use transparent::TransparentPairing;
