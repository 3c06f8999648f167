//! `bioibe`: setup, key extraction, encryption, decryption, the
//! universal-decryption attack and the IND-sID-CPA game from the shell.
//!
//! Exit codes: 0 success, 2 bad arguments or configuration, 3 cryptographic
//! refusal (insufficient overlap or shares, failed check), 4 I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

mod commands;
mod config;
mod dem;
mod error;
mod store;

#[derive(Parser)]
#[command(
    name = "bioibe",
    version,
    about = "Biometric identity-based encryption toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate public parameters and a master key.
    Setup(SetupArgs),
    /// Extract a secret key and public sketch for an attribute set.
    Extract(ExtractArgs),
    /// Encrypt to an attribute set using the receiver's sketch.
    Encrypt(EncryptArgs),
    /// Decrypt honestly; refuses when the overlap is below the threshold.
    Decrypt(DecryptArgs),
    /// Decrypt any ciphertext with any key, ignoring the attribute sets.
    Attack(AttackArgs),
    /// Play IND-sID-CPA games and print a JSON report.
    Game(GameArgs),
    /// Run consistency checks on keys and ciphertexts.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    /// `H1(ID)`: keys decrypt any set sharing `d` attributes.
    Modified,
    /// `H1(w || ID)`: the exponent depends on the exact attribute set.
    Original,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AdversaryKind {
    /// Queries one key below the threshold, then decrypts the challenge
    #[value(alias = "paper")]
    Attack,
    Random,
}

#[derive(Args)]
pub struct SetupArgs {
    /// Attributes per identity [default: 8]
    #[arg(long)]
    pub n: Option<usize>,
    /// Decryption threshold [default: 4]
    #[arg(long)]
    pub d: Option<usize>,
    /// Template length in bits [default: 256]
    #[arg(long)]
    pub k: Option<usize>,
    /// Correctable bit errors [default: 2(n - d)]
    #[arg(long)]
    pub t: Option<usize>,
    /// `default` (256-bit), `small` (101) or a decimal prime
    #[arg(long)]
    pub prime: Option<String>,
    #[arg(long, value_enum)]
    pub variant: Option<Variant>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// `key = value` file; flags take precedence
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, default_value = "pp.json")]
    pub pp: PathBuf,
    #[arg(long, default_value = "msk.json")]
    pub msk: PathBuf,
    #[arg(long)]
    pub force: bool,
}

#[derive(Args)]
pub struct ExtractArgs {
    #[arg(long, default_value = "pp.json")]
    pub pp: PathBuf,
    #[arg(long, default_value = "msk.json")]
    pub msk: PathBuf,
    /// Comma-separated decimal attributes
    #[arg(long)]
    pub attrs: String,
    #[arg(long, default_value = "sk.json")]
    pub sk: PathBuf,
    #[arg(long, default_value = "par.json")]
    pub par: PathBuf,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub force: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("message").required(true).args(["input", "text", "raw"])))]
pub struct EncryptArgs {
    #[arg(long, default_value = "pp.json")]
    pub pp: PathBuf,
    /// The receiver's published sketch
    #[arg(long, default_value = "par.json")]
    pub par: PathBuf,
    /// Receiver attributes, comma-separated
    #[arg(long)]
    pub attrs: String,
    /// File to encrypt
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Literal text to encrypt
    #[arg(long)]
    pub text: Option<String>,
    /// Encrypt this target-group element (hex) directly
    #[arg(long)]
    pub raw: Option<String>,
    #[arg(long, default_value = "ct.json")]
    pub out: PathBuf,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub force: bool,
}

#[derive(Args)]
pub struct DecryptArgs {
    #[arg(long, default_value = "pp.json")]
    pub pp: PathBuf,
    #[arg(long, default_value = "sk.json")]
    pub sk: PathBuf,
    #[arg(long, default_value = "ct.json")]
    pub ct: PathBuf,
    /// Write the plaintext here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub force: bool,
}

#[derive(Args)]
pub struct AttackArgs {
    #[arg(long, default_value = "pp.json")]
    pub pp: PathBuf,
    /// Any honestly extracted key
    #[arg(long, default_value = "sk.json")]
    pub sk: PathBuf,
    #[arg(long, default_value = "ct.json")]
    pub ct: PathBuf,
    /// Write the recovered plaintext here
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub force: bool,
}

#[derive(Args)]
pub struct GameArgs {
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, value_enum, default_value_t = AdversaryKind::Attack)]
    pub adversary: AdversaryKind,
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    #[arg(long, default_value_t = 4)]
    pub d: usize,
    #[arg(long, default_value = "default")]
    pub prime: String,
    /// Attributes the attack adversary's query shares with the target
    #[arg(long, default_value_t = 0)]
    pub overlap: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Omit per-trial records from the report
    #[arg(long)]
    pub summary_only: bool,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "pp.json")]
    pub pp: PathBuf,
    #[arg(long)]
    pub msk: Option<PathBuf>,
    #[arg(long)]
    pub sk: Option<PathBuf>,
    #[arg(long, requires = "par")]
    pub ct: Option<PathBuf>,
    #[arg(long)]
    pub par: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Setup(a) => commands::setup(a),
        Command::Extract(a) => commands::extract(a),
        Command::Encrypt(a) => commands::encrypt(a),
        Command::Decrypt(a) => commands::decrypt(a),
        Command::Attack(a) => commands::attack(a),
        Command::Game(a) => commands::game(a),
        Command::Verify(a) => commands::verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bioibe: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
