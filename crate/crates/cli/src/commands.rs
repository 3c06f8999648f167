use std::io::Write;
use std::path::Path;

use bioibe::record::{KeyStoreRecord, Role};
use bioibe::scheme::{verify_ciphertext, verify_master_key, verify_secret_key};
use bioibe::{
    run_ind_sid_cpa_game, universal_decrypt, AttackAdversary, Binding, Ciphertext, FuzzyParams,
    GameReport, GameSetting, GroupElement, PairingGroup, RandomAdversary, ScalarField,
    SystemConfig, TrialRecord,
};
use clap::ValueEnum;
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde_json::Value;

use crate::error::{usage, CliError, CliResult};
use crate::store::{self, Tp};
use crate::{
    config, dem, AdversaryKind, AttackArgs, DecryptArgs, EncryptArgs, ExtractArgs, GameArgs,
    SetupArgs, Variant, VerifyArgs,
};

const SMALL_PRIME: u64 = 101;

fn rng(seed: Option<u64>) -> ChaCha20Rng {
    match seed {
        Some(s) => ChaCha20Rng::seed_from_u64(s),
        None => ChaCha20Rng::from_entropy(),
    }
}

fn group_for(prime: &str) -> CliResult<Tp> {
    match prime {
        "default" => Ok(Tp::default_256()),
        "small" => Ok(Tp::small(SMALL_PRIME)?),
        other => {
            let p = BigUint::parse_bytes(other.as_bytes(), 10).ok_or_else(|| {
                usage(format!(
                    "--prime: `{other}` is not default, small or a decimal"
                ))
            })?;
            Ok(Tp::new(ScalarField::new(p)?))
        }
    }
}

fn parse_field<T: std::str::FromStr>(key: &str, value: &str) -> CliResult<T> {
    value
        .parse()
        .map_err(|_| usage(format!("{key}: cannot parse `{value}`")))
}

pub fn setup(args: SetupArgs) -> CliResult<()> {
    let file = match &args.config {
        Some(path) => {
            let text = String::from_utf8(store::read_bytes(path)?)
                .map_err(|_| usage(format!("{}: not UTF-8", path.display())))?;
            config::parse(&text)?
        }
        None => Default::default(),
    };
    let from_file = |key: &str| file.get(key).map(String::as_str);
    let pick = |flag: Option<usize>, key: &str| -> CliResult<Option<usize>> {
        match (flag, from_file(key)) {
            (Some(v), _) => Ok(Some(v)),
            (None, Some(s)) => parse_field(key, s).map(Some),
            (None, None) => Ok(None),
        }
    };

    let n = pick(args.n, "n")?.unwrap_or(8);
    let d = pick(args.d, "d")?.unwrap_or(4);
    let k = pick(args.k, "k")?;
    let t = pick(args.t, "t")?;
    let seed = match (args.seed, from_file("seed")) {
        (Some(s), _) => Some(s),
        (None, Some(s)) => Some(parse_field("seed", s)?),
        (None, None) => None,
    };
    let prime = args
        .prime
        .as_deref()
        .or(from_file("prime"))
        .unwrap_or("default");
    let variant = match (args.variant, from_file("variant")) {
        (Some(v), _) => v,
        (None, Some(s)) => {
            Variant::from_str(s, true).map_err(|e| usage(format!("variant: {e}")))?
        }
        (None, None) => Variant::Modified,
    };

    let group = group_for(prime)?;
    let mut config = SystemConfig::new(n, d)?;
    if k.is_some() || t.is_some() {
        let defaults = FuzzyParams::for_threshold(n, d)?;
        let fuzzy = FuzzyParams::new(k.unwrap_or(defaults.k()), t.unwrap_or(defaults.t()))?;
        config = config.with_fuzzy(fuzzy)?;
    }
    if variant == Variant::Original {
        config = config.with_binding(Binding::AttributesAndIdentity);
    }

    for path in [&args.pp, &args.msk] {
        if path.exists() && !args.force {
            return Err(usage(format!(
                "{} already exists; pass --force to overwrite",
                path.display()
            )));
        }
    }
    let (pp, msk) = bioibe::setup(group, config, &mut rng(seed))?;
    let pp_rec = KeyStoreRecord::new(Role::PublicParams, pp.to_bytes()).with_seed(seed);
    let msk_rec = KeyStoreRecord::new(Role::MasterKey, msk.to_bytes()).with_seed(seed);
    store::write_record(&args.pp, &pp_rec, args.force)?;
    store::write_record(&args.msk, &msk_rec, args.force)?;
    eprintln!(
        "setup: n={n} d={d} k={} t={} modulus={} bits, wrote {} and {}",
        config.fuzzy().k(),
        config.fuzzy().t(),
        pp.field().modulus().bits(),
        args.pp.display(),
        args.msk.display()
    );
    Ok(())
}

pub fn extract(args: ExtractArgs) -> CliResult<()> {
    let pp = store::load_pp(&args.pp)?;
    let msk = store::load_msk(&args.msk, &pp)?;
    if !verify_master_key(&pp, &msk) {
        return Err(CliError::Refused(
            "master key does not match the public parameters".into(),
        ));
    }
    let w = store::parse_attrs(pp.field(), &args.attrs)?;
    for path in [&args.sk, &args.par] {
        if path.exists() && !args.force {
            return Err(usage(format!(
                "{} already exists; pass --force to overwrite",
                path.display()
            )));
        }
    }
    let (sk, par) = bioibe::extract(&pp, &msk, &w, &mut rng(args.seed))?;
    let sk_rec = KeyStoreRecord::new(Role::SecretKey, sk.to_bytes()).with_seed(args.seed);
    let par_rec = KeyStoreRecord::new(Role::SketchPar, par.to_bytes()).with_seed(args.seed);
    store::write_file(&args.sk, sk_rec.to_json().as_bytes(), args.force, true)?;
    store::write_record(&args.par, &par_rec, args.force)?;
    eprintln!(
        "extract: identity {}, wrote {} and {}",
        sk.identity().to_hex(),
        args.sk.display(),
        args.par.display()
    );
    Ok(())
}

pub fn encrypt(args: EncryptArgs) -> CliResult<()> {
    let pp = store::load_pp(&args.pp)?;
    let par = store::load_par(&args.par)?;
    let w_prime = store::parse_attrs(pp.field(), &args.attrs)?;
    let mut rng = rng(args.seed);

    let record = if let Some(hex_m) = &args.raw {
        let bytes = hex::decode(hex_m.trim()).map_err(|e| usage(format!("--raw: {e}")))?;
        let m = pp.group().decode_gt(&bytes)?;
        let ct = bioibe::encrypt(&pp, &m, &w_prime, &par, &mut rng)?;
        KeyStoreRecord::new(Role::Ciphertext, ct.to_bytes())
    } else {
        let payload = match (&args.input, &args.text) {
            (Some(path), _) => store::read_bytes(path)?,
            (None, Some(text)) => text.as_bytes().to_vec(),
            (None, None) => unreachable!("clap requires one message source"),
        };
        let key = pp.group().random_gt(&mut rng);
        let ct = bioibe::encrypt(&pp, &key, &w_prime, &par, &mut rng)?;
        let ct_bytes = ct.to_bytes();
        let sealed = dem::seal(&key, &ct_bytes, &payload, &mut rng);
        KeyStoreRecord::new(Role::Ciphertext, ct_bytes).with_dem(sealed)
    };
    store::write_record(&args.out, &record.with_seed(args.seed), args.force)?;
    eprintln!("encrypt: wrote {}", args.out.display());
    Ok(())
}

/// A ciphertext plus the sealed payload, if it has one.
fn load_ct(
    path: &Path,
    pp: &bioibe::PublicParams<Tp>,
) -> CliResult<(Ciphertext<Tp>, KeyStoreRecord)> {
    let rec = store::read_record(path, Role::Ciphertext)?;
    let ct = Ciphertext::from_bytes(pp, &rec.payload)
        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok((ct, rec))
}

/// Plaintext bytes: the opened payload, or the hex of a raw message.
fn plaintext(m: &<Tp as PairingGroup>::Gt, rec: &KeyStoreRecord) -> CliResult<Vec<u8>> {
    match &rec.dem {
        Some(sealed) => dem::open(m, &rec.payload, sealed),
        None => Ok(format!("{}\n", hex::encode(m.to_bytes())).into_bytes()),
    }
}

fn emit(out: Option<&Path>, bytes: &[u8], force: bool) -> CliResult<()> {
    match out {
        Some(path) => store::write_file(path, bytes, force, false),
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

pub fn decrypt(args: DecryptArgs) -> CliResult<()> {
    let pp = store::load_pp(&args.pp)?;
    let sk = store::load_sk(&args.sk, &pp)?;
    let (ct, rec) = load_ct(&args.ct, &pp)?;
    let m = bioibe::decrypt(&pp, &sk, &ct)?;
    emit(args.out.as_deref(), &plaintext(&m, &rec)?, args.force)
}

pub fn attack(args: AttackArgs) -> CliResult<()> {
    let pp = store::load_pp(&args.pp)?;
    let sk = store::load_sk(&args.sk, &pp)?;
    let (ct, rec) = load_ct(&args.ct, &pp)?;
    let (m, transcript) = universal_decrypt(&pp, &sk, &ct)?;
    let recovered = plaintext(&m, &rec)?;

    let mut report = transcript.to_json();
    report["threshold"] = Value::from(pp.config().d());
    report["below_threshold"] = Value::from(transcript.below_threshold(pp.config().d()));
    if rec.dem.is_some() {
        report["payload_hex"] = Value::from(hex::encode(&recovered));
    }
    if let Some(path) = &args.out {
        store::write_file(path, &recovered, args.force, false)?;
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("json serializes")
    );
    Ok(())
}

pub fn game(args: GameArgs) -> CliResult<()> {
    let group = group_for(&args.prime)?;
    let modulus_bits = group.scalar_field().modulus().bits();
    let setting = GameSetting {
        group,
        config: SystemConfig::new(args.n, args.d)?,
    };
    if args.overlap >= args.d {
        return Err(usage(format!(
            "--overlap {} would be rejected by the challenger (threshold {})",
            args.overlap, args.d
        )));
    }
    let mut rng = rng(args.seed);
    let (summary, trials): (_, Vec<TrialRecord>) = match args.adversary {
        AdversaryKind::Attack => {
            let overlap = args.overlap;
            run_ind_sid_cpa_game(
                &setting,
                || AttackAdversary::<Tp>::with_overlap(overlap),
                args.trials,
                &mut rng,
            )?
        }
        AdversaryKind::Random => {
            run_ind_sid_cpa_game(&setting, RandomAdversary::<Tp>::new, args.trials, &mut rng)?
        }
    };
    let report = GameReport {
        adversary: match args.adversary {
            AdversaryKind::Attack => "attack".into(),
            AdversaryKind::Random => "random".into(),
        },
        n: args.n,
        d: args.d,
        modulus_bits,
        summary,
        trials: if args.summary_only {
            Vec::new()
        } else {
            trials
        },
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("json serializes")
    );
    Ok(())
}

pub fn verify(args: VerifyArgs) -> CliResult<()> {
    let pp = store::load_pp(&args.pp)?;
    let mut checks: Vec<(String, bool)> = vec![("public parameters decode".into(), true)];
    if let Some(path) = &args.msk {
        let msk = store::load_msk(path, &pp)?;
        checks.push(("master key matches g2".into(), verify_master_key(&pp, &msk)));
    }
    if let Some(path) = &args.sk {
        let sk = store::load_sk(path, &pp)?;
        checks.push((
            "secret key pairing relations".into(),
            verify_secret_key(&pp, &sk)?,
        ));
    }
    if let (Some(ct_path), Some(par_path)) = (&args.ct, &args.par) {
        let par = store::load_par(par_path)?;
        let (ct, _) = load_ct(ct_path, &pp)?;
        checks.push((
            "ciphertext C1/C2 relation".into(),
            verify_ciphertext(&pp, &ct, &par)?,
        ));
    }
    for (name, ok) in &checks {
        println!("{name}: {}", if *ok { "ok" } else { "FAILED" });
    }
    let failed = checks.iter().filter(|(_, ok)| !ok).count();
    if failed > 0 {
        return Err(CliError::Refused(format!("{failed} check(s) failed")));
    }
    Ok(())
}
