//! Acceptance suite. Prints one PASS or FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use bioibe::fuzzy::{self, attrs_to_template};
use bioibe::record::{KeyStoreRecord, Role};
use bioibe::scheme::select_subset;
use bioibe::{
    decrypt, encrypt, extract, hash_to_scalar_h1, interpolate_at_zero_in_exponent, lagrange_coeff,
    run_ind_sid_cpa_game, setup, universal_decrypt, AttackAdversary, AttributeSet, Binding,
    BiometricTemplate, Ciphertext, Error, FuzzyParams, GameSetting, GroupElement, MasterKey,
    PairingGroup, Polynomial, PublicParams, RandomAdversary, Scalar, ScalarField, SecretKey,
    SketchPar, SystemConfig, TransparentPairing,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

type Tp = TransparentPairing;
type Outcome = Result<String, Box<dyn std::error::Error>>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+).into());
        }
    };
}

fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

fn groups() -> Vec<(&'static str, Tp)> {
    vec![
        ("p256", Tp::default_256()),
        ("p101", Tp::small(101).unwrap()),
    ]
}

/// `n` in {4, 8}, `d` in 2..=n.
fn thresholds() -> Vec<(usize, usize)> {
    [4usize, 8]
        .into_iter()
        .flat_map(|n| (2..=n).map(move |d| (n, d)))
        .collect()
}

/// A random `n`-set and a second `n`-set sharing exactly `overlap` of its attributes.
fn overlapping_sets<R: Rng>(
    field: &ScalarField,
    n: usize,
    overlap: usize,
    rng: &mut R,
) -> bioibe::Result<(AttributeSet, AttributeSet)> {
    let w = AttributeSet::random(field, n, &[], rng)?;
    let mut kept = w.as_slice().to_vec();
    kept.shuffle(rng);
    kept.truncate(overlap);
    if overlap < n {
        let fresh = AttributeSet::random(field, n - overlap, w.as_slice(), rng)?;
        kept.extend(fresh.iter().cloned());
    }
    Ok((w, AttributeSet::new(kept)?))
}

const TRIALS_PER_CONFIG: usize = 26;

fn honest_correctness() -> Outcome {
    let mut rng = rng(0xC1);
    let mut trials = 0;
    for (label, group) in groups() {
        for (n, d) in thresholds() {
            for i in 0..TRIALS_PER_CONFIG {
                let (pp, msk) = setup(group.clone(), SystemConfig::new(n, d)?, &mut rng)?;
                let overlap = d + i % (n - d + 1);
                let (w, w_prime) = overlapping_sets(pp.field(), n, overlap, &mut rng)?;
                let (sk, par) = extract(&pp, &msk, &w, &mut rng)?;
                let m = group.random_gt(&mut rng);
                let ct = encrypt(&pp, &m, &w_prime, &par, &mut rng)?;
                let out = decrypt(&pp, &sk, &ct)?;
                ensure!(
                    out == m,
                    "{label} n={n} d={d} overlap={overlap}: wrong plaintext"
                );
                trials += 1;
            }
        }
    }
    ensure!(trials >= 500, "only {trials} trials ran");
    Ok(format!(
        "{trials}/{trials} decryptions correct, overlap >= d"
    ))
}

fn attack_success() -> Outcome {
    let mut rng = rng(0xC2);
    let mut trials = 0;
    let mut per_overlap = [0usize; 8];
    for (label, group) in groups() {
        for (n, d) in thresholds() {
            for i in 0..TRIALS_PER_CONFIG {
                let (pp, msk) = setup(group.clone(), SystemConfig::new(n, d)?, &mut rng)?;
                let overlap = i % d;
                let (w_prime, w) = overlapping_sets(pp.field(), n, overlap, &mut rng)?;
                let (_, target_par) = extract(&pp, &msk, &w_prime, &mut rng)?;
                let (sk, _) = extract(&pp, &msk, &w, &mut rng)?;
                let m = group.random_gt(&mut rng);
                let ct = encrypt(&pp, &m, &w_prime, &target_par, &mut rng)?;
                ensure!(
                    matches!(
                        decrypt(&pp, &sk, &ct),
                        Err(Error::InsufficientOverlap { .. })
                    ),
                    "{label} n={n} d={d}: honest decryption did not refuse overlap {overlap}"
                );
                let (recovered, transcript) = universal_decrypt(&pp, &sk, &ct)?;
                ensure!(
                    recovered == m,
                    "{label} n={n} d={d} overlap={overlap}: attack missed"
                );
                ensure!(
                    transcript.overlap() == overlap && transcript.below_threshold(d),
                    "bad transcript"
                );
                per_overlap[overlap] += 1;
                trials += 1;
            }
        }
    }
    ensure!(trials >= 500, "only {trials} trials ran");
    Ok(format!(
        "{trials}/{trials} plaintexts recovered, trials by overlap 0..7 = {per_overlap:?}"
    ))
}

fn game_advantage() -> Outcome {
    let setting = GameSetting {
        group: Tp::default_256(),
        config: SystemConfig::new(8, 4)?,
    };
    let (attack, records) =
        run_ind_sid_cpa_game(&setting, AttackAdversary::<Tp>::new, 100, &mut rng(0xC3))?;
    ensure!(
        attack.trials == 100 && attack.wins == 100,
        "attack adversary won {}/100",
        attack.wins
    );
    ensure!(
        attack.advantage == 0.5,
        "attack advantage {}",
        attack.advantage
    );
    ensure!(
        records.iter().all(|r| r.recovered_equals_m_b == Some(true)),
        "a recovered plaintext differed from m_b"
    );
    ensure!(
        records
            .iter()
            .all(|r| r.queries_answered == 1 && r.queries_rejected == 0),
        "attack adversary triggered a rejection"
    );

    let (random, _) =
        run_ind_sid_cpa_game(&setting, RandomAdversary::<Tp>::new, 1000, &mut rng(0xC4))?;
    let sigma = random.coin_sigma();
    ensure!(
        random.trials == 1000,
        "random run had {} trials",
        random.trials
    );
    let within = random.advantage <= 3.0 * sigma;
    ensure!(
        within,
        "random advantage {:.4} exceeds 3 sigma = {:.4}",
        random.advantage,
        3.0 * sigma
    );
    Ok(format!(
        "attack 100/100 (advantage {}), random {}/1000 (advantage {:.4} <= {:.4})",
        attack.advantage,
        random.wins,
        random.advantage,
        3.0 * sigma
    ))
}

fn decrypt_chain() -> Outcome {
    let mut rng = rng(0xC5);
    let mut trials = 0;
    for (label, group) in groups() {
        for (n, d) in thresholds() {
            for i in 0..10 {
                let (pp, msk) = setup(group.clone(), SystemConfig::new(n, d)?, &mut rng)?;
                let overlap = d + i % (n - d + 1);
                let (w, w_prime) = overlapping_sets(pp.field(), n, overlap, &mut rng)?;
                let (sk, par) = extract(&pp, &msk, &w, &mut rng)?;
                let m = group.random_gt(&mut rng);
                let ct = encrypt(&pp, &m, &w_prime, &par, &mut rng)?;
                check_chain(&pp, &msk, &sk, &ct, &par, &m)
                    .map_err(|e| format!("{label} n={n} d={d} overlap={overlap}: {e}"))?;
                trials += 1;
            }
        }
    }
    Ok(format!("{trials} trials, every intermediate equality held"))
}

fn check_chain(
    pp: &PublicParams<Tp>,
    msk: &MasterKey,
    sk: &SecretKey<Tp>,
    ct: &Ciphertext<Tp>,
    par: &SketchPar,
    m: &<Tp as PairingGroup>::Gt,
) -> Result<(), String> {
    let group = pp.group();
    let field = pp.field();
    let s = msk.secret();
    let x1 = pp.g1().log();
    let h = sk.binding_value();
    let r = ct.c1.log();

    let template =
        attrs_to_template(&ct.w_prime, pp.config().fuzzy().k()).map_err(|e| e.to_string())?;
    let id_prime = fuzzy::rep(&template, par).map_err(|e| e.to_string())?;
    let h_prime = hash_to_scalar_h1(field, &id_prime, None);
    ensure!(h == h_prime, "h != h'");
    ensure!(*ct.c2.log() == r * &h_prime, "log C2 != r h'");
    ensure!(
        *ct.c3.log() == m.log() + &(&(x1 * s) * r),
        "log C3 != log m + r s x1"
    );

    let subset = select_subset(pp, sk, ct).map_err(|e| e.to_string())?;
    let share = |pick: fn(
        &bioibe::scheme::KeyEntry<bioibe::transparent::TransparentG>,
    ) -> &bioibe::transparent::TransparentG| {
        subset
            .iter()
            .map(|mu| (mu.clone(), pick(&sk.entries()[mu]).clone()))
            .collect::<Vec<_>>()
    };
    let d2 = interpolate_at_zero_in_exponent(&share(|e| &e.d2)).map_err(|e| e.to_string())?;
    let d1 = interpolate_at_zero_in_exponent(&share(|e| &e.d1)).map_err(|e| e.to_string())?;
    ensure!(d2.log() == s, "log prod d2^Delta != s");
    ensure!(
        *d1.log() == &(x1 + &h) * s,
        "log prod d1^Delta != (x1 + h) s"
    );

    let num = group.pair(&ct.c2, &d2).map_err(|e| e.to_string())?;
    let den = group.pair(&ct.c1, &d1).map_err(|e| e.to_string())?;
    ensure!(*num.log() == &(&h_prime * r) * s, "log numerator != h' r s");
    ensure!(
        *den.log() == &(r * s) * &(x1 + &h),
        "log denominator != r s (x1 + h)"
    );
    ensure!(ct.c3.op(&num).div(&den) == *m, "quotient != m");

    // the attack path: prod e(C1, u_i)^Delta = e(g, g1)^{rs}
    let (_, transcript) = universal_decrypt(pp, sk, ct).map_err(|e| e.to_string())?;
    let mut mask = group.gt_identity();
    for mu in &transcript.chosen_s {
        let coeff =
            lagrange_coeff(mu, &transcript.chosen_s, &field.zero()).map_err(|e| e.to_string())?;
        let term = group
            .pair(&ct.c1, &transcript.intermediate[mu])
            .map_err(|e| e.to_string())?;
        mask = mask.op(&term.pow(&coeff));
    }
    ensure!(
        *mask.log() == &(r * s) * x1,
        "log prod e(C1,u_i)^Delta != r s x1"
    );
    Ok(())
}

fn attribute_binding_failure() -> Outcome {
    let mut rng = rng(0xC6);
    let group = Tp::default_256();
    let (n, d) = (8, 4);
    let config = SystemConfig::new(n, d)?.with_binding(Binding::AttributesAndIdentity);
    let trials = 200;
    let mut wrong = 0;
    for i in 0..trials {
        let (pp, msk) = setup(group.clone(), config, &mut rng)?;
        let overlap = d + i % (n - d);
        let (w, w_prime) = overlapping_sets(pp.field(), n, overlap, &mut rng)?;
        ensure!(w != w_prime, "sets coincide");
        let (sk, par) = extract(&pp, &msk, &w, &mut rng)?;
        let m = group.random_gt(&mut rng);
        let ct = encrypt(&pp, &m, &w_prime, &par, &mut rng)?;
        if decrypt(&pp, &sk, &ct)? != m {
            wrong += 1;
        }
    }
    ensure!(
        wrong * 100 >= trials * 99,
        "only {wrong}/{trials} outputs differed from m"
    );
    Ok(format!(
        "{wrong}/{trials} outputs differ from m under H1(w || ID)"
    ))
}

const ALGEBRA_CASES: usize = 1000;

fn algebra() -> Outcome {
    let mut rng = rng(0xC7);
    let big = Tp::default_256();
    let f = big.scalar_field().clone();
    let p = f.modulus().clone();
    let g = big.generator();

    for _ in 0..ALGEBRA_CASES {
        let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
        let e = big.pair(&g.pow(&a), &g.pow(&b))?;
        ensure!(
            *e.log().value() == (a.value() * b.value()) % &p,
            "e(g^a, g^b) != e(g,g)^ab"
        );
        let (u, v) = (big.random_g(&mut rng), big.random_g(&mut rng));
        let uv = big.pair(&u, &v)?;
        ensure!(big.pair(&u.pow(&c), &v)? == uv.pow(&c), "left linearity");
        ensure!(big.pair(&u, &v.pow(&c))? == uv.pow(&c), "right linearity");
        ensure!(
            big.pair(&u.op(&g), &v)? == uv.op(&big.pair(&g, &v)?),
            "additivity"
        );
        if !u.is_identity() && !v.is_identity() {
            ensure!(!uv.is_identity(), "degenerate pairing on random inputs");
        }
    }
    ensure!(!big.pair(&g, &g)?.is_identity(), "e(g, g) is the identity");

    for _ in 0..ALGEBRA_CASES {
        let size = rng.gen_range(1..=8);
        let set: Vec<Scalar> = AttributeSet::random(&f, size, &[], &mut rng)?
            .as_slice()
            .to_vec();
        let degree = rng.gen_range(0..size);
        let c = f.random(&mut rng);
        let q = Polynomial::sample(&mut rng, degree, c);
        let x = f.random(&mut rng);
        let mut sum = f.zero();
        let mut weights = f.zero();
        for i in &set {
            let delta = lagrange_coeff(i, &set, &x)?;
            sum = &sum + &(&delta * &q.eval(i));
            weights = &weights + &delta;
        }
        ensure!(
            sum == q.eval(&x),
            "partition of unity failed at size {size}"
        );
        ensure!(weights == f.one(), "basis does not sum to one");

        let base = big.random_g(&mut rng);
        let scalar_shares: Vec<(Scalar, Scalar)> =
            set.iter().map(|i| (i.clone(), q.eval(i))).collect();
        let exp_shares: Vec<_> = scalar_shares
            .iter()
            .map(|(i, y)| (i.clone(), base.pow(y)))
            .collect();
        let scalar = bioibe::poly::interpolate(&scalar_shares, &f.zero())?;
        ensure!(scalar == q.coeffs()[0], "scalar interpolation missed q(0)");
        ensure!(
            interpolate_at_zero_in_exponent(&exp_shares)? == base.pow(&scalar),
            "exponent interpolation disagrees with scalar interpolation"
        );
    }

    let exhaustive = exhaustive_small_prime(&mut rng)?;
    Ok(format!(
        "{ALGEBRA_CASES} random cases per property at 256 bits, {exhaustive} exhaustive checks at p = 101"
    ))
}

fn exhaustive_small_prime(rng: &mut ChaCha20Rng) -> Result<usize, Box<dyn std::error::Error>> {
    const P: u64 = 101;
    let small = Tp::small(P)?;
    let f = small.scalar_field().clone();
    let g = small.generator();
    let mut checks = 0;

    for a in 0..P {
        for b in 0..P {
            let e = small.pair(&g.pow(&f.element(a)), &g.pow(&f.element(b)))?;
            ensure!(
                *e.log() == f.element(a * b % P),
                "bilinearity at a={a} b={b}"
            );
            ensure!(
                e.is_identity() == (a == 0 || b == 0),
                "degeneracy at a={a} b={b}"
            );
            checks += 1;
        }
    }

    // every pair of distinct nonzero points, every evaluation point
    for i in 1..P {
        for j in (i + 1)..P {
            let set = [f.element(i), f.element(j)];
            for x in 0..P {
                let x_s = f.element(x);
                let di = lagrange_coeff(&set[0], &set, &x_s)?;
                let dj = lagrange_coeff(&set[1], &set, &x_s)?;
                ensure!(&di + &dj == f.one(), "basis sum at {{{i},{j}}} x={x}");
                ensure!(
                    &(&di * &set[0]) + &(&dj * &set[1]) == x_s,
                    "linear reproduction at {{{i},{j}}} x={x}"
                );
                checks += 1;
            }
            let c = f.random(rng);
            let q = Polynomial::sample(rng, 1, c);
            let base = small.random_g(rng);
            let shares: Vec<_> = set
                .iter()
                .map(|pt| (pt.clone(), base.pow(&q.eval(pt))))
                .collect();
            ensure!(
                interpolate_at_zero_in_exponent(&shares)? == base.pow(&q.coeffs()[0]),
                "exponent interpolation at {{{i},{j}}}"
            );
            checks += 1;
        }
    }
    Ok(checks)
}

fn fuzzy_extractor() -> Outcome {
    let mut rng = rng(0xC8);
    let params = FuzzyParams::new(32, 4)?;
    let mut templates = vec![
        BiometricTemplate::zeros(32),
        BiometricTemplate::zeros(32).complement(),
    ];
    templates.extend((0..4).map(|_| BiometricTemplate::random(32, &mut rng)));

    let mut patterns = 0usize;
    for b in &templates {
        let (id, par) = fuzzy::gen(&params, b, &mut rng)?;
        for flips in flip_patterns(32, 4) {
            let mut noisy = b.clone();
            for &i in &flips {
                noisy.flip(i);
            }
            ensure!(
                fuzzy::rep(&noisy, &par)? == id,
                "flips {flips:?} not recovered"
            );
            patterns += 1;
        }
    }
    let per_template = patterns / templates.len();
    ensure!(
        per_template == 41_449,
        "enumerated {per_template} patterns per template"
    );

    let pairs = overlap_implies_identity()?;
    Ok(format!(
        "{per_template} flip patterns x {} templates recovered, {pairs} overlapping set pairs share an ID",
        templates.len()
    ))
}

/// All sets of at most `t` distinct positions below `k`.
fn flip_patterns(k: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..t {
        let mut next = Vec::new();
        for pattern in &frontier {
            let start = pattern.last().map_or(0, |&i: &usize| i + 1);
            for i in start..k {
                let mut grown: Vec<usize> = pattern.clone();
                grown.push(i);
                next.push(grown);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Every pair of `n`-subsets of a small universe with overlap at least `d`
/// maps to the same ID under the shipped parameters.
fn overlap_implies_identity() -> Result<usize, Box<dyn std::error::Error>> {
    let f = ScalarField::default_256();
    let mut rng = rng(0xC9);
    let mut pairs = 0;
    for (n, universe) in [(4usize, 9u64), (8, 11)] {
        let sets: Vec<AttributeSet> = subsets(universe, n)
            .into_iter()
            .map(|s| AttributeSet::from_u64s(&f, &s))
            .collect::<bioibe::Result<_>>()?;
        for d in 1..=n {
            let params = FuzzyParams::for_threshold(n, d)?;
            let enrolled: Vec<_> = sets
                .iter()
                .map(|w| {
                    let b = attrs_to_template(w, params.k())?;
                    fuzzy::gen(&params, &b, &mut rng)
                })
                .collect::<bioibe::Result<_>>()?;
            for (w, (id, par)) in sets.iter().zip(&enrolled) {
                for w_prime in sets.iter().filter(|v| v.overlap(w) >= d) {
                    let b_prime = attrs_to_template(w_prime, params.k())?;
                    ensure!(
                        fuzzy::rep(&b_prime, par)? == *id,
                        "n={n} d={d}: {w:?} vs {w_prime:?}"
                    );
                    pairs += 1;
                }
            }
        }
    }
    Ok(pairs)
}

fn subsets(universe: u64, size: usize) -> Vec<Vec<u64>> {
    (0u32..1 << universe)
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| {
            (0..universe)
                .filter(|i| m >> i & 1 == 1)
                .map(|i| i + 1)
                .collect()
        })
        .collect()
}

const ROUND_TRIPS: usize = 1000;

fn serialization() -> Outcome {
    let mut rng = rng(0xCA);
    let mut counts = [0usize; 6];
    for i in 0..ROUND_TRIPS {
        let group = if i % 2 == 0 {
            Tp::default_256()
        } else {
            Tp::small(101)?
        };
        let n = rng.gen_range(1..=8);
        let d = rng.gen_range(1..=n);
        let binding = if rng.gen() {
            Binding::IdentityOnly
        } else {
            Binding::AttributesAndIdentity
        };
        let config = SystemConfig::new(n, d)?.with_binding(binding);
        let (pp, msk) = setup(group.clone(), config, &mut rng)?;
        let w = AttributeSet::random(pp.field(), n, &[], &mut rng)?;
        let (sk, par) = extract(&pp, &msk, &w, &mut rng)?;
        let ct = encrypt(&pp, &group.random_gt(&mut rng), &w, &par, &mut rng)?;

        let bytes = pp.to_bytes();
        let back = PublicParams::<Tp>::from_bytes(&bytes)?;
        ensure!(
            back == pp && back.to_bytes() == bytes,
            "public params round trip {i}"
        );
        counts[0] += 1;

        let bytes = msk.to_bytes();
        let back = MasterKey::from_bytes(pp.field(), &bytes)?;
        ensure!(
            back == msk && back.to_bytes() == bytes,
            "master key round trip {i}"
        );
        counts[1] += 1;

        let bytes = sk.to_bytes();
        let back = SecretKey::from_bytes(&pp, &bytes)?;
        ensure!(
            back == sk && back.to_bytes() == bytes,
            "secret key round trip {i}"
        );
        counts[2] += 1;

        let bytes = par.to_bytes();
        let back = SketchPar::from_bytes(&bytes)?;
        ensure!(
            back == par && back.to_bytes() == bytes,
            "sketch round trip {i}"
        );
        counts[3] += 1;

        let bytes = ct.to_bytes();
        let back = Ciphertext::from_bytes(&pp, &bytes)?;
        ensure!(
            back == ct && back.to_bytes() == bytes,
            "ciphertext round trip {i}"
        );
        counts[4] += 1;

        let role = [
            Role::PublicParams,
            Role::MasterKey,
            Role::SecretKey,
            Role::SketchPar,
            Role::Ciphertext,
        ][i % 5];
        let len = rng.gen_range(0..256);
        let mut rec = KeyStoreRecord::new(role, (0..len).map(|_| rng.gen()).collect());
        rec = rec.with_seed(rng.gen::<bool>().then(|| rng.gen()));
        if rng.gen() {
            let dem_len = rng.gen_range(0..64);
            rec = rec.with_dem((0..dem_len).map(|_| rng.gen()).collect());
        }
        let json = rec.to_json();
        let back = KeyStoreRecord::from_json(&json)?;
        ensure!(
            back == rec && back.to_json() == json,
            "record round trip {i}"
        );
        counts[5] += 1;
    }
    ensure!(
        counts.iter().all(|&c| c == ROUND_TRIPS),
        "counts {counts:?}"
    );
    Ok(format!(
        "{ROUND_TRIPS} bit-exact round trips each for public params, master key, secret key, sketch, ciphertext, record"
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("honest correctness", honest_correctness),
        ("attack success", attack_success),
        ("game advantage", game_advantage),
        ("decrypt correctness chain", decrypt_chain),
        (
            "attribute-bound decryption fails",
            attribute_binding_failure,
        ),
        ("algebra", algebra),
        ("fuzzy extractor", fuzzy_extractor),
        ("serialization", serialization),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}").into())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS [{}] {name}: {detail} ({secs:.1}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL [{}] {name}: {e} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
