//! Subcommand drivers: configuration resolution, trial loops, exit codes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semiwedge_core::{
    check_cayley_hamilton, check_prech, check_precheh, check_quasi_inverse, eigen_data,
    hs_coefficient, hs_series, BigInt, BigRational, BigUint, Boolean, DomainKind, Endomorphism,
    MaxPlus, MultiVector, Pair, Semiring, Word,
};
use serde_json::{json, Value};

use crate::cli::{Cli, Command, CommonArgs};
use crate::gen::{self, RandomScalar};
use crate::input;
use crate::report::Report;

/// Runs the parsed command line and returns the process exit code:
/// 0 when every check passed, 1 when a theorem check found a violation,
/// 2 on configuration or parse errors.
pub fn run(cli: &Cli) -> i32 {
    match execute(cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn execute(cli: &Cli) -> Result<bool, String> {
    let args = cli.command.args();
    match args.semiring.kind() {
        DomainKind::Integers => drive::<BigInt>(&cli.command, args),
        DomainKind::Rationals => drive::<BigRational>(&cli.command, args),
        DomainKind::Naturals => drive::<BigUint>(&cli.command, args),
        DomainKind::Booleans => drive::<Boolean>(&cli.command, args),
        DomainKind::MaxPlus => drive::<MaxPlus>(&cli.command, args),
    }
}

struct Config<S: Semiring> {
    matrix: Option<Endomorphism<S>>,
    n: usize,
    trunc: usize,
    seed: u64,
    trials: usize,
    json: bool,
}

fn resolve<S: RandomScalar>(args: &CommonArgs) -> Result<Config<S>, String> {
    let matrix = match &args.matrix {
        Some(source) => Some(input::load_matrix::<S>(source)?),
        None => None,
    };
    let n = match (&matrix, args.n) {
        (Some(f), Some(n)) if f.rank() != n => {
            return Err(format!("--n is {n} but the matrix has {} rows", f.rank()));
        }
        (Some(f), _) => f.rank(),
        (None, Some(n)) => n,
        (None, None) => 3,
    };
    if !(2..=8).contains(&n) {
        return Err(format!("rank n must be between 2 and 8, got {n}"));
    }
    if n > 5 {
        eprintln!(
            "warning: rank {n} gives {} basis words; exhaustive checks may be slow",
            1u32 << n
        );
    }
    let trunc = args.trunc.unwrap_or(2 * n);
    if trunc < n {
        return Err(format!("--trunc must be at least n = {n}, got {trunc}"));
    }
    let seed = match args.seed {
        Some(seed) => seed,
        None => match std::env::var("GRASSMANN_SEED") {
            Ok(text) => text
                .trim()
                .parse::<u64>()
                .map_err(|_| format!("GRASSMANN_SEED must be an unsigned integer, got `{text}`"))?,
            Err(_) => 0,
        },
    };
    if args.trials == 0 {
        return Err("--trials must be at least 1".to_string());
    }
    Ok(Config {
        matrix,
        n,
        trunc,
        seed,
        trials: args.trials,
        json: args.json,
    })
}

fn drive<S: RandomScalar>(command: &Command, args: &CommonArgs) -> Result<bool, String> {
    let config = resolve::<S>(args)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    match command {
        Command::Eigenpairs(_) => eigenpairs(&config),
        Command::CheckCh(_) => check_ch_cmd(&config, &mut rng),
        Command::CheckQuasiInverse(_) => check_quasi_inverse_cmd(&config, &mut rng),
        Command::CheckPrech(_) => check_prech_cmd(&config, &mut rng),
        Command::CheckLeibniz(_) => check_leibniz_cmd(&config, &mut rng),
        Command::Demo(_) => demo(&config),
    }
}

/// Picks the trial's endomorphism: the fixed `--matrix` when given, a fresh
/// seeded random draw otherwise.
fn trial_matrix<S: RandomScalar>(config: &Config<S>, rng: &mut ChaCha8Rng) -> Endomorphism<S> {
    match &config.matrix {
        Some(f) => f.clone(),
        None => gen::random_matrix::<S>(rng, config.n),
    }
}

fn trial_count<S: Semiring>(config: &Config<S>) -> usize {
    if config.matrix.is_some() {
        1
    } else {
        config.trials
    }
}

fn finish<S: Semiring>(config: &Config<S>, trials: usize, failures: usize) -> bool {
    if !config.json {
        if failures == 0 {
            println!("all {trials} trials passed");
        } else {
            println!("{failures} of {trials} trials FAILED");
        }
    }
    failures == 0
}

fn eigenpairs<S: RandomScalar>(config: &Config<S>) -> Result<bool, String> {
    let f = config
        .matrix
        .as_ref()
        .ok_or("eigenpairs requires --matrix")?;
    let data = eigen_data(f).map_err(|err| err.to_string())?;
    if config.json {
        let line = json!({
            "command": "eigenpairs",
            "domain": S::kind().name(),
            "n": config.n,
            "matrix": f.to_json(),
            "e": data.e.iter().map(Pair::to_json).collect::<Vec<_>>(),
            "h": data.h.iter().map(Pair::to_json).collect::<Vec<_>>(),
        });
        println!("{line}");
    } else {
        println!("domain {}, n = {}", S::kind().name(), config.n);
        for (i, pair) in data.e.iter().enumerate() {
            println!("e_{i} = {pair}");
        }
        for (i, pair) in data.h.iter().enumerate() {
            println!("h_{i} = {pair}");
        }
    }
    Ok(true)
}

fn check_ch_cmd<S: RandomScalar>(config: &Config<S>, rng: &mut ChaCha8Rng) -> Result<bool, String> {
    let trials = trial_count(config);
    let mut failures = 0;
    for trial in 0..trials {
        let f = trial_matrix(config, rng);
        let (holds, residual) = ch_instance(&f)?;
        let report = Report {
            theorem: "cayley-hamilton",
            trial,
            seed: config.seed,
            trunc: config.trunc,
            holds,
            instance: json!({
                "domain": S::kind().name(),
                "n": config.n,
                "matrix": f.to_json(),
            }),
            residual,
        };
        report.emit(config.json);
        if !holds {
            failures += 1;
        }
    }
    Ok(finish(config, trials, failures))
}

/// Checks one endomorphism: the eigen-pair convolution must be balanced and
/// the Cayley-Hamilton residual must be balanced on every basis split (u, v).
fn ch_instance<S: Semiring>(f: &Endomorphism<S>) -> Result<(bool, Value), String> {
    let n = f.rank();
    let pre = check_precheh(f).map_err(|err| err.to_string())?;
    if !pre.balanced {
        return Ok((
            false,
            json!({ "kind": "convolution", "value": pre.combined.to_json() }),
        ));
    }
    for mask in 1u32..(1u32 << n) {
        let u_indices: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let v_indices: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
        let u = Word::from_increasing(&u_indices, n).map_err(|err| err.to_string())?;
        let v = Word::from_increasing(&v_indices, n).map_err(|err| err.to_string())?;
        let outcome = check_cayley_hamilton(f, u, v).map_err(|err| err.to_string())?;
        if !outcome.holds {
            return Ok((
                false,
                json!({
                    "kind": "split",
                    "u": u_indices,
                    "v": v_indices,
                    "value": outcome.residual.to_json(),
                }),
            ));
        }
    }
    Ok((true, Value::Null))
}

fn check_quasi_inverse_cmd<S: RandomScalar>(
    config: &Config<S>,
    rng: &mut ChaCha8Rng,
) -> Result<bool, String> {
    let support: Vec<usize> = (0..config.n).collect();
    let mut failures = 0;
    for trial in 0..config.trials {
        let f = trial_matrix(config, rng);
        let x = gen::random_pure::<S>(rng, config.n, &support, 2);
        let holds = check_quasi_inverse(&f, &x, config.trunc).map_err(|err| err.to_string())?;
        let report = Report {
            theorem: "quasi-inverse-composite",
            trial,
            seed: config.seed,
            trunc: config.trunc,
            holds,
            instance: json!({
                "domain": S::kind().name(),
                "n": config.n,
                "matrix": f.to_json(),
                "x": x.to_json(),
            }),
            residual: Value::Null,
        };
        report.emit(config.json);
        if !holds {
            failures += 1;
        }
    }
    Ok(finish(config, config.trials, failures))
}

fn check_prech_cmd<S: RandomScalar>(
    config: &Config<S>,
    rng: &mut ChaCha8Rng,
) -> Result<bool, String> {
    if config.n < 3 {
        return Err(format!(
            "check-prech needs n >= 3 (a degree-1 and a degree-2 factor), got n = {}",
            config.n
        ));
    }
    let support: Vec<usize> = (0..config.n).collect();
    let mut failures = 0;
    for trial in 0..config.trials {
        let f = trial_matrix(config, rng);
        let u = gen::random_pure::<S>(rng, config.n, &support, 1);
        let v = gen::random_pure::<S>(rng, config.n, &support, 2);
        let holds = check_prech(&f, &u, &v, config.trunc).map_err(|err| err.to_string())?;
        let report = Report {
            theorem: "derivation-quasi-inverse-interchange",
            trial,
            seed: config.seed,
            trunc: config.trunc,
            holds,
            instance: json!({
                "domain": S::kind().name(),
                "n": config.n,
                "matrix": f.to_json(),
                "u": u.to_json(),
                "v": v.to_json(),
            }),
            residual: Value::Null,
        };
        report.emit(config.json);
        if !holds {
            failures += 1;
        }
    }
    Ok(finish(config, config.trials, failures))
}

fn check_leibniz_cmd<S: RandomScalar>(
    config: &Config<S>,
    rng: &mut ChaCha8Rng,
) -> Result<bool, String> {
    let mut failures = 0;
    for trial in 0..config.trials {
        let f = trial_matrix(config, rng);
        let (left_support, right_support) = gen::random_disjoint_split(rng, config.n);
        let du = rng.random_range(1..=left_support.len());
        let dv = rng.random_range(1..=right_support.len());
        let u = gen::random_pure::<S>(rng, config.n, &left_support, du);
        let v = gen::random_pure::<S>(rng, config.n, &right_support, dv);
        let product = u.wedge(&v).map_err(|err| err.to_string())?;
        let whole = hs_series(&f, &product, config.trunc).map_err(|err| err.to_string())?;
        let factored = hs_series(&f, &u, config.trunc)
            .map_err(|err| err.to_string())?
            .series_wedge(&hs_series(&f, &v, config.trunc).map_err(|err| err.to_string())?)
            .map_err(|err| err.to_string())?;
        let holds = whole == factored;
        let report = Report {
            theorem: "derivation-product-rule",
            trial,
            seed: config.seed,
            trunc: config.trunc,
            holds,
            instance: json!({
                "domain": S::kind().name(),
                "n": config.n,
                "matrix": f.to_json(),
                "u": u.to_json(),
                "v": v.to_json(),
            }),
            residual: Value::Null,
        };
        report.emit(config.json);
        if !holds {
            failures += 1;
        }
    }
    Ok(finish(config, config.trials, failures))
}

/// Fixed worked example: the rank-5 shift endomorphism applied to b_1 wedge b_2.
fn demo<S: Semiring>(config: &Config<S>) -> Result<bool, String> {
    let f = Endomorphism::<BigInt>::shift(5);
    let x = MultiVector::<BigInt>::basis_word(5, &[1, 2]).map_err(|err| err.to_string())?;
    let target = MultiVector::<BigInt>::basis_word(5, &[1, 4]).map_err(|err| err.to_string())?;
    let d2 = hs_coefficient(&f, 2, &x).map_err(|err| err.to_string())?;
    let holds = d2.surpasses(&target).map_err(|err| err.to_string())?;
    if config.json {
        let line = json!({
            "command": "demo",
            "domain": "int",
            "n": 5,
            "input": x.to_json(),
            "order": 2,
            "derivation": d2.to_json(),
            "target": target.to_json(),
            "surpasses": holds,
        });
        println!("{line}");
    } else {
        println!("rank-5 shift endomorphism over the integers: f(b_i) = b_(i+1), f(b_4) = 0");
        println!("input          x = {x}");
        println!("derivation  D_2(x) = {d2}");
        println!("target           y = {target}");
        println!("D_2(x) surpasses y: {holds}");
    }
    Ok(holds)
}
