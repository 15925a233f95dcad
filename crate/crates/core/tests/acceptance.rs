//! Acceptance suite: nine criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the report is always printed:
//!
//!     cargo test -p matula --test acceptance

use std::collections::HashSet;
use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use matula::oracle::{analyze, compare_all, oracle_stat, random_split_check_with, standard_checks};
use matula::{
    decode, encode, factorize, prime_index, Exponent, IntPolynomial, PrimeTable, SieveConfig,
    StatName, StatParams, StatValue, StatsEngine,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const IDENTITY_MAX: u64 = 5000;
const SPLIT_SEED: u64 = 20_111_018;

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 EDP(987654321) under 1 s", edp_worked_example),
        ("2 factorization of 987654321", factorization),
        ("3 DSP(9)", dsp_of_nine),
        ("4 bijection on 1..100000 under 30 s", bijection),
        ("5 recursion = oracle on 1..5000", oracle_equivalence),
        ("6 identities on 1..5000", identities),
        ("7 random splits of 1000 composites", random_splits),
        ("8 ST and RST by enumeration", subtree_enumeration),
        ("9 verify oracle b-files for V and E", verify_bfiles),
    ];
    let mut failed = 0;
    for (label, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  criterion {label}: {detail} ({secs:.2} s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {label}: {detail} ({secs:.2} s)");
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: matula::Error) -> String {
    err.to_string()
}

fn edp_worked_example() -> Outcome {
    // a deliberately small first sieve, so the lookup has to grow it
    let start = Instant::now();
    let primes = Arc::new(PrimeTable::new(SieveConfig {
        initial_bound: 1000,
        ..SieveConfig::default()
    }));
    let mut engine = StatsEngine::with_primes(primes.clone());
    let value = engine
        .stat(StatName::Edp, 987_654_321, &StatParams::default())
        .map_err(e)?;
    let elapsed = start.elapsed();
    let text = value.to_string();
    ensure(text == "15 + 9*x + 5*x^2", || format!("got {text}"))?;
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    let bound = primes.sieved_bound();
    Ok(format!("{text}, sieve grew to {bound} in {elapsed:?}"))
}

fn factorization() -> Outcome {
    let f = factorize(987_654_321).map_err(e)?;
    ensure(f.factors() == [(3, 2), (17, 2), (379_721, 1)], || {
        format!("got {f}")
    })?;
    ensure(f.omega() == 5, || format!("Omega = {}", f.omega()))?;
    let index = prime_index(379_721).map_err(e)?;
    ensure(index == 32_277, || format!("index of 379721 = {index}"))?;
    Ok(format!("{f}, Omega = 5, 379721 = p_{index}"))
}

fn dsp_of_nine() -> Outcome {
    let dsp = StatsEngine::new().poly_stat(StatName::Dsp, 9).map_err(e)?;
    ensure(dsp == IntPolynomial::from_coeffs([0, 2, 3]), || {
        format!("got {dsp}")
    })?;
    Ok(dsp.to_string())
}

fn bijection() -> Outcome {
    let start = Instant::now();
    for n in 1..=100_000u64 {
        let back = encode(&decode(n).map_err(e)?).map_err(e)?;
        ensure(back == n, || format!("encode(decode({n})) = {back}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("100000 round trips in {elapsed:?}"))
}

fn oracle_equivalence() -> Outcome {
    let mut engine = StatsEngine::new();
    let checks = standard_checks();
    let mut compared = 0usize;
    for n in 1..=IDENTITY_MAX {
        let tree = decode(n).map_err(e)?;
        let mismatches = compare_all(&mut engine, n, &tree).map_err(e)?;
        if let Some(m) = mismatches.first() {
            return Err(format!(
                "{}({}) {:?}: recursion {}, oracle {}",
                m.name, m.n, m.params, m.recursive, m.oracle
            ));
        }
        compared += checks.len();

        // connectivity index again, under a strictly relative tolerance
        let params = StatParams::alpha(Exponent::CONNECTIVITY);
        let recursive = engine
            .stat(StatName::RAlpha, n, &params)
            .map_err(e)?
            .to_f64()
            .unwrap_or(f64::NAN);
        let direct = oracle_stat(StatName::RAlpha, &tree, &params)
            .map_err(e)?
            .to_f64()
            .unwrap_or(f64::NAN);
        ensure(
            (recursive - direct).abs() <= 1e-9 * recursive.abs().max(direct.abs()),
            || format!("R_-1/2({n}): recursion {recursive}, oracle {direct}"),
        )?;
    }
    let names: HashSet<StatName> = checks.iter().map(|&(name, _)| name).collect();
    ensure(names.len() == StatName::ALL.len(), || {
        format!(
            "only {} of {} statistics checked",
            names.len(),
            StatName::ALL.len()
        )
    })?;
    Ok(format!(
        "{compared} values over {} statistics agree",
        names.len()
    ))
}

fn int(engine: &mut StatsEngine, name: StatName, n: u64) -> Result<BigInt, String> {
    match engine.stat(name, n, &StatParams::default()).map_err(e)? {
        StatValue::Integer(v) => Ok(v),
        other => Err(format!("{name}({n}) = {other} is not an integer")),
    }
}

fn poly(engine: &mut StatsEngine, name: StatName, n: u64) -> Result<IntPolynomial, String> {
    engine.poly_stat(name, n).map_err(e)
}

fn degree(p: &IntPolynomial) -> BigInt {
    BigInt::from(p.degree().unwrap_or(0))
}

fn identities() -> Outcome {
    use StatName::*;
    let mut engine = StatsEngine::new();
    let mut checked = 0;
    for n in 1..=IDENTITY_MAX {
        let mut check = |label: &str, lhs: BigInt, rhs: BigInt| {
            checked += 1;
            ensure(lhs == rhs, || format!("n = {n}: {label}: {lhs} != {rhs}"))
        };
        let v = int(&mut engine, V, n)?;
        let edges = int(&mut engine, E, n)?;
        check("E = V - 1", edges.clone(), &v - 1)?;
        let nk = int(&mut engine, Nk, n)?;
        check("MZ1 = NK^2", int(&mut engine, Mz1, n)?, &nk * &nk)?;

        let z2 = int(&mut engine, Z2, n)?;
        let r1 = engine.randic(n, Exponent::Integer(1)).map_err(e)?;
        ensure(r1 == StatValue::Integer(z2.clone()), || {
            format!("n = {n}: R_1 = {r1}, Z2 = {z2}")
        })?;

        let pwp = poly(&mut engine, Pwp, n)?;
        check("H = deg PWP", int(&mut engine, H, n)?, degree(&pwp))?;
        check("E = PWP(1)", edges, pwp.eval_at_one())?;
        check(
            "PL = PWP'(1)",
            int(&mut engine, Pl, n)?,
            pwp.derivative().eval_at_one(),
        )?;

        let wp = poly(&mut engine, Wp, n)?;
        let w = int(&mut engine, W, n)?;
        check("DM = deg WP", int(&mut engine, Dm, n)?, degree(&wp))?;
        check("W = WP'(1)", w.clone(), wp.derivative().eval_at_one())?;

        let dsp = poly(&mut engine, Dsp, n)?;
        check("V = DSP(1)", v, dsp.eval_at_one())?;
        check("MD = deg DSP", int(&mut engine, Md, n)?, degree(&dsp))?;
        check("PV = [x]DSP", int(&mut engine, Pv, n)?, dsp.coefficient(1))?;
        let branching: BigInt = dsp.coeffs().iter().skip(3).sum();
        check(
            "BV = sum of [x^k]DSP, k >= 3",
            int(&mut engine, Bv, n)?,
            branching,
        )?;

        let even_odd = int(&mut engine, SumEven, n)? + int(&mut engine, SumOdd, n)?;
        check("SUM_EVEN + SUM_ODD = W", even_odd, w.clone())?;

        let edp = poly(&mut engine, Edp, n)?;
        ensure(edp.coeffs().windows(2).all(|c| c[0] >= c[1]), || {
            format!("n = {n}: EDP = {edp} is not nonincreasing")
        })?;

        // WP'(1) + WP''(1)/2 over the rationals
        let second = BigRational::from(wp.derivative().derivative().eval_at_one());
        let hyper = BigRational::from(w) + second / BigRational::from(BigInt::from(2));
        ensure(hyper.is_integer(), || {
            format!("n = {n}: hyper-Wiener {hyper}")
        })?;
        check("HYPER_W", int(&mut engine, HyperW, n)?, hyper.to_integer())?;
    }
    Ok(format!("{checked} identities hold"))
}

fn random_splits() -> Outcome {
    let mut engine = StatsEngine::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let mut checked = 0;
    while checked < 1000 {
        let n = rng.gen_range(4..=1_000_000u64);
        if engine.primes().is_prime(n).map_err(e)? {
            continue;
        }
        checked += 1;
        let ok = random_split_check_with(&mut engine, n, &mut rng).map_err(e)?;
        ensure(ok, || format!("split of {n} disagrees"))?;
    }
    Ok(format!("{checked} composites agree, seed {SPLIT_SEED}"))
}

fn subtree_enumeration() -> Outcome {
    let mut engine = StatsEngine::new();
    let mut checked = 0;
    for n in 1..=2000u64 {
        let tree = decode(n).map_err(e)?;
        if tree.vertex_count() > 14 {
            continue;
        }
        let (all, rooted) = analyze(&tree).map_err(e)?.subtree_counts_by_enumeration();
        let st = int(&mut engine, StatName::St, n)?;
        let rst = int(&mut engine, StatName::Rst, n)?;
        ensure(st == all && rst == rooted, || {
            format!("n = {n}: ST {st} RST {rst}, enumeration {all} {rooted}")
        })?;
        checked += 1;
    }
    Ok(format!("{checked} trees agree"))
}

fn verify_bfiles() -> Outcome {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let mut lines = Vec::new();
    for (name, file) in [("V", "b061775_oracle.txt"), ("E", "b196050_oracle.txt")] {
        let path = fixtures.join(file);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = matula::cli::run(
            ["matula", "verify", name, path.to_str().unwrap()],
            &mut out,
            &mut err,
        );
        let out = String::from_utf8_lossy(&out).trim().to_string();
        ensure(code == 0, || {
            format!(
                "{file}: exit {code}: {out} {}",
                String::from_utf8_lossy(&err).trim()
            )
        })?;
        ensure(out.starts_with("ok: 100 terms"), || {
            format!("{file}: {out}")
        })?;
        lines.push(out);
    }
    Ok(format!("zero mismatches ({})", lines.join("; ")))
}
