use matula::oracle::{analyze, compare_all, random_split_check};
use matula::{
    decode, encode, factorize, IntPolynomial, StatName, StatParams, StatValue, StatsEngine,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn int(engine: &mut StatsEngine, name: StatName, n: u64) -> BigInt {
    match engine.stat(name, n, &StatParams::default()).unwrap() {
        StatValue::Integer(v) => v,
        other => panic!("{name}({n}) = {other}"),
    }
}

fn poly(engine: &mut StatsEngine, name: StatName, n: u64) -> IntPolynomial {
    engine.poly_stat(name, n).unwrap()
}

/// Products of small primes, so the trees stay small enough for the oracle
/// while the numbers get large.
fn smooth() -> impl Strategy<Value = u64> {
    prop::collection::vec(
        prop::sample::select(vec![
            2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
            83, 89, 97, 101, 103, 107, 109, 113,
        ]),
        0..10,
    )
    .prop_map(|ps| ps.into_iter().product())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bijection_on_large_numbers(n in 1u64..20_000_000) {
        if let Ok(tree) = decode(n) {
            prop_assert_eq!(encode(&tree).unwrap(), n);
            prop_assert_eq!(tree.root_degree() as u32, factorize(n).unwrap().omega());
        }
    }

    #[test]
    fn recursion_matches_oracle_on_smooth_numbers(n in smooth()) {
        let mut engine = StatsEngine::new();
        let tree = decode(n).unwrap();
        let mismatches = compare_all(&mut engine, n, &tree).unwrap();
        prop_assert!(mismatches.is_empty(), "{:?}", mismatches.first());
    }

    #[test]
    fn splits_agree_on_smooth_numbers(n in smooth(), seed in any::<u64>()) {
        prop_assume!(!factorize(n).unwrap().is_prime() && n > 1);
        let mut engine = StatsEngine::new();
        prop_assert!(random_split_check(&mut engine, n, seed).unwrap());
    }

    #[test]
    fn identities_on_large_numbers(n in 1u64..20_000_000) {
        let mut engine = StatsEngine::new();
        prop_assume!(engine.profile(n).is_ok());
        let v = int(&mut engine, StatName::V, n);
        prop_assert_eq!(int(&mut engine, StatName::E, n), &v - 1);
        let nk = int(&mut engine, StatName::Nk, n);
        prop_assert_eq!(int(&mut engine, StatName::Mz1, n), &nk * &nk);
        prop_assert_eq!(poly(&mut engine, StatName::Dsp, n).eval_at_one(), v);
        let w = int(&mut engine, StatName::W, n);
        prop_assert_eq!(poly(&mut engine, StatName::Wp, n).derivative().eval_at_one(), w.clone());
        prop_assert_eq!(int(&mut engine, StatName::SumEven, n) + int(&mut engine, StatName::SumOdd, n), w);
        let edp = poly(&mut engine, StatName::Edp, n);
        prop_assert!(edp.coeffs().windows(2).all(|c| c[0] >= c[1]), "EDP({}) = {}", n, edp);
    }

    #[test]
    fn subtree_counts_two_ways(n in 1u64..100_000) {
        let tree = decode(n).unwrap();
        prop_assume!(tree.vertex_count() <= 16);
        let a = analyze(&tree).unwrap();
        prop_assert_eq!(a.subtree_counts_by_enumeration(), a.subtree_counts_by_product());
    }
}
