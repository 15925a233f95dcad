//! Every factor split of a composite gives the same tree, so every
//! recursion must give the same numbers whichever split it starts from.

use matula::oracle::{check_split, random_split_check};
use matula::{factorize, StatsEngine};

fn main() -> matula::Result<()> {
    let mut engine = StatsEngine::new();
    let n = 720;
    for r in factorize(n)?.proper_divisors() {
        println!(
            "{n} = {r} * {}: {}",
            n / r,
            if check_split(&mut engine, n, r)? {
                "ok"
            } else {
                "DIFFERENT"
            }
        );
    }

    let mut failures = 0;
    let mut checked = 0;
    for n in (4..20_000u64).filter(|&n| !factorize(n).map(|f| f.is_prime()).unwrap_or(true)) {
        checked += 1;
        if !random_split_check(&mut engine, n, n)? {
            failures += 1;
        }
    }
    println!("{checked} composites with a random split: {failures} failures");
    Ok(())
}
