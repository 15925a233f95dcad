//! Recursion against explicit trees for every statistic over a range.

use matula::oracle::{compare_all, standard_checks};
use matula::{decode, StatsEngine};

fn main() -> matula::Result<()> {
    let max: u64 = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("a positive integer"))
        .unwrap_or(2000);
    let mut engine = StatsEngine::new();
    let mut mismatches = 0;
    for n in 1..=max {
        for m in compare_all(&mut engine, n, &decode(n)?)? {
            mismatches += 1;
            println!(
                "{}({}) {:?}: recursion {}, oracle {}",
                m.name, m.n, m.params, m.recursive, m.oracle
            );
        }
    }
    println!(
        "{} checks per tree, n = 1..{max}: {mismatches} mismatches",
        standard_checks().len()
    );
    Ok(())
}
