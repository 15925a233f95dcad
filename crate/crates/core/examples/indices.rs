//! Topological indices of one tree, straight from its Matula number.

use matula::{Exponent, StatKind, StatName, StatParams, StatsEngine};

fn main() -> matula::Result<()> {
    let n: u64 = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("a positive integer"))
        .unwrap_or(987_654_321);
    let mut engine = StatsEngine::new();
    println!("tree {n}");
    for &name in StatName::ALL {
        if matches!(name.kind(), StatKind::Polynomial) {
            continue;
        }
        let value = engine.stat(name, n, &StatParams::default())?;
        println!("  {:<15} {value}", name.symbol());
    }
    for alpha in [
        Exponent::Integer(-1),
        Exponent::Integer(2),
        Exponent::Real(0.5),
    ] {
        println!("  R_ALPHA(alpha = {alpha}) = {}", engine.randic(n, alpha)?);
    }
    Ok(())
}
