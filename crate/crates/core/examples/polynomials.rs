//! The polynomial statistics and the numbers read off them.

use matula::{StatName, StatParams, StatsEngine};

fn main() -> matula::Result<()> {
    let mut engine = StatsEngine::new();
    for n in [9, 28, 987_654_321] {
        println!("tree {n}");
        for name in [StatName::Pwp, StatName::Wp, StatName::Dsp, StatName::Edp] {
            println!("  {:<4} {}", name.symbol(), engine.poly_stat(name, n)?);
        }
        let wp = engine.poly_stat(StatName::Wp, n)?;
        println!("  W = WP'(1) = {}", wp.derivative().eval_at_one());
        for name in [
            StatName::HyperW,
            StatName::SumEven,
            StatName::SumOdd,
            StatName::ExitSum,
        ] {
            println!(
                "  {:<8} {}",
                name.symbol(),
                engine.stat(name, n, &StatParams::default())?
            );
        }
        for k in 1..=3 {
            println!(
                "  LEVEL_COUNT k={k}: {}",
                engine.stat(StatName::LevelCount, n, &StatParams::k(k))?
            );
        }
    }
    Ok(())
}
