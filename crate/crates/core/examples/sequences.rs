//! Tabulating a statistic as a b-file and checking it back.

use matula::bfile::BFile;
use matula::{StatName, StatParams, StatsEngine};

fn main() -> matula::Result<()> {
    let mut engine = StatsEngine::new();
    let mut bfile = BFile::new();
    for n in 1..=30 {
        let w = engine.stat(StatName::W, n, &StatParams::default())?;
        bfile.push(n as i64, w.as_integer().expect("W is an integer").clone());
    }
    let text = bfile.to_text();
    print!("{text}");

    let dir = std::env::temp_dir().join(format!("matula-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("b196051.txt");
    std::fs::write(&path, text).expect("write b-file");
    let args = ["matula", "verify", "W", path.to_str().unwrap()];
    let code = matula::cli::run(args, &mut std::io::stdout(), &mut std::io::stderr());
    std::fs::remove_dir_all(&dir).ok();
    println!("verify exited with {code}");
    Ok(())
}
