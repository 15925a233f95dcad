//! Writes a b-file for one statistic, computed on explicit trees only.
//!
//!     cargo run --example oracle_bfile -- V 100 > b061775_oracle.txt
//!
//! Nothing here touches the prime-factor recursion, so the output is an
//! independent reference for `matula verify`.

use std::process::ExitCode;

use matula::bfile::BFile;
use matula::oracle::oracle_stat;
use matula::{decode, StatName, StatParams};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let [name, count] = args.as_slice() else {
        eprintln!("usage: oracle_bfile <STAT> <COUNT>");
        return ExitCode::from(2);
    };
    let (Ok(name), Ok(count)) = (name.parse::<StatName>(), count.parse::<u64>()) else {
        eprintln!("usage: oracle_bfile <STAT> <COUNT>");
        return ExitCode::from(2);
    };

    let mut bfile = BFile::new();
    for n in 1..=count {
        let tree = decode(n).expect("decode");
        let value = oracle_stat(name, &tree, &StatParams::default()).expect("oracle");
        let Some(value) = value.as_integer() else {
            eprintln!("{name}({n}) = {value} is not an integer");
            return ExitCode::FAILURE;
        };
        bfile.push(n as i64, value.clone());
    }
    let oeis = name.oeis().unwrap_or("(no OEIS entry)");
    println!("# {oeis} {name}, n = 1..{count}");
    println!("# generated by the explicit-tree oracle (examples/oracle_bfile.rs), not downloaded from OEIS");
    print!("{}", bfile.to_text());
    ExitCode::SUCCESS
}
