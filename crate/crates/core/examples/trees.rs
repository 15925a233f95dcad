//! Decoding and encoding: number to tree, tree to number, and the output
//! formats.

use matula::{decode, encode, RootedTree};

fn main() -> matula::Result<()> {
    for n in 1..=12 {
        let tree = decode(n)?;
        println!("{n:>3}  {tree:<24} V = {}", tree.vertex_count());
    }

    let n = 987_654_321;
    let tree = decode(n)?;
    println!(
        "\n{n} has {} vertices, height {}, root degree {}",
        tree.vertex_count(),
        tree.height(),
        tree.root_degree()
    );
    println!("{tree}");
    assert_eq!(encode(&tree)?, n);

    // child order does not matter to the number
    let messy: RootedTree = "((())())".parse()?;
    println!(
        "\n{messy} -> {} -> {}",
        messy.encode()?,
        messy.canonicalize()?
    );

    println!("\n{}", decode(12)?.to_json()?);
    print!("{}", decode(12)?.to_dot()?);
    Ok(())
}
