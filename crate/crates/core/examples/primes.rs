//! The prime table behind both directions of the bijection.

use matula::{factorize, nth_prime, prime_index, PrimeTable, SieveConfig};

fn main() -> matula::Result<()> {
    let f = factorize(987_654_321)?;
    println!("987654321 = {f}, Omega = {}", f.omega());
    println!("379721 is prime number {}", prime_index(379_721)?);
    println!("prime number 10000 is {}", nth_prime(10_000)?);

    // a small table refuses rather than guessing
    let small = PrimeTable::new(SieveConfig {
        initial_bound: 100,
        ceiling: 1000,
    });
    println!("sieved up to {}", small.sieved_bound());
    match small.nth_prime(500) {
        Ok(p) => println!("p_500 = {p}"),
        Err(e) => println!("p_500: {e}"),
    }
    println!(
        "factorize(999983 * 2) = {}",
        small
            .factorize(999_983 * 2)
            .map(|f| f.to_string())
            .unwrap_or_else(|e| e.to_string())
    );
    Ok(())
}
