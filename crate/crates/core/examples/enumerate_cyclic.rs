//! Searches for cyclic-type quandles of each size up to a bound and compares
//! the counts with `φ(q − 1)/m` at prime powers.
//!
//! Run with `cargo run --release --example enumerate_cyclic -- 13`.

use qlab::enumerate::{cyclic_count_formula, enumerate_cyclic};
use qlab::field::prime_power;

fn main() -> qlab::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(11);
    println!(
        "{:>3} {:>10} {:>6} {:>6} {:>9} {:>8}",
        "n", "tested", "raw", "iso", "predicted", "ms"
    );
    for n in 3..=max {
        let r = enumerate_cyclic(n)?;
        let predicted = match prime_power(n as u64) {
            Some(_) => cyclic_count_formula(n as u64)?.to_string(),
            None => "0".to_string(),
        };
        let s = &r.stats;
        println!(
            "{:>3} {:>10} {:>6} {:>6} {:>9} {:>8}",
            n, s.candidates_tested, s.found_raw, s.found_iso, predicted, s.elapsed_ms
        );
    }
    Ok(())
}
