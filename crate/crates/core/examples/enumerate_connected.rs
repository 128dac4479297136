//! Counts connected quandles of small size by exhaustive backtracking and
//! reports the cyclic-type ones among them.
//!
//! Pass `7` as the first argument to include the longer size-7 run.

use qlab::enumerate::enumerate_connected_bruteforce;

fn main() -> qlab::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    for n in 1..=max {
        let r = enumerate_connected_bruteforce(n, n > 6)?;
        let cyclic = r
            .quandles
            .iter()
            .filter(|q| n >= 3 && q.is_cyclic_type().unwrap_or(false))
            .count();
        println!(
            "n = {n}: {} connected ({} of cyclic type), {} partial tables tried, {} ms",
            r.quandles.len(),
            cyclic,
            r.stats.candidates_tested,
            r.stats.elapsed_ms
        );
        for q in &r.quandles {
            println!("{}", q.to_qnd_string());
        }
    }
    Ok(())
}
