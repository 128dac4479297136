//! Reads a .qnd file (or uses R_4) and prints its classifier report,
//! congruences and a quotient.
//!
//! `cargo run --example classify_quandle -- path/to/file.qnd`

use qlab::quandle::{Congruence, Quandle};

fn main() -> qlab::Result<()> {
    let q = match std::env::args().nth(1) {
        Some(path) => Quandle::parse_qnd(&std::fs::read_to_string(path)?)?,
        None => Quandle::dihedral(4),
    };
    print!("{}", q.to_qnd_string());
    println!("{}", serde_json::to_string_pretty(&q.classify()).unwrap());
    println!("digest {}", q.digest());

    let n = q.size();
    for a in 0..n {
        for b in a + 1..n {
            let c = q.principal_congruence(a, b)?;
            if !c.is_full() {
                println!("({a}, {b}) generates {:?}", c.blocks());
            }
        }
    }
    if n % 2 == 0 {
        let parity = Congruence::from_labels(&(0..n).map(|x| x % 2).collect::<Vec<_>>());
        match q.quotient(&parity) {
            Ok(quotient) => print!("quotient by parity:\n{}", quotient.to_qnd_string()),
            Err(e) => println!("parity is not a congruence: {e}"),
        }
    }
    Ok(())
}
