//! PSL(d, q) acting on projective points, with the center of a point
//! stabilizer.

use qlab::classical::{psl_action, psl_order};
use qlab::perm::element_cap;

fn main() -> qlab::Result<()> {
    for (d, q) in [
        (2, 4),
        (2, 5),
        (2, 7),
        (2, 8),
        (2, 9),
        (2, 11),
        (3, 2),
        (3, 3),
        (2, 3),
    ] {
        match psl_action(d, q) {
            Ok(g) => {
                let stab = g.stabilizer(0)?;
                let center = stab.center_with_cap(element_cap())?;
                println!(
                    "PSL({d},{q}) on {:>2} points: order {:>5} (expected {:>5}), 2-transitive {}, |Z(stabilizer)| = {}",
                    g.degree(),
                    g.order(),
                    psl_order(d as u32, q),
                    g.is_k_transitive(2)?,
                    center.order()
                );
            }
            Err(e) => println!("PSL({d},{q}): {e}"),
        }
    }
    Ok(())
}
