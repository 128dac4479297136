//! Conjugation quandles on the conjugacy classes of small groups.

use qlab::perm::{element_cap, PermGroup};
use qlab::quandle::Quandle;

fn main() -> qlab::Result<()> {
    for (name, g) in [
        ("S3", PermGroup::symmetric(3)),
        ("S4", PermGroup::symmetric(4)),
        ("A4", PermGroup::alternating(4)),
        ("A5", PermGroup::alternating(5)),
    ] {
        println!("{name}");
        for class in g.conjugacy_classes(element_cap())? {
            let (q, _) = Quandle::conjugation(&g, &class.representative, class.size)?;
            let r = q.classify();
            println!(
                "  class of {:<16} size {:>2}  connected {:<5}  cyclic type {:<5}  simple {:<5}  |Inn| {}",
                class.representative.to_string(),
                class.size,
                r.connected,
                r.cyclic_type,
                r.simple,
                r.inner_order
            );
        }
    }
    Ok(())
}
