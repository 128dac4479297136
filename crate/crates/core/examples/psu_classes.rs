//! Class sizes of PSU(3, q) from its centralizer orders, compared with the
//! degree q³ + 1 of its doubly transitive action.

use qlab::classical::psu_class_size_table;

fn main() -> qlab::Result<()> {
    for q in [3, 4, 5, 7, 8, 9, 11] {
        let t = psu_class_size_table(q)?;
        let sizes: Vec<String> = t.rows.iter().map(|r| r.class_size.to_string()).collect();
        println!(
            "q = {q:>2}  |G| = {:>12}  degree {:>5}  class of that size: {:<5}  sizes {}",
            t.group_order,
            q.pow(3) + 1,
            t.has_class_of_degree,
            sizes.join(" ")
        );
    }
    Ok(())
}
