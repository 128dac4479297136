//! Builds the point stabilizer of the Ree group over GF(27) from its three
//! matrix generators, reports its order and checks that its center is
//! trivial.
//!
//! An optional argument picks the unit `λ` by index (default: the field's
//! primitive element).

use std::sync::Arc;
use std::time::Instant;

use qlab::classical::{matrix_group_closure, ree_stabilizer_generators};
use qlab::field::FieldCtx;

fn main() -> qlab::Result<()> {
    let ctx = Arc::new(FieldCtx::of_order(27)?);
    let lambda = match std::env::args().nth(1) {
        Some(i) => ctx.elem(i.parse().expect("element index"))?,
        None => ctx.primitive_element(),
    };
    println!(
        "lambda = {} (multiplicative order {})",
        ctx.format_elem(lambda),
        ctx.mult_order(lambda)?
    );
    let gens = ree_stabilizer_generators(&ctx, lambda)?;
    for (name, g) in ["d(lambda)", "a", "b"].iter().zip(&gens) {
        println!("{name}:\n{}", g.to_row_string());
    }
    let start = Instant::now();
    let closure = matrix_group_closure(&gens, 2_000_000)?;
    println!(
        "order {} = 27^3 * 26 is {}",
        closure.order(),
        closure.order() == 27usize.pow(3) * 26
    );
    println!("center trivial: {}", closure.center_trivial());
    println!("{:.2?}", start.elapsed());
    Ok(())
}
