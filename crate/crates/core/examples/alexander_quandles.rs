//! Alexander quandles over GF(q): which multipliers give cyclic type, and
//! which of those give isomorphic quandles.

use qlab::field::FieldCtx;
use qlab::quandle::Quandle;

fn main() -> qlab::Result<()> {
    for q in [4, 5, 7, 8, 9] {
        let f = FieldCtx::of_order(q)?;
        println!("GF({q})");
        let mut reps: Vec<(String, Quandle)> = Vec::new();
        for a in f.units() {
            let quandle = Quandle::alexander(&f, a)?;
            let cyclic = q >= 3 && quandle.is_cyclic_type()?;
            let class = match reps
                .iter()
                .find(|(_, r)| r.is_isomorphic(&quandle).is_some())
            {
                Some((name, _)) => name.clone(),
                None => {
                    let name = f.format_elem(a);
                    reps.push((name.clone(), quandle.clone()));
                    name
                }
            };
            println!(
                "  α = {:>6}  order {:>2}  cyclic type {:<5}  isomorphic to α = {}",
                f.format_elem(a),
                f.mult_order(a)?,
                cyclic,
                class
            );
        }
    }
    let f5 = FieldCtx::of_order(5)?;
    println!(
        "{}",
        Quandle::alexander(&f5, f5.from_int(2))?.to_qnd_string()
    );
    Ok(())
}
