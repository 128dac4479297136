//! Arithmetic in GF(p^m): default moduli, primitive elements, the
//! Frobenius map and a small matrix inverse.

use std::sync::Arc;

use qlab::field::{FieldCtx, FqMatrix};

fn main() -> qlab::Result<()> {
    for q in [4, 5, 8, 9, 27] {
        let f = FieldCtx::of_order(q)?;
        let prim: Vec<String> = f
            .primitive_elements()
            .iter()
            .map(|&a| f.format_elem(a))
            .collect();
        println!(
            "GF({q}): modulus {:?}, {} primitive elements: {}",
            f.modulus(),
            prim.len(),
            prim.join(" ")
        );
    }

    let f9 = FieldCtx::of_order(9)?;
    let w = f9.primitive_element();
    let frob: Vec<String> = (0..2)
        .map(|k| f9.format_elem(f9.pow(w, 3i64.pow(k)).unwrap()))
        .collect();
    println!(
        "Frobenius orbit of {} in GF(9): {}",
        f9.format_elem(w),
        frob.join(", ")
    );
    println!(
        "{} * {} = {}",
        f9.format_elem(w),
        f9.format_elem(f9.inv(w)?),
        f9.format_elem(f9.mul(w, f9.inv(w)?))
    );

    let f8 = Arc::new(FieldCtx::of_order(8)?);
    let m = FqMatrix::from_int_rows(f8.clone(), &[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]])?;
    let inv = m.inverse()?;
    println!("{} has inverse {}", m.to_row_string(), inv.to_row_string());
    assert!(m.mul(&inv)?.is_identity());
    let singular = FqMatrix::from_int_rows(f8.clone(), &[&[1, 1], &[1, 1]])?;
    println!(
        "{}: {}",
        singular.to_row_string(),
        singular.inverse().unwrap_err()
    );
    let a = FqMatrix::diag(
        f8.clone(),
        &[f8.primitive_element(), qlab::field::FieldElem::ONE],
    );
    println!("det of diag(ω, 1) = {}", f8.format_elem(a.det()));
    Ok(())
}
