//! Stabilizer chains, transitivity, blocks, classes and Burnside's
//! dichotomy on a few small permutation groups.

use qlab::perm::{element_cap, Perm, PermGroup};

fn describe(name: &str, g: &PermGroup) -> qlab::Result<()> {
    println!("{name}: degree {}, order {}", g.degree(), g.order());
    println!("  base {:?}", g.base());
    println!(
        "  transitive {}, degree of transitivity {}",
        g.is_transitive(),
        g.transitivity_degree(6)
    );
    if g.is_transitive() && g.degree() >= 2 {
        println!(
            "  primitive {}, Frobenius {}",
            g.is_primitive()?,
            g.is_frobenius_action()?
        );
    }
    println!(
        "  class sizes {:?}",
        g.conjugacy_class_sizes(element_cap())?
    );
    println!("  center order {}", g.center()?.order());
    if g.degree() >= 2 && g.is_k_transitive(2)? {
        let b = g.burnside_dichotomy_check(element_cap())?;
        println!(
            "  minimal normal subgroup of order {} ({:?})",
            b.order, b.branch
        );
    }
    Ok(())
}

fn main() -> qlab::Result<()> {
    describe("S5", &PermGroup::symmetric(5))?;
    describe("A5", &PermGroup::alternating(5))?;

    // AGL(1, 5): x ↦ x + 1 and x ↦ 2x.
    let agl = PermGroup::from_generators(&[
        "(0 1 2 3 4)".parse::<Perm>()?,
        Perm::parse_with_degree("(1 2 4 3)", 5)?,
    ])?;
    describe("AGL(1,5)", &agl)?;

    // The dihedral group of the square is imprimitive.
    let d8 = PermGroup::from_generators(&["(0 1 2 3)".parse::<Perm>()?, "(1 3)".parse()?])?;
    describe("D8", &d8)?;
    let blocks = d8.minimal_block_system((0, 2))?;
    println!("  blocks containing 0 and 2: {:?}", blocks.blocks());

    let c = Perm::parse_with_degree("(1 2 4 3)", 5)?;
    println!(
        "centralizer of {c} in AGL(1,5) has order {}",
        agl.centralizer_of_cycle(&c)?.order()
    );
    Ok(())
}
