//! Exact character table of a permutation group.

use exq::fingrp::{close_group, conjugacy_classes, Perm, TabulatedGroup, DEFAULT_BOUND};

fn main() -> exq::Result<()> {
    // S_4 from a transposition and a 4-cycle.
    let gens = [Perm::from_cycles(4, &[&[0, 1]])?, Perm::from_cycles(4, &[&[0, 1, 2, 3]])?];
    let g = close_group(&gens, DEFAULT_BOUND)?;
    let classes = conjugacy_classes(&g);
    println!("order {}, {} classes, sizes {:?}", g.order(), classes.len(), classes.sizes());

    let tab = TabulatedGroup::new(g)?;
    for (i, row) in tab.table.rows().iter().enumerate() {
        let values: Vec<String> = row.iter().map(|v| format!("{v:?}")).collect();
        println!("chi_{i} (degree {}): {}", tab.table.degrees()[i], values.join("  "));
    }
    assert!(tab.table.check_orthogonality());

    // The dihedral group of order 8 already has non-real classes of elements
    // of order 4; its characters are still rational.
    let d4 = close_group(&[Perm::from_cycles(4, &[&[0, 1, 2, 3]])?, Perm::from_cycles(4, &[&[0, 2]])?], DEFAULT_BOUND)?;
    let d4 = TabulatedGroup::new(d4)?;
    println!("D4 degrees {:?}", d4.table.degrees());
    Ok(())
}
