//! Braids acting on the punctured disk, tracked by arc prefixes, and their
//! Johnson invariants.

use magnus_core::mcg::{commutator_class, johnson_level, tau_disk, DiskMappingClass};
use magnus_core::parse::parse_braid;

fn main() -> magnus_core::Result<()> {
    let a = parse_braid("A1,3", None)?;
    let f = DiskMappingClass::from_braid_word(&a)?;
    for j in 1..=3 {
        println!("u{j} = {}", f.arc_prefix(j).display_with('y'));
    }
    println!("boundary consistent: {}", f.is_boundary_consistent());

    let v = parse_braid("[x2,x1]", Some(3))?;
    let g = DiskMappingClass::from_braid_word(&v)?;
    println!("level of [x2,x1]: {}", johnson_level(&g, 6)?);
    for (j, c) in tau_disk(&g, 2)?.iter().enumerate() {
        println!("  tau_2 on arc {}: {c}", j + 1);
    }

    let h = commutator_class(&parse_braid("[x1,x2]", Some(3))?, &parse_braid("[x2,x1^2]", Some(3))?)?;
    println!("level of a commutator of two such braids: {}", johnson_level(&h, 6)?);
    Ok(())
}
