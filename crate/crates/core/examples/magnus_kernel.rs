//! Braids from E(2)' embedded in a closed surface act trivially on the
//! Magnus representation.

use magnus_core::fox::magnus_matrix;
use magnus_core::mcg::{DiskMappingClass, Embedding};
use magnus_core::parse::parse_braid;

fn main() -> magnus_core::Result<()> {
    for n in 1..=2 {
        let e = Embedding::church_farb(n)?;
        for v in ["[x2,x1]", "[[x2,x1],x1]"] {
            let f = DiskMappingClass::from_braid_word(&parse_braid(v, Some(e.holes))?)?;
            let m = magnus_matrix(&e.extend(&f)?.endo);
            println!("{} {v}: Magnus trivial = {}", e.label, m.is_identity());
        }
    }
    Ok(())
}
