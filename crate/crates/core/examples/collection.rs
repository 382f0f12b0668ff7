//! Lower central series weights and collection into basic commutators.

use magnus_core::lcs::{collect, lcs_weight, magnus_expand};
use magnus_core::parse::parse_word;

fn main() -> magnus_core::Result<()> {
    let w = parse_word("[x1,x2]")?;
    println!("M({w}) = {}", magnus_expand(&w, 3)?);

    for s in ["x1 x2 X1 X2", "[[x1,x2],x1] [[x2,x1],x2]", "[[x1,x2],x1]^x3 [x1,x3]^2"] {
        let w = parse_word(s)?;
        let weight = lcs_weight(&w, 6)?;
        println!("{s}: weight {weight}");
        for k in 1..=3 {
            if weight.at_least(k) {
                println!("  class in F_{k}/F_{}: {}", k + 1, collect(&w, k)?);
            }
        }
    }
    Ok(())
}
