//! Reduced words, commutators and endomorphisms of a free group.

use magnus_core::parse::parse_word;
use magnus_core::{Endomorphism, FreeWord};

fn main() -> magnus_core::Result<()> {
    let a = parse_word("x1 x2 X2 x3")?;
    let b = parse_word("[x1,x2]^x3")?;
    println!("a = {a}");
    println!("b = {b}");
    println!("[a,b] = {}", FreeWord::commutator(&a, &b));
    println!("b^3 = {}", b.pow(3));

    // x1 -> x1 x2, x2 -> x2 is an automorphism; its inverse sends x1 -> x1 X2.
    let f = Endomorphism::new(vec![parse_word("x1 x2")?, parse_word("x2")?])?;
    let g = Endomorphism::new(vec![parse_word("x1 X2")?, parse_word("x2")?])?;
    println!("f(b) = {}", f.apply(&parse_word("[x1,x2]")?)?);
    println!("f o g is identity: {}", f.compose(&g)?.is_identity());
    Ok(())
}
