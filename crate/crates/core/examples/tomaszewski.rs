//! Rewriting words of F' in the free basis B(i,k,d) and reading off
//! classes in the lower central series of F'.

use magnus_core::derived::{derived_class, expand_b, module_act, rewrite_to_b, ActionMode};
use magnus_core::groupring::{GroupRingElement, Monomial};
use magnus_core::parse::parse_word;

fn main() -> magnus_core::Result<()> {
    let w = parse_word("[x1 x2, x3 x1]")?;
    let b = rewrite_to_b(&w)?;
    println!("{w}\n  = {b}");
    println!("round trip: {}", expand_b(&b) == w);

    let w = parse_word("[[x1,x2],[x1,x2]^x1]")?;
    let c = derived_class(&w, 2)?;
    println!("class of {w}: {c}");

    // (1 - t1) acting on a weight-1 class.
    let r = &GroupRingElement::one() - &GroupRingElement::monomial(Monomial::var(1), 1);
    let base = derived_class(&parse_word("[x1,x2]")?, 1)?;
    println!("(1 - t1).{base} = {}", module_act(&r, &base, ActionMode::Exact)?);
    Ok(())
}
