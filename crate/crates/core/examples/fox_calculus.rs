//! Fox derivatives and Magnus matrices.

use magnus_core::fox::{gradient, in_second_derived, magnus_matrix};
use magnus_core::groupring::{abelianize, GroupRingElement};
use magnus_core::parse::{parse_endo, parse_word};

fn main() -> magnus_core::Result<()> {
    let w = parse_word("[x1,x2]")?;
    for (j, d) in gradient(&w, 2)?.iter().enumerate() {
        println!("d/dx{} {w} = {d}", j + 1);
    }

    // Fundamental identity: w - 1 = sum_j (dw/dx_j)(t_j - 1).
    let w = parse_word("x1 x2^2 X1 x3")?;
    let lhs = &GroupRingElement::monomial(abelianize(&w, 3)?, 1) - &GroupRingElement::one();
    let mut rhs = GroupRingElement::zero();
    for (j, d) in gradient(&w, 3)?.iter().enumerate() {
        let tj = &GroupRingElement::var(j as u32 + 1) - &GroupRingElement::one();
        rhs = &rhs + &(d * &tj);
    }
    println!("fundamental identity holds: {}", lhs == rhs);

    let c = parse_word("[[x1,x2],[x1,x2]^x1]")?;
    println!("{c} in F'': {}", in_second_derived(&c, 2)?);

    let f = parse_endo("x1 -> x1 x2\nx2 -> x2\n", None)?;
    println!("Magnus matrix of x1 -> x1 x2:\n{}", magnus_matrix(&f));
    Ok(())
}
