//! Basic commutators and their counts.

use magnus_core::lcs::{enumerate_basic, witt_count};

fn main() {
    for t in enumerate_basic(2, 4) {
        println!("{t}");
    }
    for n in 2..=3 {
        let counts: Vec<_> = (1..=6).map(|k| witt_count(n, k)).collect();
        println!("n = {n}: {counts:?}");
    }
}
