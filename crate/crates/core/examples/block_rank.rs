//! Higher-order Magnus homomorphisms of a block embedding have growing rank.

use magnus_core::harness::{thm53_experiment, ExperimentOptions};

fn main() {
    let opts = ExperimentOptions {
        direct_check: true,
        kernel_rows: true,
        ..Default::default()
    };
    for (g, k) in [(3, 2), (3, 3)] {
        let r = thm53_experiment(g, k, &opts);
        println!("{}", r.line());
    }
}
