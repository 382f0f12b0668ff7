//! One braid embedded N ways in a closed surface gives N independent values
//! of the degree-k Magnus homomorphism.

use magnus_core::harness::{church_farb_braid, thm54_experiment, ExperimentOptions};
use magnus_core::mcg::Embedding;
use magnus_core::mcg::DiskMappingClass;

fn main() -> magnus_core::Result<()> {
    let f = DiskMappingClass::from_braid_word(&church_farb_braid(2))?;
    let class = Embedding::church_farb(1)?.tau_magnus_formula(&f, 2, (6, 2))?;
    println!("tau_2 on [c6,c2] for church-farb(1): {class}");

    let opts = ExperimentOptions::default();
    for (k, n) in [(2, 4), (3, 3)] {
        println!("{}", thm54_experiment(k, n, &opts).line());
    }
    Ok(())
}
