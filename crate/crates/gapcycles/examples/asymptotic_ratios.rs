//! Asymptotic ratios N_g / N_2 from one census: the sum of a gap's initial
//! ratios over all its driving terms.
//!
//! ```bash
//! cargo run --example asymptotic_ratios
//! ```

use std::collections::BTreeMap;

use gapcycles::census::{driving_term_census, format_decimal, ratio_vector};
use gapcycles::cycle::GapCycle;
use gapcycles::dynamics::asymptotic_ratio;

fn main() -> Result<(), gapcycles::Error> {
    let g13 = GapCycle::primorial(13)?;
    let table = driving_term_census(&g13, 32, 9)?;

    // group gaps by their limiting ratio
    let mut classes: BTreeMap<String, Vec<u64>> = BTreeMap::new();
    for g in (2..=32u64).step_by(2) {
        let w0 = ratio_vector(&table, g, 9)?;
        let limit = asymptotic_ratio(&w0);
        classes
            .entry(format!("{limit} = {}", format_decimal(&limit, 10)))
            .or_default()
            .push(g);
    }
    println!("limiting ratio w_g,1 -> N_g/N_2 by gap (from the census of G(13#)):");
    for (ratio, gaps) in classes {
        println!("  {ratio:<22} : {gaps:?}");
    }
    println!("\npowers of two stay at 1; multiples of 3 reach 2; the primorial 30 reaches 8/3");
    Ok(())
}
