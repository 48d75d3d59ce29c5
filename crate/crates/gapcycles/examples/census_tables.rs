//! Exact census of gaps and driving terms: the n_{g,j} table of G(13#)
//! with ratio sums and asymptotes, as CSV.
//!
//! ```bash
//! cargo run --example census_tables
//! ```

use gapcycles::census::{count_constellation, driving_term_census, Constellation};
use gapcycles::cycle::GapCycle;

fn main() -> Result<(), gapcycles::Error> {
    let g13 = GapCycle::primorial(13)?;
    let table = driving_term_census(&g13, 32, 9)?;
    print!("{}", table.to_csv());

    // constellation counts, overlaps included
    let g5 = GapCycle::primorial(5)?;
    println!("\nconstellations in G(5#) = {:?}:", g5.gaps());
    for gaps in [vec![2u32], vec![4], vec![6], vec![2, 4], vec![4, 2, 4], vec![4, 2, 4, 2, 4]] {
        let s = Constellation::new(gaps)?;
        println!("  N_{s} = {}", count_constellation(&g5, &s));
    }
    println!("(the two copies of (4,2,4) overlap on the middle 4)");
    Ok(())
}
