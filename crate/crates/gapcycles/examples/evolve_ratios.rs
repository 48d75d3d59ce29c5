//! Evolve the normalized populations w_{g,j} = n_{g,j} / N_2 with the
//! transfer-matrix model and confirm them against real censuses at every
//! stage — the counts are exact, not estimates.
//!
//! ```bash
//! cargo run --example evolve_ratios
//! ```

use gapcycles::census::{driving_term_census, format_decimal, ratio_vector};
use gapcycles::cycle::GapCycle;
use gapcycles::dynamics::iterate_model;

fn main() -> Result<(), gapcycles::Error> {
    let g5 = GapCycle::primorial(5)?;
    let table5 = driving_term_census(&g5, 10, 3)?;

    println!("initial ratios in G(5#) (normalized by N_2 = {}):", table5.n2());
    for g in [6u64, 8, 10] {
        let w = ratio_vector(&table5, g, 3)?;
        let parts: Vec<String> = w.entries.iter().map(|e| e.to_string()).collect();
        println!("  w_{g} = [{}]", parts.join(", "));
    }

    for g in [6u64, 8, 10] {
        let w0 = ratio_vector(&table5, g, 3)?;
        println!("\ngap {g}: first coordinate w_{{g,1}} across stages");
        for pk in [7u64, 11, 13, 17, 19] {
            let evolved = iterate_model(&w0, 5, pk)?;
            let cycle = GapCycle::primorial(pk)?;
            let censused = ratio_vector(&driving_term_census(&cycle, 10, 3)?, g, 3)?;
            assert_eq!(evolved.entries, censused.entries, "model != census");
            println!(
                "  at {pk:>2}#: {} = {} (model == census exactly)",
                evolved.entries[0],
                format_decimal(&evolved.entries[0], 6),
            );
        }
    }
    println!("\nN_6 overtakes N_2 between 7# and 11#: 14/15 < 1 < 142/135");
    Ok(())
}
