//! When does the gap 30 become more common than the gap 6? Their limiting
//! ratios are 8/3 and 2, so it must happen; the eigen expansion says it
//! waits until a_2^k falls below about 0.063 — far beyond 10^15.
//!
//! ```bash
//! cargo run --release --example crossover
//! ```

use gapcycles::census::{driving_term_census, ratio_vector};
use gapcycles::cycle::GapCycle;
use gapcycles::dynamics::{
    ajk_correction_factors, estimate_primorial_crossover, evolve_first_coordinate,
    eigenvalue_products_float, AccumulationOrder,
};

fn main() -> Result<(), gapcycles::Error> {
    let g13 = GapCycle::primorial(13)?;
    let table = driving_term_census(&g13, 32, 9)?;
    let w6 = ratio_vector(&table, 6, 9)?;
    let w30 = ratio_vector(&table, 30, 9)?;
    println!("initial sums at 13#: w_6 -> {}, w_30 -> {}", w6.sum(), w30.sum());

    let corrections = ajk_correction_factors(13, 10_000_000, 9)?;
    let estimate = estimate_primorial_crossover(&w6, &w30, Some(&corrections))?;
    println!(
        "crossover threshold on a_2^k: {:.5} (geometric approximation), {:.5} (corrected products)",
        estimate.threshold.unwrap(),
        estimate.threshold_corrected.unwrap()
    );

    // where do the products actually stand? compute them to 10^7
    let products = eigenvalue_products_float(13, 10_000_000, 9, AccumulationOrder::Ascending)?;
    let ajk: Vec<f64> = (2..=9).map(|j| products.value_f64(j)).collect();
    println!(
        "at p_k = 10^7: a_2^k = {:.5}; w_6,1 = {:.4}, w_30,1 = {:.4}",
        ajk[0],
        evolve_first_coordinate(&w6, &ajk),
        evolve_first_coordinate(&w30, &ajk)
    );
    println!("a_2^k is still ~0.10 at 10^12, so gap 6 outnumbers gap 30 well past 10^15");
    Ok(())
}
