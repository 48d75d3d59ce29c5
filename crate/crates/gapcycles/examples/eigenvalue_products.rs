//! The eigenvalue products a_j^k that govern convergence of the gap
//! ratios: exact rationals at small range, compensated double-double floats
//! at scale, resumable through checkpoints.
//!
//! ```bash
//! cargo run --release --example eigenvalue_products
//! ```

use num_traits::ToPrimitive;

use gapcycles::dynamics::{
    eigenvalue_products_exact, eigenvalue_products_float, AccumulationOrder, AjkRun,
};

fn main() -> Result<(), gapcycles::Error> {
    // exact products over a short prime range
    let exact = eigenvalue_products_exact(13, 97, 5)?;
    println!("exact a_j^k over the primes in (13, 97]:");
    for j in 2..=5 {
        let v = &exact.exact.as_ref().unwrap()[j - 2];
        println!("  a_{j}^k = {v} = {:.10}", v.to_f64().unwrap());
    }

    // compensated floats to 10^6, two accumulation orders as a cross-check
    let up = eigenvalue_products_float(13, 1_000_000, 9, AccumulationOrder::Ascending)?;
    let down = eigenvalue_products_float(13, 1_000_000, 9, AccumulationOrder::Descending)?;
    println!("\nfloat a_j^k at pk = 10^6 over {} primes:", up.primes_used);
    for j in 2..=9 {
        let a = up.value_f64(j);
        let rel = (a - down.value_f64(j)).abs() / a;
        println!("  a_{j}^k = {a:.15}  (order split {rel:.2e})");
    }

    // a resumable run with checkpoints: interrupt-safe state on disk
    let dir = std::env::temp_dir().join("gapcycles_ajk_example");
    let mut run = AjkRun::resume_or_new(&dir, 13, 9)?;
    run.advance_to(2_000_000, Some(&dir))?;
    let resumable = run.products();
    println!(
        "\ncheckpointed run now at prime {} ({} primes folded); a_2^k = {:.12}",
        run.last_prime(),
        run.primes_used(),
        resumable.value_f64(2)
    );
    println!("checkpoint directory: {}", dir.display());
    Ok(())
}
