//! Construct the first few cycles of gaps and inspect their structure.
//!
//! ```bash
//! cargo run --example build_cycles
//! ```

use gapcycles::cycle::GapCycle;

fn main() -> Result<(), gapcycles::Error> {
    let mut cycle = GapCycle::seed();
    println!("seed G(2) = {:?}", cycle.gaps());

    while cycle.modulus() < 9_699_690 {
        let q = cycle.next_prime()?;
        cycle = cycle.extend_by_prime(q)?;
        let stage = cycle.sieve_stage().expect("primorial chain");
        if cycle.len() <= 48 {
            println!(
                "G({stage}#) = {:?}  ({} gaps, sum {})",
                cycle.gaps(),
                cycle.len(),
                cycle.modulus()
            );
        } else {
            println!(
                "G({stage}#): {} gaps summing to {}",
                cycle.len(),
                cycle.modulus()
            );
        }
        let report = cycle.structure_report();
        assert!(report.all_hold(), "structure violated: {report:?}");
        if let Some(mid) = report.middle {
            let span = 2 * mid.exponent as usize + 1;
            let start = mid.start_index as usize;
            println!(
                "  middle constellation (j = {}): {:?}",
                mid.exponent,
                &cycle.gaps()[start..start + span]
            );
        }
    }

    // a closure plan: where the next extension merges adjacent gaps
    let g5 = GapCycle::primorial(5)?;
    let plan = g5.closure_plan(7)?;
    println!(
        "\nextending G(5#) by 7 closes at candidates {:?}",
        plan.positions().iter().map(|p| p.candidate).collect::<Vec<_>>()
    );
    println!("inter-closure distances: {:?} (= 7 * gaps of G(5#))", plan.distances());

    // the general construction reaches non-primorial moduli too
    let g90 = GapCycle::for_modulus(90)?;
    println!("\nG(90) = {:?}", g90.gaps());
    Ok(())
}
