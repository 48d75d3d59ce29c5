//! Every even gap eventually appears, with a limiting ratio to the twin
//! count given by a product over its odd prime divisors. The radical
//! construction pins down when driving terms first exist and how many.
//!
//! ```bash
//! cargo run --example polignac_ratios
//! ```

use gapcycles::census::{format_decimal, total_driving_terms};
use gapcycles::cycle::GapCycle;
use gapcycles::polignac::{
    build_cycle_via_radical, driving_term_total, hl_asymptotic_ratio, radical, ratio_sum_at,
    verify_qn_invariance,
};

fn main() -> Result<(), gapcycles::Error> {
    println!("g    radical qbar  driving terms at qbar#   limiting ratio");
    for g in [6u64, 8, 10, 30, 42, 48, 74, 90, 128, 222] {
        let rad = radical(g)?;
        let total = driving_term_total(g)?;
        let ratio = hl_asymptotic_ratio(g)?;
        println!(
            "{g:<4} {:<7} {:<5} {:<24} {} = {}{}",
            rad.radical,
            rad.qbar,
            total.total.to_string(),
            ratio,
            format_decimal(&ratio, 8),
            if total.degenerate_power_of_two {
                "   (power-of-two radical: seed-cycle count)"
            } else {
                ""
            }
        );
    }

    // the closed form against a real census
    println!("\ncensus cross-checks:");
    for g in [6u64, 10, 12, 30, 48] {
        let rad = radical(g)?;
        let cycle = GapCycle::primorial(rad.qbar)?;
        let censused = total_driving_terms(&cycle, g);
        println!(
            "  g={g}: formula {} vs census of G({}#) {censused}",
            driving_term_total(g)?.total,
            rad.qbar
        );
    }

    // ratio sums only move when a new prime factor of g enters the sieve
    println!("\nratio sums for g = 222 = 2*3*37:");
    for p in [3u64, 31, 37, 41] {
        let sum = ratio_sum_at(222, p)?;
        println!("  at {p:>2}#: {sum} = {}", format_decimal(&sum, 8));
    }

    // one extension step preserves the normalized sum
    let g5 = GapCycle::primorial(5)?;
    let report = verify_qn_invariance(&g5, 7, 6)?;
    println!(
        "\nextending G(5#) by 7: total driving terms for 6 scale {} -> {} (factor {}), invariant holds: {:?}",
        report.total_before, report.total_after, report.expected_factor, report.invariant_holds
    );

    // the radical route builds the same cycle as the primorial route
    assert_eq!(build_cycle_via_radical(10)?, GapCycle::primorial(5)?);
    println!("radical-route construction of G(5#) from g = 10 matches the direct route");
    Ok(())
}
