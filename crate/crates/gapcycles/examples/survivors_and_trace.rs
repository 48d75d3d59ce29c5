//! The front of every cycle is already a run of true prime gaps: nothing
//! closes below the square of the next prime. Trace how later stages close
//! the rest.
//!
//! ```bash
//! cargo run --example survivors_and_trace
//! ```

use gapcycles::bridge::{closure_trace, prime_gap_oracle, survivors};
use gapcycles::cycle::GapCycle;

fn main() -> Result<(), gapcycles::Error> {
    for p in [5u64, 7, 11, 13] {
        let cycle = GapCycle::primorial(p)?;
        let report = survivors(&cycle)?;
        println!(
            "G({p}#): gaps from {} to {} are already prime gaps ({} of them, oracle-matched: {})",
            report.next_prime,
            report.end_value,
            report.gaps.len(),
            report.all_matched()
        );
    }

    let g7 = GapCycle::primorial(7)?;
    println!("\nclosure trace of G(7#), bracketed gaps already sit between primes:");
    let trace = closure_trace(&g7, 17)?;
    print!("{}", trace.render());

    // the independent oracle the survivors are checked against
    let gaps = prime_gap_oracle(121)?;
    println!("prime gaps up to 121: {gaps:?}");
    Ok(())
}
