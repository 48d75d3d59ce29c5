//! Stream a large extension without materializing it: the gaps of G(23#)
//! (36,495,360 of them) are produced from the 1.7M-gap G(19#) held in
//! memory, while a census and a spike scan run on the fly.
//!
//! ```bash
//! cargo run --release --example stream_large_cycle
//! ```

use gapcycles::census::CensusBuilder;
use gapcycles::cycle::GapCycle;

fn main() -> Result<(), gapcycles::Error> {
    let base = GapCycle::primorial(19)?;
    println!(
        "base G(19#): {} gaps in memory (~{} MB)",
        base.len(),
        base.len() * 4 / (1 << 20)
    );

    let q = base.next_prime()?;
    let new_len = base.len() * (q - 1);
    let mut census = CensusBuilder::new(base.modulus() * q, new_len, 32, 9)?;
    let mut max_gap = 0u32;
    let started = std::time::Instant::now();
    let summary = base.stream_extend_by(q, |gap| {
        census.push(gap);
        max_gap = max_gap.max(gap);
        Ok(())
    })?;
    let table = census.finish()?;
    println!(
        "streamed G(23#): {} gaps, sum {}, max gap {max_gap}, in {:?}",
        summary.emitted,
        summary.sum,
        started.elapsed()
    );
    println!("N_2(23#) = {}", table.n2());
    println!("N_6(23#) = {}", table.count(6, 1));
    println!("n_30,6(23#) = {}", table.count(30, 6));
    Ok(())
}
