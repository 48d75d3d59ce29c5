//! The bridge from cycles to true prime gaps.
//!
//! In `G(p_k#)` the prefix-sum walk starting at the next prime `p_{k+1}`
//! stays untouched by all later sieving until the first closure at
//! `p_{k+1}^2`, so those gaps are already gaps between primes. Everything
//! here is validated against the independent segmented sieve in
//! [`crate::sieve`], which shares no code with the cycle construction.

use crate::cycle::GapCycle;
use crate::{sieve, Error, Result};

/// The survivor prefix of a cycle: consecutive gaps covering
/// `(p_next, p_next^2)` that are already true prime gaps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurvivorReport {
    /// Sieve stage `p_k` of the source cycle.
    pub stage: u64,
    /// `p_{k+1}`, where the walk starts.
    pub next_prime: u64,
    /// The survivor gaps, in order.
    pub gaps: Vec<u32>,
    /// Per-gap agreement with the independent prime-gap oracle.
    pub matched: Vec<bool>,
    /// Last prefix-sum value reached (strictly below `p_next^2`).
    pub end_value: u64,
}

impl SurvivorReport {
    pub fn all_matched(&self) -> bool {
        self.matched.iter().all(|&m| m)
    }
}

/// Walks prefix sums from `p_next` while they stay below `p_next^2`,
/// reporting the traversed gaps. The candidate sequence repeats with the
/// cycle, so the walk wraps for small stages where `p_next^2 > p_k#`.
pub fn survivors(cycle: &GapCycle) -> Result<SurvivorReport> {
    let stage = cycle
        .sieve_stage()
        .ok_or_else(|| Error::NonPrimorial(cycle.modulus()))?;
    let p_next = cycle.next_prime()?;
    let limit = p_next
        .checked_mul(p_next)
        .ok_or_else(|| Error::Overflow(format!("{p_next}^2 exceeds u64")))?;
    let gaps_src = cycle.gaps();
    let phi = gaps_src.len();
    let mut gaps = Vec::new();
    let mut value = p_next;
    let mut idx = 1usize; // gaps[0] is the run-up from 1 to p_next
    loop {
        let g = gaps_src[idx % phi];
        if value + u64::from(g) >= limit {
            break;
        }
        gaps.push(g);
        value += u64::from(g);
        idx += 1;
    }
    // compare against true prime gaps on (p_next, p_next^2)
    let oracle = oracle_gaps_between(p_next, limit)?;
    let matched: Vec<bool> = gaps
        .iter()
        .enumerate()
        .map(|(i, &g)| oracle.get(i).is_some_and(|&o| o == g))
        .collect();
    Ok(SurvivorReport {
        stage,
        next_prime: p_next,
        gaps,
        matched,
        end_value: value,
    })
}

/// Gaps between consecutive primes within `[lo, hi)`.
pub fn oracle_gaps_between(lo: u64, hi: u64) -> Result<Vec<u32>> {
    let mut prev: Option<u64> = None;
    let mut out = Vec::new();
    sieve::for_each_prime_in(lo, hi, |p| {
        if let Some(q) = prev {
            out.push((p - q) as u32);
        }
        prev = Some(p);
    })?;
    Ok(out)
}

/// Gaps between consecutive primes up to `limit`; re-exported here as the
/// independent verification oracle.
pub fn prime_gap_oracle(limit: u64) -> Result<Vec<u32>> {
    sieve::prime_gap_oracle(limit)
}

/// One sieving stage of a closure trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStage {
    /// The sieving prime applied after this snapshot.
    pub prime: u64,
    /// Gap sequence at the start of the stage.
    pub gaps: Vec<u32>,
    /// Which gaps already sit between two primes and survive all later
    /// closures.
    pub settled: Vec<bool>,
    /// Candidates removed by this stage: every remaining candidate
    /// divisible by the stage prime (the prime itself first, then `p * m`).
    pub closures: Vec<u64>,
}

/// A stage-by-stage record of how later primes close gaps in the front
/// segment of a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureTrace {
    pub modulus: u64,
    pub stages: Vec<TraceStage>,
    /// Gap sequence after the last traced stage.
    pub final_gaps: Vec<u32>,
    /// Survivor flags for the final sequence.
    pub final_settled: Vec<bool>,
}

/// Traces the closures applied to the whole span `[1, N+1]` of a primorial
/// cycle by the sieving primes up to `up_to_prime` inclusive.
///
/// Stage `p` removes every remaining candidate divisible by `p`: the prime
/// itself (accumulating the front gap) and the multiples `p * m` whose least
/// prime factor is `p`, starting at `p^2`. Once `p^2` clears the span, the
/// remaining gaps from the first prime onward are exactly the prime gaps.
pub fn closure_trace(cycle: &GapCycle, up_to_prime: u64) -> Result<ClosureTrace> {
    cycle
        .sieve_stage()
        .ok_or_else(|| Error::NonPrimorial(cycle.modulus()))?;
    let mut p = cycle.next_prime()?;
    if up_to_prime < p {
        return Err(Error::invalid(format!(
            "trace must cover at least the next prime {p}, got {up_to_prime}"
        )));
    }
    // primality of every candidate, from the independent sieve
    let span_end = cycle.modulus() + 1;
    let mut is_prime_flags = vec![false; (span_end + 1) as usize];
    sieve::for_each_prime_in(2, span_end + 1, |q| is_prime_flags[q as usize] = true)?;
    let settled_of = |candidates: &[u64]| -> Vec<bool> {
        candidates
            .windows(2)
            .map(|w| is_prime_flags[w[0] as usize] && is_prime_flags[w[1] as usize])
            .collect()
    };
    let gaps_of = |candidates: &[u64]| -> Vec<u32> {
        candidates.windows(2).map(|w| (w[1] - w[0]) as u32).collect()
    };

    let mut candidates = cycle.generators();
    let mut stages = Vec::new();
    while p <= up_to_prime {
        let closures: Vec<u64> = candidates[..candidates.len() - 1]
            .iter()
            .copied()
            .filter(|&c| c % p == 0)
            .collect();
        stages.push(TraceStage {
            prime: p,
            gaps: gaps_of(&candidates),
            settled: settled_of(&candidates),
            closures: closures.clone(),
        });
        if !closures.is_empty() {
            let removed: std::collections::BTreeSet<u64> = closures.into_iter().collect();
            candidates.retain(|c| !removed.contains(c));
        }
        p = sieve::next_prime_after(p);
    }
    Ok(ClosureTrace {
        modulus: cycle.modulus(),
        stages,
        final_gaps: gaps_of(&candidates),
        final_settled: settled_of(&candidates),
    })
}

impl ClosureTrace {
    /// Text rendering of the trace, one line per stage; settled gaps are
    /// bracketed.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("cycle span 1..{}\n", self.modulus + 1));
        for stage in &self.stages {
            out.push_str(&format!(
                "(p={}) closures at {:?}\n        ",
                stage.prime, stage.closures
            ));
            out.push_str(&render_marked(&stage.gaps, &stage.settled));
            out.push('\n');
        }
        out.push_str("final:  ");
        out.push_str(&render_marked(&self.final_gaps, &self.final_settled));
        out.push('\n');
        out
    }
}

fn render_marked(gaps: &[u32], settled: &[bool]) -> String {
    let mut parts = Vec::with_capacity(gaps.len());
    for (i, &g) in gaps.iter().enumerate() {
        if settled.get(i).copied().unwrap_or(false) {
            parts.push(format!("[{g}]"));
        } else {
            parts.push(g.to_string());
        }
    }
    parts.join(" ")
}
