//! Segmented sieve of Eratosthenes over `u64` ranges.
//!
//! This module is the independent prime source used to cross-check the cycle
//! machinery and to enumerate primes for the eigenvalue products. It shares
//! no code with the cycle construction in [`crate::cycle`].

use crate::{Error, Result};

/// Primes up to `n` inclusive, by a plain odds-only sieve.
///
/// Intended for base primes and small enumerations; use
/// [`for_each_prime_in`] for large ranges.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut primes = vec![2];
    if n < 3 {
        return primes;
    }
    // index i represents the odd number 2i + 3
    let m = (n - 1) / 2;
    let mut composite = vec![false; m];
    let mut i = 0;
    while (2 * i + 3) * (2 * i + 3) <= n {
        if !composite[i] {
            let p = 2 * i + 3;
            let mut j = (p * p - 3) / 2;
            while j < m {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    for (i, &c) in composite.iter().enumerate() {
        if !c {
            primes.push((2 * i + 3) as u64);
        }
    }
    primes
}

/// Number of odd values covered per segment (1 MiB of flags per segment).
const SEGMENT_ODDS: u64 = 1 << 23;

/// Calls `f` for every prime in `[lo, hi)` in ascending order.
///
/// Uses a segmented sieve so memory stays bounded regardless of the range.
pub fn for_each_prime_in<F: FnMut(u64)>(lo: u64, hi: u64, mut f: F) -> Result<()> {
    if hi <= lo {
        return Ok(());
    }
    if lo <= 2 && hi > 2 {
        f(2);
    }
    let sqrt = hi.saturating_sub(1).isqrt();
    let base: Vec<u64> = primes_up_to(sqrt).into_iter().filter(|&p| p > 2).collect();

    // odd candidates only
    let mut seg_lo = lo.max(3);
    if seg_lo % 2 == 0 {
        seg_lo += 1;
    }
    let mut flags = vec![false; SEGMENT_ODDS as usize];
    while seg_lo < hi {
        let seg_len = SEGMENT_ODDS.min((hi - seg_lo).div_ceil(2));
        let seg_hi = seg_lo + 2 * seg_len; // exclusive, odd grid
        for flag in flags[..seg_len as usize].iter_mut() {
            *flag = false;
        }
        for &p in &base {
            if p * p >= seg_hi {
                break;
            }
            // first odd multiple of p in [seg_lo, seg_hi), at least p*p
            let mut start = (p * p).max(seg_lo.div_ceil(p) * p);
            if start % 2 == 0 {
                start += p;
            }
            let mut idx = (start - seg_lo) / 2;
            while idx < seg_len {
                flags[idx as usize] = true;
                idx += p;
            }
        }
        for idx in 0..seg_len {
            if !flags[idx as usize] {
                f(seg_lo + 2 * idx);
            }
        }
        seg_lo = seg_hi;
    }
    Ok(())
}

/// Collects the primes in `[lo, hi)`.
pub fn primes_in(lo: u64, hi: u64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for_each_prime_in(lo, hi, |p| out.push(p))?;
    Ok(out)
}

/// Gaps between consecutive primes `<= limit`, streamed to `visitor`.
///
/// The first gap is `3 - 2 = 1`.
pub fn stream_prime_gaps<F: FnMut(u64, u32)>(limit: u64, mut visitor: F) -> Result<()> {
    let mut prev: Option<u64> = None;
    for_each_prime_in(2, limit.saturating_add(1), |p| {
        if let Some(q) = prev {
            visitor(p, (p - q) as u32);
        }
        prev = Some(p);
    })
}

/// Gaps between consecutive primes `<= limit`, materialized.
///
/// Errors when the materialized vector would exceed roughly 1 GiB; use
/// [`stream_prime_gaps`] beyond that.
pub fn prime_gap_oracle(limit: u64) -> Result<Vec<u32>> {
    if limit < 3 {
        return Err(Error::invalid(format!(
            "prime gap oracle needs limit >= 3, got {limit}"
        )));
    }
    // pi(x) < 1.3 x / ln x for x >= 17; 4 bytes per gap
    let estimate = if limit < 17 {
        8
    } else {
        (1.3 * limit as f64 / (limit as f64).ln()) as u64 * 4
    };
    if estimate > 1 << 30 {
        return Err(Error::Resource(format!(
            "materializing prime gaps to {limit} needs ~{estimate} bytes; stream instead"
        )));
    }
    let mut out = Vec::new();
    stream_prime_gaps(limit, |_, g| out.push(g))?;
    Ok(out)
}

/// Deterministic primality test by trial division over sieved base primes.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = 11u64;
    // wheel over 2,3: step 2,4 alternating would skip some; plain 6k±1 walk
    let mut step = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += step;
        step = 6 - step;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime_after(n: u64) -> u64 {
    let mut c = n + 1;
    if c <= 2 {
        return 2;
    }
    if c % 2 == 0 {
        c += 1;
    }
    while !is_prime(c) {
        c += 2;
    }
    c
}
