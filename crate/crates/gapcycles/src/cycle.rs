//! Cycles of gaps among the generators of `Z mod N`, and the recursion that
//! carries one stage of Eratosthenes sieve to the next.
//!
//! The cycle `G(N)` lists the differences between consecutive units of
//! `Z mod N`, starting with the gap from the generator `1` to the next
//! generator. Extending `G(N)` by a prime `q` concatenates `q` copies of the
//! cycle and, when `q` does not divide `N`, closes one pair of adjacent gaps
//! at every candidate divisible by `q` — exactly one closure per generator of
//! `Z mod N`. All construction here is overflow-checked and deterministic for
//! any worker count.

use crate::{Error, Result};

/// Trial-division primality check, deliberately separate from
/// [`crate::sieve`] so the sieve stays an independent oracle.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = 5u64;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Smallest prime not dividing `n`.
fn smallest_nondivisor_prime(n: u64) -> u64 {
    let mut p = 2u64;
    loop {
        if n % p != 0 {
            return p;
        }
        p += 1;
        while !is_prime_u64(p) {
            p += 1;
        }
    }
}

/// If `n` is a primorial `p#`, returns `Some(p)`.
fn primorial_stage(n: u64) -> Option<u64> {
    let mut m = n;
    let mut p = 2u64;
    let mut last = 0u64;
    while m > 1 {
        if m % p != 0 {
            return None;
        }
        m /= p;
        if m % p == 0 {
            return None; // not squarefree
        }
        last = p;
        p += 1;
        while !is_prime_u64(p) {
            p += 1;
        }
    }
    if last == 0 {
        None
    } else {
        Some(last)
    }
}

/// Euler's totient by trial-division factoring.
fn totient(n: u64) -> u64 {
    let mut m = n;
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            phi *= p - 1;
            while m % p == 0 {
                m /= p;
                phi *= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        phi *= m - 1;
    }
    phi
}

/// The cyclic sequence of gaps between consecutive generators of `Z mod N`,
/// in canonical rotation (first gap follows the generator 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapCycle {
    modulus: u64,
    gaps: Vec<u32>,
    sieve_stage: Option<u64>,
}

/// Summary returned by the streaming extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StreamSummary {
    /// Gaps emitted; equals `phi(qN)`.
    pub emitted: u64,
    /// Sum of emitted gaps; equals `qN`.
    pub sum: u64,
    /// Largest gap emitted.
    pub max_gap: u32,
}

impl GapCycle {
    /// The seed cycle `G(2) = (2)`: the single gap from 1 to `3 = 1 mod 2`.
    pub fn seed() -> Self {
        GapCycle {
            modulus: 2,
            gaps: vec![2],
            sieve_stage: Some(2),
        }
    }

    /// Builds `G(p#)` by extending the seed one prime at a time.
    pub fn primorial(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        let mut cycle = GapCycle::seed();
        let mut q = 3u64;
        while q <= p {
            cycle = cycle.extend_by_prime(q)?;
            q = next_prime_u64(q);
        }
        Ok(cycle)
    }

    /// Builds `G(n)` for any `n >= 2` by introducing one prime factor at a
    /// time; repeated factors take the plain concatenation branch.
    pub fn for_modulus(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!("modulus {n} < 2")));
        }
        if n % 2 != 0 {
            return Err(Error::invalid(format!(
                "modulus {n} is odd; only even moduli arise from the sieve"
            )));
        }
        let mut cycle = GapCycle::seed();
        let mut m = n / 2;
        let mut p = 2u64;
        while m > 1 {
            if m % p == 0 {
                m /= p;
                cycle = cycle.extend_by_prime(p)?;
            } else {
                p += 1;
                while !is_prime_u64(p) {
                    p += 1;
                }
            }
        }
        Ok(cycle)
    }

    /// Reconstructs a cycle from raw parts, validating every invariant.
    pub fn from_parts(modulus: u64, gaps: Vec<u32>) -> Result<Self> {
        let cycle = GapCycle {
            sieve_stage: primorial_stage(modulus),
            modulus,
            gaps,
        };
        cycle.validate()?;
        Ok(cycle)
    }

    fn from_trusted(modulus: u64, gaps: Vec<u32>) -> Self {
        GapCycle {
            sieve_stage: primorial_stage(modulus),
            modulus,
            gaps,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    /// `phi(N)`, the number of gaps.
    pub fn len(&self) -> u64 {
        self.gaps.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    /// `Some(p)` when the modulus is the primorial `p#`.
    pub fn sieve_stage(&self) -> Option<u64> {
        self.sieve_stage
    }

    /// The next prime identified by this stage of the sieve: `g_1 + 1`.
    ///
    /// Only defined for primorial cycles.
    pub fn next_prime(&self) -> Result<u64> {
        if self.sieve_stage.is_none() {
            return Err(Error::NonPrimorial(self.modulus));
        }
        let p = u64::from(self.gaps[0]) + 1;
        debug_assert!(is_prime_u64(p), "g_1 + 1 = {p} must be prime");
        Ok(p)
    }

    /// Extends a primorial cycle `G(p_k#)` to `G(p_{k+1}#)`.
    pub fn extend_by_next_prime(&self) -> Result<GapCycle> {
        let q = self.next_prime()?;
        self.extend_by_prime(q)
    }

    /// Builds `G(qN)` from `G(N)` for a prime `q`.
    ///
    /// When `q | N` the result is exactly `q` concatenated copies of the
    /// cycle; otherwise one closure is applied per generator of `Z mod N`.
    pub fn extend_by_prime(&self, q: u64) -> Result<GapCycle> {
        self.extend_by_prime_with_workers(q, 1)
    }

    /// Like [`extend_by_prime`](Self::extend_by_prime) with the concatenated
    /// copies split across `workers` threads. The output is bit-identical
    /// for every worker count: the closure within each copy is fixed by
    /// residue arithmetic, so copy ranges are independent.
    pub fn extend_by_prime_with_workers(&self, q: u64, workers: usize) -> Result<GapCycle> {
        if !is_prime_u64(q) {
            return Err(Error::NotPrime(q));
        }
        let new_modulus = self
            .modulus
            .checked_mul(q)
            .ok_or_else(|| Error::Overflow(format!("{} * {q} exceeds u64", self.modulus)))?;
        let q_usize: usize = q
            .try_into()
            .map_err(|_| Error::Overflow(format!("{q} copies exceed addressable memory")))?;
        let out_len = self
            .gaps
            .len()
            .checked_mul(q_usize)
            .ok_or_else(|| Error::Overflow("concatenation length exceeds usize".into()))?;

        if self.modulus % q == 0 {
            let mut gaps = Vec::with_capacity(out_len);
            for _ in 0..q {
                gaps.extend_from_slice(&self.gaps);
            }
            return Ok(GapCycle::from_trusted(new_modulus, gaps));
        }

        let workers = workers.clamp(1, q_usize);
        if workers == 1 {
            let mut gaps = Vec::with_capacity(out_len - self.gaps.len() + 1);
            let summary = self.stream_closures(q, |g| {
                gaps.push(g);
                Ok(())
            })?;
            debug_assert_eq!(summary.sum, new_modulus);
            return Ok(GapCycle::from_trusted(new_modulus, gaps));
        }

        // Shard by whole copies; each worker emits its completed gaps plus a
        // trailing accumulation left open when the copy-boundary candidate is
        // itself closed.
        let mut bounds = Vec::with_capacity(workers + 1);
        for w in 0..=workers {
            bounds.push(w * q_usize / workers);
        }
        let shards: Vec<Result<(Vec<u32>, u64)>> = std::thread::scope(|scope| {
            let handles: Vec<_> = bounds
                .windows(2)
                .map(|range| {
                    let (lo, hi) = (range[0], range[1]);
                    scope.spawn(move || self.closure_shard(q, lo, hi))
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });

        let mut gaps: Vec<u32> = Vec::with_capacity(out_len - self.gaps.len() + 1);
        let mut carry: u64 = 0;
        for shard in shards {
            let (body, trailing) = shard?;
            if body.is_empty() {
                carry += trailing;
                continue;
            }
            if carry > 0 {
                let first = carry + u64::from(body[0]);
                gaps.push(checked_gap(first)?);
                gaps.extend_from_slice(&body[1..]);
            } else {
                gaps.extend_from_slice(&body);
            }
            carry = trailing;
        }
        debug_assert_eq!(carry, 0, "final candidate qN+1 is never closed");
        Ok(GapCycle::from_trusted(new_modulus, gaps))
    }

    /// Closure walk over copies `[copy_lo, copy_hi)`; returns completed gaps
    /// and the still-open trailing accumulation.
    fn closure_shard(&self, q: u64, copy_lo: usize, copy_hi: usize) -> Result<(Vec<u32>, u64)> {
        let mut out = Vec::new();
        let mut v = copy_lo as u64 * self.modulus + 1;
        let mut acc: u64 = 0;
        for _ in copy_lo..copy_hi {
            for &g in &self.gaps {
                v += u64::from(g);
                acc += u64::from(g);
                if v % q != 0 {
                    out.push(checked_gap(acc)?);
                    acc = 0;
                }
            }
        }
        Ok((out, acc))
    }

    /// Streams the gaps of `G(qN)` in order without materializing them,
    /// holding only this cycle in memory.
    ///
    /// `q` must not divide the modulus. Any error from the visitor aborts
    /// the stream and is returned unchanged.
    pub fn stream_extend_by<F>(&self, q: u64, visitor: F) -> Result<StreamSummary>
    where
        F: FnMut(u32) -> Result<()>,
    {
        if !is_prime_u64(q) {
            return Err(Error::NotPrime(q));
        }
        self.modulus
            .checked_mul(q)
            .ok_or_else(|| Error::Overflow(format!("{} * {q} exceeds u64", self.modulus)))?;
        if self.modulus % q == 0 {
            return self.stream_concatenation(q, visitor);
        }
        self.stream_closures(q, visitor)
    }

    /// Streaming variant of [`extend_by_next_prime`](Self::extend_by_next_prime).
    pub fn stream_extend<F>(&self, visitor: F) -> Result<StreamSummary>
    where
        F: FnMut(u32) -> Result<()>,
    {
        let q = self.next_prime()?;
        self.stream_extend_by(q, visitor)
    }

    fn stream_concatenation<F>(&self, q: u64, mut visitor: F) -> Result<StreamSummary>
    where
        F: FnMut(u32) -> Result<()>,
    {
        let mut max_gap = 0u32;
        for _ in 0..q {
            for &g in &self.gaps {
                visitor(g)?;
                max_gap = max_gap.max(g);
            }
        }
        Ok(StreamSummary {
            emitted: self.len() * q,
            sum: self.modulus * q,
            max_gap,
        })
    }

    fn stream_closures<F>(&self, q: u64, mut visitor: F) -> Result<StreamSummary>
    where
        F: FnMut(u32) -> Result<()>,
    {
        // A candidate v (a unit of Z mod N shifted through the q copies) is
        // removed exactly when q | v; the surrounding gaps then merge.
        let mut v: u64 = 1;
        let mut acc: u64 = 0;
        let mut emitted: u64 = 0;
        let mut max_gap = 0u32;
        for _ in 0..q {
            for &g in &self.gaps {
                v += u64::from(g);
                acc += u64::from(g);
                if v % q != 0 {
                    let gap = checked_gap(acc)?;
                    visitor(gap)?;
                    emitted += 1;
                    max_gap = max_gap.max(gap);
                    acc = 0;
                }
            }
        }
        debug_assert_eq!(acc, 0);
        Ok(StreamSummary {
            emitted,
            sum: self.modulus * q,
            max_gap,
        })
    }

    /// The closure plan for extending by a prime `q` that does not divide
    /// the modulus: one closure per generator of `Z mod N`.
    pub fn closure_plan(&self, q: u64) -> Result<ClosurePlan> {
        if !is_prime_u64(q) {
            return Err(Error::NotPrime(q));
        }
        if self.modulus % q == 0 {
            return Err(Error::invalid(format!(
                "{q} divides {}; extension is plain concatenation with no closures",
                self.modulus
            )));
        }
        let qn = self
            .modulus
            .checked_mul(q)
            .ok_or_else(|| Error::Overflow(format!("{} * {q} exceeds u64", self.modulus)))?;
        let mut positions = Vec::with_capacity(self.gaps.len());
        let mut v: u64 = 1;
        let mut index: u64 = 0;
        for _ in 0..q {
            for &g in &self.gaps {
                v += u64::from(g);
                if v % q == 0 {
                    positions.push(ClosurePosition {
                        gap_index: index,
                        candidate: v,
                    });
                }
                index += 1;
            }
        }
        debug_assert_eq!(positions.len() as u64, self.len());
        // The step from the last closure back to the first is q times the
        // final gap of the source cycle, and always crosses the cycle end.
        let wrap_flag = match (positions.first(), positions.last()) {
            (Some(first), Some(last)) => {
                let last_gap = u64::from(*self.gaps.last().unwrap());
                last.candidate + q * last_gap == qn + first.candidate
            }
            _ => false,
        };
        Ok(ClosurePlan {
            base_modulus: self.modulus,
            prime: q,
            positions,
            wrap_flag,
        })
    }

    /// True prefix-sum generators `1 + g_1 + ... + g_j`; the last equals
    /// `N + 1 = 1 mod N`.
    pub fn generators(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.gaps.len() + 1);
        let mut v = 1u64;
        out.push(v);
        for &g in &self.gaps {
            v += u64::from(g);
            out.push(v);
        }
        out
    }

    /// Checks every structural invariant of the cycle.
    pub fn validate(&self) -> Result<()> {
        let report = self.structure_report();
        if report.all_hold() {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "cycle over {} violates invariants: {report:?}",
                self.modulus
            )))
        }
    }

    /// Per-property structural report: totient length, sum, trailing 2,
    /// symmetry, first gap, and the power-of-two middle constellation.
    pub fn structure_report(&self) -> StructureReport {
        let n = self.modulus;
        let phi = self.len();
        let length_is_totient = phi == totient(n);
        let sum: u64 = self.gaps.iter().map(|&g| u64::from(g)).sum();
        let sum_is_modulus = sum == n;
        let trailing_two = n <= 2 || *self.gaps.last().unwrap() == 2;
        // g_j = g_{phi - j} for 1 <= j < phi
        let mut symmetric = true;
        let gaps = &self.gaps;
        let phi_us = gaps.len();
        for j in 1..phi_us {
            if gaps[j - 1] != gaps[phi_us - j - 1] {
                symmetric = false;
                break;
            }
        }
        let first_gap_is_next_coprime = if n <= 2 {
            true
        } else {
            u64::from(gaps[0]) == smallest_nondivisor_prime(n) - 1
        };
        let middle = self.middle_constellation();
        StructureReport {
            length_is_totient,
            sum_is_modulus,
            trailing_two,
            symmetric,
            first_gap_is_next_coprime,
            middle,
        }
    }

    /// Locates the power-of-two middle constellation
    /// `2^j ... 8 4 2 4 2 4 8 ... 2^j` around the symmetry center, with `j`
    /// minimal such that `2^(j+1)` exceeds the next prime. Only meaningful
    /// for primorial cycles long enough to hold the pattern.
    pub fn middle_constellation(&self) -> Option<MiddleConstellation> {
        let stage = self.sieve_stage?;
        let p_next = next_prime_u64(stage);
        let mut j = 1u32;
        while 2u64.pow(j + 1) <= p_next {
            j += 1;
        }
        let span = 2 * j as usize + 1;
        let phi = self.gaps.len();
        if phi < span || phi / 2 < j as usize + 1 {
            return None;
        }
        let center = phi / 2 - 1; // 0-based index of the symmetry-fixed gap
        let start = center - j as usize;
        let mut matches = true;
        for (offset, &g) in self.gaps[start..start + span].iter().enumerate() {
            let d = offset as i64 - j as i64;
            let expect = if d == 0 { 4 } else { 1u32 << d.unsigned_abs() };
            if g != expect {
                matches = false;
                break;
            }
        }
        Some(MiddleConstellation {
            exponent: j,
            start_index: start as u64,
            matches,
        })
    }

    /// Positions (0-based) of every gap equal to `2 * p_prev`, and whether a
    /// symmetric pair exists among them. The two merges that create these
    /// gaps land symmetrically in the cycle.
    pub fn double_gap_positions(&self, p_prev: u64) -> DoubleGapReport {
        let target = 2 * p_prev;
        let mut positions = Vec::new();
        for (i, &g) in self.gaps.iter().enumerate() {
            if u64::from(g) == target {
                positions.push(i as u64);
            }
        }
        let phi = self.gaps.len() as u64;
        let mut symmetric_pair = None;
        'outer: for &a in &positions {
            for &b in &positions {
                // 0-based mirror of index i is phi - 2 - i
                if a != b && a + b == phi - 2 {
                    symmetric_pair = Some((a.min(b), a.max(b)));
                    break 'outer;
                }
            }
        }
        DoubleGapReport {
            gap: target,
            positions,
            symmetric_pair,
        }
    }
}

fn checked_gap(acc: u64) -> Result<u32> {
    u32::try_from(acc).map_err(|_| Error::Overflow(format!("merged gap {acc} exceeds u32")))
}

pub(crate) fn next_prime_u64(p: u64) -> u64 {
    let mut c = p + 1;
    if c <= 2 {
        return 2;
    }
    if c % 2 == 0 {
        c += 1;
    }
    while !is_prime_u64(c) {
        c += 2;
    }
    c
}

/// One closure in a [`ClosurePlan`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosurePosition {
    /// Index into the `q`-fold concatenation of the gap that ends at the
    /// removed candidate; the merge joins this gap with the next one.
    pub gap_index: u64,
    /// The removed candidate value `q * gamma`.
    pub candidate: u64,
}

/// The full set of closures performed when extending `G(N)` by a prime
/// `q` with `q` not dividing `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosurePlan {
    base_modulus: u64,
    prime: u64,
    positions: Vec<ClosurePosition>,
    wrap_flag: bool,
}

impl ClosurePlan {
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn positions(&self) -> &[ClosurePosition] {
        &self.positions
    }

    /// Whether the final inter-closure step wraps past the cycle end back to
    /// the first closure (it always does: the step is `q * 2`).
    pub fn wrap_flag(&self) -> bool {
        self.wrap_flag
    }

    /// Distances between consecutive closure candidates, the wrap included;
    /// these equal `q` times the source gaps.
    pub fn distances(&self) -> Vec<u64> {
        let qn = self.base_modulus * self.prime;
        let mut out = Vec::with_capacity(self.positions.len());
        for pair in self.positions.windows(2) {
            out.push(pair[1].candidate - pair[0].candidate);
        }
        if let (Some(first), Some(last)) = (self.positions.first(), self.positions.last()) {
            out.push(qn + first.candidate - last.candidate);
        }
        out
    }

    /// Applies the plan to the `q`-fold concatenation of `base`, which must
    /// reproduce `base.extend_by_prime(q)` exactly.
    pub fn apply(&self, base: &GapCycle) -> Result<GapCycle> {
        if base.modulus() != self.base_modulus {
            return Err(Error::invalid(format!(
                "plan built over {} applied to cycle over {}",
                self.base_modulus,
                base.modulus()
            )));
        }
        let q = self.prime;
        let mut gaps = Vec::new();
        let mut acc = 0u64;
        let mut next_closure = 0usize;
        let mut index = 0u64;
        for _ in 0..q {
            for &g in base.gaps() {
                acc += u64::from(g);
                let closed = next_closure < self.positions.len()
                    && self.positions[next_closure].gap_index == index;
                if closed {
                    next_closure += 1;
                } else {
                    gaps.push(checked_gap(acc)?);
                    acc = 0;
                }
                index += 1;
            }
        }
        Ok(GapCycle::from_trusted(self.base_modulus * q, gaps))
    }
}

/// Outcome of [`GapCycle::structure_report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub length_is_totient: bool,
    pub sum_is_modulus: bool,
    pub trailing_two: bool,
    pub symmetric: bool,
    pub first_gap_is_next_coprime: bool,
    /// `None` when the cycle is non-primorial or too short for the pattern.
    pub middle: Option<MiddleConstellation>,
}

impl StructureReport {
    pub fn all_hold(&self) -> bool {
        self.length_is_totient
            && self.sum_is_modulus
            && self.trailing_two
            && self.symmetric
            && self.first_gap_is_next_coprime
            && self.middle.map_or(true, |m| m.matches)
    }
}

/// Location of the power-of-two middle constellation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MiddleConstellation {
    /// Minimal `j` with `2^(j+1)` greater than the next prime.
    pub exponent: u32,
    /// 0-based index where `2^j` starts.
    pub start_index: u64,
    pub matches: bool,
}

/// Outcome of [`GapCycle::double_gap_positions`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleGapReport {
    pub gap: u64,
    pub positions: Vec<u64>,
    pub symmetric_pair: Option<(u64, u64)>,
}

impl DoubleGapReport {
    pub fn holds(&self) -> bool {
        self.positions.len() >= 2 && self.symmetric_pair.is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaps_of(p: u64) -> Vec<u32> {
        GapCycle::primorial(p).unwrap().gaps().to_vec()
    }

    #[test]
    fn seed_is_g2() {
        let seed = GapCycle::seed();
        assert_eq!(seed.modulus(), 2);
        assert_eq!(seed.gaps(), &[2]);
        assert_eq!(seed.next_prime().unwrap(), 3);
        seed.validate().unwrap();
    }

    #[test]
    fn worked_small_cycles() {
        assert_eq!(gaps_of(3), vec![4, 2]);
        assert_eq!(gaps_of(5), vec![6, 4, 2, 4, 2, 4, 6, 2]);
        let g7 = gaps_of(7);
        assert_eq!(
            g7,
            vec![
                10, 2, 4, 2, 4, 6, 2, 6, 4, 2, 4, 6, 6, 2, 6, 4, 2, 6, 4, 6, 8, 4, 2, 4, 2, 4, 8,
                6, 4, 6, 2, 4, 6, 2, 6, 6, 4, 2, 4, 6, 2, 6, 4, 2, 4, 2, 10, 2
            ]
        );
        assert_eq!(g7.len(), 48);
        assert_eq!(g7.iter().map(|&g| u64::from(g)).sum::<u64>(), 210);
    }

    #[test]
    fn next_prime_reads_first_gap() {
        assert_eq!(GapCycle::primorial(3).unwrap().next_prime().unwrap(), 5);
        assert_eq!(GapCycle::primorial(5).unwrap().next_prime().unwrap(), 7);
        let general = GapCycle::for_modulus(12).unwrap();
        assert!(matches!(
            general.next_prime(),
            Err(Error::NonPrimorial(12))
        ));
    }

    #[test]
    fn concatenation_branch() {
        let g2 = GapCycle::seed();
        let g4 = g2.extend_by_prime(2).unwrap();
        assert_eq!(g4.gaps(), &[2, 2]);
        assert_eq!(g4.modulus(), 4);
        let g6 = GapCycle::for_modulus(6).unwrap();
        let g12 = g6.extend_by_prime(2).unwrap();
        assert_eq!(g12.gaps(), &[4, 2, 4, 2]);
    }

    #[test]
    fn general_route_matches_primorial_route() {
        let g6 = GapCycle::for_modulus(6).unwrap();
        let g30 = g6.extend_by_prime(5).unwrap();
        assert_eq!(g30.gaps(), GapCycle::primorial(5).unwrap().gaps());
        // introduce factors out of order: 2, 5, 3
        let g10 = GapCycle::seed().extend_by_prime(5).unwrap();
        let g30b = g10.extend_by_prime(3).unwrap();
        assert_eq!(g30b.gaps(), g30.gaps());
    }

    #[test]
    fn extend_rejects_composite() {
        let g6 = GapCycle::for_modulus(6).unwrap();
        assert!(matches!(g6.extend_by_prime(9), Err(Error::NotPrime(9))));
    }

    #[test]
    fn plan_positions_and_distances() {
        let g3 = GapCycle::primorial(3).unwrap();
        let plan = g3.closure_plan(5).unwrap();
        assert_eq!(plan.positions().len(), 2);
        assert_eq!(plan.distances(), vec![20, 10]);
        assert!(plan.wrap_flag());
        let g5 = GapCycle::primorial(5).unwrap();
        let plan7 = g5.closure_plan(7).unwrap();
        assert_eq!(plan7.positions().len(), 8);
        assert_eq!(plan7.distances(), vec![42, 28, 14, 28, 14, 28, 42, 14]);
        // first inter-closure distance removes q^2: q*(q-1)
        assert_eq!(plan7.distances()[0], 7 * 6);
        assert!(g5.closure_plan(5).is_err());
    }

    #[test]
    fn plan_apply_reproduces_extension() {
        for p in [3u64, 5, 7, 11] {
            let cycle = GapCycle::primorial(p).unwrap();
            let q = cycle.next_prime().unwrap();
            let plan = cycle.closure_plan(q).unwrap();
            assert_eq!(plan.apply(&cycle).unwrap(), cycle.extend_by_prime(q).unwrap());
        }
    }

    #[test]
    fn stream_matches_materialized() {
        let g13 = GapCycle::primorial(13).unwrap();
        let materialized = g13.extend_by_next_prime().unwrap();
        let mut streamed = Vec::new();
        let summary = g13
            .stream_extend(|g| {
                streamed.push(g);
                Ok(())
            })
            .unwrap();
        assert_eq!(streamed, materialized.gaps());
        assert_eq!(summary.emitted, 92_160);
        assert_eq!(summary.sum, 510_510);
    }

    #[test]
    fn stream_abort_propagates() {
        let g5 = GapCycle::primorial(5).unwrap();
        let mut seen = 0;
        let err = g5
            .stream_extend(|_| {
                seen += 1;
                if seen == 3 {
                    Err(Error::Aborted("enough".into()))
                } else {
                    Ok(())
                }
            })
            .unwrap_err();
        assert!(matches!(err, Error::Aborted(_)));
        assert_eq!(seen, 3);
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let g11 = GapCycle::primorial(11).unwrap();
        let one = g11.extend_by_prime_with_workers(13, 1).unwrap();
        for workers in [2usize, 3, 8] {
            let multi = g11.extend_by_prime_with_workers(13, workers).unwrap();
            assert_eq!(one, multi, "workers={workers}");
        }
    }

    #[test]
    fn structure_holds_through_13() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let cycle = GapCycle::primorial(p).unwrap();
            let report = cycle.structure_report();
            assert!(report.all_hold(), "p={p}: {report:?}");
        }
    }

    #[test]
    fn middle_constellation_location() {
        let g5 = GapCycle::primorial(5).unwrap();
        let mid = g5.middle_constellation().unwrap();
        assert_eq!(mid.exponent, 2);
        assert!(mid.matches);
        assert_eq!(&g5.gaps()[mid.start_index as usize..mid.start_index as usize + 5],
                   &[4, 2, 4, 2, 4]);
        let g7 = GapCycle::primorial(7).unwrap();
        let mid7 = g7.middle_constellation().unwrap();
        assert_eq!(mid7.exponent, 3);
        assert!(mid7.matches);
    }

    #[test]
    fn double_gaps_sit_symmetrically() {
        let g7 = GapCycle::primorial(7).unwrap();
        let report = g7.double_gap_positions(5);
        assert!(report.positions.len() >= 2);
        assert!(report.holds(), "{report:?}");
        let g5 = GapCycle::primorial(5).unwrap();
        assert!(g5.double_gap_positions(3).holds());
    }

    #[test]
    fn generators_are_prefix_sums() {
        let g3 = GapCycle::primorial(3).unwrap();
        assert_eq!(g3.generators(), vec![1, 5, 7]);
    }

    #[test]
    fn from_parts_validates() {
        assert!(GapCycle::from_parts(6, vec![4, 2]).is_ok());
        assert!(GapCycle::from_parts(6, vec![2, 4]).is_err()); // wrong rotation
        assert!(GapCycle::from_parts(6, vec![4, 4]).is_err()); // wrong sum
    }
}
