//! Exact counting of gaps, constellations, and driving terms in a cycle.
//!
//! All counting is cyclic (windows wrap past the cycle end) and overlapping
//! instances are counted. A driving term for the gap `g` of length `j` is any
//! window of `j` consecutive gaps summing to `g`; the gap itself is the
//! `j = 1` case. Counts are exact integers of arbitrary precision in the
//! public table; accumulation uses machine words, which cannot overflow
//! because every count is bounded by the cycle length.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;

use crate::cycle::GapCycle;
use crate::{polignac, Error, Result};

/// A nonempty finite sequence of gap values; a gap is a constellation of
/// length 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Constellation {
    gaps: Vec<u32>,
}

impl Constellation {
    pub fn new(gaps: Vec<u32>) -> Result<Self> {
        if gaps.is_empty() {
            return Err(Error::invalid("constellation must be nonempty"));
        }
        if gaps.iter().any(|&g| g == 0) {
            return Err(Error::invalid("constellation gaps must be positive"));
        }
        Ok(Constellation { gaps })
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn sum(&self) -> u64 {
        self.gaps.iter().map(|&g| u64::from(g)).sum()
    }

    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl std::fmt::Display for Constellation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.gaps.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Sparse exact table of driving-term counts `n_{g,j}` for one cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusTable {
    modulus: u64,
    g_max: u64,
    j_max: usize,
    counts: BTreeMap<(u64, usize), BigUint>,
    n2: BigUint,
}

impl CensusTable {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn g_max(&self) -> u64 {
        self.g_max
    }

    pub fn j_max(&self) -> usize {
        self.j_max
    }

    /// `n_{g,j}`: driving terms of sum `g` and length `j`.
    pub fn count(&self, g: u64, j: usize) -> BigUint {
        self.counts.get(&(g, j)).cloned().unwrap_or_else(BigUint::zero)
    }

    /// `N_2`, the twin-gap count used to normalize ratios.
    pub fn n2(&self) -> &BigUint {
        &self.n2
    }

    /// Total driving terms for `g` across all tabulated lengths.
    pub fn row_total(&self, g: u64) -> BigUint {
        (1..=self.j_max).map(|j| self.count(g, j)).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u64, usize), &BigUint)> {
        self.counts.iter()
    }

    fn from_grid(modulus: u64, g_max: u64, j_max: usize, grid: &[u64]) -> Self {
        let mut counts = BTreeMap::new();
        for g in 1..=g_max {
            for j in 1..=j_max {
                let c = grid[(g as usize) * j_max + (j - 1)];
                if c > 0 {
                    counts.insert((g, j), BigUint::from(c));
                }
            }
        }
        let n2 = counts.get(&(2, 1)).cloned().unwrap_or_else(BigUint::zero);
        CensusTable {
            modulus,
            g_max,
            j_max,
            counts,
            n2,
        }
    }

    /// Table as CSV with one row per even gap: the counts by length, then
    /// the ratio sum and the asymptotic ratio, each as an exact fraction and
    /// a 12-significant-digit decimal.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("g");
        for j in 1..=self.j_max {
            out.push_str(&format!(",n_{j}"));
        }
        out.push_str(",sum_ratio,sum_ratio_dec,asymptote,asymptote_dec\n");
        for g in (2..=self.g_max).step_by(2) {
            out.push_str(&g.to_string());
            for j in 1..=self.j_max {
                out.push_str(&format!(",{}", self.count(g, j)));
            }
            let sum = BigRational::new(self.row_total(g).into(), self.n2.clone().into());
            let asym = polignac::hl_asymptotic_ratio(g).expect("even g");
            out.push_str(&format!(
                ",{}/{},{},{}/{},{}\n",
                sum.numer(),
                sum.denom(),
                format_decimal(&sum, 12),
                asym.numer(),
                asym.denom(),
                format_decimal(&asym, 12),
            ));
        }
        out
    }

    /// Table as JSON, exact rationals as `{"num": ..., "den": ...}`.
    pub fn to_json(&self) -> String {
        use serde_json::{json, Value};
        let rows: Vec<Value> = (2..=self.g_max)
            .step_by(2)
            .map(|g| {
                let counts: Vec<String> =
                    (1..=self.j_max).map(|j| self.count(g, j).to_string()).collect();
                let sum = BigRational::new(self.row_total(g).into(), self.n2.clone().into());
                let asym = polignac::hl_asymptotic_ratio(g).expect("even g");
                json!({
                    "g": g,
                    "counts": counts,
                    "sum_ratio": {"num": sum.numer().to_string(), "den": sum.denom().to_string()},
                    "asymptote": {"num": asym.numer().to_string(), "den": asym.denom().to_string()},
                })
            })
            .collect();
        serde_json::to_string_pretty(&json!({
            "modulus": self.modulus.to_string(),
            "n2": self.n2.to_string(),
            "g_max": self.g_max,
            "j_max": self.j_max,
            "rows": rows,
        }))
        .expect("json")
    }
}

/// Renders a rational as a plain decimal with `sig` significant digits,
/// trailing zeros trimmed.
pub fn format_decimal(x: &BigRational, sig: usize) -> String {
    use num_traits::ToPrimitive;
    let v = x.to_f64().unwrap_or(f64::NAN);
    if !v.is_finite() {
        return "nan".into();
    }
    let s = format!("{v:.*e}", sig.saturating_sub(1));
    // expand scientific notation back to plain decimal
    let (mantissa, exp) = s.split_once('e').expect("exp format");
    let exp: i32 = exp.parse().expect("exponent");
    let neg = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let point = 1 + exp; // digits before the decimal point
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if point <= 0 {
        out.push_str("0.");
        for _ in 0..-point {
            out.push('0');
        }
        out.push_str(&digits);
    } else if (point as usize) >= digits.len() {
        out.push_str(&digits);
        for _ in 0..(point as usize - digits.len()) {
            out.push('0');
        }
    } else {
        out.push_str(&digits[..point as usize]);
        out.push('.');
        out.push_str(&digits[point as usize..]);
    }
    if out.contains('.') {
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    out
}

/// Exact rational vector `w_{g,j} = n_{g,j} / N_2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioVector {
    pub g: u64,
    pub basis_modulus: u64,
    pub entries: Vec<BigRational>,
}

impl RatioVector {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Sum of all entries; the asymptotic first-coordinate limit.
    pub fn sum(&self) -> BigRational {
        self.entries.iter().fold(BigRational::zero(), |a, b| a + b)
    }
}

/// Counts cyclic occurrences of `s` as consecutive gaps, overlaps included.
/// Windows longer than the cycle compare against its periodic extension.
pub fn count_constellation(cycle: &GapCycle, s: &Constellation) -> BigUint {
    let gaps = cycle.gaps();
    let phi = gaps.len();
    let target = s.gaps();
    let mut count = 0u64;
    'outer: for start in 0..phi {
        for (offset, &want) in target.iter().enumerate() {
            if gaps[(start + offset) % phi] != want {
                continue 'outer;
            }
        }
        count += 1;
    }
    BigUint::from(count)
}

fn check_census_args(phi: u64, g_max: u64, j_max: usize) -> Result<()> {
    if g_max < 1 || j_max < 1 {
        return Err(Error::invalid("census needs g_max >= 1 and j_max >= 1"));
    }
    if j_max as u64 > phi {
        return Err(Error::invalid(format!(
            "j_max {j_max} exceeds cycle length {phi}"
        )));
    }
    Ok(())
}

/// Single pass over windows starting in `[lo, hi)`, forward sums, cyclic.
fn accumulate_starts(gaps: &[u32], lo: u64, hi: u64, g_max: u64, j_max: usize, grid: &mut [u64]) {
    let phi = gaps.len();
    for start in lo..hi {
        let mut idx = start as usize;
        let mut total = 0u64;
        for j in 1..=j_max {
            total += u64::from(gaps[idx]);
            if total > g_max {
                break;
            }
            grid[(total as usize) * j_max + (j - 1)] += 1;
            idx += 1;
            if idx == phi {
                idx = 0;
            }
        }
    }
}

/// Exact census of driving terms `n_{g,j}` for `g <= g_max`, `j <= j_max`.
pub fn driving_term_census(cycle: &GapCycle, g_max: u64, j_max: usize) -> Result<CensusTable> {
    driving_term_census_with_workers(cycle, g_max, j_max, 1)
}

/// Sharded census: window starts are split across workers and the shard
/// grids merged in shard order, so the table is identical for any worker
/// count.
pub fn driving_term_census_with_workers(
    cycle: &GapCycle,
    g_max: u64,
    j_max: usize,
    workers: usize,
) -> Result<CensusTable> {
    let phi = cycle.len();
    check_census_args(phi, g_max, j_max)?;
    let gaps = cycle.gaps();
    let cells = (g_max as usize + 1) * j_max;
    let workers = workers.clamp(1, phi.max(1) as usize);
    let mut grid = vec![0u64; cells];
    if workers == 1 {
        accumulate_starts(gaps, 0, phi, g_max, j_max, &mut grid);
    } else {
        let mut bounds = Vec::with_capacity(workers + 1);
        for w in 0..=workers {
            bounds.push(phi * w as u64 / workers as u64);
        }
        let shards: Vec<Vec<u64>> = std::thread::scope(|scope| {
            let handles: Vec<_> = bounds
                .windows(2)
                .map(|range| {
                    let (lo, hi) = (range[0], range[1]);
                    scope.spawn(move || {
                        let mut local = vec![0u64; cells];
                        accumulate_starts(gaps, lo, hi, g_max, j_max, &mut local);
                        local
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for shard in shards {
            for (cell, add) in grid.iter_mut().zip(shard) {
                *cell += add;
            }
        }
    }
    Ok(CensusTable::from_grid(cycle.modulus(), g_max, j_max, &grid))
}

/// Push-based census for streamed cycles: feed gaps in order, then
/// [`finish`](CensusBuilder::finish). Windows are owned by their start
/// index; the cyclic wrap is handled by replaying the first `j_max - 1`
/// gaps.
pub struct CensusBuilder {
    modulus: u64,
    expected_len: u64,
    g_max: u64,
    j_max: usize,
    grid: Vec<u64>,
    ring: Vec<u32>,
    head: Vec<u32>,
    pushed: u64,
}

impl CensusBuilder {
    pub fn new(modulus: u64, expected_len: u64, g_max: u64, j_max: usize) -> Result<Self> {
        check_census_args(expected_len, g_max, j_max)?;
        Ok(CensusBuilder {
            modulus,
            expected_len,
            g_max,
            j_max,
            grid: vec![0u64; (g_max as usize + 1) * j_max],
            ring: vec![0u32; j_max],
            head: Vec::with_capacity(j_max.saturating_sub(1)),
            pushed: 0,
        })
    }

    pub fn push(&mut self, gap: u32) {
        if self.head.len() + 1 < self.j_max {
            self.head.push(gap);
        }
        let e = self.pushed;
        self.ring[(e % self.j_max as u64) as usize] = gap;
        self.pushed += 1;
        self.count_windows_ending_at(e, 1);
    }

    /// Counts windows ending at stream index `e` with length >= `min_len`.
    fn count_windows_ending_at(&mut self, e: u64, min_len: usize) {
        let longest = self.j_max.min(e as usize + 1);
        let mut total = 0u64;
        for len in 1..=longest {
            let idx = ((e - (len as u64 - 1)) % self.j_max as u64) as usize;
            total += u64::from(self.ring[idx]);
            if total > self.g_max {
                return;
            }
            if len >= min_len {
                self.grid[(total as usize) * self.j_max + (len - 1)] += 1;
            }
        }
    }

    pub fn finish(mut self) -> Result<CensusTable> {
        if self.pushed != self.expected_len {
            return Err(Error::invalid(format!(
                "census stream ended after {} gaps, expected {}",
                self.pushed, self.expected_len
            )));
        }
        // Replay the head so windows that wrap are counted once, by their
        // start index (< expected_len).
        let head = std::mem::take(&mut self.head);
        for (t, gap) in head.into_iter().enumerate() {
            let e = self.pushed;
            self.ring[(e % self.j_max as u64) as usize] = gap;
            self.pushed += 1;
            self.count_windows_ending_at(e, t + 2);
        }
        Ok(CensusTable::from_grid(
            self.modulus,
            self.g_max,
            self.j_max,
            &self.grid,
        ))
    }
}

/// Census of `G(qN)` streamed from `G(N)` without materializing the larger
/// cycle.
pub fn driving_term_census_streamed(
    base: &GapCycle,
    q: u64,
    g_max: u64,
    j_max: usize,
) -> Result<CensusTable> {
    let new_modulus = base
        .modulus()
        .checked_mul(q)
        .ok_or_else(|| Error::Overflow(format!("{} * {q} exceeds u64", base.modulus())))?;
    let new_len = if base.modulus() % q == 0 {
        base.len() * q
    } else {
        base.len() * (q - 1)
    };
    let mut builder = CensusBuilder::new(new_modulus, new_len, g_max, j_max)?;
    base.stream_extend_by(q, |gap| {
        builder.push(gap);
        Ok(())
    })?;
    builder.finish()
}

/// Exact ratio vector `w_{g,1..J}` from a census table.
pub fn ratio_vector(table: &CensusTable, g: u64, j: usize) -> Result<RatioVector> {
    if g > table.g_max() || j > table.j_max() {
        return Err(Error::invalid(format!(
            "table covers g <= {}, j <= {}; asked for g={g}, j={j}",
            table.g_max(),
            table.j_max()
        )));
    }
    if table.n2().is_zero() {
        return Err(Error::invalid(
            "N_2 = 0; ratios are undefined for this cycle",
        ));
    }
    let entries = (1..=j)
        .map(|jj| BigRational::new(table.count(g, jj).into(), table.n2().clone().into()))
        .collect();
    Ok(RatioVector {
        g,
        basis_modulus: table.modulus(),
        entries,
    })
}

/// Counts all cyclic windows (of any length, wrapping the cycle as many
/// times as needed) whose gap sum is exactly `g`.
///
/// From each start the running sum is strictly increasing, so each start
/// contributes at most one window; this totals the driving terms for `g`
/// even when they are longer than the cycle itself.
pub fn total_driving_terms(cycle: &GapCycle, g: u64) -> u64 {
    let gaps = cycle.gaps();
    let phi = gaps.len();
    let mut count = 0u64;
    for start in 0..phi {
        let mut total = 0u64;
        let mut idx = start;
        while total < g {
            total += u64::from(gaps[idx]);
            idx += 1;
            if idx == phi {
                idx = 0;
            }
        }
        if total == g {
            count += 1;
        }
    }
    count
}

/// All distinct windows of length `<= max_len` and sum `<= max_sum`, with
/// their cyclic occurrence counts.
pub fn constellation_census(
    cycle: &GapCycle,
    max_len: usize,
    max_sum: u64,
) -> BTreeMap<Vec<u32>, u64> {
    let gaps = cycle.gaps();
    let phi = gaps.len();
    let mut out: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for start in 0..phi {
        let mut window = Vec::with_capacity(max_len);
        let mut total = 0u64;
        for offset in 0..max_len.min(phi) {
            let g = gaps[(start + offset) % phi];
            total += u64::from(g);
            if total > max_sum {
                break;
            }
            window.push(g);
            *out.entry(window.clone()).or_insert(0) += 1;
        }
    }
    out
}

/// Counts pairs (window of length `|s| + 1`, interior closure) whose merge
/// yields exactly `s`. These are the length-`j+1` driving terms feeding the
/// population of the constellation `s`.
pub fn constellation_driving_terms(cycle: &GapCycle, s: &Constellation) -> u64 {
    let gaps = cycle.gaps();
    let phi = gaps.len();
    let target = s.gaps();
    let wlen = target.len() + 1;
    if wlen > phi {
        return 0;
    }
    let sum = s.sum();
    let mut count = 0u64;
    let mut window = vec![0u32; wlen];
    for start in 0..phi {
        let mut total = 0u64;
        for (offset, slot) in window.iter_mut().enumerate() {
            let g = gaps[(start + offset) % phi];
            *slot = g;
            total += u64::from(g);
        }
        if total != sum {
            continue;
        }
        for merge_at in 0..wlen - 1 {
            let merged_matches = (0..target.len()).all(|i| {
                let want = target[i];
                if i < merge_at {
                    window[i] == want
                } else if i == merge_at {
                    window[i] + window[i + 1] == want
                } else {
                    window[i + 1] == want
                }
            });
            if merged_matches {
                count += 1;
            }
        }
    }
    count
}

/// Spike and monotone-run report for a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremeReport {
    /// Largest gap adjacent (cyclically) to a gap 2.
    pub spike: u32,
    /// Position of a gap 2 realizing the spike.
    pub spike_position: u64,
    pub longest_increasing_run: u64,
    pub longest_decreasing_run: u64,
    /// First start of a strictly increasing run of at least the requested
    /// length, if any.
    pub increasing_run_at: Option<u64>,
    pub requested_run: u64,
}

/// Finds the largest gap adjacent to a 2 and strictly monotone runs of
/// length at least `k`.
pub fn extreme_constellations(cycle: &GapCycle, k: u64) -> ExtremeReport {
    let gaps = cycle.gaps();
    let phi = gaps.len();
    let mut spike = 0u32;
    let mut spike_position = 0u64;
    for i in 0..phi {
        let next = gaps[(i + 1) % phi];
        if gaps[i] == 2 && next > spike {
            spike = next;
            spike_position = i as u64;
        }
        if next == 2 && gaps[i] > spike {
            spike = gaps[i];
            spike_position = ((i + 1) % phi) as u64;
        }
    }
    // strictly monotone runs, scanned over one wrap
    let mut longest_inc = 1u64;
    let mut longest_dec = 1u64;
    let mut inc_at = None;
    let mut run_inc = 1u64;
    let mut run_dec = 1u64;
    let limit = if phi > 1 { 2 * phi - 1 } else { phi };
    for i in 1..limit {
        let prev = gaps[(i - 1) % phi];
        let cur = gaps[i % phi];
        if cur > prev {
            run_inc += 1;
        } else {
            run_inc = 1;
        }
        if cur < prev {
            run_dec += 1;
        } else {
            run_dec = 1;
        }
        let run_inc_c = run_inc.min(phi as u64);
        if run_inc_c > longest_inc {
            longest_inc = run_inc_c;
        }
        if run_inc_c >= k && inc_at.is_none() {
            inc_at = Some(((i % phi) as u64 + phi as u64 + 1 - run_inc_c) % phi as u64);
        }
        longest_dec = longest_dec.max(run_dec.min(phi as u64));
    }
    ExtremeReport {
        spike,
        spike_position,
        longest_increasing_run: longest_inc,
        longest_decreasing_run: longest_dec,
        increasing_run_at: inc_at,
        requested_run: k,
    }
}

/// The spike of this cycle and of the next sieve stage, computed by
/// streaming so the larger cycle is never materialized. The spike grows
/// strictly at every stage.
pub fn spike_growth(cycle: &GapCycle) -> Result<(u32, u32)> {
    let here = extreme_constellations(cycle, 2).spike;
    let mut first: Option<u32> = None;
    let mut prev: Option<u32> = None;
    let mut next_spike = 0u32;
    let mut last = 0u32;
    cycle.stream_extend(|g| {
        if first.is_none() {
            first = Some(g);
        }
        if let Some(p) = prev {
            if p == 2 && g > next_spike {
                next_spike = g;
            }
            if g == 2 && p > next_spike {
                next_spike = p;
            }
        }
        prev = Some(g);
        last = g;
        Ok(())
    })?;
    if let (Some(f), true) = (first, last == 2) {
        if f > next_spike {
            next_spike = f;
        }
    }
    Ok((here, next_spike))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::GapCycle;

    fn c(v: &[u32]) -> Constellation {
        Constellation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn initial_conditions_in_g5() {
        let g5 = GapCycle::primorial(5).unwrap();
        let counts = [
            (vec![2u32], 3u64),
            (vec![4], 3),
            (vec![6], 2),
            (vec![2, 4], 2),
            (vec![4, 2], 2),
            (vec![6, 2], 1),
            (vec![2, 4, 2], 1),
            (vec![4, 2, 4], 2),
            (vec![6, 2, 6], 1),
            (vec![4, 2, 4, 2, 4], 1),
        ];
        for (s, want) in counts {
            assert_eq!(
                count_constellation(&g5, &c(&s)),
                BigUint::from(want),
                "{s:?}"
            );
        }
    }

    #[test]
    fn census_matches_direct_counts() {
        let g7 = GapCycle::primorial(7).unwrap();
        let table = driving_term_census(&g7, 32, 9).unwrap();
        assert_eq!(table.count(6, 1), BigUint::from(14u32));
        assert_eq!(table.count(2, 1), BigUint::from(15u32));
        assert_eq!(table.n2(), &BigUint::from(15u32));
        // every cell equals the naive rescan
        for g in (2..=32u64).step_by(2) {
            for j in 1..=9usize {
                let mut direct = 0u64;
                let phi = g7.len() as usize;
                for start in 0..phi {
                    let total: u64 = (0..j)
                        .map(|o| u64::from(g7.gaps()[(start + o) % phi]))
                        .sum();
                    if total == g {
                        direct += 1;
                    }
                }
                assert_eq!(table.count(g, j), BigUint::from(direct), "g={g} j={j}");
            }
        }
    }

    #[test]
    fn census_rejects_bad_args() {
        let g3 = GapCycle::primorial(3).unwrap();
        assert!(driving_term_census(&g3, 10, 3).is_err()); // j_max > phi
        assert!(driving_term_census(&g3, 0, 1).is_err());
    }

    #[test]
    fn sharded_census_is_deterministic() {
        let g11 = GapCycle::primorial(11).unwrap();
        let one = driving_term_census_with_workers(&g11, 40, 6, 1).unwrap();
        for workers in [2usize, 3, 8] {
            let multi = driving_term_census_with_workers(&g11, 40, 6, workers).unwrap();
            assert_eq!(one, multi);
            assert_eq!(one.to_csv(), multi.to_csv());
        }
    }

    #[test]
    fn streamed_census_matches_materialized() {
        let g11 = GapCycle::primorial(11).unwrap();
        let q = g11.next_prime().unwrap();
        let materialized =
            driving_term_census(&g11.extend_by_prime(q).unwrap(), 32, 9).unwrap();
        let streamed = driving_term_census_streamed(&g11, q, 32, 9).unwrap();
        assert_eq!(materialized, streamed);
    }

    #[test]
    fn ratio_vectors_from_g5() {
        let g5 = GapCycle::primorial(5).unwrap();
        let table = driving_term_census(&g5, 10, 3).unwrap();
        let w6 = ratio_vector(&table, 6, 3).unwrap();
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(w6.entries, vec![r(2, 3), r(4, 3), r(0, 1)]);
        let w8 = ratio_vector(&table, 8, 3).unwrap();
        assert_eq!(w8.entries, vec![r(0, 1), r(2, 3), r(1, 3)]);
        let w2 = ratio_vector(&table, 2, 1).unwrap();
        assert_eq!(w2.entries, vec![r(1, 1)]);
    }

    #[test]
    fn overlapping_windows_counted() {
        let g5 = GapCycle::primorial(5).unwrap();
        // the two occurrences of (4,2,4) overlap on a 4
        assert_eq!(count_constellation(&g5, &c(&[4, 2, 4])), BigUint::from(2u32));
    }

    #[test]
    fn multiwrap_driving_totals() {
        // windows longer than the cycle: driving terms for 48 in G(6)
        let g3 = GapCycle::primorial(3).unwrap();
        assert_eq!(total_driving_terms(&g3, 48), 2);
        assert_eq!(total_driving_terms(&g3, 6), 2);
        let g5 = GapCycle::primorial(5).unwrap();
        assert_eq!(total_driving_terms(&g5, 10), 4);
    }

    #[test]
    fn generalized_driving_terms_merge_to_target() {
        let g5 = GapCycle::primorial(5).unwrap();
        // no window of length 3 in G(5#) merges to (4,2)
        assert_eq!(constellation_driving_terms(&g5, &c(&[4, 2])), 0);
        // length-2 windows merging to the single gap 6: (2,4) and (4,2), two each
        assert_eq!(constellation_driving_terms(&g5, &c(&[6])), 4);
    }

    #[test]
    fn spike_and_runs() {
        let g5 = GapCycle::primorial(5).unwrap();
        let report = extreme_constellations(&g5, 2);
        assert_eq!(report.spike, 6);
        let (here, next) = spike_growth(&g5).unwrap();
        assert_eq!(here, 6);
        assert!(next > here);
        let g7 = GapCycle::primorial(7).unwrap();
        let report7 = extreme_constellations(&g7, 3);
        assert!(report7.longest_increasing_run >= 3);
        assert!(report7.increasing_run_at.is_some());
        // middle right half (2,4,8) is strictly increasing
        assert_eq!(report7.spike, 10);
    }

    #[test]
    fn decimal_rendering() {
        let r = BigRational::new(36.into(), 35.into());
        assert_eq!(format_decimal(&r, 6), "1.02857");
        let two = BigRational::new(2.into(), 1.into());
        assert_eq!(format_decimal(&two, 12), "2");
        let third = BigRational::new(8.into(), 3.into());
        assert_eq!(format_decimal(&third, 5), "2.6667");
    }
}
