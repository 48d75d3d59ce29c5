//! The discrete population model for a gap and its driving terms.
//!
//! Across one sieve stage the ratio vector `w_g` (counts normalized by the
//! twin count `N_2`) is multiplied by the upper-bidiagonal transfer matrix
//! `M_J(p)` with diagonal `a_j(p) = (p-j-1)/(p-2)` (and `a_1 = 1`) and
//! superdiagonal `b_j(p) = j/(p-2)`. The eigenvalues depend on `p` but the
//! eigenvectors do not: `M_J(p) = R * Lambda(p) * L` where `R` and `L` hold
//! binomial coefficients and `L * R = I`. Iterating the model therefore
//! reduces to the eigenvalue products `a_j^k` over the primes of the run.

use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::census::RatioVector;
use crate::dd::Dd;
use crate::{sieve, Error, Result};

/// Dense matrix of exact rationals; small dimensions only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = RationalMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let cur = out.get(r, c) + a * b;
                        out.set(r, c, cur);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self.get(r, c) * &v[c])
                    .fold(BigRational::zero(), |a, b| a + b)
            })
            .collect()
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k.min(n - k) {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// The `J x J` upper-bidiagonal transfer matrix for one sieve stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferMatrix {
    dim: usize,
    prime: u64,
}

/// Builds `M_J(p)`. Fails for `p = 2` (the normalizer `p - 2` vanishes);
/// stages with `p <= J + 1` are allowed but some diagonal entries are zero
/// or negative — see [`TransferMatrix::degenerate_indices`].
pub fn build_transfer_matrix(j: usize, p: u64) -> Result<TransferMatrix> {
    if j < 1 {
        return Err(Error::invalid("dimension must be at least 1"));
    }
    if p <= 2 {
        return Err(Error::invalid(format!(
            "transfer matrix undefined for p = {p}: normalizer p - 2 vanishes"
        )));
    }
    if !sieve::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(TransferMatrix { dim: j, prime: p })
}

impl TransferMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// Diagonal entry `a_j(p)`; `a_1 = 1`.
    pub fn diagonal(&self, j: usize) -> BigRational {
        assert!((1..=self.dim).contains(&j));
        if j == 1 {
            BigRational::one()
        } else {
            rational(self.prime as i64 - j as i64 - 1, self.prime as i64 - 2)
        }
    }

    /// Superdiagonal entry `b_j(p) = j / (p - 2)`.
    pub fn superdiagonal(&self, j: usize) -> BigRational {
        assert!((1..self.dim).contains(&j));
        rational(j as i64, self.prime as i64 - 2)
    }

    /// Dimensions `j` whose diagonal entry is zero or negative
    /// (`p <= j + 1`).
    pub fn degenerate_indices(&self) -> Vec<usize> {
        (2..=self.dim)
            .filter(|&j| self.prime <= j as u64 + 1)
            .collect()
    }

    pub fn to_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.dim, self.dim);
        for j in 1..=self.dim {
            m.set(j - 1, j - 1, self.diagonal(j));
            if j < self.dim {
                m.set(j - 1, j, self.superdiagonal(j));
            }
        }
        m
    }

    pub fn apply(&self, v: &[BigRational]) -> Vec<BigRational> {
        self.to_matrix().mul_vec(v)
    }
}

/// The fixed eigenvector matrices of `M_J`: binomial coefficients,
/// alternating in sign for `R`, with `L * R = I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenStructure {
    dim: usize,
}

/// Builds the eigenstructure for dimension `j`.
pub fn eigenstructure(j: usize) -> Result<EigenStructure> {
    if j < 1 {
        return Err(Error::invalid("dimension must be at least 1"));
    }
    Ok(EigenStructure { dim: j })
}

impl EigenStructure {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Right eigenvectors: `R_ij = (-1)^(i+j) C(j-1, i-1)` for `i <= j`.
    pub fn right(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.dim, self.dim);
        for i in 1..=self.dim {
            for j in i..=self.dim {
                let mut v = binomial(j - 1, i - 1);
                if (i + j) % 2 == 1 {
                    v = -v;
                }
                m.set(i - 1, j - 1, BigRational::from_integer(v));
            }
        }
        m
    }

    /// Left eigenvectors: `L_ij = C(j-1, i-1)` for `i <= j`.
    pub fn left(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.dim, self.dim);
        for i in 1..=self.dim {
            for j in i..=self.dim {
                m.set(i - 1, j - 1, BigRational::from_integer(binomial(j - 1, i - 1)));
            }
        }
        m
    }

    /// Diagonal eigenvalue matrix `Lambda(p)`.
    pub fn lambda(&self, p: u64) -> Result<RationalMatrix> {
        let t = build_transfer_matrix(self.dim, p)?;
        let mut m = RationalMatrix::zeros(self.dim, self.dim);
        for j in 1..=self.dim {
            m.set(j - 1, j - 1, t.diagonal(j));
        }
        Ok(m)
    }

    /// Row `j` of `L` applied to a vector: `sum_i C(i-1, j-1) w_i`.
    pub fn left_action(&self, j: usize, w: &[BigRational]) -> BigRational {
        w.iter()
            .enumerate()
            .map(|(idx, v)| BigRational::from_integer(binomial(idx, j - 1)) * v)
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Checks `L * R = I` and `R * Lambda(p) * L = M_J(p)` for each prime.
    pub fn verify(&self, primes: &[u64]) -> Result<bool> {
        let r = self.right();
        let l = self.left();
        if l.mul(&r) != RationalMatrix::identity(self.dim) {
            return Ok(false);
        }
        for &p in primes {
            let m = build_transfer_matrix(self.dim, p)?.to_matrix();
            if r.mul(&self.lambda(p)?).mul(&l) != m {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn primorial_checked(p: u64) -> Result<u64> {
    let mut out = 1u64;
    let mut q = 2u64;
    while q <= p {
        out = out
            .checked_mul(q)
            .ok_or_else(|| Error::Overflow(format!("{p}# exceeds u64")))?;
        q = sieve::next_prime_after(q);
    }
    Ok(out)
}

fn check_stage_args(w0: &RatioVector, p0: u64, pk: u64) -> Result<()> {
    if !sieve::is_prime(p0) {
        return Err(Error::NotPrime(p0));
    }
    if !sieve::is_prime(pk) {
        return Err(Error::NotPrime(pk));
    }
    if pk < p0 {
        return Err(Error::invalid(format!("pk = {pk} precedes p0 = {p0}")));
    }
    let expect = primorial_checked(p0)?;
    if w0.basis_modulus != expect {
        return Err(Error::invalid(format!(
            "ratio vector was taken at modulus {}, but p0 = {p0} implies {expect}",
            w0.basis_modulus
        )));
    }
    Ok(())
}

/// Evolves `w0` from stage `p0` to stage `pk` through the eigenstructure:
/// `R * (prod Lambda) * L * w0`, all rationals exact.
pub fn iterate_model(w0: &RatioVector, p0: u64, pk: u64) -> Result<RatioVector> {
    check_stage_args(w0, p0, pk)?;
    let dim = w0.entries.len();
    let eig = eigenstructure(dim)?;
    // coordinates in the eigenbasis
    let mut coords = eig.left().mul_vec(&w0.entries);
    for p in sieve::primes_in(p0 + 1, pk + 1)? {
        let t = build_transfer_matrix(dim, p)?;
        for (j, coord) in coords.iter_mut().enumerate() {
            *coord *= t.diagonal(j + 1);
        }
    }
    let entries = eig.right().mul_vec(&coords);
    Ok(RatioVector {
        g: w0.g,
        basis_modulus: primorial_checked(pk)?,
        entries,
    })
}

/// Evolves `w0` by multiplying the transfer matrices stage by stage; must
/// agree exactly with [`iterate_model`].
pub fn iterate_model_direct(w0: &RatioVector, p0: u64, pk: u64) -> Result<RatioVector> {
    check_stage_args(w0, p0, pk)?;
    let dim = w0.entries.len();
    let mut entries = w0.entries.clone();
    for p in sieve::primes_in(p0 + 1, pk + 1)? {
        entries = build_transfer_matrix(dim, p)?.apply(&entries);
    }
    Ok(RatioVector {
        g: w0.g,
        basis_modulus: primorial_checked(pk)?,
        entries,
    })
}

/// The asymptotic first-coordinate ratio: the sum of the initial ratios of
/// the gap and all its driving terms (`L_1 w0`).
pub fn asymptotic_ratio(w0: &RatioVector) -> BigRational {
    w0.sum()
}

/// Order in which the prime factors are folded into the float products.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AccumulationOrder {
    Ascending,
    Descending,
}

fn check_float_args(p0: u64, j_max: usize) -> Result<()> {
    if j_max < 2 {
        return Err(Error::invalid("eigenvalue products start at j = 2"));
    }
    // every factor (p - j - 1)/(p - 2) must stay positive in unsigned space
    if p0 < j_max as u64 + 1 {
        return Err(Error::invalid(format!(
            "float products need p0 >= j_max + 1 = {}, got {p0}; use the exact mode",
            j_max + 1
        )));
    }
    Ok(())
}

/// Eigenvalue products `a_j^k = prod (p - j - 1)/(p - 2)` over the primes
/// `p0 < p <= pk`, for `j = 2..=j_max`.
#[derive(Debug, Clone)]
pub struct EigenvalueProducts {
    pub p0: u64,
    pub pk: u64,
    pub j_max: usize,
    /// Exact values, present in exact mode; index 0 is `j = 2`.
    pub exact: Option<Vec<BigRational>>,
    /// Double-double values, present in float mode; index 0 is `j = 2`.
    pub float: Option<Vec<Dd>>,
    pub primes_used: u64,
}

impl EigenvalueProducts {
    /// `a_j^k` as `f64`, from whichever representation exists.
    pub fn value_f64(&self, j: usize) -> f64 {
        use num_traits::ToPrimitive;
        assert!((2..=self.j_max).contains(&j));
        if let Some(float) = &self.float {
            return float[j - 2].to_f64();
        }
        self.exact.as_ref().expect("one mode present")[j - 2]
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

/// Exact-rational eigenvalue products; practical for runs of a few thousand
/// stages.
pub fn eigenvalue_products_exact(p0: u64, pk: u64, j_max: usize) -> Result<EigenvalueProducts> {
    if j_max < 2 {
        return Err(Error::invalid("eigenvalue products start at j = 2"));
    }
    let mut values = vec![BigRational::one(); j_max - 1];
    let mut used = 0u64;
    for p in sieve::primes_in(p0 + 1, pk + 1)? {
        for (idx, v) in values.iter_mut().enumerate() {
            let j = idx as i64 + 2;
            *v *= rational(p as i64 - j - 1, p as i64 - 2);
        }
        used += 1;
    }
    Ok(EigenvalueProducts {
        p0,
        pk,
        j_max,
        exact: Some(values),
        float: None,
        primes_used: used,
    })
}

/// Compensated (double-double) eigenvalue products.
///
/// `Descending` materializes the prime list first and is meant for
/// cross-checking desk-scale runs; `Ascending` streams and scales to long
/// runs.
pub fn eigenvalue_products_float(
    p0: u64,
    pk: u64,
    j_max: usize,
    order: AccumulationOrder,
) -> Result<EigenvalueProducts> {
    check_float_args(p0, j_max)?;
    let mut values = vec![Dd::ONE; j_max - 1];
    let mut used = 0u64;
    let fold = |p: u64, values: &mut [Dd]| {
        for (idx, v) in values.iter_mut().enumerate() {
            let j = idx as u64 + 2;
            *v = v.mul(Dd::from_ratio(p - j - 1, p - 2));
        }
    };
    match order {
        AccumulationOrder::Ascending => {
            sieve::for_each_prime_in(p0 + 1, pk + 1, |p| {
                fold(p, &mut values);
                used += 1;
            })?;
        }
        AccumulationOrder::Descending => {
            let primes = sieve::primes_in(p0 + 1, pk + 1)?;
            for &p in primes.iter().rev() {
                fold(p, &mut values);
                used += 1;
            }
        }
    }
    Ok(EigenvalueProducts {
        p0,
        pk,
        j_max,
        exact: None,
        float: Some(values),
        primes_used: used,
    })
}

/// Float products with the prime range partitioned across workers; partial
/// products are combined in ascending range order, so a given worker count
/// always produces the same result.
pub fn eigenvalue_products_float_partitioned(
    p0: u64,
    pk: u64,
    j_max: usize,
    workers: usize,
) -> Result<EigenvalueProducts> {
    check_float_args(p0, j_max)?;
    let workers = workers.max(1) as u64;
    let lo = p0 + 1;
    let hi = pk + 1;
    let span = hi.saturating_sub(lo);
    let ranges: Vec<(u64, u64)> = (0..workers)
        .map(|w| (lo + span * w / workers, lo + span * (w + 1) / workers))
        .collect();
    let partials: Vec<Result<(Vec<Dd>, u64)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(a, b)| {
                scope.spawn(move || {
                    let mut values = vec![Dd::ONE; j_max - 1];
                    let mut used = 0u64;
                    sieve::for_each_prime_in(a, b, |p| {
                        for (idx, v) in values.iter_mut().enumerate() {
                            let j = idx as u64 + 2;
                            *v = v.mul(Dd::from_ratio(p - j - 1, p - 2));
                        }
                        used += 1;
                    })?;
                    Ok((values, used))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut values = vec![Dd::ONE; j_max - 1];
    let mut used = 0u64;
    for partial in partials {
        let (vals, n) = partial?;
        for (acc, v) in values.iter_mut().zip(vals) {
            *acc = acc.mul(v);
        }
        used += n;
    }
    Ok(EigenvalueProducts {
        p0,
        pk,
        j_max,
        exact: None,
        float: Some(values),
        primes_used: used,
    })
}

/// Serialized state of a resumable eigenvalue-product run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AjkCheckpoint {
    pub p0: u64,
    pub j_max: usize,
    /// Lower end (inclusive) of the next unprocessed range.
    pub next_lo: u64,
    pub primes_used: u64,
    pub last_prime: u64,
    /// Bit-exact double-double values, index 0 is `j = 2`.
    pub values_bits: Vec<(u64, u64)>,
    /// Human-readable mirrors of `values_bits`.
    pub values_decimal: Vec<String>,
}

/// A long-running, checkpointed eigenvalue-product computation.
pub struct AjkRun {
    pub p0: u64,
    pub j_max: usize,
    next_lo: u64,
    primes_used: u64,
    last_prime: u64,
    values: Vec<Dd>,
}

/// Interval between checkpoint writes, in candidate range covered.
pub const CHECKPOINT_SPAN: u64 = 1_000_000_000;

impl AjkRun {
    pub fn new(p0: u64, j_max: usize) -> Result<Self> {
        check_float_args(p0, j_max)?;
        Ok(AjkRun {
            p0,
            j_max,
            next_lo: p0 + 1,
            primes_used: 0,
            last_prime: p0,
            values: vec![Dd::ONE; j_max - 1],
        })
    }

    fn checkpoint_path(dir: &Path, p0: u64, j_max: usize) -> PathBuf {
        dir.join(format!("ajk_p0_{p0}_j{j_max}.json"))
    }

    /// Loads the checkpoint from `dir` if one exists, otherwise starts
    /// fresh.
    pub fn resume_or_new(dir: &Path, p0: u64, j_max: usize) -> Result<Self> {
        let path = Self::checkpoint_path(dir, p0, j_max);
        if !path.exists() {
            return Self::new(p0, j_max);
        }
        let text = std::fs::read_to_string(&path)?;
        let ck: AjkCheckpoint = serde_json::from_str(&text)
            .map_err(|e| Error::Format(format!("checkpoint {}: {e}", path.display())))?;
        if ck.p0 != p0 || ck.j_max != j_max {
            return Err(Error::invalid(format!(
                "checkpoint {} was written for p0={}, j_max={}",
                path.display(),
                ck.p0,
                ck.j_max
            )));
        }
        Ok(AjkRun {
            p0,
            j_max,
            next_lo: ck.next_lo,
            primes_used: ck.primes_used,
            last_prime: ck.last_prime,
            values: ck
                .values_bits
                .iter()
                .map(|&(hi, lo)| Dd {
                    hi: f64::from_bits(hi),
                    lo: f64::from_bits(lo),
                })
                .collect(),
        })
    }

    pub fn save(&self, dir: &Path) -> Result<PathBuf> {
        std::fs::create_dir_all(dir)?;
        let ck = AjkCheckpoint {
            p0: self.p0,
            j_max: self.j_max,
            next_lo: self.next_lo,
            primes_used: self.primes_used,
            last_prime: self.last_prime,
            values_bits: self
                .values
                .iter()
                .map(|v| (v.hi.to_bits(), v.lo.to_bits()))
                .collect(),
            values_decimal: self.values.iter().map(|v| format!("{:.17e}", v.to_f64())).collect(),
        };
        let path = Self::checkpoint_path(dir, self.p0, self.j_max);
        let tmp = path.with_extension("json.tmp");
        std::fs::write(&tmp, serde_json::to_string_pretty(&ck).expect("json"))?;
        std::fs::rename(&tmp, &path)?;
        Ok(path)
    }

    /// Folds in all primes up to `pk` inclusive, writing a checkpoint after
    /// each [`CHECKPOINT_SPAN`] of range when a directory is given.
    pub fn advance_to(&mut self, pk: u64, checkpoint_dir: Option<&Path>) -> Result<()> {
        while self.next_lo <= pk {
            let hi = (self.next_lo.saturating_add(CHECKPOINT_SPAN)).min(pk + 1);
            let values = &mut self.values;
            let primes_used = &mut self.primes_used;
            let last_prime = &mut self.last_prime;
            sieve::for_each_prime_in(self.next_lo, hi, |p| {
                for (idx, v) in values.iter_mut().enumerate() {
                    let j = idx as u64 + 2;
                    *v = v.mul(Dd::from_ratio(p - j - 1, p - 2));
                }
                *primes_used += 1;
                *last_prime = p;
            })?;
            self.next_lo = hi;
            if let Some(dir) = checkpoint_dir {
                self.save(dir)?;
            }
        }
        Ok(())
    }

    pub fn products(&self) -> EigenvalueProducts {
        EigenvalueProducts {
            p0: self.p0,
            pk: self.last_prime,
            j_max: self.j_max,
            exact: None,
            float: Some(self.values.clone()),
            primes_used: self.primes_used,
        }
    }

    pub fn last_prime(&self) -> u64 {
        self.last_prime
    }

    pub fn primes_used(&self) -> u64 {
        self.primes_used
    }
}

/// Limits of `a_j^k / (a_2^k)^(j-1)` for `j = 3..=j_max`, computed from the
/// primes up to `prime_limit` (the factors are `1 + O(1/p^2)`, so the
/// partial products converge fast). Used by the corrected crossover
/// estimate.
pub fn ajk_correction_factors(p0: u64, prime_limit: u64, j_max: usize) -> Result<Vec<f64>> {
    if j_max < 3 {
        return Ok(Vec::new());
    }
    let mut values = vec![Dd::ONE; j_max - 2];
    sieve::for_each_prime_in(p0 + 1, prime_limit + 1, |p| {
        let a2 = Dd::from_ratio(p - 3, p - 2);
        let mut a2_pow = a2;
        for (idx, v) in values.iter_mut().enumerate() {
            let j = idx as u64 + 3;
            a2_pow = a2_pow.mul(a2);
            *v = v.mul(Dd::from_ratio(p - j - 1, p - 2).div(a2_pow));
        }
    })?;
    Ok(values.iter().map(|v| v.to_f64()).collect())
}

/// First coordinate of the evolved ratio vector under given eigenvalue
/// products: `L_1 w - a_2 (L_2 w) + a_3 (L_3 w) - ...` with `ajk[0]`
/// holding `a_2^k`.
pub fn evolve_first_coordinate(w0: &RatioVector, ajk: &[f64]) -> f64 {
    use num_traits::ToPrimitive;
    let dim = w0.entries.len();
    let eig = EigenStructure { dim };
    let mut total = 0.0f64;
    for j in 1..=dim {
        let lw = eig
            .left_action(j, &w0.entries)
            .to_f64()
            .unwrap_or(f64::NAN);
        let factor = if j == 1 {
            1.0
        } else if j - 2 < ajk.len() {
            ajk[j - 2]
        } else {
            0.0
        };
        let signed = if j % 2 == 1 { lw } else { -lw };
        total += factor * signed;
    }
    total
}

/// Result of the primorial crossover estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossoverEstimate {
    /// Threshold on `a_2^k` under the approximation `a_j^k = (a_2^k)^(j-1)`,
    /// when a sign change exists in (0, 1).
    pub threshold: Option<f64>,
    /// Same root with the converged correction factors
    /// `a_j^k = c_j (a_2^k)^(j-1)` applied; quantifies the approximation
    /// error. Present when corrections were supplied.
    pub threshold_corrected: Option<f64>,
}

fn first_coordinate_poly(lw: &[f64], x: f64, corrections: Option<&[f64]>) -> f64 {
    let mut total = 0.0;
    let mut x_pow = 1.0;
    for (idx, &coef) in lw.iter().enumerate() {
        let j = idx + 1;
        let c = match (j, corrections) {
            (1, _) | (2, _) => 1.0,
            (_, Some(cs)) if j - 3 < cs.len() => cs[j - 3],
            _ => 1.0,
        };
        let signed = if j % 2 == 1 { coef } else { -coef };
        total += c * signed * x_pow;
        x_pow *= x;
    }
    total
}

fn bisect_root<F: Fn(f64) -> f64>(f: F) -> Option<f64> {
    let lo = 1e-12;
    let hi = 1.0 - 1e-12;
    // find a strict sign change by scanning; an identically-zero difference
    // (equal vectors) has no crossover
    let mut bracket = None;
    let steps = 20_000;
    let mut prev_x = lo;
    let mut prev_f = f(lo);
    for i in 1..=steps {
        let x = lo + (hi - lo) * i as f64 / steps as f64;
        let fx = f(x);
        if prev_f * fx < 0.0 {
            bracket = Some((prev_x, x));
            break;
        }
        prev_x = x;
        prev_f = fx;
    }
    let (mut a, mut b) = bracket?;
    let fa = f(a);
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        let fm = f(mid);
        if (fm > 0.0) == (fa > 0.0) {
            a = mid;
        } else {
            b = mid;
        }
    }
    Some(0.5 * (a + b))
}

/// Solves for the `a_2^k` at which the first coordinate of `w_large`
/// overtakes that of `w_small`, expanding both in the eigenbasis and
/// treating the higher eigenvalue products as powers of `a_2^k`.
///
/// With `corrections` (from [`ajk_correction_factors`]) the same root is
/// also found under `a_j^k = c_j (a_2^k)^(j-1)`; both are reported.
pub fn estimate_primorial_crossover(
    w_small: &RatioVector,
    w_large: &RatioVector,
    corrections: Option<&[f64]>,
) -> Result<CrossoverEstimate> {
    use num_traits::ToPrimitive;
    if w_small.basis_modulus != w_large.basis_modulus {
        return Err(Error::invalid(format!(
            "ratio vectors from different cycles: {} vs {}",
            w_small.basis_modulus, w_large.basis_modulus
        )));
    }
    let dim = w_small.entries.len().max(w_large.entries.len());
    let eig = EigenStructure { dim };
    let pad = |w: &RatioVector| -> Vec<BigRational> {
        let mut v = w.entries.clone();
        v.resize(dim, BigRational::zero());
        v
    };
    let ws = pad(w_small);
    let wl = pad(w_large);
    let lw_small: Vec<f64> = (1..=dim)
        .map(|j| eig.left_action(j, &ws).to_f64().unwrap_or(f64::NAN))
        .collect();
    let lw_large: Vec<f64> = (1..=dim)
        .map(|j| eig.left_action(j, &wl).to_f64().unwrap_or(f64::NAN))
        .collect();
    let diff = |x: f64, corr: Option<&[f64]>| {
        first_coordinate_poly(&lw_large, x, corr) - first_coordinate_poly(&lw_small, x, corr)
    };
    let threshold = bisect_root(|x| diff(x, None));
    let threshold_corrected = corrections.and_then(|c| bisect_root(|x| diff(x, Some(c))));
    Ok(CrossoverEstimate {
        threshold,
        threshold_corrected,
    })
}
