//! Exact reference evaluation of the binomial-power sums.
//!
//! Everything here computes the defining sum
//! `a_n = sum_k C(n,k)^r * C(n+k,k)^s` directly, either over arbitrary
//! precision integers or termwise modulo a small modulus. The digit-wise
//! evaluator in [`crate::mod9eval`] never calls into this module, so the two
//! routes stay independent and can be checked against each other.

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};
use serde::Serialize;
use thiserror::Error;

/// Largest `n` the exact evaluators accept by default. The sums grow fast
/// enough that values beyond this belong to the digit-wise evaluator.
pub const DEFAULT_EXACT_BOUND: u64 = 10_000;

/// Errors from parameter validation and evaluation limits.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    /// The exponent `r` on `C(n,k)` must be at least 1.
    #[error("r must be at least 1")]
    InvalidR,
    /// The requested index is beyond the configured exact-evaluation bound.
    #[error("n = {n} exceeds the exact-evaluation bound {bound}; use the modulus-9 digit evaluator for large n")]
    BoundExceeded { n: u64, bound: u64 },
    /// Termwise modular evaluation supports moduli in `2..=2^32`.
    #[error("modulus {0} is out of range; it must be in 2..=2^32")]
    InvalidModulus(u64),
}

/// Exponent pair `(r, s)` of one sequence: `r >= 1` on `C(n,k)` and
/// `s >= 0` on `C(n+k,k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AperyParams {
    r: u32,
    s: u32,
}

impl AperyParams {
    pub fn new(r: u32, s: u32) -> Result<Self, OracleError> {
        if r == 0 {
            return Err(OracleError::InvalidR);
        }
        Ok(AperyParams { r, s })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }
}

/// Exact binomial coefficient with `C(n, k) = 0` whenever `k > n`.
pub fn binom_exact(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// The full row `C(n, 0), ..., C(n, n)`.
pub fn binom_row(n: u64) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(n as usize + 1);
    row.push(BigUint::one());
    for k in 1..=n {
        let next = &row[(k - 1) as usize] * (n - k + 1) / k;
        row.push(next);
    }
    row
}

/// Exact value of `a_n(r, s)` under the default bound on `n`.
pub fn apery_exact(params: &AperyParams, n: u64) -> Result<BigUint, OracleError> {
    apery_exact_bounded(params, n, DEFAULT_EXACT_BOUND)
}

/// Exact value of `a_n(r, s)` with a caller-chosen bound on `n`.
pub fn apery_exact_bounded(
    params: &AperyParams,
    n: u64,
    bound: u64,
) -> Result<BigUint, OracleError> {
    if n > bound {
        return Err(OracleError::BoundExceeded { n, bound });
    }
    let row = binom_row(n);
    let mut diag = Vec::with_capacity(n as usize + 1);
    diag.push(BigUint::one());
    for k in 1..=n {
        let next = &diag[(k - 1) as usize] * (n + k) / k;
        diag.push(next);
    }
    let mut sum = BigUint::zero();
    for (u, v) in row.iter().zip(diag.iter()) {
        sum += Pow::pow(u, params.r) * Pow::pow(v, params.s);
    }
    Ok(sum)
}

/// `a_n(r, s) mod modulus`, evaluated termwise.
///
/// Binomial residues come from the additive Pascal recurrence, which is exact
/// for any modulus, and each term is reduced as it is accumulated. The result
/// is the image of [`apery_exact`] under reduction, computed without ever
/// materializing the exact sum.
pub fn apery_mod(params: &AperyParams, n: u64, modulus: u64) -> Result<u64, OracleError> {
    let values = apery_mod_sweep(std::slice::from_ref(params), &[n], modulus)?;
    Ok(values[0][0])
}

/// Termwise `a_n(r, s) mod modulus` for a whole grid of parameter pairs and
/// indices, sharing one Pascal-row computation across the grid.
///
/// Returns `result[i][j] = a_{ns[j]}(params[i]) mod modulus`. Indices may be
/// in any order and may repeat.
pub fn apery_mod_sweep(
    params: &[AperyParams],
    ns: &[u64],
    modulus: u64,
) -> Result<Vec<Vec<u64>>, OracleError> {
    if modulus < 2 || modulus > 1 << 32 {
        return Err(OracleError::InvalidModulus(modulus));
    }
    if let Some(&n) = ns.iter().max() {
        if n > DEFAULT_EXACT_BOUND {
            return Err(OracleError::BoundExceeded {
                n,
                bound: DEFAULT_EXACT_BOUND,
            });
        }
    }
    let mut distinct: Vec<u64> = ns.to_vec();
    distinct.sort_unstable();
    distinct.dedup();

    let mut per_n: Vec<(u64, Vec<u64>)> = Vec::with_capacity(distinct.len());
    const CHUNK: usize = 512;
    for chunk in distinct.chunks(CHUNK) {
        per_n.extend(eval_chunk(params, chunk, modulus));
    }

    let mut result = vec![Vec::with_capacity(ns.len()); params.len()];
    for &n in ns {
        let idx = per_n.binary_search_by_key(&n, |(m, _)| *m).unwrap();
        for (i, row) in per_n[idx].1.iter().enumerate() {
            result[i].push(*row);
        }
    }
    Ok(result)
}

/// Evaluates one sorted chunk of distinct indices: rolls Pascal rows mod
/// `modulus` up to `2 * max(chunk)`, harvesting `C(n, k)` rows and the
/// diagonal values `C(n+k, k)` as the rolling row passes them.
fn eval_chunk(params: &[AperyParams], chunk: &[u64], modulus: u64) -> Vec<(u64, Vec<u64>)> {
    struct Target {
        n: u64,
        row: Vec<u64>,
        diag: Vec<u64>,
    }
    let max_n = *chunk.last().expect("chunks are non-empty");
    let mut targets: Vec<Target> = chunk
        .iter()
        .map(|&n| Target {
            n,
            row: Vec::new(),
            diag: Vec::with_capacity(n as usize + 1),
        })
        .collect();

    let mut row: Vec<u64> = vec![1];
    for row_idx in 0..=(2 * max_n) {
        if row_idx > 0 {
            row.push(1);
            for i in (1..row_idx as usize).rev() {
                row[i] = (row[i] + row[i - 1]) % modulus;
            }
        }
        for t in targets.iter_mut() {
            if t.n <= row_idx && row_idx <= 2 * t.n {
                t.diag.push(row[(row_idx - t.n) as usize]);
                if row_idx == t.n {
                    t.row = row.clone();
                }
            }
        }
    }

    let small = modulus <= 4096;
    targets
        .into_iter()
        .map(|t| {
            let values = params
                .iter()
                .map(|p| {
                    if small {
                        let pow_r: Vec<u64> =
                            (0..modulus).map(|v| modpow(v, u64::from(p.r), modulus)).collect();
                        let pow_s: Vec<u64> =
                            (0..modulus).map(|v| modpow(v, u64::from(p.s), modulus)).collect();
                        t.row
                            .iter()
                            .zip(t.diag.iter())
                            .fold(0u64, |acc, (&u, &v)| {
                                (acc + pow_r[u as usize] * pow_s[v as usize]) % modulus
                            })
                    } else {
                        t.row
                            .iter()
                            .zip(t.diag.iter())
                            .fold(0u64, |acc, (&u, &v)| {
                                (acc + modpow(u, u64::from(p.r), modulus)
                                    * modpow(v, u64::from(p.s), modulus))
                                    % modulus
                            })
                    }
                })
                .collect();
            (t.n, values)
        })
        .collect()
}

/// `base^exp mod modulus` by square and multiply; `modulus` must fit in 32
/// bits so intermediate products stay inside `u64`.
pub(crate) fn modpow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut base = base % modulus;
    let mut acc = 1 % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Exact binomial rows `C(n, 0..=n)` and `C(n+k, k)` for `k = 0..=n`,
/// advanced index by index.
///
/// Each step updates both rows in place with one scalar multiply and one
/// exact scalar divide per entry, so walking to `n` costs O(n) big-integer
/// scalar operations per step instead of a fresh O(n) row build per call.
pub struct BinomRowSweep {
    next_n: u64,
    row: Vec<BigUint>,
    diag: Vec<BigUint>,
}

impl BinomRowSweep {
    pub fn new() -> Self {
        BinomRowSweep {
            next_n: 0,
            row: Vec::new(),
            diag: Vec::new(),
        }
    }

    /// Steps to the next index and returns it; the accessors then expose
    /// that index's rows.
    pub fn advance(&mut self) -> u64 {
        let n = self.next_n;
        self.next_n += 1;
        if n == 0 {
            self.row = vec![BigUint::one()];
            self.diag = vec![BigUint::one()];
        } else {
            for k in 0..n as usize {
                self.row[k] = &self.row[k] * n / (n - k as u64);
                self.diag[k] = &self.diag[k] * (n + k as u64) / n;
            }
            self.row.push(BigUint::one());
            let next_diag = &self.diag[(n - 1) as usize] * (2 * n) / n;
            self.diag.push(next_diag);
        }
        n
    }

    /// `C(n, k)` for the current index.
    pub fn row(&self) -> &[BigUint] {
        &self.row
    }

    /// `C(n+k, k)` for the current index.
    pub fn diag(&self) -> &[BigUint] {
        &self.diag
    }
}

impl Default for BinomRowSweep {
    fn default() -> Self {
        Self::new()
    }
}

/// Streaming exact evaluation of `a_0, a_1, a_2, ...` for one parameter
/// pair, on top of [`BinomRowSweep`].
pub struct ExactSweep {
    params: AperyParams,
    rows: BinomRowSweep,
}

impl ExactSweep {
    pub fn new(params: AperyParams) -> Self {
        ExactSweep {
            params,
            rows: BinomRowSweep::new(),
        }
    }
}

impl Iterator for ExactSweep {
    type Item = (u64, BigUint);

    fn next(&mut self) -> Option<Self::Item> {
        let n = self.rows.advance();
        let mut sum = BigUint::zero();
        for (u, v) in self.rows.row().iter().zip(self.rows.diag().iter()) {
            sum += Pow::pow(u, self.params.r) * Pow::pow(v, self.params.s);
        }
        Some((n, sum))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base3::to_base3;

    fn params(r: u32, s: u32) -> AperyParams {
        AperyParams::new(r, s).unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn r_zero_is_rejected() {
        assert_eq!(AperyParams::new(0, 3), Err(OracleError::InvalidR));
    }

    #[test]
    fn binomials_match_known_values() {
        assert_eq!(binom_exact(4, 2), big(6));
        assert_eq!(binom_exact(10, 4), big(210));
        assert_eq!(binom_exact(0, 0), big(1));
        assert_eq!(binom_exact(3, 5), big(0));
        assert_eq!(binom_exact(52, 26).to_string(), "495918532948104");
    }

    #[test]
    fn binom_row_matches_binom_exact() {
        for n in [0u64, 1, 2, 7, 30] {
            let row = binom_row(n);
            assert_eq!(row.len() as u64, n + 1);
            for k in 0..=n {
                assert_eq!(row[k as usize], binom_exact(n, k), "C({n},{k})");
            }
        }
    }

    #[test]
    fn frozen_small_values() {
        assert_eq!(apery_exact(&params(2, 1), 0).unwrap(), big(1));
        assert_eq!(apery_exact(&params(2, 1), 1).unwrap(), big(3));
        assert_eq!(apery_exact(&params(3, 0), 2).unwrap(), big(10));
        assert_eq!(apery_exact(&params(2, 2), 3).unwrap(), big(1445));
        assert_eq!(apery_exact(&params(1, 1), 4).unwrap(), big(321));
        assert_eq!(apery_exact(&params(2, 0), 4).unwrap(), big(70));
        assert_eq!(apery_exact(&params(6, 0), 4).unwrap(), big(54850));
        assert_eq!(apery_exact(&params(3, 1), 2).unwrap(), big(31));
        assert_eq!(apery_exact(&params(4, 1), 2).unwrap(), big(55));
        assert_eq!(apery_exact(&params(5, 1), 5).unwrap(), big(8112753));
    }

    #[test]
    fn power_sequences_are_recovered() {
        for n in 0..=20u64 {
            assert_eq!(
                apery_exact(&params(1, 0), n).unwrap(),
                Pow::pow(&big(2), n as u32),
                "a_n(1,0) must be 2^n at n={n}"
            );
            assert_eq!(
                apery_exact(&params(2, 0), n).unwrap(),
                binom_exact(2 * n, n),
                "a_n(2,0) must be C(2n,n) at n={n}"
            );
            assert!(apery_exact(&params(3, 2), n).unwrap() > BigUint::zero());
        }
    }

    #[test]
    fn digit_product_invariant_mod_3() {
        let p = params(2, 1);
        for n in 0..200u64 {
            let direct = apery_mod(&p, n, 3).unwrap();
            let product = to_base3(n)
                .digits()
                .iter()
                .map(|&d| apery_mod(&p, u64::from(d), 3).unwrap())
                .fold(1u64, |acc, v| acc * v % 3);
            assert_eq!(direct, product, "mod-3 digit product at n={n}");
        }
    }

    #[test]
    fn bound_is_enforced_and_configurable() {
        let p = params(2, 2);
        let err = apery_exact(&p, DEFAULT_EXACT_BOUND + 1).unwrap_err();
        assert!(matches!(err, OracleError::BoundExceeded { .. }));
        assert!(err.to_string().contains("digit evaluator"));
        assert!(apery_exact_bounded(&p, 101, 100).is_err());
        assert!(apery_exact_bounded(&p, 100, 100).is_ok());
    }

    #[test]
    fn termwise_reduction_matches_exact() {
        for (r, s) in [(1, 0), (2, 1), (2, 2), (4, 3), (7, 6)] {
            let p = params(r, s);
            for n in 0..60u64 {
                let exact = apery_exact(&p, n).unwrap();
                for m in [2u64, 3, 9, 10, 97] {
                    let reduced: u64 = (exact.clone() % m).try_into().unwrap();
                    assert_eq!(apery_mod(&p, n, m).unwrap(), reduced, "a_{n}({r},{s}) mod {m}");
                }
            }
        }
    }

    #[test]
    fn frozen_residues_mod_9() {
        let p = params(2, 2);
        assert_eq!(apery_mod(&p, 3, 9).unwrap(), 5);
        assert_eq!(apery_mod(&p, 4, 9).unwrap(), 7);
        assert_eq!(apery_mod(&p, 0, 9).unwrap(), 1);
    }

    #[test]
    fn sweep_agrees_with_single_calls() {
        let ps = [params(2, 1), params(3, 4)];
        let ns = [17u64, 0, 80, 17, 3];
        let table = apery_mod_sweep(&ps, &ns, 9).unwrap();
        for (i, p) in ps.iter().enumerate() {
            for (j, &n) in ns.iter().enumerate() {
                assert_eq!(table[i][j], apery_mod(p, n, 9).unwrap());
            }
        }
    }

    #[test]
    fn sweep_rejects_bad_moduli() {
        let p = [params(2, 1)];
        assert!(matches!(
            apery_mod_sweep(&p, &[3], 1),
            Err(OracleError::InvalidModulus(1))
        ));
        assert!(apery_mod_sweep(&p, &[3], (1 << 32) + 1).is_err());
    }

    #[test]
    fn exact_sweep_matches_direct_evaluation() {
        let p = params(2, 2);
        for (n, value) in ExactSweep::new(p).take(40) {
            assert_eq!(value, apery_exact(&p, n).unwrap(), "sweep at n={n}");
        }
    }

    #[test]
    fn row_sweep_tracks_both_binomial_rows() {
        let mut rows = BinomRowSweep::new();
        for n in 0..=25u64 {
            assert_eq!(rows.advance(), n);
            for k in 0..=n {
                assert_eq!(rows.row()[k as usize], binom_exact(n, k), "C({n},{k})");
                assert_eq!(
                    rows.diag()[k as usize],
                    binom_exact(n + k, k),
                    "C({},{k})",
                    n + k
                );
            }
        }
    }

    #[test]
    fn modpow_small_cases() {
        assert_eq!(modpow(2, 10, 1000), 24);
        assert_eq!(modpow(0, 0, 9), 1);
        assert_eq!(modpow(5, 0, 9), 1);
        assert_eq!(modpow(7, 2, 9), 4);
    }
}
