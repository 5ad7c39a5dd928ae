//! Binomial coefficients modulo 3 and modulo 9 from base-3 digits.
//!
//! The mod-3 rule is the classical digit-wise product. The mod-9 rule keeps
//! that product as its main term and adds four correction sums, one for each
//! way a borrow between adjacent digit positions can contribute a multiple
//! of 3. Both run in time linear in the digit count (quadratic only through
//! the prefix/suffix products, which are shared), and neither touches big
//! integers, so they stay usable for digit strings far beyond `u64`.

use crate::base3::to_base3;

/// `C(n, k) mod 3` via the digit-wise product rule.
pub fn binom_mod3(n: u64, k: u64) -> u8 {
    binom_mod3_digits(to_base3(n).digits(), to_base3(k).digits())
}

/// `C(n, k) mod 9` via the main digit product plus borrow corrections.
pub fn binom_mod9(n: u64, k: u64) -> u8 {
    binom_mod9_digits(to_base3(n).digits(), to_base3(k).digits())
}

/// Digit-slice form of [`binom_mod3`]. Digits are little-endian base-3.
///
/// Panics if any digit is 3 or larger.
pub fn binom_mod3_digits(n: &[u8], k: &[u8]) -> u8 {
    check_digits(n);
    check_digits(k);
    let len = n.len().max(k.len());
    let mut acc = 1u8;
    for i in 0..len {
        acc = acc * small_binom(digit(n, i), digit(k, i)) as u8 % 3;
        if acc == 0 {
            return 0;
        }
    }
    acc
}

/// Digit-slice form of [`binom_mod9`]. Digits are little-endian base-3.
///
/// Panics if any digit is 3 or larger.
pub fn binom_mod9_digits(n: &[u8], k: &[u8]) -> u8 {
    check_digits(n);
    check_digits(k);
    let len = n.len().max(k.len());

    // Per-position factors of the main product, then prefix/suffix products
    // mod 9 so each correction term can drop one or two positions in O(1).
    let factors: Vec<i64> = (0..len)
        .map(|i| small_binom(digit(n, i), digit(k, i)))
        .collect();
    let mut prefix = vec![1i64; len + 1];
    for i in 0..len {
        prefix[i + 1] = prefix[i] * factors[i] % 9;
    }
    let mut suffix = vec![1i64; len + 1];
    for i in (0..len).rev() {
        suffix[i] = suffix[i + 1] * factors[i] % 9;
    }

    let mut total = prefix[len];
    for v in 1..len {
        let nl = digit(n, v - 1);
        let kl = digit(k, v - 1);
        let nh = digit(n, v);
        let kh = digit(k, v);
        if nh == 0 {
            continue;
        }
        let outer = 3 * nh * prefix[v - 1] % 9;
        let both_dropped = outer * suffix[v + 1] % 9;
        let high_kept = outer * factors[v] % 9 * suffix[v + 1] % 9;
        if nl == 0 {
            total += both_dropped * small_binom(1, kl - 1) % 9 * small_binom(nh - 1, kh) % 9;
        }
        if nl == 1 {
            if kl == 0 {
                total += high_kept;
            }
            total -= both_dropped * small_binom(2, kl) % 9 * small_binom(nh - 1, kh) % 9;
        }
        if nl == 2 && kl == 1 {
            total += high_kept;
        }
    }
    total.rem_euclid(9) as u8
}

fn check_digits(digits: &[u8]) {
    assert!(
        digits.iter().all(|&d| d < 3),
        "base-3 digit out of range in {digits:?}"
    );
}

fn digit(digits: &[u8], i: usize) -> i64 {
    digits.get(i).map(|&d| i64::from(d)).unwrap_or(0)
}

/// `C(a, b)` for tiny arguments, with the usual zero outside `0 <= b <= a`.
fn small_binom(a: i64, b: i64) -> i64 {
    if b < 0 || b > a || a < 0 {
        return 0;
    }
    match (a, b) {
        (2, 1) => 2,
        _ => 1,
    }
}
