//! Base-3 digit expansions and digit-pattern statistics.
//!
//! The canonical expansion is little-endian: index 0 holds the least
//! significant digit, and the representation of zero is the single digit
//! `[0]`. Pattern counting and run statistics operate on the
//! most-significant-first rendering of the digits, which is the natural
//! reading order for digit strings, with overlapping occurrences counted.

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

/// Errors raised while parsing digit strings or matching patterns.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Base3Error {
    /// A character outside `0`, `1`, `2` appeared in a digit or pattern string.
    #[error("invalid base-3 digit {0:?}")]
    InvalidDigit(char),
    /// A digit value outside `0..=2` appeared in a raw digit slice.
    #[error("invalid base-3 digit value {0}")]
    InvalidDigitValue(u8),
    /// An empty digit string or pattern was supplied.
    #[error("empty base-3 digit string")]
    Empty,
}

/// Virtual zero padding applied when counting digit patterns.
///
/// `PadLeft` places one virtual `0` before the most significant digit;
/// `PadRight` places one virtual `0` after the least significant digit.
/// Exactly one virtual digit is added, never more.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Boundary {
    None,
    PadLeft,
    PadRight,
}

/// Canonical little-endian base-3 expansion of a non-negative integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Base3Expansion {
    digits: Vec<u8>,
}

/// Expands `n` into its canonical base-3 digits.
///
/// `to_base3(0)` is `[0]`, `to_base3(5)` is `[2, 1]`, and `to_base3(22)`
/// is `[1, 1, 2]`.
pub fn to_base3(n: u64) -> Base3Expansion {
    if n == 0 {
        return Base3Expansion { digits: vec![0] };
    }
    let mut digits = Vec::new();
    let mut rest = n;
    while rest > 0 {
        digits.push((rest % 3) as u8);
        rest /= 3;
    }
    Base3Expansion { digits }
}

/// Expands an arbitrary-precision `n` into its canonical base-3 digits.
pub fn to_base3_big(n: &BigUint) -> Base3Expansion {
    let digits = n.to_radix_le(3);
    Base3Expansion { digits }
}

impl Base3Expansion {
    /// Builds an expansion from little-endian digits, trimming leading
    /// (high-index) zeros down to the canonical form.
    pub fn from_digits_le(mut digits: Vec<u8>) -> Result<Self, Base3Error> {
        if digits.is_empty() {
            return Err(Base3Error::Empty);
        }
        if let Some(&bad) = digits.iter().find(|&&d| d > 2) {
            return Err(Base3Error::InvalidDigitValue(bad));
        }
        while digits.len() > 1 && *digits.last().unwrap() == 0 {
            digits.pop();
        }
        Ok(Base3Expansion { digits })
    }

    /// Parses a most-significant-first digit string such as `"211"`.
    pub fn from_msd_str(text: &str) -> Result<Self, Base3Error> {
        let digits = parse_digit_str(text)?;
        Self::from_digits_le(digits.into_iter().rev().collect())
    }

    /// Little-endian digits; index 0 is the least significant digit.
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Number of digits in the canonical expansion (always at least 1).
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The least significant digit.
    pub fn lsd(&self) -> u8 {
        self.digits[0]
    }

    /// The integer value of the expansion.
    pub fn value(&self) -> BigUint {
        BigUint::from_radix_le(&self.digits, 3).expect("digits are canonical")
    }

    /// Most-significant-first rendering, e.g. `[1, 1, 2]` renders as `"211"`.
    pub fn to_msd_string(&self) -> String {
        self.digits
            .iter()
            .rev()
            .map(|d| char::from(b'0' + d))
            .collect()
    }

    /// Counts overlapping occurrences of `pattern` (most-significant-first,
    /// e.g. `"21"`) in the rendered digits under the given boundary padding.
    pub fn count_pattern(&self, pattern: &str, boundary: Boundary) -> Result<usize, Base3Error> {
        count_pattern_le(&self.digits, pattern, boundary)
    }

    /// Computes digit counts, run counts, adjacent-pair counts, and digit sums.
    pub fn digit_stats(&self) -> DigitStats {
        DigitStats::from_digits_le(&self.digits)
    }
}

fn parse_digit_str(text: &str) -> Result<Vec<u8>, Base3Error> {
    if text.is_empty() {
        return Err(Base3Error::Empty);
    }
    text.chars()
        .map(|c| match c {
            '0'..='2' => Ok(c as u8 - b'0'),
            other => Err(Base3Error::InvalidDigit(other)),
        })
        .collect()
}

/// Counts overlapping occurrences of `pattern` in a raw little-endian digit
/// slice, without requiring the slice to be canonical. Leading (high-index)
/// zeros are treated as real digits of the rendered string.
pub fn count_pattern_le(
    digits_le: &[u8],
    pattern: &str,
    boundary: Boundary,
) -> Result<usize, Base3Error> {
    if digits_le.is_empty() {
        return Err(Base3Error::Empty);
    }
    if let Some(&bad) = digits_le.iter().find(|&&d| d > 2) {
        return Err(Base3Error::InvalidDigitValue(bad));
    }
    let pat = parse_digit_str(pattern)?;
    let mut rendered = Vec::with_capacity(digits_le.len() + 1);
    if boundary == Boundary::PadLeft {
        rendered.push(0u8);
    }
    rendered.extend(digits_le.iter().rev().copied());
    if boundary == Boundary::PadRight {
        rendered.push(0u8);
    }
    if pat.len() > rendered.len() {
        return Ok(0);
    }
    Ok(rendered.windows(pat.len()).filter(|w| **w == pat[..]).count())
}

/// Digit statistics of one canonical expansion.
///
/// Pair counts are stored for the unpadded rendering; the padded variants are
/// derived from the outermost digits, since one virtual `0` can only add the
/// pair `(0, msd)` on the left or `(lsd, 0)` on the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitStats {
    counts: [usize; 3],
    runs: [usize; 3],
    pairs: [[usize; 3]; 3],
    msd: u8,
    lsd: u8,
    digit_sum: u64,
}

impl DigitStats {
    fn from_digits_le(digits: &[u8]) -> Self {
        let mut counts = [0usize; 3];
        let mut runs = [0usize; 3];
        let mut pairs = [[0usize; 3]; 3];
        let mut digit_sum = 0u64;
        let mut prev: Option<u8> = None;
        for &d in digits.iter().rev() {
            counts[d as usize] += 1;
            digit_sum += u64::from(d);
            if prev != Some(d) {
                runs[d as usize] += 1;
            }
            if let Some(p) = prev {
                pairs[p as usize][d as usize] += 1;
            }
            prev = Some(d);
        }
        DigitStats {
            counts,
            runs,
            pairs,
            msd: *digits.last().unwrap(),
            lsd: digits[0],
            digit_sum,
        }
    }

    /// How many digits equal `d`.
    pub fn count_of_digit(&self, d: u8) -> usize {
        self.counts[usize::from(d)]
    }

    /// How many maximal runs of consecutive digits `d` occur.
    pub fn maximal_runs(&self, d: u8) -> usize {
        self.runs[usize::from(d)]
    }

    /// Occurrences of the adjacent pair `x` followed by `y` in the
    /// most-significant-first rendering, under the given boundary padding.
    pub fn pair_count(&self, x: u8, y: u8, boundary: Boundary) -> usize {
        let mut count = self.pairs[usize::from(x)][usize::from(y)];
        match boundary {
            Boundary::None => {}
            Boundary::PadLeft => {
                if x == 0 && y == self.msd {
                    count += 1;
                }
            }
            Boundary::PadRight => {
                if x == self.lsd && y == 0 {
                    count += 1;
                }
            }
        }
        count
    }

    /// Sum of all digits.
    pub fn digit_sum(&self) -> u64 {
        self.digit_sum
    }

    /// Number of digits `1` minus twice the number of digits `2`.
    pub fn weighted_sum(&self) -> i64 {
        self.counts[1] as i64 - 2 * self.counts[2] as i64
    }
}
