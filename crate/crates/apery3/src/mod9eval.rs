//! Digit-wise evaluation of the binomial-power sums modulo 9 and modulo 3.
//!
//! The residue of `a_n` depends on `n` only through its base-3 digits: the
//! mod-3 residue is the product of the single-digit values, and the mod-9
//! residue adds one correction term per adjacent digit pair. Everything here
//! works on the digit string alone and runs in time linear in its length,
//! which is what makes million-digit indices practical. None of it calls the
//! exact oracle, so the two evaluation routes stay independent.

use serde::Serialize;
use thiserror::Error;

use crate::oracle::{modpow, AperyParams};

/// Errors from the reduced pair-term table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Mod9Error {
    /// Two parameter families have no trusted reduced form. The general
    /// [`f_term`] still covers them; only the shortcut is missing.
    #[error("unverifiable case: r = {r}, s = {s} has no trusted reduced form; evaluate f_term directly")]
    UnverifiableCase { r: u32, s: u32 },
}

/// A residue modulo 3, kept in `0..3` by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Residue3(u8);

impl Residue3 {
    /// Canonical representative of `x` modulo 3.
    pub fn reduce(x: i64) -> Self {
        Residue3(x.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl std::fmt::Display for Residue3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A residue modulo 9, kept in `0..9` by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Residue9(u8);

impl Residue9 {
    /// Canonical representative of `x` modulo 9.
    pub fn reduce(x: i64) -> Self {
        Residue9(x.rem_euclid(9) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl std::fmt::Display for Residue9 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<Residue9> for Residue3 {
    fn from(r: Residue9) -> Self {
        Residue3(r.0 % 3)
    }
}

/// `a_d mod 9` for a single base-3 digit `d`, from the closed forms
/// `a_0 = 1`, `a_1 = 1 + 2^s` and `a_2 = 1 + 2^r 3^s + 6^s`, evaluated by
/// modular exponentiation.
///
/// Panics if `d` is 3 or larger.
pub fn base_value_mod9(d: u8, params: &AperyParams) -> Residue9 {
    let r = u64::from(params.r());
    let s = u64::from(params.s());
    let v = match d {
        0 => 1,
        1 => (1 + modpow(2, s, 9)) % 9,
        2 => (1 + modpow(2, r, 9) * modpow(3, s, 9) + modpow(6, s, 9)) % 9,
        _ => panic!("base-3 digit out of range: {d}"),
    };
    Residue9(v as u8)
}

/// `a_d mod 3` for a single base-3 digit `d`.
///
/// Panics if `d` is 3 or larger.
pub fn base_value_mod3(d: u8, params: &AperyParams) -> Residue3 {
    base_value_mod9(d, params).into()
}

/// The three single-digit values for one parameter pair, precomputed in both
/// moduli. Evaluation over a long digit string looks residues up here
/// instead of re-running the exponentiations per digit.
#[derive(Debug, Clone, Copy)]
pub struct BaseValueTable {
    mod9: [Residue9; 3],
    mod3: [Residue3; 3],
}

impl BaseValueTable {
    pub fn new(params: &AperyParams) -> Self {
        let mod9 = [
            base_value_mod9(0, params),
            base_value_mod9(1, params),
            base_value_mod9(2, params),
        ];
        BaseValueTable {
            mod9,
            mod3: [mod9[0].into(), mod9[1].into(), mod9[2].into()],
        }
    }

    pub fn mod9(&self, d: u8) -> Residue9 {
        self.mod9[usize::from(d)]
    }

    pub fn mod3(&self, d: u8) -> Residue3 {
        self.mod3[usize::from(d)]
    }
}

/// Correction term `f(a, b)` for the adjacent digit pair `(a, b)`, where `a`
/// is the lower digit. Only its residue mod 3 is meaningful, since the term
/// enters the mod-9 evaluation with a factor of 3 in front.
///
/// Panics if either digit is 3 or larger.
pub fn f_term(a: u8, b: u8, params: &AperyParams) -> Residue3 {
    assert!(a < 3 && b < 3, "base-3 digit out of range: ({a}, {b})");
    let a = i64::from(a);
    let b = i64::from(b);
    let r = i64::from(params.r());
    let s = i64::from(params.s());
    let sign_r = if r % 2 == 0 { 1 } else { -1 };
    let sign_s = if s % 2 == 0 { 1 } else { -1 };
    let value = if s >= 1 {
        a * (a + 1) * b * (s * (b + 1) + sign_s * (s * (b - 1) + r * b))
            + chi(r == 1) * (a + 2) * (a + 1) * b
            + chi(s == 1) * (sign_r - 1) * (a - 1) * a * b * b
    } else {
        chi(r == 1) * (b - chi(b == 2)) * (chi(a == 2) - 1)
            - r * (b + chi(b == 2) * sign_r) * (chi(a == 1) - sign_r * chi(a == 2))
    };
    Residue3::reduce(value)
}

fn chi(cond: bool) -> i64 {
    i64::from(cond)
}

/// Reduced form of [`f_term`]: a per-family shortcut that depends on the
/// digits only through small indicator expressions. Families are keyed by
/// `r` and `s` modulo 6 with a few small-value special cases; the first
/// matching arm wins. Two families return
/// [`Mod9Error::UnverifiableCase`] instead of a formula.
///
/// Panics if either digit is 3 or larger.
pub fn f_term_reduced(a: u8, b: u8, params: &AperyParams) -> Result<Residue3, Mod9Error> {
    assert!(a < 3 && b < 3, "base-3 digit out of range: ({a}, {b})");
    let a = i64::from(a);
    let b = i64::from(b);
    let r = params.r();
    let s = params.s();
    let rm6 = r % 6;
    let sm6 = s % 6;
    let rm3 = r % 3;
    let sm3 = s % 3;

    let value = if rm3 == 0 && sm3 == 0 {
        0
    } else if r == 1 && s == 0 {
        (1 + chi(a == 1)) * (chi(b == 2) - b)
    } else if rm6 == 1 && r >= 7 && s == 0 {
        (chi(a == 1) + chi(a == 2)) * (chi(b == 2) - b)
    } else if rm6 == 5 && s == 0 {
        (chi(a == 1) + chi(a == 2)) * (b - chi(b == 2))
    } else if rm6 == 2 && s == 0 {
        (chi(a == 1) - chi(a == 2)) * (b + chi(b == 2))
    } else if rm6 == 4 && s == 0 {
        (chi(a == 2) - chi(a == 1)) * (b + chi(b == 2))
    } else if rm6 == 0 && sm6 == 1 {
        chi(a == 1) * b
    } else if rm3 == 0 && sm6 == 2 {
        chi(a == 1) * (chi(b == 0) - 1)
    } else if rm3 == 0 && sm6 == 4 {
        chi(a == 1) * (1 - chi(b == 0))
    } else if rm3 == 0 && sm6 == 5 {
        -chi(a == 1) * b
    } else if r == 1 && sm6 == 0 {
        chi(a == 1) * (chi(b == 0) - 1) - chi(a == 0) * b
    } else if r == 1 && s == 1 {
        -a * chi(b == 2) - b
    } else if r == 1 && sm6 == 1 {
        chi(b == 1) * a - b - (1 - chi(a == 0)) * (1 - chi(b == 0))
    } else if r == 1 && sm6 == 2 {
        return Err(Mod9Error::UnverifiableCase { r, s });
    } else if r == 1 && sm6 == 3 {
        chi(a == 1) * (1 - chi(b == 0)) - chi(a == 0) * b
    } else if r == 1 && sm6 == 4 {
        -chi(a == 0) * b
    } else if r == 1 && sm6 == 5 {
        (chi(a == 2) - 1) * b + chi(a == 1) * (1 - chi(b == 0))
    } else if rm3 == 1 && sm6 == 0 {
        chi(a == 1) * (chi(b == 0) - 1)
    } else if rm6 == 1 && s == 1 {
        return Err(Mod9Error::UnverifiableCase { r, s });
    } else if (rm6 == 1 && sm6 == 1 && s >= 7) || (rm6 == 4 && sm6 == 1) {
        -chi(a == 1) * chi(b == 1)
    } else if rm3 == 1 && (sm6 == 2 || sm6 == 3) {
        chi(a == 1) * (1 - chi(b == 0))
    } else if rm3 == 1 && sm6 == 4 {
        0
    } else if rm3 == 1 && sm6 == 5 {
        -chi(a == 1) * chi(b == 2)
    } else if rm3 == 2 && sm6 == 0 {
        chi(a == 1) * (1 - chi(b == 0))
    } else if rm6 == 2 && sm6 == 1 {
        chi(a == 1) * chi(b == 2)
    } else if rm3 == 2 && sm6 == 2 {
        0
    } else if rm3 == 2 && (sm6 == 3 || sm6 == 4) {
        chi(a == 1) * (chi(b == 0) - 1)
    } else if rm3 == 2 && sm6 == 5 {
        chi(a == 1) * chi(b == 1)
    } else if rm6 == 3 && s == 1 {
        chi(a == 2) * (chi(b == 0) - 1) + chi(a == 1) * b
    } else if rm6 == 3 && sm6 == 1 {
        chi(a == 1) * b
    } else if rm6 == 5 && s == 1 {
        chi(a == 1) * b - (1 - chi(a == 0)) * (1 - chi(b == 0))
    } else if rm6 == 5 && sm6 == 1 {
        chi(a == 1) * chi(b == 2)
    } else {
        unreachable!("case split on (r mod 6, s mod 6) is exhaustive")
    };
    Ok(Residue3::reduce(value))
}

/// Whether `f` vanishes identically for this parameter pair, so the mod-9
/// residue collapses to the bare product of single-digit values.
pub fn is_gessel_class(params: &AperyParams) -> bool {
    let r = params.r();
    let s = params.s();
    (r % 3 == 2 && s % 6 == 2)
        || (r % 3 == 0 && s % 3 == 0)
        || (r % 3 == 1 && r >= 4 && s % 6 == 4)
}

/// Product of the single-digit mod-9 values over a digit string, with no
/// correction terms. Equal to [`apery_mod9`] exactly on the classes where
/// [`is_gessel_class`] holds.
///
/// Panics if any digit is 3 or larger.
pub fn bare_product_mod9(digits_le: &[u8], params: &AperyParams) -> Residue9 {
    let table = BaseValueTable::new(params);
    let mut acc = 1u32;
    for &d in digits_le {
        assert!(d < 3, "base-3 digit out of range: {d}");
        acc = acc * u32::from(table.mod9(d).value()) % 9;
    }
    Residue9(acc as u8)
}

/// `a_n mod 9` from the little-endian base-3 digits of `n`.
///
/// Runs one pass over the digits: the main term is the product of
/// single-digit values mod 9, and each adjacent pair `(d[v-1], d[v])`
/// contributes `3 * f(d[v-1], d[v])` scaled by the mod-3 product of all
/// other digits' values. An empty slice denotes `n = 0`.
///
/// Panics if any digit is 3 or larger.
pub fn apery_mod9(digits_le: &[u8], params: &AperyParams) -> Residue9 {
    let table = BaseValueTable::new(params);
    let mut f3 = [[0u32; 3]; 3];
    for a in 0..3u8 {
        for b in 0..3u8 {
            f3[a as usize][b as usize] = u32::from(f_term(a, b, params).value());
        }
    }

    let mut main = 1u32;
    for &d in digits_le {
        assert!(d < 3, "base-3 digit out of range: {d}");
        main = main * u32::from(table.mod9(d).value()) % 9;
    }

    // prefix[i] is the mod-3 product of the values below position i; the
    // suffix product is carried as a scalar while v walks downward.
    let m = digits_le.len();
    let mut prefix = vec![1u8; m];
    for i in 1..m {
        prefix[i] =
            prefix[i - 1] * table.mod3(digits_le[i - 1]).value() % 3;
    }
    let mut corrections = 0u32;
    let mut suffix = 1u32;
    for v in (1..m).rev() {
        let pair = f3[digits_le[v - 1] as usize][digits_le[v] as usize];
        corrections += u32::from(prefix[v - 1]) * suffix * pair;
        suffix = suffix * u32::from(table.mod3(digits_le[v]).value()) % 3;
    }
    Residue9(((main + 3 * (corrections % 3)) % 9) as u8)
}

/// `a_n mod 3` from the little-endian base-3 digits of `n`: the plain
/// product of single-digit values. An empty slice denotes `n = 0`.
///
/// Panics if any digit is 3 or larger.
pub fn apery_mod3(digits_le: &[u8], params: &AperyParams) -> Residue3 {
    let table = BaseValueTable::new(params);
    let mut acc = 1u8;
    for &d in digits_le {
        assert!(d < 3, "base-3 digit out of range: {d}");
        acc = acc * table.mod3(d).value() % 3;
    }
    Residue3(acc)
}
