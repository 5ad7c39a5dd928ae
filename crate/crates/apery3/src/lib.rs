//! Residues of the binomial-power sums
//! `a_n = sum_k C(n,k)^r * C(n+k,k)^s` modulo 9 and modulo 3, computed from
//! the base-3 digits of `n`.
//!
//! The mod-3 residue of `a_n` is the product of the residues at the single
//! digits of `n`. Modulo 9 the same product survives as the main term, and
//! each adjacent digit pair adds one small correction. That turns residue
//! computation into a single pass over the digit string, so indices with a
//! million digits are as routine as small ones. For many parameter families
//! the residue collapses further, to a rule over digit counts and digit
//! patterns alone.
//!
//! Module map:
//!
//! - [`base3`]: digit expansions, pattern counting, digit statistics
//! - [`oracle`]: exact evaluation of the defining sum, and termwise modular
//!   reduction of it, used as the reference for everything else
//! - [`lucas`]: binomial coefficients mod 3 and mod 9 from digits
//! - [`mod9eval`]: the digit-wise residue evaluation of `a_n`
//! - [`classifier`]: residue-class rules keyed by digit patterns
//! - [`cli`]: the `apery3` binary
//!
//! The `examples/` directory exercises each capability end to end:
//! `evaluate_huge` (million-digit indices), `verify_grid` (route
//! cross-checks), `classify_params` (rule lookup), `lucas_mod9` (binomial
//! residues), `gessel_product` (bare-product classes), `digit_patterns`
//! (pattern statistics), and `residue_table` (tabulation).

pub mod base3;
pub mod classifier;
pub mod cli;
pub mod lucas;
pub mod mod9eval;
pub mod oracle;

pub use base3::{to_base3, to_base3_big, Base3Expansion, Boundary};
pub use classifier::{classify_params, residue_by_pattern, supported_classes};
pub use mod9eval::{apery_mod3, apery_mod9, is_gessel_class, Residue3, Residue9};
pub use oracle::{apery_exact, apery_mod, AperyParams};
