//! Residue classes and digit-pattern rules.
//!
//! Each supported parameter family gets one [`ClassRule`]: a predicate
//! selecting the `(r, s)` pairs it covers, and a list of items mapping digit
//! statistics of `n` to the residue of `a_n` mod 9. Rules are plain data
//! built from a small expression language over digit statistics, so the
//! whole table can be serialized, inspected, and swept against the
//! digit-wise evaluator without touching rule-specific code paths.

use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::base3::{Base3Expansion, Boundary, DigitStats};
use crate::mod9eval::Residue9;
use crate::oracle::AperyParams;

/// Errors from parameter classification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    /// `(r, s) = (1, 0)` gives the powers of two, a trivial sequence whose
    /// residues carry no digit-pattern content worth a rule of its own.
    #[error("(1, 0) is a trivial sequence and has no residue rule")]
    TrivialSequence,
    /// No rule covers the pair.
    #[error("unsupported class: no residue rule covers (r, s) = ({r}, {s})")]
    Unsupported { r: u32, s: u32 },
}

/// A digit statistic of the base-3 expansion, the atoms of rule conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// Count of digit 1.
    Ones,
    /// Count of digit 2.
    Twos,
    /// Number of maximal runs of consecutive 1 digits.
    RunsOfOnes,
    /// Number of maximal runs of consecutive 2 digits.
    RunsOfTwos,
    /// The lowest digit.
    Lsd,
    /// Sum of all digits.
    DigitSum,
    /// Count of 1 digits minus twice the count of 2 digits.
    WeightedSum,
    /// Count of 1 digits, halved and rounded down.
    HalfOnes,
    /// Overlapping occurrences of a digit pattern, read from the most
    /// significant digit, with an optional one-digit zero pad.
    Occurrences { pattern: String, boundary: Boundary },
}

impl Quantity {
    fn eval(&self, ctx: &EvalCtx<'_>) -> i64 {
        match self {
            Quantity::Ones => ctx.stats.count_of_digit(1) as i64,
            Quantity::Twos => ctx.stats.count_of_digit(2) as i64,
            Quantity::RunsOfOnes => ctx.stats.maximal_runs(1) as i64,
            Quantity::RunsOfTwos => ctx.stats.maximal_runs(2) as i64,
            Quantity::Lsd => i64::from(ctx.expansion.lsd()),
            Quantity::DigitSum => ctx.stats.digit_sum() as i64,
            Quantity::WeightedSum => ctx.stats.weighted_sum(),
            Quantity::HalfOnes => (ctx.stats.count_of_digit(1) / 2) as i64,
            Quantity::Occurrences { pattern, boundary } => ctx
                .expansion
                .count_pattern(pattern, *boundary)
                .expect("rule patterns contain only base-3 digits")
                as i64,
        }
    }
}

/// Integer linear combination of quantities plus a constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expr {
    pub terms: Vec<(i64, Quantity)>,
    pub constant: i64,
}

impl Expr {
    fn eval(&self, ctx: &EvalCtx<'_>) -> i64 {
        self.terms
            .iter()
            .map(|(coef, quantity)| coef * quantity.eval(ctx))
            .sum::<i64>()
            + self.constant
    }
}

/// Condition tree over digit statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Cond {
    All(Vec<Cond>),
    Any(Vec<Cond>),
    Eq { expr: Expr, value: i64 },
    ModEq { expr: Expr, modulus: i64, residue: i64 },
}

impl Cond {
    fn eval(&self, ctx: &EvalCtx<'_>) -> bool {
        match self {
            Cond::All(conds) => conds.iter().all(|c| c.eval(ctx)),
            Cond::Any(conds) => conds.iter().any(|c| c.eval(ctx)),
            Cond::Eq { expr, value } => expr.eval(ctx) == *value,
            Cond::ModEq {
                expr,
                modulus,
                residue,
            } => expr.eval(ctx).rem_euclid(*modulus) == *residue,
        }
    }
}

/// One residue with the condition under which it occurs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleItem {
    pub residue: u8,
    pub when: Cond,
}

/// One conjunction of constraints on `(r, s)`; a rule's predicate is a
/// disjunction of these.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Clause {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_mod: Option<(u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_eq: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_min: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_mod: Option<(u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_eq: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_min: Option<u32>,
}

impl Clause {
    fn matches(&self, r: u32, s: u32) -> bool {
        self.r_mod.map_or(true, |(m, v)| r % m == v)
            && self.r_eq.map_or(true, |v| r == v)
            && self.r_min.map_or(true, |v| r >= v)
            && self.s_mod.map_or(true, |(m, v)| s % m == v)
            && self.s_eq.map_or(true, |v| s == v)
            && self.s_min.map_or(true, |v| s >= v)
    }
}

/// One residue class: the parameter family it covers and the digit-pattern
/// rule deciding `a_n mod 9` on that family.
#[derive(Debug, Clone, Serialize)]
pub struct ClassRule {
    pub rule_id: &'static str,
    /// Human-readable statement of the parameter family.
    pub hypothesis: &'static str,
    pub predicate: Vec<Clause>,
    /// Checked in order; the first matching item decides the residue.
    pub items: Vec<RuleItem>,
    /// Residue when no item matches.
    pub default_residue: u8,
    /// Residues that never occur on this family.
    pub forbidden_residues: Vec<u8>,
}

struct EvalCtx<'a> {
    expansion: &'a Base3Expansion,
    stats: DigitStats,
}

impl ClassRule {
    /// Whether this rule covers the parameter pair.
    pub fn matches(&self, r: u32, s: u32) -> bool {
        self.predicate.iter().any(|c| c.matches(r, s))
    }

    /// Residue of `a_n mod 9` for the expansion of `n`, by rule lookup.
    pub fn residue_for(&self, expansion: &Base3Expansion) -> Residue9 {
        let ctx = EvalCtx {
            expansion,
            stats: expansion.digit_stats(),
        };
        let residue = self
            .items
            .iter()
            .find(|item| item.when.eval(&ctx))
            .map(|item| item.residue)
            .unwrap_or(self.default_residue);
        Residue9::reduce(i64::from(residue))
    }
}

/// The rule covering `(r, s)`, or an error for the trivial pair `(1, 0)`
/// and for pairs no rule covers.
pub fn classify_params(params: &AperyParams) -> Result<&'static ClassRule, ClassifyError> {
    let (r, s) = (params.r(), params.s());
    if r == 1 && s == 0 {
        return Err(ClassifyError::TrivialSequence);
    }
    supported_classes()
        .iter()
        .find(|rule| rule.matches(r, s))
        .ok_or(ClassifyError::Unsupported { r, s })
}

/// `a_n mod 9` by classifying the parameters and applying the matching
/// rule to the expansion's digit statistics. This route never evaluates the
/// sum; it reads the residue off the digit patterns alone.
pub fn residue_by_pattern(
    expansion: &Base3Expansion,
    params: &AperyParams,
) -> Result<Residue9, ClassifyError> {
    classify_params(params).map(|rule| rule.residue_for(expansion))
}

/// All residue-class rules, in the order classification consults them.
pub fn supported_classes() -> &'static [ClassRule] {
    static RULES: OnceLock<Vec<ClassRule>> = OnceLock::new();
    RULES.get_or_init(build_rules)
}

fn ones() -> Expr {
    quantity(Quantity::Ones)
}

fn twos() -> Expr {
    quantity(Quantity::Twos)
}

fn quantity(q: Quantity) -> Expr {
    Expr {
        terms: vec![(1, q)],
        constant: 0,
    }
}

fn lin(terms: &[(i64, Quantity)]) -> Expr {
    Expr {
        terms: terms.to_vec(),
        constant: 0,
    }
}

fn occ(pattern: &str) -> Quantity {
    Quantity::Occurrences {
        pattern: pattern.to_string(),
        boundary: Boundary::None,
    }
}

fn occ_left(pattern: &str) -> Quantity {
    Quantity::Occurrences {
        pattern: pattern.to_string(),
        boundary: Boundary::PadLeft,
    }
}

fn occ_right(pattern: &str) -> Quantity {
    Quantity::Occurrences {
        pattern: pattern.to_string(),
        boundary: Boundary::PadRight,
    }
}

fn eq(expr: Expr, value: i64) -> Cond {
    Cond::Eq { expr, value }
}

fn modeq(expr: Expr, modulus: i64, residue: i64) -> Cond {
    Cond::ModEq {
        expr,
        modulus,
        residue,
    }
}

fn all(conds: Vec<Cond>) -> Cond {
    Cond::All(conds)
}

fn any(conds: Vec<Cond>) -> Cond {
    Cond::Any(conds)
}

fn item(residue: u8, when: Cond) -> RuleItem {
    RuleItem { residue, when }
}

fn even() -> Cond {
    modeq(ones(), 2, 0)
}

fn odd() -> Cond {
    modeq(ones(), 2, 1)
}

const NONE: Clause = Clause {
    r_mod: None,
    r_eq: None,
    r_min: None,
    s_mod: None,
    s_eq: None,
    s_min: None,
};

impl Clause {
    const fn rm(mut self, modulus: u32, value: u32) -> Self {
        self.r_mod = Some((modulus, value));
        self
    }

    const fn req(mut self, value: u32) -> Self {
        self.r_eq = Some(value);
        self
    }

    const fn rmin(mut self, value: u32) -> Self {
        self.r_min = Some(value);
        self
    }

    const fn sm(mut self, modulus: u32, value: u32) -> Self {
        self.s_mod = Some((modulus, value));
        self
    }

    const fn seq(mut self, value: u32) -> Self {
        self.s_eq = Some(value);
        self
    }

    const fn smin(mut self, value: u32) -> Self {
        self.s_min = Some(value);
        self
    }
}

const POW2: [u8; 6] = [1, 2, 4, 8, 7, 5];
const POW5: [u8; 6] = [1, 5, 7, 8, 4, 2];

/// Six items mapping `expr mod 6 == j` to `powers[j]`.
fn power_items(expr: impl Fn() -> Expr, powers: [u8; 6]) -> Vec<RuleItem> {
    (0..6)
        .map(|j| item(powers[j as usize], modeq(expr(), 6, j)))
        .collect()
}

/// Six items splitting on the parity of the count of 1 digits, then on
/// `expr mod 3`. Each map lists `(expr residue, a_n residue)` triples.
fn parity_items(
    expr: impl Fn() -> Expr,
    even_map: [(i64, u8); 3],
    odd_map: [(i64, u8); 3],
) -> Vec<RuleItem> {
    let mut items = Vec::with_capacity(6);
    for (t, residue) in even_map {
        items.push(item(residue, all(vec![even(), modeq(expr(), 3, t)])));
    }
    for (t, residue) in odd_map {
        items.push(item(residue, all(vec![odd(), modeq(expr(), 3, t)])));
    }
    items
}

/// The condition `count("01" with left pad) == 1 and #1 == 1, or
/// count("11") == 1 and #1 == 2`, shared by a few rules.
fn lone_one_block() -> Cond {
    any(vec![
        all(vec![eq(quantity(occ_left("01")), 1), eq(ones(), 1)]),
        all(vec![eq(quantity(occ("11")), 1), eq(ones(), 2)]),
    ])
}

fn build_rules() -> Vec<ClassRule> {
    let mut rules = Vec::with_capacity(33);

    rules.push(ClassRule {
        rule_id: "Ap00",
        hypothesis: "r≡0 (mod 3), s≡0 (mod 6), s≥6",
        predicate: vec![NONE.rm(3, 0).sm(6, 0).smin(6)],
        items: power_items(ones, POW2),
        default_residue: 0,
        forbidden_residues: vec![3, 6],
    });

    rules.push(ClassRule {
        rule_id: "Ap01",
        hypothesis: "r≡0 (mod 6), s≡1 (mod 6); or r≡3 (mod 6), s≡1 (mod 6), s≥7",
        predicate: vec![NONE.rm(6, 0).sm(6, 1), NONE.rm(6, 3).sm(6, 1).smin(7)],
        items: vec![item(1, eq(ones(), 0)), item(3, lone_one_block())],
        default_residue: 0,
        forbidden_residues: vec![2, 4, 5, 6, 7, 8],
    });

    rules.push(ClassRule {
        rule_id: "Ap02",
        hypothesis: "r≡0 (mod 3), s≡2 (mod 6)",
        predicate: vec![NONE.rm(3, 0).sm(6, 2)],
        items: parity_items(
            || {
                lin(&[
                    (1, Quantity::HalfOnes),
                    (1, occ("11")),
                    (-1, occ("21")),
                ])
            },
            [(0, 1), (2, 4), (1, 7)],
            [(2, 2), (0, 5), (1, 8)],
        ),
        default_residue: 0,
        forbidden_residues: vec![3, 6],
    });

    rules.push(ClassRule {
        rule_id: "Ap03",
        hypothesis: "r≡0 (mod 3), s≡3 (mod 6)",
        predicate: vec![NONE.rm(3, 0).sm(6, 3)],
        items: vec![item(1, eq(ones(), 0))],
        default_residue: 0,
        forbidden_residues: vec![2, 3, 4, 5, 6, 7, 8],
    });

    rules.push(ClassRule {
        rule_id: "Ap04",
        hypothesis: "r≡0 (mod 3), s≡4 (mod 6)",
        predicate: vec![NONE.rm(3, 0).sm(6, 4)],
        items: parity_items(
            || lin(&[(1, occ("11")), (-1, occ("21"))]),
            [(0, 1), (1, 4), (2, 7)],
            [(2, 2), (1, 5), (0, 8)],
        ),
        default_residue: 0,
        forbidden_residues: vec![3, 6],
    });

    rules.push(ClassRule {
        rule_id: "Ap05",
        hypothesis: "r≡0 (mod 3), s≡5 (mod 6)",
        predicate: vec![NONE.rm(3, 0).sm(6, 5)],
        items: vec![item(1, eq(ones(), 0)), item(6, lone_one_block())],
        default_residue: 0,
        forbidden_residues: vec![2, 3, 4, 5, 7, 8],
    });

    rules.push(ClassRule {
        rule_id: "Ap16",
        hypothesis: "r=1, s≡0 (mod 6), s≥6",
        predicate: vec![NONE.req(1).sm(6, 0).smin(6)],
        items: parity_items(
            || {
                lin(&[
                    (1, Quantity::HalfOnes),
                    (-1, occ("11")),
                    (1, occ("21")),
                    (1, occ("10")),
                    (1, occ("20")),
                ])
            },
            [(0, 1), (1, 4), (2, 7)],
            [(0, 2), (2, 5), (1, 8)],
        ),
        default_residue: 0,
        forbidden_residues: vec![3, 6],
    });

    rules.push(ClassRule {
        rule_id: "Ap11",
        hypothesis: "r=1, s=1",
        predicate: vec![NONE.req(1).seq(1)],
        items: vec![
            item(
                1,
                all(vec![
                    eq(ones(), 0),
                    modeq(lin(&[(1, Quantity::RunsOfTwos), (-1, Quantity::Lsd)]), 3, 0),
                ]),
            ),
            item(3, all(vec![eq(ones(), 1), eq(quantity(Quantity::Lsd), 1)])),
            item(
                4,
                all(vec![
                    eq(ones(), 0),
                    modeq(lin(&[(1, Quantity::RunsOfTwos), (-1, Quantity::Lsd)]), 3, 2),
                ]),
            ),
            item(6, all(vec![eq(quantity(occ("11")), 1), eq(ones(), 2)])),
            item(
                7,
                all(vec![
                    eq(ones(), 0),
                    modeq(lin(&[(1, Quantity::RunsOfTwos), (-1, Quantity::Lsd)]), 3, 1),
                ]),
            ),
        ],
        default_residue: 0,
        forbidden_residues: vec![2, 5, 8],
    });

    rules.push(ClassRule {
        rule_id: "Ap17",
        hypothesis: "r=1, s≡1 (mod 6), s≥7",
        predicate: vec![NONE.req(1).sm(6, 1).smin(7)],
        items: vec![
            item(1, all(vec![eq(ones(), 0), modeq(quantity(occ("20")), 3, 0)])),
            item(3, all(vec![eq(ones(), 1), eq(quantity(occ("10")), 0)])),
            item(4, all(vec![eq(ones(), 0), modeq(quantity(occ("20")), 3, 1)])),
            item(6, all(vec![eq(quantity(occ("11")), 1), eq(ones(), 2)])),
            item(7, all(vec![eq(ones(), 0), modeq(quantity(occ("20")), 3, 2)])),
        ],
        default_residue: 0,
        forbidden_residues: vec![2, 5, 8],
    });

    rules.push(ClassRule {
        rule_id: "Ap12",
        hypothesis: "r=1, s≡2 (mod 6)",
        predicate: vec![NONE.req(1).sm(6, 2)],
        items: parity_items(
            || {
                lin(&[
                    (1, Quantity::HalfOnes),
                    (-1, occ("11")),
                    (1, occ("21")),
                    (-1, occ("10")),
                    (-1, occ("20")),
                ])
            },
            [(0, 1), (2, 4), (1, 7)],
            [(2, 2), (0, 5), (1, 8)],
        ),
        default_residue: 0,
        forbidden_residues: vec![3, 6],
    });

    rules.push(ClassRule {
        rule_id: "Ap13",
        hypothesis: "r=1, s≡3 (mod 6)",
        predicate: vec![NONE.req(1).sm(6, 3)],
        items: vec![
            item(1, all(vec![eq(ones(), 0), modeq(quantity(occ("20")), 3, 0)])),
            item(
                3,
                any(vec![
                    all(vec![eq(quantity(occ("11")), 1), eq(ones(), 2)]),
                    all(vec![
                        eq(quantity(occ("21")), 1),
                        eq(quantity(occ("11")), 0),
                        eq(quantity(occ("10")), 0),
                        eq(ones(), 1),
                    ]),
                ]),
            ),
            item(4, all(vec![eq(ones(), 0), modeq(quantity(occ("20")), 3, 1)])),
            item(
                6,
                all(vec![
                    eq(quantity(occ("10")), 1),
                    eq(quantity(occ("11")), 0),
                    eq(quantity(occ("21")), 0),
                    eq(ones(), 1),
                ]),
            ),
            item(7, all(vec![eq(ones(), 0), modeq(quantity(occ("20")), 3, 2)])),
        ],
        default_residue: 0,
        forbidden_residues: vec![2, 5, 8],
    });

    rules.push(ClassRule {
        rule_id: "Ap14",
        hypothesis: "r=1, s≡4 (mod 6)",
        predicate: vec![NONE.req(1).sm(6, 4)],
        items: parity_items(
            || lin(&[(1, occ("10")), (1, occ("20"))]),
            [(0, 1), (1, 4), (2, 7)],
            [(2, 2), (1, 5), (0, 8)],
        ),
        default_residue: 0,
        forbidden_residues: vec![3, 6],
    });

    rules.push(ClassRule {
        rule_id: "Ap15",
        hypothesis: "r=1, s≡5 (mod 6)",
        predicate: vec![NONE.req(1).sm(6, 5)],
        items: vec![
            item(1, all(vec![eq(ones(), 0), modeq(quantity(occ("20")), 3, 0)])),
            item(
                3,
                all(vec![
                    any(vec![
                        all(vec![eq(quantity(occ("10")), 1), eq(quantity(occ("21")), 0)]),
                        all(vec![eq(quantity(occ("21")), 1), eq(quantity(occ("10")), 0)]),
                    ]),
                    eq(ones(), 1),
                ]),
            ),
            item(4, all(vec![eq(ones(), 0), modeq(quantity(occ("20")), 3, 1)])),
            item(
                6,
                all(vec![
                    eq(ones(), 1),
                    eq(quantity(occ("10")), 0),
                    eq(quantity(occ("21")), 0),
                ]),
            ),
            item(7, all(vec![eq(ones(), 0), modeq(quantity(occ("20")), 3, 2)])),
        ],
        default_residue: 0,
        forbidden_residues: vec![2, 5, 8],
    });

    rules.push(ClassRule {
        rule_id: "Ap76",
        hypothesis: "r≡1 (mod 3), r≥4, s≡0 (mod 6), s≥6",
        predicate: vec![NONE.rm(3, 1).rmin(4).sm(6, 0).smin(6)],
        items: parity_items(
            || {
                lin(&[
                    (1, Quantity::HalfOnes),
                    (-1, occ("11")),
                    (1, occ("21")),
                ])
            },
            [(0, 1), (1, 4), (2, 7)],
            [(0, 2), (2, 5), (1, 8)],
        ),
        default_residue: 0,
        forbidden_residues: vec![3, 6],
    });

    rules.push(ClassRule {
        rule_id: "Ap71",
        hypothesis: "r≡1 (mod 6), r≥7, s=1",
        predicate: vec![NONE.rm(6, 1).rmin(7).seq(1)],
        items: vec![
            item(
                1,
                all(vec![eq(ones(), 0), modeq(quantity(Quantity::RunsOfTwos), 3, 0)]),
            ),
            item(3, all(vec![eq(ones(), 1), eq(quantity(occ("12")), 0)])),
            item(
                4,
                all(vec![eq(ones(), 0), modeq(quantity(Quantity::RunsOfTwos), 3, 1)]),
            ),
            item(6, all(vec![eq(quantity(occ("11")), 1), eq(ones(), 2)])),
            item(
                7,
                all(vec![eq(ones(), 0), modeq(quantity(Quantity::RunsOfTwos), 3, 2)]),
            ),
        ],
        default_residue: 0,
        forbidden_residues: vec![2, 5, 8],
    });

    rules.push(ClassRule {
        rule_id: "Ap77",
        hypothesis: "r≡1 (mod 6), r≥7, s≡1 (mod 6), s≥7; or r≡4 (mod 6), s≡1 (mod 6)",
        predicate: vec![
            NONE.rm(6, 1).rmin(7).sm(6, 1).smin(7),
            NONE.rm(6, 4).sm(6, 1),
        ],
        items: vec![
            item(1, eq(ones(), 0)),
            item(3, eq(ones(), 1)),
            item(6, all(vec![eq(quantity(occ("11")), 1), eq(ones(), 2)])),
        ],
        default_residue: 0,
        forbidden_residues: vec![2, 4, 5, 7, 8],
    });

    rules.push(ClassRule {
        rule_id: "Ap72",
        hypothesis: "r≡1 (mod 3), r≥4, s≡2 (mod 6)",
        predicate: vec![NONE.rm(3, 1).rmin(4).sm(6, 2)],
        items: parity_items(
            || {
                lin(&[
                    (1, Quantity::Ones),
                    (1, occ("11")),
                    (-1, occ("21")),
                ])
            },
            [(0, 1), (1, 4), (2, 7)],
            [(1, 5), (0, 8), (2, 2)],
        ),
        default_residue: 0,
        forbidden_residues: vec![3, 6],
    });

    rules.push(ClassRule {
        rule_id: "Ap73",
        hypothesis: "r≡1 (mod 3), r≥4, s≡3 (mod 6)",
        predicate: vec![NONE.rm(3, 1).rmin(4).sm(6, 3)],
        items: vec![
            item(1, eq(ones(), 0)),
            item(
                3,
                any(vec![
                    all(vec![eq(quantity(occ("11")), 1), eq(ones(), 2)]),
                    all(vec![
                        eq(quantity(occ("21")), 1),
                        eq(quantity(occ("11")), 0),
                        eq(ones(), 1),
                    ]),
                ]),
            ),
        ],
        default_residue: 0,
        forbidden_residues: vec![2, 4, 5, 6, 7, 8],
    });

    rules.push(ClassRule {
        rule_id: "Ap74",
        hypothesis: "r≡1 (mod 3), r≥4, s≡4 (mod 6)",
        predicate: vec![NONE.rm(3, 1).rmin(4).sm(6, 4)],
        items: vec![item(1, even()), item(8, odd())],
        default_residue: 0,
        forbidden_residues: vec![2, 3, 4, 5, 6, 7],
    });

    rules.push(ClassRule {
        rule_id: "Ap75",
        hypothesis: "r≡1 (mod 3), r≥4, s≡5 (mod 6)",
        predicate: vec![NONE.rm(3, 1).rmin(4).sm(6, 5)],
        items: vec![
            item(1, eq(ones(), 0)),
            item(3, all(vec![eq(quantity(occ("21")), 1), eq(ones(), 1)])),
            item(6, all(vec![eq(quantity(occ_left("01")), 1), eq(ones(), 1)])),
        ],
        default_residue: 0,
        forbidden_residues: vec![2, 4, 5, 7, 8],
    });

    rules.push(ClassRule {
        rule_id: "Ap26",
        hypothesis: "r≡2 (mod 3), s≡0 (mod 6), s≥6",
        predicate: vec![NONE.rm(3, 2).sm(6, 0).smin(6)],
        items: parity_items(
            || {
                lin(&[
                    (1, Quantity::HalfOnes),
                    (1, occ("11")),
                    (-1, occ("21")),
                ])
            },
            [(0, 1), (1, 4), (2, 7)],
            [(0, 2), (2, 5), (1, 8)],
        ),
        default_residue: 0,
        forbidden_residues: vec![3, 6],
    });

    rules.push(ClassRule {
        rule_id: "Ap27",
        hypothesis: "r≡2 (mod 6), s≡1 (mod 6); or r≡5 (mod 6), s≡1 (mod 6), s≥7",
        predicate: vec![NONE.rm(6, 2).sm(6, 1), NONE.rm(6, 5).sm(6, 1).smin(7)],
        items: vec![
            item(1, eq(ones(), 0)),
            item(3, all(vec![eq(quantity(occ_left("01")), 1), eq(ones(), 1)])),
            item(6, all(vec![eq(quantity(occ("21")), 1), eq(ones(), 1)])),
        ],
        default_residue: 0,
        forbidden_residues: vec![2, 4, 5, 7, 8],
    });

    rules.push(ClassRule {
        rule_id: "Ap22",
        hypothesis: "r≡2 (mod 3), s≡2 (mod 6)",
        predicate: vec![NONE.rm(3, 2).sm(6, 2)],
        items: power_items(ones, POW5),
        default_residue: 0,
        forbidden_residues: vec![3, 6],
    });

    rules.push(ClassRule {
        rule_id: "Ap23",
        hypothesis: "r≡2 (mod 3), s≡3 (mod 6)",
        predicate: vec![NONE.rm(3, 2).sm(6, 3)],
        items: vec![
            item(1, eq(ones(), 0)),
            item(
                6,
                any(vec![
                    all(vec![eq(quantity(occ("11")), 1), eq(ones(), 2)]),
                    all(vec![
                        eq(quantity(occ("21")), 1),
                        eq(quantity(occ("11")), 0),
                        eq(ones(), 1),
                    ]),
                ]),
            ),
        ],
        default_residue: 0,
        forbidden_residues: vec![2, 3, 4, 5, 7, 8],
    });

    rules.push(ClassRule {
        rule_id: "Ap24",
        hypothesis: "r≡2 (mod 3), s≡4 (mod 6)",
        predicate: vec![NONE.rm(3, 2).sm(6, 4)],
        items: parity_items(
            || lin(&[(1, occ("11")), (-1, occ("21"))]),
            [(0, 1), (2, 4), (1, 7)],
            [(1, 2), (2, 5), (0, 8)],
        ),
        default_residue: 0,
        forbidden_residues: vec![3, 6],
    });

    rules.push(ClassRule {
        rule_id: "Ap25",
        hypothesis: "r≡2 (mod 3), s≡5 (mod 6)",
        predicate: vec![NONE.rm(3, 2).sm(6, 5)],
        items: vec![
            item(1, eq(ones(), 0)),
            item(3, all(vec![eq(quantity(occ("11")), 1), eq(ones(), 2)])),
            item(6, eq(ones(), 1)),
        ],
        default_residue: 0,
        forbidden_residues: vec![2, 4, 5, 7, 8],
    });

    rules.push(ClassRule {
        rule_id: "Ap31",
        hypothesis: "r≡3 (mod 6), s=1",
        predicate: vec![NONE.rm(6, 3).seq(1)],
        items: vec![
            item(
                1,
                all(vec![eq(ones(), 0), modeq(quantity(Quantity::RunsOfTwos), 3, 0)]),
            ),
            item(
                3,
                any(vec![
                    all(vec![
                        eq(ones(), 1),
                        eq(quantity(occ("12")), 0),
                        eq(quantity(occ("21")), 0),
                    ]),
                    all(vec![eq(quantity(occ("11")), 1), eq(ones(), 2)]),
                ]),
            ),
            item(
                4,
                all(vec![eq(ones(), 0), modeq(quantity(Quantity::RunsOfTwos), 3, 1)]),
            ),
            item(6, all(vec![eq(quantity(occ("212")), 1), eq(ones(), 1)])),
            item(
                7,
                all(vec![eq(ones(), 0), modeq(quantity(Quantity::RunsOfTwos), 3, 2)]),
            ),
        ],
        default_residue: 0,
        forbidden_residues: vec![2, 5, 8],
    });

    rules.push(ClassRule {
        rule_id: "Ap51",
        hypothesis: "r≡5 (mod 6), s=1",
        predicate: vec![NONE.rm(6, 5).seq(1)],
        items: vec![
            item(
                1,
                all(vec![eq(ones(), 0), modeq(quantity(Quantity::RunsOfTwos), 3, 0)]),
            ),
            item(
                3,
                all(vec![
                    eq(ones(), 1),
                    eq(quantity(occ_left("012")), 0),
                    eq(quantity(occ_right("210")), 0),
                ]),
            ),
            item(
                4,
                all(vec![eq(ones(), 0), modeq(quantity(Quantity::RunsOfTwos), 3, 1)]),
            ),
            item(6, all(vec![eq(quantity(occ_right("210")), 1), eq(ones(), 1)])),
            item(
                7,
                all(vec![eq(ones(), 0), modeq(quantity(Quantity::RunsOfTwos), 3, 2)]),
            ),
        ],
        default_residue: 0,
        forbidden_residues: vec![2, 5, 8],
    });

    rules.push(ClassRule {
        rule_id: "Ap70",
        hypothesis: "r≡1 (mod 6), r≥7, s=0",
        predicate: vec![NONE.rm(6, 1).rmin(7).seq(0)],
        items: power_items(
            || {
                lin(&[
                    (1, Quantity::DigitSum),
                    (-2, occ("11")),
                    (2, occ("21")),
                    (2, occ("12")),
                    (-2, occ("22")),
                ])
            },
            POW2,
        ),
        default_residue: 0,
        forbidden_residues: vec![3, 6],
    });

    rules.push(ClassRule {
        rule_id: "Ap20",
        hypothesis: "r≡2 (mod 6), s=0",
        predicate: vec![NONE.rm(6, 2).seq(0)],
        items: vec![
            item(
                1,
                all(vec![eq(twos(), 0), even(), modeq(quantity(Quantity::RunsOfOnes), 3, 0)]),
            ),
            item(
                2,
                all(vec![eq(twos(), 0), odd(), modeq(quantity(Quantity::RunsOfOnes), 3, 1)]),
            ),
            item(
                3,
                all(vec![eq(quantity(occ_left("02")), 1), eq(twos(), 1), odd()]),
            ),
            item(
                4,
                all(vec![eq(twos(), 0), even(), modeq(quantity(Quantity::RunsOfOnes), 3, 2)]),
            ),
            item(
                5,
                all(vec![eq(twos(), 0), odd(), modeq(quantity(Quantity::RunsOfOnes), 3, 2)]),
            ),
            item(
                6,
                all(vec![eq(quantity(occ_left("02")), 1), eq(twos(), 1), even()]),
            ),
            item(
                7,
                all(vec![eq(twos(), 0), even(), modeq(quantity(Quantity::RunsOfOnes), 3, 1)]),
            ),
            item(
                8,
                all(vec![eq(twos(), 0), odd(), modeq(quantity(Quantity::RunsOfOnes), 3, 0)]),
            ),
        ],
        default_residue: 0,
        forbidden_residues: vec![],
    });

    rules.push(ClassRule {
        rule_id: "Ap30",
        hypothesis: "r≡3 (mod 6), s=0",
        predicate: vec![NONE.rm(6, 3).seq(0)],
        items: power_items(ones, POW2),
        default_residue: 0,
        forbidden_residues: vec![3, 6],
    });

    rules.push(ClassRule {
        rule_id: "Ap40",
        hypothesis: "r≡4 (mod 6), s=0",
        predicate: vec![NONE.rm(6, 4).seq(0)],
        items: {
            let mut items: Vec<RuleItem> = (0..6)
                .map(|j| {
                    item(
                        POW2[j as usize],
                        all(vec![
                            eq(twos(), 0),
                            modeq(
                                lin(&[(2, Quantity::RunsOfOnes), (-1, Quantity::Ones)]),
                                6,
                                j,
                            ),
                        ]),
                    )
                })
                .collect();
            items.push(item(
                3,
                all(vec![eq(quantity(occ("12")), 1), eq(twos(), 1), odd()]),
            ));
            items.push(item(
                6,
                all(vec![eq(quantity(occ("12")), 1), eq(twos(), 1), even()]),
            ));
            items
        },
        default_residue: 0,
        forbidden_residues: vec![],
    });

    rules.push(ClassRule {
        rule_id: "Ap50",
        hypothesis: "r≡5 (mod 6), s=0",
        predicate: vec![NONE.rm(6, 5).seq(0)],
        items: power_items(
            || {
                lin(&[
                    (1, Quantity::WeightedSum),
                    (2, occ("11")),
                    (-2, occ("21")),
                    (-2, occ("12")),
                    (2, occ("22")),
                ])
            },
            POW2,
        ),
        default_residue: 0,
        forbidden_residues: vec![3, 6],
    });

    assert_eq!(rules.len(), 33, "one rule per supported class");
    rules
}
