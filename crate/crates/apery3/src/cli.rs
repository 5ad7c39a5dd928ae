//! Command-line front end.
//!
//! Records go to stdout as JSON lines; diagnostics go to stderr. Exit codes:
//! 0 on success, 1 when a verification found a mismatch, 2 when the request
//! itself was invalid.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use crate::base3::{to_base3, to_base3_big, Base3Expansion};
use crate::classifier::{classify_params, supported_classes, ClassRule};
use crate::mod9eval::{apery_mod3, apery_mod9, bare_product_mod9, f_term, is_gessel_class};
use crate::oracle::{apery_mod, apery_mod_sweep, AperyParams};

#[derive(Parser)]
#[command(
    name = "apery3",
    version,
    about = "Residues of binomial-power sums mod 9, from base-3 digits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one residue
    Eval(EvalArgs),
    /// Sweep a grid and compare independent evaluation routes
    Verify(VerifyArgs),
    /// Print a residue table for one parameter pair
    Table(TableArgs),
    /// Time the digit evaluator on random digit strings
    Bench(BenchArgs),
    /// List the residue-class rules as JSON
    Classes,
}

#[derive(Args)]
struct EvalArgs {
    /// Index n: decimal, or "3:" followed by base-3 digits (most significant first)
    #[arg(long)]
    n: String,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    s: u32,
    #[arg(long, value_enum, default_value_t = Method::Theorem)]
    method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Digit-wise evaluation mod 9
    Theorem,
    /// Exact termwise sum reduced mod 9 (bounded n)
    Oracle,
    /// Residue-class rule lookup mod 9
    Classify,
    /// Digit-wise evaluation mod 3
    Mod3,
}

#[derive(Args)]
struct VerifyArgs {
    /// Indices 0..max-n are checked (exclusive)
    #[arg(long, default_value_t = 729)]
    max_n: u64,
    /// r values: inclusive range "A..B" or comma list (default 1..6)
    #[arg(long)]
    r: Option<String>,
    /// s values: inclusive range "A..B" or comma list (default 0..6)
    #[arg(long)]
    s: Option<String>,
    /// Comma-separated: theorem-vs-oracle, classify-vs-theorem, gessel
    #[arg(long, default_value = "theorem-vs-oracle")]
    modes: String,
}

#[derive(Args)]
struct TableArgs {
    /// Largest index in the table (inclusive)
    #[arg(long)]
    max_n: u64,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    s: u32,
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

#[derive(Args)]
struct BenchArgs {
    /// Length of the random digit strings
    #[arg(long)]
    digit_count: usize,
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    s: u32,
    /// Also evaluate the exact sum and compare (needs digit-count <= 8)
    #[arg(long)]
    compare_oracle: bool,
}

enum Failure {
    /// The request could not be served as stated.
    Usage(String),
    /// A comparison found disagreement.
    Check(String),
}

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(msg.to_string())
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Table(args) => cmd_table(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Classes => cmd_classes(),
    }
}

fn params(r: u32, s: u32) -> Result<AperyParams, Failure> {
    AperyParams::new(r, s).map_err(usage)
}

/// A parsed index: its expansion plus the form echoed back in records.
struct IndexInput {
    display: String,
    expansion: Base3Expansion,
}

fn parse_index(raw: &str) -> Result<IndexInput, Failure> {
    if let Some(msd) = raw.strip_prefix("3:") {
        let expansion = Base3Expansion::from_msd_str(msd).map_err(usage)?;
        Ok(IndexInput {
            display: format!("3:{}", expansion.to_msd_string()),
            expansion,
        })
    } else {
        let value = BigUint::parse_bytes(raw.as_bytes(), 10).ok_or_else(|| {
            usage(format!(
                "n must be a decimal integer or a 3:-prefixed base-3 digit string, got {raw:?}"
            ))
        })?;
        Ok(IndexInput {
            display: value.to_string(),
            expansion: to_base3_big(&value),
        })
    }
}

#[derive(Serialize)]
struct EvalRecord<'a> {
    n: &'a str,
    digits_msd: String,
    r: u32,
    s: u32,
    method: &'a str,
    residue: u8,
    modulus: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    rule_id: Option<&'a str>,
}

fn cmd_eval(args: EvalArgs) -> Result<(), Failure> {
    let p = params(args.r, args.s)?;
    let index = parse_index(&args.n)?;
    let digits = index.expansion.digits();
    let (residue, modulus, rule_id) = match args.method {
        Method::Theorem => (apery_mod9(digits, &p).value(), 9, None),
        Method::Mod3 => (apery_mod3(digits, &p).value(), 3, None),
        Method::Oracle => {
            let n: u64 = index
                .expansion
                .value()
                .try_into()
                .map_err(|_| usage(format!("n = {} does not fit the exact oracle", index.display)))?;
            let residue = apery_mod(&p, n, 9).map_err(usage)?;
            (residue as u8, 9, None)
        }
        Method::Classify => {
            let rule = classify_params(&p).map_err(usage)?;
            (rule.residue_for(&index.expansion).value(), 9, Some(rule.rule_id))
        }
    };
    let method = match args.method {
        Method::Theorem => "theorem",
        Method::Oracle => "oracle",
        Method::Classify => "classify",
        Method::Mod3 => "mod3",
    };
    let record = EvalRecord {
        n: &index.display,
        digits_msd: index.expansion.to_msd_string(),
        r: args.r,
        s: args.s,
        method,
        residue,
        modulus,
        rule_id,
    };
    println!("{}", serde_json::to_string(&record).expect("record serializes"));
    Ok(())
}

/// Inclusive "A..B" range or comma list of unsigned values.
fn parse_spec(spec: &str) -> Result<Vec<u32>, Failure> {
    let parse_one = |token: &str| {
        token
            .trim()
            .parse::<u32>()
            .map_err(|_| usage(format!("invalid value {token:?} in range spec {spec:?}")))
    };
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo = parse_one(lo)?;
        let hi = parse_one(hi)?;
        if lo > hi {
            return Err(usage(format!("empty range spec {spec:?}")));
        }
        Ok((lo..=hi).collect())
    } else {
        spec.split(',').map(parse_one).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    TheoremVsOracle,
    ClassifyVsTheorem,
    Gessel,
}

fn parse_modes(spec: &str) -> Result<Vec<Mode>, Failure> {
    spec.split(',')
        .map(|token| match token.trim() {
            "theorem-vs-oracle" => Ok(Mode::TheoremVsOracle),
            "classify-vs-theorem" => Ok(Mode::ClassifyVsTheorem),
            "gessel" => Ok(Mode::Gessel),
            other => Err(usage(format!("unknown mode {other:?}"))),
        })
        .collect()
}

#[derive(Serialize, PartialEq, Eq, PartialOrd, Ord)]
struct Mismatch {
    n: u64,
    r: u32,
    s: u32,
    expected: u8,
    got: u8,
}

#[derive(Serialize)]
struct VerifySummary {
    mode: &'static str,
    max_n: u64,
    param_pairs: usize,
    checks: u64,
    mismatches: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped_pairs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    forbidden_hits: Option<u64>,
    first_mismatch: Option<Mismatch>,
}

/// Tracks mismatches, keeping the one with the smallest `(n, r, s)`.
#[derive(Default)]
struct MismatchTracker {
    count: u64,
    first: Option<Mismatch>,
}

impl MismatchTracker {
    fn record(&mut self, candidate: Mismatch) {
        self.count += 1;
        let smaller = self
            .first
            .as_ref()
            .map_or(true, |first| (candidate.n, candidate.r, candidate.s) < (first.n, first.r, first.s));
        if smaller {
            self.first = Some(candidate);
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let modes = parse_modes(&args.modes)?;
    let r_given = args.r.is_some();
    let s_given = args.s.is_some();
    let r_values = parse_spec(args.r.as_deref().unwrap_or("1..6"))?;
    let s_values = parse_spec(args.s.as_deref().unwrap_or("0..6"))?;
    let mut failed = false;

    for mode in modes {
        let summary = match mode {
            Mode::TheoremVsOracle => verify_theorem_vs_oracle(args.max_n, &r_values, &s_values)?,
            Mode::ClassifyVsTheorem => verify_classify_vs_theorem(args.max_n, &r_values, &s_values)?,
            Mode::Gessel => {
                let pairs: Vec<(u32, u32)> = if r_given || s_given {
                    r_values
                        .iter()
                        .flat_map(|&r| s_values.iter().map(move |&s| (r, s)))
                        .collect()
                } else {
                    vec![(2, 2), (4, 4), (3, 3), (5, 2)]
                };
                verify_gessel(args.max_n, &pairs)?
            }
        };
        failed |= summary.mismatches > 0 || summary.forbidden_hits.unwrap_or(0) > 0;
        println!("{}", serde_json::to_string(&summary).expect("summary serializes"));
    }
    if failed {
        return Err(Failure::Check("verification found mismatches".to_string()));
    }
    Ok(())
}

fn grid(r_values: &[u32], s_values: &[u32]) -> Result<Vec<AperyParams>, Failure> {
    let mut out = Vec::with_capacity(r_values.len() * s_values.len());
    for &r in r_values {
        for &s in s_values {
            out.push(params(r, s)?);
        }
    }
    Ok(out)
}

fn verify_theorem_vs_oracle(
    max_n: u64,
    r_values: &[u32],
    s_values: &[u32],
) -> Result<VerifySummary, Failure> {
    let pairs = grid(r_values, s_values)?;
    let ns: Vec<u64> = (0..max_n).collect();
    let oracle = apery_mod_sweep(&pairs, &ns, 9).map_err(usage)?;
    let mut checks = 0u64;
    let mut tracker = MismatchTracker::default();
    for (i, p) in pairs.iter().enumerate() {
        for (j, &n) in ns.iter().enumerate() {
            let theorem = apery_mod9(to_base3(n).digits(), p).value();
            let expected = oracle[i][j] as u8;
            checks += 1;
            if theorem != expected {
                tracker.record(Mismatch {
                    n,
                    r: p.r(),
                    s: p.s(),
                    expected,
                    got: theorem,
                });
            }
        }
    }
    Ok(VerifySummary {
        mode: "theorem-vs-oracle",
        max_n,
        param_pairs: pairs.len(),
        checks,
        mismatches: tracker.count,
        skipped_pairs: None,
        forbidden_hits: None,
        first_mismatch: tracker.first,
    })
}

fn verify_classify_vs_theorem(
    max_n: u64,
    r_values: &[u32],
    s_values: &[u32],
) -> Result<VerifySummary, Failure> {
    let pairs = grid(r_values, s_values)?;
    let mut checks = 0u64;
    let mut skipped = 0usize;
    let mut forbidden_hits = 0u64;
    let mut covered = 0usize;
    let mut tracker = MismatchTracker::default();
    for p in &pairs {
        let rule: &ClassRule = match classify_params(p) {
            Ok(rule) => rule,
            Err(_) => {
                skipped += 1;
                continue;
            }
        };
        covered += 1;
        for n in 0..max_n {
            let expansion = to_base3(n);
            let theorem = apery_mod9(expansion.digits(), p).value();
            let by_rule = rule.residue_for(&expansion).value();
            checks += 1;
            if rule.forbidden_residues.contains(&theorem) {
                forbidden_hits += 1;
            }
            if by_rule != theorem {
                tracker.record(Mismatch {
                    n,
                    r: p.r(),
                    s: p.s(),
                    expected: theorem,
                    got: by_rule,
                });
            }
        }
    }
    Ok(VerifySummary {
        mode: "classify-vs-theorem",
        max_n,
        param_pairs: covered,
        checks,
        mismatches: tracker.count,
        skipped_pairs: Some(skipped),
        forbidden_hits: Some(forbidden_hits),
        first_mismatch: tracker.first,
    })
}

fn verify_gessel(max_n: u64, pairs: &[(u32, u32)]) -> Result<VerifySummary, Failure> {
    let mut checks = 0u64;
    let mut tracker = MismatchTracker::default();
    for &(r, s) in pairs {
        let p = params(r, s)?;
        if !is_gessel_class(&p) {
            return Err(usage(format!(
                "(r, s) = ({r}, {s}) is not a bare-product class; its pair corrections do not vanish"
            )));
        }
        for a in 0..3u8 {
            for b in 0..3u8 {
                checks += 1;
                let f = f_term(a, b, &p).value();
                if f != 0 {
                    tracker.record(Mismatch {
                        n: u64::from(a) + 3 * u64::from(b),
                        r,
                        s,
                        expected: 0,
                        got: f,
                    });
                }
            }
        }
        for n in 0..max_n {
            let expansion = to_base3(n);
            let full = apery_mod9(expansion.digits(), &p).value();
            let bare = bare_product_mod9(expansion.digits(), &p).value();
            checks += 1;
            if full != bare {
                tracker.record(Mismatch {
                    n,
                    r,
                    s,
                    expected: full,
                    got: bare,
                });
            }
        }
    }
    Ok(VerifySummary {
        mode: "gessel",
        max_n,
        param_pairs: pairs.len(),
        checks,
        mismatches: tracker.count,
        skipped_pairs: None,
        forbidden_hits: None,
        first_mismatch: tracker.first,
    })
}

#[derive(Serialize)]
struct TableRow<'a> {
    n: u64,
    digits_msd: String,
    mod9: u8,
    mod3: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    rule_id: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mod9_by_pattern: Option<u8>,
}

fn cmd_table(args: TableArgs) -> Result<(), Failure> {
    let p = params(args.r, args.s)?;
    let rule = classify_params(&p).ok();
    if args.format == Format::Csv {
        println!("n,digits_msd,mod9,mod3,rule_id,mod9_by_pattern");
    }
    for n in 0..=args.max_n {
        let expansion = to_base3(n);
        let row = TableRow {
            n,
            digits_msd: expansion.to_msd_string(),
            mod9: apery_mod9(expansion.digits(), &p).value(),
            mod3: apery_mod3(expansion.digits(), &p).value(),
            rule_id: rule.map(|r| r.rule_id),
            mod9_by_pattern: rule.map(|r| r.residue_for(&expansion).value()),
        };
        match args.format {
            Format::Jsonl => {
                println!("{}", serde_json::to_string(&row).expect("row serializes"))
            }
            Format::Csv => println!(
                "{},{},{},{},{},{}",
                row.n,
                row.digits_msd,
                row.mod9,
                row.mod3,
                row.rule_id.unwrap_or(""),
                row.mod9_by_pattern
                    .map_or(String::new(), |v| v.to_string()),
            ),
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct BenchRecord {
    digit_count: usize,
    trials: usize,
    seed: u64,
    r: u32,
    s: u32,
    mean_ns: u64,
    min_ns: u64,
    residue: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_match: Option<bool>,
}

fn cmd_bench(args: BenchArgs) -> Result<(), Failure> {
    use rand::Rng;
    use rand::SeedableRng;

    if args.digit_count == 0 {
        return Err(usage("digit-count must be at least 1"));
    }
    if args.trials == 0 {
        return Err(usage("trials must be at least 1"));
    }
    let p = params(args.r, args.s)?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(args.seed);
    let mut digits: Vec<u8> = (0..args.digit_count).map(|_| rng.gen_range(0..3)).collect();
    let last = digits.last_mut().expect("digit_count is positive");
    *last = rng.gen_range(1..3);

    let mut total_ns = 0u64;
    let mut min_ns = u64::MAX;
    let mut residue = 0u8;
    for _ in 0..args.trials {
        let start = Instant::now();
        residue = apery_mod9(std::hint::black_box(&digits), &p).value();
        let elapsed = start.elapsed().as_nanos() as u64;
        total_ns += elapsed;
        min_ns = min_ns.min(elapsed);
    }

    let oracle_match = if args.compare_oracle {
        if args.digit_count > 8 {
            return Err(usage(
                "oracle comparison needs digit-count <= 8 so the index fits the exact bound",
            ));
        }
        let n = digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * 3 + u64::from(d));
        Some(apery_mod(&p, n, 9).map_err(usage)? as u8 == residue)
    } else {
        None
    };

    let record = BenchRecord {
        digit_count: args.digit_count,
        trials: args.trials,
        seed: args.seed,
        r: args.r,
        s: args.s,
        mean_ns: total_ns / args.trials as u64,
        min_ns,
        residue,
        oracle_match,
    };
    println!("{}", serde_json::to_string(&record).expect("record serializes"));
    if oracle_match == Some(false) {
        return Err(Failure::Check(
            "digit evaluation disagrees with the exact oracle".to_string(),
        ));
    }
    Ok(())
}

fn cmd_classes() -> Result<(), Failure> {
    for rule in supported_classes() {
        println!("{}", serde_json::to_string(rule).expect("rule serializes"));
    }
    Ok(())
}
