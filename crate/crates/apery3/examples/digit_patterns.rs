//! Explores the digit statistics the residue-class rules are built from.
//!
//! Run with: `cargo run --example digit_patterns`

use apery3::{Base3Expansion, Boundary};

fn main() {
    let expansion = Base3Expansion::from_msd_str("21102012").expect("valid digits");
    println!("digits (msd first): {}", expansion.to_msd_string());
    println!("value: {}", expansion.value());

    let stats = expansion.digit_stats();
    for d in 0..3u8 {
        println!(
            "digit {d}: {} occurrences, {} maximal runs",
            stats.count_of_digit(d),
            stats.maximal_runs(d)
        );
    }
    println!("digit sum: {}", stats.digit_sum());
    println!("weighted sum (#1 - 2*#2): {}", stats.weighted_sum());

    for pattern in ["11", "21", "10", "20", "212"] {
        println!(
            "occurrences of {pattern}: {} bare, {} with a virtual leading 0, {} with a virtual trailing 0",
            expansion.count_pattern(pattern, Boundary::None).unwrap(),
            expansion.count_pattern(pattern, Boundary::PadLeft).unwrap(),
            expansion.count_pattern(pattern, Boundary::PadRight).unwrap(),
        );
    }
}
