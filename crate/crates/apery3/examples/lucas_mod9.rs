//! Prints Pascal's triangle mod 9 computed digit-wise, and checks one row
//! against the exact binomial coefficients.
//!
//! Run with: `cargo run --example lucas_mod9`

use apery3::lucas::binom_mod9;
use apery3::oracle::binom_row;

fn main() {
    for n in 0..18u64 {
        let row: Vec<String> = (0..=n).map(|k| binom_mod9(n, k).to_string()).collect();
        println!("{n:>2}: {}", row.join(" "));
    }

    let n = 17;
    for (k, exact) in binom_row(n).iter().enumerate() {
        let digitwise = u64::from(binom_mod9(n, k as u64));
        let reduced: u64 = (exact % 9u64).try_into().unwrap();
        assert_eq!(digitwise, reduced, "C({n},{k})");
    }
    println!("row {n} agrees with the exact coefficients");
}
