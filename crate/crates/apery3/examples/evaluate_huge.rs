//! Evaluates `a_n mod 9` for an index with a million base-3 digits.
//!
//! Run with: `cargo run --release --example evaluate_huge`

use std::time::Instant;

use apery3::mod9eval::{apery_mod3, apery_mod9};
use apery3::AperyParams;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let p = AperyParams::new(2, 1).expect("valid parameters");
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let len = 1_000_000;
    let mut digits: Vec<u8> = (0..len).map(|_| rng.gen_range(0..3)).collect();
    *digits.last_mut().unwrap() = rng.gen_range(1..3);

    let head: String = digits.iter().rev().take(24).map(|d| char::from(b'0' + d)).collect();
    println!("index: 3:{head}... ({len} digits)");

    let start = Instant::now();
    let mod9 = apery_mod9(&digits, &p);
    let elapsed = start.elapsed();
    let mod3 = apery_mod3(&digits, &p);

    println!("a_n(2,1) mod 9 = {mod9}   (computed in {elapsed:.2?})");
    println!("a_n(2,1) mod 3 = {mod3}");
    assert_eq!(mod9.value() % 3, mod3.value());
}
