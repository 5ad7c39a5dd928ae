//! Cross-checks the digit evaluator against the termwise oracle over a grid
//! of parameters and indices.
//!
//! Run with: `cargo run --example verify_grid`

use apery3::mod9eval::apery_mod9;
use apery3::oracle::apery_mod_sweep;
use apery3::{to_base3, AperyParams};

fn main() {
    let mut grid = Vec::new();
    for r in 1..=6u32 {
        for s in 0..=6u32 {
            grid.push(AperyParams::new(r, s).expect("valid parameters"));
        }
    }
    let ns: Vec<u64> = (0..243).collect();

    let oracle = apery_mod_sweep(&grid, &ns, 9).expect("grid within oracle bounds");
    let mut mismatches = 0u64;
    for (i, p) in grid.iter().enumerate() {
        for (j, &n) in ns.iter().enumerate() {
            let digitwise = u64::from(apery_mod9(to_base3(n).digits(), p).value());
            if digitwise != oracle[i][j] {
                mismatches += 1;
                eprintln!(
                    "mismatch at n={n}, (r,s)=({},{}): digits say {digitwise}, oracle says {}",
                    p.r(),
                    p.s(),
                    oracle[i][j]
                );
            }
        }
    }

    let checks = grid.len() * ns.len();
    println!("{checks} residues compared, {mismatches} mismatches");
    if mismatches > 0 {
        std::process::exit(1);
    }
}
