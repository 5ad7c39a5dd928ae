//! Looks up the residue-class rule for several parameter pairs and applies
//! it to a few indices.
//!
//! Run with: `cargo run --example classify_params`

use apery3::{classify_params, to_base3, AperyParams};

fn main() {
    for (r, s) in [(2, 1), (2, 2), (4, 2), (1, 3), (7, 0), (1, 0), (6, 0)] {
        let p = AperyParams::new(r, s).expect("valid parameters");
        match classify_params(&p) {
            Ok(rule) => {
                println!("({r}, {s}) -> {}  [{}]", rule.rule_id, rule.hypothesis);
                let residues: Vec<String> = (0..12u64)
                    .map(|n| rule.residue_for(&to_base3(n)).to_string())
                    .collect();
                println!("         a_0..a_11 mod 9: {}", residues.join(" "));
            }
            Err(err) => println!("({r}, {s}) -> {err}"),
        }
    }
}
