//! Tabulates residues for one parameter pair, comparing the digit evaluator
//! with the residue-class rule at every index.
//!
//! Run with: `cargo run --example residue_table`

use apery3::mod9eval::{apery_mod3, apery_mod9};
use apery3::{classify_params, to_base3, AperyParams};

fn main() {
    let p = AperyParams::new(2, 1).expect("valid parameters");
    let rule = classify_params(&p).expect("(2, 1) is covered");
    println!("rule {} [{}]", rule.rule_id, rule.hypothesis);
    println!("{:>4}  {:>8}  mod9  mod3  by-rule", "n", "digits");

    for n in 0..=30u64 {
        let e = to_base3(n);
        let mod9 = apery_mod9(e.digits(), &p);
        let mod3 = apery_mod3(e.digits(), &p);
        let by_rule = rule.residue_for(&e);
        assert_eq!(mod9, by_rule, "routes disagree at n = {n}");
        println!(
            "{n:>4}  {:>8}  {:>4}  {:>4}  {:>7}",
            e.to_msd_string(),
            mod9.value(),
            mod3.value(),
            by_rule.value()
        );
    }
}
