//! Broad sweeps of the residue-class table: every covered parameter pair in
//! a grid is checked against the digit evaluator, coverage is checked to be
//! disjoint, and the serialized table is checked for shape.

use std::collections::BTreeSet;

use apery3::base3::to_base3;
use apery3::classifier::{classify_params, supported_classes};
use apery3::mod9eval::apery_mod9;
use apery3::oracle::AperyParams;

fn params(r: u32, s: u32) -> AperyParams {
    AperyParams::new(r, s).unwrap()
}

#[test]
fn every_covered_pair_in_the_grid_matches_the_digit_evaluator() {
    let mut checked_rules = BTreeSet::new();
    let mut pairs = 0u32;
    for r in 1..=19u32 {
        for s in 0..=19u32 {
            let p = params(r, s);
            let rule = match classify_params(&p) {
                Ok(rule) => rule,
                Err(_) => continue,
            };
            checked_rules.insert(rule.rule_id);
            pairs += 1;
            for n in 0..729u64 {
                let expansion = to_base3(n);
                let theorem = apery_mod9(expansion.digits(), &p).value();
                assert_eq!(
                    rule.residue_for(&expansion).value(),
                    theorem,
                    "rule {} at n={n}, ({r},{s})",
                    rule.rule_id
                );
                assert!(
                    !rule.forbidden_residues.contains(&theorem),
                    "forbidden residue {theorem} at n={n}, ({r},{s})"
                );
            }
        }
    }
    assert_eq!(checked_rules.len(), supported_classes().len());
    assert_eq!(pairs, 19 * 20 - 1 - 3, "grid minus (1,0) and r≡0 (mod 6), s=0");
}

#[test]
fn deep_sweep_of_boundary_sensitive_rules() {
    // Rules whose items read padded or three-digit patterns, swept far
    // enough that the patterns occur in many alignments, plus the s = 0 and
    // s = 1 families at shifted r values (their criterion-level shift lands
    // in a different class, so they get their depth here).
    let pairs = [
        (5, 1),
        (11, 1),
        (3, 1),
        (9, 1),
        (13, 1),
        (2, 0),
        (8, 0),
        (4, 0),
        (10, 0),
        (5, 0),
        (11, 0),
        (7, 0),
        (13, 0),
        (3, 0),
        (9, 0),
        (14, 1),
        (10, 7),
        (1, 8),
        (2, 13),
    ];
    for (r, s) in pairs {
        let p = params(r, s);
        let rule = classify_params(&p).unwrap();
        for n in 0..6561u64 {
            let expansion = to_base3(n);
            assert_eq!(
                rule.residue_for(&expansion).value(),
                apery_mod9(expansion.digits(), &p).value(),
                "rule {} at n={n}, ({r},{s})",
                rule.rule_id
            );
        }
    }
}

#[test]
fn coverage_is_disjoint_across_a_wide_grid() {
    let rules = supported_classes();
    for r in 1..=30u32 {
        for s in 0..=30u32 {
            let matching: Vec<&str> = rules
                .iter()
                .filter(|rule| rule.matches(r, s))
                .map(|rule| rule.rule_id)
                .collect();
            if (r == 1 && s == 0) || (r % 6 == 0 && s == 0) {
                assert!(matching.is_empty(), "({r},{s}) matched {matching:?}");
            } else {
                assert_eq!(matching.len(), 1, "({r},{s}) matched {matching:?}");
            }
        }
    }
}

#[test]
fn serialized_table_has_expected_shape() {
    let json = serde_json::to_value(supported_classes()).unwrap();
    let rules = json.as_array().unwrap();
    assert_eq!(rules.len(), 33);
    let mut ids = BTreeSet::new();
    for rule in rules {
        let id = rule["rule_id"].as_str().unwrap();
        assert!(id.starts_with("Ap"), "unexpected id {id}");
        ids.insert(id.to_string());
        assert!(!rule["hypothesis"].as_str().unwrap().is_empty());
        for item in rule["items"].as_array().unwrap() {
            let residue = item["residue"].as_u64().unwrap();
            assert!(residue < 9, "item residue {residue} out of range");
        }
        for forbidden in rule["forbidden_residues"].as_array().unwrap() {
            assert!(forbidden.as_u64().unwrap() < 9);
        }
    }
    assert_eq!(ids.len(), 33, "rule ids must be unique");
}
