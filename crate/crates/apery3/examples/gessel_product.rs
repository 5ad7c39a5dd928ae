//! Shows the parameter families whose mod-9 residue is a bare product of
//! single-digit residues, with no pair corrections.
//!
//! Run with: `cargo run --example gessel_product`

use apery3::mod9eval::{apery_mod9, bare_product_mod9, f_term};
use apery3::{is_gessel_class, to_base3, AperyParams};

fn main() {
    for (r, s) in [(2, 2), (3, 3), (4, 4), (5, 2), (2, 1)] {
        let p = AperyParams::new(r, s).expect("valid parameters");
        let corrections: Vec<u8> = (0..3u8)
            .flat_map(|a| (0..3u8).map(move |b| f_term(a, b, &p).value()))
            .collect();
        println!(
            "({r}, {s}): bare product class = {}, pair corrections = {corrections:?}",
            is_gessel_class(&p)
        );

        if is_gessel_class(&p) {
            for n in 0..2187u64 {
                let e = to_base3(n);
                assert_eq!(
                    apery_mod9(e.digits(), &p),
                    bare_product_mod9(e.digits(), &p),
                    "n = {n}"
                );
            }
            println!("         full evaluation equals the bare product for n < 3^7");
        }
    }
}
