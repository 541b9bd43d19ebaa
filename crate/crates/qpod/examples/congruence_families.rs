//! Check the arithmetic-progression congruences of the 4-regular counting
//! sequence: the mod-16 and mod-64 families, the product congruences, and
//! the literature presets, plus one ad-hoc scan.
//!
//! ```text
//! cargo run --example congruence_families
//! ```

use qpod::congruences::{
    check_product_congruence, check_progression_congruence, preset_literature_congruences,
    verify_congruence_statement,
};
use qpod::identities::StatementId;
use qpod::ProgressionSpec;

fn main() {
    // The registered statements, at their default scales.
    for (id, n_max) in [
        (StatementId::Th5_1, 40),
        (StatementId::Th5_2, 20),
        (StatementId::L1, 0),
        (StatementId::L2, 0),
        (StatementId::L3i, 0),
        (StatementId::L3ii, 0),
    ] {
        let report = verify_congruence_statement(id, n_max, None);
        println!("{}", report.summary_line());
        if let Some(witness) = &report.sharpness {
            println!(
                "  sharp: value {} at argument {} is not divisible by {}",
                witness.value, witness.n, witness.divisor
            );
        }
    }

    println!();
    for report in preset_literature_congruences(40) {
        println!("{}", report.summary_line());
    }

    // Any progression can be scanned directly.
    println!();
    let spec = ProgressionSpec::b4(25, 8, 16).unwrap();
    let report = check_progression_congruence(&spec, 60);
    println!("{}", report.summary_line());

    let report = check_product_congruence(&[8, 23], 25, 256, 30).unwrap();
    println!("{}", report.summary_line());

    // A progression with no congruence fails loudly.
    let spec = ProgressionSpec::b4(2, 1, 16).unwrap();
    let report = check_progression_congruence(&spec, 10);
    println!("{}", report.summary_line());
}
