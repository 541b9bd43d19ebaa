//! Run every proved identity sweep and print one summary line per statement.
//!
//! ```text
//! cargo run --example theorem_sweeps
//! ```

use qpod::identities::{verify_t1, verify_t2, verify_t3, verify_t4, verify_t5, verify_watson};

fn main() {
    let mut reports = Vec::new();
    reports.extend(verify_t1(300));
    reports.extend(verify_t2(300));
    reports.extend(verify_t3(300));
    reports.extend(verify_t4(150, 3));
    reports.extend(verify_t5(150, 3));
    reports.extend(verify_watson(300));

    for report in &reports {
        println!("{}", report.summary_line());
    }

    let failures = reports.iter().filter(|r| r.is_failure()).count();
    println!();
    println!("{} statements swept, {} failures", reports.len(), failures);
}
