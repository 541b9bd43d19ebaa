//! Sweep the two conjectured inequality families and print every
//! counterexample the scan finds.
//!
//! The sweeps are honest: both families fail as literally stated.  The
//! first has a single equality one step past its strictness threshold; the
//! second goes negative for k = 1 at nine scattered points.  The output
//! shows the exact witnesses, all computed from tables that satisfy every
//! proved identity in the test suite.
//!
//! ```text
//! cargo run --example conjecture_scan
//! ```

use qpod::identities::check_conjectures;

fn main() {
    let n_max = 500;
    let k_max = 5;
    for report in check_conjectures(n_max, k_max) {
        println!("{}", report.summary_line());
        for failure in &report.failures {
            let k = failure.k.expect("conjecture sweeps are k-indexed");
            println!(
                "  k = {}, n = {:>3}: value {} violates `{}`",
                k, failure.n, failure.lhs, failure.rhs
            );
        }
        println!(
            "  {} equality points recorded (threshold claims say n < k(2k+1))",
            report.equality_set.len()
        );
        println!();
    }
}
