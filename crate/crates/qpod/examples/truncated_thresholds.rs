//! Watch the truncated-family inequalities flip from equality to strict
//! inequality at their predicted thresholds.
//!
//! The `C4.2` family is zero for n < 4(k+1)^2 and strictly positive from
//! that point on; the `C4.4` family flips at n = 2k(2k+1).  The sweep
//! records every equality point, so the largest one sits exactly one step
//! below the threshold.
//!
//! ```text
//! cargo run --example truncated_thresholds
//! ```

use qpod::identities::{verify_t4, verify_t5};

fn main() {
    let n_max = 200;
    let k_max = 3;

    for (reports, threshold) in [
        (verify_t4(n_max, k_max), (|k| 4 * (k + 1) * (k + 1)) as fn(usize) -> usize),
        (verify_t5(n_max, k_max), |k| 2 * k * (2 * k + 1)),
    ] {
        let theorem = &reports[0];
        let corollary = &reports[1];
        println!("{}", theorem.summary_line());
        println!("{}", corollary.summary_line());
        for k in 1..=k_max {
            let last_equality = corollary
                .equality_set
                .iter()
                .filter(|e| e.k == k)
                .map(|e| e.n)
                .max()
                .unwrap();
            println!(
                "  k = {k}: equality for n < {}, last equality at n = {}",
                threshold(k),
                last_equality
            );
            assert_eq!(last_equality + 1, threshold(k));
        }
        println!();
    }
}
