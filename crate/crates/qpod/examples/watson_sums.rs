//! The five triangular-shift summation identities: each distinct-part count
//! is a sum of rescaled base counts at triangular-number shifts.
//!
//! For example `q0(n) = sum_k pod((n - k(k+1)/2) / 2)`, where terms with a
//! negative or non-integral argument vanish.  This example expands one value
//! by hand and then sweeps all five identities.
//!
//! ```text
//! cargo run --example watson_sums
//! ```

use qpod::counting::{table, Route, SequenceId};
use qpod::identities::verify_watson;

fn main() {
    // Hand expansion at n = 14: the shifts 0, 1, 3, 6, 10 leave even
    // arguments 14, 8, 4 (13 and 11 are odd and drop out).
    let pod = table(SequenceId::Pod, 14, Route::GeneratingFunction).unwrap();
    let q0 = table(SequenceId::Q0, 14, Route::GeneratingFunction).unwrap();
    let by_shifts = pod.get_div(14, 2) + pod.get_div(13, 2) + pod.get_div(11, 2)
        + pod.get_div(8, 2)
        + pod.get_div(4, 2);
    println!(
        "q0(14) = pod(7) + pod(4) + pod(2) = {} + {} + {} = {}",
        pod.get(7),
        pod.get(4),
        pod.get(2),
        by_shifts
    );
    assert_eq!(q0.get(14), by_shifts);

    println!();
    for report in verify_watson(400) {
        println!("{}", report.summary_line());
    }
}
