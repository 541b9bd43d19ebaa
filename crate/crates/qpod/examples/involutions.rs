//! The two length-parity-reversing involutions behind the parity-split
//! identities, applied exhaustively at a small size.
//!
//! Both maps pair almost every partition in their family with a partner of
//! opposite length parity; the survivors (fixed points) account for the
//! signed counts q0(n) and q2(n).
//!
//! ```text
//! cargo run --example involutions
//! ```

use qpod::bijections::{epsilon, phi, BijectionError};
use qpod::counting::{enumerate_partitions, table, Route, SequenceId};
use qpod::Partition;

fn survivors(
    n: usize,
    family: fn(&Partition) -> bool,
    map: fn(&Partition) -> Result<Partition, BijectionError>,
) -> (usize, i64) {
    let members = enumerate_partitions(n, family).unwrap();
    let mut fixed = 0usize;
    let mut signed = 0i64;
    for p in &members {
        signed += if p.len() % 2 == 0 { 1 } else { -1 };
        match map(p) {
            Err(BijectionError::FixedPoint) => fixed += 1,
            Ok(image) => assert_eq!(map(&image).unwrap(), *p),
            Err(e) => panic!("unexpected error {e}"),
        }
    }
    (fixed, signed)
}

fn main() {
    let n_max = 16;
    let q0 = table(SequenceId::Q0, n_max, Route::GeneratingFunction).unwrap();
    let q2 = table(SequenceId::Q2, n_max, Route::GeneratingFunction).unwrap();

    println!("phi on partitions with no part 2 mod 4:");
    println!("{:>4} {:>8} {:>14} {:>8}", "n", "fixed", "signed count", "q0(n)");
    for n in 0..=n_max {
        let (fixed, signed) = survivors(n, |p| p.parts().iter().all(|v| v % 4 != 2), phi);
        let expected = if n % 2 == 1 { -q0.get(n as i64) } else { q0.get(n as i64) };
        println!("{n:>4} {fixed:>8} {signed:>14} {:>8}", q0.get(n as i64));
        assert_eq!(expected.to_string(), signed.to_string());
    }

    println!();
    println!("epsilon on partitions with no part 0 mod 4:");
    println!("{:>4} {:>8} {:>14} {:>8}", "n", "fixed", "signed count", "q2(n)");
    for n in 0..=n_max {
        let (fixed, signed) = survivors(n, |p| p.parts().iter().all(|v| v % 4 != 0), epsilon);
        let expected = if n % 2 == 1 { -q2.get(n as i64) } else { q2.get(n as i64) };
        println!("{n:>4} {fixed:>8} {signed:>14} {:>8}", q2.get(n as i64));
        assert_eq!(expected.to_string(), signed.to_string());
    }
}
