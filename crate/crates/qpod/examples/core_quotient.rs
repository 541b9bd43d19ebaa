//! Decompose partitions into a staircase 2-core and a pair of 2-quotients,
//! and run the staircase-indexed maps built on top of the decomposition.
//!
//! ```text
//! cargo run --example core_quotient
//! ```

use qpod::bijections::{from_core_quotient, psi, rho, two_core_quotient, xi_map};
use qpod::Partition;

fn main() {
    println!("2-core / 2-quotient (|p| = |core| + 2|first| + 2|second|):");
    for parts in [vec![3, 3, 2], vec![5, 4, 2, 1], vec![7, 5, 3, 1], vec![6, 6, 1]] {
        let p = Partition::new(parts);
        let d = two_core_quotient(&p);
        println!(
            "  {p} -> core {}, quotients {} and {}",
            d.core, d.first, d.second
        );
        assert_eq!(
            p.size(),
            d.core.size() + 2 * d.first.size() + 2 * d.second.size()
        );
        assert_eq!(from_core_quotient(&d.core, &d.first, &d.second).unwrap(), p);
    }

    // xi: distinct odd parts -> (partition, staircase index), shrinking the
    // size by a factor of four off the staircase.
    println!();
    println!("xi on distinct odd parts:");
    for parts in [vec![5, 3], vec![9, 7, 1], vec![11, 5, 3, 1]] {
        let mu = Partition::new(parts);
        let image = xi_map(&mu).unwrap();
        println!(
            "  {mu} -> ({}, k = {})",
            image.partition, image.staircase_index
        );
        let k = image.staircase_index;
        assert_eq!(mu.size(), k * (k + 1) / 2 + 4 * image.partition.size());
    }

    // The two Watson-type maps thread xi through a parity split.
    println!();
    let p = Partition::new(vec![9, 6, 5, 2]);
    let (half, k) = psi(&p).unwrap();
    println!("psi{p} = ({half}, k = {k})");

    let p = Partition::new(vec![8, 5, 4, 3]);
    let (over, k) = rho(&p).unwrap();
    println!("rho{p} = ({over}, k = {k})");
}
