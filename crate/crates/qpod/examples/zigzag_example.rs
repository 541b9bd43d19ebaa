//! The diagonal-cut map from partitions with distinct odd parts to triples,
//! on its worked example and a small exhaustive roundtrip.
//!
//! ```text
//! cargo run --example zigzag_example
//! ```

use qpod::bijections::{triple_to_zigzag, zigzag_to_triple};
use qpod::counting::enumerate_partitions;
use qpod::Partition;

fn main() {
    // The staircase of index k = 3 plus the halved even parts of the input
    // form a shape whose diagonal cut yields alpha and beta.
    let p = Partition::new(vec![14, 14, 12, 12, 8, 4]);
    let k = 3;
    let triple = zigzag_to_triple(&p, k).unwrap();
    println!("input  = {p}, staircase index k = {k}");
    println!("alpha  = {}", triple.alpha);
    println!("beta   = {}", triple.beta);
    println!("odd    = {}", triple.odd);
    println!("excess = {}", triple.length_excess());
    assert_eq!(triple_to_zigzag(&triple, k).unwrap(), p);

    // Exhaustive roundtrip over the domain at a small size.
    let n = 16;
    let mut count = 0usize;
    for k in 0..=2usize {
        for p in enumerate_partitions(n, |p| p.split_parity().1.has_distinct_parts()).unwrap() {
            let t = zigzag_to_triple(&p, k).unwrap();
            assert_eq!(triple_to_zigzag(&t, k).unwrap(), p);
            count += 1;
        }
    }
    println!();
    println!("{count} roundtrips at n = {n} for k <= 2, all exact");
}
