//! The Glaisher transform and its 4-regular variant on concrete partitions.
//!
//! ```text
//! cargo run --example glaisher
//! ```

use qpod::bijections::{glaisher_merge, glaisher_split, glaisher_variant, glaisher_variant_inverse};
use qpod::counting::enumerate_partitions;
use qpod::Partition;

fn main() {
    // Distinct parts -> odd parts: halve even parts until none remain.
    println!("distinct -> odd:");
    for parts in [vec![6, 3, 1], vec![10], vec![8, 7, 4, 2]] {
        let distinct = Partition::new(parts);
        let odd = glaisher_split(&distinct).unwrap();
        println!("  {distinct} -> {odd}");
        assert_eq!(glaisher_merge(&odd).unwrap(), distinct);
    }

    // The variant pairs {distinct, no part 2 mod 4} with {odd parts
    // distinct, even parts 2 mod 4 with even multiplicity}.
    println!("variant on distinct parts with no part 2 mod 4:");
    for parts in [vec![8, 5, 1], vec![12, 4], vec![9, 8, 3]] {
        let p = Partition::new(parts);
        let image = glaisher_variant(&p).unwrap();
        println!("  {p} -> {image}");
        assert_eq!(glaisher_variant_inverse(&image).unwrap(), p);
    }

    // Both maps are bijections; count both sides at n = 18.
    let n = 18;
    let distincts = enumerate_partitions(n, |p| p.has_distinct_parts()).unwrap();
    let odds = enumerate_partitions(n, |p| p.parts().iter().all(|v| v % 2 == 1)).unwrap();
    println!("n = {n}: {} distinct-part and {} odd-part partitions", distincts.len(), odds.len());
}
