//! Tabulate the counting functions by both routes and show they agree.
//!
//! ```text
//! cargo run --example partition_tables
//! ```

use qpod::counting::{table, Route, SequenceId};

fn main() {
    let n_max = 20;
    let columns = [
        SequenceId::Pod,
        SequenceId::B4,
        SequenceId::Q0,
        SequenceId::Q2,
        SequenceId::OverlineP,
    ];

    let by_series: Vec<_> = columns
        .iter()
        .map(|&seq| table(seq, n_max, Route::GeneratingFunction).unwrap())
        .collect();
    let by_objects: Vec<_> = columns
        .iter()
        .map(|&seq| table(seq, n_max, Route::Enumeration).unwrap())
        .collect();

    print!("{:>4}", "n");
    for t in &by_series {
        print!("{:>12}", t.name());
    }
    println!();
    for n in 0..=n_max {
        print!("{n:>4}");
        for (series, objects) in by_series.iter().zip(&by_objects) {
            let value = series.get(n as i64);
            assert_eq!(value, objects.get(n as i64), "routes must agree");
            print!("{value:>12}");
        }
        println!();
    }

    // The mp_k / mbar_k families take the extra parameter explicitly.
    let mp2 = table(SequenceId::Mp(2), 19, Route::GeneratingFunction).unwrap();
    let mbar2 = table(SequenceId::Mbar(2), 12, Route::GeneratingFunction).unwrap();
    println!();
    println!("mp_2(19) = {}", mp2.get(19));
    println!("mbar_2(12) = {}", mbar2.get(12));
}
