//! Exercise the power-series layer: Pochhammer products, theta series, and
//! the Jacobi triple product checker.
//!
//! ```text
//! cargo run --example series_identities
//! ```

use qpod::series::{
    jacobi_triple_product_check, poch_inf, poch_inf_neg, theta_square, theta_triangular,
};

fn main() {
    let order = 200;

    // Partition numbers from 1/(q;q).
    let p = poch_inf(1, 1, 12).inverse().unwrap();
    println!("1/(q;q) = {p}");

    // The square-exponent theta series equals (q;q)/(-q;q).
    let quotient = &poch_inf(1, 1, order) * &poch_inf_neg(1, 1, order).inverse().unwrap();
    println!(
        "sum (-1)^n q^(n^2)      == (q;q)/(-q;q)    to order {order}: {}",
        theta_square(1, order) == quotient
    );

    // The triangular-exponent theta series equals (q^2;q^2)/(-q;q^2).
    let quotient = &poch_inf(2, 2, order) * &poch_inf_neg(1, 2, order).inverse().unwrap();
    println!(
        "sum +/- q^(n(n+1)/2)    == (q^2;q^2)/(-q;q^2) to order {order}: {}",
        theta_triangular(order) == quotient
    );

    // Euler: distinct parts are equinumerous with odd parts.
    println!(
        "1/(q;q^2)               == (-q;q)           to order {order}: {}",
        poch_inf(1, 2, order).inverse().unwrap() == poch_inf_neg(1, 1, order)
    );

    // Two specializations of the Jacobi triple product.
    println!(
        "triple product at z = q^2, q -> q^8: {}",
        jacobi_triple_product_check(2, false, 8, order)
    );
    println!(
        "triple product at z = -q,  q -> q^4: {}",
        jacobi_triple_product_check(1, true, 4, order)
    );

    // Series arithmetic is exact: big coefficients survive roundtrips.
    let dense = poch_inf_neg(1, 1, 400).inverse().unwrap();
    let back = dense.inverse().unwrap();
    println!(
        "double inversion at order 400 roundtrips: {}",
        back == poch_inf_neg(1, 1, 400) && !dense.is_zero()
    );
}
