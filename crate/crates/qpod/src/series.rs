//! Truncated formal power series in `q` with exact `BigInt` coefficients.
//!
//! Provides:
//! * [`PowerSeries`]: a dense series `c_0 + c_1 q + ... + c_N q^N` with explicit
//!   truncation order `N`, with ring operations (`+`, `-`, `*`, [`PowerSeries::inverse`]).
//! * Pochhammer products [`poch_inf`], [`poch_inf_neg`], [`poch_finite`],
//!   [`poch_finite_neg`].
//! * Theta-type series [`theta_square`], [`theta_triangular`],
//!   [`theta_triangular_scaled`].
//! * [`jacobi_triple_product_check`] for monomial specializations of the triple
//!   product identity.
//!
//! All arithmetic is exact; there is no floating point anywhere in this crate.

use std::cmp::min;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors produced by series operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    /// Inversion over the integers requires constant term `1` or `-1`.
    #[error("series is not invertible over the integers: constant term {0} is not a unit")]
    NotInvertible(BigInt),
}

/// A formal power series truncated at a fixed order.
///
/// A series of truncation order `N` stores exactly `N + 1` coefficients; all
/// operations are exact modulo `q^(N+1)`. Mixed-order arithmetic truncates to
/// the smaller order, since higher coefficients of the result are not trusted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    /// Builds a series from its coefficient vector; the truncation order is
    /// `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        PowerSeries { coeffs }
    }

    /// The zero series of the given truncation order.
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series `1`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// The monomial `coeff * q^exp` (zero if `exp` exceeds the order).
    pub fn monomial(coeff: i64, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = BigInt::from(coeff);
        }
        s
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`. Panics beyond the truncation order: asking for an
    /// untracked coefficient is a bug in the caller, not a zero.
    pub fn coeff(&self, n: usize) -> &BigInt {
        assert!(
            n < self.coeffs.len(),
            "coefficient {} requested from a series of order {}",
            n,
            self.order()
        );
        &self.coeffs[n]
    }

    /// All stored coefficients, index = exponent.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The same series truncated to a smaller order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot extend a series of order {} to order {}",
            self.order(),
            order
        );
        PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Substitutes `q -> q^m` (pure exponent scaling). The result has
    /// truncation order `m * N`: every coefficient of the image is determined
    /// by a stored coefficient of `self`.
    pub fn substitute_power(&self, m: usize) -> Self {
        assert!(m >= 1, "substitution exponent must be positive");
        let mut out = Self::zero(self.order() * m);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.coeffs[i * m] = c.clone();
            }
        }
        out
    }

    /// The series multiplied by an integer scalar.
    pub fn scaled(&self, scalar: i64) -> Self {
        let s = BigInt::from(scalar);
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * &s).collect(),
        }
    }

    /// True if every stored coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Multiplicative inverse modulo `q^(N+1)`.
    ///
    /// Requires the constant term to be `1` or `-1`; anything else is not a
    /// unit over the integers and yields [`SeriesError::NotInvertible`].
    ///
    /// Runs in `O(N * nnz(self))`, which makes inverting sparse products such
    /// as `(q;q)_inf` cheap even at large order.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return Err(SeriesError::NotInvertible(c0.clone()));
        }
        let order = self.order();
        let nonzero: Vec<(usize, &BigInt)> = (1..=order)
            .filter(|&k| !self.coeffs[k].is_zero())
            .map(|k| (k, &self.coeffs[k]))
            .collect();
        let mut inv = vec![BigInt::zero(); order + 1];
        inv[0] = c0.clone(); // 1/c0 == c0 for a unit
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for &(k, a) in &nonzero {
                if k > n {
                    break;
                }
                acc += a * &inv[n - k];
            }
            if !acc.is_zero() {
                inv[n] = -(c0 * acc);
            }
        }
        Ok(PowerSeries { coeffs: inv })
    }

    /// Coefficients rendered as exact decimal strings (for JSON/CSV export).
    pub fn coefficients_decimal(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    fn nonzero_count_up_to(&self, order: usize) -> usize {
        self.coeffs[..=order].iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplies in place by the binomial `1 + sign * q^exp` with `exp >= 1`.
    fn mul_binomial_in_place(&mut self, exp: usize, negative: bool) {
        debug_assert!(exp >= 1);
        if exp > self.order() {
            return; // the factor is 1 modulo the truncation
        }
        for i in (exp..self.coeffs.len()).rev() {
            let shifted = self.coeffs[i - exp].clone();
            if negative {
                self.coeffs[i] -= shifted;
            } else {
                self.coeffs[i] += shifted;
            }
        }
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut shown = 0usize;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if shown == 12 {
                write!(f, " + ...")?;
                break;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{}*q", mag)?,
                (_, true) => write!(f, "q^{}", i)?,
                (_, false) => write!(f, "{}*q^{}", mag, i)?,
            }
            shown += 1;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " (O(q^{}))", self.order() + 1)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = min(self.order(), rhs.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
            .collect();
        PowerSeries { coeffs }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let order = min(self.order(), rhs.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
            .collect();
        PowerSeries { coeffs }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    /// Cauchy product truncated to the smaller order. The outer loop runs over
    /// the factor with fewer nonzero coefficients, so multiplying by a sparse
    /// theta-type series costs `O(N * nnz)`.
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = min(self.order(), rhs.order());
        let (outer, inner) =
            if self.nonzero_count_up_to(order) <= rhs.nonzero_count_up_to(order) {
                (self, rhs)
            } else {
                (rhs, self)
            };
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, c) in outer.coeffs[..=order].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, d) in inner.coeffs[..=order - i].iter().enumerate() {
                if !d.is_zero() {
                    coeffs[i + j] += c * d;
                }
            }
        }
        PowerSeries { coeffs }
    }
}

/// `(q^a; q^b)_inf` truncated at `order`: the product of `1 - q^(a + k*b)`
/// over all `k >= 0` with exponent within range. Requires `a, b >= 1`.
pub fn poch_inf(a: usize, b: usize, order: usize) -> PowerSeries {
    pochhammer(a, b, usize::MAX, order, true)
}

/// `(-q^a; q^b)_inf` truncated at `order`: the product of `1 + q^(a + k*b)`.
pub fn poch_inf_neg(a: usize, b: usize, order: usize) -> PowerSeries {
    pochhammer(a, b, usize::MAX, order, false)
}

/// The finite product `(q^a; q^b)_count = prod_{k=0}^{count-1} (1 - q^(a+k*b))`.
pub fn poch_finite(a: usize, b: usize, count: usize, order: usize) -> PowerSeries {
    pochhammer(a, b, count, order, true)
}

/// The finite product `(-q^a; q^b)_count = prod_{k=0}^{count-1} (1 + q^(a+k*b))`.
pub fn poch_finite_neg(a: usize, b: usize, count: usize, order: usize) -> PowerSeries {
    pochhammer(a, b, count, order, false)
}

fn pochhammer(a: usize, b: usize, count: usize, order: usize, negative: bool) -> PowerSeries {
    assert!(a >= 1 && b >= 1, "Pochhammer exponents must be positive");
    let mut s = PowerSeries::one(order);
    let mut exp = a;
    let mut done = 0usize;
    while done < count && exp <= order {
        s.mul_binomial_in_place(exp, negative);
        exp += b;
        done += 1;
    }
    s
}

/// `1 + 2 * sum_{n>=1} (-1)^n q^(scale*n^2)` truncated at `order`.
///
/// Equals `(q;q)_inf / (-q;q)_inf` with `q -> q^scale`.
pub fn theta_square(scale: usize, order: usize) -> PowerSeries {
    assert!(scale >= 1);
    let mut s = PowerSeries::one(order);
    let mut n = 1usize;
    while scale * n * n <= order {
        s.coeffs[scale * n * n] = BigInt::from(if n % 2 == 1 { -2 } else { 2 });
        n += 1;
    }
    s
}

/// `sum_{n>=0} (-1)^(n(n+1)/2) q^(n(n+1)/2)` truncated at `order`.
///
/// Equals `(q^2;q^2)_inf / (-q;q^2)_inf`.
pub fn theta_triangular(order: usize) -> PowerSeries {
    let mut s = PowerSeries::zero(order);
    let mut n = 0usize;
    loop {
        let tri = n * (n + 1) / 2;
        if tri > order {
            break;
        }
        s.coeffs[tri] = BigInt::from(if tri % 2 == 1 { -1 } else { 1 });
        n += 1;
    }
    s
}

/// `sum_{n>=0} (-1)^(n(n+1)/2) q^(n(n+1))` truncated at `order`: the
/// triangular-exponent theta with doubled exponents, sign unchanged.
pub fn theta_triangular_scaled(order: usize) -> PowerSeries {
    let mut s = PowerSeries::zero(order);
    let mut n = 0usize;
    loop {
        let tri = n * (n + 1) / 2;
        if 2 * tri > order {
            break;
        }
        s.coeffs[2 * tri] = BigInt::from(if tri % 2 == 1 { -1 } else { 1 });
        n += 1;
    }
    s
}

/// Checks the Jacobi triple product identity for the specialization
/// `z = (-1)^(z_negative) * q^z_exp`, `q -> q^q_step`, to the given order:
///
/// `(z; q)_inf (q/z; q)_inf (q; q)_inf == sum_{n in Z} (-z)^n q^(n(n-1)/2)`.
///
/// Requires `1 <= z_exp < q_step` so that both sides are one-variable power
/// series with nonnegative exponents.
pub fn jacobi_triple_product_check(
    z_exp: usize,
    z_negative: bool,
    q_step: usize,
    order: usize,
) -> bool {
    assert!(
        z_exp >= 1 && z_exp < q_step,
        "specialization needs 1 <= z_exp < q_step for a one-variable series"
    );
    let poch = if z_negative { poch_inf_neg } else { poch_inf };
    let product = &(&poch(z_exp, q_step, order) * &poch(q_step - z_exp, q_step, order))
        * &poch_inf(q_step, q_step, order);

    let mut sum = PowerSeries::zero(order);
    for direction in [1i64, -1] {
        let mut n: i64 = if direction == 1 { 0 } else { -1 };
        loop {
            // exponent of the n-th bilateral term; strictly increasing along
            // each direction, so the first overflow ends the scan
            let e = q_step as i64 * (n * (n - 1) / 2) + n * z_exp as i64;
            if e > order as i64 {
                break;
            }
            debug_assert!(e >= 0);
            let sign = if z_negative || n.rem_euclid(2) == 0 { 1 } else { -1 };
            sum.coeffs[e as usize] += BigInt::from(sign);
            n += direction;
        }
    }
    product == sum
}
