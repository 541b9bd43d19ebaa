//! Partition objects and the counting functions, each computed two ways.
//!
//! Provides:
//! * [`Partition`] and [`Overpartition`] value types.
//! * A brute-force enumeration oracle ([`enumerate_partitions`],
//!   [`for_each_partition`], [`enumerate_overpartitions`]) capped by a
//!   configurable ceiling.
//! * [`SequenceTable`]: a named table of exact values for one counting
//!   function, tagged with the [`Route`] that produced it.
//! * [`table`]: evaluates any [`SequenceId`] by either route. The enumeration
//!   route counts explicit objects; the generating-function route expands
//!   products from [`crate::series`]. The two must agree wherever both run,
//!   and the test suite enforces that.
//! * The case functions [`xi`] and [`chi`].
//!
//! Counting conventions: every counting function returns 0 for negative
//! arguments, and [`SequenceTable::get_div`] returns 0 for non-integer
//! rational arguments, matching how the summation identities are stated.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::series::{self, PowerSeries};

/// Largest `n` the enumeration oracle accepts by default. `p(60) < 10^6`,
/// which keeps exhaustive scans near-instant; anything bigger should use the
/// generating-function route.
pub const DEFAULT_ENUMERATION_CEILING: usize = 60;

/// Errors from the counting module.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountingError {
    /// The enumeration oracle refuses very large arguments.
    #[error(
        "enumeration of partitions of {n} exceeds the ceiling {ceiling}; \
         use the generating-function route for large arguments"
    )]
    CeilingExceeded { n: usize, ceiling: usize },
    /// `mp_k` and `mbar_k` are indexed by `k >= 1`.
    #[error("{name} requires k >= 1")]
    KMustBePositive { name: &'static str },
    /// An overline flag referenced a value that is not a part.
    #[error("overlined value {0} does not occur among the parts")]
    OverlineWithoutPart(usize),
}

/// An integer partition: a nonincreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order. Panics on zero parts;
    /// zero is not a part.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from `(value, multiplicity)` pairs.
    pub fn from_multiplicities<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Self {
        let mut parts = Vec::new();
        for (value, mult) in pairs {
            assert!(value > 0, "partition parts must be positive");
            parts.extend(std::iter::repeat_n(value, mult));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Parts in nonincreasing order.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// True for the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// How many times `value` occurs as a part.
    pub fn multiplicity(&self, value: usize) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// `(value, multiplicity)` pairs in decreasing value order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// True if no part repeats.
    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// The conjugate partition (diagram transpose).
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Multiset union.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Multiset difference; `None` if `other` is not contained in `self`.
    pub fn try_remove(&self, other: &Partition) -> Option<Partition> {
        let mut parts = self.parts.clone();
        for &p in &other.parts {
            let idx = parts.iter().position(|&q| q == p)?;
            parts.remove(idx);
        }
        Some(Partition { parts })
    }

    /// Splits into (even parts, odd parts).
    pub fn split_parity(&self) -> (Partition, Partition) {
        let (even, odd) = self.parts.iter().partition(|&&p| p % 2 == 0);
        (Partition { parts: even }, Partition { parts: odd })
    }

    /// Each part multiplied by `factor`.
    pub fn scale(&self, factor: usize) -> Partition {
        assert!(factor > 0);
        Partition {
            parts: self.parts.iter().map(|p| p * factor).collect(),
        }
    }

    /// Each part divided by `factor`; panics unless every part is divisible.
    pub fn unscale(&self, factor: usize) -> Partition {
        assert!(factor > 0);
        Partition {
            parts: self
                .parts
                .iter()
                .map(|p| {
                    assert!(p % factor == 0, "part {} not divisible by {}", p, factor);
                    p / factor
                })
                .collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// An overpartition: a partition in which the first occurrence of a value may
/// be overlined. Overline flags attach to distinct values, not positions, so
/// equality and hashing are canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Overpartition {
    parts: Vec<usize>,
    overlined: BTreeSet<usize>,
}

impl Overpartition {
    /// Builds an overpartition; every overlined value must occur as a part.
    pub fn new(parts: Vec<usize>, overlined: BTreeSet<usize>) -> Result<Self, CountingError> {
        let base = Partition::new(parts);
        for &v in &overlined {
            if base.multiplicity(v) == 0 {
                return Err(CountingError::OverlineWithoutPart(v));
            }
        }
        Ok(Overpartition {
            parts: base.parts,
            overlined,
        })
    }

    /// Parts in nonincreasing order, overlines ignored.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The set of overlined values.
    pub fn overlined(&self) -> &BTreeSet<usize> {
        &self.overlined
    }

    /// True if `value` carries an overline.
    pub fn is_overlined(&self, value: usize) -> bool {
        self.overlined.contains(&value)
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts (overlined and plain copies both count).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// True for the empty overpartition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let mut seen = BTreeSet::new();
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            // render the overline on the first copy of the value
            if self.overlined.contains(p) && seen.insert(*p) {
                write!(f, "{}~", p)?;
            } else {
                write!(f, "{}", p)?;
            }
        }
        write!(f, ")")
    }
}

/// Visits every partition of `n` in descending lexicographic order of part
/// sequences, passing the parts slice to `f`. No ceiling is applied; callers
/// that expose enumeration to outside input should go through
/// [`enumerate_partitions`] instead.
pub fn for_each_partition<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut buf = Vec::with_capacity(n);
    descend(n, n, &mut buf, &mut f);
}

fn descend<F: FnMut(&[usize])>(remaining: usize, max_part: usize, buf: &mut Vec<usize>, f: &mut F) {
    if remaining == 0 {
        f(buf);
        return;
    }
    let mut part = remaining.min(max_part);
    while part >= 1 {
        buf.push(part);
        descend(remaining - part, part, buf, f);
        buf.pop();
        part -= 1;
    }
}

/// Collects the partitions of `n` that satisfy `predicate`, in descending
/// lexicographic order, enforcing [`DEFAULT_ENUMERATION_CEILING`].
pub fn enumerate_partitions<F: FnMut(&Partition) -> bool>(
    n: usize,
    predicate: F,
) -> Result<Vec<Partition>, CountingError> {
    enumerate_partitions_with_ceiling(n, DEFAULT_ENUMERATION_CEILING, predicate)
}

/// [`enumerate_partitions`] with an explicit ceiling.
pub fn enumerate_partitions_with_ceiling<F: FnMut(&Partition) -> bool>(
    n: usize,
    ceiling: usize,
    mut predicate: F,
) -> Result<Vec<Partition>, CountingError> {
    if n > ceiling {
        return Err(CountingError::CeilingExceeded { n, ceiling });
    }
    let mut out = Vec::new();
    for_each_partition(n, |parts| {
        let candidate = Partition {
            parts: parts.to_vec(),
        };
        if predicate(&candidate) {
            out.push(candidate);
        }
    });
    Ok(out)
}

/// Visits every overpartition of `n`: each partition of `n` paired with every
/// subset of its distinct values as overlines.
pub fn for_each_overpartition<F: FnMut(&Overpartition)>(n: usize, mut f: F) {
    for_each_partition(n, |parts| {
        let mut values: Vec<usize> = parts.to_vec();
        values.dedup();
        let mut obj = Overpartition {
            parts: parts.to_vec(),
            overlined: BTreeSet::new(),
        };
        for mask in 0u32..(1u32 << values.len()) {
            obj.overlined.clear();
            for (bit, &v) in values.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    obj.overlined.insert(v);
                }
            }
            f(&obj);
        }
    });
}

/// Collects the overpartitions of `n` (ceiling-checked).
pub fn enumerate_overpartitions(n: usize) -> Result<Vec<Overpartition>, CountingError> {
    if n > DEFAULT_ENUMERATION_CEILING {
        return Err(CountingError::CeilingExceeded {
            n,
            ceiling: DEFAULT_ENUMERATION_CEILING,
        });
    }
    let mut out = Vec::new();
    for_each_overpartition(n, |op| out.push(op.clone()));
    Ok(out)
}

/// Which computation produced a [`SequenceTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Explicit object enumeration (the oracle).
    Enumeration,
    /// Truncated generating-function expansion.
    GeneratingFunction,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::Enumeration => write!(f, "enumeration"),
            Route::GeneratingFunction => write!(f, "generating-function"),
        }
    }
}

/// The counting functions this crate evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceId {
    /// Partitions with no part congruent to 2 mod 4.
    Pod,
    /// `Pod` restricted to an even number of parts.
    PodEven,
    /// `Pod` restricted to an odd number of parts.
    PodOdd,
    /// 4-regular partitions: no part divisible by 4.
    B4,
    /// `B4` restricted to an even number of parts.
    B4Even,
    /// `B4` restricted to an odd number of parts.
    B4Odd,
    /// Distinct parts, none divisible by 4.
    Q0,
    /// Distinct parts, none congruent to 2 mod 4.
    Q2,
    /// Odd parts only, each with multiplicity at most 3.
    Q0Alt,
    /// Overpartitions.
    OverlineP,
    /// Unrestricted partitions.
    P,
    /// Distinct odd parts.
    QOdd,
    /// Distinct parts.
    QDistinct,
    /// Partitions whose smallest part exceeding `2k-1` is odd with
    /// multiplicity exactly `k`, all other odd parts distinct.
    Mp(usize),
    /// Overpartitions whose smallest part exceeding `k` appears at least
    /// `k+1` times (overlined and plain copies counted together).
    Mbar(usize),
}

impl SequenceId {
    /// Canonical snake-case name, e.g. `pod_e` or `mp_2`.
    pub fn name(&self) -> String {
        match self {
            SequenceId::Pod => "pod".into(),
            SequenceId::PodEven => "pod_e".into(),
            SequenceId::PodOdd => "pod_o".into(),
            SequenceId::B4 => "b4".into(),
            SequenceId::B4Even => "b4_e".into(),
            SequenceId::B4Odd => "b4_o".into(),
            SequenceId::Q0 => "q0".into(),
            SequenceId::Q2 => "q2".into(),
            SequenceId::Q0Alt => "q0_alt".into(),
            SequenceId::OverlineP => "overline_p".into(),
            SequenceId::P => "p".into(),
            SequenceId::QOdd => "q_odd".into(),
            SequenceId::QDistinct => "q_distinct".into(),
            SequenceId::Mp(k) => format!("mp_{}", k),
            SequenceId::Mbar(k) => format!("mbar_{}", k),
        }
    }

    /// Parses a CLI-style sequence name; `k` is consumed by `mp` / `mbar`.
    pub fn parse(name: &str, k: Option<usize>) -> Result<SequenceId, String> {
        let seq = match name {
            "pod" => SequenceId::Pod,
            "pod-e" | "pod_e" => SequenceId::PodEven,
            "pod-o" | "pod_o" => SequenceId::PodOdd,
            "b4" => SequenceId::B4,
            "b4-e" | "b4_e" => SequenceId::B4Even,
            "b4-o" | "b4_o" => SequenceId::B4Odd,
            "q0" => SequenceId::Q0,
            "q2" => SequenceId::Q2,
            "q0-alt" | "q0_alt" => SequenceId::Q0Alt,
            "overline-p" | "overline_p" | "pbar" => SequenceId::OverlineP,
            "p" => SequenceId::P,
            "q-odd" | "q_odd" => SequenceId::QOdd,
            "q-distinct" | "q_distinct" | "q" => SequenceId::QDistinct,
            "mp" => SequenceId::Mp(k.ok_or("sequence `mp` requires --k")?),
            "mbar" => SequenceId::Mbar(k.ok_or("sequence `mbar` requires --k")?),
            other => return Err(format!("unknown sequence `{}`", other)),
        };
        if !matches!(seq, SequenceId::Mp(_) | SequenceId::Mbar(_)) && k.is_some() {
            return Err(format!("sequence `{}` does not take --k", name));
        }
        Ok(seq)
    }

    /// Every sequence, with `mp`/`mbar` instantiated for `1 <= k <= k_max`.
    pub fn catalog(k_max: usize) -> Vec<SequenceId> {
        let mut out = vec![
            SequenceId::Pod,
            SequenceId::PodEven,
            SequenceId::PodOdd,
            SequenceId::B4,
            SequenceId::B4Even,
            SequenceId::B4Odd,
            SequenceId::Q0,
            SequenceId::Q2,
            SequenceId::Q0Alt,
            SequenceId::OverlineP,
            SequenceId::P,
            SequenceId::QOdd,
            SequenceId::QDistinct,
        ];
        for k in 1..=k_max {
            out.push(SequenceId::Mp(k));
            out.push(SequenceId::Mbar(k));
        }
        out
    }
}

/// Exact values of one counting function for `0 <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    name: String,
    route: Route,
    values: Vec<BigInt>,
}

impl SequenceTable {
    /// Wraps precomputed values.
    pub fn new(name: impl Into<String>, route: Route, values: Vec<BigInt>) -> Self {
        assert!(!values.is_empty());
        SequenceTable {
            name: name.into(),
            route,
            values,
        }
    }

    /// The sequence name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// The route that produced the values.
    pub fn route(&self) -> Route {
        self.route
    }

    /// Largest tabulated argument.
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// Raw values, index = argument.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// The value at `n`; 0 for negative `n` (the standing convention in the
    /// summation identities). Panics past `n_max`: that is a sizing bug.
    pub fn get(&self, n: i64) -> BigInt {
        if n < 0 {
            return BigInt::zero();
        }
        let n = n as usize;
        assert!(
            n < self.values.len(),
            "{}({}) requested but table stops at {}",
            self.name,
            n,
            self.n_max()
        );
        self.values[n].clone()
    }

    /// The value at the rational `numerator / divisor`; 0 unless the quotient
    /// is a nonnegative integer. Identities with arguments like `(n - t)/4`
    /// sum over exactly the terms this leaves nonzero.
    pub fn get_div(&self, numerator: i64, divisor: i64) -> BigInt {
        assert!(divisor > 0);
        if numerator < 0 || numerator % divisor != 0 {
            return BigInt::zero();
        }
        self.get(numerator / divisor)
    }

    /// CSV rendering with an `n,value` header and exact decimal values.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,value\n");
        for (n, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{},{}\n", n, v));
        }
        out
    }

    /// JSON rendering with decimal-string values (no precision loss).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "route": self.route.to_string(),
            "values": self.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Tabulates `seq` for `0 <= n <= n_max` by the requested route, applying the
/// default enumeration ceiling.
pub fn table(seq: SequenceId, n_max: usize, route: Route) -> Result<SequenceTable, CountingError> {
    table_with_ceiling(seq, n_max, route, DEFAULT_ENUMERATION_CEILING)
}

/// [`table`] with an explicit enumeration ceiling (the generating-function
/// route ignores it).
pub fn table_with_ceiling(
    seq: SequenceId,
    n_max: usize,
    route: Route,
    ceiling: usize,
) -> Result<SequenceTable, CountingError> {
    if let SequenceId::Mp(0) = seq {
        return Err(CountingError::KMustBePositive { name: "mp_k" });
    }
    if let SequenceId::Mbar(0) = seq {
        return Err(CountingError::KMustBePositive { name: "mbar_k" });
    }
    let values = match route {
        Route::Enumeration => {
            if n_max > ceiling {
                return Err(CountingError::CeilingExceeded { n: n_max, ceiling });
            }
            enumeration_values(seq, n_max)
        }
        Route::GeneratingFunction => gf_values(seq, n_max),
    };
    Ok(SequenceTable::new(seq.name(), route, values))
}

fn enumeration_values(seq: SequenceId, n_max: usize) -> Vec<BigInt> {
    (0..=n_max)
        .map(|n| BigInt::from(count_by_enumeration(seq, n)))
        .collect()
}

fn count_by_enumeration(seq: SequenceId, n: usize) -> u64 {
    let mut count = 0u64;
    match seq {
        SequenceId::OverlineP => {
            for_each_overpartition(n, |_| count += 1);
        }
        SequenceId::Mbar(k) => {
            for_each_overpartition(n, |op| {
                if mbar_accepts(op.parts(), k) {
                    count += 1;
                }
            });
        }
        _ => {
            for_each_partition(n, |parts| {
                if partition_predicate(seq, parts) {
                    count += 1;
                }
            });
        }
    }
    count
}

fn partition_predicate(seq: SequenceId, parts: &[usize]) -> bool {
    let distinct = || parts.windows(2).all(|w| w[0] > w[1]);
    match seq {
        SequenceId::Pod => parts.iter().all(|p| p % 4 != 2),
        SequenceId::PodEven => parts.iter().all(|p| p % 4 != 2) && parts.len().is_multiple_of(2),
        SequenceId::PodOdd => parts.iter().all(|p| p % 4 != 2) && parts.len() % 2 == 1,
        SequenceId::B4 => parts.iter().all(|p| p % 4 != 0),
        SequenceId::B4Even => parts.iter().all(|p| p % 4 != 0) && parts.len().is_multiple_of(2),
        SequenceId::B4Odd => parts.iter().all(|p| p % 4 != 0) && parts.len() % 2 == 1,
        SequenceId::Q0 => distinct() && parts.iter().all(|p| p % 4 != 0),
        SequenceId::Q2 => distinct() && parts.iter().all(|p| p % 4 != 2),
        SequenceId::Q0Alt => {
            parts.iter().all(|p| p % 2 == 1) && max_multiplicity(parts) <= 3
        }
        SequenceId::P => true,
        SequenceId::QOdd => distinct() && parts.iter().all(|p| p % 2 == 1),
        SequenceId::QDistinct => distinct(),
        SequenceId::Mp(k) => mp_accepts(parts, k),
        SequenceId::OverlineP | SequenceId::Mbar(_) => {
            unreachable!("handled by count_by_enumeration")
        }
    }
}

fn max_multiplicity(parts: &[usize]) -> usize {
    let mut best = 0;
    let mut run = 0;
    let mut prev = 0;
    for &p in parts {
        run = if p == prev { run + 1 } else { 1 };
        prev = p;
        best = best.max(run);
    }
    best
}

/// The `mp_k` condition: the smallest part exceeding `2k-1` is odd and occurs
/// exactly `k` times, and every other odd value occurs at most once.
fn mp_accepts(parts: &[usize], k: usize) -> bool {
    let threshold = 2 * k - 1;
    // parts are sorted nonincreasing; the last part above the threshold is
    // the smallest one
    let Some(&marked) = parts.iter().rev().find(|&&p| p > threshold) else {
        return false;
    };
    if marked % 2 == 0 || parts.iter().filter(|&&p| p == marked).count() != k {
        return false;
    }
    let mut prev = 0;
    for &p in parts {
        if p % 2 == 1 && p != marked && p == prev {
            return false;
        }
        prev = p;
    }
    true
}

/// The `mbar_k` condition on the underlying partition: the smallest part
/// exceeding `k` occurs at least `k+1` times. Overline flags are free.
fn mbar_accepts(parts: &[usize], k: usize) -> bool {
    let Some(&marked) = parts.iter().rev().find(|&&p| p > k) else {
        return false;
    };
    parts.iter().filter(|&&p| p == marked).count() > k
}

fn gf_values(seq: SequenceId, n_max: usize) -> Vec<BigInt> {
    let series = gf_series(seq, n_max);
    series.coeffs().to_vec()
}

/// The generating function of `seq` truncated at `order`.
pub fn gf_series(seq: SequenceId, order: usize) -> PowerSeries {
    let n = order;
    match seq {
        // (q^2;q^4) / (q;q)
        SequenceId::Pod => {
            &series::poch_inf(2, 4, n) * &series::poch_inf(1, 1, n).inverse().unwrap()
        }
        SequenceId::PodEven => parity_component(seq, n),
        SequenceId::PodOdd => parity_component(seq, n),
        // (q^4;q^4) / (q;q)
        SequenceId::B4 => {
            &series::poch_inf(4, 4, n) * &series::poch_inf(1, 1, n).inverse().unwrap()
        }
        SequenceId::B4Even => parity_component(seq, n),
        SequenceId::B4Odd => parity_component(seq, n),
        // (-q;q^4)(-q^2;q^4)(-q^3;q^4)
        SequenceId::Q0 => {
            &(&series::poch_inf_neg(1, 4, n) * &series::poch_inf_neg(2, 4, n))
                * &series::poch_inf_neg(3, 4, n)
        }
        // (-q;q^4)(-q^3;q^4)(-q^4;q^4)
        SequenceId::Q2 => {
            &(&series::poch_inf_neg(1, 4, n) * &series::poch_inf_neg(3, 4, n))
                * &series::poch_inf_neg(4, 4, n)
        }
        // (q^4;q^8) / (q;q^2)
        SequenceId::Q0Alt => {
            &series::poch_inf(4, 8, n) * &series::poch_inf(1, 2, n).inverse().unwrap()
        }
        // (-q;q) / (q;q)
        SequenceId::OverlineP => {
            &series::poch_inf_neg(1, 1, n) * &series::poch_inf(1, 1, n).inverse().unwrap()
        }
        SequenceId::P => series::poch_inf(1, 1, n).inverse().unwrap(),
        SequenceId::QOdd => series::poch_inf_neg(1, 2, n),
        SequenceId::QDistinct => series::poch_inf_neg(1, 1, n),
        SequenceId::Mp(k) => mp_gf(k, n),
        SequenceId::Mbar(k) => mbar_gf(k, n),
    }
}

/// The even/odd-length components of `pod` and `b4`. The sum of the pair is
/// the plain counting function; the difference has its own product form
/// (the inverse of the complementary distinct-part product), so the split is
/// computed without reference to the signed distinct-part series it is later
/// compared against.
fn parity_component(seq: SequenceId, order: usize) -> PowerSeries {
    let (total, diff) = match seq {
        SequenceId::PodEven | SequenceId::PodOdd => {
            let total = gf_series(SequenceId::Pod, order);
            // 1 / [(-q;q^4)(-q^3;q^4)(-q^4;q^4)]
            let diff = (&(&series::poch_inf_neg(1, 4, order)
                * &series::poch_inf_neg(3, 4, order))
                * &series::poch_inf_neg(4, 4, order))
                .inverse()
                .unwrap();
            (total, diff)
        }
        SequenceId::B4Even | SequenceId::B4Odd => {
            let total = gf_series(SequenceId::B4, order);
            // 1 / [(-q;q^4)(-q^2;q^4)(-q^3;q^4)]
            let diff = (&(&series::poch_inf_neg(1, 4, order)
                * &series::poch_inf_neg(2, 4, order))
                * &series::poch_inf_neg(3, 4, order))
                .inverse()
                .unwrap();
            (total, diff)
        }
        _ => unreachable!(),
    };
    let combined = match seq {
        SequenceId::PodEven | SequenceId::B4Even => &total + &diff,
        _ => &total - &diff,
    };
    let two = BigInt::from(2);
    let halved: Vec<BigInt> = combined
        .coeffs()
        .iter()
        .map(|c| {
            debug_assert!((c % &two).is_zero(), "parity split must be integral");
            c / &two
        })
        .collect();
    PowerSeries::from_coeffs(halved)
}

/// `mp_k` via its series form: the prefactor `(-q;q^2)_k / (q^2;q^2)_(k-1)`
/// times the sum over `j >= k` of
/// `q^(k(2j+1)) (-q^(2j+3);q^2) / (q^(2j+2);q^2)`.
fn mp_gf(k: usize, order: usize) -> PowerSeries {
    assert!(k >= 1);
    let prefactor = &series::poch_finite_neg(1, 2, k, order)
        * &series::poch_finite(2, 2, k - 1, order).inverse().unwrap();
    let mut sum = PowerSeries::zero(order);
    let mut j = k;
    while k * (2 * j + 1) <= order {
        let tail = &series::poch_inf_neg(2 * j + 3, 2, order)
            * &series::poch_inf(2 * j + 2, 2, order).inverse().unwrap();
        let term = &PowerSeries::monomial(1, k * (2 * j + 1), order) * &tail;
        sum = &sum + &term;
        j += 1;
    }
    &prefactor * &sum
}

/// `mbar_k` via its series form: the prefactor `(-q;q)_k / (q;q)_k` times the
/// sum over `j >= k+1` of `2 q^(j(k+1)) / (1 - q^j) * (-q^(j+1);q) / (q^(j+1);q)`.
fn mbar_gf(k: usize, order: usize) -> PowerSeries {
    assert!(k >= 1);
    let prefactor = &series::poch_finite_neg(1, 1, k, order)
        * &series::poch_finite(1, 1, k, order).inverse().unwrap();
    let mut sum = PowerSeries::zero(order);
    let mut j = k + 1;
    while j * (k + 1) <= order {
        let geometric = (&PowerSeries::one(order) - &PowerSeries::monomial(1, j, order))
            .inverse()
            .unwrap();
        let tail = &series::poch_inf_neg(j + 1, 1, order)
            * &series::poch_inf(j + 1, 1, order).inverse().unwrap();
        let term = &(&PowerSeries::monomial(2, j * (k + 1), order) * &geometric) * &tail;
        sum = &sum + &term;
        j += 1;
    }
    &prefactor * &sum
}

/// The case function `xi`: 1 at 0, `2*(-1)^m` at `4m^2` for `m >= 1`, else 0.
pub fn xi(n: u64) -> i64 {
    if n == 0 {
        return 1;
    }
    if !n.is_multiple_of(4) {
        return 0;
    }
    let quarter = n / 4;
    let root = quarter.isqrt();
    if root * root == quarter {
        if root % 2 == 1 {
            -2
        } else {
            2
        }
    } else {
        0
    }
}

/// The case function `chi`: `(-1)^(n/2)` when `n = m(m+1)` for some `m >= 0`,
/// else 0.
pub fn chi(n: u64) -> i64 {
    let m = n.isqrt();
    // m(m+1) is the only candidate near sqrt(n)
    if m * (m + 1) == n || m > 0 && (m - 1) * m == n {
        if (n / 2) % 2 == 1 {
            -1
        } else {
            1
        }
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    // values cross-checked by an independent enumeration oracle
    const POD: [i64; 25] = [
        1, 1, 1, 2, 3, 4, 5, 7, 10, 13, 16, 21, 28, 35, 43, 55, 70, 86, 105, 130, 161, 196,
        236, 287, 350,
    ];
    const POD_E: [i64; 25] = [
        1, 0, 1, 0, 2, 1, 4, 2, 7, 4, 11, 7, 18, 13, 27, 21, 43, 34, 63, 53, 94, 82, 136, 123,
        199,
    ];
    const B4: [i64; 25] = [
        1, 1, 2, 3, 4, 6, 9, 12, 16, 22, 29, 38, 50, 64, 82, 105, 132, 166, 208, 258, 320,
        395, 484, 592, 722,
    ];
    const Q0: [i64; 25] = [
        1, 1, 1, 2, 1, 2, 3, 3, 4, 5, 6, 7, 8, 9, 11, 13, 16, 18, 21, 24, 27, 32, 36, 41, 48,
    ];
    const Q2: [i64; 25] = [
        1, 1, 0, 1, 2, 2, 1, 2, 4, 4, 3, 4, 8, 8, 6, 9, 14, 14, 12, 16, 24, 25, 22, 28, 40,
    ];
    const OVERLINE_P: [i64; 25] = [
        1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232, 344, 504, 728, 1040, 1472, 2062, 2864,
        3948, 5400, 7336, 9904, 13288, 17728, 23528,
    ];

    #[test]
    fn enumeration_matches_listed_pod_partitions_of_8() {
        let listed = [
            vec![8],
            vec![7, 1],
            vec![5, 3],
            vec![5, 1, 1, 1],
            vec![4, 4],
            vec![4, 3, 1],
            vec![4, 1, 1, 1, 1],
            vec![3, 3, 1, 1],
            vec![3, 1, 1, 1, 1, 1],
            vec![1, 1, 1, 1, 1, 1, 1, 1],
        ];
        let found = enumerate_partitions(8, |p| p.parts().iter().all(|v| v % 4 != 2)).unwrap();
        let found_parts: Vec<Vec<usize>> = found.iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(found_parts, listed);
    }

    #[test]
    fn enumeration_counts_4_regular_partitions_of_7() {
        let found = enumerate_partitions(7, |p| p.parts().iter().all(|v| v % 4 != 0)).unwrap();
        assert_eq!(found.len(), 12);
    }

    #[test]
    fn ceiling_is_enforced() {
        let err = enumerate_partitions(61, |_| true).unwrap_err();
        assert_eq!(
            err,
            CountingError::CeilingExceeded {
                n: 61,
                ceiling: DEFAULT_ENUMERATION_CEILING
            }
        );
        assert!(err.to_string().contains("generating-function"));
        assert!(enumerate_partitions_with_ceiling(61, 61, |_| true).is_ok());
        assert!(table(SequenceId::P, 61, Route::Enumeration).is_err());
    }

    #[test]
    fn gf_tables_match_frozen_values() {
        let cases: [(SequenceId, &[i64]); 6] = [
            (SequenceId::Pod, &POD),
            (SequenceId::PodEven, &POD_E),
            (SequenceId::B4, &B4),
            (SequenceId::Q0, &Q0),
            (SequenceId::Q2, &Q2),
            (SequenceId::OverlineP, &OVERLINE_P),
        ];
        for (seq, expect) in cases {
            let t = table(seq, 24, Route::GeneratingFunction).unwrap();
            assert_eq!(t.values(), &ints(expect)[..], "{}", seq.name());
        }
    }

    #[test]
    fn enumeration_tables_match_frozen_values() {
        let t = table(SequenceId::Pod, 16, Route::Enumeration).unwrap();
        assert_eq!(t.values(), &ints(&POD[..17])[..]);
        let t = table(SequenceId::OverlineP, 12, Route::Enumeration).unwrap();
        assert_eq!(t.values(), &ints(&OVERLINE_P[..13])[..]);
    }

    #[test]
    fn golden_split_values() {
        let pod_e = table(SequenceId::PodEven, 8, Route::Enumeration).unwrap();
        let pod_o = table(SequenceId::PodOdd, 8, Route::Enumeration).unwrap();
        assert_eq!(pod_e.get(8), BigInt::from(7));
        assert_eq!(pod_o.get(8), BigInt::from(3));
        let b4_e = table(SequenceId::B4Even, 7, Route::GeneratingFunction).unwrap();
        let b4_o = table(SequenceId::B4Odd, 7, Route::GeneratingFunction).unwrap();
        assert_eq!(b4_e.get(7), BigInt::from(5));
        assert_eq!(b4_o.get(7), BigInt::from(7));
    }

    #[test]
    fn q0_alt_agrees_with_q0() {
        let a = table(SequenceId::Q0Alt, 24, Route::GeneratingFunction).unwrap();
        let b = table(SequenceId::Q0, 24, Route::GeneratingFunction).unwrap();
        assert_eq!(a.values(), b.values());
        let c = table(SequenceId::Q0Alt, 14, Route::Enumeration).unwrap();
        assert_eq!(c.get(14), BigInt::from(11));
    }

    #[test]
    fn q0_alt_members_have_length_congruent_to_size() {
        for n in 0..=20usize {
            for p in
                enumerate_partitions(n, |p| partition_predicate(SequenceId::Q0Alt, p.parts()))
                    .unwrap()
            {
                assert_eq!(p.len() % 2, n % 2, "{} at n={}", p, n);
            }
        }
    }

    #[test]
    fn mp_tables_both_routes() {
        let expect2: [i64; 25] = [
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 3, 3, 4, 6, 8, 10, 12, 15, 20, 24, 28,
        ];
        let gf = table(SequenceId::Mp(2), 24, Route::GeneratingFunction).unwrap();
        let en = table(SequenceId::Mp(2), 24, Route::Enumeration).unwrap();
        assert_eq!(gf.values(), &ints(&expect2)[..]);
        assert_eq!(en.values(), &ints(&expect2)[..]);
        // golden value
        let t = table(SequenceId::Mp(2), 19, Route::Enumeration).unwrap();
        assert_eq!(t.get(19), BigInt::from(10));
        // no part larger than 2k-1 exists in the empty partition
        assert_eq!(t.get(0), BigInt::zero());
    }

    #[test]
    fn mbar_tables_both_routes() {
        let expect2: [i64; 25] = [
            0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 4, 8, 16, 28, 48, 80, 126, 196, 300, 448, 660, 960,
            1376, 1952, 2744,
        ];
        let gf = table(SequenceId::Mbar(2), 24, Route::GeneratingFunction).unwrap();
        let en = table(SequenceId::Mbar(2), 24, Route::Enumeration).unwrap();
        assert_eq!(gf.values(), &ints(&expect2)[..]);
        assert_eq!(en.values(), &ints(&expect2)[..]);
        assert_eq!(gf.get(12), BigInt::from(16));
        // a part > 3 repeated at least 4 times needs size >= 16
        let t3 = table(SequenceId::Mbar(3), 15, Route::GeneratingFunction).unwrap();
        assert!(t3.values().iter().all(|v| *v == BigInt::zero()));
    }

    #[test]
    fn k_zero_is_rejected() {
        assert!(matches!(
            table(SequenceId::Mp(0), 5, Route::Enumeration),
            Err(CountingError::KMustBePositive { .. })
        ));
        assert!(table(SequenceId::Mbar(0), 5, Route::GeneratingFunction).is_err());
    }

    #[test]
    fn rational_argument_convention() {
        let pod = table(SequenceId::Pod, 10, Route::GeneratingFunction).unwrap();
        assert_eq!(pod.get_div(8, 2), pod.get(4));
        assert_eq!(pod.get_div(7, 2), BigInt::zero());
        assert_eq!(pod.get_div(-4, 2), BigInt::zero());
        assert_eq!(pod.get(-3), BigInt::zero());
    }

    #[test]
    fn xi_cases() {
        assert_eq!(xi(0), 1);
        assert_eq!(xi(4), -2);
        assert_eq!(xi(16), 2);
        assert_eq!(xi(36), -2);
        assert_eq!(xi(5), 0);
        assert_eq!(xi(8), 0);
    }

    #[test]
    fn chi_cases() {
        assert_eq!(chi(0), 1);
        assert_eq!(chi(2), -1);
        assert_eq!(chi(6), -1);
        assert_eq!(chi(12), 1);
        assert_eq!(chi(20), 1);
        assert_eq!(chi(30), -1);
        assert_eq!(chi(7), 0);
    }

    #[test]
    fn overpartitions_of_three() {
        let all = enumerate_overpartitions(3).unwrap();
        assert_eq!(all.len(), 8);
        let rendered: BTreeSet<String> = all.iter().map(|op| op.to_string()).collect();
        assert!(rendered.contains("(3~)"));
        assert!(rendered.contains("(2~, 1~)"));
        assert!(rendered.contains("(1, 1, 1)"));
        assert!(rendered.contains("(1~, 1, 1)"));
    }

    #[test]
    fn overline_flags_are_validated() {
        let err = Overpartition::new(vec![3, 1], BTreeSet::from([2])).unwrap_err();
        assert_eq!(err, CountingError::OverlineWithoutPart(2));
        let ok = Overpartition::new(vec![3, 3, 1], BTreeSet::from([3])).unwrap();
        assert_eq!(ok.to_string(), "(3~, 3, 1)");
    }

    #[test]
    fn partition_basics() {
        let p = Partition::new(vec![1, 4, 3, 1]);
        assert_eq!(p.parts(), &[4, 3, 1, 1]);
        assert_eq!(p.size(), 9);
        assert_eq!(p.multiplicity(1), 2);
        assert_eq!(p.conjugate().parts(), &[4, 2, 2, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        let (even, odd) = p.split_parity();
        assert_eq!(even.parts(), &[4]);
        assert_eq!(odd.parts(), &[3, 1, 1]);
        assert_eq!(
            p.try_remove(&Partition::new(vec![1, 1])).unwrap().parts(),
            &[4, 3]
        );
        assert!(p.try_remove(&Partition::new(vec![2])).is_none());
        assert_eq!(
            Partition::from_multiplicities([(2, 3), (5, 1)]).parts(),
            &[5, 2, 2, 2]
        );
    }
}
