//! Exact-arithmetic toolkit for the `pod` and 4-regular partition families.
//!
//! Everything here is integer-exact: series coefficients are [`num_bigint::BigInt`]s,
//! counting functions are evaluated both by brute-force enumeration and by truncated
//! product expansions, and the two routes are required to agree.
//!
//! Modules:
//!
//! * [`series`]: truncated formal power series over `BigInt`, Pochhammer products,
//!   theta series, and a Jacobi triple product checker.
//! * [`counting`]: partition and overpartition objects, the counting functions
//!   (`pod`, `b4`, `q0`, `q2`, overpartitions, `MP_k`, `Mbar_k`, ...), each with an
//!   enumeration route and a generating-function route.
//! * [`bijections`]: executable combinatorial maps (Glaisher transforms, the
//!   length-parity involutions, the zig-zag map, 2-core / 2-quotient machinery,
//!   and the Watson-type maps).
//! * [`identities`]: sweep verifiers for the theorem statements, producing
//!   serializable reports.
//! * [`congruences`]: arithmetic-progression divisibility checks and product
//!   congruences on the 4-regular counting sequence.
//! * [`cli`]: the command-line front end used by the `qpod` binary.

pub mod bijections;
pub mod cli;
pub mod congruences;
pub mod counting;
pub mod identities;
pub mod series;

pub use congruences::ProgressionSpec;
pub use counting::{Overpartition, Partition, Route, SequenceId, SequenceTable};
pub use identities::{StatementId, StatementLabel, Status, VerificationReport};
pub use series::PowerSeries;
