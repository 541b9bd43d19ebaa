//! Arithmetic-progression coefficient extraction and divisibility scanning.
//!
//! A Ramanujan-type congruence asserts `a(mn + t) == 0 (mod u)` for every
//! `n >= 0`. This module extracts the progression `a(mn + t)` from a computed
//! [`SequenceTable`], checks divisibility exactly (integer remainders on the
//! full `BigInt` values; nothing is reduced upstream), and reports outcomes
//! in the same schema as the identity sweeps. The registered statements come
//! in three bundles:
//!
//! * `TH5.1` / `TH5.2` — single progressions: `b4(25n + t) == 0 (mod 16)`
//!   for `t` in `{8, 13, 18, 23}`, and `b4(49n + t) == 0 (mod 64)` for `t`
//!   in `{13, 20, 27, 34, 41, 48}`. The mod-16 family is sharp: `b4(8) = 16`
//!   is not divisible by 32, and every scan records the minimal witness
//!   against the doubled divisor.
//! * `L1` / `L2` / `L3.i` / `L3.ii` — product congruences: the Cauchy
//!   product of the `25n+8` and `25n+23` progression series (and likewise
//!   `25n+13` with `25n+18`) has every coefficient divisible by 256, and the
//!   triple products over `49n + t` for `t` in `{13, 20, 34}` and
//!   `{27, 41, 48}` are divisible by `64^3` coefficientwise.
//! * `Lit.2` / `Lit.4` / `Lit.8` — known single-progression families modulo
//!   2, 4, 8, instantiated at small exponents (see
//!   [`preset_literature_congruences`]).
//!
//! All scanning is numeric: a passing report certifies the swept range and
//! nothing beyond it.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::counting::{self, Route, SequenceId, SequenceTable};
use crate::identities::{SharpnessWitness, StatementId, StatementLabel, VerificationReport};
use crate::series::PowerSeries;

/// Errors produced by congruence-scan plumbing.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CongruenceError {
    /// The progression modulus `m` must be at least 1.
    #[error("progression modulus must be positive")]
    ZeroModulus,
    /// The residue must satisfy `0 <= t < m`.
    #[error("residue {residue} is not smaller than the modulus {modulus}")]
    ResidueOutOfRange { residue: usize, modulus: usize },
    /// The divisor `u` must be at least 1 (1 passes trivially).
    #[error("congruence divisor must be positive")]
    ZeroDivisor,
    /// Extracting `seq(mn + t)` from a table that stops before `t` yields no
    /// entries at all.
    #[error("residue {residue} exceeds the table range {n_max}: extraction is empty")]
    EmptyExtraction { residue: usize, n_max: usize },
    /// A product congruence needs at least one factor.
    #[error("no residues given: a product congruence needs at least one factor")]
    NoResidues,
}

/// One divisibility claim `seq(mn + t) == 0 (mod u)` for all `n >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProgressionSpec {
    sequence: SequenceId,
    modulus: usize,
    residue: usize,
    divisor: u64,
}

impl ProgressionSpec {
    /// Validates `m >= 1`, `0 <= t < m`, `u >= 1`.
    ///
    /// A divisor of 1 is allowed and passes trivially, which makes `(1, 0, 1)`
    /// a handy smoke test of the scan plumbing.
    pub fn new(
        sequence: SequenceId,
        modulus: usize,
        residue: usize,
        divisor: u64,
    ) -> Result<Self, CongruenceError> {
        if modulus == 0 {
            return Err(CongruenceError::ZeroModulus);
        }
        if residue >= modulus {
            return Err(CongruenceError::ResidueOutOfRange { residue, modulus });
        }
        if divisor == 0 {
            return Err(CongruenceError::ZeroDivisor);
        }
        Ok(ProgressionSpec {
            sequence,
            modulus,
            residue,
            divisor,
        })
    }

    /// The claim with `b4` as the base sequence (the common case here).
    pub fn b4(modulus: usize, residue: usize, divisor: u64) -> Result<Self, CongruenceError> {
        Self::new(SequenceId::B4, modulus, residue, divisor)
    }

    /// The base counting function.
    pub fn sequence(&self) -> SequenceId {
        self.sequence
    }

    /// The progression modulus `m`.
    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// The progression residue `t`.
    pub fn residue(&self) -> usize {
        self.residue
    }

    /// The claimed divisor `u`.
    pub fn divisor(&self) -> u64 {
        self.divisor
    }

    /// Largest base-sequence argument touched when sweeping `0 <= n <= n_max`.
    pub fn max_argument(&self, n_max: usize) -> usize {
        self.modulus * n_max + self.residue
    }

    /// Report label, e.g. `b4(25n+8) == 0 (mod 16)`.
    pub fn label(&self) -> String {
        format!(
            "{}({}n+{}) == 0 (mod {})",
            self.sequence.name(),
            self.modulus,
            self.residue,
            self.divisor
        )
    }
}

/// Extracts the progression `seq(mn + t)`: entry `n` of the result holds
/// `seq(mn + t)`, for every `mn + t` within the source table.
///
/// Errors with [`CongruenceError::EmptyExtraction`] if `t` exceeds the table
/// range, since a [`SequenceTable`] cannot be empty.
pub fn extract_progression(
    seq: &SequenceTable,
    m: usize,
    t: usize,
) -> Result<SequenceTable, CongruenceError> {
    assert!(m >= 1, "progression modulus must be positive");
    assert!(t < m, "residue {} must be smaller than the modulus {}", t, m);
    if t > seq.n_max() {
        return Err(CongruenceError::EmptyExtraction {
            residue: t,
            n_max: seq.n_max(),
        });
    }
    let count = (seq.n_max() - t) / m + 1;
    let values = (0..count).map(|n| seq.get((m * n + t) as i64)).collect();
    Ok(SequenceTable::new(
        format!("{}[{}n+{}]", seq.name(), m, t),
        seq.route(),
        values,
    ))
}

fn base_table(seq: SequenceId, n_max: usize) -> SequenceTable {
    counting::table(seq, n_max, Route::GeneratingFunction)
        .expect("generating-function tables have no enumeration ceiling")
}

/// Scans one progression for `0 <= n <= n_max`, recording every value not
/// divisible by `u` as a failure (indexed by the base-sequence argument
/// `mn + t`), and returns the minimal witness against divisibility by `2u`.
fn scan_progression(
    base: &SequenceTable,
    spec: &ProgressionSpec,
    n_max: usize,
    report: &mut VerificationReport,
) -> Option<(usize, BigInt)> {
    let divisor = BigInt::from(spec.divisor);
    let doubled = &divisor * 2u32;
    let mut witness = None;
    for n in 0..=n_max {
        let argument = spec.modulus * n + spec.residue;
        let value = base.get(argument as i64);
        if !(&value % &doubled).is_zero() && witness.is_none() {
            witness = Some((argument, value.clone()));
        }
        if !(&value % &divisor).is_zero() {
            report.push_failure(
                argument,
                None,
                value.to_string(),
                format!("0 (mod {})", spec.divisor),
            );
        }
    }
    witness
}

/// Scans a bundle of progressions sharing one base table and one divisor,
/// producing a single report. Failures are sorted by base-sequence argument;
/// the sharpness witness is the minimal one across the bundle.
fn scan_bundle(
    base: &SequenceTable,
    label: impl Into<StatementLabel>,
    specs: &[(ProgressionSpec, usize)],
    range_n_max: usize,
) -> VerificationReport {
    let mut report = VerificationReport::new(label, range_n_max, None);
    let mut sharp: Option<(usize, BigInt)> = None;
    for (spec, n_max) in specs {
        debug_assert_eq!(spec.divisor, specs[0].0.divisor);
        debug_assert_eq!(spec.sequence, specs[0].0.sequence);
        if let Some((argument, value)) = scan_progression(base, spec, *n_max, &mut report) {
            if sharp.as_ref().is_none_or(|(a, _)| argument < *a) {
                sharp = Some((argument, value));
            }
        }
    }
    report.failures.sort_by_key(|d| d.n);
    if let Some((argument, value)) = sharp {
        report.sharpness = Some(SharpnessWitness {
            divisor: (specs[0].0.divisor as u128 * 2).to_string(),
            n: argument,
            value: value.to_string(),
        });
    }
    report
}

/// Checks `seq(mn + t) == 0 (mod u)` for `0 <= n <= n_max`.
///
/// The report passes iff every extracted value is divisible by `u`; each
/// failure records the base-sequence argument `mn + t` and the offending
/// value. The `sharpness` field holds the minimal counterexample to
/// divisibility by `2u` within the swept range, if there is one — a `Some`
/// witness on a passing report shows the divisor cannot be doubled.
pub fn check_progression_congruence(spec: &ProgressionSpec, n_max: usize) -> VerificationReport {
    let base = base_table(spec.sequence, spec.max_argument(n_max));
    scan_bundle(&base, spec.label(), &[(spec.clone(), n_max)], n_max)
}

/// Forms the Cauchy product of the progression series `sum_n b4(mn + t) q^n`
/// over the given residues `t` and checks that every coefficient up to
/// `order` is divisible by `u`. Failure indices are exponents in the product
/// series.
pub fn check_product_congruence(
    residues: &[usize],
    m: usize,
    divisor: u64,
    order: usize,
) -> Result<VerificationReport, CongruenceError> {
    if residues.is_empty() {
        return Err(CongruenceError::NoResidues);
    }
    if m == 0 {
        return Err(CongruenceError::ZeroModulus);
    }
    if let Some(&residue) = residues.iter().find(|&&t| t >= m) {
        return Err(CongruenceError::ResidueOutOfRange {
            residue,
            modulus: m,
        });
    }
    if divisor == 0 {
        return Err(CongruenceError::ZeroDivisor);
    }
    let factors: Vec<String> = residues
        .iter()
        .map(|t| format!("{}({}n+{})", SequenceId::B4.name(), m, t))
        .collect();
    let label = format!("{} == 0 (mod {})", factors.join("*"), divisor);
    let base = base_table(
        SequenceId::B4,
        m * order + residues.iter().max().copied().unwrap_or(0),
    );
    Ok(scan_product(&base, label, residues, m, divisor, order))
}

/// Product-congruence core over a prebuilt base table.
fn scan_product(
    base: &SequenceTable,
    label: impl Into<StatementLabel>,
    residues: &[usize],
    m: usize,
    divisor: u64,
    order: usize,
) -> VerificationReport {
    let mut product = PowerSeries::one(order);
    for &t in residues {
        let factor = extract_progression(base, m, t)
            .expect("base table is sized to cover every residue");
        product = &product * &PowerSeries::from_coeffs(factor.values()[..=order].to_vec());
    }
    let mut report = VerificationReport::new(label, order, None);
    let big_divisor = BigInt::from(divisor);
    for (n, coefficient) in product.coeffs().iter().enumerate() {
        if !(coefficient % &big_divisor).is_zero() {
            report.push_failure(
                n,
                None,
                coefficient.to_string(),
                format!("0 (mod {})", divisor),
            );
        }
    }
    report
}

/// Bound on the base table used by the literature presets: large enough to
/// reach every preset residue at `n = 0`, small enough to stay desk-scale.
const PRESET_TABLE_CAP: usize = 8000;

/// Largest exponent `a` at which the preset families are instantiated.
const PRESET_ALPHA_MAX: u32 = 1;

/// The known mod-2 progressions, stated for exponents `a >= 1`:
/// `b4(3^(2a+1) n + (17*3^(2a) - 1)/8)` and
/// `b4(3^(2a+2) n + (r*3^(2a+1) - 1)/8)` for `r` in `{11, 19}`.
fn mod2_presets() -> Vec<ProgressionSpec> {
    let mut specs = Vec::new();
    for a in 1..=PRESET_ALPHA_MAX {
        let spec = ProgressionSpec::b4(
            3usize.pow(2 * a + 1),
            (17 * 3usize.pow(2 * a) - 1) / 8,
            2,
        );
        specs.push(spec.expect("preset residues are below their moduli"));
        for r in [11, 19] {
            let spec = ProgressionSpec::b4(
                3usize.pow(2 * a + 2),
                (r * 3usize.pow(2 * a + 1) - 1) / 8,
                2,
            );
            specs.push(spec.expect("preset residues are below their moduli"));
        }
    }
    specs
}

/// The known mod-4 progressions
/// `b4(5^(2a+2) n + (r*5^(2a+1) - 1)/8)` for `r` in `{13, 21, 29, 37}`.
/// At `a = 0` these are the `25n + {8, 13, 18, 23}` progressions, consistent
/// with the stronger mod-16 statement `TH5.1`.
fn mod4_presets() -> Vec<ProgressionSpec> {
    let mut specs = Vec::new();
    for a in 0..=PRESET_ALPHA_MAX {
        for r in [13, 21, 29, 37] {
            let spec = ProgressionSpec::b4(
                5usize.pow(2 * a + 2),
                (r * 5usize.pow(2 * a + 1) - 1) / 8,
                4,
            );
            specs.push(spec.expect("preset residues are below their moduli"));
        }
    }
    specs
}

/// The known mod-8 progressions
/// `b4(3^(4a+4) n + (r*3^(4a+3) - 1)/8)` for `r` in `{11, 19}`, stated for
/// `a >= 0`.
fn mod8_presets() -> Vec<ProgressionSpec> {
    let mut specs = Vec::new();
    for a in 0..=PRESET_ALPHA_MAX {
        for r in [11, 19] {
            let spec = ProgressionSpec::b4(
                3usize.pow(4 * a + 4),
                (r * 3usize.pow(4 * a + 3) - 1) / 8,
                8,
            );
            specs.push(spec.expect("preset residues are below their moduli"));
        }
    }
    specs
}

fn preset_specs(id: StatementId) -> Vec<ProgressionSpec> {
    match id {
        StatementId::Lit2 => mod2_presets(),
        StatementId::Lit4 => mod4_presets(),
        StatementId::Lit8 => mod8_presets(),
        other => panic!("{} is not a literature-congruence bundle", other),
    }
}

/// Clamps each spec's sweep so that every touched argument fits the table:
/// `n_eff = min(n_max, (table_max - t) / m)`.
fn clamp_to_table(
    specs: Vec<ProgressionSpec>,
    n_max: usize,
    table_max: usize,
) -> Vec<(ProgressionSpec, usize)> {
    specs
        .into_iter()
        .map(|spec| {
            let fit = (table_max - spec.residue) / spec.modulus;
            let n_eff = n_max.min(fit);
            (spec, n_eff)
        })
        .collect()
}

fn preset_bundle(base: &SequenceTable, id: StatementId, n_max: usize) -> VerificationReport {
    let specs = clamp_to_table(preset_specs(id), n_max, base.n_max());
    scan_bundle(base, id, &specs, n_max)
}

/// Size of the shared base table needed by the given preset bundles.
fn preset_table_size(ids: &[StatementId], n_max: usize) -> usize {
    let wanted = ids
        .iter()
        .flat_map(|&id| preset_specs(id))
        .map(|spec| spec.max_argument(n_max))
        .max()
        .expect("preset bundles are nonempty");
    let reachable = ids
        .iter()
        .flat_map(|&id| preset_specs(id))
        .map(|spec| spec.residue)
        .max()
        .expect("preset bundles are nonempty");
    wanted.min(PRESET_TABLE_CAP).max(reachable)
}

/// Checks the known literature congruence families for `b4` modulo 2, 4 and 8
/// (statements `Lit.2`, `Lit.4`, `Lit.8`), each instantiated at exponents up
/// to `a = 1`:
///
/// * mod 2 (stated for `a >= 1`): `b4(27n+19)`, `b4(81n+37)`, `b4(81n+64)`;
/// * mod 4: `b4(25n+t)` for `t` in `{8, 13, 18, 23}` and `b4(625n+t)` for
///   `t` in `{203, 328, 453, 578}`;
/// * mod 8: `b4(81n+t)` for `t` in `{37, 64}` and `b4(6561n+t)` for `t` in
///   `{3007, 5194}`.
///
/// One `b4` table serves all three bundles. Its size is capped (at 8000), so
/// progressions whose modulus is large are swept only as far as the cap
/// allows — with the default cap the `6561n + t` progressions are
/// spot-checked at `n = 0` only. Each report's `range` records the requested
/// `n_max`.
pub fn preset_literature_congruences(n_max: usize) -> Vec<VerificationReport> {
    let ids = [StatementId::Lit2, StatementId::Lit4, StatementId::Lit8];
    let base = base_table(SequenceId::B4, preset_table_size(&ids, n_max));
    ids.iter()
        .map(|&id| preset_bundle(&base, id, n_max))
        .collect()
}

/// Default series order for the registered product congruences: pairwise
/// products are checked to order 30, triple products to order 12.
pub fn default_product_order(id: StatementId) -> usize {
    match id {
        StatementId::L1 | StatementId::L2 => 30,
        StatementId::L3i | StatementId::L3ii => 12,
        other => panic!("{} is not a product congruence", other),
    }
}

/// Runs one registered congruence statement.
///
/// `n_max` bounds the progression sweeps (`TH5.1`, `TH5.2`, `Lit.*`); `order`
/// bounds the product series for `L1`/`L2`/`L3.i`/`L3.ii` and falls back to
/// [`default_product_order`] when `None`. Panics if `id` is not a congruence
/// statement.
pub fn verify_congruence_statement(
    id: StatementId,
    n_max: usize,
    order: Option<usize>,
) -> VerificationReport {
    assert!(id.is_congruence(), "{} is not a congruence statement", id);
    let progressions = |residues: &[usize], m: usize, u: u64, n_max: usize| {
        let specs: Vec<(ProgressionSpec, usize)> = residues
            .iter()
            .map(|&t| {
                let spec =
                    ProgressionSpec::b4(m, t, u).expect("registered residues are below moduli");
                (spec, n_max)
            })
            .collect();
        let max_argument = specs
            .iter()
            .map(|(spec, n)| spec.max_argument(*n))
            .max()
            .expect("registered bundles are nonempty");
        let base = base_table(SequenceId::B4, max_argument);
        scan_bundle(&base, id, &specs, n_max)
    };
    let product = |residues: &[usize], m: usize, u: u64| {
        let order = order.unwrap_or_else(|| default_product_order(id));
        let base = base_table(
            SequenceId::B4,
            m * order + residues.iter().max().copied().unwrap_or(0),
        );
        scan_product(&base, id, residues, m, u, order)
    };
    match id {
        StatementId::Th5_1 => progressions(&[8, 13, 18, 23], 25, 16, n_max),
        StatementId::Th5_2 => progressions(&[13, 20, 27, 34, 41, 48], 49, 64, n_max),
        StatementId::L1 => product(&[8, 23], 25, 256),
        StatementId::L2 => product(&[13, 18], 25, 256),
        StatementId::L3i => product(&[13, 20, 34], 49, 64u64.pow(3)),
        StatementId::L3ii => product(&[27, 41, 48], 49, 64u64.pow(3)),
        StatementId::Lit2 | StatementId::Lit4 | StatementId::Lit8 => {
            let base = base_table(SequenceId::B4, preset_table_size(&[id], n_max));
            preset_bundle(&base, id, n_max)
        }
        other => unreachable!("{} handled above", other),
    }
}
