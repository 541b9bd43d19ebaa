//! Combinatorial maps between partition families.
//!
//! Every map comes with its inverse (or is a self-inverse involution up to
//! the documented pairing), and the test suite closes each loop by exhaustive
//! roundtrips in both directions on small sizes:
//!
//! * [`glaisher_split`] / [`glaisher_merge`]: distinct parts vs odd parts.
//! * [`glaisher_variant`] / [`glaisher_variant_inverse`]: distinct parts
//!   avoiding 2 mod 4 vs partitions whose odd parts are distinct and whose
//!   even parts are 2 mod 4 with even multiplicity.
//! * [`phi`]: a parity-reversing involution on partitions without parts
//!   2 mod 4, fixing exactly the odd-part partitions with multiplicity at
//!   most 3.
//! * [`epsilon`]: a parity-reversing involution on 4-regular partitions,
//!   fixing exactly those with distinct odd parts and even parts of even
//!   multiplicity.
//! * [`zigzag_to_triple`] / [`triple_to_zigzag`]: the diagonal cut of a
//!   staircase-extended shape, encoding a partition with distinct odd parts
//!   as a [`TripleA`].
//! * [`pair_involution`]: moves the first differing part between two
//!   distinct-even-part partitions; the transfer step behind the signed
//!   triple cancellations.
//! * [`two_core_quotient`] / [`from_core_quotient`]: domino decomposition of
//!   an arbitrary partition into a staircase core and two quotient
//!   partitions.
//! * [`xi_map`] / [`xi_map_inverse`]: distinct-odd-part partitions as a
//!   staircase index plus a quarter-size partition, via the self-conjugate
//!   envelope and its domino quotient.
//! * [`psi`] / [`psi_inverse`] and [`rho`] / [`rho_inverse`]: the size-halving
//!   and size-quartering maps built from [`xi_map`].

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::counting::{self, Overpartition, Partition};

/// Errors from maps applied outside their domain.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum BijectionError {
    #[error("expected distinct parts, found {0} repeated")]
    RepeatedPart(usize),
    #[error("expected odd parts, found {0}")]
    EvenPart(usize),
    #[error("expected even parts, found {0}")]
    OddPart(usize),
    #[error("part {part} lies in the excluded class {residue} mod {modulus}")]
    ForbiddenResidue {
        part: usize,
        residue: usize,
        modulus: usize,
    },
    #[error("even part {0} has odd multiplicity")]
    OddMultiplicity(usize),
    #[error("partition is a fixed point, outside the involution's domain")]
    FixedPoint,
    #[error("the two components are identical, outside the involution's domain")]
    IdenticalComponents,
    #[error("core must be a staircase partition")]
    NotStaircase,
    #[error("component lengths differ by {excess}, incompatible with staircase index {index}")]
    LengthMismatch { excess: i64, index: usize },
    #[error("triple does not assemble into a valid shape: {0}")]
    MalformedTriple(String),
}

fn require_distinct(p: &Partition) -> Result<(), BijectionError> {
    match p.parts().windows(2).find(|w| w[0] == w[1]) {
        Some(w) => Err(BijectionError::RepeatedPart(w[0])),
        None => Ok(()),
    }
}

fn require_odd_parts(p: &Partition) -> Result<(), BijectionError> {
    match p.parts().iter().find(|v| *v % 2 == 0) {
        Some(&v) => Err(BijectionError::EvenPart(v)),
        None => Ok(()),
    }
}

fn require_even_parts(p: &Partition) -> Result<(), BijectionError> {
    match p.parts().iter().find(|v| *v % 2 == 1) {
        Some(&v) => Err(BijectionError::OddPart(v)),
        None => Ok(()),
    }
}

fn require_no_residue(p: &Partition, residue: usize, modulus: usize) -> Result<(), BijectionError> {
    match p.parts().iter().find(|v| *v % modulus == residue) {
        Some(&part) => Err(BijectionError::ForbiddenResidue {
            part,
            residue,
            modulus,
        }),
        None => Ok(()),
    }
}

/// Splits `v` as `2^k * c` with `c` odd.
fn two_adic(v: usize) -> (u32, usize) {
    let k = v.trailing_zeros();
    (k, v >> k)
}

/// Distinct parts to odd parts: each part `2^k * c` with `c` odd becomes
/// `2^k` copies of `c`.
pub fn glaisher_split(p: &Partition) -> Result<Partition, BijectionError> {
    require_distinct(p)?;
    let mut parts = Vec::new();
    for &v in p.parts() {
        let (k, c) = two_adic(v);
        parts.extend(std::iter::repeat_n(c, 1 << k));
    }
    Ok(Partition::new(parts))
}

/// Odd parts to distinct parts: a value `v` of multiplicity `m` becomes the
/// parts `v * 2^b` over the set bits `b` of `m`.
pub fn glaisher_merge(p: &Partition) -> Result<Partition, BijectionError> {
    require_odd_parts(p)?;
    let mut parts = Vec::new();
    for (v, m) in p.multiplicities() {
        for bit in 0..usize::BITS {
            if m >> bit & 1 == 1 {
                parts.push(v << bit);
            }
        }
    }
    Ok(Partition::new(parts))
}

/// On distinct parts avoiding 2 mod 4: odd parts stay, and a part
/// `2^k * c` (with `c` odd, `k >= 2`) becomes `2^(k-1)` copies of `2c`.
/// The image has distinct odd parts and even parts 2 mod 4 with even
/// multiplicity.
pub fn glaisher_variant(p: &Partition) -> Result<Partition, BijectionError> {
    require_distinct(p)?;
    require_no_residue(p, 2, 4)?;
    let mut parts = Vec::new();
    for &v in p.parts() {
        if v % 2 == 1 {
            parts.push(v);
        } else {
            let (k, c) = two_adic(v);
            parts.extend(std::iter::repeat_n(2 * c, 1 << (k - 1)));
        }
    }
    Ok(Partition::new(parts))
}

/// Inverse of [`glaisher_variant`]: an even value `2c` of even multiplicity
/// `m` becomes the parts `2c * 2^b` over the set bits `b >= 1` of `m`.
pub fn glaisher_variant_inverse(p: &Partition) -> Result<Partition, BijectionError> {
    let mut parts = Vec::new();
    for (v, m) in p.multiplicities() {
        if v % 2 == 1 {
            if m > 1 {
                return Err(BijectionError::RepeatedPart(v));
            }
            parts.push(v);
        } else {
            if v % 4 == 0 {
                return Err(BijectionError::ForbiddenResidue {
                    part: v,
                    residue: 0,
                    modulus: 4,
                });
            }
            if m % 2 == 1 {
                return Err(BijectionError::OddMultiplicity(v));
            }
            for bit in 1..usize::BITS {
                if m >> bit & 1 == 1 {
                    parts.push(v << bit);
                }
            }
        }
    }
    Ok(Partition::new(parts))
}

/// Parity-reversing involution on partitions with no part 2 mod 4.
///
/// Merge step: among odd values `d` of multiplicity `m >= 4`, let
/// `r = 2^floor(log2 m) * d` be maximal; if `r` is at least the largest even
/// part, replace `2^floor(log2 m)` copies of `d` by the single part `r`.
/// Split step: otherwise write the largest even part as `2^k * c` with `c`
/// odd and replace it by `2^k` copies of `c`. Fixed points (no even part, no
/// odd multiplicity over 3) are outside the domain.
pub fn phi(p: &Partition) -> Result<Partition, BijectionError> {
    require_no_residue(p, 2, 4)?;
    let mut merge: Option<(usize, usize, usize)> = None;
    for (v, m) in p.multiplicities() {
        if v % 2 == 1 && m >= 4 {
            let count = 1usize << m.ilog2();
            let r = count * v;
            if merge.is_none_or(|(best, _, _)| r > best) {
                merge = Some((r, v, count));
            }
        }
    }
    let largest_even = p.parts().iter().copied().find(|v| v % 2 == 0).unwrap_or(0);
    match merge {
        Some((r, d, count)) if r >= largest_even => {
            let removed = p
                .try_remove(&Partition::from_multiplicities([(d, count)]))
                .expect("copies to merge are present");
            Ok(removed.union(&Partition::new(vec![r])))
        }
        _ if largest_even > 0 => {
            let (k, c) = two_adic(largest_even);
            let removed = p
                .try_remove(&Partition::new(vec![largest_even]))
                .expect("largest even part is present");
            Ok(removed.union(&Partition::from_multiplicities([(c, 1 << k)])))
        }
        _ => Err(BijectionError::FixedPoint),
    }
}

/// Parity-reversing involution on 4-regular partitions.
///
/// Split step: take the smallest even part `e` of odd multiplicity such that
/// every odd value below `e/2` is unrepeated, and replace one copy of `e` by
/// two copies of `e/2`. Merge step: otherwise replace two copies of the
/// smallest repeated odd value `v` by one part `2v`. Fixed points (distinct
/// odd parts, even parts of even multiplicity) are outside the domain.
pub fn epsilon(p: &Partition) -> Result<Partition, BijectionError> {
    require_no_residue(p, 0, 4)?;
    let mults = p.multiplicities();
    let blocked = |e: usize| {
        mults
            .iter()
            .any(|&(u, mu)| u % 2 == 1 && u < e / 2 && mu > 1)
    };
    let split = mults
        .iter()
        .rev()
        .find(|&&(v, m)| v % 2 == 0 && m % 2 == 1 && !blocked(v));
    if let Some(&(e, _)) = split {
        let removed = p
            .try_remove(&Partition::new(vec![e]))
            .expect("split part is present");
        return Ok(removed.union(&Partition::from_multiplicities([(e / 2, 2)])));
    }
    if let Some(&(v, _)) = mults.iter().rev().find(|&&(v, m)| v % 2 == 1 && m >= 2) {
        let removed = p
            .try_remove(&Partition::from_multiplicities([(v, 2)]))
            .expect("repeated part is present");
        return Ok(removed.union(&Partition::new(vec![2 * v])));
    }
    Err(BijectionError::FixedPoint)
}

/// A partition with distinct odd parts together with two partitions into
/// distinct even parts, as produced by the diagonal cut.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleA {
    pub odd: Partition,
    pub alpha: Partition,
    pub beta: Partition,
}

impl TripleA {
    /// Validates the component shapes.
    pub fn new(odd: Partition, alpha: Partition, beta: Partition) -> Result<Self, BijectionError> {
        require_distinct(&odd)?;
        require_odd_parts(&odd)?;
        for comp in [&alpha, &beta] {
            require_distinct(comp)?;
            require_even_parts(comp)?;
        }
        Ok(TripleA { odd, alpha, beta })
    }

    /// Total size of the three components.
    pub fn size(&self) -> usize {
        self.odd.size() + self.alpha.size() + self.beta.size()
    }

    /// Length of `alpha` minus length of `beta`.
    pub fn length_excess(&self) -> i64 {
        self.alpha.len() as i64 - self.beta.len() as i64
    }
}

impl fmt::Display for TripleA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[odd={}, alpha={}, beta={}]", self.odd, self.alpha, self.beta)
    }
}

/// Cuts the staircase-extended shape of a partition with distinct odd parts.
///
/// The rows `1, 2, ..., k` followed by the halved even parts form a shape;
/// its column counts from the diagonal give `alpha` (doubled) and its row
/// overhangs give `beta` (doubled). The odd parts ride along unchanged. The
/// resulting length excess is always `k` or `k + 1`.
pub fn zigzag_to_triple(p: &Partition, k: usize) -> Result<TripleA, BijectionError> {
    let (evens, odds) = p.split_parity();
    require_distinct(&odds)?;
    let mut rows: Vec<usize> = (1..=k).collect();
    rows.extend(evens.parts().iter().map(|v| v / 2));

    let mut alpha = Vec::new();
    for j in 1..=rows.len() {
        let count = rows.iter().skip(j - 1).filter(|r| **r >= j).count();
        if count == 0 {
            break;
        }
        alpha.push(2 * count);
    }
    let mut beta = Vec::new();
    for (idx, &r) in rows.iter().enumerate() {
        let i = idx + 1;
        if r > i {
            beta.push(2 * (r - i));
        }
    }
    let triple = TripleA::new(odds, Partition::new(alpha), Partition::new(beta))?;
    debug_assert!(
        triple.length_excess() == k as i64 || triple.length_excess() == k as i64 + 1,
        "diagonal cut length excess out of range"
    );
    Ok(triple)
}

/// Inverse of [`zigzag_to_triple`]: reassembles the shape from the halved
/// `alpha` columns and `beta` row overhangs, checks the staircase prefix, and
/// reads the even parts off the remaining rows.
pub fn triple_to_zigzag(t: &TripleA, k: usize) -> Result<Partition, BijectionError> {
    let t = TripleA::new(t.odd.clone(), t.alpha.clone(), t.beta.clone())?;
    let excess = t.length_excess();
    if excess != k as i64 && excess != k as i64 + 1 {
        return Err(BijectionError::LengthMismatch {
            excess,
            index: k,
        });
    }
    let a: Vec<usize> = t.alpha.parts().iter().map(|v| v / 2).collect();
    let b: Vec<usize> = t.beta.parts().iter().map(|v| v / 2).collect();
    let col_rows = a
        .iter()
        .enumerate()
        .map(|(idx, &aj)| idx + aj)
        .max()
        .unwrap_or(0);
    let nrows = col_rows.max(k + b.len());
    if nrows < k {
        return Err(BijectionError::MalformedTriple(format!(
            "{} rows cannot contain a staircase of index {}",
            nrows, k
        )));
    }
    let mut rows = vec![0usize; nrows];
    for (idx, &aj) in a.iter().enumerate() {
        // column idx+1 occupies rows idx+1 ..= idx+aj
        for row in rows.iter_mut().skip(idx).take(aj) {
            *row += 1;
        }
    }
    for (idx, &bi) in b.iter().enumerate() {
        rows[k + idx] += bi;
    }
    for (idx, &r) in rows.iter().take(k).enumerate() {
        if r != idx + 1 {
            return Err(BijectionError::MalformedTriple(format!(
                "row {} has length {}, staircase needs {}",
                idx + 1,
                r,
                idx + 1
            )));
        }
    }
    let tail = &rows[k..];
    if tail.windows(2).any(|w| w[0] < w[1]) {
        return Err(BijectionError::MalformedTriple(
            "remaining rows are not sorted".into(),
        ));
    }
    if tail.contains(&0) {
        return Err(BijectionError::MalformedTriple("empty row".into()));
    }
    let evens: Vec<usize> = tail.iter().map(|&r| 2 * r).collect();
    Ok(t.odd.union(&Partition::new(evens)))
}

/// Moves the first differing part between two partitions with distinct even
/// parts: comparing the zero-padded part sequences, the larger entry at the
/// first difference migrates to the other side. When the inputs have equal
/// length and the move lowers the first component, the output pair is swapped
/// so its first component is always the longer one by two.
pub fn pair_involution(
    alpha: &Partition,
    beta: &Partition,
) -> Result<(Partition, Partition), BijectionError> {
    for comp in [alpha, beta] {
        require_distinct(comp)?;
        require_even_parts(comp)?;
    }
    if alpha == beta {
        return Err(BijectionError::IdenticalComponents);
    }
    let mut i = 0;
    let (a_i, b_i) = loop {
        let a = alpha.parts().get(i).copied().unwrap_or(0);
        let b = beta.parts().get(i).copied().unwrap_or(0);
        if a != b {
            break (a, b);
        }
        i += 1;
    };
    let (new_alpha, new_beta, lowered) = if a_i < b_i {
        (
            alpha.union(&Partition::new(vec![b_i])),
            beta.try_remove(&Partition::new(vec![b_i]))
                .expect("differing part is present"),
            false,
        )
    } else {
        (
            alpha
                .try_remove(&Partition::new(vec![a_i]))
                .expect("differing part is present"),
            beta.union(&Partition::new(vec![a_i])),
            true,
        )
    };
    if alpha.len() == beta.len() && lowered {
        Ok((new_beta, new_alpha))
    } else {
        Ok((new_alpha, new_beta))
    }
}

/// All triples (distinct odd, distinct even, distinct even) of total size
/// `n`, in no particular order.
pub fn enumerate_triples(n: usize) -> Vec<TripleA> {
    let distinct_odd: Vec<Vec<Partition>> = (0..=n)
        .map(|m| {
            counting::enumerate_partitions_with_ceiling(m, n, |p| {
                p.has_distinct_parts() && p.parts().iter().all(|v| v % 2 == 1)
            })
            .expect("ceiling covers n")
        })
        .collect();
    let distinct_even: Vec<Vec<Partition>> = (0..=n)
        .map(|m| {
            if m % 2 == 1 {
                return Vec::new();
            }
            counting::enumerate_partitions_with_ceiling(m / 2, n, |p| p.has_distinct_parts())
                .expect("ceiling covers n")
                .into_iter()
                .map(|p| p.scale(2))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for (s, odds) in distinct_odd.iter().enumerate() {
        for t in 0..=(n - s) {
            let u = n - s - t;
            for mu in odds {
                for a in &distinct_even[t] {
                    for b in &distinct_even[u] {
                        out.push(TripleA {
                            odd: mu.clone(),
                            alpha: a.clone(),
                            beta: b.clone(),
                        });
                    }
                }
            }
        }
    }
    out
}

/// A staircase core with the two quotient partitions of the domino
/// decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCoreQuotient {
    pub core: Partition,
    pub first: Partition,
    pub second: Partition,
}

/// Removes dominoes greedily until none fits. The result is independent of
/// the removal order and is always a staircase.
pub fn two_core(p: &Partition) -> Partition {
    let mut parts = p.parts().to_vec();
    'outer: loop {
        let len = parts.len();
        for i in 0..len {
            // horizontal domino at the end of row i
            if parts[i] >= 2 && (i + 1 == len || parts[i] - 2 >= parts[i + 1]) {
                parts[i] -= 2;
                if parts[i] == 0 {
                    parts.remove(i);
                }
                continue 'outer;
            }
            // vertical domino at the ends of rows i, i+1
            if i + 1 < len
                && parts[i] == parts[i + 1]
                && (i + 2 >= len || parts[i + 1] > parts[i + 2])
            {
                parts[i] -= 1;
                parts[i + 1] -= 1;
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                continue 'outer;
            }
        }
        break;
    }
    Partition::new(parts)
}

/// Decomposes a partition into its domino core and quotient pair.
///
/// Cells are 2-colored by `(row + column) mod 2`. Rows with `row + length`
/// even read their first quotient entry as the number of odd-labeled columns
/// they meet; the remaining rows read the even-labeled columns. The size
/// satisfies `|p| = |core| + 2 |first| + 2 |second|`.
pub fn two_core_quotient(p: &Partition) -> TwoCoreQuotient {
    let parts = p.parts();
    let conj = p.conjugate();
    let odd_cols: Vec<usize> = (1..=conj.len())
        .filter(|&j| (conj.parts()[j - 1] + j) % 2 == 1)
        .collect();
    let even_cols: Vec<usize> = (1..=conj.len())
        .filter(|&j| (conj.parts()[j - 1] + j).is_multiple_of(2))
        .collect();
    let mut first = Vec::new();
    let mut second = Vec::new();
    for (idx, &li) in parts.iter().enumerate() {
        let i = idx + 1;
        if (i + li) % 2 == 0 {
            let c = odd_cols.iter().filter(|&&j| j <= li).count();
            if c > 0 {
                first.push(c);
            }
        } else {
            let c = even_cols.iter().filter(|&&j| j <= li).count();
            if c > 0 {
                second.push(c);
            }
        }
    }
    TwoCoreQuotient {
        core: two_core(p),
        first: Partition::new(first),
        second: Partition::new(second),
    }
}

/// The staircase partition `(k, k-1, ..., 1)`.
pub fn staircase(k: usize) -> Partition {
    Partition::new((1..=k).rev().collect())
}

/// Whether `p` is a staircase `(k, k-1, ..., 1)` for some `k >= 0`.
pub fn is_staircase(p: &Partition) -> bool {
    p.parts()
        .iter()
        .enumerate()
        .all(|(i, &v)| v == p.len() - i)
}

/// Inverse of [`two_core_quotient`]: rebuilds the partition from a staircase
/// core and two quotient partitions via first-column hook lengths, using an
/// even number of beads so the two runners are labeled consistently.
pub fn from_core_quotient(
    core: &Partition,
    first: &Partition,
    second: &Partition,
) -> Result<Partition, BijectionError> {
    if !is_staircase(core) {
        return Err(BijectionError::NotStaircase);
    }
    let mut beads = 2 * (core.len() + first.len() + second.len() + 2);
    loop {
        let hooks: Vec<usize> = (1..=beads)
            .map(|i| core.parts().get(i - 1).copied().unwrap_or(0) + beads - i)
            .collect();
        let m0 = hooks.iter().filter(|h| *h % 2 == 0).count();
        let m1 = beads - m0;
        if m0 < first.len() || m1 < second.len() {
            beads += 2;
            continue;
        }
        let mut all: Vec<usize> = (1..=m0)
            .map(|i| 2 * (first.parts().get(i - 1).copied().unwrap_or(0) + m0 - i))
            .collect();
        all.extend(
            (1..=m1).map(|i| 2 * (second.parts().get(i - 1).copied().unwrap_or(0) + m1 - i) + 1),
        );
        all.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = all
            .iter()
            .enumerate()
            .map(|(idx, &h)| h - (beads - (idx + 1)))
            .filter(|&v| v > 0)
            .collect();
        return Ok(Partition::new(parts));
    }
}

/// A distinct-odd-part partition reduced to a staircase index and a
/// quarter-size partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiImage {
    pub partition: Partition,
    pub staircase_index: usize,
}

/// The self-conjugate partition whose principal hook lengths are the parts
/// of `mu`.
fn self_conjugate_envelope(mu: &Partition) -> Partition {
    let ell = mu.len();
    let arms: Vec<usize> = mu.parts().iter().map(|v| (v - 1) / 2).collect();
    let mut parts: Vec<usize> = (0..ell).map(|i| arms[i] + i + 1).collect();
    let mut row = ell + 1;
    loop {
        let c = (0..ell).filter(|&j| arms[j] + j + 1 >= row).count();
        if c == 0 {
            break;
        }
        parts.push(c);
        row += 1;
    }
    Partition::new(parts)
}

/// Reads the principal hook lengths of a self-conjugate partition.
fn hooks_from_self_conjugate(sc: &Partition) -> Partition {
    let rows = sc.parts();
    let mut parts = Vec::new();
    for (i, &len) in rows.iter().enumerate() {
        if len < i + 1 {
            break;
        }
        parts.push(2 * (len - (i + 1)) + 1);
    }
    Partition::new(parts)
}

/// Reduces a partition with distinct odd parts to a quarter-size partition
/// and a staircase index: the self-conjugate envelope of `mu` is cut into its
/// domino core (a staircase of some index `k`) and quotient pair (mutually
/// conjugate), and the first quotient is kept. The size satisfies
/// `|mu| = k(k+1)/2 + 4 |partition|`.
pub fn xi_map(mu: &Partition) -> Result<XiImage, BijectionError> {
    require_odd_parts(mu)?;
    require_distinct(mu)?;
    let sc = self_conjugate_envelope(mu);
    debug_assert_eq!(sc.conjugate(), sc);
    let decomposition = two_core_quotient(&sc);
    debug_assert!(is_staircase(&decomposition.core));
    debug_assert_eq!(decomposition.second, decomposition.first.conjugate());
    Ok(XiImage {
        staircase_index: decomposition.core.len(),
        partition: decomposition.first,
    })
}

/// Inverse of [`xi_map`]: rebuilds the self-conjugate envelope from the
/// staircase of index `k` and the conjugate quotient pair, then reads off its
/// principal hooks.
pub fn xi_map_inverse(alpha: &Partition, k: usize) -> Result<Partition, BijectionError> {
    let sc = from_core_quotient(&staircase(k), alpha, &alpha.conjugate())?;
    debug_assert_eq!(sc.conjugate(), sc);
    Ok(hooks_from_self_conjugate(&sc))
}

/// Halves a distinct-part partition with no part divisible by 4 into a
/// partition with distinct odd parts, returning the staircase index consumed
/// by [`xi_map`]. The output size is `(n - k(k+1)/2) / 2`.
pub fn psi(p: &Partition) -> Result<(Partition, usize), BijectionError> {
    require_distinct(p)?;
    require_no_residue(p, 0, 4)?;
    let (evens, odds) = p.split_parity();
    let image = xi_map(&odds)?;
    let result = evens.unscale(2).union(&image.partition.scale(2));
    Ok((result, image.staircase_index))
}

/// Inverse of [`psi`].
pub fn psi_inverse(p: &Partition, k: usize) -> Result<Partition, BijectionError> {
    let (evens, odds) = p.split_parity();
    require_distinct(&odds)?;
    let mu = xi_map_inverse(&evens.unscale(2), k)?;
    Ok(mu.union(&odds.scale(2)))
}

/// Quarters a distinct-part partition with no part 2 mod 4 into an
/// overpartition, returning the staircase index consumed by [`xi_map`]: the
/// quartered multiples of 4 arrive overlined, the reduced odd parts arrive
/// plain. The output size is `(n - k(k+1)/2) / 4`.
pub fn rho(p: &Partition) -> Result<(Overpartition, usize), BijectionError> {
    require_distinct(p)?;
    require_no_residue(p, 2, 4)?;
    let (evens, odds) = p.split_parity();
    let image = xi_map(&odds)?;
    let quarters = evens.unscale(4);
    let mut parts = image.partition.parts().to_vec();
    parts.extend(quarters.parts());
    let overlined: BTreeSet<usize> = quarters.parts().iter().copied().collect();
    let over = Overpartition::new(parts, overlined).expect("overlined values are parts");
    Ok((over, image.staircase_index))
}

/// Inverse of [`rho`].
pub fn rho_inverse(op: &Overpartition, k: usize) -> Result<Partition, BijectionError> {
    let overlined = Partition::new(op.overlined().iter().copied().collect());
    let plain = Partition::new(op.parts().to_vec())
        .try_remove(&overlined)
        .expect("overlined values occur among the parts");
    let mu = xi_map_inverse(&plain, k)?;
    Ok(mu.union(&overlined.scale(4)))
}
