//! Integral homology and cohomology of the equivariant complexes.
//!
//! Every computation goes through the same pipeline: realize a group-ring
//! boundary matrix as an integer matrix (regular representation for the
//! covering sphere, augmentation for the quotient space), take certified
//! Smith normal forms, and read off Betti numbers and torsion coefficients
//! from ranks and elementary divisors. The formulas
//!
//! ```text
//! betti_k   = rank C_k − rank ∂_k − rank ∂_{k+1}
//! torsion_k = elementary divisors of ∂_{k+1} exceeding 1
//! ```
//!
//! are stated on realized integer matrices, where rank and divisors are
//! invariant under transposition — so they apply verbatim to row-vector and
//! column-vector complexes, and cohomology needs no explicit transposition
//! either, only the cohomological re-indexing.

use crate::complexes::{
    build_k, build_k_s3, extend_periodic, h1_generators_flag, ChainComplex, ComplexError,
    FlagH1Report, S3Mode,
};
use crate::group::{abelianization, GroupTag, Groups};
use crate::matrix::{smith_normal_form, determinant, IntMatrix, MatrixError};
use crate::ring::{RingError, RingMatrix};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

/// Errors from homology computations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HomologyError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    /// A realization would exceed the configured size guard.
    #[error("realized problem size {rows}x{cols} exceeds the {limit}x{limit} guard")]
    SizeLimitExceeded { rows: usize, cols: usize, limit: usize },
    /// A torsion coefficient does not fit the reporting integer type.
    #[error("a torsion coefficient exceeds the reportable integer range")]
    TorsionOverflow,
}

/// Largest realized matrix dimension the engine will accept.
pub const REALIZATION_SIZE_LIMIT: usize = 5000;

/// How a group-ring matrix is turned into an integer matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Realization {
    /// Each entry becomes an `n × n` integer block through the regular
    /// representation — the chain complex of the covering space.
    RegularRep,
    /// Each entry is replaced by its augmentation (coefficient sum) — the
    /// chain complex of the quotient space.
    Augment,
}

impl std::fmt::Display for Realization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Realization::RegularRep => write!(f, "regular_rep"),
            Realization::Augment => write!(f, "augment"),
        }
    }
}

/// Realizes one group-ring matrix as an integer matrix, guarded by
/// [`REALIZATION_SIZE_LIMIT`].
pub fn realize(m: &RingMatrix, realization: Realization) -> Result<IntMatrix, HomologyError> {
    let scale = match realization {
        Realization::RegularRep => m.group().order(),
        Realization::Augment => 1,
    };
    let (rows, cols) = (m.rows() * scale, m.cols() * scale);
    if rows > REALIZATION_SIZE_LIMIT || cols > REALIZATION_SIZE_LIMIT {
        return Err(HomologyError::SizeLimitExceeded {
            rows,
            cols,
            limit: REALIZATION_SIZE_LIMIT,
        });
    }
    Ok(match realization {
        Realization::RegularRep => m.regular_representation(),
        Realization::Augment => m.augmented(),
    })
}

/// One homology (or cohomology) group: free rank plus torsion coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeHomology {
    /// Free rank.
    pub betti: usize,
    /// Torsion coefficients, each exceeding 1 and dividing the next.
    pub torsion: Vec<u64>,
}

impl DegreeHomology {
    pub fn free(betti: usize) -> Self {
        Self { betti, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    /// Renders in the usual direct-sum notation, e.g. `Z ⊕ Z/2`.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ⊕ ")
        }
    }
}

/// Homology groups per degree, `degrees[k]` being `H_k` (or `H^k` for
/// cohomology tables).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    pub degrees: Vec<DegreeHomology>,
}

impl HomologyResult {
    /// Table rows `H_0 = Z`, `H_1 = Z/2`, … with the given symbol prefix
    /// (`"H_"` homological, `"H^"` cohomological).
    pub fn render_rows(&self, prefix: &str) -> Vec<String> {
        self.degrees
            .iter()
            .enumerate()
            .map(|(k, d)| format!("{prefix}{k} = {}", d.render()))
            .collect()
    }
}

fn torsion_to_u64(divisors: &[BigInt]) -> Result<Vec<u64>, HomologyError> {
    divisors
        .iter()
        .filter(|d| *d > &BigInt::from(1))
        .map(|d| d.to_u64().ok_or(HomologyError::TorsionOverflow))
        .collect()
}

/// Rank and elementary divisors of every boundary under the realization.
///
/// Periodic extensions repeat the same boundary matrices many times, so the
/// Smith normal forms are cached by symbolic equality of the group-ring
/// matrices.
fn boundary_invariants(
    c: &ChainComplex,
    realization: Realization,
    up_to: usize,
) -> Result<Vec<(usize, Vec<BigInt>)>, HomologyError> {
    // invariants[k] for k = 0..=up_to+1; out-of-range boundaries are rank 0.
    let mut invariants: Vec<(usize, Vec<BigInt>)> = vec![(0, Vec::new()); up_to + 2];
    let mut cache: Vec<(&RingMatrix, usize, Vec<BigInt>)> = Vec::new();
    // `k` is a chain degree passed to `boundary(k)`, not merely a slice index.
    #[allow(clippy::needless_range_loop)]
    for k in 1..=up_to.min(c.top_degree()) {
        let b = c.boundary(k);
        if let Some((_, rank, div)) = cache.iter().find(|(m, _, _)| *m == b) {
            invariants[k] = (*rank, div.clone());
            continue;
        }
        let snf = smith_normal_form(&realize(b, realization)?)?;
        invariants[k] = (snf.rank, snf.divisors.clone());
        cache.push((b, snf.rank, snf.divisors));
    }
    // One degree past the requested range still matters for betti numbers.
    let k = up_to + 1;
    if k <= c.top_degree() {
        let b = c.boundary(k);
        if let Some((_, rank, div)) = cache.iter().find(|(m, _, _)| *m == b) {
            invariants[k] = (*rank, div.clone());
        } else {
            let snf = smith_normal_form(&realize(b, realization)?)?;
            invariants[k] = (snf.rank, snf.divisors);
        }
    }
    Ok(invariants)
}

/// Integral homology of a verified complex under the chosen realization.
pub fn integral_homology(
    c: &ChainComplex,
    realization: Realization,
) -> Result<HomologyResult, HomologyError> {
    c.verify()?;
    let scale = match realization {
        Realization::RegularRep => c.group().order(),
        Realization::Augment => 1,
    };
    let top = c.top_degree();
    let inv = boundary_invariants(c, realization, top)?;
    let mut degrees = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let betti = (scale * c.ranks()[k])
            .checked_sub(inv[k].0)
            .and_then(|x| x.checked_sub(inv[k + 1].0))
            .expect("boundary ranks exceed chain rank; complex is not a complex");
        let torsion = torsion_to_u64(&inv[k + 1].1)?;
        degrees.push(DegreeHomology { betti, torsion });
    }
    Ok(HomologyResult { degrees })
}

/// Homology of the quotient space: the augmentation realization of the
/// length-3 complex for the given group.
pub fn quotient_homology(groups: &Groups, tag: GroupTag) -> Result<HomologyResult, HomologyError> {
    let c = build_k(groups, tag)?;
    integral_homology(&c, Realization::Augment)
}

/// Homology of the `(4n−1)`-sphere carrying the free cellular action:
/// the regular-representation realization of the `n`-period extension.
///
/// Expected shape: `Z` in degrees `0` and `4n−1`, zero in between.
pub fn sphere_homology(
    groups: &Groups,
    tag: GroupTag,
    n: usize,
) -> Result<HomologyResult, HomologyError> {
    assert!(n >= 1, "need at least one period");
    let base = build_k(groups, tag)?;
    let max_rank = *base.ranks().iter().max().expect("nonempty ranks");
    let work = max_rank * base.group().order() * 4 * n;
    if work > REALIZATION_SIZE_LIMIT {
        return Err(HomologyError::SizeLimitExceeded {
            rows: work,
            cols: work,
            limit: REALIZATION_SIZE_LIMIT,
        });
    }
    let ext = extend_periodic(&base, n)?;
    integral_homology(&ext, Realization::RegularRep)
}

/// Group cohomology `H^q(G; Z)` for `q = 0..=q_max`.
///
/// The periodic resolution is extended past degree `q_max + 1`, the
/// augmentation is applied entrywise (the coefficients-in-`Z` functor on a
/// free resolution), and the result is re-indexed cohomologically: the
/// cochain differential out of degree `q` is the transpose of the realized
/// `∂_{q+1}`, and since rank and elementary divisors are invariant under
/// transposition,
///
/// ```text
/// betti^q   = rank C_q − rank ∂_q − rank ∂_{q+1}
/// torsion^q = elementary divisors of ∂_q exceeding 1
/// ```
pub fn group_cohomology_table(
    groups: &Groups,
    tag: GroupTag,
    q_max: usize,
) -> Result<HomologyResult, HomologyError> {
    assert!(q_max >= 4, "table must reach past one period");
    let base = build_k(groups, tag)?;
    let periods = (q_max + 2).div_ceil(4);
    let ext = extend_periodic(&base, periods)?;
    ext.verify()?;
    let inv = boundary_invariants(&ext, Realization::Augment, q_max + 1)?;
    let mut degrees = Vec::with_capacity(q_max + 1);
    for q in 0..=q_max {
        let betti = ext.ranks()[q]
            .checked_sub(inv[q].0)
            .and_then(|x| x.checked_sub(inv[q + 1].0))
            .expect("boundary ranks exceed chain rank; complex is not a complex");
        let torsion = torsion_to_u64(&inv[q].1)?;
        degrees.push(DegreeHomology { betti, torsion });
    }
    Ok(HomologyResult { degrees })
}

/// Determinant of the augmented middle boundary `ε(∂₂)` of the length-3
/// complex — the single invariant deciding the quotient's degree-1 homology.
/// `1` for the order-120 group certifies the quotient is a homology sphere.
pub fn poincare_determinant(groups: &Groups, tag: GroupTag) -> Result<BigInt, HomologyError> {
    let c = build_k(groups, tag)?;
    let d2 = realize(c.boundary(2), Realization::Augment)?;
    Ok(determinant(&d2)?)
}

/// Homology data of the full flag variety: integral and mod-2, together with
/// the explicit degree-1 generator analysis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlagHomologyReport {
    /// Integral homology `(Z, (Z/2)², 0, Z)`.
    pub integral: HomologyResult,
    /// Mod-2 Betti numbers `(1, 2, 2, 1)`.
    pub mod2_betti: Vec<usize>,
    /// Total mod-2 dimension — equals the group order.
    pub mod2_total_dimension: usize,
    /// Generator-level description of degree-1 homology with the induced
    /// reflection action.
    pub generators: FlagH1Report,
}

/// Computes the flag-variety homology report.
///
/// The integral homology uses the regular-representation realization: the
/// rank-(1,3,3,1) complex of free modules *is* the cellular chain complex of
/// the flag variety itself, with one cell per group element and generator
/// (the augmentation realization would instead produce the quotient's
/// homology). Mod-2 Betti numbers come from bit-matrix ranks of the same
/// realization.
pub fn flag_homology_report(groups: &Groups) -> Result<FlagHomologyReport, HomologyError> {
    let c = build_k_s3(groups, S3Mode::Literal)?;
    let integral = integral_homology(&c, Realization::RegularRep)?;

    let n = c.group().order();
    let top = c.top_degree();
    let mut rank2 = vec![0usize; top + 2];
    // `k` is a chain degree passed to `boundary(k)`, not merely a slice index.
    #[allow(clippy::needless_range_loop)]
    for k in 1..=top {
        rank2[k] = realize(c.boundary(k), Realization::RegularRep)?.mod2().rank();
    }
    let mod2_betti: Vec<usize> = (0..=top)
        .map(|k| n * c.ranks()[k] - rank2[k] - rank2[k + 1])
        .collect();
    let mod2_total_dimension = mod2_betti.iter().sum();

    let generators = h1_generators_flag(groups)?;
    Ok(FlagHomologyReport { integral, mod2_betti, mod2_total_dimension, generators })
}

/// Checks that degree-1 homology of the quotient equals the abelianization
/// of the group, computed independently from the multiplication table.
pub fn quotient_h1_matches_abelianization(
    groups: &Groups,
    tag: GroupTag,
) -> Result<bool, HomologyError> {
    let h = quotient_homology(groups, tag)?;
    let h1 = &h.degrees[1];
    let ab = abelianization(groups.by_tag(tag));
    Ok(h1.betti == 0 && h1.torsion == ab)
}

/// Euler characteristic bookkeeping: the alternating sum of realized chain
/// ranks must equal the alternating sum of Betti numbers.
pub fn euler_consistency(
    c: &ChainComplex,
    realization: Realization,
) -> Result<bool, HomologyError> {
    let scale = match realization {
        Realization::RegularRep => c.group().order(),
        Realization::Augment => 1,
    };
    let result = integral_homology(c, realization)?;
    let chain_sum: i64 = c
        .ranks()
        .iter()
        .enumerate()
        .map(|(k, &r)| (scale * r) as i64 * if k % 2 == 0 { 1 } else { -1 })
        .sum();
    let betti_sum: i64 = result
        .degrees
        .iter()
        .enumerate()
        .map(|(k, d)| d.betti as i64 * if k % 2 == 0 { 1 } else { -1 })
        .sum();
    Ok(chain_sum == betti_sum)
}
