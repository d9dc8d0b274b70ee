//! Closed-form values of every invariant of the chain family, including
//! the corrected versions of two published misprints.
//!
//! Two formulas circulate in print with typos that the brute-force oracles
//! contradict: the Wiener index of the full chain (printed
//! `(2n^3 + 7n^2 + 6n + 3)/3`, actually `(2n^3 + 6n^2 + 7n + 3)/3`) and the
//! internal-vertex distance row sum (printed trailing `+1`, actually `+3`).
//! The corrected forms are the default everywhere; the as-printed variants
//! are kept so the discrepancy can be demonstrated rather than silently
//! patched over.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_linalg::{big_power_product, BigInt, Rational};

/// Selects between a corrected formula and the version as printed in the
/// reference material. `Corrected` is the default everywhere; `AsPrinted`
/// exists only for the formulas with documented misprints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FormulaVariant {
    AsPrinted,
    #[default]
    Corrected,
}

fn require_chain(n: usize) {
    assert!(n >= 1, "chain length must be at least 1");
}

fn big(v: i128) -> BigInt {
    BigInt::from(v)
}

/// Exact division helper for formulas whose numerators are provably
/// divisible; a nonzero remainder would mean the formula itself is wrong.
fn exact_div(numer: BigInt, denom: i128) -> BigInt {
    let (q, r) = numer.div_rem(&big(denom));
    debug_assert!(r.is_zero(), "formula numerator not divisible");
    q
}

/// Kirchhoff index of the full chain: `(n+1)(n+2)^2 / 6`.
pub fn kirchhoff_chain(n: usize) -> Rational {
    require_chain(n);
    let n = n as i128;
    Rational::new(big((n + 1) * (n + 2) * (n + 2)), big(6))
}

/// Multiplicative degree-Kirchhoff index of the full chain:
/// `(25n^3 + 65n^2 + 64n + 8) / 6`.
pub fn mult_deg_kirchhoff_chain(n: usize) -> Rational {
    require_chain(n);
    let n = n as i128;
    Rational::new(big(25 * n * n * n + 65 * n * n + 64 * n + 8), big(6))
}

/// Spanning-tree count of the full chain: `2^{2n+2} * 3^{n-1}`.
pub fn spanning_trees_chain(n: usize) -> BigInt {
    require_chain(n);
    big_power_product(&[(2, 2 * n as i64 + 2), (3, n as i64 - 1)])
        .expect("exponents are nonnegative for n >= 1")
}

/// Wiener index of the full chain.
///
/// `Corrected` returns `(2n^3 + 6n^2 + 7n + 3)/3 = (n+1)(2n^2 + 4n + 3)/3`,
/// integral for every `n` and equal to the BFS oracle. `AsPrinted` returns
/// the published expression `(2n^3 + 7n^2 + 6n + 3)/3`, which is not even
/// integral at `n = 2`; it is retained for demonstration only.
pub fn wiener_chain(n: usize, variant: FormulaVariant) -> Rational {
    require_chain(n);
    let n = n as i128;
    let numer = match variant {
        FormulaVariant::Corrected => 2 * n * n * n + 6 * n * n + 7 * n + 3,
        FormulaVariant::AsPrinted => 2 * n * n * n + 7 * n * n + 6 * n + 3,
    };
    Rational::new(big(numer), big(3))
}

/// Gutman index of the full chain: `(50n^3 + 30n^2 + 103n - 21)/3`
/// (always integral).
pub fn gutman_chain(n: usize) -> BigInt {
    require_chain(n);
    let n = n as i128;
    exact_div(big(50 * n * n * n + 30 * n * n + 103 * n - 21), 3)
}

/// Distance and degree-weighted row sums of single vertices of the full
/// chain; each equals the corresponding BFS row sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexRowSums {
    /// Distance row sum of a corner vertex: `n^2 + n + 1`.
    pub corner_distance: BigInt,
    /// Distance row sum of internal top vertex `i` (corrected form):
    /// `n^2 - 2ni + 3n + 2i^2 - 4i + 3`.
    pub internal_distance: BigInt,
    /// Weighted row sum of a corner vertex: `15n^2 + 3n + 9`.
    pub corner_weighted: BigInt,
    /// Weighted row sum of internal top vertex `i`:
    /// `25n^2 - 50ni + 55n + 50i^2 - 100i + 75`.
    pub internal_weighted: BigInt,
}

/// Row sums for internal vertex `i` (with the corner values alongside);
/// `i` must lie in `2..=n`.
pub fn vertex_row_sums(n: usize, i: usize) -> Result<VertexRowSums> {
    require_chain(n);
    if i < 2 || i > n {
        return Err(Error::InternalVertexOutOfRange { i, n });
    }
    let internal_distance = internal_distance_row(n, i, FormulaVariant::Corrected)?;
    let (n_i, i_i) = (n as i128, i as i128);
    Ok(VertexRowSums {
        corner_distance: corner_distance_row(n),
        internal_distance,
        corner_weighted: corner_weighted_row(n),
        internal_weighted: big(
            25 * n_i * n_i - 50 * n_i * i_i + 55 * n_i + 50 * i_i * i_i - 100 * i_i + 75,
        ),
    })
}

/// Distance row sum of a corner vertex: `n^2 + n + 1`.
pub fn corner_distance_row(n: usize) -> BigInt {
    require_chain(n);
    let n = n as i128;
    big(n * n + n + 1)
}

/// Weighted row sum of a corner vertex: `15n^2 + 3n + 9`.
pub fn corner_weighted_row(n: usize) -> BigInt {
    require_chain(n);
    let n = n as i128;
    big(15 * n * n + 3 * n + 9)
}

/// Distance row sum of internal vertex `i`. The published constant term is
/// `+1`; the summation it abbreviates expands to `+3`, which is what the
/// BFS oracle confirms.
pub fn internal_distance_row(n: usize, i: usize, variant: FormulaVariant) -> Result<BigInt> {
    require_chain(n);
    if i < 2 || i > n {
        return Err(Error::InternalVertexOutOfRange { i, n });
    }
    let (n, i) = (n as i128, i as i128);
    let constant = match variant {
        FormulaVariant::Corrected => 3,
        FormulaVariant::AsPrinted => 1,
    };
    Ok(big(n * n - 2 * n * i + 3 * n + 2 * i * i - 4 * i + constant))
}

/// Checks that `(r, d)` is realizable by some deletion set on `n` blocks:
/// `d = 6` needs both ends kept (`r <= n - 1`), `d = 5` exactly one end
/// deleted (`1 <= r <= n`), `d = 4` both ends deleted (`2 <= r <= n + 1`).
pub fn validate_deletion_summary(n: usize, r: usize, d: u8) -> Result<()> {
    require_chain(n);
    let ok = match d {
        6 => r + 1 <= n,          // r <= n - 1
        5 => r >= 1 && r <= n,
        4 => r >= 2 && r <= n + 1,
        _ => false,
    } || (d == 6 && r == 0);
    if ok {
        Ok(())
    } else {
        Err(Error::IncompatibleDeletionSummary { n, r, d })
    }
}

/// Kirchhoff index of any subchain with `r` deletions and end-degree sum
/// `d`: `(n+1)(n^2 + 4n + r - 2d + 16)/6`. At `(r, d) = (0, 6)` this
/// reduces to [`kirchhoff_chain`]. The value depends on the deletion set
/// only through `(n, r, d)`.
pub fn kirchhoff_subchain(n: usize, r: usize, d: u8) -> Result<Rational> {
    validate_deletion_summary(n, r, d)?;
    let (n, r, d) = (n as i128, r as i128, d as i128);
    Ok(Rational::new(
        big((n + 1) * (n * n + 4 * n + r - 2 * d + 16)),
        big(6),
    ))
}

/// Spanning-tree count of any subchain: `2^{2n+r+2d-10} * 3^{n-r-d+5}`.
/// At `(r, d) = (0, 6)` this reduces to [`spanning_trees_chain`].
pub fn spanning_trees_subchain(n: usize, r: usize, d: u8) -> Result<BigInt> {
    validate_deletion_summary(n, r, d)?;
    let (n, r, d) = (n as i64, r as i64, d as i64);
    big_power_product(&[(2, 2 * n + r + 2 * d - 10), (3, n - r - d + 5)])
}

/// Wiener index of any subchain with `r` deletions: the corrected chain
/// value plus `r`. Each deleted vertical raises exactly one pairwise
/// distance from 1 to 2, so the value depends only on `r`, not on which
/// verticals were removed.
pub fn wiener_subchain(n: usize, r: usize) -> BigInt {
    require_chain(n);
    assert!(r <= n + 1, "deletion count out of range");
    let w = wiener_chain(n, FormulaVariant::Corrected);
    debug_assert!(w.is_integer());
    w.to_integer() + BigInt::from(r)
}

/// The two convergence diagnostics, exact: both ratios tend to `1/4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioReport {
    pub kf_over_w: Rational,
    pub kfstar_over_gut: Rational,
}

/// Ratios of the resistance-based indices to their shortest-path
/// analogues. The variant selects which Wiener formula enters the first
/// ratio; `Corrected` is the honest diagnostic, `AsPrinted` reproduces the
/// ratio as the published Wiener expression would have it.
pub fn ratio_report(n: usize, variant: FormulaVariant) -> RatioReport {
    require_chain(n);
    RatioReport {
        kf_over_w: kirchhoff_chain(n) / wiener_chain(n, variant),
        kfstar_over_gut: mult_deg_kirchhoff_chain(n)
            / Rational::from_integer(gutman_chain(n)),
    }
}

/// Absolute deviation of a ratio from the limiting value `1/4`.
pub fn deviation_from_quarter(ratio: &Rational) -> Rational {
    (ratio - Rational::new(BigInt::one(), BigInt::from(4))).abs()
}
