//! Spectral identities of the chain family.
//!
//! The pairing automorphism `i <-> i'` block-diagonalizes the Laplacian:
//! its spectrum is the union of the spectra of the sum block
//! `L_11 + L_12` and the difference block `L_11 - L_12`. For every member
//! of the family the sum block equals twice the path Laplacian (so it is
//! independent of which verticals were deleted) and the difference block
//! is diagonal with entries in `{2, 4, 6}` read off the vertical-edge
//! pattern. The normalized (degree-scaled) analogues drive the
//! multiplicative degree-Kirchhoff closed form through two coefficient
//! identities of the scaled sum block.
//!
//! Every identity here is checked over exact rationals; the only floating
//! point is the trigonometric closed form for the sum-block eigenvalues,
//! which is cross-checked against exact polynomial sign changes.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::chain_graphs::{build_subchain, end_degree_sum, laplacian, laplacian_blocks, ChainSpec};
use crate::error::{Error, Result};
use crate::exact_linalg::{
    big_power_product, char_poly, determinant, rat, ratio, BigInt, Rational, RationalMatrix,
};

/// The two blocks whose spectra join to the full Laplacian spectrum:
/// `sum = L_11 + L_12` and `difference = L_11 - L_12` in the canonical
/// top-then-bottom ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPair {
    pub sum: RationalMatrix,
    pub difference: RationalMatrix,
}

/// Splits the Laplacian of `spec` into its sum and difference blocks and
/// verifies, by exact coefficient equality, that the characteristic
/// polynomial of the full Laplacian is the product of the blocks'. A
/// failure of that product identity indicates a bug, not bad input.
///
/// The sum block is the same matrix for every deletion set (deleting a
/// vertical removes 1 from a diagonal entry of `L_11` and adds 1 to the
/// matching entry of `L_12`).
pub fn decompose(spec: &ChainSpec) -> Result<BlockPair> {
    let g = build_subchain(spec);
    let (l11, l12) = laplacian_blocks(&g, spec)?;
    let sum = l11.add(&l12)?.to_rational();
    let difference = l11.sub(&l12)?.to_rational();

    let full = char_poly(&laplacian(&g).to_rational())?;
    let product = char_poly(&sum)?.mul(&char_poly(&difference)?);
    if full != product {
        return Err(Error::IdentityViolation(
            "block characteristic polynomials do not multiply to the full one",
        ));
    }

    for i in 0..difference.rows() {
        for j in 0..difference.cols() {
            let e = difference.get(i, j);
            let ok = if i == j {
                *e == rat(2) || *e == rat(4) || *e == rat(6)
            } else {
                e.is_zero()
            };
            if !ok {
                return Err(Error::IdentityViolation(
                    "difference block is not diagonal with entries in {2, 4, 6}",
                ));
            }
        }
    }
    Ok(BlockPair { sum, difference })
}

// ---------------------------------------------------------------------------
// Sum block (twice the path Laplacian)
// ---------------------------------------------------------------------------

/// The `(n+1) x (n+1)` sum block itself: tridiagonal `(2, 4, ..., 4, 2)`
/// with `-2` off the diagonal, i.e. twice the path Laplacian.
pub fn sum_block(n: usize) -> RationalMatrix {
    assert!(n >= 1, "chain length must be at least 1");
    RationalMatrix::from_fn(n + 1, n + 1, |i, j| {
        if i == j {
            if i == 0 || i == n {
                rat(2)
            } else {
                rat(4)
            }
        } else if i.abs_diff(j) == 1 {
            rat(-2)
        } else {
            rat(0)
        }
    })
}

/// Closed-form sum-block eigenvalues `8 sin^2(k pi / (2(n+1)))` for
/// `k = 0..=n`, nondecreasing; the first entry is exactly zero.
///
/// These floats are a redundant cross-check on the exact characteristic
/// polynomial (see [`sum_block_roots_match`]); nothing downstream consumes
/// them exactly.
pub fn sum_block_eigenvalues(n: usize) -> Vec<f64> {
    assert!(n >= 1, "chain length must be at least 1");
    (0..=n)
        .map(|k| {
            let s = libm::sin(core::f64::consts::PI * k as f64 / (2.0 * (n as f64 + 1.0)));
            8.0 * s * s
        })
        .collect()
}

/// Checks that every closed-form eigenvalue sits within `tol` of a root of
/// the exact sum-block characteristic polynomial, by exact sign evaluation
/// at the interval endpoints (the roots are simple, so a sign change pins
/// a root).
pub fn sum_block_roots_match(n: usize, tol: f64) -> Result<bool> {
    let poly = char_poly(&sum_block(n))?;
    let eps = Rational::from_float(tol).expect("finite tolerance");
    for value in sum_block_eigenvalues(n) {
        let center = Rational::from_float(value).expect("finite eigenvalue");
        let lo = poly.eval(&(&center - &eps));
        let hi = poly.eval(&(&center + &eps));
        let pinned = lo.is_zero() || hi.is_zero() || (lo.is_negative() != hi.is_negative());
        if !pinned {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sum of reciprocals of the nonzero sum-block eigenvalues:
/// `n(n+2)/12`, cross-checked exactly against the characteristic
/// polynomial (ratio of the `x^2` and `x^1` coefficients, by Vieta).
pub fn sum_block_recip_sum(n: usize) -> Result<Rational> {
    let closed = Rational::new(BigInt::from(n) * BigInt::from(n + 2), BigInt::from(12));
    let poly = char_poly(&sum_block(n))?;
    let linear = poly.coeff_of_power(1);
    let quadratic = poly.coeff_of_power(2);
    if linear.is_zero() || -&quadratic / &linear != closed {
        return Err(Error::IdentityViolation(
            "sum-block reciprocal eigenvalue sum disagrees with coefficients",
        ));
    }
    Ok(closed)
}

/// Product of the nonzero sum-block eigenvalues: `(n+1) 2^n`,
/// cross-checked exactly against the `x^1` coefficient of the
/// characteristic polynomial.
pub fn sum_block_eigen_product(n: usize) -> Result<BigInt> {
    let closed = BigInt::from(n + 1) * big_power_product(&[(2, n as i64)])?;
    let poly = char_poly(&sum_block(n))?;
    let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
    if sign * poly.coeff_of_power(1) != Rational::from_integer(closed.clone()) {
        return Err(Error::IdentityViolation(
            "sum-block eigenvalue product disagrees with coefficients",
        ));
    }
    Ok(closed)
}

// ---------------------------------------------------------------------------
// Difference block (diagonal)
// ---------------------------------------------------------------------------

/// Which end verticals survive; numbered the way the case analysis of the
/// difference-block spectrum splits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumCase {
    /// Both end verticals deleted (`d = 4`).
    BothEndsDeleted,
    /// Both end verticals kept (`d = 6`); covers the full chain.
    BothEndsKept,
    /// Exactly one end vertical deleted (`d = 5`).
    OneEndDeleted,
}

impl SpectrumCase {
    pub fn number(self) -> u8 {
        match self {
            SpectrumCase::BothEndsDeleted => 1,
            SpectrumCase::BothEndsKept => 2,
            SpectrumCase::OneEndDeleted => 3,
        }
    }
}

/// Eigenvalue multiset of the difference block, entries ascending with
/// multiplicities, plus the end-vertical case tag. Total multiplicity is
/// `n + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffSpectrum {
    entries: Vec<(Rational, usize)>,
    case: SpectrumCase,
}

impl DiffSpectrum {
    /// `(eigenvalue, multiplicity)` pairs, ascending, multiplicities > 0.
    pub fn entries(&self) -> &[(Rational, usize)] {
        &self.entries
    }

    pub fn case(&self) -> SpectrumCase {
        self.case
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// Exact sum of reciprocals over the multiset.
    pub fn recip_sum(&self) -> Rational {
        self.entries
            .iter()
            .map(|(v, m)| rat(*m as i64) / v)
            .sum()
    }

    /// Exact product over the multiset (entries are integers).
    pub fn product(&self) -> BigInt {
        let mut acc = Rational::one();
        for (v, m) in &self.entries {
            for _ in 0..*m {
                acc *= v;
            }
        }
        debug_assert!(acc.is_integer());
        acc.to_integer()
    }
}

/// Difference-block spectrum read off the vertical-edge pattern: each
/// diagonal entry is `2 * floor((deg + 1) / 2)` for the corresponding top
/// vertex, so eigenvalue 2 appears once per deleted end vertical, 4 once
/// per kept end vertical or deleted internal vertical, and 6 once per kept
/// internal vertical. Matches the diagonal produced by [`decompose`].
pub fn diff_spectrum(spec: &ChainSpec) -> DiffSpectrum {
    let n = spec.n();
    let deleted_ends = usize::from(spec.is_deleted(1)) + usize::from(spec.is_deleted(n + 1));
    let internal_count = n.saturating_sub(1);
    let deleted_internal = spec.r() - deleted_ends;
    let kept_ends = 2 - deleted_ends;
    let kept_internal = internal_count - deleted_internal;

    let mut entries = Vec::new();
    for (value, mult) in [
        (2, deleted_ends),
        (4, kept_ends + deleted_internal),
        (6, kept_internal),
    ] {
        if mult > 0 {
            entries.push((rat(value), mult));
        }
    }
    let case = match deleted_ends {
        0 => SpectrumCase::BothEndsKept,
        1 => SpectrumCase::OneEndDeleted,
        _ => SpectrumCase::BothEndsDeleted,
    };
    DiffSpectrum { entries, case }
}

/// Sum of reciprocals of the difference-block eigenvalues:
/// `(2n + r - 2d + 16)/12` with `d` the end-degree sum, cross-checked
/// exactly against the multiset. For the full chain this is `(n+2)/6`.
pub fn diff_recip_sum(spec: &ChainSpec) -> Result<Rational> {
    let n = spec.n() as i64;
    let r = spec.r() as i64;
    let d = end_degree_sum(spec).value() as i64;
    let closed = ratio(2 * n + r - 2 * d + 16, 12);
    if diff_spectrum(spec).recip_sum() != closed {
        return Err(Error::IdentityViolation(
            "difference-block reciprocal sum disagrees with its multiset",
        ));
    }
    Ok(closed)
}

/// Product of the difference-block eigenvalues:
/// `2^{n+r+2d-9} * 3^{n-r-d+5}`, cross-checked exactly against the
/// multiset.
pub fn diff_eigen_product(spec: &ChainSpec) -> Result<BigInt> {
    let n = spec.n() as i64;
    let r = spec.r() as i64;
    let d = end_degree_sum(spec).value() as i64;
    let closed = big_power_product(&[(2, n + r + 2 * d - 9), (3, n - r - d + 5)])?;
    if diff_spectrum(spec).product() != closed {
        return Err(Error::IdentityViolation(
            "difference-block eigenvalue product disagrees with its multiset",
        ));
    }
    Ok(closed)
}

// ---------------------------------------------------------------------------
// Normalized (degree-scaled) blocks
// ---------------------------------------------------------------------------

/// Degrees of the top vertices of the full chain: `(3, 5, ..., 5, 3)`.
fn chain_top_degrees(n: usize) -> Vec<i64> {
    (0..=n)
        .map(|i| if i == 0 || i == n { 3 } else { 5 })
        .collect()
}

/// Degree-scaled sum block `D^{-1} (L_11 + L_12)` of the full chain.
///
/// This rational matrix is similar (via conjugation by `D^{1/2}`) to the
/// symmetric normalized sum block, so it has the identical characteristic
/// polynomial while keeping every entry rational; the square roots of the
/// symmetric form are purely presentational. It annihilates the all-ones
/// vector exactly.
pub fn normalized_sum_block(n: usize) -> RationalMatrix {
    assert!(n >= 1, "chain length must be at least 1");
    let degrees = chain_top_degrees(n);
    let raw = sum_block(n);
    RationalMatrix::from_fn(n + 1, n + 1, |i, j| raw.get(i, j) / rat(degrees[i]))
}

/// Degree-scaled difference block `D^{-1} (L_11 - L_12)` of the full
/// chain: diagonal `(4/3, 6/5, ..., 6/5, 4/3)`.
pub fn normalized_diff_block(n: usize) -> RationalMatrix {
    assert!(n >= 1, "chain length must be at least 1");
    let degrees = chain_top_degrees(n);
    RationalMatrix::from_fn(n + 1, n + 1, |i, j| {
        if i == j {
            let s = if i == 0 || i == n { 4 } else { 6 };
            rat(s) / rat(degrees[i])
        } else {
            rat(0)
        }
    })
}

/// Eigenvalue multiset of the normalized difference block:
/// `6/5` with multiplicity `n - 1` and `4/3` with multiplicity 2,
/// ascending.
pub fn normalized_diff_spectrum(n: usize) -> Vec<(Rational, usize)> {
    assert!(n >= 1, "chain length must be at least 1");
    let mut entries = Vec::new();
    if n > 1 {
        entries.push((ratio(6, 5), n - 1));
    }
    entries.push((ratio(4, 3), 2));
    entries
}

/// Sum of reciprocals over the normalized difference spectrum; equals
/// `(5n + 4)/6`.
pub fn normalized_diff_recip_sum(n: usize) -> Rational {
    normalized_diff_spectrum(n)
        .iter()
        .map(|(v, m)| rat(*m as i64) / v)
        .sum()
}

/// The two signed low-order coefficients of the degree-scaled sum block's
/// characteristic polynomial `x^{n+1} + a_1 x^n + ... + a_n x`, together
/// with the leading principal minors `c_0..=c_n` of the block.
///
/// `signed_linear` is `(-1)^n a_n` (the sum of the `n x n` principal
/// minors) and `signed_quadratic` is `(-1)^{n-1} a_{n-1}`; their ratio is
/// the reciprocal eigenvalue sum by Vieta.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedCoeffs {
    pub n: usize,
    pub signed_linear: Rational,
    pub signed_quadratic: Rational,
    pub minors: Vec<Rational>,
}

/// Closed form for `(-1)^n a_n`: `(25n + 5)/9 * (2/5)^n`.
pub fn signed_linear_closed(n: usize) -> Rational {
    ratio(25 * n as i64 + 5, 9) * two_fifths_pow(n as i64)
}

/// Closed form for `(-1)^{n-1} a_{n-1}`:
/// `n(25n^2 + 15n + 14)/54 * (2/5)^{n-1}`.
pub fn signed_quadratic_closed(n: usize) -> Rational {
    let n_big = BigInt::from(n);
    let poly = BigInt::from(25u32) * &n_big * &n_big + BigInt::from(15u32) * &n_big
        + BigInt::from(14u32);
    Rational::new(n_big * poly, BigInt::from(54)) * two_fifths_pow(n as i64 - 1)
}

/// Closed form for the leading principal minor `c_i` of the degree-scaled
/// sum block: `(5/3) (2/5)^i`, valid for `1 <= i <= n` (the empty minor
/// `c_0` is 1 by convention and is not covered by this form).
pub fn minor_closed(i: usize) -> Rational {
    ratio(5, 3) * two_fifths_pow(i as i64)
}

fn two_fifths_pow(e: i64) -> Rational {
    let p = Rational::new(BigInt::from(2), BigInt::from(5));
    if e >= 0 {
        num_traits::pow::pow(p, e as usize)
    } else {
        num_traits::pow::pow(p.recip(), (-e) as usize)
    }
}

/// Computes [`NormalizedCoeffs`] from the exact characteristic polynomial
/// and leading-minor determinants, then checks the two coefficient closed
/// forms, the minor closed form, and the minor recurrence
/// `c_i = (4/5) c_{i-1} - (4/25) c_{i-2}` (valid from `i = 3`, where the
/// last expanded row no longer touches a corner entry; `c_2` comes from
/// the corner entry directly).
pub fn normalized_coeffs(n: usize) -> Result<NormalizedCoeffs> {
    let block = normalized_sum_block(n);
    let poly = char_poly(&block)?;
    if !poly.coeff_of_power(0).is_zero() {
        return Err(Error::IdentityViolation(
            "degree-scaled sum block must be singular",
        ));
    }
    let sign = |k: usize| if k % 2 == 0 { rat(1) } else { rat(-1) };
    let signed_linear = sign(n) * poly.coeff_of_power(1);
    let signed_quadratic = sign(n - 1) * poly.coeff_of_power(2);

    let mut minors = Vec::with_capacity(n + 1);
    for i in 0..=n {
        minors.push(determinant(&block.leading_principal(i))?);
    }

    if signed_linear != signed_linear_closed(n) {
        return Err(Error::IdentityViolation(
            "signed linear coefficient disagrees with its closed form",
        ));
    }
    if signed_quadratic != signed_quadratic_closed(n) {
        return Err(Error::IdentityViolation(
            "signed quadratic coefficient disagrees with its closed form",
        ));
    }
    for (i, minor) in minors.iter().enumerate().skip(1) {
        if *minor != minor_closed(i) {
            return Err(Error::IdentityViolation(
                "leading principal minor disagrees with its closed form",
            ));
        }
    }
    for i in 3..=n {
        let expected = ratio(4, 5) * &minors[i - 1] - ratio(4, 25) * &minors[i - 2];
        if minors[i] != expected {
            return Err(Error::IdentityViolation(
                "leading principal minors violate the three-term recurrence",
            ));
        }
    }
    Ok(NormalizedCoeffs {
        n,
        signed_linear,
        signed_quadratic,
        minors,
    })
}

/// Closed form for the reciprocal sum of the nonzero eigenvalues of the
/// normalized sum block: `n(25n^2 + 15n + 14) / (12(5n + 1))`.
pub fn normalized_sum_recip_sum_closed(n: usize) -> Rational {
    let n_big = BigInt::from(n);
    let poly = BigInt::from(25u32) * &n_big * &n_big + BigInt::from(15u32) * &n_big
        + BigInt::from(14u32);
    Rational::new(n_big * poly, BigInt::from(12) * (BigInt::from(5u32) * BigInt::from(n) + BigInt::one()))
}

/// Reciprocal sum of the nonzero normalized sum-block eigenvalues, as the
/// Vieta ratio of the signed coefficients; checked against the closed
/// form.
pub fn normalized_sum_recip_sum(n: usize) -> Result<Rational> {
    let coeffs = normalized_coeffs(n)?;
    let value = &coeffs.signed_quadratic / &coeffs.signed_linear;
    if value != normalized_sum_recip_sum_closed(n) {
        return Err(Error::IdentityViolation(
            "normalized reciprocal sum disagrees with its closed form",
        ));
    }
    Ok(value)
}

/// Determinant of the `size x size` interior tridiagonal block (diagonal
/// `4/5`, off-diagonal `-2/5`) that shows up when a principal minor of the
/// degree-scaled sum block straddles two removed indices; equals
/// `(2/5)^size * (size + 1)`.
pub fn interior_block_det(size: usize) -> Result<Rational> {
    let m = RationalMatrix::from_fn(size, size, |i, j| {
        if i == j {
            ratio(4, 5)
        } else if i.abs_diff(j) == 1 {
            ratio(-2, 5)
        } else {
            rat(0)
        }
    });
    determinant(&m)
}

/// Closed form for [`interior_block_det`].
pub fn interior_block_det_closed(size: usize) -> Rational {
    two_fifths_pow(size as i64) * rat(size as i64 + 1)
}
