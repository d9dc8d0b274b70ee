//! The `spectrum` subcommand: block decomposition of one family member,
//! with every aggregate shown next to its closed form.

use kchain_core::chain_graphs::{build_subchain, end_degree_sum, ChainSpec};
use kchain_core::exact_linalg::{char_poly, rational_string};
use kchain_core::spectral::{
    self, diff_spectrum, normalized_diff_recip_sum, normalized_diff_spectrum,
    sum_block_eigenvalues,
};
use kchain_core::Rational;

use crate::render::deleted_braces;
use crate::{SpectrumArgs, UsageError, EXIT_OK};

fn multiset_string(entries: &[(Rational, usize)]) -> String {
    let parts: Vec<String> = entries
        .iter()
        .map(|(v, m)| format!("{}: {m}", rational_string(v)))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn run(args: &SpectrumArgs) -> Result<i32, UsageError> {
    let spec = ChainSpec::new(args.n, args.delete.iter().copied())?;
    let g = build_subchain(&spec);
    let n = spec.n();
    let d = end_degree_sum(&spec).value();

    println!(
        "spec n={n} r={} deleted={} d={d}",
        spec.r(),
        deleted_braces(&spec)
    );
    println!("vertices={} edges={}", g.num_vertices(), g.num_edges());

    let alphas: Vec<String> = sum_block_eigenvalues(n)
        .iter()
        .map(|v| format!("{v:.6}"))
        .collect();
    println!("sum-block eigenvalues (closed form): [{}]", alphas.join(", "));

    let recip = spectral::sum_block_recip_sum(n).map_err(UsageError::from)?;
    println!(
        "sum-block reciprocal sum: {} (closed form n(n+2)/12, cross-checked against coefficients)",
        rational_string(&recip)
    );
    let product = spectral::sum_block_eigen_product(n).map_err(UsageError::from)?;
    println!("sum-block eigenvalue product: {product} (closed form (n+1)*2^n)");

    let diff = diff_spectrum(&spec);
    println!(
        "difference-block spectrum: {} case={}",
        multiset_string(diff.entries()),
        diff.case().number()
    );
    let zeta_sum = spectral::diff_recip_sum(&spec).map_err(UsageError::from)?;
    println!(
        "difference-block reciprocal sum: {} (closed form (2n+r-2d+16)/12, matches multiset)",
        rational_string(&zeta_sum)
    );
    let zeta_product = spectral::diff_eigen_product(&spec).map_err(UsageError::from)?;
    println!(
        "difference-block product: {zeta_product} (closed form 2^(n+r+2d-9)*3^(n-r-d+5), matches multiset)"
    );

    // The product identity behind the split, checked exactly.
    spectral::decompose(&spec).map_err(UsageError::from)?;
    let full = char_poly(&kchain_core::chain_graphs::laplacian(&g).to_rational())
        .map_err(UsageError::from)?;
    let coeffs: Vec<String> = full.coeffs().iter().map(|c| rational_string(c)).collect();
    println!("laplacian characteristic polynomial coefficients: [{}]", coeffs.join(", "));
    println!("block product identity: holds");

    if spec.r() == 0 {
        // Normalized quantities are only derived for the full chain.
        println!(
            "normalized difference spectrum: {}",
            multiset_string(&normalized_diff_spectrum(n))
        );
        println!(
            "normalized difference reciprocal sum: {} (closed form (5n+4)/6)",
            rational_string(&normalized_diff_recip_sum(n))
        );
        let gamma = spectral::normalized_sum_recip_sum(n).map_err(UsageError::from)?;
        println!(
            "normalized sum reciprocal sum: {} (closed form n(25n^2+15n+14)/(12(5n+1)))",
            rational_string(&gamma)
        );
        let coeffs = spectral::normalized_coeffs(n).map_err(UsageError::from)?;
        println!(
            "normalized sum signed coefficients: linear {} quadratic {}",
            rational_string(&coeffs.signed_linear),
            rational_string(&coeffs.signed_quadratic)
        );
        let minors: Vec<String> = coeffs.minors.iter().map(|c| rational_string(c)).collect();
        println!("normalized sum leading minors: [{}]", minors.join(", "));
    }

    Ok(EXIT_OK)
}
