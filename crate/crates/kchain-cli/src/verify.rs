//! The `verify` subcommand: sweep the subchain family and check every
//! oracle against its closed form, run the spectral identity suite, and
//! demonstrate the documented misprints.
//!
//! Specs are fanned out over a bounded rayon pool and reduced back in
//! enumeration order, so stdout is byte-identical across runs regardless
//! of `--jobs` or scheduling. Timing goes to stderr only.

use std::time::Instant;

use kchain_core::chain_graphs::{
    build_chain, end_degree_sum, enumerate_all_subchains, ChainSpec,
};
use kchain_core::closed_forms::{
    gutman_chain, internal_distance_row, kirchhoff_subchain, mult_deg_kirchhoff_chain,
    spanning_trees_subchain, wiener_chain, wiener_subchain, FormulaVariant,
};
use kchain_core::exact_linalg::{rat, rational_string, CHAR_POLY_CAP};
use kchain_core::invariant_oracles::{bfs_distances, full_report, InvariantReport};
use kchain_core::spectral;
use kchain_core::{BigInt, Rational};
use rand::seq::index::sample as index_sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::render::{deleted_braces, deleted_csv, display, rational_json, spec_json};
use crate::tables::{reference_rows, value as table_value};
use crate::{config::Settings, OutputFormat, SweepMode, TableKind, UsageError};
use crate::{EXIT_MISMATCH, EXIT_OK};

/// Exhaustive enumeration stays below this chain length; `C(n+1, r)`
/// subsets per size are cheap here, and larger chains belong to sample
/// mode.
const EXHAUSTIVE_MAX_N: usize = 8;

/// Per-spec block-product verification is limited to small chains; the
/// full-Laplacian characteristic polynomial is the one expensive check.
const PER_SPEC_PRODUCT_MAX_N: usize = 6;

pub struct Check {
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    fn equal<T: PartialEq + std::fmt::Display>(name: &'static str, expected: T, actual: T) -> Check {
        Check {
            name,
            pass: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    /// A check that passes when an internally cross-checked computation
    /// succeeds (the error message becomes the actual value on failure).
    fn verified<T: std::fmt::Display>(
        name: &'static str,
        outcome: kchain_core::Result<T>,
    ) -> Check {
        match outcome {
            Ok(v) => Check {
                name,
                expected: v.to_string(),
                actual: v.to_string(),
                pass: true,
            },
            Err(e) => Check {
                name,
                expected: "internal cross-check to hold".into(),
                actual: e.to_string(),
                pass: false,
            },
        }
    }
}

struct SpecVerdict {
    spec: ChainSpec,
    d: u8,
    report: InvariantReport,
    kf_closed: Rational,
    tau_closed: BigInt,
    wiener_closed: BigInt,
    kfstar_closed: Option<Rational>,
    gutman_closed: Option<BigInt>,
    checks: Vec<Check>,
    /// Wall time for this spec; stderr diagnostics only, never stdout
    /// (reports must be byte-identical across runs and worker counts).
    elapsed: std::time::Duration,
}

impl SpecVerdict {
    fn all_match(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn verify_spec(spec: &ChainSpec) -> SpecVerdict {
    let spec_started = Instant::now();
    let n = spec.n();
    let r = spec.r();
    let d = end_degree_sum(spec).value();
    let report = full_report(spec).expect("family members are connected");

    let kf_closed = kirchhoff_subchain(n, r, d).expect("summary from a real deletion set");
    let tau_closed = spanning_trees_subchain(n, r, d).expect("summary from a real deletion set");
    let wiener_closed = wiener_subchain(n, r);
    let (kfstar_closed, gutman_closed) = if r == 0 {
        (Some(mult_deg_kirchhoff_chain(n)), Some(gutman_chain(n)))
    } else {
        (None, None)
    };

    let mut checks = vec![
        Check::equal("kf", kf_closed.clone(), report.kirchhoff.clone()),
        Check::equal("tau", tau_closed.clone(), report.spanning_trees.clone()),
        Check::equal("wiener", wiener_closed.clone(), BigInt::from(report.wiener)),
    ];
    if let Some(kfstar) = &kfstar_closed {
        checks.push(Check::equal(
            "kfstar",
            kfstar.clone(),
            report.mult_deg_kirchhoff.clone(),
        ));
    }
    if let Some(gutman) = &gutman_closed {
        checks.push(Check::equal("gutman", gutman.clone(), BigInt::from(report.gutman)));
    }
    checks.push(Check::verified("diff_recip_sum", spectral::diff_recip_sum(spec)));
    checks.push(Check::verified("diff_product", spectral::diff_eigen_product(spec)));
    if n <= PER_SPEC_PRODUCT_MAX_N {
        checks.push(Check::verified(
            "block_product",
            spectral::decompose(spec).map(|_| "holds"),
        ));
    }

    SpecVerdict {
        spec: spec.clone(),
        d,
        report,
        kf_closed,
        tau_closed,
        wiener_closed,
        kfstar_closed,
        gutman_closed,
        checks,
        elapsed: spec_started.elapsed(),
    }
}

/// Spectral identity suite for one chain length: sum-block aggregates from
/// characteristic-polynomial coefficients, the normalized-block coefficient
/// identities, interior-block determinants, and the eigenvalue cross-check.
/// Checks that need a characteristic polynomial are skipped beyond the size
/// cap (sample mode can reach such lengths).
fn verify_spectral(n: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    if n + 1 <= CHAR_POLY_CAP {
        checks.push(Check::verified("sum_recip_sum", spectral::sum_block_recip_sum(n)));
        checks.push(Check::verified(
            "sum_eigen_product",
            spectral::sum_block_eigen_product(n),
        ));
        checks.push(Check::verified(
            "coeff_identities",
            spectral::normalized_coeffs(n).map(|c| rational_string(&c.signed_linear)),
        ));
        checks.push(Check::verified(
            "normalized_recip_sum",
            spectral::normalized_sum_recip_sum(n),
        ));
        checks.push(Check::verified(
            "alpha_roots",
            spectral::sum_block_roots_match(n, 1e-9).and_then(|ok| {
                if ok {
                    Ok("within 1e-9")
                } else {
                    Err(kchain_core::Error::IdentityViolation(
                        "a closed-form eigenvalue missed every exact root interval",
                    ))
                }
            }),
        ));
        checks.push(Check::verified(
            "kfstar_reconstruction",
            spectral::normalized_sum_recip_sum(n).and_then(|gamma| {
                let total = rat(2 * (5 * n as i64 + 1))
                    * (gamma + spectral::normalized_diff_recip_sum(n));
                if total == mult_deg_kirchhoff_chain(n) {
                    Ok("reconstructed")
                } else {
                    Err(kchain_core::Error::IdentityViolation(
                        "eigenvalue reciprocal sums do not rebuild the closed form",
                    ))
                }
            }),
        ));
    }
    if 2 * n + 2 <= CHAR_POLY_CAP {
        checks.push(Check::verified(
            "block_product_chain",
            ChainSpec::full_chain(n)
                .and_then(|spec| spectral::decompose(&spec))
                .map(|_| "holds"),
        ));
    }
    let interior_ok = (0..=n.min(12)).all(|s| {
        spectral::interior_block_det(s)
            .map(|d| d == spectral::interior_block_det_closed(s))
            .unwrap_or(false)
    });
    checks.push(Check {
        name: "interior_det",
        expected: "(2/5)^s (s+1) for all sizes".into(),
        actual: if interior_ok { "matches".into() } else { "mismatch".into() },
        pass: interior_ok,
    });
    checks.push(Check::equal(
        "normalized_diff_recip_sum",
        Rational::new(BigInt::from(5 * n + 4), BigInt::from(6)),
        spectral::normalized_diff_recip_sum(n),
    ));
    checks
}

/// Misprint demonstrations: the as-printed formulas must demonstrably fail
/// against the oracles, the corrected ones must match, and the reference
/// tables must differ from the formulas in exactly their known misprinted
/// cells.
fn errata_checks() -> Vec<Check> {
    let mut checks = Vec::new();

    let g2 = build_chain(2).expect("n=2");
    let w_oracle = kchain_core::invariant_oracles::wiener(&g2).expect("connected");
    let printed = wiener_chain(2, FormulaVariant::AsPrinted);
    let corrected = wiener_chain(2, FormulaVariant::Corrected);
    checks.push(Check {
        name: "wiener_printed_formula_mismatches_oracle",
        expected: format!("anything but {w_oracle}"),
        actual: rational_string(&printed),
        pass: printed != rat(w_oracle as i64),
    });
    checks.push(Check::equal(
        "wiener_corrected_formula_matches_oracle",
        rat(w_oracle as i64),
        corrected,
    ));

    let spec = ChainSpec::full_chain(2).expect("n=2");
    let row: usize = bfs_distances(&g2, spec.top(2)).expect("connected").iter().sum();
    let printed_row = internal_distance_row(2, 2, FormulaVariant::AsPrinted).expect("in range");
    let corrected_row = internal_distance_row(2, 2, FormulaVariant::Corrected).expect("in range");
    checks.push(Check {
        name: "row_sum_printed_formula_mismatches_bfs",
        expected: format!("anything but {row}"),
        actual: printed_row.to_string(),
        pass: printed_row != BigInt::from(row),
    });
    checks.push(Check::equal(
        "row_sum_corrected_formula_matches_bfs",
        BigInt::from(row),
        corrected_row,
    ));

    for (kind, name, known) in [
        (TableKind::Kf, "table_kf_misprints", vec![48usize]),
        (TableKind::Kfstar, "table_kfstar_misprints", vec![40usize]),
    ] {
        let mismatches: Vec<usize> = reference_rows(kind)
            .iter()
            .filter(|(n, printed)| display(&table_value(kind, *n)) != **printed)
            .map(|(n, _)| *n)
            .collect();
        checks.push(Check {
            name,
            expected: format!("{known:?}"),
            actual: format!("{mismatches:?}"),
            pass: mismatches == known,
        });
    }
    checks
}

fn sample_specs(max_n: usize, seed: u64, sample_size: usize) -> Vec<ChainSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut specs = Vec::new();
    for n in 1..=max_n {
        for _ in 0..sample_size {
            // Uniform over deletion count, then uniform over sets of that
            // size.
            let r = rng.random_range(0..=n + 1);
            let mut deleted: Vec<usize> =
                index_sample(&mut rng, n + 1, r).iter().map(|i| i + 1).collect();
            deleted.sort_unstable();
            specs.push(ChainSpec::new(n, deleted).expect("sampled set is valid"));
        }
    }
    specs
}

pub fn run(args: &crate::VerifyArgs, settings: &Settings) -> Result<i32, UsageError> {
    let max_n = args.max_n.unwrap_or(settings.max_n);
    let mode = args.mode.unwrap_or(settings.mode);
    let seed = args.seed.unwrap_or(settings.seed);
    let jobs = args.jobs.unwrap_or(settings.jobs);
    let sample_size = args.sample_size.unwrap_or(settings.sample_size);

    if max_n < 1 {
        return Err(UsageError("--max-n must be at least 1".into()));
    }
    if jobs < 1 {
        return Err(UsageError("--jobs must be at least 1".into()));
    }
    if mode == SweepMode::Exhaustive && max_n > EXHAUSTIVE_MAX_N {
        return Err(UsageError(format!(
            "exhaustive mode enumerates every deletion set and is capped at \
             --max-n {EXHAUSTIVE_MAX_N}; use --mode sample for larger chains"
        )));
    }

    let started = Instant::now();
    let specs = match mode {
        SweepMode::Exhaustive => {
            let mut specs = Vec::new();
            for n in 1..=max_n {
                specs.extend(enumerate_all_subchains(n).map_err(UsageError::from)?);
            }
            specs
        }
        SweepMode::Sample => sample_specs(max_n, seed, sample_size),
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| UsageError(format!("cannot build worker pool: {e}")))?;

    // Fan out, reduce in order: collect preserves input order, so output
    // does not depend on scheduling.
    let (verdicts, spectral_by_n): (Vec<SpecVerdict>, Vec<(usize, Vec<Check>)>) =
        pool.install(|| {
            let verdicts: Vec<SpecVerdict> = specs.par_iter().map(verify_spec).collect();
            let spectral: Vec<(usize, Vec<Check>)> = (1..=max_n)
                .into_par_iter()
                .map(|n| (n, verify_spectral(n)))
                .collect();
            (verdicts, spectral)
        });

    // Kirchhoff well-definedness: one value per (n, r, d) class.
    let mut class_checks: Vec<(usize, Check)> = Vec::new();
    for n in 1..=max_n {
        let mut classes: std::collections::BTreeMap<(usize, u8), Rational> =
            std::collections::BTreeMap::new();
        let mut ok = true;
        for v in verdicts.iter().filter(|v| v.spec.n() == n) {
            let key = (v.spec.r(), v.d);
            match classes.get(&key) {
                None => {
                    classes.insert(key, v.report.kirchhoff.clone());
                }
                Some(prev) => ok &= *prev == v.report.kirchhoff,
            }
        }
        class_checks.push((
            n,
            Check {
                name: "kf_well_defined",
                expected: "one Kirchhoff value per (r, d) class".into(),
                actual: if ok { "holds".into() } else { "class with two values".into() },
                pass: ok,
            },
        ));
    }

    let errata = errata_checks();

    let all_pass = verdicts.iter().all(SpecVerdict::all_match)
        && spectral_by_n.iter().all(|(_, cs)| cs.iter().all(|c| c.pass))
        && class_checks.iter().all(|(_, c)| c.pass)
        && errata.iter().all(|c| c.pass);

    match args.format {
        OutputFormat::Text => {
            render_text(max_n, mode, seed, sample_size, &verdicts, &spectral_by_n, &class_checks, &errata)
        }
        OutputFormat::Csv => render_csv(&verdicts),
        OutputFormat::Json => render_json(&verdicts),
    }

    // Reproducer for the first failure, in enumeration order.
    if !all_pass {
        let first = verdicts
            .iter()
            .flat_map(|v| v.checks.iter().map(move |c| (Some(&v.spec), c)))
            .chain(spectral_by_n.iter().flat_map(|(_, cs)| cs.iter().map(|c| (None, c))))
            .chain(class_checks.iter().map(|(_, c)| (None, c)))
            .chain(errata.iter().map(|c| (None, c)))
            .find(|(_, c)| !c.pass);
        if let Some((spec, check)) = first {
            match spec {
                Some(spec) => eprintln!(
                    "first failure: n={} deleted={} check={}: expected {}, actual {}\n\
                     reproduce: kchain spectrum --n {}{}",
                    spec.n(),
                    deleted_braces(spec),
                    check.name,
                    check.expected,
                    check.actual,
                    spec.n(),
                    if spec.r() == 0 {
                        String::new()
                    } else {
                        format!(" --delete {}", deleted_csv(spec).replace(' ', ","))
                    }
                ),
                None => eprintln!(
                    "first failure: check={}: expected {}, actual {}",
                    check.name, check.expected, check.actual
                ),
            }
        }
    }

    let total_checks: usize = verdicts.iter().map(|v| v.checks.len()).sum::<usize>()
        + spectral_by_n.iter().map(|(_, cs)| cs.len()).sum::<usize>()
        + class_checks.len()
        + errata.len();
    let slowest = verdicts.iter().max_by_key(|v| v.elapsed);
    eprintln!(
        "verified {} specs, {} checks in {:.2?} ({} workers{})",
        verdicts.len(),
        total_checks,
        started.elapsed(),
        jobs,
        slowest
            .map(|v| format!(
                "; slowest spec n={} deleted={} at {:.2?}",
                v.spec.n(),
                deleted_braces(&v.spec),
                v.elapsed
            ))
            .unwrap_or_default()
    );

    Ok(if all_pass { EXIT_OK } else { EXIT_MISMATCH })
}

#[allow(clippy::too_many_arguments)]
fn render_text(
    max_n: usize,
    mode: SweepMode,
    seed: u64,
    sample_size: usize,
    verdicts: &[SpecVerdict],
    spectral_by_n: &[(usize, Vec<Check>)],
    class_checks: &[(usize, Check)],
    errata: &[Check],
) {
    let mode_name = match mode {
        SweepMode::Exhaustive => "exhaustive",
        SweepMode::Sample => "sample",
    };
    println!("verify max_n={max_n} mode={mode_name} seed={seed} sample_size={sample_size}");
    for n in 1..=max_n {
        if let Some((_, checks)) = spectral_by_n.iter().find(|(m, _)| *m == n) {
            print!("n={n} spectral");
            for c in checks {
                print!(" {}={}", c.name, if c.pass { "pass" } else { "FAIL" });
            }
            println!();
            for c in checks.iter().filter(|c| !c.pass) {
                println!("  check {}: expected {}, actual {}", c.name, c.expected, c.actual);
            }
        }
        for v in verdicts.iter().filter(|v| v.spec.n() == n) {
            print!(
                "n={} r={} deleted={} d={}",
                v.spec.n(),
                v.spec.r(),
                deleted_braces(&v.spec),
                v.d
            );
            for c in &v.checks {
                print!(" {}={}", c.name, if c.pass { "pass" } else { "FAIL" });
            }
            println!();
            for c in v.checks.iter().filter(|c| !c.pass) {
                println!("  check {}: expected {}, actual {}", c.name, c.expected, c.actual);
            }
        }
        if let Some((_, c)) = class_checks.iter().find(|(m, _)| *m == n) {
            println!("n={n} {}={}", c.name, if c.pass { "pass" } else { "FAIL" });
        }
    }
    for c in errata {
        println!("errata {}={}", c.name, if c.pass { "pass" } else { "FAIL" });
        if !c.pass {
            println!("  check {}: expected {}, actual {}", c.name, c.expected, c.actual);
        }
    }
    let failures: usize = verdicts
        .iter()
        .flat_map(|v| v.checks.iter())
        .chain(spectral_by_n.iter().flat_map(|(_, cs)| cs.iter()))
        .chain(class_checks.iter().map(|(_, c)| c))
        .chain(errata.iter())
        .filter(|c| !c.pass)
        .count();
    println!("summary specs={} failures={failures}", verdicts.len());
}

fn render_csv(verdicts: &[SpecVerdict]) {
    println!(
        "n,r,deleted,d,kf_oracle,kf_closed,kfstar_oracle,kfstar_closed,\
         tau_oracle,tau_closed,wiener_oracle,wiener_closed,gutman_oracle,gutman_closed,all_match"
    );
    for v in verdicts {
        println!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            v.spec.n(),
            v.spec.r(),
            deleted_csv(&v.spec),
            v.d,
            rational_string(&v.report.kirchhoff),
            rational_string(&v.kf_closed),
            rational_string(&v.report.mult_deg_kirchhoff),
            v.kfstar_closed.as_ref().map(rational_string).unwrap_or_default(),
            v.report.spanning_trees,
            v.tau_closed,
            v.report.wiener,
            v.wiener_closed,
            v.report.gutman,
            v.gutman_closed.as_ref().map(|g| g.to_string()).unwrap_or_default(),
            v.all_match(),
        );
    }
}

fn render_json(verdicts: &[SpecVerdict]) {
    let items: Vec<serde_json::Value> = verdicts
        .iter()
        .map(|v| {
            json!({
                "spec": spec_json(&v.spec),
                "n": v.spec.n(),
                "r": v.spec.r(),
                "deleted": v.spec.deleted(),
                "d": v.d,
                "kf_oracle": rational_json(&v.report.kirchhoff),
                "kf_closed": rational_json(&v.kf_closed),
                "kfstar_oracle": rational_json(&v.report.mult_deg_kirchhoff),
                "kfstar_closed": v.kfstar_closed.as_ref().map(rational_json),
                "tau_oracle": v.report.spanning_trees.to_string(),
                "tau_closed": v.tau_closed.to_string(),
                "wiener_oracle": v.report.wiener.to_string(),
                "wiener_closed": v.wiener_closed.to_string(),
                "gutman_oracle": v.report.gutman.to_string(),
                "gutman_closed": v.gutman_closed.as_ref().map(|g| g.to_string()),
                "all_match": v.all_match(),
            })
        })
        .collect();
    println!("{}", serde_json::to_string_pretty(&items).expect("json"));
}
