//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with its measured runtime. Every tolerance, bound and
//! runtime budget is pinned here in code.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::collections::BTreeMap;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use kchain_core::chain_graphs::{end_degree_sum, enumerate_all_subchains, ChainSpec};
use kchain_core::closed_forms::{
    deviation_from_quarter, gutman_chain, internal_distance_row, kirchhoff_chain,
    kirchhoff_subchain, mult_deg_kirchhoff_chain, ratio_report, spanning_trees_chain,
    spanning_trees_subchain, wiener_chain, wiener_subchain, FormulaVariant,
};
use kchain_core::exact_linalg::{decimal_string, rat, ratio, rational_to_f64};
use kchain_core::invariant_oracles::{bfs_distances, full_report, wiener};
use kchain_core::spectral;
use kchain_core::{BigInt, Rational};

fn kchain(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kchain"))
        .args(args)
        .env_remove("KCHAIN_CONFIG")
        .env_remove("KCHAIN_SEED")
        .env_remove("KCHAIN_JOBS")
        .env_remove("KCHAIN_MODE")
        .env_remove("KCHAIN_MAX_N")
        .env_remove("KCHAIN_SAMPLE_SIZE")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

/// Parses `G_n<TAB>value[<TAB># note]` lines into (value, note) per row.
fn parse_table(text: &str) -> BTreeMap<usize, (String, Option<String>)> {
    text.lines()
        .map(|line| {
            let mut cols = line.split('\t');
            let n: usize = cols
                .next()
                .unwrap()
                .strip_prefix("G_")
                .unwrap()
                .parse()
                .unwrap();
            let value = cols.next().unwrap().to_string();
            (n, (value, cols.next().map(str::to_string)))
        })
        .collect()
}

fn reference_table(raw: &str) -> BTreeMap<usize, String> {
    raw.lines()
        .map(|line| {
            let (name, value) = line.split_once('\t').unwrap();
            (name.strip_prefix("G_").unwrap().parse().unwrap(), value.to_string())
        })
        .collect()
}

const GOLDEN_KF: &str = include_str!("../data/table_kf.txt");
const GOLDEN_KFSTAR: &str = include_str!("../data/table_kfstar.txt");

fn pass(criterion: &str, detail: &str, elapsed: Duration) {
    println!("ACCEPTANCE {criterion}: PASS ({detail}) [{elapsed:.2?}]");
}

/// Criterion 1 — Kirchhoff table reproduction, rows 1..=50, two-decimal
/// display, runtime < 1 s.
///
/// The reference table itself carries a misprint at row 48 (it prints
/// 20461.67 where the formula, confirmed bit-exactly by the resistance
/// oracle in criteria 3-4, gives 20416.67 — a digit transposition). The
/// other 49 cells must match exactly; row 48 must be flagged as the one
/// adjudicated misprint, mirroring how the second table's known misprint
/// is handled.
#[test]
fn acceptance_01_kirchhoff_table_reproduction() {
    let started = Instant::now();
    let out = kchain(&["table", "--kind", "kf", "--from", "1", "--to", "50"]);
    let elapsed = started.elapsed();
    assert_eq!(out.status.code(), Some(0));

    let computed = parse_table(&stdout(&out));
    let reference = reference_table(GOLDEN_KF);
    let mut mismatched = Vec::new();
    for n in 1..=50 {
        let (value, _) = &computed[&n];
        assert_eq!(*value, decimal_string(&kirchhoff_chain(n), 2));
        if *value != reference[&n] {
            mismatched.push(n);
        }
    }
    assert_eq!(computed[&3].0, "16.67");
    assert_eq!(computed[&25].0, "3159.00");
    assert_eq!(computed[&50].0, "22984.00");
    assert_eq!(
        mismatched,
        vec![48],
        "exactly the known reference-table misprint may differ"
    );
    assert_eq!(computed[&48].0, "20416.67");
    assert_eq!(reference[&48], "20461.67");
    assert!(computed[&48].1.as_deref() == Some("# reference prints 20461.67"));
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass(
        "criterion 1",
        "kf table rows 1..=50: 49 cells match the reference; row 48 adjudicated as its misprint (printed 20461.67, computed 20416.67)",
        elapsed,
    );
}

/// Criterion 2 — multiplicative degree-Kirchhoff table reproduction:
/// 49 of 50 cells match; row 40 flagged with computed 284428.00 against
/// printed 184428.00. Runtime < 1 s.
#[test]
fn acceptance_02_mult_deg_kirchhoff_table_reproduction() {
    let started = Instant::now();
    let out = kchain(&["table", "--kind", "kfstar", "--from", "1", "--to", "50"]);
    let elapsed = started.elapsed();
    assert_eq!(out.status.code(), Some(0));

    let computed = parse_table(&stdout(&out));
    let reference = reference_table(GOLDEN_KFSTAR);
    let mut mismatched = Vec::new();
    for n in 1..=50 {
        let (value, _) = &computed[&n];
        assert_eq!(*value, decimal_string(&mult_deg_kirchhoff_chain(n), 2));
        if *value != reference[&n] {
            mismatched.push(n);
        }
    }
    assert_eq!(mismatched, vec![40]);
    assert_eq!(computed[&40].0, "284428.00");
    assert_eq!(reference[&40], "184428.00");
    assert!(computed[&40].1.as_deref() == Some("# reference prints 184428.00"));
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass(
        "criterion 2",
        "kfstar table rows 1..=50: 49 cells match; row 40 flagged (printed 184428.00, computed 284428.00)",
        elapsed,
    );
}

/// Criterion 3 — base-chain oracle/formula equivalence for n in 1..=12:
/// all five invariants bit-exact. Runtime < 30 s.
#[test]
fn acceptance_03_base_chain_equivalence() {
    let started = Instant::now();
    for n in 1..=12 {
        let report = full_report(&ChainSpec::full_chain(n).unwrap()).unwrap();
        assert_eq!(report.kirchhoff, kirchhoff_chain(n), "kf at n={n}");
        assert_eq!(
            report.mult_deg_kirchhoff,
            mult_deg_kirchhoff_chain(n),
            "kfstar at n={n}"
        );
        assert_eq!(report.spanning_trees, spanning_trees_chain(n), "tau at n={n}");
        assert_eq!(
            Rational::from_integer(BigInt::from(report.wiener)),
            wiener_chain(n, FormulaVariant::Corrected),
            "wiener at n={n}"
        );
        assert_eq!(BigInt::from(report.gutman), gutman_chain(n), "gutman at n={n}");
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    pass(
        "criterion 3",
        "five oracles equal their closed forms bit-exactly for n = 1..=12",
        elapsed,
    );
}

/// Criterion 4 — deleted-edge family equivalence for n in 1..=8 over every
/// deletion subset (2^{n+1} per n, 1020 in total): Kf, tau and W oracles
/// equal their closed forms bit-exactly, and every (n, r, d) class has a
/// single Kirchhoff value. Runtime < 5 min single-threaded; the CLI sweep
/// with 8 workers finishes < 1 min.
#[test]
fn acceptance_04_deleted_edge_family_equivalence() {
    let started = Instant::now();
    let mut total = 0usize;
    for n in 1..=8 {
        let specs = enumerate_all_subchains(n).unwrap();
        assert_eq!(specs.len(), 1 << (n + 1), "spec count at n={n}");
        total += specs.len();
        let mut classes: BTreeMap<(usize, u8), Rational> = BTreeMap::new();
        for spec in &specs {
            let d = end_degree_sum(spec).value();
            let r = spec.r();
            let report = full_report(spec).unwrap();
            assert_eq!(
                report.kirchhoff,
                kirchhoff_subchain(n, r, d).unwrap(),
                "kf at {spec:?}"
            );
            assert_eq!(
                report.spanning_trees,
                spanning_trees_subchain(n, r, d).unwrap(),
                "tau at {spec:?}"
            );
            assert_eq!(
                BigInt::from(report.wiener),
                wiener_subchain(n, r),
                "wiener at {spec:?}"
            );
            match classes.get(&(r, d)) {
                None => {
                    classes.insert((r, d), report.kirchhoff);
                }
                Some(prev) => assert_eq!(*prev, report.kirchhoff, "class (n={n}, r={r}, d={d})"),
            }
        }
    }
    assert_eq!(total, 1020);
    let single_thread = started.elapsed();
    assert!(single_thread < Duration::from_secs(300), "took {single_thread:?}");

    let cli_started = Instant::now();
    let out = kchain(&["verify", "--max-n", "8", "--mode", "exhaustive", "--jobs", "8"]);
    let cli_elapsed = cli_started.elapsed();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("summary specs=1020 failures=0"));
    assert!(cli_elapsed < Duration::from_secs(60), "cli took {cli_elapsed:?}");
    pass(
        "criterion 4",
        &format!(
            "1020 specs bit-exact and (n, r, d)-well-defined; library sweep {single_thread:.2?}, 8-worker cli sweep {cli_elapsed:.2?}"
        ),
        started.elapsed(),
    );
}

/// Criterion 5 — spectral identity suite, exact: block product identity
/// for n in 1..=10; reciprocal-sum/product coefficient identities of the
/// sum block; the normalized coefficient identities, minor closed form and
/// recurrence, the Vieta ratio, and interior-block determinants for n and
/// sizes in 1..=12. Runtime < 10 s.
#[test]
fn acceptance_05_spectral_identity_suite() {
    let started = Instant::now();
    for n in 1..=10 {
        // decompose re-checks the product identity internally by exact
        // coefficient equality.
        spectral::decompose(&ChainSpec::full_chain(n).unwrap()).unwrap();
    }
    for n in 1..=12usize {
        assert_eq!(
            spectral::sum_block_recip_sum(n).unwrap(),
            ratio((n * (n + 2)) as i64, 12)
        );
        assert_eq!(
            spectral::sum_block_eigen_product(n).unwrap(),
            BigInt::from(n + 1) * BigInt::from(2u8).pow(n as u32)
        );
        let coeffs = spectral::normalized_coeffs(n).unwrap();
        assert_eq!(coeffs.signed_linear, spectral::signed_linear_closed(n));
        assert_eq!(coeffs.signed_quadratic, spectral::signed_quadratic_closed(n));
        for i in 1..=n {
            assert_eq!(coeffs.minors[i], spectral::minor_closed(i));
        }
        assert_eq!(
            spectral::normalized_sum_recip_sum(n).unwrap(),
            spectral::normalized_sum_recip_sum_closed(n)
        );
        assert_eq!(
            spectral::interior_block_det(n).unwrap(),
            spectral::interior_block_det_closed(n)
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    pass(
        "criterion 5",
        "product identity (n <= 10) and all coefficient identities (n, size <= 12) hold exactly",
        elapsed,
    );
}

/// Criterion 6 — every closed-form sum-block eigenvalue matches a root of
/// the exact characteristic polynomial within 1e-9, for n <= 20.
#[test]
fn acceptance_06_eigenvalue_cross_check() {
    let started = Instant::now();
    for n in 1..=20 {
        assert!(
            spectral::sum_block_roots_match(n, 1e-9).unwrap(),
            "root cross-check failed at n={n}"
        );
    }
    let elapsed = started.elapsed();
    pass(
        "criterion 6",
        "8 sin^2 closed forms pin exact polynomial roots within 1e-9 for n = 1..=20",
        elapsed,
    );
}

/// Criterion 7 — asymptotics, substituted for the unreachable limits:
/// |Kf/W - 1/4| and |Kf*/Gut - 1/4| strictly decrease over n = 2..=1000
/// and drop below 1/n from n = 10 on (checked for both Wiener variants);
/// spot values at n = 100 are 0.25374 +- 5e-5 for Kf/W under the published
/// Wiener expression (the corrected one gives exactly 175134/686901,
/// about 0.25496) and 0.25498 +- 5e-5 for Kf*/Gut.
#[test]
fn acceptance_07_asymptotic_ratios() {
    let started = Instant::now();
    for variant in [FormulaVariant::Corrected, FormulaVariant::AsPrinted] {
        let mut prev: Option<(Rational, Rational)> = None;
        for n in 2..=1000 {
            let report = ratio_report(n, variant);
            let dev_kf = deviation_from_quarter(&report.kf_over_w);
            let dev_gut = deviation_from_quarter(&report.kfstar_over_gut);
            if let Some((prev_kf, prev_gut)) = &prev {
                assert!(dev_kf < *prev_kf, "kf/w deviation not decreasing at n={n}");
                assert!(dev_gut < *prev_gut, "kfstar/gut deviation not decreasing at n={n}");
            }
            if n >= 10 {
                let bound = Rational::new(BigInt::from(1), BigInt::from(n));
                assert!(dev_kf < bound, "kf/w deviation above 1/n at n={n}");
                assert!(dev_gut < bound, "kfstar/gut deviation above 1/n at n={n}");
            }
            prev = Some((dev_kf, dev_gut));
        }
    }

    let printed = ratio_report(100, FormulaVariant::AsPrinted);
    assert_eq!(printed.kf_over_w, ratio(175134, 690201));
    assert!((rational_to_f64(&printed.kf_over_w) - 0.25374).abs() <= 5e-5);

    let corrected = ratio_report(100, FormulaVariant::Corrected);
    assert_eq!(corrected.kf_over_w, ratio(175134, 686901));
    assert_eq!(corrected.kfstar_over_gut, ratio(4276068, 16770093));
    assert!((rational_to_f64(&corrected.kfstar_over_gut) - 0.25498).abs() <= 5e-5);

    let elapsed = started.elapsed();
    pass(
        "criterion 7",
        "deviations strictly decrease (n = 2..=1000), sit below 1/n from n = 10, and hit both n = 100 spot values",
        elapsed,
    );
}

/// Criterion 8 — misprint adjudication for the Wiener formula: the BFS
/// oracle gives W = 19 at n = 2; the published expression gives 59/3 and
/// must demonstrably fail; the corrected expression must match.
#[test]
fn acceptance_08_wiener_misprint_adjudication() {
    let started = Instant::now();
    let g2 = kchain_core::chain_graphs::build_chain(2).unwrap();
    let oracle = wiener(&g2).unwrap();
    assert_eq!(oracle, 19);

    let printed = wiener_chain(2, FormulaVariant::AsPrinted);
    assert_eq!(printed, ratio(59, 3));
    assert_ne!(printed, rat(oracle as i64), "as-printed path must fail");

    let corrected = wiener_chain(2, FormulaVariant::Corrected);
    assert_eq!(corrected, rat(19), "corrected path must pass");

    // Same adjudication for the row-sum constant feeding that formula.
    let spec = ChainSpec::full_chain(2).unwrap();
    let row: usize = bfs_distances(&g2, spec.top(2)).unwrap().iter().sum();
    assert_eq!(row, 5);
    assert_eq!(
        internal_distance_row(2, 2, FormulaVariant::AsPrinted).unwrap(),
        BigInt::from(3)
    );
    assert_eq!(
        internal_distance_row(2, 2, FormulaVariant::Corrected).unwrap(),
        BigInt::from(row)
    );
    let elapsed = started.elapsed();
    pass(
        "criterion 8",
        "oracle W(G_2) = 19; as-printed formula (59/3) demonstrably fails, corrected matches",
        elapsed,
    );
}

/// Criterion 9 — determinism: two runs of the full exhaustive sweep with
/// 8 workers produce byte-identical reports.
#[test]
fn acceptance_09_determinism() {
    let started = Instant::now();
    let args = ["verify", "--max-n", "8", "--mode", "exhaustive", "--jobs", "8"];
    let first = kchain(&args);
    let second = kchain(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(second.status.code(), Some(0));
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout, "reports differ between runs");
    let elapsed = started.elapsed();
    pass(
        "criterion 9",
        "two 8-worker exhaustive sweeps produced byte-identical reports",
        elapsed,
    );
}
