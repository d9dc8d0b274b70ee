//! End-to-end tests of the `kchain` binary: output formats, reference-table
//! diffs, exit codes, config precedence and determinism.

use std::collections::BTreeMap;
use std::process::{Command, Output};

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

fn parse_table(text: &str) -> BTreeMap<usize, String> {
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
            (n, cols.next().unwrap().to_string())
        })
        .collect()
}

const GOLDEN_KF: &str = include_str!("../data/table_kf.txt");
const GOLDEN_KFSTAR: &str = include_str!("../data/table_kfstar.txt");

#[test]
fn table_diff_against_reference_is_exactly_the_known_misprints() {
    for (kind, golden, misprinted_row) in
        [("kf", GOLDEN_KF, 48), ("kfstar", GOLDEN_KFSTAR, 40)]
    {
        let out = kchain(&["table", "--kind", kind, "--from", "1", "--to", "50"]);
        assert!(out.status.success());
        let computed = parse_table(&stdout(&out));
        let reference = parse_table(golden);
        let differing: Vec<usize> = (1..=50)
            .filter(|n| computed[n] != reference[n])
            .collect();
        assert_eq!(differing, vec![misprinted_row], "kind {kind}");
        // The differing row carries the annotation.
        let line = stdout(&out)
            .lines()
            .find(|l| l.starts_with(&format!("G_{misprinted_row}\t")))
            .unwrap()
            .to_string();
        assert!(line.contains("# reference prints"), "line: {line}");
    }
}

#[test]
fn table_as_printed_is_byte_identical_to_reference() {
    let out = kchain(&["table", "--kind", "kf", "--from", "1", "--to", "50", "--as-printed"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), GOLDEN_KF);

    let out = kchain(&["table", "--kind", "kfstar", "--from", "1", "--to", "50", "--as-printed"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), GOLDEN_KFSTAR);
}

#[test]
fn table_formats() {
    let out = kchain(&["table", "--kind", "kfstar", "--from", "40", "--to", "40", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,kind,exact,display,note");
    assert_eq!(
        lines.next().unwrap(),
        "40,kfstar,284428,284428.00,reference prints 184428.00"
    );

    let out = kchain(&["table", "--kind", "kf", "--from", "3", "--to", "3", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed[0]["exact"], "50/3");
    assert_eq!(parsed[0]["display"], "16.67");
    assert_eq!(parsed[0]["note"], serde_json::Value::Null);
}

#[test]
fn exit_codes() {
    // 0: success
    assert_eq!(kchain(&["table", "--kind", "kf"]).status.code(), Some(0));
    // 2: usage errors, both clap-level and validated
    assert_eq!(kchain(&["table", "--kind", "nope"]).status.code(), Some(2));
    assert_eq!(
        kchain(&["table", "--kind", "kf", "--from", "9", "--to", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        kchain(&["table", "--kind", "kf", "--to", "10001"]).status.code(),
        Some(2)
    );
    assert_eq!(
        kchain(&["table", "--kind", "kf", "--to", "51", "--as-printed"]).status.code(),
        Some(2)
    );
    assert_eq!(kchain(&["verify", "--max-n", "0"]).status.code(), Some(2));
    assert_eq!(
        kchain(&["verify", "--max-n", "9", "--mode", "exhaustive"]).status.code(),
        Some(2)
    );
    assert_eq!(
        kchain(&["spectrum", "--n", "2", "--delete", "9"]).status.code(),
        Some(2)
    );
    assert_eq!(kchain(&["nope"]).status.code(), Some(2));
}

#[test]
fn verify_small_sweep_passes() {
    let out = kchain(&["verify", "--max-n", "2", "--jobs", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("summary specs=12 failures=0"), "{text}");
    // C(3, r) deletion sets for n = 2: 1 + 3 + 3 + 1.
    assert_eq!(text.lines().filter(|l| l.starts_with("n=2 r=")).count(), 8);
    assert!(text.contains("errata wiener_printed_formula_mismatches_oracle=pass"));
    assert!(text.contains("errata table_kf_misprints=pass"));
}

#[test]
fn verify_same_seed_is_byte_identical_and_seeds_differ() {
    let a = kchain(&["verify", "--max-n", "4", "--mode", "sample", "--sample-size", "6", "--seed", "3"]);
    let b = kchain(&["verify", "--max-n", "4", "--mode", "sample", "--sample-size", "6", "--seed", "3"]);
    assert_eq!(stdout(&a), stdout(&b));
    let c = kchain(&["verify", "--max-n", "4", "--mode", "sample", "--sample-size", "6", "--seed", "4"]);
    assert_ne!(stdout(&a), stdout(&c));
}

#[test]
fn verify_jobs_do_not_change_output() {
    let a = kchain(&["verify", "--max-n", "3", "--jobs", "1"]);
    let b = kchain(&["verify", "--max-n", "3", "--jobs", "8"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn verify_csv_shape() {
    let out = kchain(&["verify", "--max-n", "1", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,r,deleted,d,kf_oracle,kf_closed,kfstar_oracle,kfstar_closed,tau_oracle,tau_closed,\
         wiener_oracle,wiener_closed,gutman_oracle,gutman_closed,all_match"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4); // 2^{n+1} specs at n = 1
    assert_eq!(rows[0], "1,0,,6,3,3,27,27,16,16,6,6,54,54,true");
    // No closed forms for the weighted indices once verticals are deleted.
    assert_eq!(rows[3], "1,2,1 2,4,5,5,20,,4,4,8,8,32,,true");
}

#[test]
fn verify_json_shape() {
    let out = kchain(&["verify", "--max-n", "1", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = parsed.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["spec"], serde_json::json!({"n": 1, "deleted": []}));
    assert_eq!(rows[0]["kf_oracle"]["exact"], "3");
    assert_eq!(rows[0]["kf_oracle"]["display"], "3.00");
    assert_eq!(rows[1]["spec"]["deleted"], serde_json::json!([1]));
    assert_eq!(rows[1]["kfstar_oracle"]["exact"], "47/2");
    assert_eq!(rows[1]["kfstar_closed"], serde_json::Value::Null);
    assert_eq!(rows[0]["tau_oracle"], "16");
    assert!(rows.iter().all(|r| r["all_match"] == true));
}

#[test]
fn spectrum_output() {
    let out = kchain(&["spectrum", "--n", "1", "--delete", "1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("spec n=1 r=2 deleted={1,2} d=4"));
    assert!(text.contains("difference-block spectrum: {2: 2} case=1"));
    assert!(text.contains("difference-block reciprocal sum: 1 "));
    assert!(text.contains("block product identity: holds"));

    let out = kchain(&["spectrum", "--n", "2"]);
    let text = stdout(&out);
    assert!(text.contains("sum-block eigenvalues (closed form): [0.000000, 2.000000, 6.000000]"));
    assert!(text.contains("difference-block spectrum: {4: 2, 6: 1} case=2"));
    assert!(text.contains("normalized sum reciprocal sum: 24/11"));
    assert!(text.contains("normalized sum leading minors: [1, 2/3, 4/15]"));
}

#[test]
fn ratios_output() {
    let out = kchain(&["ratios", "--n", "1,100"]);
    let text = stdout(&out);
    assert!(text.contains("n=1 kf_over_w=0.500000 dev=0.250000 kfstar_over_gut=0.500000"));
    assert!(text.contains("n=100 kf_over_w=0.254963"));
    assert!(text.contains("kfstar_over_gut=0.254982"));

    let out = kchain(&["ratios", "--n", "100", "--as-printed"]);
    let text = stdout(&out);
    assert!(text.contains("n=100 kf_over_w=0.253743"));
}

#[test]
fn config_precedence_flags_over_env_over_file() {
    let dir = std::env::temp_dir().join(format!("kchain-config-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let config_path = dir.join("kchain.conf");
    std::fs::write(&config_path, "# sweep defaults\nseed=11\nsample_size=2\n").unwrap();

    let base = |extra: &[&str], env_seed: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_kchain"));
        cmd.args(["verify", "--max-n", "1", "--mode", "sample"])
            .arg("--config")
            .arg(&config_path)
            .args(extra)
            .env_remove("KCHAIN_SEED");
        if let Some(seed) = env_seed {
            cmd.env("KCHAIN_SEED", seed);
        }
        let out = cmd.output().unwrap();
        assert_eq!(out.status.code(), Some(0));
        stdout(&out).lines().next().unwrap().to_string()
    };

    // File value applies when neither flag nor env is set.
    assert_eq!(base(&[], None), "verify max_n=1 mode=sample seed=11 sample_size=2");
    // Env beats file.
    assert_eq!(base(&[], Some("22")), "verify max_n=1 mode=sample seed=22 sample_size=2");
    // Flag beats env.
    assert_eq!(
        base(&["--seed", "33"], Some("22")),
        "verify max_n=1 mode=sample seed=33 sample_size=2"
    );

    std::fs::remove_dir_all(&dir).ok();
}
