use std::process::Command;

use proptest::prelude::*;

use cavity_entanglement::sweep::{parse_config, run_sweep, to_csv, SweepSpec, CSV_COLUMNS};

fn spec(list: &[(&str, &str)]) -> SweepSpec {
    let pairs: Vec<(String, String)> = list.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    SweepSpec::from_pairs(&pairs).unwrap()
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cavity-sweep"))
}

#[test]
fn csv_is_byte_identical_across_runs_and_workers() {
    let base = [
        ("scenario", "round-trip"),
        ("mode", "both"),
        ("n_max", "128"),
        ("k", "1,3"),
        ("axis", "u=0:2pi:7"),
        ("axis", "v=0:pi:5"),
        ("w", "2pi/3"),
    ];
    let one = {
        let mut s = spec(&base);
        s.workers = Some(1);
        to_csv(&run_sweep(&s).unwrap(), s.mode)
    };
    let many = {
        let mut s = spec(&base);
        s.workers = Some(6);
        to_csv(&run_sweep(&s).unwrap(), s.mode)
    };
    let again = {
        let s = spec(&base);
        to_csv(&run_sweep(&s).unwrap(), s.mode)
    };
    assert_eq!(one, many);
    assert_eq!(one, again);
    assert_eq!(one.lines().count(), 1 + 2 * 7 * 5);
}

#[test]
fn both_mode_agrees_within_tails_for_every_scenario() {
    for scenario in ["one-way", "alpha-centauri", "round-trip", "kickstart"] {
        let s = spec(&[
            ("scenario", scenario),
            ("mode", "both"),
            ("n_max", "400"),
            ("k", "1,2,4"),
            ("axis", "u=0.1:6:6"),
            ("axis", "v=0:2pi:4"),
            ("w", "1.3"),
        ]);
        for r in run_sweep(&s).unwrap() {
            let (c, g) = r.comparison.unwrap();
            assert!((c - g).abs() <= r.truncation_tail + 1e-12, "{scenario} {r:?}");
        }
    }
}

#[test]
fn rows_satisfy_negativity_relation() {
    let s = spec(&[("preset", "fig3"), ("axis", "u=0:2pi:9"), ("axis", "v=0:2pi:9")]);
    for r in run_sweep(&s).unwrap() {
        assert_eq!(r.negativity, 0.5 - r.h * r.h * r.deficit_scaled);
        assert_eq!(r.log_negativity, r.negativity.ln_1p());
        assert!(r.deficit_scaled >= 0.0);
    }
}

#[test]
fn header_matches_row_fields() {
    let s = spec(&[("axis", "u=0:1:2")]);
    let csv = to_csv(&run_sweep(&s).unwrap(), s.mode);
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), CSV_COLUMNS.join(","));
    for line in lines {
        assert_eq!(line.split(',').count(), CSV_COLUMNS.len());
    }
    assert!(csv.ends_with('\n') && !csv.contains('\r'));
}

#[test]
fn cli_writes_to_out_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let status = bin()
        .args(["--preset", "fig2"])
        .env("CAVITY_SWEEP_OUT_DIR", dir.path())
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(dir.path().join("fig2.csv")).unwrap();
    assert_eq!(text.lines().count(), 202);
}

#[test]
fn cli_config_file_with_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "# two-way sweep\nscenario = alpha-centauri\nk = 2\naxis = u=0:pi:3\naxis = v=0:pi:3\n").unwrap();
    let out = bin()
        .arg("--config")
        .arg(&cfg)
        .args(["--k", "3", "--out", "-"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 10);
    assert!(text.lines().skip(1).all(|l| l.starts_with("alpha-centauri,3,")));

    let expected = {
        let pairs = parse_config(&std::fs::read_to_string(&cfg).unwrap()).unwrap();
        let mut s = SweepSpec::from_pairs(&pairs).unwrap();
        s.ks = vec![3];
        to_csv(&run_sweep(&s).unwrap(), s.mode)
    };
    assert_eq!(text, expected);
}

#[test]
fn cli_exit_codes() {
    let code = |args: &[&str]| bin().args(args).output().unwrap().status.code().unwrap();
    assert_eq!(code(&["--out", "-", "--axis", "u=0:1:3"]), 0);
    assert_eq!(code(&["--out", "-", "--axis", "u=0:1:1"]), 1);
    assert_eq!(code(&["--out", "-", "--mode", "both"]), 1);
    assert_eq!(code(&["--out", "-", "--bogus"]), 1);
    assert_eq!(code(&["--out", "-", "--h", "2.5"]), 2);
    assert_eq!(code(&["--out", "-", "--h", "-3"]), 2);
    assert_eq!(code(&["--verify", "fast"]), 0);
    assert_eq!(code(&["--verify", "fast", "--corrupt-a11", "10"]), 3);
    assert_eq!(code(&["--verify", "medium"]), 1);
}

#[test]
fn cli_unwritable_output_reports_path() {
    let out = bin()
        .args(["--out", "/nonexistent-dir/sweep.csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent-dir/sweep.csv"));
}

#[test]
fn cli_estimate() {
    let out = bin()
        .args(["--estimate", "--accel", "10", "--delta", "10", "--wavelength", "5e-7"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("M                  1.2566"));
    let both = bin()
        .args(["--estimate", "--accel", "1", "--delta", "1", "--mass", "1e-27", "--wavelength", "1e-6"])
        .output()
        .unwrap();
    assert_eq!(both.status.code(), Some(1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn grid_size_is_product_of_counts(a in 2usize..6, b in 2usize..6, c in 2usize..4) {
        let s = spec(&[
            ("scenario", "round-trip"),
            ("axis", &format!("w=0:1:{c}")),
            ("axis", &format!("u=0:2:{a}")),
            ("axis", &format!("v=-1:1:{b}")),
        ]);
        let g = s.grid();
        prop_assert_eq!(g.len(), a * b * c);
        // first axis outermost
        prop_assert_eq!(g[0][2], 0.0);
        prop_assert_eq!(g[g.len() - 1], [2.0, 1.0, 1.0]);
        prop_assert_eq!(g[a * b][2], 1.0 / (c - 1) as f64);
    }

    #[test]
    fn two_way_is_even_under_joint_reflection(u in 0.0f64..6.3, v in 0.0f64..6.3, k in 1usize..5) {
        let at = |u: f64, v: f64| {
            let s = spec(&[
                ("scenario", "alpha-centauri"),
                ("k", &k.to_string()),
                ("u", &u.to_string()),
                ("v", &v.to_string()),
            ]);
            run_sweep(&s).unwrap()[0].deficit_scaled
        };
        prop_assert!((at(u, v) - at(-u, -v)).abs() < 1e-13);
    }

    #[test]
    fn both_mode_within_tails_at_random_points(
        u in 0.0f64..6.3, v in 0.0f64..6.3, w in 0.0f64..6.3, k in 1usize..5, n_max in 16usize..200,
    ) {
        for scenario in ["one-way", "alpha-centauri", "round-trip", "kickstart"] {
            let s = spec(&[
                ("scenario", scenario),
                ("mode", "both"),
                ("n_max", &n_max.to_string()),
                ("k", &k.to_string()),
                ("u", &u.to_string()),
                ("v", &v.to_string()),
                ("w", &w.to_string()),
            ]);
            let r = &run_sweep(&s).unwrap()[0];
            prop_assert!(r.abs_diff().unwrap() <= r.truncation_tail + 1e-13, "{} {:?}", scenario, r);
        }
    }
}
