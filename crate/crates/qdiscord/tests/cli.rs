use std::path::Path;
use std::process::{Command, Output};

fn qdiscord(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdiscord"))
        .args(args)
        .output()
        .expect("spawn qdiscord")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(str::to_string).collect();
    let rows = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    (header, rows)
}

fn path_arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn headers_name_the_columns() {
    let cases: [(&[&str], &str); 4] = [
        (
            &["zurek-surface", "--a-steps", "2", "--theta-steps", "3"],
            "a,theta,D",
        ),
        (
            &[
                "quasi-surface",
                "--a-steps",
                "2",
                "--theta-steps",
                "3",
                "--alpha2",
                "1",
            ],
            "mean_photon,a,theta,D_closed,D_pipeline,abs_diff,exceeds_theta0",
        ),
        (&["werner-curves", "--a-steps", "3"], "a,E,delta,delta_minus_E"),
        (
            &["quasi-curves", "--a-steps", "3", "--alpha2", "1"],
            "mean_photon,a,E,delta,delta_minus_E",
        ),
    ];
    for (args, header) in cases {
        let o = qdiscord(args);
        assert!(
            o.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        let text = stdout(&o);
        assert_eq!(text.lines().next().unwrap(), header);
        assert!(!text.contains('\r'));
        assert!(text.ends_with('\n'));
    }
}

#[test]
fn default_zurek_surface() {
    let o = qdiscord(&["zurek-surface"]);
    assert!(o.status.success());
    let (_, rows) = csv(&stdout(&o));
    assert_eq!(rows.len(), 101 * 361);
    for r in rows.iter().filter(|r| r[0] == "1") {
        let d: f64 = r[2].parse().unwrap();
        assert!((d - 1.0).abs() < 1e-12);
    }
    let quarter = rows
        .iter()
        .find(|r| r[0] == "0" && (r[1].parse::<f64>().unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-12)
        .unwrap();
    assert!(quarter[2].parse::<f64>().unwrap().abs() < 1e-12);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    for (cmd, format) in [
        ("quasi-surface", "csv"),
        ("quasi-curves", "json"),
        ("zurek-surface", "csv"),
    ] {
        let a = dir.path().join(format!("{cmd}-a.{format}"));
        let b = dir.path().join(format!("{cmd}-b.{format}"));
        for p in [&a, &b] {
            let o = qdiscord(&[
                cmd,
                "--a-steps",
                "21",
                "--theta-steps",
                "13",
                "--alpha2",
                "0.1,2",
                "--format",
                format,
                "--out",
                path_arg(p),
            ]);
            assert!(o.status.success());
            assert!(o.stdout.is_empty());
        }
        let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
        assert!(!x.is_empty());
        assert_eq!(x, y, "{cmd}");
    }
}

#[test]
fn json_mirrors_csv() {
    let base = ["werner-curves", "--a-steps", "11"];
    let c = stdout(&qdiscord(&base));
    let mut args = base.to_vec();
    args.extend(["--format", "json"]);
    let j: serde_json::Value = serde_json::from_str(&stdout(&qdiscord(&args))).unwrap();
    let (header, rows) = csv(&c);
    let records = j.as_array().unwrap();
    assert_eq!(records.len(), rows.len());
    for (rec, row) in records.iter().zip(&rows) {
        for (key, cell) in header.iter().zip(row) {
            let v = rec[key.as_str()].as_f64().unwrap();
            let w: f64 = cell.parse().unwrap();
            assert!((v - w).abs() <= 1e-14 * v.abs().max(1.0), "{key}: {v} vs {w}");
        }
    }
}

#[test]
fn quasi_surface_redirects_werner_families() {
    let o = qdiscord(&["quasi-surface", "--family", "phi-", "--a-steps", "5"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("werner-curves"));
    assert_eq!(stdout(&o).lines().next().unwrap(), "a,E,delta,delta_minus_E");
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sweep.toml");
    let out = dir.path().join("from-config.csv");
    std::fs::write(
        &cfg,
        format!(
            "a_steps = 3\ntheta_steps = 2\nalpha2 = [0.5]\nout = \"{}\"\n",
            out.display()
        ),
    )
    .unwrap();
    let o = qdiscord(&["quasi-surface", "--config", path_arg(&cfg)]);
    assert!(o.status.success());
    let (_, rows) = csv(&std::fs::read_to_string(&out).unwrap());
    assert_eq!(rows.len(), 3 * 2);

    let flagged = dir.path().join("flagged.csv");
    let o = qdiscord(&[
        "quasi-surface",
        "--config",
        path_arg(&cfg),
        "--a-steps",
        "4",
        "--out",
        path_arg(&flagged),
    ]);
    assert!(o.status.success());
    let (_, rows) = csv(&std::fs::read_to_string(&flagged).unwrap());
    assert_eq!(rows.len(), 4 * 2);
}

#[test]
fn exit_codes() {
    assert_eq!(qdiscord(&["verify"]).status.code(), Some(0));
    assert_eq!(qdiscord(&["nope"]).status.code(), Some(2));
    assert_eq!(
        qdiscord(&["werner-curves", "--family", "psi"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qdiscord(&["werner-curves", "--a-max", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qdiscord(&["quasi-curves", "--alpha2", "0"]).status.code(),
        Some(2)
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "a_steps = \"many\"\n").unwrap();
    assert_eq!(
        qdiscord(&["werner-curves", "--config", path_arg(&bad)])
            .status
            .code(),
        Some(2)
    );

    let missing = dir.path().join("missing.toml");
    let o = qdiscord(&["werner-curves", "--config", path_arg(&missing)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing.toml"));

    let unwritable = dir.path().join("no/such/dir/out.csv");
    let o = qdiscord(&["werner-curves", "--out", path_arg(&unwritable)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no/such/dir/out.csv"));
}

#[test]
fn verify_report_carries_both_notes() {
    let text = stdout(&qdiscord(&["verify"]));
    assert!(text.contains("-1 gives D'(0) = -2.000000000000000"));
    assert!(text.contains("exponent +1/2"));
    assert!(text.contains("exponent -1/2"));
    assert!(text.contains("joint and reduced spectra"));
    assert!(text.trim_end().ends_with("all checks passed"));
}
