use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_circstates"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

fn oracle_e(state: &str) -> f64 {
    let o = run(&["oracle", "--state", state]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let text = stdout(&o);
    let line = text.lines().find(|l| l.starts_with("fock-oracle")).unwrap();
    line.rsplit(' ').next().unwrap().parse().unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn schmidt_two_components_is_one_ebit() {
    let o = run(&["schmidt", "--alpha0", "1", "--n", "2", "--q", "1"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["lambdas"], serde_json::json!([0.5, 0.5]));
    assert_eq!(v["pairing"], serde_json::json!([[0, 1], [1, 0]]));
    assert!((v["E_bits"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn schmidt_single_component_is_product() {
    let v = json(&run(&["schmidt", "--alpha0", "1", "--n", "1", "--q", "0"]));
    let l = v["lambdas"].as_array().unwrap();
    assert_eq!(l.len(), 1);
    assert!((l[0].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!(v["E_bits"].as_f64().unwrap().abs() < 1e-12);
}

#[test]
fn schmidt_matches_oracle() {
    let v = json(&run(&["schmidt", "--alpha0", "3", "--n", "4", "--q", "0"]));
    let e = v["E_bits"].as_f64().unwrap();
    let reference = oracle_e(r#"{"kind":"rics","N":4,"q":0,"alpha0":[3,0]}"#);
    assert!((e - reference).abs() < 1e-7, "{e} vs {reference}");
}

#[test]
fn schmidt_accepts_complex_and_in_amplitude() {
    let a = json(&run(&[
        "schmidt", "--alpha0", "0,2", "--n", "3", "--q", "1",
    ]));
    let b = json(&run(&["schmidt", "--alpha0", "2", "--n", "3", "--q", "1"]));
    let (ea, eb) = (a["E_bits"].as_f64().unwrap(), b["E_bits"].as_f64().unwrap());
    assert!((ea - eb).abs() < 1e-12);
    let c = json(&run(&[
        "schmidt",
        "--alpha0",
        "2",
        "--n",
        "3",
        "--q",
        "1",
        "--in-amplitude",
    ]));
    let d = json(&run(&[
        "schmidt",
        "--alpha0",
        &2f64.sqrt().to_string(),
        "--n",
        "3",
        "--q",
        "1",
    ]));
    assert!((c["E_bits"].as_f64().unwrap() - d["E_bits"].as_f64().unwrap()).abs() < 1e-12);
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["schmidt", "--alpha0", "0", "--n", "2", "--q", "1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["schmidt", "--alpha0", "1", "--n", "2", "--q", "2"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["schmidt", "--alpha0", "x", "--n", "2", "--q", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["schmidt", "--n", "2", "--q", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        run(&["oracle", "--state", "{\"kind\":"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "oracle",
            "--state",
            r#"{"kind":"rics","N":3,"alpha0":[1,0]}"#
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "decompose",
            "--state",
            r#"{"kind":"kerr","N":0,"alpha0":[1,0]}"#
        ])
        .status
        .code(),
        Some(3)
    );
    assert_eq!(
        run(&[
            "kerr",
            "--alpha0",
            "1",
            "--n-max",
            "3",
            "--methods",
            "analytic-rics"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&["sweep-n", "--alpha0", "1", "--q", "5", "--n-max", "3"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&[
            "sweep-amplitude",
            "--n-list",
            "2",
            "--q",
            "1",
            "--alpha0-min",
            "0",
            "--alpha0-max",
            "1",
            "--steps",
            "3"
        ])
        .status
        .code(),
        Some(3)
    );
}

#[test]
fn sweep_amplitude_two_components_flat() {
    let o = run(&[
        "sweep-amplitude",
        "--n-list",
        "2",
        "--q",
        "1",
        "--alpha0-min",
        "0.5",
        "--alpha0-max",
        "4",
        "--steps",
        "8",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("alpha0,N,q,E_bits,method\n"));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 8);
    let alphas: Vec<&str> = rows.iter().map(|r| r[0].as_str()).collect();
    assert_eq!(alphas, ["0.5", "1", "1.5", "2", "2.5", "3", "3.5", "4"]);
    for r in &rows {
        assert_eq!(r[3], "1");
        assert_eq!(r[4], "analytic-rics");
    }
}

#[test]
fn sweep_amplitude_reaches_log2_n() {
    let text = stdout(&run(&[
        "sweep-amplitude",
        "--n-list",
        "4",
        "--q",
        "1",
        "--alpha0-max",
        "4",
    ]));
    let last = csv_rows(&text).pop().unwrap();
    assert_eq!(last[0], "4");
    assert!((last[3].parse::<f64>().unwrap() - 2.0).abs() < 0.02);
}

#[test]
fn sweep_amplitude_single_step() {
    let text = stdout(&run(&[
        "sweep-amplitude",
        "--n-list",
        "3",
        "--q",
        "0",
        "--alpha0-min",
        "1.25",
        "--steps",
        "1",
    ]));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][0], "1.25");
}

#[test]
fn sweep_amplitude_methods_agree() {
    let text = stdout(&run(&[
        "sweep-amplitude",
        "--n-list",
        "3,5",
        "--q",
        "2",
        "--alpha0-min",
        "0.5",
        "--alpha0-max",
        "2",
        "--steps",
        "4",
        "--methods",
        "analytic-rics,rics-basis-eig,fock-oracle",
    ]));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 2 * 4 * 3);
    for chunk in rows.chunks(3) {
        assert_eq!(chunk[0][4], "analytic-rics");
        assert_eq!(chunk[2][4], "fock-oracle");
        let e: Vec<f64> = chunk.iter().map(|r| r[3].parse().unwrap()).collect();
        assert!(
            (e[0] - e[1]).abs() < 1e-9 && (e[0] - e[2]).abs() < 1e-7,
            "{chunk:?}"
        );
    }
}

#[test]
fn sweep_n_binomial_plateau() {
    let text = stdout(&run(&[
        "sweep-n", "--alpha0", "3", "--q", "4", "--n-max", "80",
    ]));
    let rows = csv_rows(&text);
    assert_eq!(rows[0][1], "5");
    assert_eq!(rows.last().unwrap()[1], "80");
    let e: f64 = rows.last().unwrap()[3].parse().unwrap();
    assert!((e - 2.0306390622).abs() < 0.02);
}

#[test]
fn sweep_n_decomposition() {
    let text = stdout(&run(&[
        "sweep-n",
        "--alpha0",
        "3",
        "--q",
        "0",
        "--n-max",
        "40",
        "--decompose",
    ]));
    assert!(text.starts_with("alpha0,N,q,E_bits,method,B,S,BplusS\n"));
    for r in csv_rows(&text) {
        let n: usize = r[1].parse().unwrap();
        let e: f64 = r[3].parse().unwrap();
        let bs: f64 = r[7].parse().unwrap();
        if n > 18 {
            assert!((e - bs).abs() < 0.15, "N={n}: {e} vs {bs}");
        }
    }
}

#[test]
fn sweep_n_single_row() {
    let rows = csv_rows(&stdout(&run(&[
        "sweep-n", "--alpha0", "2", "--q", "3", "--n-max", "4",
    ])));
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][1], "4");
}

#[test]
fn kerr_single_component() {
    let rows = csv_rows(&stdout(&run(&["kerr", "--alpha0", "2", "--n-max", "1"])));
    assert_eq!(rows, vec![vec!["2", "1", "kerr", "0", "rics-basis-eig"]]);
}

#[test]
fn kerr_rows_match_oracle() {
    let text = stdout(&run(&["kerr", "--alpha0", "2", "--n-max", "8"]));
    for r in csv_rows(&text) {
        let e: f64 = r[3].parse().unwrap();
        let state = format!(r#"{{"kind":"kerr","N":{},"alpha0":[2,0]}}"#, r[1]);
        let reference = oracle_e(&state);
        assert!(
            (e - reference).abs() < 1e-7,
            "N={}: {e} vs {reference}",
            r[1]
        );
    }
}

#[test]
fn kerr_threshold_columns() {
    let text = stdout(&run(&[
        "kerr",
        "--alpha0",
        "4",
        "--n-max",
        "3",
        "--with-rics-qmax",
    ]));
    assert!(text.starts_with("alpha0,N,q,E_bits,method,E_rics_qmax,N1,N2\n"));
    let r = &csv_rows(&text)[0];
    assert_eq!(r[6], "12.5663706144");
    assert_eq!(r[7], "86.9850185107");
}

#[test]
fn oracle_reports_agreement() {
    for state in [
        r#"{"kind":"rics","N":5,"q":2,"alpha0":[1.5,0]}"#,
        r#"{"kind":"kerr","N":6,"alpha0":[2,0]}"#,
        r#"{"kind":"custom","N":3,"alpha0":[1,0.5],"coeffs":[[1,0],[0,1],[0.5,-0.5]]}"#,
    ] {
        let o = run(&["oracle", "--state", state]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains("agreement: PASS"));
    }
}

#[test]
fn oracle_single_component_is_zero() {
    let o = run(&[
        "oracle",
        "--state",
        r#"{"kind":"custom","N":1,"alpha0":[1,0],"coeffs":[[1,0]]}"#,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("rics-basis-eig  E_bits = 0\n"));
    assert!(text.contains("fock-oracle     E_bits = 0\n"));
}

#[test]
fn oracle_cutoff_below_minimum_rejected() {
    let state = r#"{"kind":"rics","N":3,"q":1,"alpha0":[2,0]}"#;
    assert_eq!(
        run(&["oracle", "--state", state, "--cutoff", "5"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn decompose_coherent_gives_poisson_classes() {
    let v = json(&run(&[
        "decompose",
        "--state",
        r#"{"kind":"custom","N":4,"alpha0":[1,0],"coeffs":[[1,0],[0,0],[0,0],[0,0]]}"#,
    ]));
    let b = v["b"].as_array().unwrap();
    let expected = [0.383216876, 0.370946117, 0.184450766, 0.061386241];
    for (bq, want) in b.iter().zip(expected) {
        let (re, im) = (bq[0].as_f64().unwrap(), bq[1].as_f64().unwrap());
        assert!((re * re + im * im - want).abs() < 1e-6);
    }
    assert!((v["norm"].as_f64().unwrap() - 1.0).abs() < 1e-10);
}

#[test]
fn decompose_rics_is_unit_vector() {
    let v = json(&run(&[
        "decompose",
        "--state",
        r#"{"kind":"rics","N":4,"q":2,"alpha0":[1.3,0]}"#,
    ]));
    for (k, bq) in v["b"].as_array().unwrap().iter().enumerate() {
        let mag = bq[0].as_f64().unwrap().hypot(bq[1].as_f64().unwrap());
        let want = if k == 2 { 1.0 } else { 0.0 };
        assert!((mag - want).abs() < 1e-10);
    }
}

#[test]
fn decompose_random_state_normalized() {
    let v = json(&run(&[
        "decompose",
        "--state",
        r#"{"kind":"custom","N":5,"alpha0":[0.7,-1.1],"coeffs":[[0.3,0.1],[-0.8,0.4],[0.2,0.9],[0.5,-0.5],[-0.1,0.6]]}"#,
    ]));
    assert!((v["norm"].as_f64().unwrap() - 1.0).abs() < 1e-10);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("circstates-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k.csv");
    let o = run(&[
        "kerr",
        "--alpha0",
        "1",
        "--n-max",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        written,
        stdout(&run(&["kerr", "--alpha0", "1", "--n-max", "3"]))
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn golden_sweep_amplitude() {
    let text = stdout(&run(&[
        "sweep-amplitude",
        "--n-list",
        "2,3,4",
        "--q",
        "1",
        "--alpha0-min",
        "0.5",
        "--alpha0-max",
        "4",
        "--steps",
        "8",
        "--methods",
        "analytic-rics,rics-basis-eig",
    ]));
    assert_eq!(text, golden("sweep_amplitude.csv"));
}

#[test]
fn golden_kerr() {
    let text = stdout(&run(&[
        "kerr",
        "--alpha0",
        "2",
        "--n-max",
        "8",
        "--with-rics-qmax",
        "--methods",
        "rics-basis-eig,fock-oracle",
    ]));
    assert_eq!(text, golden("kerr.csv"));
}
