use std::path::PathBuf;
use std::process::{Command, Output};

fn hypcm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypcm")).args(args).env_remove("HYPCM_THREADS").output().expect("run hypcm")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hypcm-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r.records().map(|x| x.unwrap().iter().map(String::from).collect()).collect();
    (header, rows)
}

fn eval_json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["eval"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--format", "json"]);
    let o = hypcm(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn near(v: &serde_json::Value, re: f64, im: f64, tol: f64) -> bool {
    (v["re"].as_f64().unwrap() - re).abs() < tol && (v["im"].as_f64().unwrap() - im).abs() < tol
}

#[test]
fn gamma_at_origin() {
    let o = hypcm(&["eval", "gamma_g", "--a", "1,1", "--z", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("gamma_g = 1+0i"), "{}", stdout(&o));
}

#[test]
fn scattering_at_origin() {
    let v = eval_json(&["u", "--a", "1,1", "--b", "0.8", "--z", "0"]);
    assert!(near(&v, 1.0, 0.0, 1e-12));
    assert_eq!(v["kind"], "finite");
}

#[test]
fn j2_representations_agree() {
    let base = ["j2", "--b", "0.8", "--x", "0.3,-0.1", "--y", "0.5,0.2"];
    let com = eval_json(&[&base[..], &["--rep", "com"]].concat());
    let def = eval_json(&[&base[..], &["--rep", "defining"]].concat());
    assert_eq!(com["rep"], "com");
    assert!(com["abs_err"].as_f64().unwrap() < 1e-8);
    let (re, im) = (com["re"].as_f64().unwrap(), com["im"].as_f64().unwrap());
    assert!(near(&def, re, im, 1e-10 * re.hypot(im)));
}

#[test]
fn printed_values_round_trip() {
    let v = eval_json(&["phi", "--b", "0.7"]);
    let text = v["value"].as_str().unwrap();
    let (re, im) = (v["re"].as_f64().unwrap(), v["im"].as_f64().unwrap());
    let z = hypcm::wire::parse_complex(text).unwrap();
    assert_eq!((z.re, z.im), (re, im));
}

#[test]
fn pole_exits_2() {
    let o = hypcm(&["eval", "gamma_g", "--z=-1i"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("pole(1)"));
}

#[test]
fn domain_violation_exits_3_and_names_domain() {
    let o = hypcm(&["eval", "j2", "--b", "0.8", "--x", "0.3,-0.1+2i", "--y", "0.5,0.2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("D2"));
    let o = hypcm(&["eval", "u", "--b", "2.5", "--z", "0"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(hypcm(&["verify", "--check", "unknown_id"]).status.code(), Some(64));
    assert_eq!(hypcm(&["eval", "no_such_fn", "--z", "0"]).status.code(), Some(64));
    assert_eq!(hypcm(&["eval", "j2", "--b", "0.8"]).status.code(), Some(64));
    assert_eq!(hypcm(&["eval", "gamma_g", "--z", "1+"]).status.code(), Some(64));
    assert_eq!(hypcm(&["eval", "gamma_g", "--a", "1,-1", "--z", "0"]).status.code(), Some(64));
    assert_eq!(hypcm(&["table", "phi", "--sweep", "b:0.1:1:0"]).status.code(), Some(64));
    assert_eq!(hypcm(&["frobnicate"]).status.code(), Some(64));
}

#[test]
fn e2_remainder_table_decreases() {
    let o = hypcm(&[
        "table", "e2_minus_as", "--b", "0.8", "--x", "0.3,-0.1", "--y", "0,0", "--sweep", "y1-y2:2:6:9",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let (header, rows) = csv_rows(&stdout(&o));
    assert_eq!(header, ["y1-y2", "value_re", "value_im", "abs", "abs_err", "kind", "rep"]);
    assert_eq!(rows.len(), 9);
    let mags: Vec<f64> = rows.iter().map(|r| r[3].parse().unwrap()).collect();
    assert!(mags.windows(2).all(|w| w[1] < w[0]), "{mags:?}");
}

#[test]
fn phase_is_unimodular_on_real_couplings() {
    let o = hypcm(&["table", "phi", "--sweep", "b:0.1:1.9:7"]);
    let (_, rows) = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 7);
    for r in rows {
        assert!((r[3].parse::<f64>().unwrap() - 1.0).abs() < 1e-14);
    }
}

#[test]
fn two_axis_table() {
    let o = hypcm(&["table", "gamma_g", "--sweep", "z:-1:1:3", "--sweep", "z.im:-0.5:0.5:2"]);
    let (header, rows) = csv_rows(&stdout(&o));
    assert_eq!(&header[..2], ["z", "z.im"]);
    assert_eq!(rows.len(), 6);
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = scratch("config");
    let cfg = dir.join("run.conf");
    std::fs::write(&cfg, "# run\na = 1,1\nb = 0.5\nformat = json\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let from_file = eval_json(&["phi", "--config", cfg]);
    let flagged = eval_json(&["phi", "--config", cfg, "--b", "0.8"]);
    let direct = eval_json(&["phi", "--b", "0.8"]);
    assert_eq!(flagged, direct);
    assert_ne!(from_file, direct);
    std::fs::write(dir.join("bad.conf"), "b = 0.5\ncolour = red\n").unwrap();
    let o = hypcm(&["eval", "phi", "--config", dir.join("bad.conf").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn single_check_writes_report() {
    let dir = scratch("verify");
    let (json, csv) = (dir.join("r.json"), dir.join("r.csv"));
    let o = hypcm(&[
        "verify", "--check", "j2_duality", "--b", "0.9", "--samples", "2", "--json", json.to_str().unwrap(), "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let reports: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let r = &reports[0];
    assert_eq!(r["id"], "j2_duality");
    assert_eq!(r["samples"], 2);
    assert_eq!(r["pass"], true);
    for key in ["max_rel_residual", "tolerance", "wall_time", "worst_case_point"] {
        assert!(r.get(key).is_some(), "{key}");
    }
    let (header, rows) = csv_rows(&std::fs::read_to_string(&csv).unwrap());
    assert!(header.iter().any(|h| h == "id"));
    assert_eq!(rows.len(), 1);
}

#[test]
fn tight_tolerance_fails_the_run() {
    let dir = scratch("tight");
    let o = hypcm(&[
        "verify", "--check", "j2_duality", "--samples", "1", "--tol", "1e-300", "--json",
        dir.join("r.json").to_str().unwrap(), "--csv", dir.join("r.csv").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn thread_cap_is_honoured() {
    let o = Command::new(env!("CARGO_BIN_EXE_hypcm"))
        .args(["eval", "phi", "--b", "0.7"])
        .env("HYPCM_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_hypcm"))
        .args(["eval", "phi", "--b", "0.7"])
        .env("HYPCM_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn fast_suite_passes() {
    let dir = scratch("fast");
    let json = dir.join("r.json");
    let o = hypcm(&[
        "verify", "--suite", "fast", "--samples", "2", "--json", json.to_str().unwrap(), "--csv",
        dir.join("r.csv").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let reports: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), hypcm::verify::Suite::Fast.ids().len());
}
