use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use vortspin_cli::commands::{classify, profile, validate};
use vortspin_cli::{Format, Scenario};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_vortspin"))
}

fn bundled(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios").join(name)
}

fn run(args: &[&str], scenario: &Path) -> Output {
    bin().args(&args[..1]).arg("--scenario").arg(scenario).args(&args[1..]).output().unwrap()
}

fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    (header, lines.map(|l| l.split(',').map(String::from).collect()).collect())
}

fn column(header: &[String], rows: &[Vec<String>], name: &str) -> Vec<Option<f64>> {
    let i = header.iter().position(|h| h == name).unwrap_or_else(|| panic!("no column {name}"));
    rows.iter().map(|r| r[i].parse().ok()).collect()
}

#[test]
fn missing_file_and_bad_config_exit_2() {
    let out = run(&["profile"], Path::new("/definitely/not/here.json"));
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    let text = std::fs::read_to_string(bundled("parallel.json")).unwrap().replace("\"per_decade\": 24", "\"per_decade\": 3");
    std::fs::write(&bad, text).unwrap();
    let out = run(&["profile"], &bad);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("per_decade"));

    std::fs::write(&bad, r#"{"name": "x", "unknown_key": 1}"#).unwrap();
    assert_eq!(run(&["classify"], &bad).status.code(), Some(2));

    assert_eq!(run(&["validate", "--format", "csv"], &bundled("parallel.json")).status.code(), Some(2));
    assert_eq!(bin().arg("explode").output().unwrap().status.code(), Some(2));
}

#[test]
fn validate_passes_on_every_bundled_scenario() {
    for name in ["parallel.json", "antiparallel.json", "bb.json", "barnett.json", "plane_wave.json"] {
        let out = run(&["validate"], &bundled(name));
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["pass"], true, "{name}");
    }
}

#[test]
fn corrupted_component_fails_residual_check() {
    let s = Scenario::load(&bundled("parallel.json")).unwrap();
    let clean = validate::report(&s, validate::Options::default()).unwrap();
    assert!(clean.passed());
    let opts = validate::Options { seed: None, corrupt: Some((0, 1.01)) };
    let bad = validate::report(&s, opts).unwrap();
    assert!(!bad.passed());
    assert!(bad.failures().contains(&"dirac_residual"));
    assert!(bad.check("dirac_residual").unwrap().value > 1e-4);
}

#[test]
fn near_axis_form_residual_is_informational() {
    let text = std::fs::read_to_string(bundled("barnett.json"))
        .unwrap()
        .replace("\"family\": \"barnett\"", "\"family\": \"barnett_small_rho\"");
    let s = Scenario::from_json(&text).unwrap();
    let r = validate::report(&s, validate::Options::default()).unwrap();
    let check = r.check("dirac_residual").unwrap();
    assert!(check.informational);
    assert!(check.value > validate::DIRAC_RESIDUAL_MAX);
    assert!(r.passed(), "failures: {:?}", r.failures());
}

#[test]
fn validate_failure_exits_1() {
    let out = run(&["validate", "--corrupt", "2:1.01"], &bundled("bb.json"));
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], false);
    assert!(String::from_utf8_lossy(&out.stderr).contains("dirac_residual"));
    assert_eq!(run(&["validate", "--corrupt", "7:1.01"], &bundled("bb.json")).status.code(), Some(2));
}

#[test]
fn plane_wave_profile_is_flat() {
    let s = Scenario::load(&bundled("plane_wave.json")).unwrap();
    let (header, rows) = csv_rows(&profile::run(&s, Format::Csv).unwrap());
    assert_eq!(
        header,
        [
            "rho",
            "v_phi_dirac",
            "v_phi_canonical",
            "v_phi_belinfante",
            "v_z_dirac",
            "v_z_canonical",
            "v_z_belinfante",
            "density",
            "undefined_flag"
        ]
    );
    for def in ["dirac", "canonical", "belinfante"] {
        assert!(column(&header, &rows, &format!("v_phi_{def}")).iter().all(|v| *v == Some(0.0)));
        for v in column(&header, &rows, &format!("v_z_{def}")) {
            assert!((v.unwrap() - 0.6).abs() <= 1e-13);
        }
    }
}

#[test]
fn canonical_profile_follows_orbital_whirlpool() {
    let s = Scenario::load(&bundled("parallel.json")).unwrap();
    let e = s.beam().unwrap().energy();
    let (header, rows) = csv_rows(&profile::run(&s, Format::Csv).unwrap());
    let rho = column(&header, &rows, "rho");
    let can = column(&header, &rows, "v_phi_canonical");
    for (r, v) in rho.iter().zip(&can).filter(|(r, _)| r.unwrap() < 1.0) {
        assert!((v.unwrap() * r.unwrap() * e / 3.0 - 1.0).abs() < 1e-6);
    }
}

#[test]
fn antiparallel_classification_has_whirlpool_outer_window() {
    let s = Scenario::load(&bundled("antiparallel.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&classify::run(&s, Format::Json).unwrap()).unwrap();
    let regimes = v["definitions"]["dirac"]["regimes"].as_array().unwrap();
    assert_eq!(regimes[0]["regime"], "bucket");
    let outer = regimes.last().unwrap();
    assert_eq!(outer["regime"], "whirlpool");
    assert!((outer["fitted_slope"].as_f64().unwrap() + 1.0).abs() <= 0.10);
    assert_eq!(v["definitions"]["dirac"]["verdict"]["kind"], "regular");
    assert_eq!(v["definitions"]["canonical"]["verdict"]["kind"], "singular");
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("profile.csv");
    let out = run(&["profile", "--out", path.to_str().unwrap()], &bundled("bb.json"));
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("rho,"));
}

#[test]
fn bundled_scenarios_round_trip() {
    for name in ["parallel.json", "antiparallel.json", "bb.json", "barnett.json", "plane_wave.json"] {
        let s = Scenario::load(&bundled(name)).unwrap();
        let again = Scenario::from_json(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(s, again, "{name}");
    }
}

#[test]
fn outputs_never_print_nan() {
    for name in ["parallel.json", "antiparallel.json", "bb.json", "barnett.json", "plane_wave.json"] {
        for cmd in ["profile", "vorticity", "classify"] {
            for format in ["csv", "json"] {
                let out = run(&[cmd, "--format", format], &bundled(name));
                assert!(out.status.success(), "{name} {cmd} {format}");
                let text = String::from_utf8(out.stdout).unwrap();
                let bad = text
                    .split(|ch: char| ch == ',' || ch == ':' || ch.is_whitespace())
                    .map(|t| t.trim_matches(|ch| ch == '"' || ch == '[' || ch == ']'))
                    .any(|t| t.eq_ignore_ascii_case("nan") || t.trim_start_matches('-').eq_ignore_ascii_case("inf"));
                assert!(!bad, "{name} {cmd} {format}");
            }
        }
    }
}
