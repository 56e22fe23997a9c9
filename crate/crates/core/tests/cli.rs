use bifrac::cli::run;
use std::path::PathBuf;

fn fixdir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn bifrac(args: &str) -> bifrac::cli::Outcome {
    let root = fixdir();
    let argv = std::iter::once("bifrac".to_string()).chain(args.split_whitespace().map(|a| {
        if let Some(rest) = a.strip_prefix("fixtures/") {
            root.join(rest).to_string_lossy().into_owned()
        } else {
            a.to_string()
        }
    }));
    run(argv)
}

#[test]
fn validate_fixp() {
    let o = bifrac("validate fixtures/fixp");
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.report.unwrap().verdicts.iter().all(|v| v.pass));
}

#[test]
fn colimit_both_has_iso_witness() {
    let o = bifrac("colimit fixtures/fixf --method both");
    assert_eq!(o.code, 0, "{}", o.stderr);
    let r = o.report.unwrap();
    assert!(r.witnesses.contains_key("iso-H"));
    assert!(r.witnesses.contains_key("iso-K"));
    assert!(r.verdicts.iter().any(|v| v.name == "iso-strict-inverse" && v.pass));
}

#[test]
fn axioms_frc_lists_witnesses() {
    let o = bifrac("axioms fixtures/fixi --set frc --family all");
    assert_eq!(o.code, 0, "{}", o.stderr);
    let r = o.report.unwrap();
    for k in ["0-Frc", "1-Frc", "2-Frc"] {
        assert!(r.witnesses[k].as_array().is_some_and(|a| !a.is_empty()), "{k}");
    }
}

#[test]
fn mutations_exit_one() {
    for e in std::fs::read_dir(fixdir().join("mutations")).unwrap() {
        let p = e.unwrap().path();
        let o = run(["bifrac", "validate", p.to_str().unwrap()]);
        assert_eq!(o.code, 1, "{}", p.display());
    }
}

#[test]
fn exit_codes() {
    assert_eq!(bifrac("validate fixtures/nonexistent").code, 2);
    assert_eq!(bifrac("frobnicate").code, 2);
    assert_eq!(bifrac("axioms fixtures/fixi --set nope").code, 2);
    assert_eq!(bifrac("homcat fixtures/fixi --source 0 --target Q").code, 2);
    // fixf is a diagram, not a bicategory
    assert_eq!(bifrac("axioms fixtures/fixf --set flt").code, 2);
    // a category file has no bicategory structure for homcat
    let dir = std::env::temp_dir().join(format!("bifrac-codes-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let loc = dir.join("loc.json");
    assert_eq!(bifrac(&format!("localize fixtures/fixi --emit {}", loc.display())).code, 0);
    assert_eq!(run(["bifrac", "exactness", loc.to_str().unwrap()]).code, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reports_are_deterministic() {
    for cmd in [
        "colimit fixtures/fixf --method both",
        "homcat fixtures/fixp --family all --source B --target B --method both",
        "pi0 fixtures/fixp --family all --human",
        "axioms @random --set frc --seed 11",
        "colimit @random --method both --seed 4",
    ] {
        let a = bifrac(cmd);
        let b = bifrac(cmd);
        assert_eq!(a.stdout, b.stdout, "{cmd}");
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn fixture_dir_resolution() {
    // bare names fall back to the fixture directory
    let o = run(["bifrac", "validate", "fixp"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
}

#[test]
fn emit_round_trips() {
    let dir = std::env::temp_dir().join(format!("bifrac-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let total = dir.join("el.json");
    let o = bifrac(&format!("groth fixtures/fixf --emit {}", total.display()));
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v = run(["bifrac", "validate", total.to_str().unwrap()]);
    assert_eq!(v.code, 0, "{}", v.stderr);
    assert!(dir.join("el.json.families.json").exists());
    let o = run(["bifrac", "axioms", total.to_str().unwrap(), "--set", "pflt"]);
    assert!(o.code <= 1, "{}", o.stderr);
    let loc = dir.join("loc.json");
    let o = bifrac(&format!("localize fixtures/fixi --family all --emit {}", loc.display()));
    assert_eq!(o.code, 0);
    let o = run(["bifrac", "localize", loc.to_str().unwrap(), "--family", "identities"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_honours_fixture_env() {
    let dir = std::env::temp_dir().join(format!("bifrac-env-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::copy(fixdir().join("fixi.json"), dir.join("only_here.json")).unwrap();
    let bin = env!("CARGO_BIN_EXE_bifrac");
    let out = std::process::Command::new(bin).args(["validate", "only_here"]).env("BIFRAC_FIXTURES", &dir).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = std::process::Command::new(bin).args(["validate", "only_here"]).env_remove("BIFRAC_FIXTURES").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
