use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/worked_example").join(name)
}

fn detsolve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_detsolve"))
        .args(args)
        .output()
        .expect("spawn detsolve")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn bounds_of_worked_example() {
    let sys = fixture("system.sys");
    let out = detsolve(&["bounds", sys.to_str().unwrap()]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["bounds"]["chi"], 9);
    assert_eq!(v["bounds"]["rho"], 55);
    assert_eq!(v["bounds"]["dense"], 24);
}

#[test]
fn solve_then_verify() {
    let sys = fixture("system.sys");
    let out = detsolve(&["solve", sys.to_str().unwrap()]);
    assert!(out.status.success());
    let again = detsolve(&["solve", sys.to_str().unwrap()]);
    assert_eq!(out.stdout, again.stdout);
    let v = json(&out);
    assert_eq!(v["report"]["degree"], 9);

    let dir = std::env::temp_dir().join(format!("detsolve-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let param = dir.join("param.json");
    std::fs::write(&param, &out.stdout).unwrap();
    let check = detsolve(&["verify", sys.to_str().unwrap(), param.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).ok();
    assert!(check.status.success(), "{}", String::from_utf8_lossy(&check.stderr));
    assert_eq!(json(&check)["ok"], true);
}

#[test]
fn dimension_error_exit_code() {
    let dir = std::env::temp_dir().join(format!("detsolve-dim-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let sys = dir.join("bad.sys");
    std::fs::write(&sys, "prime 101\nvars x1 x2 x3\ng 1\nx1\nF 1 1\nx2\n").unwrap();
    let out = detsolve(&["bounds", sys.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"], "DimensionConstraint");
}

#[test]
fn mixed_volume_of_two_triangles() {
    let dir = std::env::temp_dir().join(format!("detsolve-mv-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let pts = dir.join("pts.json");
    std::fs::write(&pts, "[[[0,0],[1,0],[0,1]],[[0,0],[2,0],[0,1]]]").unwrap();
    let out = detsolve(&["mv", pts.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).ok();
    assert!(out.status.success());
    assert_eq!(json(&out)["mixed_volume"], 2);
}
