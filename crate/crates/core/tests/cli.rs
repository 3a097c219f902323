use std::process::{Command, Output};

fn vglab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vglab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn list_names_every_case() {
    let o = vglab(&["list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for id in ["4a@P2", "4d@P2", "1a@P4", "neg-3.3@P2"] {
        assert!(text.contains(id), "{id} missing from\n{text}");
    }
}

#[test]
fn verify_is_deterministic() {
    let a = vglab(&["verify", "4b", "--seed", "5", "--samples", "40"]);
    let b = vglab(&["verify", "4b", "--seed", "5", "--samples", "40"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("result: PASS"));
}

#[test]
fn verify_json() {
    let o = vglab(&["verify", "4a", "--samples", "40", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().len() > 10);
}

#[test]
fn non_embedding_is_flagged() {
    let o = vglab(&["verify", "neg-3.3", "--samples", "40"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("KNOWN NON-EMBEDDING"));
    assert!(text.contains("[     info] injective"));
}

#[test]
fn unwritable_output_exits_one() {
    let o = vglab(&[
        "verify",
        "4a",
        "--samples",
        "20",
        "--out",
        "/nonexistent/dir/r.txt",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(vglab(&["verify", "9z"]).status.code(), Some(2));
    assert_eq!(vglab(&["chern", "O(1)+"]).status.code(), Some(2));
    assert_eq!(
        vglab(&["cohom", "O(1)", "--twists", "x"]).status.code(),
        Some(2)
    );
    assert_eq!(
        vglab(&["stratify", "--samples", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(vglab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn spec_commands() {
    let o = vglab(&["chern", "Omega(2)@P2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "rank 2 c1 1 c2 1");

    let o = vglab(&["cohom", "O(1)+O(2)@P2", "--twists", "-1..1"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().filter(|l| !l.trim().is_empty()).count() >= 3);

    let o = vglab(&["restrict", "4a", "--line", "1:0:0;0:1:0"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));

    let o = vglab(&["plucker", "4a"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("2 4 3"));
}

#[test]
fn obstructions_pass() {
    let o = vglab(&["obstructions"]);
    assert_eq!(o.status.code(), Some(0));
}
