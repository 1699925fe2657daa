use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_girthforge"))
        .args(args)
        .env_remove("GIRTHFORGE_BUDGET")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn generate_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("g");
    let gen = bin(&["generate", "--layers", "4", "--layer-size", "24", "--r", "5", "--seed", "7", "--out", p(&out_dir)]);
    assert_eq!(code(&gen), 0, "{}", String::from_utf8_lossy(&gen.stderr));
    assert!(stdout(&gen).contains("verification=pass"));
    for f in ["config.txt", "layered.graph", "gprime.graph", "poset.poset", "repair.txt", "verification.txt"] {
        assert!(out_dir.join(f).exists(), "{f}");
    }
    let ver = bin(&["verify", p(&out_dir)]);
    assert_eq!(code(&ver), 0, "{}", stdout(&ver));
    assert!(stdout(&ver).ends_with("verify=pass\n"));

    let single = bin(&["verify", p(&out_dir.join("gprime.graph"))]);
    assert_eq!(code(&single), 0, "{}", stdout(&single));
}

#[test]
fn cycle_cap_exceeded_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(&[
        "generate", "--layers", "4", "--layer-size", "16", "--r", "6", "--cycle-cap", "3", "--out",
        p(&dir.path().join("g")),
    ]);
    assert_eq!(code(&out), 4);
}

#[test]
fn bad_config_and_parse_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(&["generate", "--layers", "4", "--layer-size", "16", "--r", "3", "--out", p(&dir.path().join("g"))]);
    assert_eq!(code(&out), 3);

    let bad = dir.path().join("bad.poset");
    fs::write(&bad, "poset 3\ncover 1 nope\n").unwrap();
    let out = bin(&["color", p(&bad)]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    assert_eq!(code(&bin(&["color", p(&dir.path().join("missing.poset"))])), 3);
    assert_eq!(code(&bin(&["frobnicate"])), 3);
    assert_eq!(code(&bin(&["--help"])), 0);
}

#[test]
fn color_accepts_trees_and_rejects_lattices() {
    let dir = tempfile::tempdir().unwrap();
    let tree = dir.path().join("tree.poset");
    fs::write(&tree, "poset 4\ncover 1 2\ncover 1 3\ncover 3 4\n").unwrap();
    let out_file = dir.path().join("tree.coloring");
    let out = bin(&["color", p(&tree), "--out", p(&out_file)]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&out_file).unwrap();
    assert!(text.contains("coloring 4"));
    assert!(text.contains("proper=true"));

    let lattice = dir.path().join("lattice.poset");
    fs::write(&lattice, "poset 4\ncover 1 2\ncover 1 3\ncover 2 4\ncover 3 4\n").unwrap();
    assert_eq!(code(&bin(&["color", p(&lattice)])), 2);
}

#[test]
fn realize_writes_verified_family() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("k22.poset");
    fs::write(&src, "poset 4\ncover 1 3\ncover 1 4\ncover 2 3\ncover 2 4\n").unwrap();
    let out_dir = dir.path().join("r");
    let out = bin(&["realize", p(&src), "--out", p(&out_dir)]);
    assert_eq!(code(&out), 0);
    let svg = fs::read_to_string(out_dir.join("curves.svg")).unwrap();
    assert!(svg.contains("<svg") && svg.contains("id=\"curve-4\""));
    assert_eq!(code(&bin(&["verify", p(&out_dir)])), 0);

    let chain = dir.path().join("chain.poset");
    fs::write(&chain, "poset 3\ncover 1 2\ncover 2 3\n").unwrap();
    assert_eq!(code(&bin(&["realize", p(&chain), "--out", p(&dir.path().join("c"))])), 2);
}

#[test]
fn mc_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("lemma.csv");
    let out = bin(&["mc", "lemma", "--trials", "500", "--seed", "3", "--out", p(&csv)]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("trial,seed,statistic,value"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 501);
    assert!(text.contains("verdict=pass"));
}

#[test]
fn constants_hold() {
    let out = bin(&["constants"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("r=")).count(), 61);
    assert!(!text.contains("holds=false"));
}

#[test]
fn tampered_directory_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("g");
    assert_eq!(code(&bin(&["generate", "--layers", "3", "--layer-size", "6", "--r", "4", "--seed", "3", "--out", p(&out_dir)])), 0);
    let path = out_dir.join("repair.txt");
    let text = fs::read_to_string(&path).unwrap();
    fs::write(&path, text + "# extra\n").unwrap();
    let out = bin(&["verify", p(&out_dir)]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("check reproduce:repair.txt fail"));
}
