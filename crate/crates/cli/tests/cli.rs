use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        let ws = Workspace { dir: TempDir::new().unwrap() };
        ws.file("swap.circ", "circular\nwires 2\ncnot 0 1\ncnot 1 0\ncnot 0 1\n");
        ws.file("linear.circ", "linear\nwires 3\ncnot 0 1\ncnot 1 2\n");
        ws.file("radial_a.cuts", "cut 0 2\ncut 1 2\n");
        ws.file("radial_b.cuts", "cut 0 1; cut 1 1\ndirection cw\n");
        ws.file("skewed.cuts", "cut 0 0\ncut 1 2\n");
        ws.file("cnot.map", "X0 -> X{0}\nX1 -> X{0,1}\nZ0 -> Z{0,1}\nZ1 -> Z{1}\n");
        ws.file("gate1.fault", "smgf 1\n");
        ws.file("h.prog", "program\nqubits 1\nh 0\n");
        ws
    }

    fn file(&self, name: &str, body: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        fs::write(&p, body).unwrap();
        p
    }

    fn run(&self, args: &[&str]) -> Output {
        Command::new(env!("CARGO_BIN_EXE_circnot")).current_dir(self.dir.path()).args(args).output().unwrap()
    }

    fn ok(&self, args: &[&str]) -> String {
        let out = self.run(args);
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        String::from_utf8(out.stdout).unwrap()
    }
}

#[test]
fn enumerate_lists_six_cut_points() {
    let ws = Workspace::new();
    let out = ws.ok(&["cuts", "--enumerate", "swap.circ"]);
    assert_eq!(out.lines().count(), 6);
    assert!(out.lines().all(|l| l.starts_with("cut ")));
}

#[test]
fn derive_reports_swap_map() {
    let ws = Workspace::new();
    let out = ws.ok(&["derive", "swap.circ", "--cuts", "radial_a.cuts", "--dir", "cw"]);
    assert!(out.contains("X0 -> X{1}"));
    assert!(out.contains("Z1 -> Z{0}"));
    let combined = ws.ok(&["derive", "swap.circ", "--cuts", "radial_a.cuts", "--combined"]);
    assert_eq!(combined, out);
}

#[test]
fn search_finds_single_cnot_cut() {
    let ws = Workspace::new();
    let out = ws.ok(&["search", "swap.circ", "--target", "cnot.map", "--max-cuts", "2"]);
    assert!(out.lines().any(|l| l == "{w0g1,w1g1} cw"), "{out}");
}

#[test]
fn kv_output_is_machine_readable() {
    let ws = Workspace::new();
    let out = ws.ok(&["--format", "kv", "derive", "swap.circ", "--cuts", "radial_a.cuts"]);
    assert!(out.lines().any(|l| l == "map.x=[[1],[0]]"), "{out}");
    assert!(out.lines().all(|l| l.contains('=')));
}

#[test]
fn output_is_deterministic() {
    let ws = Workspace::new();
    for args in [
        &["export", "swap.circ", "--cuts", "radial_a.cuts"][..],
        &["model", "swap.circ", "--kind", "z", "--parity"],
        &["selfcheck", "--seed", "3", "--count", "20"],
        &["icm", "translate", "h.prog"],
    ] {
        assert_eq!(ws.ok(args), ws.ok(args), "{args:?}");
    }
}

#[test]
fn domain_errors_exit_one_with_code() {
    let ws = Workspace::new();
    let out = ws.run(&["derive", "swap.circ", "--cuts", "skewed.cuts"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NoRadialCut"));
    let out = ws.run(&["--format", "kv", "linearize", "swap.circ", "--cuts", "skewed.cuts"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("error=\"NoRadialCut\""));
    let out = ws.run(&["search", "swap.circ", "--target", "cnot.map", "--max-cuts", "1"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("BudgetTooSmall"));
}

#[test]
fn usage_errors_exit_two() {
    let ws = Workspace::new();
    assert_eq!(ws.run(&["derive", "swap.circ"]).status.code(), Some(2));
    assert_eq!(ws.run(&["frobnicate"]).status.code(), Some(2));
    let out = ws.run(&["icm", "gadget", "toffoli"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("teleport"));
}

#[test]
fn circularize_and_strip() {
    let ws = Workspace::new();
    let out = ws.ok(&["--format", "kv", "circularize", "linear.circ"]);
    assert!(out.contains("wires=2") && out.contains("cross_joins=1"), "{out}");
    let icm = ws.ok(&["icm", "gadget", "remotecnot"]);
    ws.file("remote.icm", &icm);
    let out = ws.ok(&["--format", "kv", "icm", "strip", "remote.icm"]);
    assert!(out.contains("qubits=4"), "{out}");
    assert!(ws.ok(&["parse", "remote.icm"]).starts_with("icm\n"));
}

#[test]
fn fault_removes_gate() {
    let ws = Workspace::new();
    let out = ws.ok(&["--format", "kv", "fault", "swap.circ", "--cuts", "radial_a.cuts", "--fault", "gate1.fault"]);
    assert!(out.contains("reduced=[[0,1],[0,1]]"), "{out}");
    assert!(out.contains("map.x=[[0],[1]]"), "{out}");
}

#[test]
fn export_marks_cuts() {
    let ws = Workspace::new();
    let out = ws.ok(&["export", "swap.circ", "--cuts", "radial_a.cuts"]);
    assert_eq!(out.matches("label=\"cut\"").count(), 2);
    assert_eq!(out.matches("color=blue").count(), 3);
    let out = ws.ok(&["export", "linear.circ"]);
    assert!(out.starts_with("digraph linear"));
}

#[test]
fn missing_file_is_a_domain_error() {
    let ws = Workspace::new();
    let out = ws.run(&["parse", "nope.circ"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Io"));
}
