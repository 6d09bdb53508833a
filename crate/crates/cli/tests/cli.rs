use std::path::PathBuf;
use std::process::{Command, Output};

fn f4grade(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_f4grade")).args(args).env_remove("GRADINGS_CACHE_DIR").output().expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn weyl_classes_lists_25_representatives() {
    let o = f4grade(&["weyl", "classes"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("1152 elements, 25 classes\n"));
    assert_eq!(out.lines().count(), 2 + 25);
    assert!(out.contains("\n  15      3    16  Z3^2\n"));
    assert!(out.contains("\n 405      2     1  Z2^4\n"));
}

#[test]
fn weyl_fixed_rows() {
    assert_eq!(stdout(&f4grade(&["weyl", "fixed", "--j", "15"])), "sigma_15: order 3, T^sigma = Z3^2\n");
    assert_eq!(stdout(&f4grade(&["weyl", "fixed", "--j", "3"])), "sigma_3: order 4, T^sigma = Z2 x Z4\n");
    assert_eq!(f4grade(&["weyl", "fixed", "--j", "1153"]).status.code(), Some(2));
}

#[test]
fn weyl_stabilizer_of_the_z3_points() {
    let o = f4grade(&["weyl", "stabilizer", "--t", "w,1,w^2,w^2", "--t", "1,w,w,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3 elements: 15 748 1075\n");
    let o = f4grade(&["weyl", "stabilizer", "--t", "-1,1,-1,1", "--t", "1,-1,-1,1", "--t", "1,1,1,z24"]);
    assert_eq!(stdout(&o), "2 elements: 105 748\n");
}

#[test]
fn grade_a15_json() {
    let o = f4grade(&["grade", "--preset", "A15", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).expect("json");
    let comps = v["components"].as_array().expect("components");
    assert_eq!(comps.len(), 26);
    assert!(comps.iter().all(|c| c["dim"] == 2 && c["basis"].as_array().map(Vec::len) == Some(2)));
    assert_eq!(v["toral"], false);
    assert_eq!(v["algebra"], "f4");
    assert_eq!(v["group"]["free_rank"], 0);
    assert_eq!(v["group"]["factors"], serde_json::json!([3, 3, 3]));
    assert_eq!(v["type"], serde_json::json!([0, 26]));
    assert!(v["provenance"].is_string());
}

#[test]
fn grade_cartan_plain() {
    let out = stdout(&f4grade(&["grade", "--preset", "cartan"]));
    assert!(out.contains("type (48,0,0,1)\n"));
    assert!(out.contains("group Z^4\n"));
    assert!(out.contains("torality toral\n"));
}

#[test]
fn grade_albert_and_h3f_presets() {
    let out = stdout(&f4grade(&["grade", "--preset", "coar"]));
    assert!(out.contains("grading coar on J\n") && out.contains("type (0,12,1)\n"));
    let out = stdout(&f4grade(&["grade", "--preset", "gr3"]));
    assert!(out.contains("type (0,3)\n") && out.contains("torality n/a\n"));
}

#[test]
fn output_is_deterministic() {
    let a = f4grade(&["grade", "--preset", "II.4.1", "--json"]);
    let b = f4grade(&["grade", "--preset", "II.4.1", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).expect("json");
    assert_eq!(v["type"], serde_json::json!([0, 8, 2, 0, 6]));
}

#[test]
fn verify_single_tables() {
    let o = f4grade(&["verify", "--table", "weyl-classes"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("  ok    sigma_")).count(), 25);
    assert!(out.ends_with("all 1 tables pass\n"));
}

#[test]
fn verify_mismatch_exits_1_with_row_diff() {
    let o = f4grade(&["verify", "--table", "appendix"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("  FAIL  f for sigma_485: expected "));
    assert!(out.ends_with("failing tables: appendix\n"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &[][..],
        &["frobnicate"],
        &["grade"],
        &["grade", "--preset", "nt9"],
        &["verify"],
        &["verify", "--all", "--table", "fine"],
        &["verify", "--table", "nope"],
        &["weyl", "stabilizer", "--t", "1,2,3"],
        &["weyl", "stabilizer", "--t", "0,1,1,1"],
        &["algebra", "dump", "--name", "E8"],
    ] {
        assert_eq!(f4grade(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn algebra_dumps() {
    let out = stdout(&f4grade(&["algebra", "dump", "--name", "C"]));
    assert!(out.starts_with("# C (dim 8, alternative)\n"));
    for (name, dim) in [("J", 27), ("H3F", 6), ("TITS", 27), ("F4", 52)] {
        let out = stdout(&f4grade(&["algebra", "dump", "--name", name]));
        assert!(out.lines().next().unwrap().contains(&format!("(dim {dim},")), "{name}");
    }
}

#[test]
fn cache_directory_is_written_once_and_reused() {
    let dir: PathBuf = std::env::temp_dir().join(format!("f4grade-cache-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_f4grade"))
            .args(["weyl", "fixed", "--j", "105"])
            .env("GRADINGS_CACHE_DIR", &dir)
            .output()
            .expect("runs")
    };
    let first = run();
    assert!(dir.join("weyl-v1.txt").exists() && dir.join("f4-basis-v1.txt").exists());
    let written = std::fs::read(dir.join("weyl-v1.txt")).unwrap();
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    assert!(second.stderr.is_empty());
    assert_eq!(std::fs::read(dir.join("weyl-v1.txt")).unwrap(), written);
    std::fs::write(dir.join("f4-basis-v1.txt"), "albert-f4 f4-basis v1\n0\n").unwrap();
    let stale = run();
    assert_eq!(stale.stdout, first.stdout);
    assert!(String::from_utf8_lossy(&stale.stderr).contains("does not match"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_all_reports_every_table() {
    let o = f4grade(&["verify", "--all"]);
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("table ")).count(), 14);
    assert_eq!(out.lines().filter(|l| l.starts_with("table ") && l.contains("[FAIL]")).count(), 1);
    assert!(out.contains("table appendix [FAIL]"));
    assert!(out.contains("  note  row II.4 (coar)"));
    assert_eq!(o.status.code(), Some(1));
}
