use std::process::{Command, Output};

use serde_json::Value;

fn ellblock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ellblock"))
        .args(args)
        .env_remove("ELLBLOCK_MAX_SYM_N")
        .env_remove("ELLBLOCK_MAX_NORMALIZER_ELL")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn isometry_example_passes() {
    let o = ellblock(&["isometry", "--ell", "2", "--w", "1", "--r", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("PASS: 4 of 4 entries agree\n"));
}

#[test]
fn isometry_range_is_enforced() {
    for args in [
        ["isometry", "--ell", "2", "--w", "2", "--r", "0"],
        ["isometry", "--ell", "3", "--w", "0", "--r", "3"],
        ["isometry", "--ell", "1", "--w", "0", "--r", "0"],
    ] {
        let o = ellblock(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ellblock(&["--bogus"]).status.code(), Some(2));
    assert_eq!(ellblock(&["blocks", "--group", "sym:x", "--ell", "2"]).status.code(), Some(2));
    assert_eq!(ellblock(&["blocks", "--group", "normalizer:4", "--ell", "3"]).status.code(), Some(2));
    assert_eq!(ellblock(&["wreath", "--base", "cyclic:2", "--w", "2"]).status.code(), Some(2));
    assert_eq!(
        ellblock(&["wreath", "--base", "cyclic:2", "--w", "2", "--table", "--blocks"]).status.code(),
        Some(2)
    );
    assert_eq!(ellblock(&["sym-table", "--n", "15"]).status.code(), Some(2));
    assert_eq!(ellblock(&["--help"]).status.code(), Some(0));
}

#[test]
fn bounds_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_ellblock"))
        .args(["sym-table", "--n", "5"])
        .env("ELLBLOCK_MAX_SYM_N", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ELLBLOCK_MAX_SYM_N"));
    let o = Command::new(env!("CARGO_BIN_EXE_ellblock"))
        .args(["normalizer", "--ell", "7"])
        .env("ELLBLOCK_MAX_NORMALIZER_ELL", "6")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(
        ellblock(&["--max-n", "16", "sym-table", "--n", "15"]).status.code(),
        Some(0)
    );
}

#[test]
fn sym3_golden() {
    let o = ellblock(&["sym-table", "--n", "3"]);
    assert_eq!(
        stdout(&o),
        "S_3, order 6\n\
         class    (3)  (2,1)  (1,1,1)\n\
         |C(g)|   3    2      6\n\
         (3)      1    1      1\n\
         (2,1)    -1   0      2\n\
         (1,1,1)  1    -1     1\n"
    );
    let o = ellblock(&["blocks", "--group", "sym:3", "--ell", "2"]);
    assert_eq!(
        stdout(&o),
        "sym:3, ell = 2: 2 blocks, linking across 1 singular classes\n\
         block 1 (principal): (3) (1,1,1)\n\
         block 2: (2,1)\n"
    );
    let o = ellblock(&["blocks", "--group", "sym:3", "--ell", "3"]);
    assert!(stdout(&o).contains("block 1 (principal): (3) (2,1) (1,1,1)\n"));
}

#[test]
fn normalizer_golden() {
    let o = ellblock(&["normalizer", "--ell", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("N_(S_4)(Z_4), order 8, 5 classes, m = 2\n"));
    assert!(s.contains("block 2: psi[1,0]\n"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["isometry", "--ell", "3", "--w", "2", "--r", "1", "--json"],
        vec!["wreath", "--base", "normalizer:3", "--w", "2", "--table"],
        vec!["blocks", "--group", "wreath:normalizer:4:2", "--ell", "4", "--json"],
        vec!["normalizer", "--ell", "12", "--table", "--json"],
    ] {
        let a = ellblock(&args);
        let b = ellblock(&args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn isometry_json_schema() {
    for extra in [&[][..], &["--kor-only"][..]] {
        let mut args = vec!["isometry", "--ell", "3", "--w", "1", "--r", "2", "--json"];
        args.extend_from_slice(extra);
        let o = ellblock(&args);
        assert_eq!(o.status.code(), Some(0));
        let v: Value = serde_json::from_slice(&o.stdout).unwrap();
        let obj = v.as_object().unwrap();
        assert!(obj["params"].is_object());
        assert_eq!(obj["params"]["ell"], 3);
        assert_eq!(obj["pass"], Value::Bool(true));
        let pairs = obj["pairs"].as_array().unwrap();
        assert_eq!(pairs.len(), 9);
        for p in pairs {
            assert!(p["lhs"].is_string());
            assert!(p["rhs"].is_string());
            assert!(p["ok"].is_boolean());
        }
    }
}

#[test]
fn table_json_schema() {
    let o = ellblock(&["sym-table", "--n", "4", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["classes"].as_array().unwrap().len(), 5);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[1]["label"], "(3,1)");
    assert_eq!(rows[1]["values"][4], "3");

    let o = ellblock(&["wreath", "--base", "cyclic:3", "--w", "2", "--classes", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let classes = v.as_array().unwrap();
    assert_eq!(classes.len(), 9);
    let total: u64 = classes.iter().map(|c| c["size"].as_str().unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total, 18);
}

#[test]
fn cyclotomic_values_are_printed_exactly() {
    let o = ellblock(&["wreath", "--base", "cyclic:3", "--w", "1", "--table"]);
    let s = stdout(&o);
    assert!(s.contains("ζ3^1"), "{s}");
    assert!(s.contains("-1-ζ3^1"), "{s}");
}

#[test]
fn sylow_output() {
    let o = ellblock(&["sylow", "--n", "7", "--ell", "3"]);
    assert_eq!(stdout(&o), "n = 7, ell = 3: digits (1,2), L = Z3^2, order 9, abelian\n");
    let o = ellblock(&["sylow", "--n", "5", "--ell", "4", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cyclic"], Value::Bool(true));
}

#[test]
fn out_file() {
    let dir = std::env::temp_dir().join(format!("ellblock-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s3.txt");
    let o = ellblock(&["--out", path.to_str().unwrap(), "sym-table", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&ellblock(&["sym-table", "--n", "3"])));
    std::fs::remove_dir_all(&dir).unwrap();
}
