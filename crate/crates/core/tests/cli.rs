use std::process::Command;

use serde_json::Value;

fn prmhull_env(args: &[&str], threads: Option<&str>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_prmhull"));
    cmd.args(args);
    if let Some(t) = threads {
        cmd.env("PRMHULL_THREADS", t);
    }
    let out = cmd.output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn prmhull(args: &[&str]) -> (i32, String, String) {
    prmhull_env(args, None)
}

fn record(args: &[&str]) -> Value {
    let (code, out, err) = prmhull(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(out.lines().next().unwrap()).unwrap()
}

#[test]
fn params_records() {
    let r = record(&["params", "prm", "--q", "4", "--m", "2", "--d", "5", "--oracle"]);
    assert_eq!((r["n"].as_u64(), r["k"].as_u64(), r["wt"].as_u64()), (Some(21), Some(18), Some(3)));
    assert_eq!(r["oracle"]["k"], 18);
    assert_eq!(r["oracle"]["wt"], 3);
    let r = record(&["params", "rm", "--q", "9", "--m", "2", "--d", "0"]);
    assert_eq!((r["n"].as_u64(), r["k"].as_u64(), r["wt"].as_u64()), (Some(81), Some(1), Some(81)));
    let r = record(&["params", "prm", "--q", "4", "--m", "2", "--d", "3"]);
    assert_eq!(r["dual"]["all_ones"], true);
    assert_eq!(r["dual"]["text"], "PRM_3 + all-ones");
}

#[test]
fn hull_records() {
    let r = record(&["hull", "euclid", "--q", "4", "--d1", "4", "--d2", "5", "--verify"]);
    assert_eq!(r["dim"], 13);
    assert_eq!(r["verify"]["spans"], true);
    assert_eq!(r["basis"][12], "x2^4 + x1^2*x2^2 + x0^2*x2^2 + x0^2*x1*x2");

    let (code, _, err) = prmhull(&["hull", "euclid", "--q", "4", "--d1", "1", "--d2", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("d2 = q-1: dual is not a PRM code"), "{err}");

    let r = record(&["hull", "hermitian", "--q", "3", "--d", "7", "--verify"]);
    assert_eq!((r["sizes"]["u"].as_u64(), r["sizes"]["v"].as_u64(), r["sizes"]["w"].as_u64()), (Some(21), Some(1), Some(1)));
    assert_eq!(r["dim"], 23);
    assert_eq!(r["exactness"], "lower_bound");
    assert_eq!(r["verify"]["tight"], true);

    let r = record(&["hull", "affine-hermitian", "--q", "3", "--d", "4", "--verify"]);
    assert_eq!(r["dim"], 14);
    assert_eq!(r["verify"]["passed"], true);
}

#[test]
fn tables() {
    let (code, out, _) = prmhull(&["table", "asym", "--q", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next().unwrap(), "q,d1,d2,n,kappa,delta_x,delta_z,c,provenance");
    assert!(out.lines().any(|l| l == "4,1,4,21,5,3,12,2,closed_form"));

    let (_, out, _) = prmhull(&["table", "asym", "--q", "9"]);
    let rows: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(rows[0]["meta"]["note"].as_str().unwrap().contains("no Gilbert-Varshamov filter"));
    let row = rows.iter().find(|r| r["d1"] == 3 && r["d2"] == 11).unwrap();
    assert_eq!((row["n"].as_u64(), row["kappa"].as_u64(), row["delta_x"].as_u64(), row["delta_z"].as_u64(), row["c"].as_u64()),
        (Some(91), Some(15), Some(5), Some(45), Some(4)));
    assert_eq!(row["provenance"]["c"], "closed_form");

    let (_, out, _) = prmhull(&["table", "herm", "--q", "3"]);
    let row: Value = out.lines().map(|l| serde_json::from_str::<Value>(l).unwrap()).find(|r| r["d"] == 2).unwrap();
    assert_eq!((row["c"].as_u64(), row["kappa"].as_u64()), (Some(0), Some(79)));
    assert_eq!(row["provenance"]["delta"], "bound");

    let (_, out, _) = prmhull(&["table", "herm", "--q", "3", "--format", "csv"]);
    assert!(out.lines().any(|l| l == "3,7,91,36,32,9,13,bound,bound,bound"), "{out}");

    let (_, out, _) = prmhull(&["table", "affine-herm", "--q", "3", "--format", "csv"]);
    assert!(out.lines().any(|l| l.starts_with("3,4,81,15,52,")), "{out}");
}

#[test]
fn verify_scopes() {
    for (scope, q) in [("euclid", "3,4,5"), ("hermitian", "2,3"), ("affine", "2,3"), ("eaqecc", "4,5,9")] {
        let (code, out, err) = prmhull(&["verify", scope, "--q", q]);
        assert_eq!(code, 0, "{scope}: {err}");
        let last: Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
        assert_eq!(last["failures"], 0);
        assert_eq!(last["status"], "pass");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(prmhull(&[]).0, 2);
    assert_eq!(prmhull(&["hull", "euclid", "--q", "4"]).0, 2);
    assert_eq!(prmhull(&["params", "prm", "--q", "6", "--d", "1"]).0, 2);
    assert_eq!(prmhull(&["hull", "hermitian", "--q", "3", "--d", "8"]).0, 2);
    assert_eq!(prmhull(&["--help"]).0, 0);
}

#[test]
fn output_is_stable() {
    let args = ["verify", "euclid", "--q", "4,5"];
    let (_, a, _) = prmhull(&args);
    let (_, b, _) = prmhull_env(&args, Some("1"));
    let (_, c, _) = prmhull_env(&args, Some("3"));
    assert_eq!(a, b);
    assert_eq!(a, c);
    let (_, x, _) = prmhull(&["examples"]);
    let (_, y, _) = prmhull(&["examples"]);
    assert_eq!(x, y);
}

#[test]
fn keys_are_sorted() {
    let (_, out, _) = prmhull(&["hull", "hermitian", "--q", "3", "--d", "5"]);
    let line = out.lines().next().unwrap();
    let v: Value = serde_json::from_str(line).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(serde_json::to_string(&v).unwrap(), line);
}
