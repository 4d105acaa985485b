use std::process::{Command, Output};

use rug::Float;
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_trig-enclose"));
    c.env_remove("TRIG_ENCLOSE_PRECISION");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn num(v: &Value) -> f64 {
    v.as_str().expect("decimal string").parse().unwrap()
}

fn contains(e: &Value, x: f64, slack: f64) -> bool {
    num(&e["lo"]) - slack <= x && x <= num(&e["hi"]) + slack
}

#[test]
fn eval_examples() {
    let v = json(&["eval", "tan", "--order", "3", "--at", "1.0"]);
    let lo = Float::with_val(256, Float::parse(v["value"]["lo"].as_str().unwrap()).unwrap());
    let hi = Float::with_val(256, Float::parse(v["value"]["hi"].as_str().unwrap()).unwrap());
    let tan1 = Float::with_val(256, Float::parse("1.557407724654902230506974807458360173087250772381520038383946605698861397151727").unwrap());
    assert!(lo <= tan1 && tan1 <= hi);
    assert!(Float::with_val(256, &hi - &lo) < 1e-70);

    let v = json(&["eval", "sec2tan", "--order", "2", "--at", "0.4"]);
    let x: f64 = 0.4;
    assert!(contains(&v["value"], x / x.cos().powi(2) - x.tan(), 1e-15));

    let v = json(&["eval", "tan", "--order", "0", "--at", "0"]);
    assert_eq!(v["value"]["lo"], "0");
    assert_eq!(v["value"]["hi"], "0");

    let v = json(&["eval", "sec2tan", "--at", "0.1"]);
    assert_eq!(v["order"], 2);
    let v = json(&["remainder", "tanh", "--order", "2", "--at", "-3"]);
    assert!(v.get("value").is_none());
    assert!(num(&v["remainder"]["lo"]) < 0.0);
}

#[test]
fn constants_examples() {
    let pi = std::f64::consts::PI;
    let v = json(&["constants", "wilker", "--order", "1"]);
    assert_eq!(v["lower"]["form"], "2/45");
    assert_eq!(v["lower"]["exactness"], "exact-rational");
    assert!(contains(&v["upper"]["value"], 4.0 * (pi * pi - 8.0) / pi.powi(4), 1e-16));

    let v = json(&["constants", "huygens", "--order", "2"]);
    assert_eq!(v["lower"]["form"], "1/504");
    let b2 = (960.0 * pi - pi.powi(4) - 2880.0) / (15.0 * pi.powi(6));
    assert!(contains(&v["upper"]["value"], b2, 1e-16));

    let v = json(&["constants", "sec-remainder", "--order", "0"]);
    assert_eq!(v["lower"]["form"], "1");
    assert!(contains(&v["upper"]["value"], pi / 2.0, 1e-15));
}

#[test]
fn verify_examples() {
    let v = json(&["verify", "all"]);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 33);
    assert!(reports.iter().all(|r| r["verdict"] == "certified"));

    let v = json(&["verify", "sun-zhu.open"]);
    assert_eq!(v[0]["verdict"], "certified");

    let v = json(&["verify", "becker-stark", "--grid", "11"]);
    let argmin = num(&v[0]["argmin"]);
    assert!(argmin > 0.0 && argmin < std::f64::consts::FRAC_PI_2);
    assert_eq!(v[0]["grid_points"], 11);

    let v = json(&["verify", "huygens.varrho.N", "--order", "3", "--grid", "51"]);
    assert_eq!(v[0]["orders"].as_array().unwrap().len(), 1);
}

#[test]
fn sums_and_tables() {
    let v = json(&["sums", "S3"]);
    assert_eq!(v["closed_form"], "-1 + (1/96)·π^4");
    assert_eq!(v["agree"], true);
    assert!(contains(&v["value"], std::f64::consts::PI.powi(4) / 96.0 - 1.0, 1e-15));

    let v = json(&["sums", "S10"]);
    assert!(v["closed_form"].as_str().unwrap().contains("ζ(3)"));

    let out = run(&["table", "wilker-constants", "--orders", "1..6"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut rows = csv::Reader::from_reader(text.as_bytes());
    let header = rows.headers().unwrap().clone();
    assert_eq!(&header[0], "order");
    assert!(header.iter().any(|h| h == "lower") && header.iter().any(|h| h == "upper"));
    let records: Vec<_> = rows.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 6);
    assert_eq!(&records[0][1], "2/45");
    assert_eq!(&records[1][1], "8/945");
}

#[test]
fn limits_and_comparisons() {
    let v = json(&["limit", "sun-zhu.ratio", "--at", "0+"]);
    assert_eq!(v["passed"], true);
    let v = json(&["limit", "wilker.sharp.N1.ratio", "--at", "pi/2-"]);
    assert_eq!(v["passed"], true);
    let v = json(&["compare", "banjac.upper", "becker-stark.upper"]);
    assert_eq!(v["verdict"], "a-dominates");
}

#[test]
fn json_round_trips_bit_exactly() {
    for prec in [64u32, 200, 512] {
        let p = prec.to_string();
        let v = json(&["eval", "cot", "--order", "2", "--at", "0.75", "--precision", &p]);
        for side in ["lo", "hi"] {
            let s = v["value"][side].as_str().unwrap();
            let x = Float::with_val(prec, Float::parse(s).unwrap());
            assert_eq!(x.prec(), prec);
            let again = x.to_string_radix(10, Some(s.trim_start_matches('-').split('e').next().unwrap().len() - 1));
            assert_eq!(Float::with_val(prec, Float::parse(&again).unwrap()), x, "prec {prec} {side}");
        }
        let v = json(&["constants", "huygens", "--order", "1", "--precision", &p]);
        let lo = Float::with_val(prec, Float::parse(v["upper"]["value"]["lo"].as_str().unwrap()).unwrap());
        let hi = Float::with_val(prec, Float::parse(v["upper"]["value"]["hi"].as_str().unwrap()).unwrap());
        let lib = trig_enclose::best_constants::huygens_a_b(1, prec).unwrap().upper.value;
        assert_eq!(&lo, lib.lo());
        assert_eq!(&hi, lib.hi());
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["eval", "tan", "--at", "1.5708"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "cot", "--at", "0"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "bogus", "--at", "1"]).status.code(), Some(4));
    assert_eq!(run(&["verify"]).status.code(), Some(4));
    assert_eq!(run(&["verify", "no-such-id"]).status.code(), Some(4));
    assert_eq!(run(&["eval", "tan", "--at", "0.5", "--precision", "32"]).status.code(), Some(4));
    assert_eq!(run(&["verify", "ge", "--grid", "2"]).status.code(), Some(4));
    assert_eq!(run(&["eval", "tan", "--at", "x"]).status.code(), Some(4));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let out = run(&["eval", "tan", "--at", "1.5708"]);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn precision_from_environment_and_flag() {
    let out = bin()
        .env("TRIG_ENCLOSE_PRECISION", "96")
        .args(["eval", "tan", "--at", "0.5"])
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["precision_bits"], 96);
    let out = bin()
        .env("TRIG_ENCLOSE_PRECISION", "96")
        .args(["eval", "tan", "--at", "0.5", "--precision", "128"])
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["precision_bits"], 128);
    assert_eq!(json(&["eval", "tan", "--at", "0.5"])["precision_bits"], 256);
}

#[test]
fn writes_to_out_path_in_each_format() {
    let dir = tempfile::tempdir().unwrap();
    for format in ["json", "csv", "text"] {
        let path = dir.path().join(format!("c.{format}"));
        let out = run(&[
            "constants",
            "wilker",
            "--format",
            format,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty());
        let body = std::fs::read_to_string(&path).unwrap();
        assert!(body.contains("2/45"), "{format}");
    }
    let v: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("c.json")).unwrap()).unwrap();
    assert_eq!(v["order"], 1);
}
