use std::process::Command;

use quadit::{parse_rat_flag, Case2Out, CriterionOut, Envelope, N1Row, SearchRow, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
use quadit_core::curves::AffinePoint;
use quadit_core::dynamics::IterateReport;
use quadit_core::Rat;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["quadit"];
    full.extend_from_slice(args);
    let code = quadit::run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Envelope {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn roundtrip<T: serde::de::DeserializeOwned + serde::Serialize>(env: &Envelope) -> T {
    let typed: T = serde_json::from_value(env.result.clone()).unwrap();
    assert_eq!(serde_json::to_value(&typed).unwrap(), env.result);
    typed
}

fn r(s: &str) -> Rat {
    s.parse().unwrap()
}

#[test]
fn detect_report_roundtrips() {
    let env = json(&["detect", "--gamma", "0", "--m", "-4/3", "--n", "1"]);
    let report: IterateReport = roundtrip(&env);
    assert_eq!(report.newly_reducible_at, Some(2));
    assert_eq!(report.pairing_ok, Some(true));
    assert_eq!(report.square_filter.unwrap().root, Some(r("2/3")));
}

#[test]
fn envelope_reparses_exactly() {
    let (_, out, _) = run(&["--format", "json", "genus", "--gamma", "1", "--i", "4"]);
    let env: Envelope = serde_json::from_str(&out).unwrap();
    assert_eq!(env.version, quadit::ENVELOPE_VERSION);
    let again = serde_json::to_string_pretty(&env).unwrap();
    assert_eq!(again.trim_end(), out.trim_end());
}

#[test]
fn data_checksums_are_pinned() {
    let expected = [
        ("c_gamma.txt", "e08c3895869f1a2157cf8556733b0b958a95e5eedac8b6274559b2ff7a43fc21"),
        ("case2.txt", "fff4c0c67a747be30a65f8496787c091a4fb85bab7ba4588c0db514b0104d115"),
        ("appendix_1.txt", "7fba16241b5d606814bc3567dcfa1a810e5ca2ad608ab326d2086ea3a347b8f6"),
        ("appendix_2.txt", "1e8926fb3bb96199e8686b3d55fe63f13733702398bc2ef98fc2ae93fb543513"),
        ("appendix_3.txt", "9ec41f16abe8477607f3d96f9abd6f29a287a23f2c35d3a5b63b6f00e04b5aa6"),
        ("appendix_4.txt", "408882a67a1225e5756dc6e58f9fa6bcc22f4db99f607d6840bfda76b7fe5170"),
        ("appendix_5.txt", "10e3a717daa1ef81f6575e8c30576d342d8b2b1f78cbc86ae58a2244c8eafc72"),
        ("appendix_6.txt", "cf54a625a9afdfe66b9fc56537cad7749dda1e9745ff82c805190dba359f6c23"),
        ("appendix_7.txt", "bc036a8ba7dddd1e7829773a1c94b35e103f28f9599714c3dab3c91dd82469b8"),
    ];
    let got = quadit::data_checksums();
    assert_eq!(got.len(), expected.len());
    for ((n, h), (en, eh)) in got.iter().zip(expected) {
        assert_eq!((n.as_str(), h.as_str()), (en, eh));
    }
}

#[test]
fn search_rows_roundtrip() {
    let env = json(&["search", "--gamma", "0", "--n", "1", "--height", "8"]);
    let rows: Vec<SearchRow> = roundtrip(&env);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].m, r("-4/3"));
    assert_eq!(rows[0].factors.len(), 2);
}

#[test]
fn n1_rows_roundtrip() {
    let env = json(&["n1-family", "--gamma", "0", "--c1-height", "3"]);
    let rows: Vec<N1Row> = roundtrip(&env);
    assert!(rows.iter().any(|w| w.c1 == r("2") && w.m == r("-4/3") && w.c0 == r("2/3")));
}

#[test]
fn criterion_and_case2_roundtrip() {
    let c: CriterionOut = roundtrip(&json(&["criterion", "--gamma", "1/4"]));
    assert!(!c.verdict.passes);
    assert_eq!(c.verdict.failing_j, Some(1));
    let c2: Case2Out = roundtrip(&json(&["case2", "--gamma", "1"]));
    assert_eq!(c2.gamma, r("1"));
}

#[test]
fn points_on_quartic_model() {
    let env = json(&["points", "--curve", "c3prime", "--height", "10"]);
    let pts: Vec<AffinePoint> = roundtrip(&env);
    assert_eq!(pts, vec![AffinePoint::from_i64(0, 1), AffinePoint::from_i64(0, -1)]);
    let (code, tsv, _) = run(&["--format", "tsv", "points", "--curve", "c3prime", "--height", "10"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(tsv, "x\ty\n0\t1\n0\t-1\n");
}

#[test]
fn genus_of_fourth_curve() {
    let (code, out, _) = run(&["--format", "pretty", "genus", "--gamma", "1", "--i", "4"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("genus: 3"), "{out}");
}

#[test]
fn output_independent_of_workers() {
    for args in [
        &["search", "--gamma", "1", "--n", "1", "--height", "25"][..],
        &["points", "--curve", "c3", "--height", "40"][..],
        &["n1-family", "--gamma", "1", "--c1-height", "6"][..],
    ] {
        let mut outs = Vec::new();
        for w in ["1", "3", "8"] {
            let mut full = vec!["--workers", w];
            full.extend_from_slice(args);
            let (code, out, err) = run(&full);
            assert_eq!(code, EXIT_OK, "{err}");
            outs.push(out);
        }
        assert_eq!(outs[0], outs[1], "{args:?}");
        assert_eq!(outs[0], outs[2], "{args:?}");
        assert_eq!(run(&["--workers", "3"].iter().chain(args).copied().collect::<Vec<_>>()).1, outs[0]);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["detect", "--gamma", "0", "--m", "1"]).0, EXIT_OK);
    assert_eq!(run(&["detect", "--gamma", "1/0", "--m", "1"]).0, EXIT_USAGE);
    assert_eq!(run(&["detect", "--gamma", "1/-2", "--m", "1"]).0, EXIT_USAGE);
    assert_eq!(run(&["no-such-command"]).0, EXIT_USAGE);
    assert_eq!(run(&["t-poly", "--gamma", "1", "--i", "9"]).0, EXIT_DOMAIN);
    assert_eq!(run(&["n1-family", "--gamma", "1/4"]).0, EXIT_DOMAIN);
    assert_eq!(run(&["--max-height", "10", "search", "--gamma", "0", "--height", "11"]).0, EXIT_USAGE);
    assert_eq!(run(&["--help"]).0, EXIT_OK);
}

#[test]
fn binary_exit_status_and_env_workers() {
    let bin = env!("CARGO_BIN_EXE_quadit");
    let ok = Command::new(bin).args(["verify-map"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    let bad = Command::new(bin).args(["detect", "--gamma", "x", "--m", "1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    assert!(bad.stdout.is_empty());
    let a = Command::new(bin).env("QUADIT_WORKERS", "1").args(["search", "--gamma", "0", "--height", "15"]).output().unwrap();
    let b = Command::new(bin).env("QUADIT_WORKERS", "5").args(["search", "--gamma", "0", "--height", "15"]).output().unwrap();
    assert_eq!(a.status.code(), Some(EXIT_OK));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn rat_flag_parsing() {
    assert_eq!(parse_rat_flag("-7/4").unwrap(), Rat::frac(-7, 4));
    assert_eq!(parse_rat_flag("+6/4").unwrap(), Rat::frac(3, 2));
    assert_eq!(parse_rat_flag("12").unwrap(), Rat::from_i64(12));
    for bad in ["1/0", "1/-2", "", "1.5", "a/b", "1//2"] {
        assert!(parse_rat_flag(bad).is_err(), "{bad}");
    }
}

#[test]
fn cgamma_resolution_and_extract() {
    let env = json(&["cgamma", "--resolve"]);
    let res = &env.result;
    assert_eq!(res["at_plus"], "-1249136");
    assert_eq!(res["at_minus"], "0");
    let ex = json(&["extract", "--gamma", "1", "--m", "-7/3"]);
    let sol = &ex.result["solution"];
    assert_eq!(sol["valid"], true);
    assert_eq!(sol["a3"], "-2");
}
