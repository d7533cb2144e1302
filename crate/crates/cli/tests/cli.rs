use std::process::{Command, Output};

use typeseq_cli::{analyze_doc, render_analyze, EXIT_DOMAIN, EXIT_OK, EXIT_PARSE};
use typeseq_core::{AnalyzeDoc, SuiteReport};

fn typeseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_typeseq")).args(args).output().expect("spawn typeseq")
}

fn code(o: &Output) -> u8 {
    o.status.code().expect("exit code") as u8
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn examples_all_pass() {
    let o = typeseq(&["examples"]);
    assert_eq!(code(&o), EXIT_OK);
    let text = stdout(&o);
    assert!(text.contains("10/10 fixtures pass"), "{text}");
    assert!(text.contains("7/7 non-implications confirmed"));
}

#[test]
fn analyze_reports_the_headline_example() {
    let o = typeseq(&["analyze", "<10,16,79,85>"]);
    assert_eq!(code(&o), EXIT_OK);
    let text = stdout(&o);
    for needle in ["1+3z+2z^2+2z^3+2z^4", "c=124", "e=10 nu=4 rho=21", "c_lambda=84", "lambda_gorenstein=true"] {
        assert!(text.contains(needle), "missing {needle}");
    }
}

#[test]
fn misprinted_generators_give_a_different_ring() {
    let doc = analyze_doc("<10,16,95,99>", "m", Some(&["Thm4.7".to_string()])).unwrap();
    assert_eq!(doc.pair.semigroup.c, 134);
    assert!(!doc.pair.semigroup.class.is_almost_gorenstein);
    assert_eq!(doc.pair.hilbert.rho, 21);
}

#[test]
fn json_round_trips() {
    let o = typeseq(&["analyze", "{0,5,10,11,12,15,16,17,19->}", "m", "--format", "json"]);
    assert_eq!(code(&o), EXIT_OK);
    let doc: AnalyzeDoc = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc.pair.semigroup.generators, [5, 11, 12, 19]);
    assert_eq!(doc.pair.hilbert.nu, 2);
    let again = serde_json::to_string_pretty(&doc).unwrap();
    assert_eq!(again.trim_end(), stdout(&o).trim_end());
}

#[test]
fn text_and_json_carry_the_same_numbers() {
    for (s, e) in [("<6,11,16,20,25>", "m"), ("<5,21,32,48>", "ideal(31,32,40)"), ("<3,4,5>", "m^2")] {
        let doc = analyze_doc(s, e, None).unwrap();
        let text = render_analyze(&doc);
        let p = &doc.pair;
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        let needles = [
            format!("c={} delta={} n={}", p.semigroup.c, p.semigroup.delta, p.semigroup.n),
            format!("type sequence    {}", join(&p.semigroup.type_sequence)),
            format!("H                {}", join(&p.hilbert.hilbert)),
            format!("e={} nu={} rho={}", p.hilbert.e, p.hilbert.nu, p.hilbert.rho),
            format!("c_lambda={} delta_lambda={}", p.blowup.c_lambda, p.blowup.delta_lambda),
            format!("d={} i0={}", p.blowup.d, p.blowup.i0),
            format!("sum={}", p.blowup.gamma_sum),
            p.blowup.lambda.render(),
            p.blowup.lambda_bidual.render(),
            p.blowup.r_colon_lambda.render(),
            p.blowup.power_nu.render(),
            p.semigroup.canonical.render(),
            p.ideal.set.render(),
        ];
        for n in needles {
            assert!(text.contains(&n), "{s} {e}: text lacks {n}");
        }
    }
}

#[test]
fn principal_ideal_is_a_clean_domain_error() {
    let o = typeseq(&["analyze", "<3,5>", "ideal(3)"]);
    assert_eq!(code(&o), EXIT_DOMAIN);
    assert!(String::from_utf8_lossy(&o.stderr).contains("principal"));
    assert!(o.stdout.is_empty());
    let o = typeseq(&["analyze", "<1>"]);
    assert_eq!(code(&o), EXIT_DOMAIN);
}

#[test]
fn malformed_input_is_a_parse_error() {
    for args in [
        &["analyze", "<3,5"][..],
        &["analyze", "<4,6>"],
        &["analyze", "{0,2,5->}"],
        &["analyze", "<3,5>", "q"],
        &["analyze", "<3,5>", "m", "--statements", "Thm99"],
        &["verify", "--max-genus", "x"],
        &["frobnicate"],
    ] {
        assert_eq!(code(&typeseq(args)), EXIT_PARSE, "{args:?}");
    }
    assert_eq!(code(&typeseq(&["--help"])), EXIT_OK);
}

#[test]
fn verify_genus_zero_is_vacuous() {
    let o = typeseq(&["verify", "--max-genus", "0", "--format", "json"]);
    assert_eq!(code(&o), EXIT_OK);
    let r: SuiteReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r.pairs, 0);
    assert!(r.tallies.iter().all(|t| t.checked == 0));
}

#[test]
fn verify_restricted_statements_to_file() {
    let dir = std::env::temp_dir().join(format!("typeseq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = typeseq(&[
        "verify",
        "--max-genus",
        "5",
        "--ideals",
        "all",
        "--statements",
        "Thm4.7,Cor5.2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), EXIT_OK);
    assert!(o.stdout.is_empty());
    let r: SuiteReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let ids: Vec<&str> = r.tallies.iter().map(|t| t.statement_id.as_str()).collect();
    assert_eq!(ids, ["Thm4.7.1", "Thm4.7.2", "Cor5.2"]);
    assert!(r.ok());
    assert_eq!(r.tally("Thm4.7.1").unwrap().checked, r.pairs);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn thread_setting_does_not_change_output() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_typeseq"))
            .args(["verify", "--max-genus", "7"])
            .env("TYPESEQ_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("3"));
}

#[test]
fn enumerate_streams_json_lines() {
    let o = typeseq(&["enumerate", "--max-genus", "4", "--format", "json"]);
    assert_eq!(code(&o), EXIT_OK);
    let rows: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 1 + 1 + 2 + 4 + 7);
    assert!(rows.iter().all(|r| r["genus"].as_i64().unwrap() <= 4));
    let text = stdout(&typeseq(&["enumerate", "--max-genus", "2"]));
    assert_eq!(text.lines().count(), 1 + 4);
    assert!(text.contains("<3,4,5>"));
}
