use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn phopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_phopf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn example(dir: &Path, name: &str, extra: &[&str]) {
    let d = dir.to_str().unwrap();
    let mut args = vec!["example", name, "-o", d];
    args.extend_from_slice(extra);
    let o = phopf(&args);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

fn read(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn sweedler_bimodule_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    example(dir.path(), "sweedler-bimodule-k", &["--r", "2", "--s", "3"]);
    let hopf = dir.path().join("hopf.json");
    let bim = dir.path().join("bimodule.json");
    assert_eq!(code(&phopf(&["check", "hopf", hopf.to_str().unwrap()])), 0);
    let o = phopf(&["check", "bimodule", bim.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("PASS"));

    let o = phopf(&["globalize", "bimodule", bim.to_str().unwrap(), "-o", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("dim B = 4"));
    assert!(stdout(&o).contains("M* dim = 0"));
    let g = read(&dir.path().join("globalization.json"));
    assert_eq!(g["b_basis"].as_array().unwrap().len(), 4);
    assert_eq!(g["ambient_dim"], 16);
    assert!(g["certificate"].as_object().unwrap().values().all(|v| v == true));
}

#[test]
fn mutated_action_constant_fails_the_check() {
    let dir = tempfile::tempdir().unwrap();
    example(dir.path(), "sweedler-bimodule-k", &[]);
    let bim = dir.path().join("bimodule.json");
    let mut v = read(&bim);
    // make xg⇀1 equal to x⇀1
    let map = v["left"]["map"].as_array_mut().unwrap();
    let x = map.iter().find(|e| e[0] == 2).unwrap()[3].clone();
    for e in map.iter_mut() {
        if e[0] == 3 {
            e[3] = x.clone();
        }
    }
    fs::write(&bim, serde_json::to_string(&v).unwrap()).unwrap();
    let o = phopf(&["check", "bimodule", bim.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("LPMA"), "{}", stdout(&o));

    let o = phopf(&["--format", "json", "check", "bimodule", bim.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["passed"], false);
    assert!(!r["failures"].as_array().unwrap().is_empty());
}

#[test]
fn malformed_and_missing_input_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ not json").unwrap();
    assert_eq!(code(&phopf(&["check", "hopf", bad.to_str().unwrap()])), 2);
    let missing = dir.path().join("missing.json");
    assert_eq!(code(&phopf(&["check", "algebra", missing.to_str().unwrap()])), 2);
    let o = phopf(&["--format", "json", "check", "hopf", bad.to_str().unwrap()]);
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["exit_code"], 2);
}

#[test]
fn bicomodule_globalization_reports_psi() {
    let dir = tempfile::tempdir().unwrap();
    example(dir.path(), "sweedler-bicomodule-k", &["--t", "7", "--u", "3"]);
    let bic = dir.path().join("bicomodule.json");
    assert_eq!(code(&phopf(&["check", "bicomodule", bic.to_str().unwrap()])), 0);
    let o = phopf(&["--format", "json", "globalize", "bicomodule", bic.to_str().unwrap(), "-o", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let g: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(g["kind"], "bicomodule");
    let psi = g["psi"].as_object().unwrap();
    assert_eq!(psi.len(), 6);
    assert!(psi.values().all(|v| v == true));
}

#[test]
fn smash_of_the_one_dimensional_examples() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    example(&a, "sweedler-bimodule-k", &["--r", "2", "--s", "1"]);
    example(&b, "sweedler-bicomodule-k", &["--t", "5", "--u", "-1/2"]);
    let out = dir.path().to_str().unwrap();
    let o = phopf(&["smash", a.join("bimodule.json").to_str().unwrap(), b.join("bicomodule.json").to_str().unwrap(), "-o", out]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let s = read(&dir.path().join("smash.json"));
    assert_eq!(s["certificate"]["associative"], true);
    assert_eq!(s["certificate"]["unit_pair"], "nilpotent");
    assert!(s["certificate"]["idempotents_found"].as_array().unwrap().is_empty());
}

#[test]
fn smash_with_the_regular_bicomodule() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    example(&a, "sweedler-bimodule-k", &[]);
    example(&b, "regular-bicomodule", &[]);
    let out = dir.path().to_str().unwrap();
    let o = phopf(&["smash", a.join("bimodule.json").to_str().unwrap(), b.join("bicomodule.json").to_str().unwrap(), "-o", out]);
    assert_eq!(code(&o), 0);
    let s = read(&dir.path().join("smash.json"));
    assert_eq!(s["algebra"]["basis"].as_array().unwrap().len(), 4);
    let found = s["certificate"]["idempotents_found"].as_array().unwrap();
    assert!(found.iter().any(|f| f["u"] == "1" && f["route"] == "(3)+(4)"), "{found:?}");
    assert_eq!(s["certificate"]["unit_pair"], "idempotent");

    // a bicomodule over kZ2 cannot be paired with an H4 bimodule
    let c = dir.path().join("c");
    example(&c, "regular-bicomodule", &["--group", "z2"]);
    let o = phopf(&["smash", a.join("bimodule.json").to_str().unwrap(), c.join("bicomodule.json").to_str().unwrap(), "-o", out]);
    assert_eq!(code(&o), 1);
}

#[test]
fn group_examples() {
    let dir = tempfile::tempdir().unwrap();
    example(dir.path(), "en-kg", &["--group", "z4", "--N", "0,2"]);
    let act = dir.path().join("action.json");
    let o = phopf(&["check", "action", act.to_str().unwrap()]);
    assert_eq!(code(&o), 0);

    let z2 = dir.path().join("z2");
    example(&z2, "z2-partial-group", &[]);
    assert_eq!(code(&phopf(&["check", "group-action", z2.join("group_action.json").to_str().unwrap()])), 0);
    assert_eq!(code(&phopf(&["check", "action", z2.join("action.json").to_str().unwrap(), "--symmetric"])), 0);

    let d = dir.path().join("dual");
    example(&d, "dual-group-action", &["--group", "s3", "--field", "gf5"]);
    assert_eq!(code(&phopf(&["check", "action", d.join("action.json").to_str().unwrap()])), 0);
    assert_eq!(read(&d.join("hopf.json"))["field"]["kind"], "prime_field");
}

#[test]
fn bad_example_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    // 1/2 does not exist in characteristic 2
    assert_eq!(code(&phopf(&["example", "sweedler-bicomodule-k", "--field", "gf2", "-o", d])), 1);
    assert_ne!(code(&phopf(&["example", "no-such-example", "-o", d])), 0);
    assert_ne!(code(&phopf(&["example", "en-kg", "--N", "0,1", "-o", d])), 0);
}
