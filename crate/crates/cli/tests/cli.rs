use std::io::Write;
use std::process::{Command, Output, Stdio};

fn polystab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polystab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ideal_file(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("polystab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

const HEIGHT_ONE: &str = "x1^3*x2*x3, x1^2*x2^2*x3, x1^3*x2^2";
const COUNTEREXAMPLE: &str = "x1*x2*x3, x2^2*x3, x2*x3^2, x1*x2*x4, x2^2*x4, x2*x4^2, \
                              x1*x3*x4, x3^2*x4, x3*x4^2, x2*x3*x4";

#[test]
fn report_from_file() {
    let path = ideal_file("height_one.ideal", HEIGHT_ONE);
    let o = polystab(&["report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("astab = 2\n"), "{out}");
    assert!(out.contains("dstab = 2\n"), "{out}");
    assert!(String::from_utf8_lossy(&o.stderr).contains("inferred"));
}

#[test]
fn counterexample_report() {
    let o = polystab(&["report", "-e", COUNTEREXAMPLE]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.contains("astab = 2\n") && out.contains("dstab = 1\n"),
        "{out}"
    );
    assert!(out.contains("astab != dstab"));
}

#[test]
fn json_report_is_deterministic() {
    let a = polystab(&["report", "--format", "json", "-e", COUNTEREXAMPLE]);
    let b = polystab(&["report", "--format", "json", "-e", COUNTEREXAMPLE]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.contains("\"astab\": 2") && out.contains("\"dstab\": 1"));
    assert!(out.contains("\"k_max\": 3"));
    assert!(out.contains("\"version\""));
}

#[test]
fn exit_codes() {
    let path = ideal_file("nonpoly.ideal", "x1^2, x2^2");
    assert_eq!(
        polystab(&["astab", path.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(
        polystab(&["dstab", "-e", "x1^2, x2^2"]).status.code(),
        Some(2)
    );
    assert_eq!(polystab(&["astab", "-e", "x0"]).status.code(), Some(1));
    assert_eq!(
        polystab(&["info", "/nonexistent/ideal"]).status.code(),
        Some(1)
    );
    assert_eq!(polystab(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(
        polystab(&["depth", "-e", "x1*x2, x3*x4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        polystab(&["ass", "-e", "1", "--vars", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(polystab(&["--help"]).status.code(), Some(0));
}

#[test]
fn stdin_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_polystab"))
        .args(["astab", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"x1*x2, x1*x3,\nx2*x3\n")
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "astab = 2\n");
}

#[test]
fn small_commands() {
    let o = polystab(&[
        "ass",
        "-e",
        "x1*x2, x1*x3, x2*x3",
        "--power",
        "2",
        "--method",
        "box",
    ]);
    assert_eq!(
        stdout(&o),
        "Ass(I^2) = {(x1,x2), (x1,x3), (x2,x3), (x1,x2,x3)}\n"
    );
    let o = polystab(&["depth", "-e", "x1 x2", "--vars", "4"]);
    assert!(stdout(&o).starts_with("depth R/I^1 = 3\n"));
    assert!(o.stderr.is_empty());
    let o = polystab(&["decompose", "-e", "x1*x2"]);
    assert_eq!(stdout(&o), "(x1)\n(x2)\nAss(I^1) = {(x1), (x2)}\n");
    let o = polystab(&[
        "veronese", "--vars", "3", "--degree", "2", "--caps", "1,1,1",
    ]);
    assert_eq!(stdout(&o), "x1*x2, x1*x3, x2*x3\n");
    let o = polystab(&["transversal", "--vars", "4", "x1,x2", "x3,x4"]);
    assert_eq!(stdout(&o), "x1*x3, x1*x4, x2*x3, x2*x4\n");
    let o = polystab(&["graph", "-e", "x1*x2*x3, x1*x2*x4, x1*x3*x4, x2*x3*x4"]);
    assert!(stdout(&o).contains("ℓ = 4\n"));
    let o = polystab(&["info", "-e", COUNTEREXAMPLE]);
    let out = stdout(&o);
    assert!(
        out.contains("polymatroidal: yes") && out.contains("matroidal: no"),
        "{out}"
    );
}

#[test]
fn hunt_finds_the_counterexample() {
    let o = polystab(&[
        "hunt",
        "--vars",
        "4",
        "--degree",
        "3",
        "--cap",
        "2",
        "--exhaustive",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.contains(&format!(
            "astab = 2, dstab = 1: ({})",
            COUNTEREXAMPLE_SORTED
        )),
        "{out}"
    );
    let o = polystab(&[
        "hunt",
        "--vars",
        "5",
        "--degree",
        "3",
        "--cap",
        "1",
        "--exhaustive",
    ]);
    assert!(stdout(&o).contains("; 0 with astab != dstab"));
    let a = polystab(&[
        "hunt",
        "--vars",
        "4",
        "--degree",
        "3",
        "--cap",
        "2",
        "--samples",
        "200",
        "--seed",
        "3",
    ]);
    let b = polystab(&[
        "hunt",
        "--vars",
        "4",
        "--degree",
        "3",
        "--cap",
        "2",
        "--samples",
        "200",
        "--seed",
        "3",
    ]);
    assert_eq!(a.stdout, b.stdout);
    let o = polystab(&[
        "hunt",
        "--vars",
        "5",
        "--degree",
        "3",
        "--cap",
        "3",
        "--exhaustive",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

const COUNTEREXAMPLE_SORTED: &str = "x1*x2*x3, x1*x2*x4, x1*x3*x4, x2^2*x3, x2^2*x4, x2*x3^2, \
                                     x2*x3*x4, x2*x4^2, x3^2*x4, x3*x4^2";

#[test]
fn verify_paper_passes() {
    let o = polystab(&["verify-paper"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(!out.contains("FAIL"));
    assert!(out.contains("counterexample family, n = 5: astab = 3, dstab = 1"));
}
