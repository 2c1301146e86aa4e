mod common;

use std::io::Write;
use std::process::{Command, Output};

use qflag::cli::{parse_quiver, run, CliError};

use common::*;

fn qflag(args: &[&str], quiver: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qflag"))
        .args(args)
        .arg("-f")
        .arg(quiver_path(quiver))
        .output()
        .expect("run qflag")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn documented_examples() {
    let out = qflag(&["qmult", "s1[3]", "1"], "fl421");
    assert!(out.status.success());
    assert_eq!(stdout(&out), "q1\n");
    assert_eq!(stdout(&qflag(&["mult", "s1[1]", "s1[1]"], "gr42")), "s1[2] + s1[1,1]\n");
    assert_eq!(stdout(&qflag(&["verify", "--quantum", "--all"], "fl421")), "PASS 78/78\n");
}

#[test]
fn info_and_basis() {
    let info = stdout(&qflag(&["info"], "fl421"));
    assert!(info.contains("ranks: 2 1\n"));
    assert!(info.contains("fano: true\n"));
    assert!(info.contains("dimension: 5\n"));
    assert!(info.contains("basis: 12\n"));
    let basis = stdout(&qflag(&["basis"], "gr42"));
    assert_eq!(basis, "1\ns1[1]\ns1[2]\ns1[1,1]\ns1[2,1]\ns1[2,2]\n");
}

#[test]
fn reduce_integrate_and_pair() {
    assert_eq!(stdout(&qflag(&["reduce", "s1[3]"], "fl421")), "0\n");
    assert_eq!(stdout(&qflag(&["reduce", "--quantum", "s1[3]"], "fl421")), "q1\n");
    assert_eq!(stdout(&qflag(&["integrate", "s1[2,2]"], "gr42")), "1\n");
    assert_eq!(stdout(&qflag(&["integrate", "s1[1] s1[2,1]"], "gr42")), "1\n");
    assert_eq!(stdout(&qflag(&["integrate", "s1[1]"], "gr42")), "0\n");
    let pair = stdout(&qflag(&["pair"], "p3"));
    assert_eq!(pair, "0 0 0 1\n0 0 1 0\n0 1 0 0\n1 0 0 0\n");
}

#[test]
fn print_orders() {
    let deg = stdout(&qflag(&["reduce", "--quantum", "s2[2]"], "fl421"));
    let lex = stdout(&qflag(&["reduce", "--quantum", "--order", "lex", "s2[2]"], "fl421"));
    assert_eq!(deg, "-s1[1,1] + s1[1] s2[1] + q2\n");
    assert_eq!(lex, "-s1[1,1] + s1[1] s2[1] + q2\n");
    let deg = stdout(&qflag(&["qmult", "s1[2]", "s1[2]"], "fl421"));
    assert_eq!(deg, "s1[2,2] + q1 s1[1]\n");
}

#[test]
fn printed_output_reparses() {
    let first = stdout(&qflag(&["qmult", "s1[2,1]", "s1[2] s2[1]"], "fl421"));
    let again = stdout(&qflag(&["reduce", "--quantum", first.trim()], "fl421"));
    assert_eq!(first, again);
}

#[test]
fn verify_single_products() {
    assert_eq!(stdout(&qflag(&["verify", "s1[1]", "s1[1]"], "gr42")), "PASS 1/1\n");
    assert_eq!(stdout(&qflag(&["verify", "--all"], "toric")), "PASS 45/45\n");
    let out = qflag(&["verify", "s1[1]"], "gr42");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn mirror_emission() {
    let text = stdout(&qflag(&["mirror"], "p3"));
    assert!(text.contains("W =\n1 * x[1]^1\n"));
    assert!(text.contains("subject to: x[1]^1 * x[2]^1 * x[3]^1 * x[4]^1 = q[1]^1\n"));
    assert!(text.contains("x[1] = 1 * x[2]^-1 * x[3]^-1 * x[4]^-1 * q[1]^1\n"));
}

#[test]
fn exit_codes() {
    let out = qflag(&["mult", "s1[1", "1"], "gr42");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("column 5"));

    let out = qflag(&["mult", "s3[1]", "1"], "gr42");
    assert_eq!(out.status.code(), Some(2));

    let out = qflag(&["mult", "q1", "1"], "gr42");
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(env!("CARGO_BIN_EXE_qflag")).arg("info").output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = Command::new(env!("CARGO_BIN_EXE_qflag")).arg("--help").output().unwrap();
    assert!(out.status.success());

    assert_eq!(CliError::VerifyFailed(String::new()).exit_code(), 3);
}

#[test]
fn non_fano_quantum_is_a_validation_error() {
    let dir = std::env::temp_dir().join(format!("qflag-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("nonfano.quiver");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "vertices = 2\ndims = [1, 4]\narrows = [[0, 1, 2], [1, 2, 5]]").unwrap();
    let path = path.to_str().unwrap();
    let err = run(["qflag", "qmult", "-f", path, "1", "1"]).unwrap_err();
    assert_eq!(err.exit_code(), 2);
    assert!(run(["qflag", "mult", "-f", path, "1", "1"]).is_ok());
    assert!(run(["qflag", "info", "-f", path]).unwrap().contains("fano: false"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn quiver_file_diagnostics() {
    let ok = parse_quiver("vertices = 2\ndims = [2, 1]\narrows = [[0,1,4],[1,2,1]]\n").unwrap();
    assert_eq!(ok.basis_count(), 12);

    let err = parse_quiver("vertices = 2\ndims = [2, 1]\narrows = [[0,1,4],[2,1,1]]\n").unwrap_err();
    assert!(matches!(&err, CliError::Validation(m) if m.contains("arrow with i >= j")), "{err:?}");

    let err = parse_quiver("vertices = 1\ndims = [0]\narrows = [[0,1,4]]\n").unwrap_err();
    assert!(matches!(&err, CliError::Validation(m) if m.contains("positive dimension required")), "{err:?}");

    let err = parse_quiver("vertices = 1\ndims = [2]\narrows = [[0,1,4]]\ncolour = 1\n").unwrap_err();
    assert!(matches!(&err, CliError::Usage(m) if m.contains("line 4")), "{err:?}");

    let err = parse_quiver("vertices = 1\ndims = [2\n").unwrap_err();
    assert!(matches!(&err, CliError::Usage(m) if m.contains("line")), "{err:?}");

    let err = parse_quiver("vertices = 2\ndims = [2]\narrows = [[0,1,4]]\n").unwrap_err();
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn repeated_runs_are_identical() {
    for args in [&["verify", "--all"][..], &["basis"], &["mirror"], &["pair"]] {
        let a = qflag(args, "sinks");
        let b = qflag(args, "sinks");
        assert_eq!(a.stdout, b.stdout);
    }
}
