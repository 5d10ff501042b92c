use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_rotkit");

fn rotkit(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn rotate_bytes() {
    let out = rotkit(&["rotate", "--by", "2"], b"ABCDEF");
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(0), "CDEFAB"));

    let out = rotkit(&["rotate", "--by", "4", "--right"], b"ABCDEF");
    assert_eq!(stdout(&out), "CDEFAB");

    let out = rotkit(&["rotate", "--by", "-2"], b"ABCDEF");
    assert_eq!(stdout(&out), "EFABCD");

    let out = rotkit(&["rotate", "--by", "0"], b"\x00\xffABC");
    assert_eq!(out.stdout, b"\x00\xffABC");
}

#[test]
fn every_algorithm_with_check_and_verify() {
    for algo in ["copy", "copy-native", "reverse", "swap", "swap-rec", "modulo"] {
        let out = rotkit(&["rotate", "--algo", algo, "--by", "4", "--check", "--verify"], b"LMNOPQ");
        assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(0), "PQLMNO"), "{algo}");
    }
}

#[test]
fn rotate_lines() {
    let text = b"one\ntwo\nthree\n";
    let out = rotkit(&["rotate", "--unit", "lines", "--by", "1"], text);
    assert_eq!(stdout(&out), "two\nthree\none\n");

    // the unterminated last line is a unit of its own
    let out = rotkit(&["rotate", "--unit", "lines", "--by", "2"], b"a\r\nb\nc");
    assert_eq!(out.stdout, b"ca\r\nb\n");

    let out = rotkit(&["rotate", "--unit", "lines", "--by", "1", "--right"], text);
    let back = rotkit(&["rotate", "--unit", "lines", "--by", "1"], &out.stdout);
    assert_eq!(back.stdout, text);
}

#[test]
fn check_limit_is_a_usage_error() {
    let data = vec![b'x'; 300];
    let out = rotkit(&["rotate", "--by", "1", "--check"], &data);
    assert_eq!(out.status.code(), Some(1));
    let out = rotkit(&["rotate", "--by", "1", "--check", "--check-limit", "400"], &data);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn decompose_prints_cycles() {
    let out = rotkit(&["decompose", "--n", "6", "--by", "2"], b"");
    let text = stdout(&out);
    assert!(text.contains("g = 2\ntau = 3\n"));
    assert!(text.contains("0 → 4 → 2 → 0\n1 → 5 → 3 → 1\n"));

    let out = rotkit(&["decompose", "--n", "5", "--by", "1"], b"");
    assert_eq!(stdout(&out).lines().filter(|l| l.contains('→')).count(), 1);

    let out = rotkit(&["decompose", "--n", "12", "--by", "8"], b"");
    let cycles: Vec<String> = stdout(&out).lines().filter(|l| l.contains('→')).map(String::from).collect();
    assert_eq!(cycles.len(), 4);
    assert!(cycles.iter().all(|c| c.split(" → ").count() == 4));

    assert_eq!(rotkit(&["decompose", "--n", "6", "--by", "0"], b"").status.code(), Some(1));
    assert_eq!(rotkit(&["decompose", "--n", "1", "--by", "1"], b"").status.code(), Some(1));
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let out = rotkit(&["bench", "--sizes", "2,8", "--csv", path.to_str().unwrap()], b"");
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "algorithm,n,r,elapsed_ns,reads,writes,swaps,aux_peak,depth_max,repetitions");
    assert_eq!(lines.len(), 1 + 5 * (1 + 7));

    let out =
        rotkit(&["bench", "--sizes", "100", "--algos", "modulo,swap-rec", "--rs", "sample:5", "--reps", "3"], b"");
    assert_eq!(stdout(&out).lines().count(), 1 + 2 * 5);

    for bad in [
        &["bench", "--sizes", "1"][..],
        &["bench", "--rs", "sample:x"],
        &["bench", "--algos", "quick"],
        &["bench", "--reps", "0"],
    ] {
        assert_eq!(rotkit(bad, b"").status.code(), Some(1), "{bad:?}");
    }
}

#[test]
fn selftest_reports() {
    let out = rotkit(&["selftest", "--max-n", "16", "--max-len", "0"], b"");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 7);
    assert!(text.starts_with("rev_cat bound=0 cases=1 skipped=0 failures=0 ok\n"));
    assert!(text.lines().all(|l| l.ends_with(" ok")));
}

#[test]
fn exit_codes() {
    assert_eq!(rotkit(&["--version"], b"").status.code(), Some(0));
    assert_eq!(rotkit(&[], b"").status.code(), Some(1));
    assert_eq!(rotkit(&["rotate"], b"").status.code(), Some(1));
    assert_eq!(rotkit(&["rotate", "--by", "x"], b"").status.code(), Some(1));
    let out = rotkit(&["rotate", "--by", "1", "--verify", "--inject-fault"], b"ABC");
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let dir = tempfile::tempdir().unwrap();
    let out = rotkit(&["rotate", "--by", "1", "-o", dir.path().to_str().unwrap()], b"ABC");
    assert_eq!(out.status.code(), Some(3));
}
