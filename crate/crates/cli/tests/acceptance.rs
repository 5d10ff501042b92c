//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
//!
//! Expected values come from the local oracles below, never from the library
//! functions under test.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rotkit::bench::{linearity_ratio, verify_counters, BenchRecord};
use rotkit::probe::{Boundary, LoopState, Probe};
use rotkit::verify::{
    check_lemma_invert_mp, check_lemma_rev_cat, check_lemma_rot_swap, check_rot_pointwise, run_checked,
};
use rotkit::{Algorithm, Counters};

const BIN: &str = env!("CARGO_BIN_EXE_rotkit");

type Outcome = Result<String, String>;

type Criterion = (&'static str, fn() -> Outcome);

/// Name, arguments, standard input and expected exit code.
type ExitCase<'a> = (&'a str, Vec<&'a str>, Option<&'a [u8]>, i32);

fn rotated<T: Clone>(seq: &[T], r: usize) -> Vec<T> {
    seq.iter().cycle().skip(r).take(seq.len()).cloned().collect()
}

fn euclid(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok && failures.len() < 5 {
        failures.push(what());
    }
}

fn verdict(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Ok(summary)
    } else {
        Err(failures.join("; "))
    }
}

fn within(elapsed: Duration, budget_s: u64, summary: String) -> Outcome {
    if elapsed <= Duration::from_secs(budget_s) {
        Ok(format!("{summary} in {:.2}s", elapsed.as_secs_f64()))
    } else {
        Err(format!("{summary} but took {:.2}s (budget {budget_s}s)", elapsed.as_secs_f64()))
    }
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0u64;
    for algorithm in Algorithm::ALL {
        for n in 0..=64usize {
            let seq: Vec<u16> = (0..n as u16).collect();
            for r in 0..n.max(1) {
                let mut buf = seq.clone();
                let result = algorithm.apply(&mut buf, r, &mut Counters::default());
                cases += 1;
                check(&mut failures, result.is_ok() && buf == rotated(&seq, r), || format!("{algorithm} n={n} r={r}"));
            }
        }
    }
    verdict(failures, String::new())?;
    within(start.elapsed(), 10, format!("{cases} cases, 0 mismatches"))
}

fn swap_counts() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0u64;
    for algorithm in [Algorithm::SwapIterative, Algorithm::SwapRecursive] {
        for n in 2..=256usize {
            let seq: Vec<u32> = (0..n as u32).collect();
            for r in 1..n {
                let mut buf = seq.clone();
                let mut c = Counters::default();
                algorithm.apply(&mut buf, r, &mut c).expect("valid amount");
                cases += 1;
                let want = (n - euclid(r, n - r)) as u64;
                check(&mut failures, c.swaps == want, || {
                    format!("{algorithm} n={n} r={r}: swaps {} != {want}", c.swaps)
                });
            }
        }
    }
    verdict(failures, String::new())?;
    within(start.elapsed(), 30, format!("{cases} cases exact"))
}

#[derive(Default)]
struct LoopCounter {
    outer: u64,
    inner_per_outer: Vec<u64>,
}

impl<T> Probe<T> for LoopCounter {
    fn observe(&mut self, at: Boundary, state: LoopState<'_, T>) {
        match (at, state) {
            (Boundary::Enter, LoopState::ModuloOuter { .. }) => self.inner_per_outer.push(0),
            (Boundary::Step, LoopState::ModuloOuter { .. }) => {
                self.outer += 1;
                self.inner_per_outer.push(0);
            }
            (_, LoopState::ModuloInner { .. }) => *self.inner_per_outer.last_mut().unwrap() += 1,
            _ => {}
        }
    }
}

fn modulo_structure() -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0u64;
    for n in 2..=256usize {
        let seq: Vec<u32> = (0..n as u32).collect();
        for r in 1..n {
            let mut buf = seq.clone();
            let mut c = Counters::default();
            let mut probe = LoopCounter::default();
            Algorithm::Modulo.apply_probed(&mut buf, r, &mut c, &mut probe).expect("valid amount");
            probe.inner_per_outer.pop(); // opened by the final outer step, never entered
            cases += 1;
            let g = euclid(n, n - r);
            let tau = n / g;
            let ok = probe.outer == g as u64
                && probe.inner_per_outer.len() == g
                && probe.inner_per_outer.iter().all(|&k| k == tau as u64)
                && c.writes == n as u64
                && buf == rotated(&seq, r);
            check(&mut failures, ok, || {
                format!("n={n} r={r}: outer {} inner {:?} writes {}", probe.outer, probe.inner_per_outer, c.writes)
            });
        }
    }
    verdict(failures, format!("{cases} cases exact"))
}

fn lemma_suite() -> Outcome {
    let start = Instant::now();
    let (left, right) = check_lemma_rot_swap(9);
    let reports = [check_lemma_rev_cat(8), left, right, check_lemma_invert_mp(128), check_rot_pointwise(64)];
    let failures: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| format!("{r:#}")).collect();
    let cases: u64 = reports.iter().map(|r| r.cases).sum();
    verdict(failures, String::new())?;
    within(start.elapsed(), 60, format!("{} reports, {cases} cases, 0 failures", reports.len()))
}

fn invariant_suite() -> Outcome {
    let mut failures = Vec::new();
    let mut runs = 0u64;
    for algorithm in Algorithm::ALL {
        for n in 2..=48usize {
            for r in 1..n {
                let mut buf: Vec<u32> = (0..n as u32).collect();
                runs += 1;
                let result = run_checked(algorithm, &mut buf, r);
                check(&mut failures, result.is_ok(), || format!("{algorithm} n={n} r={r}: {}", result.unwrap_err()));
            }
        }
    }
    verdict(failures, format!("{runs} checked runs, 0 violations"))
}

fn space_profile() -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0u64;
    for algorithm in Algorithm::ALL {
        for n in 2..=64usize {
            for r in 1..n {
                let mut buf: Vec<u8> = vec![0; n];
                let mut c = Counters::default();
                algorithm.apply(&mut buf, r, &mut c).expect("valid amount");
                let want = match algorithm {
                    Algorithm::Copy => n,
                    Algorithm::CopyNative => r.min(n - r),
                    _ => 1,
                } as u64;
                cases += 1;
                check(&mut failures, c.aux_peak == want, || {
                    format!("{algorithm} n={n} r={r}: aux_peak {} != {want}", c.aux_peak)
                });
            }
        }
    }
    verdict(failures, format!("{cases} cases exact"))
}

fn parse_records(csv: &str) -> Result<Vec<BenchRecord>, String> {
    let mut lines = csv.lines();
    if lines.next() != Some("algorithm,n,r,elapsed_ns,reads,writes,swaps,aux_peak,depth_max,repetitions") {
        return Err("unexpected CSV header".into());
    }
    lines
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            let num = |i: usize| f.get(i).and_then(|v| v.parse::<u64>().ok()).ok_or(format!("bad row {line}"));
            Ok(BenchRecord {
                algorithm: f[0].parse().map_err(|_| format!("bad algorithm in {line}"))?,
                n: num(1)? as usize,
                r: num(2)? as usize,
                elapsed_ns: num(3)?,
                reads: num(4)?,
                writes: num(5)?,
                swaps: num(6)?,
                aux_peak: num(7)?,
                depth_max: num(8)?,
                repetitions: num(9)? as usize,
            })
        })
        .collect()
}

fn bench_trends() -> Outcome {
    let out = run(&["bench", "--sizes", "3000", "--rs", "all"], None);
    if out.status.code() != Some(0) {
        return Err(format!("bench exited with {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    let records = parse_records(&String::from_utf8_lossy(&out.stdout))?;
    if records.len() != 5 * 2999 {
        return Err(format!("expected {} rows, got {}", 5 * 2999, records.len()));
    }
    if let Err(d) = verify_counters(&records) {
        return Err(format!("{} counter discrepancies, first: {}", d.len(), d[0]));
    }
    // the library's own identity check is cross-checked against local closed forms
    let mut failures = Vec::new();
    for rec in &records {
        let (n, r) = (rec.n, rec.r);
        let ok = match rec.algorithm {
            Algorithm::SwapIterative => rec.swaps == (n - euclid(r, n - r)) as u64,
            Algorithm::Modulo => rec.writes == n as u64,
            Algorithm::Reverse => rec.swaps == (r.div_ceil(2) + (n - r).div_ceil(2) + n.div_ceil(2)) as u64,
            Algorithm::Copy => rec.aux_peak == n as u64,
            Algorithm::CopyNative => rec.aux_peak == r.min(n - r) as u64,
            Algorithm::SwapRecursive => false,
        };
        check(&mut failures, ok && rec.elapsed_ns > 0, || format!("{} n={n} r={r}", rec.algorithm));
    }
    verdict(failures, String::new())?;

    let mut ratios = Vec::new();
    for algorithm in [Algorithm::Reverse, Algorithm::SwapIterative, Algorithm::Modulo] {
        let ratio = linearity_ratio(algorithm, 100_000, 31, 5, 7).map_err(|e| e.to_string())?;
        ratios.push(format!("{algorithm} {ratio:.2}"));
        if !(1.3..=3.5).contains(&ratio) {
            return Err(format!("time ratio 2e5/1e5 outside [1.3, 3.5]: {}", ratios.join(", ")));
        }
    }
    Ok(format!("{} rows verified; time ratio 2e5/1e5: {}", records.len(), ratios.join(", ")))
}

fn run(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn rotkit");
    let mut pipe = child.stdin.take().expect("stdin");
    pipe.write_all(stdin.unwrap_or_default()).expect("write stdin");
    drop(pipe);
    child.wait_with_output().expect("wait for rotkit")
}

fn path_arg(p: &Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}

fn cli_round_trip() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let algos = ["copy", "copy-native", "reverse", "swap", "swap-rec", "modulo"];
    let mut failures = Vec::new();
    for i in 0..100 {
        let size = match i {
            0 => 0,
            1 => 1,
            2 => 100_000,
            _ => rng.random_range(0..=100_000usize),
        };
        let data: Vec<u8> = (0..size).map(|_| rng.random()).collect();
        let bound = 2 * size as i64;
        let by = rng.random_range(-bound..=bound);
        let algo = algos[rng.random_range(0..algos.len())];
        let (input, mid, back) = (dir.path().join("in"), dir.path().join("mid"), dir.path().join("back"));
        std::fs::write(&input, &data).map_err(|e| e.to_string())?;
        let by_arg = by.to_string();
        let first = run(&["rotate", "--algo", algo, "--by", &by_arg, "-o", path_arg(&mid), path_arg(&input)], None);
        let second =
            run(&["rotate", "--algo", algo, "--by", &by_arg, "--right", "-o", path_arg(&back), path_arg(&mid)], None);
        let restored = std::fs::read(&back).unwrap_or_default();
        let shifted = std::fs::read(&mid).unwrap_or_default();
        let r = if size == 0 { 0 } else { by.rem_euclid(size as i64) as usize };
        let ok = first.status.code() == Some(0)
            && second.status.code() == Some(0)
            && shifted == rotated(&data, r)
            && restored == data;
        check(&mut failures, ok, || format!("file {i}: size {size}, --by {by}, --algo {algo}"));
    }

    let missing = dir.path().join("missing");
    let contract: [ExitCase; 7] = [
        ("success", vec!["rotate", "--by", "2"], Some(b"ABCDEF"), 0),
        ("help", vec!["--help"], None, 0),
        ("unknown flag", vec!["rotate", "--by", "1", "--bogus"], None, 1),
        ("unknown algorithm", vec!["rotate", "--algo", "bubble", "--by", "1"], None, 1),
        ("identity decomposition", vec!["decompose", "--n", "6", "--by", "6"], None, 1),
        ("verification failure", vec!["rotate", "--by", "1", "--verify", "--inject-fault"], Some(b"ABCDEF"), 2),
        ("missing input", vec!["rotate", "--by", "1", path_arg(&missing)], None, 3),
    ];
    for (what, args, stdin, code) in contract {
        let out = run(&args, stdin);
        check(&mut failures, out.status.code() == Some(code), || {
            format!("{what}: exit {:?}, expected {code}", out.status.code())
        });
    }
    verdict(failures, "100 files restored byte-identically; exit codes 0/1/2/3 as specified".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 oracle equivalence, n <= 64", oracle_equivalence),
        ("2 swap-count identity, n <= 256", swap_counts),
        ("3 modular-visit structure, n <= 256", modulo_structure),
        ("4 lemma suite", lemma_suite),
        ("5 invariant suite, n <= 48", invariant_suite),
        ("6 space profile, n <= 64", space_profile),
        ("7 benchmark trends", bench_trends),
        ("8 CLI round-trip and exit codes", cli_round_trip),
    ];
    let mut failed = 0;
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
