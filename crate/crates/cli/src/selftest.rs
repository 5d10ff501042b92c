use rotkit::verify::{
    check_lemma_invert_mp, check_lemma_rev_cat, check_lemma_rot_swap, check_rot_pointwise, check_wrap_bounds,
    registered_invariants, run_checked, LemmaReport,
};
use rotkit::Algorithm;

use crate::Failure;

pub const POINTWISE_N: usize = 64;
pub const INVERT_N: usize = 128;
pub const WRAP_N: usize = 512;
pub const CHECKED_N: usize = 48;
pub const REV_CAT_LEN: usize = 8;
pub const ROT_SWAP_LEN: usize = 9;

pub fn run(max_n: Option<usize>, max_len: Option<usize>) -> Result<(), Failure> {
    let bound = |default: usize| max_n.unwrap_or(default);
    let len = |default: usize| max_len.unwrap_or(default);

    let (left, right) = check_lemma_rot_swap(len(ROT_SWAP_LEN));
    let reports: Vec<LemmaReport> = vec![
        check_lemma_rev_cat(len(REV_CAT_LEN)),
        left,
        right,
        check_lemma_invert_mp(bound(INVERT_N)),
        check_rot_pointwise(bound(POINTWISE_N)),
        check_wrap_bounds(bound(WRAP_N)),
    ];
    let mut failed = 0;
    for report in &reports {
        println!("{report:#}");
        failed += report.failures.len();
    }

    let checked_n = bound(CHECKED_N);
    let (mut runs, mut violations) = (0u64, 0u64);
    for algorithm in Algorithm::ALL {
        for n in 1..=checked_n {
            for r in 1..n {
                let mut buf: Vec<u32> = (0..n as u32).collect();
                runs += 1;
                if let Err(err) = run_checked(algorithm, &mut buf, r) {
                    violations += 1;
                    if violations <= 10 {
                        eprintln!("  {algorithm} n={n} r={r}: {err}");
                    }
                }
            }
        }
    }
    println!(
        "invariants bound={checked_n} registered={} runs={runs} violations={violations} {}",
        registered_invariants().len(),
        if violations == 0 { "ok" } else { "FAIL" }
    );

    if failed == 0 && violations == 0 {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{failed} lemma failures, {violations} invariant violations")))
    }
}
