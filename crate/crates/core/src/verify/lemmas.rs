use std::fmt;

use crate::modular::{dest_index, invert_mp, src_index, wrap};

use super::oracle::{concat, oracle_rotate, reversed};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LemmaId {
    /// `rev(S·T) = rev(T)·rev(S)`.
    RevCat,
    /// `rot(X·Y·Z, d) = rot(Z·Y, d)·X` for `|X| = |Z| = d`.
    RotSwapLeft,
    /// `rot(X·Y·Z, N − d) = Z·rot(Y·X, N − 2d)` for `|X| = |Z| = d`.
    RotSwapRight,
    /// Every index lies on one of the `gcd` cycles.
    InvertMp,
    /// Element-wise forward and inverse rotation index maps.
    RotPointwise,
    /// `0 <= wrap(x, y) < y`.
    WrapBounds,
}

impl LemmaId {
    pub fn name(self) -> &'static str {
        match self {
            LemmaId::RevCat => "rev_cat",
            LemmaId::RotSwapLeft => "rot_swap_left",
            LemmaId::RotSwapRight => "rot_swap_right",
            LemmaId::InvertMp => "invert_mp",
            LemmaId::RotPointwise => "rot_pointwise",
            LemmaId::WrapBounds => "wrap_bounds",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One falsifying instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of enumerating a lemma over all instances up to `domain_bound`.
///
/// `skipped` counts instances that would need a rotation by the full
/// sequence length, where rotation is undefined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub domain_bound: usize,
    pub cases: u64,
    pub skipped: u64,
    pub failures: Vec<Failure>,
}

impl LemmaReport {
    fn new(lemma: LemmaId, domain_bound: usize) -> Self {
        LemmaReport { lemma, domain_bound, cases: 0, skipped: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect<T: PartialEq + fmt::Debug>(&mut self, input: impl FnOnce() -> String, expected: T, actual: T) {
        self.cases += 1;
        if expected != actual {
            self.failures.push(Failure {
                input: input(),
                expected: format!("{expected:?}"),
                actual: format!("{actual:?}"),
            });
        }
    }
}

/// Single summary line: `<lemma> bound=<b> cases=<c> skipped=<s> failures=<f> <ok|FAIL>`.
/// The alternate form (`{:#}`) appends one indented line per failure.
impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} bound={} cases={} skipped={} failures={} {}",
            self.lemma,
            self.domain_bound,
            self.cases,
            self.skipped,
            self.failures.len(),
            if self.passed() { "ok" } else { "FAIL" }
        )?;
        if f.alternate() {
            for failure in &self.failures {
                write!(f, "\n  {}: expected {}, got {}", failure.input, failure.expected, failure.actual)?;
            }
        }
        Ok(())
    }
}

fn distinct(from: usize, len: usize) -> Vec<u32> {
    (from as u32..(from + len) as u32).collect()
}

/// For every `1 <= n <= max_n`, `0 <= r < n`, `0 <= k < n`:
/// `rot(S, r)[k] = S[src_index(k)]` and `S[k] = rot(S, r)[dest_index(k)]`.
pub fn check_rot_pointwise(max_n: usize) -> LemmaReport {
    let mut report = LemmaReport::new(LemmaId::RotPointwise, max_n);
    for n in 1..=max_n {
        let seq = distinct(0, n);
        for r in 0..n {
            let rotated = oracle_rotate(&seq, r as i64);
            for k in 0..n {
                let src = src_index(k, n, r).expect("k, r < n");
                let dst = dest_index(k, n, r).expect("k, r < n");
                report.expect(|| format!("n={n} r={r} k={k}"), (rotated[k], seq[k]), (seq[src], rotated[dst]));
            }
        }
    }
    report
}

/// `rev(S·T) = rev(T)·rev(S)` for all `|S|, |T| <= max_len`.
pub fn check_lemma_rev_cat(max_len: usize) -> LemmaReport {
    let mut report = LemmaReport::new(LemmaId::RevCat, max_len);
    for s_len in 0..=max_len {
        for t_len in 0..=max_len {
            let s = distinct(0, s_len);
            let t = distinct(s_len, t_len);
            report.expect(
                || format!("|S|={s_len} |T|={t_len}"),
                concat(&reversed(&t), &reversed(&s)),
                reversed(&concat(&s, &t)),
            );
        }
    }
    report
}

/// Both block-swap rotation identities for every split `X·Y·Z` of length
/// `N <= max_len` with `|X| = |Z| = d >= 1`.
///
/// The left identity needs `rot(Z·Y, d)`, which is undefined when `Y` is
/// empty; those instances are counted as skipped.
pub fn check_lemma_rot_swap(max_len: usize) -> (LemmaReport, LemmaReport) {
    let mut left = LemmaReport::new(LemmaId::RotSwapLeft, max_len);
    let mut right = LemmaReport::new(LemmaId::RotSwapRight, max_len);
    for n in 2..=max_len {
        for d in 1..=n / 2 {
            let x = distinct(0, d);
            let y = distinct(d, n - 2 * d);
            let z = distinct(n - d, d);
            let xyz = concat(&concat(&x, &y), &z);

            let zy = concat(&z, &y);
            if d < zy.len() {
                left.expect(
                    || format!("N={n} d={d}"),
                    oracle_rotate(&xyz, d as i64),
                    concat(&oracle_rotate(&zy, d as i64), &x),
                );
            } else {
                left.skipped += 1;
            }

            let yx = concat(&y, &x);
            right.expect(
                || format!("N={n} d={d}"),
                oracle_rotate(&xyz, (n - d) as i64),
                concat(&z, &oracle_rotate(&yx, (n - 2 * d) as i64)),
            );
        }
    }
    (left, right)
}

/// For all `2 <= n <= max_n`, `0 < r < n`, `0 <= k < n`, `invert_mp(n, n − r, k)`
/// returns an in-range `(s, i)` whose cycle position is `k`.
pub fn check_lemma_invert_mp(max_n: usize) -> LemmaReport {
    let mut report = LemmaReport::new(LemmaId::InvertMp, max_n);
    for n in 2..=max_n {
        for r in 1..n {
            let m = n - r;
            let g = (1..=m).rev().find(|d| n % d == 0 && m % d == 0).unwrap_or(1);
            for k in 0..n {
                let located = match invert_mp(n, m, k) {
                    Ok((s, i)) if s < g && i < n / g => Some((s + i * m) % n),
                    _ => None,
                };
                report.expect(|| format!("n={n} r={r} k={k}"), Some(k), located);
            }
        }
    }
    report
}

/// `0 <= wrap(x, y) < y` and `wrap(x, y) = x mod y` for `x <= max`, `1 <= y <= max`.
pub fn check_wrap_bounds(max: usize) -> LemmaReport {
    let mut report = LemmaReport::new(LemmaId::WrapBounds, max);
    for y in 1..=max {
        for x in 0..=max {
            let got = wrap(x, y).ok().filter(|w| *w < y);
            report.expect(|| format!("x={x} y={y}"), Some(x % y), got);
        }
    }
    report
}
