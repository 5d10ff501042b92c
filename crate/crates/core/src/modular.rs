//! Index arithmetic for rotations.
//!
//! A left rotation by `r` of a length-`n` sequence is the permutation
//! `k ↦ (k + n − r) mod n`. It splits into `gcd(n, n − r)` disjoint cycles of
//! `n / gcd(n, n − r)` indices each; the functions here compute that structure
//! using only subtraction-based reduction, which is what the algorithms in
//! [`crate::rotate`] rely on.
//!
//! All functions are total on their documented domain and return
//! [`Error::Domain`](crate::Error::Domain) outside of it. Products such as
//! `k · m` are formed in 128-bit arithmetic, so any `usize` input is safe.

use crate::error::{domain, Result};

/// `x mod y` by repeated subtraction.
///
/// Runs in `O(x / y)` steps; every caller in this crate keeps `x < 2y` or
/// close to it.
pub fn wrap(x: usize, y: usize) -> Result<usize> {
    if y == 0 {
        return Err(domain("wrap: divisor must be positive"));
    }
    let mut x = x;
    while x >= y {
        x -= y;
    }
    Ok(x)
}

/// Greatest common divisor by successive subtraction.
pub fn gcd_sub(x: usize, y: usize) -> Result<usize> {
    if x == 0 || y == 0 {
        return Err(domain(format!("gcd_sub({x}, {y}): arguments must be positive")));
    }
    let (mut x, mut y) = (x, y);
    while x != y {
        if x > y {
            x -= y;
        } else {
            y -= x;
        }
    }
    Ok(x)
}

/// Extended Euclid: returns `(g, a, b)` with `a·x + b·y = g = gcd(x, y)`.
pub fn ext_gcd(x: usize, y: usize) -> Result<(usize, i128, i128)> {
    if x == 0 || y == 0 {
        return Err(domain(format!("ext_gcd({x}, {y}): arguments must be positive")));
    }
    // (r, s, t) rows with r = s·x + t·y
    let (mut r0, mut s0, mut t0) = (x as i128, 1i128, 0i128);
    let (mut r1, mut s1, mut t1) = (y as i128, 0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    Ok((r0 as usize, s0, t0))
}

/// Cycle length of the step-`m` permutation on `n` indices: `n / gcd(n, m)`.
///
/// Accepts `0 < m <= n`; `m == n` yields 1.
pub fn tau(n: usize, m: usize) -> Result<usize> {
    if n == 0 || m == 0 || m > n {
        return Err(domain(format!("tau({n}, {m}): requires 0 < m <= n")));
    }
    Ok(n / gcd_sub(n, m)?)
}

/// The `k`-th index visited by the cycle of step `m` modulo `n` that starts at
/// `s`, i.e. `(s + k·m) mod n`.
pub fn mp(n: usize, m: usize, s: usize, k: usize) -> Result<usize> {
    check_step(n, m)?;
    if s >= n {
        return Err(domain(format!("mp: start {s} out of range for n = {n}")));
    }
    Ok(mp_unchecked(n, m, s, k))
}

#[inline]
pub(crate) fn mp_unchecked(n: usize, m: usize, s: usize, k: usize) -> usize {
    ((s as u128 + k as u128 * m as u128) % n as u128) as usize
}

/// Locates index `k` in the cycle family of step `m` modulo `n`.
///
/// Returns `(s, i)` with `s < gcd(n, m)`, `i < tau(n, m)` and
/// `mp(n, m, s, i) == k`. The start is `k mod g`; the position solves
/// `i·(m/g) ≡ (k − s)/g (mod n/g)` with Bézout coefficients of `m/g` and `n/g`.
pub fn invert_mp(n: usize, m: usize, k: usize) -> Result<(usize, usize)> {
    check_step(n, m)?;
    if k >= n {
        return Err(domain(format!("invert_mp: index {k} out of range for n = {n}")));
    }
    let g = gcd_sub(n, m)?;
    let s = wrap(k, g)?;
    let cycle_len = n / g;
    let (unit, inv, _) = ext_gcd(m / g, cycle_len)?;
    debug_assert_eq!(unit, 1);
    let quotient = ((k - s) / g) as i128;
    let i = (inv * quotient).rem_euclid(cycle_len as i128) as usize;

    #[cfg(debug_assertions)]
    if n <= 4096 {
        let scanned = (0..cycle_len).find(|&j| mp_unchecked(n, m, s, j) == k);
        debug_assert_eq!(scanned, Some(i), "invert_mp({n}, {m}, {k}) disagrees with scan");
    }
    Ok((s, i))
}

/// Position in the left rotation by `r` where the element at `k` lands.
pub fn dest_index(k: usize, n: usize, r: usize) -> Result<usize> {
    check_index_rotation(k, n, r)?;
    wrap(k + (n - r), n)
}

/// Position in the original sequence of the element at `k` after a left
/// rotation by `r`.
pub fn src_index(k: usize, n: usize, r: usize) -> Result<usize> {
    check_index_rotation(k, n, r)?;
    wrap(k + r, n)
}

/// Cycle structure of the left rotation by `r` of `n` indices.
///
/// The rotation sends `k` to `k + step (mod n)` with `step = n − r`; its
/// cycles start at `0, 1, …, g − 1` and each has `tau` members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub n: usize,
    pub step: usize,
    pub g: usize,
    pub tau: usize,
    pub starts: Vec<usize>,
}

impl CycleDecomposition {
    /// The indices of the cycle beginning at `start`, in visiting order and
    /// without repeating `start` at the end.
    pub fn cycle(&self, start: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.tau).map(move |k| mp_unchecked(self.n, self.step, start, k))
    }

    pub fn cycles(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.starts.iter().map(|&s| self.cycle(s).collect())
    }
}

pub fn decompose(n: usize, r: usize) -> Result<CycleDecomposition> {
    if r == 0 || r >= n {
        return Err(domain(format!("decompose({n}, {r}): requires 0 < r < n")));
    }
    let step = n - r;
    let g = gcd_sub(n, step)?;
    Ok(CycleDecomposition { n, step, g, tau: n / g, starts: (0..g).collect() })
}

fn check_step(n: usize, m: usize) -> Result<()> {
    if m == 0 || m >= n {
        return Err(domain(format!("step {m} must satisfy 0 < m < n = {n}")));
    }
    Ok(())
}

fn check_index_rotation(k: usize, n: usize, r: usize) -> Result<()> {
    if k >= n || r >= n {
        return Err(domain(format!("index {k} and rotation {r} must both be < n = {n}")));
    }
    Ok(())
}
