//! The rotation algorithms.
//!
//! Every algorithm rotates a slice to the left by `r` in place, where
//! `0 <= r < n`, and tallies its element traffic in a [`Counters`]. Rotation
//! by 0 and buffers of at most one element return immediately without
//! touching the buffer. Use [`rotate`] to accept any signed amount.

mod copy;
mod modulo;
mod reverse;
mod swap;

use std::fmt;
use std::str::FromStr;

use crate::counters::Counters;
use crate::error::{domain, Error, Result};
use crate::probe::Probe;

pub use copy::{rotate_copy, rotate_copy_native};
pub use modulo::rotate_modulo;
pub use reverse::{reverse, rotate_reverse};
pub use swap::{rotate_swap_iterative, rotate_swap_recursive, swap_sections, RECURSION_LIMIT};

pub(crate) use copy::{copy_native_probed, copy_probed};
pub(crate) use modulo::modulo_probed;
pub(crate) use reverse::rotate_reverse_probed;
pub(crate) use swap::{swap_iterative_probed, swap_recursive_probed};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    Copy,
    CopyNative,
    Reverse,
    SwapRecursive,
    SwapIterative,
    Modulo,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Copy,
        Algorithm::CopyNative,
        Algorithm::Reverse,
        Algorithm::SwapRecursive,
        Algorithm::SwapIterative,
        Algorithm::Modulo,
    ];

    /// The five variants that are benchmarked by default: everything except
    /// the recursive swap, whose stack depth grows linearly in the worst case.
    pub const BENCHMARKED: [Algorithm; 5] =
        [Algorithm::Copy, Algorithm::CopyNative, Algorithm::Reverse, Algorithm::SwapIterative, Algorithm::Modulo];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Copy => "copy",
            Algorithm::CopyNative => "copy-native",
            Algorithm::Reverse => "reverse",
            Algorithm::SwapRecursive => "swap-rec",
            Algorithm::SwapIterative => "swap",
            Algorithm::Modulo => "modulo",
        }
    }

    /// Rotates `buf` left by `r`, requiring `r < buf.len()` (or an empty buffer
    /// with `r == 0`).
    pub fn apply<T: Clone + Send>(self, buf: &mut [T], r: usize, counters: &mut Counters) -> Result<()> {
        match self {
            Algorithm::Copy => rotate_copy(buf, r, counters),
            Algorithm::CopyNative => rotate_copy_native(buf, r, counters),
            Algorithm::Reverse => rotate_reverse(buf, r, counters),
            Algorithm::SwapRecursive => rotate_swap_recursive(buf, r, counters),
            Algorithm::SwapIterative => rotate_swap_iterative(buf, r, counters),
            Algorithm::Modulo => rotate_modulo(buf, r, counters),
        }
    }

    /// Like [`Algorithm::apply`], reporting loop state to `probe`.
    ///
    /// The recursive swap runs on the calling thread here, so its depth is
    /// bounded by that thread's stack.
    pub fn apply_probed<T: Clone, P: Probe<T>>(
        self,
        buf: &mut [T],
        r: usize,
        counters: &mut Counters,
        probe: &mut P,
    ) -> Result<()> {
        match self {
            Algorithm::Copy => copy_probed(buf, r, counters, probe),
            Algorithm::CopyNative => copy_native_probed(buf, r, counters, probe),
            Algorithm::Reverse => rotate_reverse_probed(buf, r, counters, probe),
            Algorithm::SwapRecursive => swap_recursive_probed(buf, r, counters, probe),
            Algorithm::SwapIterative => swap_iterative_probed(buf, r, counters, probe),
            Algorithm::Modulo => modulo_probed(buf, r, counters, probe),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "copy" => Algorithm::Copy,
            "copy-native" | "copy_native" => Algorithm::CopyNative,
            "reverse" => Algorithm::Reverse,
            "swap-rec" | "swap-recursive" | "swap_recursive" => Algorithm::SwapRecursive,
            "swap" | "swap-iterative" | "swap_iterative" => Algorithm::SwapIterative,
            "modulo" => Algorithm::Modulo,
            other => return Err(Error::UnknownAlgorithm(other.to_owned())),
        })
    }
}

/// A requested shift together with its equivalent left rotation.
///
/// Positive amounts shift left, negative amounts shift right; a right
/// rotation by `r` is a left rotation by `n − r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RotationRequest {
    pub amount: i64,
    pub n: usize,
    pub r_left: usize,
}

pub fn normalize(amount: i64, n: usize) -> RotationRequest {
    let r_left = if n == 0 { 0 } else { (amount as i128).rem_euclid(n as i128) as usize };
    RotationRequest { amount, n, r_left }
}

/// Rotates `buf` by any signed `amount` (positive = left) with `algorithm`.
pub fn rotate<T: Clone + Send>(
    buf: &mut [T],
    amount: i64,
    algorithm: Algorithm,
    counters: &mut Counters,
) -> Result<RotationRequest> {
    let request = normalize(amount, buf.len());
    algorithm.apply(buf, request.r_left, counters)?;
    Ok(request)
}

/// Shared precondition: `r < n`, or `r == 0` on an empty buffer. Returns
/// `false` when the rotation is the identity and nothing needs doing.
pub(crate) fn needs_work(n: usize, r: usize) -> Result<bool> {
    if r >= n && !(n == 0 && r == 0) {
        return Err(domain(format!("rotation amount {r} must be < n = {n}")));
    }
    Ok(r != 0 && n > 1)
}

#[cfg(test)]
fn apply_unprobed<T: Clone>(algorithm: Algorithm, buf: &mut [T], r: usize, counters: &mut Counters) -> Result<()> {
    algorithm.apply_probed(buf, r, counters, &mut crate::probe::NoProbe)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oracle(seq: &[u32], r: usize) -> Vec<u32> {
        let mut out = seq[r..].to_vec();
        out.extend_from_slice(&seq[..r]);
        out
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(-4, 6).r_left, 2);
        assert_eq!(normalize(0, 5).r_left, 0);
        assert_eq!(normalize(8, 6).r_left, 2);
        assert_eq!(normalize(-13, 6).r_left, 5);
        assert_eq!(normalize(7, 0).r_left, 0);
        assert_eq!(normalize(i64::MIN, 7).r_left, (i64::MIN as i128).rem_euclid(7) as usize);
    }

    #[test]
    fn names_round_trip() {
        for alg in Algorithm::ALL {
            assert_eq!(alg.name().parse::<Algorithm>().unwrap(), alg);
        }
        assert!("bogus".parse::<Algorithm>().is_err());
    }

    #[test]
    fn every_algorithm_matches_slice_concatenation() {
        for alg in Algorithm::ALL {
            for n in 0..=24usize {
                let seq: Vec<u32> = (0..n as u32).collect();
                for r in 0..n.max(1) {
                    let mut buf = seq.clone();
                    let mut c = Counters::default();
                    alg.apply(&mut buf, r, &mut c).unwrap();
                    assert_eq!(buf, oracle(&seq, r.min(n)), "{alg} n={n} r={r}");
                    let mut probed = seq.clone();
                    apply_unprobed(alg, &mut probed, r, &mut Counters::default()).unwrap();
                    assert_eq!(probed, buf);
                }
            }
        }
    }

    #[test]
    fn rejects_out_of_range_amount() {
        for alg in Algorithm::ALL {
            let mut buf = [1, 2, 3];
            assert!(matches!(alg.apply(&mut buf, 3, &mut Counters::default()), Err(Error::Domain(_))));
            assert_eq!(buf, [1, 2, 3]);
        }
    }

    #[test]
    fn identity_rotation_touches_nothing() {
        for alg in Algorithm::ALL {
            let mut buf = [5, 6, 7, 8];
            let mut c = Counters::default();
            alg.apply(&mut buf, 0, &mut c).unwrap();
            assert_eq!(buf, [5, 6, 7, 8]);
            assert_eq!(c, Counters::default(), "{alg}");
        }
    }

    #[test]
    fn rotate_accepts_any_amount() {
        let mut buf = *b"ABCDEF";
        let req = rotate(&mut buf, -4, Algorithm::Modulo, &mut Counters::default()).unwrap();
        assert_eq!(req.r_left, 2);
        assert_eq!(&buf, b"CDEFAB");
        let mut empty: [u8; 0] = [];
        rotate(&mut empty, 5, Algorithm::Copy, &mut Counters::default()).unwrap();
    }
}
