use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::probe::{Boundary, LoopState, NoProbe, Probe};

use super::needs_work;

/// Largest buffer accepted by [`rotate_swap_recursive`]. Its recursion depth
/// reaches `n − 1` for `r = 1`.
pub const RECURSION_LIMIT: usize = 1 << 20;

/// Stack budget per recursive activation, generous enough for debug builds.
const FRAME_BYTES: usize = 2048;
/// Depths up to this run on the caller's stack.
const INLINE_DEPTH: usize = 2048;

/// Exchanges `buf[low..low + d)` with `buf[high − d..high)`; the sections must
/// not overlap. Performs exactly `d` swaps.
pub fn swap_sections<T>(buf: &mut [T], low: usize, high: usize, d: usize, counters: &mut Counters) -> Result<()> {
    swap_sections_probed(buf, low, high, d, counters, &mut NoProbe)
}

pub(crate) fn swap_sections_probed<T, P: Probe<T>>(
    buf: &mut [T],
    low: usize,
    high: usize,
    d: usize,
    counters: &mut Counters,
    probe: &mut P,
) -> Result<()> {
    let fits = high <= buf.len() && d <= high && low.checked_add(d).is_some_and(|end| end <= high - d);
    if !fits {
        return Err(Error::IndexRange(format!(
            "swap_sections: [{low}..{low}+{d}) and [{high}-{d}..{high}) must be disjoint sections of a buffer of {} elements",
            buf.len()
        )));
    }
    let (mut x, mut z) = (low, high - d);
    probe.observe(Boundary::Enter, LoopState::SwapSections { low, high, d, x, z, buf });
    while x != low + d {
        buf.swap(x, z);
        counters.swap();
        counters.hold(1);
        x += 1;
        z += 1;
        probe.observe(Boundary::Step, LoopState::SwapSections { low, high, d, x, z, buf });
    }
    probe.observe(Boundary::Leave, LoopState::SwapSections { low, high, d, x, z, buf });
    Ok(())
}

/// Rotation by swapping equal-length sections, recursive form.
///
/// Performs `n − gcd(r, n − r)` swaps. Buffers larger than
/// [`RECURSION_LIMIT`] are rejected; deep recursions run on a helper thread
/// with a stack sized for the exact depth.
pub fn rotate_swap_recursive<T: Send>(buf: &mut [T], r: usize, counters: &mut Counters) -> Result<()> {
    let n = buf.len();
    if n > RECURSION_LIMIT {
        return Err(Error::DepthGuard { n, limit: RECURSION_LIMIT });
    }
    if !needs_work(n, r)? {
        return Ok(());
    }
    let depth = recursion_depth(n, r);
    if depth <= INLINE_DEPTH {
        return swap_recursive_probed(buf, r, counters, &mut NoProbe);
    }
    std::thread::scope(|scope| {
        std::thread::Builder::new()
            .name("rotate-swap-recursive".into())
            .stack_size((1 << 20) + depth * FRAME_BYTES)
            .spawn_scoped(scope, || swap_recursive_probed(buf, r, counters, &mut NoProbe))
            .expect("spawn recursion thread")
            .join()
            .unwrap_or_else(|panic| std::panic::resume_unwind(panic))
    })
}

/// Number of nested helper activations for a rotation by `0 < r < n`.
fn recursion_depth(n: usize, r: usize) -> usize {
    let (mut low, p, mut high) = (0, r, n);
    let mut depth = 0;
    while low < p && p < high {
        depth += 1;
        let (left, right) = (p - low, high - p);
        if left == right {
            break;
        } else if left < right {
            high -= left;
        } else {
            low += right;
        }
    }
    depth
}

pub(crate) fn swap_recursive_probed<T, P: Probe<T>>(
    buf: &mut [T],
    r: usize,
    counters: &mut Counters,
    probe: &mut P,
) -> Result<()> {
    let n = buf.len();
    if n > RECURSION_LIMIT {
        return Err(Error::DepthGuard { n, limit: RECURSION_LIMIT });
    }
    if !needs_work(n, r)? {
        return Ok(());
    }
    swap_helper(buf, 0, r, n, 1, counters, probe)
}

/// Rotates `buf[low..high)` at `p`, i.e. exchanges `buf[low..p)` and `buf[p..high)`.
fn swap_helper<T, P: Probe<T>>(
    buf: &mut [T],
    low: usize,
    p: usize,
    high: usize,
    depth: usize,
    counters: &mut Counters,
    probe: &mut P,
) -> Result<()> {
    counters.depth(depth);
    probe.observe(Boundary::Enter, LoopState::SwapHelper { low, p, high, depth, buf });
    if low < p && p < high {
        let (left, right) = (p - low, high - p);
        if left == right {
            swap_sections_probed(buf, low, high, left, counters, probe)?;
        } else if left < right {
            swap_sections_probed(buf, low, high, left, counters, probe)?;
            swap_helper(buf, low, p, high - left, depth + 1, counters, probe)?;
        } else {
            swap_sections_probed(buf, low, high, right, counters, probe)?;
            swap_helper(buf, low + right, p, high, depth + 1, counters, probe)?;
        }
    }
    probe.observe(Boundary::Leave, LoopState::SwapHelper { low, p, high, depth, buf });
    Ok(())
}

/// Rotation by swapping equal-length sections, as a loop over a shrinking
/// slice `[low..high)` that still has to be rotated at `p`.
pub fn rotate_swap_iterative<T>(buf: &mut [T], r: usize, counters: &mut Counters) -> Result<()> {
    swap_iterative_probed(buf, r, counters, &mut NoProbe)
}

pub(crate) fn swap_iterative_probed<T, P: Probe<T>>(
    buf: &mut [T],
    r: usize,
    counters: &mut Counters,
    probe: &mut P,
) -> Result<()> {
    let n = buf.len();
    if !needs_work(n, r)? {
        return Ok(());
    }
    let (mut low, p, mut high) = (0, r, n);
    probe.observe(Boundary::Enter, LoopState::SwapIterative { r, low, p, high, buf });
    while low < p && p < high {
        let (left, right) = (p - low, high - p);
        if left == right {
            swap_sections_probed(buf, low, high, left, counters, probe)?;
            low += left;
            high -= right;
        } else if left < right {
            swap_sections_probed(buf, low, high, left, counters, probe)?;
            high -= left;
        } else {
            swap_sections_probed(buf, low, high, right, counters, probe)?;
            low += right;
        }
        probe.observe(Boundary::Step, LoopState::SwapIterative { r, low, p, high, buf });
    }
    probe.observe(Boundary::Leave, LoopState::SwapIterative { r, low, p, high, buf });
    Ok(())
}
