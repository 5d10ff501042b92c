use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::probe::{Boundary, LoopState, NoProbe, Probe};

use super::needs_work;

/// Reverses `buf[low..high)` in place by swapping from both ends inward.
///
/// The loop runs `ceil((high − low) / 2)` times; for odd lengths the last
/// iteration swaps the middle element with itself and is counted.
pub fn reverse<T>(buf: &mut [T], low: usize, high: usize, counters: &mut Counters) -> Result<()> {
    reverse_probed(buf, low, high, counters, &mut NoProbe)
}

pub(crate) fn reverse_probed<T, P: Probe<T>>(
    buf: &mut [T],
    low: usize,
    high: usize,
    counters: &mut Counters,
    probe: &mut P,
) -> Result<()> {
    if low > high || high > buf.len() {
        return Err(Error::IndexRange(format!(
            "reverse: [{low}..{high}) is not a range of a buffer of {} elements",
            buf.len()
        )));
    }
    let mut p = low;
    let mut q = high as isize - 1;
    probe.observe(Boundary::Enter, LoopState::Reverse { low, high, p, q, buf });
    while (p as isize) < q + 1 {
        buf.swap(p, q as usize);
        counters.swap();
        counters.hold(1);
        p += 1;
        q -= 1;
        probe.observe(Boundary::Step, LoopState::Reverse { low, high, p, q, buf });
    }
    probe.observe(Boundary::Leave, LoopState::Reverse { low, high, p, q, buf });
    Ok(())
}

/// Rotation through three reversals: `buf[0..r)`, `buf[r..n)`, then all of
/// `buf`.
pub fn rotate_reverse<T>(buf: &mut [T], r: usize, counters: &mut Counters) -> Result<()> {
    rotate_reverse_probed(buf, r, counters, &mut NoProbe)
}

pub(crate) fn rotate_reverse_probed<T, P: Probe<T>>(
    buf: &mut [T],
    r: usize,
    counters: &mut Counters,
    probe: &mut P,
) -> Result<()> {
    let n = buf.len();
    if !needs_work(n, r)? {
        return Ok(());
    }
    probe.observe(Boundary::Enter, LoopState::ReverseRotation { r, stage: 0, buf });
    reverse_probed(buf, 0, r, counters, probe)?;
    probe.observe(Boundary::Step, LoopState::ReverseRotation { r, stage: 1, buf });
    reverse_probed(buf, r, n, counters, probe)?;
    probe.observe(Boundary::Step, LoopState::ReverseRotation { r, stage: 2, buf });
    reverse_probed(buf, 0, n, counters, probe)?;
    probe.observe(Boundary::Leave, LoopState::ReverseRotation { r, stage: 3, buf });
    Ok(())
}
