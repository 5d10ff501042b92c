//! Observation points inside the rotation algorithms.
//!
//! Every algorithm reports its loop variables at loop entry, after each
//! iteration and at loop exit. The default [`NoProbe`] ignores everything and
//! compiles away; [`crate::verify::run_checked`] plugs in a probe that
//! evaluates loop invariants, and tests use probes to count iterations.

/// Where in a loop (or procedure) a report is made.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// Procedure entry, before the first iteration.
    Enter,
    /// After a loop iteration.
    Step,
    /// After the loop, before returning.
    Leave,
}

/// Loop state of one algorithm at a boundary.
///
/// `buf` is always the full buffer being rotated, never a sub-slice, so
/// indices are absolute.
#[derive(Debug)]
pub enum LoopState<'a, T> {
    Copy {
        r: usize,
        s: usize,
        d: usize,
        buf: &'a [T],
        /// Slots not yet filled are `None`.
        scratch: &'a [Option<T>],
    },
    /// `stage` is 0 on entry, then 1, 2, 3 after each bulk copy.
    CopyNative {
        r: usize,
        stage: u8,
        buf: &'a [T],
        scratch: &'a [T],
    },
    /// `stage` is 0 on entry, then 1, 2, 3 after each of the three reversals.
    ReverseRotation {
        r: usize,
        stage: u8,
        buf: &'a [T],
    },
    /// `q` is signed because it reaches `low − 1` for an empty range.
    Reverse {
        low: usize,
        high: usize,
        p: usize,
        q: isize,
        buf: &'a [T],
    },
    SwapSections {
        low: usize,
        high: usize,
        d: usize,
        x: usize,
        z: usize,
        buf: &'a [T],
    },
    /// One activation of the recursive helper that rotates `buf[low..high)`
    /// at `p`; `depth` starts at 1.
    SwapHelper {
        low: usize,
        p: usize,
        high: usize,
        depth: usize,
        buf: &'a [T],
    },
    SwapIterative {
        r: usize,
        low: usize,
        p: usize,
        high: usize,
        buf: &'a [T],
    },
    /// Outer loop head of the modular visit.
    ModuloOuter {
        r: usize,
        start: usize,
        moved: usize,
        buf: &'a [T],
    },
    /// After each execution of the inner (repeat-until) loop body.
    ModuloInner {
        r: usize,
        start: usize,
        moved: usize,
        v: usize,
        displaced: &'a T,
        buf: &'a [T],
    },
}

pub trait Probe<T> {
    fn observe(&mut self, at: Boundary, state: LoopState<'_, T>);
}

/// Ignores all reports.
#[derive(Debug, Default, Clone, Copy)]
pub struct NoProbe;

impl<T> Probe<T> for NoProbe {
    #[inline(always)]
    fn observe(&mut self, _: Boundary, _: LoopState<'_, T>) {}
}

impl<T, P: Probe<T> + ?Sized> Probe<T> for &mut P {
    #[inline(always)]
    fn observe(&mut self, at: Boundary, state: LoopState<'_, T>) {
        (**self).observe(at, state)
    }
}
