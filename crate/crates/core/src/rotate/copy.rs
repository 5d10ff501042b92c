use crate::counters::Counters;
use crate::error::Result;
use crate::probe::{Boundary, LoopState, NoProbe, Probe};

use super::needs_work;

/// Rotation through a full scratch array.
///
/// Each `buf[s]` is copied to `scratch[(s + n − r) mod n]`, then the scratch
/// array is copied back. Uses `n` auxiliary slots.
pub fn rotate_copy<T: Clone>(buf: &mut [T], r: usize, counters: &mut Counters) -> Result<()> {
    copy_probed(buf, r, counters, &mut NoProbe)
}

pub(crate) fn copy_probed<T: Clone, P: Probe<T>>(
    buf: &mut [T],
    r: usize,
    counters: &mut Counters,
    probe: &mut P,
) -> Result<()> {
    let n = buf.len();
    if !needs_work(n, r)? {
        return Ok(());
    }
    // unfilled scratch slots stay `None`
    let mut scratch: Vec<Option<T>> = vec![None; n];
    counters.hold(n);

    let (mut s, mut d) = (0, n - r);
    probe.observe(Boundary::Enter, LoopState::Copy { r, s, d, buf, scratch: &scratch });
    while s < n {
        scratch[d] = Some(buf[s].clone());
        counters.moved(1);
        s += 1;
        d += 1;
        if d == n {
            d = 0;
        }
        probe.observe(Boundary::Step, LoopState::Copy { r, s, d, buf, scratch: &scratch });
    }

    for (slot, value) in buf.iter_mut().zip(scratch.iter_mut()) {
        *slot = value.take().expect("every scratch slot is written once");
    }
    counters.moved(n);
    probe.observe(Boundary::Leave, LoopState::Copy { r, s, d, buf, scratch: &scratch });
    Ok(())
}

/// Rotation through a scratch array of `min(r, n − r)` elements.
///
/// Saves the shorter block, shifts the longer one over it with block copies
/// and restores the saved block at the other end.
pub fn rotate_copy_native<T: Clone>(buf: &mut [T], r: usize, counters: &mut Counters) -> Result<()> {
    copy_native_probed(buf, r, counters, &mut NoProbe)
}

pub(crate) fn copy_native_probed<T: Clone, P: Probe<T>>(
    buf: &mut [T],
    r: usize,
    counters: &mut Counters,
    probe: &mut P,
) -> Result<()> {
    let n = buf.len();
    if !needs_work(n, r)? {
        return Ok(());
    }
    let d = r.min(n - r);
    counters.hold(d);
    probe.observe(Boundary::Enter, LoopState::CopyNative { r, stage: 0, buf, scratch: &[] });

    let scratch: Vec<T>;
    if r <= n - r {
        // b[0..r) := a[0..r); a[0..n-r) := a[r..n); a[n-r..n) := b
        scratch = buf[..r].to_vec();
        counters.moved(r);
        probe.observe(Boundary::Step, LoopState::CopyNative { r, stage: 1, buf, scratch: &scratch });
        shift_left(buf, r);
        counters.moved(n - r);
        probe.observe(Boundary::Step, LoopState::CopyNative { r, stage: 2, buf, scratch: &scratch });
        buf[n - r..].clone_from_slice(&scratch);
        counters.moved(r);
    } else {
        // b[0..n-r) := a[r..n); a[n-r..n) := a[0..r); a[0..n-r) := b
        scratch = buf[r..].to_vec();
        counters.moved(d);
        probe.observe(Boundary::Step, LoopState::CopyNative { r, stage: 1, buf, scratch: &scratch });
        shift_right(buf, d);
        counters.moved(r);
        probe.observe(Boundary::Step, LoopState::CopyNative { r, stage: 2, buf, scratch: &scratch });
        buf[..d].clone_from_slice(&scratch);
        counters.moved(d);
    }
    probe.observe(Boundary::Leave, LoopState::CopyNative { r, stage: 3, buf, scratch: &scratch });
    Ok(())
}

/// `buf[0..n-by) := buf[by..n)` as a series of non-overlapping block copies of
/// at most `by` elements, front to back.
fn shift_left<T: Clone>(buf: &mut [T], by: usize) {
    let n = buf.len();
    let mut dst = 0;
    while dst + by < n {
        let len = by.min(n - by - dst);
        let (left, right) = buf.split_at_mut(dst + by);
        left[dst..dst + len].clone_from_slice(&right[..len]);
        dst += len;
    }
}

/// `buf[by..n) := buf[0..n-by)`, back to front.
fn shift_right<T: Clone>(buf: &mut [T], by: usize) {
    let mut src_end = buf.len() - by;
    while src_end > 0 {
        let len = by.min(src_end);
        let src = src_end - len;
        let (left, right) = buf.split_at_mut(src_end);
        right[by - len..by].clone_from_slice(&left[src..src_end]);
        src_end = src;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn copy_examples() {
        let mut a = *b"ABCDEF";
        let mut c = Counters::default();
        rotate_copy(&mut a, 2, &mut c).unwrap();
        assert_eq!(&a, b"CDEFAB");
        assert_eq!((c.reads, c.writes, c.aux_peak), (12, 12, 6));

        let mut a = *b"LMNOPQ";
        rotate_copy(&mut a, 4, &mut Counters::default()).unwrap();
        assert_eq!(&a, b"PQLMNO");
    }

    #[test]
    fn copy_native_examples() {
        let mut a = *b"ABCDEF";
        let mut c = Counters::default();
        rotate_copy_native(&mut a, 2, &mut c).unwrap();
        assert_eq!(&a, b"CDEFAB");
        assert_eq!(c.aux_peak, 2);
        assert_eq!((c.reads, c.writes), (8, 8));

        let mut a = *b"LMNOPQ";
        let mut c = Counters::default();
        rotate_copy_native(&mut a, 4, &mut c).unwrap();
        assert_eq!(&a, b"PQLMNO");
        assert_eq!(c.aux_peak, 2);

        let mut a = *b"LMNOPQ";
        let mut c = Counters::default();
        rotate_copy_native(&mut a, 0, &mut c).unwrap();
        assert_eq!((&a, c.aux_peak), (b"LMNOPQ", 0));
    }

    #[test]
    fn shifts_handle_every_offset() {
        for n in 1..40usize {
            for by in 1..n {
                let mut v: Vec<usize> = (0..n).collect();
                shift_left(&mut v, by);
                let expect: Vec<usize> = (by..n).collect();
                assert_eq!(&v[..n - by], &expect[..]);

                let mut v: Vec<usize> = (0..n).collect();
                shift_right(&mut v, by);
                let expect: Vec<usize> = (0..n - by).collect();
                assert_eq!(&v[by..], &expect[..]);
            }
        }
    }

    #[test]
    fn works_with_non_copy_elements() {
        let mut lines: Vec<String> = ["a", "b", "c", "d", "e"].iter().map(|s| s.to_string()).collect();
        rotate_copy_native(&mut lines, 3, &mut Counters::default()).unwrap();
        assert_eq!(lines, ["d", "e", "a", "b", "c"]);
    }
}
