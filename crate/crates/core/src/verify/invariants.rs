//! Loop invariants of every algorithm as named, evaluable predicates.
//!
//! Each predicate sees the live [`LoopState`] plus a [`Context`] holding the
//! buffer as it was when the enclosing procedure was entered ("old" state)
//! and, for rotation-level procedures, the expected final buffer. A
//! predicate returns `Some(detail)` describing the first instance that fails.

use std::fmt::Debug;

use crate::modular::{mp_unchecked, wrap};
use crate::probe::{Boundary, LoopState};

use super::oracle::{oracle_rotate, reversed};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scope {
    Copy,
    CopyNative,
    ReverseRotation,
    Reverse,
    SwapSections,
    SwapHelper,
    SwapIterative,
    ModuloOuter,
    ModuloInner,
}

impl Scope {
    pub(crate) fn of<T>(state: &LoopState<'_, T>) -> Scope {
        match state {
            LoopState::Copy { .. } => Scope::Copy,
            LoopState::CopyNative { .. } => Scope::CopyNative,
            LoopState::ReverseRotation { .. } => Scope::ReverseRotation,
            LoopState::Reverse { .. } => Scope::Reverse,
            LoopState::SwapSections { .. } => Scope::SwapSections,
            LoopState::SwapHelper { .. } => Scope::SwapHelper,
            LoopState::SwapIterative { .. } => Scope::SwapIterative,
            LoopState::ModuloOuter { .. } => Scope::ModuloOuter,
            LoopState::ModuloInner { .. } => Scope::ModuloInner,
        }
    }
}

pub(crate) struct Context<'a, T> {
    pub at: Boundary,
    /// Buffer at entry of the enclosing procedure.
    pub old: &'a [T],
    /// Rotation of the buffer as it was when the whole rotation started.
    pub target: &'a [T],
}

pub(crate) type Check<T> = fn(&Context<'_, T>, &LoopState<'_, T>) -> Option<String>;

pub(crate) struct Invariant<T> {
    pub id: &'static str,
    pub scope: Scope,
    /// Postconditions are only evaluated on [`Boundary::Leave`].
    pub at_exit_only: bool,
    pub check: Check<T>,
}

macro_rules! registry {
    ($( $scope:ident $id:literal $(@exit $exit:tt)? => $check:ident ),* $(,)?) => {
        pub(crate) fn invariants<T: PartialEq + Clone + Debug>() -> Vec<Invariant<T>> {
            vec![$(Invariant {
                id: $id,
                scope: Scope::$scope,
                at_exit_only: registry!(@exit $($exit)?),
                check: $check::<T>,
            }),*]
        }

        /// Identifiers and scopes of every registered invariant.
        pub fn registered_invariants() -> Vec<(&'static str, Scope)> {
            vec![$(($id, Scope::$scope)),*]
        }
    };
    (@exit) => { false };
    (@exit $e:tt) => { true };
}

registry! {
    Copy "copy.source-range" => copy_source_range,
    Copy "copy.dest-follows-source" => copy_dest_follows_source,
    Copy "copy.scratch-placed" => copy_scratch_placed,
    Copy "copy.postcondition" @exit x => rotation_post,

    CopyNative "copy-native.scratch-size" => native_scratch_size,
    CopyNative "copy-native.saved-block" => native_saved_block,
    CopyNative "copy-native.shifted-block" => native_shifted_block,
    CopyNative "copy-native.postcondition" @exit x => rotation_post,

    ReverseRotation "reverse-rotation.stages" => reverse_rotation_stages,
    ReverseRotation "reverse-rotation.postcondition" @exit x => rotation_post,

    Reverse "reverse.cursor-bounds" => reverse_cursor_bounds,
    Reverse "reverse.mirror-cursor" => reverse_mirror_cursor,
    Reverse "reverse.swapped-ends" => reverse_swapped_ends,
    Reverse "reverse.frame" => reverse_frame,
    Reverse "reverse.postcondition" @exit x => reverse_post,

    SwapSections "swap-sections.cursor-bounds" => sections_cursor_bounds,
    SwapSections "swap-sections.aligned-cursors" => sections_aligned,
    SwapSections "swap-sections.partition" => sections_partition,
    SwapSections "swap-sections.frame" => sections_frame,

    SwapHelper "swap-helper.precondition" => helper_pre,
    SwapHelper "swap-helper.postcondition" @exit x => helper_post,
    SwapHelper "swap-helper.frame" @exit x => helper_frame,

    SwapIterative "swap-iter.bounds" => iter_bounds,
    SwapIterative "swap-iter.empty-iff" => iter_empty_iff,
    SwapIterative "swap-iter.rotated-ends" => iter_rotated_ends,
    SwapIterative "swap-iter.pending-middle" => iter_pending_middle,
    SwapIterative "swap-iter.postcondition" @exit x => rotation_post,

    ModuloOuter "modulo.moved-range" => modulo_moved_range,
    ModuloOuter "modulo.start-range" => modulo_start_range,
    ModuloOuter "modulo.moved-per-cycle" => modulo_moved_per_cycle,
    ModuloOuter "modulo.finished-cycles" => modulo_finished_cycles,
    ModuloOuter "modulo.postcondition" @exit x => rotation_post,

    ModuloInner "modulo.inner.progress" => inner_progress,
    ModuloInner "modulo.inner.cursor" => inner_cursor,
    ModuloInner "modulo.inner.displaced" => inner_displaced,
    ModuloInner "modulo.inner.finished-cycles" => modulo_finished_cycles,
    ModuloInner "modulo.inner.cycle-prefix" => inner_cycle_prefix,
}

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Option<String> {
    if ok {
        None
    } else {
        Some(detail())
    }
}

/// First `i` in `range` where `a[i] != b(i)`.
fn first_mismatch<T: PartialEq + Debug>(
    range: std::ops::Range<usize>,
    a: &[T],
    expected: impl Fn(usize) -> T,
    what: &str,
) -> Option<String> {
    for i in range {
        let want = expected(i);
        if a[i] != want {
            return Some(format!("{what}: a[{i}] = {:?}, expected {want:?}", a[i]));
        }
    }
    None
}

fn same_slices<T: PartialEq + Debug>(a: &[T], b: &[T], what: &str) -> Option<String> {
    ensure(a == b, || format!("{what}: {a:?} != {b:?}"))
}

fn buf_of<'a, T>(state: &LoopState<'a, T>) -> &'a [T] {
    match *state {
        LoopState::Copy { buf, .. }
        | LoopState::CopyNative { buf, .. }
        | LoopState::ReverseRotation { buf, .. }
        | LoopState::Reverse { buf, .. }
        | LoopState::SwapSections { buf, .. }
        | LoopState::SwapHelper { buf, .. }
        | LoopState::SwapIterative { buf, .. }
        | LoopState::ModuloOuter { buf, .. }
        | LoopState::ModuloInner { buf, .. } => buf,
    }
}

fn rotation_post<T: PartialEq + Clone + Debug>(ctx: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    same_slices(buf_of(state), ctx.target, "final buffer vs rotated input")
}

// rotation by copy

fn copy_source_range<T: PartialEq + Clone + Debug>(_: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::Copy { s, buf, .. } = *state else { return None };
    ensure(s <= buf.len(), || format!("s = {s} > n = {}", buf.len()))
}

fn copy_dest_follows_source<T: PartialEq + Clone + Debug>(
    _: &Context<'_, T>,
    state: &LoopState<'_, T>,
) -> Option<String> {
    let LoopState::Copy { r, s, d, buf, .. } = *state else { return None };
    let n = buf.len();
    let want = wrap(s + n - r, n).ok()?;
    ensure(d == want, || format!("d = {d}, expected (s + n - r) wrap n = {want}"))
}

fn copy_scratch_placed<T: PartialEq + Clone + Debug>(ctx: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::Copy { r, s, buf, scratch, .. } = *state else { return None };
    if ctx.at == Boundary::Leave {
        // scratch has been moved back into the buffer
        return None;
    }
    let n = buf.len();
    for (i, value) in buf.iter().enumerate().take(s) {
        let slot = wrap(i + n - r, n).ok()?;
        if scratch[slot].as_ref() != Some(value) {
            return Some(format!("a[{i}] = {value:?} but b[{slot}] = {:?}", scratch[slot]));
        }
    }
    None
}

// rotation by copy with a short scratch block

fn native_scratch_size<T: PartialEq + Clone + Debug>(_: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::CopyNative { r, stage, buf, scratch } = *state else { return None };
    let want = if stage == 0 { 0 } else { r.min(buf.len() - r) };
    ensure(scratch.len() == want, || format!("scratch holds {} elements, expected {want}", scratch.len()))
}

fn native_saved_block<T: PartialEq + Clone + Debug>(ctx: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::CopyNative { r, stage, scratch, .. } = *state else { return None };
    if stage == 0 {
        return None;
    }
    let n = ctx.old.len();
    let saved = if r <= n - r { &ctx.old[..r] } else { &ctx.old[r..] };
    same_slices(scratch, saved, "scratch vs saved block of old buffer")
}

fn native_shifted_block<T: PartialEq + Clone + Debug>(
    ctx: &Context<'_, T>,
    state: &LoopState<'_, T>,
) -> Option<String> {
    let LoopState::CopyNative { r, stage, buf, .. } = *state else { return None };
    let n = buf.len();
    let old = ctx.old;
    match stage {
        1 => same_slices(buf, old, "buffer after saving"),
        2 if r <= n - r => same_slices(&buf[..n - r], &old[r..], "left-shifted block")
            .or_else(|| same_slices(&buf[n - r..], &old[n - r..], "untouched tail")),
        2 => same_slices(&buf[n - r..], &old[..r], "right-shifted block")
            .or_else(|| same_slices(&buf[..n - r], &old[..n - r], "untouched head")),
        _ => None,
    }
}

// rotation by three reversals

fn reverse_rotation_stages<T: PartialEq + Clone + Debug>(
    ctx: &Context<'_, T>,
    state: &LoopState<'_, T>,
) -> Option<String> {
    let LoopState::ReverseRotation { r, stage, buf } = *state else { return None };
    let old = ctx.old;
    match stage {
        0 => same_slices(buf, old, "entry"),
        1 => same_slices(&buf[..r], &reversed(&old[..r]), "first block reversed")
            .or_else(|| same_slices(&buf[r..], &old[r..], "second block untouched")),
        2 => same_slices(&buf[..r], &reversed(&old[..r]), "first block reversed")
            .or_else(|| same_slices(&buf[r..], &reversed(&old[r..]), "second block reversed")),
        _ => None,
    }
}

// in-place reversal

fn reverse_cursor_bounds<T: PartialEq + Clone + Debug>(_: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::Reverse { low, high, p, q, .. } = *state else { return None };
    let (low, high, p) = (low as isize, high as isize, p as isize);
    ensure(low <= p && p <= q + 2 && q + 2 <= high + 1, || {
        format!("low <= p <= q + 2 <= high + 1 fails: low={low} p={p} q={q} high={high}")
    })
}

fn reverse_mirror_cursor<T: PartialEq + Clone + Debug>(_: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::Reverse { low, high, p, q, .. } = *state else { return None };
    let want = high as isize + low as isize - 1 - p as isize;
    ensure(q == want, || format!("q = {q}, expected high + low - 1 - p = {want}"))
}

fn reverse_swapped_ends<T: PartialEq + Clone + Debug>(
    ctx: &Context<'_, T>,
    state: &LoopState<'_, T>,
) -> Option<String> {
    let LoopState::Reverse { low, high, p, q, buf } = *state else { return None };
    let mirror = |i: usize| high + low - 1 - i;
    for i in low..p {
        if ctx.old[i] != buf[mirror(i)] {
            return Some(format!("old[{i}] = {:?} but a[{}] = {:?}", ctx.old[i], mirror(i), buf[mirror(i)]));
        }
    }
    let upper_from = (q + 1).max(low as isize) as usize;
    for i in upper_from..high {
        if ctx.old[i] != buf[mirror(i)] {
            return Some(format!("old[{i}] = {:?} but a[{}] = {:?}", ctx.old[i], mirror(i), buf[mirror(i)]));
        }
    }
    None
}

fn reverse_frame<T: PartialEq + Clone + Debug>(ctx: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::Reverse { low, high, buf, .. } = *state else { return None };
    same_slices(&buf[..low], &ctx.old[..low], "prefix before low")
        .or_else(|| same_slices(&buf[high..], &ctx.old[high..], "suffix from high"))
}

fn reverse_post<T: PartialEq + Clone + Debug>(ctx: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::Reverse { low, high, buf, .. } = *state else { return None };
    same_slices(&buf[low..high], &reversed(&ctx.old[low..high]), "reversed slice")
}

// swapping two sections

fn sections_cursor_bounds<T: PartialEq + Clone + Debug>(
    _: &Context<'_, T>,
    state: &LoopState<'_, T>,
) -> Option<String> {
    let LoopState::SwapSections { low, high, d, x, z, .. } = *state else { return None };
    ensure(low <= x && x <= low + d && high - d <= z && z <= high, || {
        format!("cursors out of range: low={low} x={x} d={d} z={z} high={high}")
    })
}

fn sections_aligned<T: PartialEq + Clone + Debug>(_: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::SwapSections { low, high, d, x, z, .. } = *state else { return None };
    ensure(x - low == z - (high - d), || format!("x - low = {} but z - (high - d) = {}", x - low, z - (high - d)))
}

fn sections_partition<T: PartialEq + Clone + Debug>(ctx: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::SwapSections { low, high, d, x, z, buf } = *state else { return None };
    let old = ctx.old;
    same_slices(&buf[low..x], &old[high - d..z], "a[low..x) vs old[high-d..z)")
        .or_else(|| same_slices(&buf[x..high - d], &old[x..high - d], "a[x..high-d) untouched"))
        .or_else(|| same_slices(&buf[high - d..z], &old[low..x], "a[high-d..z) vs old[low..x)"))
        .or_else(|| same_slices(&buf[z..high], &old[z..high], "a[z..high) untouched"))
}

fn sections_frame<T: PartialEq + Clone + Debug>(ctx: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::SwapSections { low, high, buf, .. } = *state else { return None };
    same_slices(&buf[..low], &ctx.old[..low], "prefix before low")
        .or_else(|| same_slices(&buf[high..], &ctx.old[high..], "suffix from high"))
}

// recursive block swap

fn helper_pre<T: PartialEq + Clone + Debug>(ctx: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::SwapHelper { low, p, high, buf, .. } = *state else { return None };
    if ctx.at != Boundary::Enter {
        return None;
    }
    ensure(low <= p && p < high && high <= buf.len(), || {
        format!("0 <= low <= p < high <= n fails: low={low} p={p} high={high} n={}", buf.len())
    })
}

fn helper_post<T: PartialEq + Clone + Debug>(ctx: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::SwapHelper { low, p, high, buf, .. } = *state else { return None };
    let want = oracle_rotate(&ctx.old[low..high], (p - low) as i64);
    same_slices(&buf[low..high], &want, "a[low..high) vs rotated old slice")
}

fn helper_frame<T: PartialEq + Clone + Debug>(ctx: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::SwapHelper { low, high, buf, .. } = *state else { return None };
    same_slices(&buf[..low], &ctx.old[..low], "prefix before low")
        .or_else(|| same_slices(&buf[high..], &ctx.old[high..], "suffix from high"))
}

// iterative block swap

fn iter_bounds<T: PartialEq + Clone + Debug>(_: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::SwapIterative { low, p, high, buf, .. } = *state else { return None };
    ensure(low <= p && p <= high && high <= buf.len(), || {
        format!("0 <= low <= p <= high <= n fails: low={low} p={p} high={high}")
    })
}

fn iter_empty_iff<T: PartialEq + Clone + Debug>(_: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::SwapIterative { low, p, high, .. } = *state else { return None };
    ensure((low == p) == (p == high), || format!("low = p <=> p = high fails: low={low} p={p} high={high}"))
}

fn iter_rotated_ends<T: PartialEq + Clone + Debug>(ctx: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::SwapIterative { low, high, buf, .. } = *state else { return None };
    first_mismatch(0..low, buf, |i| ctx.target[i].clone(), "left part in place")
        .or_else(|| first_mismatch(high..buf.len(), buf, |i| ctx.target[i].clone(), "right part in place"))
}

fn iter_pending_middle<T: PartialEq + Clone + Debug>(ctx: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::SwapIterative { low, p, high, buf, .. } = *state else { return None };
    if p - low >= high - low {
        return None;
    }
    let middle = oracle_rotate(&buf[low..high], (p - low) as i64);
    same_slices(&middle, &ctx.target[low..high], "rot(a[low..high), p - low) vs target")
}

// modular visit

struct Cycles {
    n: usize,
    step: usize,
    tau: usize,
}

fn cycles(n: usize, r: usize) -> Cycles {
    let step = n - r;
    let g = crate::modular::gcd_sub(n, step).expect("0 < step <= n");
    Cycles { n, step, tau: n / g }
}

fn modulo_moved_range<T: PartialEq + Clone + Debug>(_: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::ModuloOuter { moved, buf, .. } = *state else { return None };
    ensure(moved <= buf.len(), || format!("moved = {moved} > n = {}", buf.len()))
}

fn modulo_start_range<T: PartialEq + Clone + Debug>(_: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::ModuloOuter { r, start, buf, .. } = *state else { return None };
    let c = cycles(buf.len(), r);
    let g = c.n / c.tau;
    ensure(start <= g, || format!("start = {start} > gcd(n, n - r) = {g}"))
}

fn modulo_moved_per_cycle<T: PartialEq + Clone + Debug>(
    _: &Context<'_, T>,
    state: &LoopState<'_, T>,
) -> Option<String> {
    let LoopState::ModuloOuter { r, start, moved, buf } = *state else { return None };
    let c = cycles(buf.len(), r);
    ensure(moved == start * c.tau, || format!("moved = {moved}, expected start * tau = {}", start * c.tau))
}

fn modulo_finished_cycles<T: PartialEq + Clone + Debug>(
    ctx: &Context<'_, T>,
    state: &LoopState<'_, T>,
) -> Option<String> {
    let (r, start, buf) = match *state {
        LoopState::ModuloOuter { r, start, buf, .. } | LoopState::ModuloInner { r, start, buf, .. } => (r, start, buf),
        _ => return None,
    };
    let c = cycles(buf.len(), r);
    for s in 0..start {
        for i in 0..c.tau {
            let p = mp_unchecked(c.n, c.step, s, i);
            if buf[p] != ctx.target[p] {
                return Some(format!("cycle {s} position {i}: a[{p}] = {:?}, expected {:?}", buf[p], ctx.target[p]));
            }
        }
    }
    None
}

fn inner_offset(c: &Cycles, start: usize, moved: usize) -> Option<usize> {
    moved.checked_sub(start * c.tau)
}

fn inner_progress<T: PartialEq + Clone + Debug>(_: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::ModuloInner { r, start, moved, buf, .. } = *state else { return None };
    let c = cycles(buf.len(), r);
    let offset = inner_offset(&c, start, moved);
    ensure(offset.is_some_and(|k| 0 < k && k <= c.tau), || {
        format!("0 < moved - start * tau <= tau fails: moved={moved} start={start} tau={}", c.tau)
    })
}

fn inner_cursor<T: PartialEq + Clone + Debug>(_: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::ModuloInner { r, start, moved, v, buf, .. } = *state else { return None };
    let c = cycles(buf.len(), r);
    let k = inner_offset(&c, start, moved)?;
    let want = mp_unchecked(c.n, c.step, start, k);
    ensure(v == want, || format!("v = {v}, expected mp(start, moved - start * tau) = {want}"))
}

fn inner_displaced<T: PartialEq + Clone + Debug>(ctx: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::ModuloInner { v, displaced, .. } = *state else { return None };
    ensure(*displaced == ctx.old[v], || format!("displaced = {displaced:?}, expected old[{v}] = {:?}", ctx.old[v]))
}

fn inner_cycle_prefix<T: PartialEq + Clone + Debug>(ctx: &Context<'_, T>, state: &LoopState<'_, T>) -> Option<String> {
    let LoopState::ModuloInner { r, start, moved, buf, .. } = *state else { return None };
    let c = cycles(buf.len(), r);
    let visited = inner_offset(&c, start, moved)?;
    for j in 1..=visited.min(c.tau) {
        let q = mp_unchecked(c.n, c.step, start, j);
        if buf[q] != ctx.target[q] {
            return Some(format!("cycle {start} step {j}: a[{q}] = {:?}, expected {:?}", buf[q], ctx.target[q]));
        }
    }
    None
}
