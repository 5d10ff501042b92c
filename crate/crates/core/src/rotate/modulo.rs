use crate::counters::Counters;
use crate::error::Result;
use crate::probe::{Boundary, LoopState, NoProbe, Probe};

use super::needs_work;

/// Rotation by modular visit ("juggling").
///
/// Follows each cycle of the permutation `k ↦ (k + n − r) mod n`, carrying one
/// displaced element and dropping every element directly into its final
/// slot: exactly `n` buffer writes, `gcd(n, n − r)` outer iterations and
/// `n / gcd(n, n − r)` inner iterations each.
pub fn rotate_modulo<T: Clone>(buf: &mut [T], r: usize, counters: &mut Counters) -> Result<()> {
    modulo_probed(buf, r, counters, &mut NoProbe)
}

pub(crate) fn modulo_probed<T: Clone, P: Probe<T>>(
    buf: &mut [T],
    r: usize,
    counters: &mut Counters,
    probe: &mut P,
) -> Result<()> {
    let n = buf.len();
    if !needs_work(n, r)? {
        return Ok(());
    }
    let step = n - r;
    let (mut start, mut moved) = (0, 0);
    probe.observe(Boundary::Enter, LoopState::ModuloOuter { r, start, moved, buf });
    while moved != n {
        let mut displaced = buf[start].clone();
        counters.reads += 1;
        counters.hold(1);
        let mut v = start;
        loop {
            v += step;
            if v >= n {
                v -= n;
            }
            std::mem::swap(&mut buf[v], &mut displaced);
            counters.reads += 1;
            counters.writes += 1;
            moved += 1;
            probe.observe(Boundary::Step, LoopState::ModuloInner { r, start, moved, v, displaced: &displaced, buf });
            if v == start {
                break;
            }
        }
        start += 1;
        probe.observe(Boundary::Step, LoopState::ModuloOuter { r, start, moved, buf });
    }
    probe.observe(Boundary::Leave, LoopState::ModuloOuter { r, start, moved, buf });
    Ok(())
}
