use serde::Serialize;

/// Exact operation tallies for one rotation.
///
/// `reads` and `writes` count element loads and stores on arrays: the
/// buffer being rotated and, for the copy algorithms, the scratch array.
/// Single-element temporaries (a swap's temporary, the element carried
/// around a cycle) are tracked by `aux_peak` only.
///
/// A swap counts as one `swaps`, two `reads` and two `writes`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counters {
    pub reads: u64,
    pub writes: u64,
    pub swaps: u64,
    pub aux_peak: u64,
    pub depth_max: u64,
}

impl Counters {
    #[inline]
    pub(crate) fn swap(&mut self) {
        self.swaps += 1;
        self.reads += 2;
        self.writes += 2;
    }

    #[inline]
    pub(crate) fn moved(&mut self, count: usize) {
        self.reads += count as u64;
        self.writes += count as u64;
    }

    #[inline]
    pub(crate) fn hold(&mut self, slots: usize) {
        self.aux_peak = self.aux_peak.max(slots as u64);
    }

    #[inline]
    pub(crate) fn depth(&mut self, depth: usize) {
        self.depth_max = self.depth_max.max(depth as u64);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_accounting() {
        let mut c = Counters::default();
        c.swap();
        c.swap();
        assert_eq!((c.swaps, c.reads, c.writes), (2, 4, 4));
    }

    #[test]
    fn peaks_are_monotone() {
        let mut c = Counters::default();
        c.hold(3);
        c.hold(1);
        c.depth(5);
        c.depth(2);
        assert_eq!((c.aux_peak, c.depth_max), (3, 5));
    }
}
