//! Reference oracle, brute-force lemma checks and invariant-checked runs.
//!
//! Nothing here shares code with [`crate::rotate`] except the algorithms
//! under test themselves: the oracle slices and concatenates, and the lemma
//! checkers enumerate every small instance.

mod checked;
mod invariants;
mod lemmas;
mod oracle;

pub use checked::{run_checked, run_checked_with_limit, CheckError, InvariantViolation, DEFAULT_CHECK_LIMIT};
pub use invariants::{registered_invariants, Scope};
pub use lemmas::{
    check_lemma_invert_mp, check_lemma_rev_cat, check_lemma_rot_swap, check_rot_pointwise, check_wrap_bounds, Failure,
    LemmaId, LemmaReport,
};
pub use oracle::{concat, oracle_rotate, reversed};
