use std::fmt::{self, Debug};

use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::probe::{Boundary, LoopState, Probe};
use crate::rotate::Algorithm;

use super::invariants::{invariants, Context, Invariant, Scope};
use super::oracle::oracle_rotate;

/// Largest buffer [`run_checked`] accepts; invariant evaluation is quadratic.
pub const DEFAULT_CHECK_LIMIT: usize = 256;

/// First invariant found false during a checked run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantViolation {
    pub algorithm: Algorithm,
    pub invariant_id: &'static str,
    /// Loop iteration of the innermost active procedure, 0 at entry.
    pub iteration: u64,
    pub detail: String,
}

impl fmt::Display for InvariantViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: invariant {} violated at iteration {}: {}",
            self.algorithm, self.invariant_id, self.iteration, self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CheckError {
    #[error("{0}")]
    Violation(InvariantViolation),
    #[error(transparent)]
    Rejected(#[from] Error),
}

struct Frame<T> {
    old: Vec<T>,
    iteration: u64,
    inner_iteration: u64,
}

struct Checker<T> {
    algorithm: Algorithm,
    registry: Vec<Invariant<T>>,
    frames: Vec<Frame<T>>,
    target: Vec<T>,
    violation: Option<InvariantViolation>,
}

impl<T: PartialEq + Clone + Debug> Checker<T> {
    fn new(algorithm: Algorithm) -> Self {
        Checker { algorithm, registry: invariants(), frames: Vec::new(), target: Vec::new(), violation: None }
    }

    fn evaluate(&mut self, at: Boundary, state: &LoopState<'_, T>, iteration: u64) {
        let scope = Scope::of(state);
        let frame = self.frames.last().expect("a frame is active");
        let ctx = Context { at, old: &frame.old, target: &self.target };
        for inv in self.registry.iter().filter(|inv| inv.scope == scope) {
            if inv.at_exit_only && at != Boundary::Leave {
                continue;
            }
            if let Some(detail) = (inv.check)(&ctx, state) {
                self.violation =
                    Some(InvariantViolation { algorithm: self.algorithm, invariant_id: inv.id, iteration, detail });
                return;
            }
        }
    }
}

fn buffer<'a, T>(state: &LoopState<'a, T>) -> &'a [T] {
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

fn rotation_amount<T>(state: &LoopState<'_, T>) -> usize {
    match *state {
        LoopState::Copy { r, .. }
        | LoopState::CopyNative { r, .. }
        | LoopState::ReverseRotation { r, .. }
        | LoopState::SwapIterative { r, .. }
        | LoopState::ModuloOuter { r, .. }
        | LoopState::ModuloInner { r, .. } => r,
        LoopState::SwapHelper { low, p, .. } => p - low,
        LoopState::Reverse { .. } | LoopState::SwapSections { .. } => 0,
    }
}

impl<T: PartialEq + Clone + Debug> Probe<T> for Checker<T> {
    fn observe(&mut self, at: Boundary, state: LoopState<'_, T>) {
        if self.violation.is_some() {
            return;
        }
        let iteration = match (&state, at) {
            (LoopState::ModuloInner { .. }, _) => {
                let frame = self.frames.last_mut().expect("inner loop runs inside the outer loop");
                frame.inner_iteration += 1;
                frame.inner_iteration
            }
            (_, Boundary::Enter) => {
                let buf = buffer(&state);
                if self.frames.is_empty() {
                    self.target = oracle_rotate(buf, rotation_amount(&state) as i64);
                }
                self.frames.push(Frame { old: buf.to_vec(), iteration: 0, inner_iteration: 0 });
                0
            }
            (_, Boundary::Step) => {
                let frame = self.frames.last_mut().expect("a frame is active");
                frame.iteration += 1;
                frame.inner_iteration = 0;
                frame.iteration
            }
            (_, Boundary::Leave) => self.frames.last().expect("a frame is active").iteration,
        };
        self.evaluate(at, &state, iteration);
        if at == Boundary::Leave && !matches!(state, LoopState::ModuloInner { .. }) {
            self.frames.pop();
        }
    }
}

/// Runs `algorithm` on `buf` evaluating every registered invariant at every
/// loop boundary, then compares the result against the oracle.
///
/// Buffers longer than [`DEFAULT_CHECK_LIMIT`] are rejected.
pub fn run_checked<T: PartialEq + Clone + Debug>(
    algorithm: Algorithm,
    buf: &mut [T],
    r: usize,
) -> Result<Counters, CheckError> {
    run_checked_with_limit(algorithm, buf, r, DEFAULT_CHECK_LIMIT)
}

pub fn run_checked_with_limit<T: PartialEq + Clone + Debug>(
    algorithm: Algorithm,
    buf: &mut [T],
    r: usize,
    limit: usize,
) -> Result<Counters, CheckError> {
    let n = buf.len();
    if n > limit {
        return Err(Error::CheckLimit { n, limit }.into());
    }
    let expected = if r < n { Some(oracle_rotate(buf, r as i64)) } else { None };
    let mut counters = Counters::default();
    let mut checker = Checker::new(algorithm);
    algorithm.apply_probed(buf, r, &mut counters, &mut checker)?;
    if let Some(violation) = checker.violation {
        return Err(CheckError::Violation(violation));
    }
    if let Some(expected) = expected {
        if buf != expected.as_slice() {
            return Err(CheckError::Violation(InvariantViolation {
                algorithm,
                invariant_id: "rotation.postcondition",
                iteration: 0,
                detail: format!("result {buf:?} differs from oracle {expected:?}"),
            }));
        }
    }
    Ok(counters)
}
