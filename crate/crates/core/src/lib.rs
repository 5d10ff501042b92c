//! In-place rotation of sequences.
//!
//! Four classic algorithms (copy, reversal, block swapping and modular
//! visit), each instrumented with exact operation [`Counters`], plus:
//!
//! * [`modular`]: the index arithmetic behind rotations (wrap, gcd, cycle maps),
//! * [`verify`]: a reference oracle, brute-force lemma checkers and
//!   invariant-checked execution of every algorithm,
//! * [`bench`]: timing and operation-count sweeps with CSV output.
//!
//! ```
//! use rotkit::{rotate, Algorithm, Counters};
//!
//! let mut letters = *b"ABCDEF";
//! let mut counters = Counters::default();
//! rotate(&mut letters, 2, Algorithm::SwapIterative, &mut counters).unwrap();
//! assert_eq!(&letters, b"CDEFAB");
//! assert_eq!(counters.swaps, 4);
//! ```

pub mod bench;
mod counters;
mod error;
pub mod modular;
pub mod probe;
pub mod rotate;
pub mod verify;

pub use counters::Counters;
pub use error::{Error, Result};
pub use modular::CycleDecomposition;
pub use rotate::{normalize, rotate, Algorithm, RotationRequest};
