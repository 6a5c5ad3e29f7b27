//! Group-theoretic laboratory and solver for the 2×2×2 Varikon Box, with
//! the supporting 15-Puzzle parity machinery.

pub mod error;
pub mod fifteen;
pub mod group;
pub mod lehmer;
pub mod perm;
pub mod report;
pub mod solver;
pub mod varikon;
pub mod verify;
pub mod word;
pub mod words;

pub use error::{ConfigError, PermError, SolveError, WordError};
pub use fifteen::{FifteenConfig, FifteenMove};
pub use group::{DistanceTable, GroupElement, VarikonGroup};
pub use perm::{generate, Parity, Perm};
pub use report::{Check, Report};
pub use solver::{Method, Relabel, SetupPolicy, Solution, Solver, TargetMode};
pub use varikon::{Move, ParityVector, Rotation, VarikonConfig, Word};
pub use words::{Letter, WordTable};
