//! Driver for the qtbounds library: code specs, random codes, sweeps,
//! rate ratios, the golden corpus and structural audits.

pub mod audit;
pub mod evaluate;
pub mod golden;
pub mod random;
pub mod report;
pub mod spec;
pub mod sweep;

pub use evaluate::{ComparisonRow, Evaluator, Outcome, Pattern};
pub use spec::{load_spec, CodeSpec, SpecError};
