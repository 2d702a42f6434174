//! Test oracles for plotforge, written without reference to its internals.
//!
//! Nothing here depends on the library under test: tick ladders are
//! enumerated by brute force, calendar arithmetic uses closed-form civil
//! day counts, and EPS output is checked by a small PostScript interpreter.

pub mod civil;
pub mod ps;
pub mod ticks;
