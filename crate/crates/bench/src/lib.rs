//! Shared fixtures for the criterion benchmarks.

pub use orbitwist_core as core;
