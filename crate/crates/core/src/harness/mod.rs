//! Graph sources and batch verification runs.

pub mod enumerate;
pub mod run;
pub mod sample;
