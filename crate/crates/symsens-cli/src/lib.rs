//! IO companion to `symsens-core`: output rendering, the truth-table file
//! format, and the multithreaded census scan. The binary in `main.rs` is a
//! thin driver over these modules.

pub mod render;
pub mod scan;
pub mod ttfile;
