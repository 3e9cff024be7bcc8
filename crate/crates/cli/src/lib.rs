//! IO companion for the alcove core: JSON output schemas, deterministic SVG
//! rendering of the plane tilings, and the command-line application.

pub mod app;
pub mod json;
pub mod render;
