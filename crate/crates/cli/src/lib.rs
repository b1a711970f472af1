//! Command-line front end: argument handling, JSON documents and text rendering.

pub mod commands;
pub mod document;
pub mod render;

pub use document::{Payload, ReportDocument, SCHEMA_VERSION};
pub use render::{render_text, width_from_env, WIDTH_VAR};
