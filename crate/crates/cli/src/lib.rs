//! Command-line front end, JSON output and SVG rendering for
//! [`crosscap_core`].

mod app;
pub mod json;
pub mod render;

pub use app::{run, MAX_PATH_STEPS};
