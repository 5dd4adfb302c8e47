//! Library half of the `relkit` command line tool: the model file format,
//! the term language, evaluation and text rendering.

pub mod eval;
pub mod format;
pub mod render;
pub mod term;
