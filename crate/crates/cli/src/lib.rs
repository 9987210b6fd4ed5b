//! Library side of the `llvkit` command: spec parsing, dispatch, and the
//! self-test suite.

pub mod oracle;
pub mod run;
pub mod spec;
pub mod suite;
