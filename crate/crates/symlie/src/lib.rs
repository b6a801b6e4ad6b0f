//! Command-line front end, JSON formats and verification suites for
//! `symlie-core`.

pub mod cli;
pub mod json;
pub mod session;
pub mod suites;

pub use cli::run;
pub use session::Session;
