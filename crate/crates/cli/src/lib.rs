pub mod cli;
pub mod linkfile;
pub mod profile;
pub mod ranges;
pub mod report;
pub mod suites;

pub use cli::{run, Outcome};
