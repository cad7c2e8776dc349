//! Instance files, verification suites and reports behind the `scalext` binary.

pub mod format;
pub mod json;
pub mod report;
pub mod suites;

pub use format::{export_instance, load_instance, parse_instance, FormatError, InstanceFile};
pub use report::Report;
pub use suites::{run_suite, SuiteRun, SUITES};

use scalext_core::catalog::{instance, InstanceDescriptor};

/// A catalog name, or else a path to an instance file.
pub fn resolve_instance(name_or_path: &str) -> Result<InstanceDescriptor, FormatError> {
    match instance(name_or_path) {
        Some(d) => Ok(d),
        None => load_instance(&std::fs::read_to_string(name_or_path)?),
    }
}
