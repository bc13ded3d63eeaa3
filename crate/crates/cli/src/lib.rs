//! Suite registry, commuting-diagram engine, fixture loading and report
//! formats behind the `arrowcat` command-line tool.

pub mod diagram;
pub mod fixtures;
pub mod report;
pub mod suites;

pub use diagram::{check_diagram, Composable, Diagram, DiagramError};
pub use fixtures::{load_instances, FixtureSet, LoadError};
pub use report::{CheckRecord, SuiteReport};
pub use suites::{registry, run_suite, SuiteDef, SuiteParams, UnknownSuite};
