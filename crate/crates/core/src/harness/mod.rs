//! Executable statements about SSI and PSS, evaluated over module families.

mod checks;
mod family;
mod instance;
mod report;
mod witness;

pub use checks::{find_check, list_checks, Check, Mode, Outcome, Verdict};
pub use family::generate_family;
pub use instance::{Instance, MeasuredGraph};
pub use report::{
    build_instances, run_check, run_on_instances, run_suite, select_checks, CheckReport,
    CheckResult, SuiteOptions, Summary,
};
pub use witness::{replay, Fact, Flag, Witness};
