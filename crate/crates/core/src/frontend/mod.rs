//! Text input and batch verification: the expression parser, instance files,
//! suites and reports.

mod config;
mod parse;
mod report;
mod suite;

pub use config::{
    build_instance, load_instance, load_instance_str, Instance, InstanceConfig, DEFAULT_DEGREE_BOUND, DEFAULT_SEED,
};
pub use parse::{parse_expr, parse_field, parse_poly, Mode, Parsed};
pub use report::{Check, InstanceSummary, Report, Verdict};
pub use suite::{
    autos_report, build_report, divcheck_report, inner_report, nucleus_report, parse_which, run_suite, SUITES,
};
