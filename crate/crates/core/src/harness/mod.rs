//! Example reproduction, randomized campaigns, reports and rendering.

pub mod examples;
mod fuzz;
mod instance;
mod report;
mod reproduce;
mod svg;

pub use examples::{worked_example, NamedCell, PublishedGammas, WorkedExample};
pub use fuzz::{fuzz, fuzz_with, instance_factors, FuzzConfig, InstanceShape};
pub use instance::theorem_slack;
pub use report::{
    FailureRef, GammaSource, InstanceReport, InstanceStatus, RunKind, RunReport, Summary,
    REPORT_SCHEMA,
};
pub use reproduce::{
    golden_colors, max_maroon_fibers, reproduce_example, ExampleConfig, ExampleRun,
    ReproduceOptions,
};
pub use svg::render_svg;
