//! Analytical benchmark for mobile computation offloading.
//!
//! Delay, handset energy and monetary cost of running an application's
//! work in-house or on one of several offloading architectures, plus the
//! grading schemes that rank them, a multicast business model and an
//! EPS-AKA state machine.
//!
//! ```
//! use mcc_core::{builtin_catalog, evaluate_cell, ArchitectureKind, EvalOptions};
//!
//! let catalog = builtin_catalog();
//! let app = catalog.application(1).unwrap();
//! let cell = evaluate_cell(ArchitectureKind::Cloudlet, app, &catalog, &EvalOptions::default()).unwrap();
//! assert_eq!(cell.delay_ms(), Some(20010));
//! ```

pub mod aka;
pub mod business;
pub mod catalog;
pub mod energy;
pub mod error;
pub mod golden;
pub mod path;
pub mod ranking;
pub mod report;
pub mod scenario;

pub use catalog::{builtin_catalog, ApplicationProfile, ArchitectureKind, Catalog};
pub use energy::{evaluate_cell, EvalOptions, MetricsRecord};
pub use error::{Error, Result};
pub use path::DelayArithmetic;
pub use ranking::{evaluate_matrix, rank, Scheme};
pub use scenario::{run_scenario, Report, ScenarioConfig};
