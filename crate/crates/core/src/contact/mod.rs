//! The contact process on a multigraph: next-event simulation, replayable
//! event logs with forward and dual reachability, and the lit predicate.

mod engine;
mod lit;
mod log;
mod output;

pub use engine::{
    extinction_time, first_transmission_before_recovery, simulate, ContactConfig, DensitySample,
    Extinction, SimOutcome, TrajectoryEvent, TrajectorySink, DEFAULT_CAP,
};
pub use lit::{is_lit, is_lit_with, LIT_CONSTANT};
pub use log::EventLog;
pub use output::{write_density_csv, TextTrajectory};
