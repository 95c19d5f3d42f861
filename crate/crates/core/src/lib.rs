//! Simulator and analysis chain for a 512-pixel linear SPAD detector.
//!
//! The crate has two halves that close a loop on each other:
//!
//! * **Simulation** — [`thermal`] generates photon arrival times for two
//!   beams split from one thermal source (with configurable coherence time,
//!   polarization and per-beam path delay), and [`detector`] turns those
//!   arrivals into detector hits: beam profile, PDE, timing jitter, per-pixel
//!   skew, dark counts with hot pixels, inter-pixel cross-talk, dead time and
//!   TDC quantization. Hits are packed into the cycle-structured 32-bit word
//!   stream defined by [`binformat`], together with a ground-truth sidecar.
//! * **Analysis** — [`calibration`] recovers TDC bin widths and per-pixel
//!   skews from data, and [`analysis`] implements the measurement chain:
//!   occupancy/DCR statistics, pixel-pair time-difference histograms,
//!   Gaussian peak fitting, cross-talk probability and distance scans, HBT
//!   contrast/coherence and intensity-scaling studies.
//!
//! Because the analysis runs on simulated data with known injected truth,
//! every estimator can be validated end to end; [`accept`] bundles those
//! closed-loop checks into a pass/fail suite (also exposed as the
//! `lsp2sim verify` subcommand).

pub mod accept;
pub mod analysis;
pub mod binformat;
pub mod calibration;
pub mod detector;
pub mod error;
pub mod plot;
pub mod report;
pub mod rng;
pub mod run;
pub mod scenario;
pub mod sidecar;
pub mod thermal;

pub use binformat::{FileHeader, FileReader, FileWriter, HitRecord};
pub use calibration::TdcCalibration;
pub use error::{Error, Result};
pub use scenario::Scenario;
pub use thermal::{EventKind, SourceConfig, TruthEvent};

/// Tool version stamped into reports and output files.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
