//! Link-level performance analysis of a millimetre-wave cellular uplink with
//! free-space-optical (FSO) backhaul.
//!
//! The library models the two hops of the link separately and composes them:
//!
//! - [`cellular`] — the mmWave access hop: path gain, correlated Gamma SNRs
//!   under partial relay selection with outdated CSI, co-channel interference,
//!   exponential blockage, and closed-form SINR statistics.
//! - [`fso`] — the optical backhaul hop: Beers-Lambert path loss, Gaussian-beam
//!   pointing-error geometry, Double-Generalized-Gamma turbulence, and the
//!   unified (heterodyne / IM-DD) SNR statistics.
//! - [`hpa`] — nonlinear power-amplifier models (SEL, TWTA, SSPA) under
//!   Bussgang linearization, the distortion factor, and the backhaul rate.
//! - [`e2e`] — end-to-end SINDR, outage, diversity, error probability,
//!   achievable rate and rate coverage of the decode-and-forward composition.
//! - [`specfun`] — the special functions every closed form needs, including a
//!   numerical Meijer-G evaluator based on Mellin-Barnes contour integration.
//! - [`mc`] / [`sweep`] — deterministic, parallel Monte-Carlo estimation and
//!   parameter-sweep execution.
//! - [`scenario`] — declarative scenario files (TOML/JSON) with canned
//!   configurations.
//!
//! Every closed form is cross-validated against Monte-Carlo simulation; the
//! samplers and the analytic evaluators are deliberately independent code
//! paths.

pub mod cellular;
pub mod e2e;
pub mod error;
pub mod fso;
pub mod hpa;
pub mod mc;
pub mod quad;
pub mod scenario;
pub mod specfun;
pub mod sweep;

pub use error::{Error, Result};
