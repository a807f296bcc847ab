//! Entanglement degradation of a maximally entangled pair of cavity modes
//! when one cavity moves along a trajectory of inertial and uniformly
//! accelerated segments.
//!
//! The crate is organised bottom-up:
//!
//! - [`units`]: cavity parameters, inertial and Rindler spectra, SI conversion.
//! - [`transform`]: perturbative Bogoliubov transforms, composition,
//!   inversion and identity checks.
//! - [`scenario`]: trajectories, the effective transform of a trip and the
//!   order-h² negativity.
//! - [`closed_forms`]: polylogarithm closed forms for the massless trips and
//!   the large-mass formula.
//! - [`sweep`]: parameter grids, presets and CSV output.
//! - [`estimate`]: peak degradation for physical accelerations and cavities.
//! - [`verify`]: named invariant checks with residuals and thresholds.
//!
//! ```
//! use cavity_entanglement::{closed_forms, units::CavityConfig, scenario::Scenario};
//!
//! let cfg = CavityConfig::massless(0.01, 1, 256).unwrap();
//! let period = cavity_entanglement::units::acceleration_period(&cfg).unwrap();
//! let general = Scenario::one_way(cfg, period / 2.0).negativity().unwrap();
//! let phases = closed_forms::PhaseTuple::from_angles(std::f64::consts::PI, 0.0, 0.0);
//! let closed = closed_forms::negativity_one_way(1, 0.01, &phases).unwrap();
//! assert!((general.deficit_scaled - closed.deficit_scaled).abs() < 1e-8);
//! ```

pub mod closed_forms;
pub mod error;
pub mod estimate;
pub mod scenario;
pub mod series;
pub mod sweep;
pub mod transform;
pub mod units;
pub mod verify;

pub use error::{Error, Result};
