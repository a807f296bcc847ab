//! Cavity parameters, mode spectra and physical-unit conversion.
//!
//! Natural units (`c = ħ = 1`) are used everywhere except in
//! [`physical_to_dimensionless`], which is the one place SI quantities enter.
//! A cavity is described by its proper length `delta`, the dimensionless
//! mass `M = μ·delta` and the dimensionless acceleration `h`, where the
//! proper acceleration at the cavity centre is `h / delta`. Positive `h`
//! accelerates toward increasing `x`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Speed of light in vacuum, m/s (exact).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;

/// Default bound on `|k·h|` below which the order-h² treatment is trusted.
pub const DEFAULT_PERTURBATIVE_THRESHOLD: f64 = 0.1;
/// Upper bound on `h·M²` for the massive expansion.
pub const MASSIVE_HM2_BOUND: f64 = 100.0;

/// Parameters of one cavity run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityConfig {
    /// Proper cavity length, > 0.
    pub delta: f64,
    /// Dimensionless mass `M = μ·delta`, ≥ 0.
    pub mass: f64,
    /// Dimensionless acceleration, `|h| < 2`.
    pub h: f64,
    /// Excited mode index, ≥ 1.
    pub k: usize,
    /// Mode truncation, ≥ k + 1.
    pub n_max: usize,
}

impl CavityConfig {
    pub fn new(delta: f64, mass: f64, h: f64, k: usize, n_max: usize) -> Result<Self> {
        let cfg = CavityConfig {
            delta,
            mass,
            h,
            k,
            n_max,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Massless cavity of unit length.
    pub fn massless(h: f64, k: usize, n_max: usize) -> Result<Self> {
        Self::new(1.0, 0.0, h, k, n_max)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.delta > 0.0 && self.delta.is_finite()) {
            return Err(Error::domain(format!("delta must be > 0, got {}", self.delta)));
        }
        if !(self.mass >= 0.0 && self.mass.is_finite()) {
            return Err(Error::domain(format!("M must be >= 0, got {}", self.mass)));
        }
        if !(self.h.abs() < 2.0) {
            return Err(Error::domain(format!("|h| must be < 2, got {}", self.h)));
        }
        if self.k == 0 {
            return Err(Error::domain("mode index k must be >= 1"));
        }
        if self.n_max < self.k + 1 {
            return Err(Error::domain(format!(
                "n_max = {} must be at least k + 1 = {}",
                self.n_max,
                self.k + 1
            )));
        }
        Ok(())
    }

    pub fn is_massless(&self) -> bool {
        self.mass == 0.0
    }

    pub fn validity(&self) -> ValidityReport {
        ValidityReport::evaluate(self.k, self.h, self.mass)
    }
}

/// Regime flags for a parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValidityReport {
    /// `|k·h|` below the perturbative threshold.
    pub perturbative_ok: bool,
    /// `|h|·M² ≤ 100`.
    pub massive_ok: bool,
    /// `|h| < 2`.
    pub h_bound_ok: bool,
}

impl ValidityReport {
    pub fn evaluate(k: usize, h: f64, mass: f64) -> Self {
        Self::with_threshold(k, h, mass, DEFAULT_PERTURBATIVE_THRESHOLD)
    }

    pub fn with_threshold(k: usize, h: f64, mass: f64, threshold: f64) -> Self {
        ValidityReport {
            perturbative_ok: (k as f64 * h).abs() < threshold,
            massive_ok: h.abs() * mass * mass <= MASSIVE_HM2_BOUND,
            h_bound_ok: h.abs() < 2.0,
        }
    }

    pub fn all_ok(&self) -> bool {
        self.perturbative_ok && self.massive_ok && self.h_bound_ok
    }
}

fn check_mode(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::domain("mode index must be >= 1"))
    } else {
        Ok(())
    }
}

/// Inertial frequency `ω_n = √(M² + π²n²) / δ`.
pub fn mode_frequency(n: usize, cfg: &CavityConfig) -> Result<f64> {
    check_mode(n)?;
    let pn = PI * n as f64;
    Ok(cfg.mass.hypot(pn) / cfg.delta)
}

/// `atanh(x) / x`, continuous through `x = 0`.
fn atanh_ratio(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 + x2 / 3.0 + x2 * x2 / 5.0 + x2 * x2 * x2 / 7.0
    } else {
        x.atanh() / x
    }
}

fn check_rindler(cfg: &CavityConfig) -> Result<()> {
    if !(cfg.h.abs() < 2.0) {
        return Err(Error::domain(format!("|h| must be < 2, got {}", cfg.h)));
    }
    if !cfg.is_massless() {
        return Err(Error::Unsupported(
            "Rindler spectrum is only available for a massless field".into(),
        ));
    }
    Ok(())
}

/// Frequency of Rindler mode `n` with respect to proper time at the cavity
/// centre: `Ω̃_n = π|h|n / [2δ·atanh(|h|/2)]`. At `h = 0` this is the
/// inertial value `πn/δ`.
pub fn rindler_frequency(n: usize, cfg: &CavityConfig) -> Result<f64> {
    check_mode(n)?;
    check_rindler(cfg)?;
    Ok(PI * n as f64 / (cfg.delta * atanh_ratio(cfg.h.abs() / 2.0)))
}

/// Proper-time period of uniformly accelerated evolution,
/// `2δ·atanh(h/2)/(h/2)`; equals `2π/Ω̃_1`.
pub fn acceleration_period(cfg: &CavityConfig) -> Result<f64> {
    check_rindler(cfg)?;
    Ok(2.0 * cfg.delta * atanh_ratio(cfg.h.abs() / 2.0))
}

/// `ω_1 … ω_{n_max}`.
pub fn inertial_spectrum(cfg: &CavityConfig) -> Vec<f64> {
    (1..=cfg.n_max)
        .map(|n| cfg.mass.hypot(PI * n as f64) / cfg.delta)
        .collect()
}

/// `Ω̃_1 … Ω̃_{n_max}` (massless only).
pub fn rindler_spectrum(cfg: &CavityConfig) -> Result<Vec<f64>> {
    let base = rindler_frequency(1, cfg)?;
    Ok((1..=cfg.n_max).map(|n| base * n as f64).collect())
}

/// `ω_a − ω_b` computed without cancellation for large `M`.
pub fn frequency_gap(a: usize, b: usize, mass: f64, delta: f64) -> f64 {
    let (pa, pb) = (PI * a as f64, PI * b as f64);
    let (wa, wb) = (mass.hypot(pa), mass.hypot(pb));
    (pa - pb) * (pa + pb) / (wa + wb) / delta
}

/// How the transverse structure of the trapped quanta is specified.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Quanta {
    /// Massless field with purely longitudinal momentum (`M = 0`).
    Longitudinal,
    /// Massive quanta of the given rest mass in kg.
    Mass(f64),
    /// Massless quanta whose transverse momentum corresponds to this
    /// wavelength in metres; it acts as an effective (1+1)-d mass.
    TransverseWavelength(f64),
}

impl Quanta {
    /// Builds from optional CLI-style inputs; giving both is an error.
    pub fn from_options(mass: Option<f64>, wavelength: Option<f64>) -> Result<Self> {
        match (mass, wavelength) {
            (Some(_), Some(_)) => Err(Error::argument(
                "give either a mass or a transverse wavelength, not both",
            )),
            (Some(m), None) => Ok(Quanta::Mass(m)),
            (None, Some(l)) => Ok(Quanta::TransverseWavelength(l)),
            (None, None) => Ok(Quanta::Longitudinal),
        }
    }
}

/// Dimensionless parameters derived from a laboratory setup.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessParams {
    pub h: f64,
    pub mass: f64,
    pub validity: ValidityReport,
}

/// Converts acceleration (m/s²), cavity length (m) and the quanta
/// description into `(h, M)`.
///
/// `h = a·δ/c²`; `M = (m·c/ħ)·δ` for massive quanta and `M = (2π/λ)·δ` for
/// transverse massless quanta.
pub fn physical_to_dimensionless(
    accel: f64,
    delta: f64,
    quanta: Quanta,
    k: usize,
) -> Result<DimensionlessParams> {
    if !(accel >= 0.0 && accel.is_finite()) {
        return Err(Error::domain(format!("acceleration must be >= 0, got {accel}")));
    }
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(Error::domain(format!("delta must be > 0, got {delta}")));
    }
    check_mode(k)?;
    let mass = match quanta {
        Quanta::Longitudinal => 0.0,
        Quanta::Mass(m) if m >= 0.0 => m * SPEED_OF_LIGHT / HBAR * delta,
        Quanta::TransverseWavelength(l) if l > 0.0 => 2.0 * PI / l * delta,
        Quanta::Mass(m) => return Err(Error::domain(format!("mass must be >= 0, got {m}"))),
        Quanta::TransverseWavelength(l) => {
            return Err(Error::domain(format!("wavelength must be > 0, got {l}")))
        }
    };
    let h = accel * delta / (SPEED_OF_LIGHT * SPEED_OF_LIGHT);
    Ok(DimensionlessParams {
        h,
        mass,
        validity: ValidityReport::evaluate(k, h, mass),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(delta: f64, mass: f64, h: f64) -> CavityConfig {
        CavityConfig::new(delta, mass, h, 1, 8).unwrap()
    }

    #[test]
    fn inertial_frequencies() {
        assert!((mode_frequency(1, &cfg(1.0, 0.0, 0.0)).unwrap() - PI).abs() < 1e-15);
        assert!((mode_frequency(3, &cfg(2.0, 0.0, 0.0)).unwrap() - 1.5 * PI).abs() < 1e-15);
        let w = mode_frequency(1, &cfg(1.0, 1e3, 0.0)).unwrap();
        assert!((w - (1e6 + PI * PI).sqrt()).abs() < 1e-12);
        assert!((w - 1000.0049).abs() < 1e-4);
        assert!(mode_frequency(0, &cfg(1.0, 0.0, 0.0)).is_err());
    }

    #[test]
    fn rindler_frequencies() {
        let c = cfg(1.0, 0.0, 1.0);
        let w1 = rindler_frequency(1, &c).unwrap();
        assert!((w1 - PI / (2.0 * 0.5f64.atanh())).abs() < 1e-14);
        assert!((w1 - 2.85960).abs() < 1e-5);
        assert_eq!(rindler_frequency(2, &c).unwrap(), 2.0 * w1);
        // inertial limit
        assert!((rindler_frequency(1, &cfg(1.0, 0.0, 0.0)).unwrap() - PI).abs() < 1e-15);
        assert!((rindler_frequency(1, &cfg(1.0, 0.0, 1e-9)).unwrap() - PI).abs() < 1e-12);
        assert!(matches!(
            rindler_frequency(1, &cfg(1.0, 2.0, 0.5)),
            Err(Error::Unsupported(_))
        ));
        let bad = CavityConfig { h: 2.0, ..c };
        assert!(matches!(rindler_frequency(1, &bad), Err(Error::Domain(_))));
    }

    #[test]
    fn period() {
        assert!((acceleration_period(&cfg(1.0, 0.0, 0.0)).unwrap() - 2.0).abs() < 1e-15);
        let c = cfg(1.0, 0.0, 1.0);
        let t = acceleration_period(&c).unwrap();
        assert!((t - 4.0 * 0.5f64.atanh()).abs() < 1e-14);
        assert!((t - 2.19722).abs() < 1e-5);
        let w1 = rindler_frequency(1, &c).unwrap();
        assert!((t * w1 / (2.0 * PI) - 1.0).abs() < 1e-15);
        // even in h
        let tn = acceleration_period(&cfg(1.0, 0.0, -1.0)).unwrap();
        assert_eq!(t, tn);
    }

    #[test]
    fn period_monotone_in_h() {
        let mut last = 0.0;
        for i in 0..200 {
            let h = i as f64 * 0.0099;
            let t = acceleration_period(&cfg(1.0, 0.0, h)).unwrap();
            assert!(t >= last);
            last = t;
        }
    }

    #[test]
    fn series_branch_of_atanh_ratio_is_continuous() {
        let below = atanh_ratio(0.999_999e-4);
        let above = atanh_ratio(1.000_001e-4);
        assert!((below - above).abs() < 1e-13);
    }

    #[test]
    fn frequency_gap_matches_direct_difference() {
        let c = cfg(1.0, 3.0, 0.0);
        let direct = mode_frequency(2, &c).unwrap() - mode_frequency(5, &c).unwrap();
        assert!((frequency_gap(2, 5, 3.0, 1.0) - direct).abs() < 1e-13);
        // large M: stays accurate where subtraction would not
        let g = frequency_gap(1, 2, 1e8, 1.0);
        assert!((g - (-3.0 * PI * PI / 2e8)).abs() < 1e-20);
    }

    #[test]
    fn config_invariants() {
        assert!(CavityConfig::new(0.0, 0.0, 0.0, 1, 4).is_err());
        assert!(CavityConfig::new(1.0, -1.0, 0.0, 1, 4).is_err());
        assert!(CavityConfig::new(1.0, 0.0, 2.0, 1, 4).is_err());
        assert!(CavityConfig::new(1.0, 0.0, -2.5, 1, 4).is_err());
        assert!(CavityConfig::new(1.0, 0.0, 0.0, 0, 4).is_err());
        assert!(CavityConfig::new(1.0, 0.0, 0.0, 4, 4).is_err());
        assert!(CavityConfig::new(1.0, 0.0, -1.9, 3, 4).is_ok());
    }

    #[test]
    fn optical_transverse_quanta() {
        let p = physical_to_dimensionless(10.0, 10.0, Quanta::TransverseWavelength(500e-9), 1)
            .unwrap();
        assert!(p.mass > 10f64.powf(7.5) && p.mass < 10f64.powf(8.5));
        assert!((p.h - 1.1126e-15).abs() < 1e-18);
        let l = physical_to_dimensionless(10.0, 10.0, Quanta::Longitudinal, 1).unwrap();
        assert_eq!(l.mass, 0.0);
        assert!((l.h / 1.11e-15 - 1.0).abs() < 0.01);
    }

    #[test]
    fn kaon_microgravity() {
        let p = physical_to_dimensionless(1e-10, 0.1, Quanta::Mass(1e-27), 1).unwrap();
        assert!((p.mass / 2.8e14 - 1.0).abs() < 0.02);
        assert!((p.h / 1.1e-28 - 1.0).abs() < 0.02);
        let hm2 = p.h * p.mass * p.mass;
        assert!((hm2 - 9.0).abs() < 0.1);
        assert!(p.validity.massive_ok);
        assert!(p.validity.perturbative_ok);
    }

    #[test]
    fn both_quanta_descriptions_rejected() {
        assert!(matches!(
            Quanta::from_options(Some(1.0), Some(1.0)),
            Err(Error::Argument(_))
        ));
        assert_eq!(Quanta::from_options(None, None).unwrap(), Quanta::Longitudinal);
    }

    #[test]
    fn doubling_delta_doubles_h_and_mass() {
        for q in [Quanta::Mass(1e-30), Quanta::TransverseWavelength(1e-6)] {
            let a = physical_to_dimensionless(3.0, 0.5, q, 1).unwrap();
            let b = physical_to_dimensionless(3.0, 1.0, q, 1).unwrap();
            assert!((b.h / a.h - 2.0).abs() < 1e-14);
            assert!((b.mass / a.mass - 2.0).abs() < 1e-14);
        }
    }

    #[test]
    fn validity_threshold_is_configurable() {
        let r = ValidityReport::with_threshold(2, 0.04, 0.0, 0.05);
        assert!(!r.perturbative_ok);
        assert!(ValidityReport::evaluate(2, 0.04, 0.0).perturbative_ok);
        assert!(!ValidityReport::evaluate(1, 1e-3, 1e3).massive_ok);
    }
}
