//! Peak one-way degradation for physical cavity parameters.

use std::fmt;

use num_complex::Complex64;

use crate::closed_forms::{massive_limit_period, negativity_massive_limit, q_function};
use crate::error::Result;
use crate::scenario::{Method, Scenario};
use crate::units::{
    frequency_gap, physical_to_dimensionless, CavityConfig, Quanta, ValidityReport,
};

const SAMPLES: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalEstimate {
    pub h: f64,
    pub mass: f64,
    pub k: usize,
    pub validity: ValidityReport,
    /// Largest `(½ − N)/h²` over one-way durations.
    pub peak_deficit_scaled: f64,
    /// `h²` times the above.
    pub peak_deficit: f64,
    /// Peak of `(½ − N)/(h²M⁴)` on the large-mass path.
    pub mass_scaled_peak: Option<f64>,
    pub method: Method,
}

impl PhysicalEstimate {
    pub fn hm2(&self) -> f64 {
        self.h * self.mass * self.mass
    }
}

impl fmt::Display for PhysicalEstimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flag = |ok: bool| if ok { "ok" } else { "VIOLATED" };
        writeln!(f, "h                  {:e}", self.h)?;
        writeln!(f, "M                  {:e}", self.mass)?;
        writeln!(f, "k                  {}", self.k)?;
        writeln!(f, "h*M^2              {:e}", self.hm2())?;
        writeln!(f, "|k h| small        {}", flag(self.validity.perturbative_ok))?;
        writeln!(f, "h*M^2 <= 100       {}", flag(self.validity.massive_ok))?;
        writeln!(f, "|h| < 2            {}", flag(self.validity.h_bound_ok))?;
        writeln!(f, "method             {}", self.method.as_str())?;
        writeln!(f, "peak (1/2-N)/h^2   {:e}", self.peak_deficit_scaled)?;
        if let Some(m) = self.mass_scaled_peak {
            writeln!(f, "peak (1/2-N)/h^2M^4 {m:e}")?;
        }
        write!(f, "peak 1/2-N         {:e}", self.peak_deficit)
    }
}

/// Converts to `(h, M)` and finds the largest one-way deficit: `4Q(k,1)`
/// for `M = 0`, the large-mass formula over one period when `k/M ≤ 0.01`,
/// and the general massive pipeline otherwise.
pub fn estimate_physical(accel: f64, delta: f64, quanta: Quanta, k: usize) -> Result<PhysicalEstimate> {
    let dim = physical_to_dimensionless(accel, delta, quanta, k)?;
    let (h, mass) = (dim.h, dim.mass);
    let (peak, mass_scaled, method) = if mass == 0.0 {
        let q = q_function(k, Complex64::new(1.0, 0.0))?;
        (4.0 * q, None, Method::ClosedForm)
    } else if k as f64 / mass <= 0.01 {
        let period = massive_limit_period(mass, 1.0);
        let mut best: f64 = 0.0;
        for i in 0..SAMPLES {
            let tau = period * i as f64 / SAMPLES as f64;
            let r = negativity_massive_limit(k, h, mass, tau, 1.0, 400)?;
            best = best.max(r.mass_scaled_deficit);
        }
        (best * mass.powi(4), Some(best), Method::MassiveLimit)
    } else {
        let n_max = (4 * k).max(64);
        let cfg = CavityConfig::new(1.0, mass, h, k, n_max)?;
        let span = 2.0 * std::f64::consts::TAU / frequency_gap(k, k + 1, mass, 1.0).abs();
        let mut best: f64 = 0.0;
        for i in 0..SAMPLES / 4 {
            let tau = span * i as f64 / (SAMPLES / 4) as f64;
            best = best.max(Scenario::one_way(cfg, tau).negativity()?.deficit_scaled);
        }
        (best, None, Method::General)
    };
    Ok(PhysicalEstimate {
        h,
        mass,
        k,
        validity: dim.validity,
        peak_deficit_scaled: peak,
        peak_deficit: h * h * peak,
        mass_scaled_peak: mass_scaled,
        method,
    })
}
