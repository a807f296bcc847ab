//! Trajectories built from inertial and uniformly accelerated segments, and
//! the order-h² negativity of the excited mode after the trip.
//!
//! Every accelerated segment is booked as boost → free Rindler evolution →
//! inverse boost, so the cavity starts and ends at rest. A kickstart
//! scenario leaves the final inverse boost off.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::{extrapolated_tail, CompensatedSum};
use crate::transform::{
    boost_column_tail, boost_columns, compose, phase_rotation, BoostKind, PerturbativeTransform,
};
use crate::units::{inertial_spectrum, rindler_spectrum, CavityConfig, ValidityReport};

/// Which route produced a negativity value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Order-h² sum over an effective transform.
    General,
    /// Polylogarithm closed forms for the massless scenarios.
    ClosedForm,
    /// Large-mass, `k ≪ M` formula for one accelerated segment.
    MassiveLimit,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::General => "general",
            Method::ClosedForm => "closed-form",
            Method::MassiveLimit => "massive-limit",
        }
    }
}

/// Negativity to order h²: `N = ½ − h²·deficit_scaled`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NegativityResult {
    pub negativity: f64,
    /// `(½ − N)/h²`, independent of `h`.
    pub deficit_scaled: f64,
    pub h_used: f64,
    pub k_used: usize,
    pub validity: ValidityReport,
    /// Bound on the neglected part of the truncated sums in `deficit_scaled`.
    pub truncation_tail: f64,
    pub method: Method,
    /// Disagreement between two algebraic forms of the same closed form.
    pub form_gap: Option<f64>,
    /// Set when accelerated segments of a massive field were evolved with
    /// the inertial spectrum.
    pub approximate_phases: bool,
}

impl NegativityResult {
    pub(crate) fn assemble(
        deficit_scaled: f64,
        h: f64,
        k: usize,
        mass: f64,
        truncation_tail: f64,
        method: Method,
    ) -> Self {
        // cancelling closed forms can round to -1e-17 on their zero loci
        let deficit_scaled = deficit_scaled.max(0.0);
        NegativityResult {
            negativity: 0.5 - h * h * deficit_scaled,
            deficit_scaled,
            h_used: h,
            k_used: k,
            validity: ValidityReport::evaluate(k, h, mass),
            truncation_tail,
            method,
            form_gap: None,
            approximate_phases: false,
        }
    }
}

/// Logarithmic negativity `ln(1 + N)`.
pub fn log_negativity(result: &NegativityResult) -> f64 {
    result.negativity.ln_1p()
}

/// Direction of proper acceleration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Toward increasing `x` (coefficients at `+h`).
    Right,
    /// Toward decreasing `x` (coefficients at `−h`).
    Left,
}

impl Direction {
    pub fn sign(self) -> f64 {
        match self {
            Direction::Right => 1.0,
            Direction::Left => -1.0,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Direction::Right => Direction::Left,
            Direction::Left => Direction::Right,
        }
    }
}

/// One piece of the cavity's trajectory; durations are proper times at the
/// cavity centre.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TrajectorySegment {
    Accelerated { direction: Direction, duration: f64 },
    Inertial { duration: f64 },
}

impl TrajectorySegment {
    pub fn duration(&self) -> f64 {
        match *self {
            TrajectorySegment::Accelerated { duration, .. } => duration,
            TrajectorySegment::Inertial { duration } => duration,
        }
    }
}

/// A trajectory for the moving cavity.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub cfg: CavityConfig,
    pub segments: Vec<TrajectorySegment>,
    /// Omit the inverse boost that would close the final accelerated
    /// segment, leaving the cavity accelerating.
    pub kickstart: bool,
}

impl Scenario {
    pub fn new(cfg: CavityConfig, segments: Vec<TrajectorySegment>) -> Self {
        Scenario {
            cfg,
            segments,
            kickstart: false,
        }
    }

    /// Accelerate right for `tau`, then coast.
    pub fn one_way(cfg: CavityConfig, tau: f64) -> Self {
        Self::new(
            cfg,
            vec![TrajectorySegment::Accelerated {
                direction: Direction::Right,
                duration: tau,
            }],
        )
    }

    /// Blast off for `tau`, coast for `coast`, brake for `tau`.
    pub fn alpha_centauri(cfg: CavityConfig, tau: f64, coast: f64) -> Self {
        Self::new(cfg, outbound(tau, coast))
    }

    /// Travel out as in [`Scenario::alpha_centauri`], rest for `rest`, and
    /// reverse the outward manoeuvres to return.
    pub fn round_trip(cfg: CavityConfig, tau: f64, coast: f64, rest: f64) -> Self {
        let out = outbound(tau, coast);
        let mut segments = out.clone();
        segments.push(TrajectorySegment::Inertial { duration: rest });
        segments.extend(out.into_iter().map(|s| match s {
            TrajectorySegment::Accelerated {
                direction,
                duration,
            } => TrajectorySegment::Accelerated {
                direction: direction.reversed(),
                duration,
            },
            other => other,
        }));
        Self::new(cfg, segments)
    }

    /// Start accelerating and never stop.
    pub fn kickstart(cfg: CavityConfig, tau: f64) -> Self {
        let mut s = Self::one_way(cfg, tau);
        s.kickstart = true;
        s
    }

    pub fn validate(&self) -> Result<()> {
        self.cfg.validate()?;
        for seg in &self.segments {
            let d = seg.duration();
            if !(d >= 0.0 && d.is_finite()) {
                return Err(Error::domain(format!("segment duration must be >= 0, got {d}")));
            }
        }
        if self.kickstart
            && !matches!(
                self.segments.last(),
                Some(TrajectorySegment::Accelerated { .. })
            )
        {
            return Err(Error::argument(
                "a kickstart scenario must end with an accelerated segment",
            ));
        }
        Ok(())
    }

    /// True when a massive field's accelerated segments use the inertial
    /// spectrum for their phases.
    pub fn uses_approximate_phases(&self) -> bool {
        !self.cfg.is_massless()
            && self
                .segments
                .iter()
                .any(|s| matches!(s, TrajectorySegment::Accelerated { .. }))
    }

    fn boost_kind(&self) -> BoostKind {
        if self.cfg.is_massless() {
            BoostKind::Massless
        } else {
            BoostKind::Massive(self.cfg.mass)
        }
    }

    /// Boosts and inverse boosts applied along the trajectory.
    fn boost_count(&self) -> usize {
        let accel = self
            .segments
            .iter()
            .filter(|s| matches!(s, TrajectorySegment::Accelerated { .. }))
            .count();
        let ends_accelerated = matches!(self.segments.last(), Some(TrajectorySegment::Accelerated { .. }));
        2 * accel - usize::from(self.kickstart && ends_accelerated)
    }

    /// Order-h² negativity of mode `cfg.k` via the effective transform.
    pub fn negativity(&self) -> Result<NegativityResult> {
        let t = effective_transform_columns(self, &[self.cfg.k])?;
        let mut r = negativity_general(&t, self.cfg.k, self.cfg.h)?;
        // each first-order entry is a sum of B boost entries times phases,
        // so the dropped rows are bounded by B² times one boost's tail
        let boosts = self.boost_count() as f64;
        if boosts > 0.0 {
            let envelope = boost_column_tail(self.boost_kind(), self.cfg.k, self.cfg.n_max);
            r.truncation_tail = r.truncation_tail.max(boosts * boosts * envelope);
        }
        r.validity = self.cfg.validity();
        r.approximate_phases = self.uses_approximate_phases();
        Ok(r)
    }
}

fn outbound(tau: f64, coast: f64) -> Vec<TrajectorySegment> {
    vec![
        TrajectorySegment::Accelerated {
            direction: Direction::Right,
            duration: tau,
        },
        TrajectorySegment::Inertial { duration: coast },
        TrajectorySegment::Accelerated {
            direction: Direction::Left,
            duration: tau,
        },
    ]
}

/// End-to-end transform with every first-order column.
pub fn effective_transform(s: &Scenario) -> Result<PerturbativeTransform> {
    let all: Vec<usize> = (1..=s.cfg.n_max).collect();
    effective_transform_columns(s, &all)
}

/// End-to-end transform keeping only the listed in-mode columns.
pub fn effective_transform_columns(s: &Scenario, columns: &[usize]) -> Result<PerturbativeTransform> {
    s.validate()?;
    let cfg = &s.cfg;
    let n_max = cfg.n_max;
    let kind = s.boost_kind();
    let inertial = inertial_spectrum(cfg);
    let accelerated = if cfg.is_massless() {
        rindler_spectrum(cfg)?
    } else {
        inertial.clone()
    };

    let has_accel = s
        .segments
        .iter()
        .any(|seg| matches!(seg, TrajectorySegment::Accelerated { .. }));
    let boosts = if has_accel {
        Some((
            boost_columns(kind, n_max, columns, false)?,
            boost_columns(kind, n_max, columns, true)?,
        ))
    } else {
        None
    };

    let mut total = PerturbativeTransform::identity(n_max);
    let last = s.segments.len().saturating_sub(1);
    for (i, seg) in s.segments.iter().enumerate() {
        match *seg {
            TrajectorySegment::Inertial { duration } => {
                total = compose(&phase_rotation(duration, &inertial, n_max)?, &total)?;
            }
            TrajectorySegment::Accelerated {
                direction,
                duration,
            } => {
                let (boost, unboost) = boosts.as_ref().unwrap();
                let sign = direction.sign();
                total = compose(&boost.clone().scale_first_order(sign), &total)?;
                total = compose(&phase_rotation(duration, &accelerated, n_max)?, &total)?;
                if !(s.kickstart && i == last) {
                    total = compose(&unboost.clone().scale_first_order(sign), &total)?;
                }
            }
        }
    }
    Ok(total)
}

/// `deficit_scaled = Σ_{n≠k} (½|α⁽¹⁾_nk|² + |β⁽¹⁾_nk|²)` over the truncated
/// column `k`; `N = ½ − h²·deficit_scaled`.
pub fn negativity_general(t: &PerturbativeTransform, k: usize, h: f64) -> Result<NegativityResult> {
    if k == 0 || 2 * k > t.n_max() {
        return Err(Error::argument(format!(
            "mode k = {k} needs 1 <= k <= n_max/2 = {}",
            t.n_max() / 2
        )));
    }
    let column = t
        .column(k)
        .ok_or_else(|| Error::argument(format!("column {k} is not stored in the transform")))?;
    let mut sum = CompensatedSum::new();
    let mut terms = Vec::new();
    for &(n, a, b) in column.iter().filter(|(n, _, _)| *n != k) {
        let term = 0.5 * a.norm_sqr() + b.norm_sqr();
        sum.add(term);
        if term > 0.0 || (n + k) % 2 == 1 {
            terms.push((n as f64, term));
        }
    }
    let deficit = sum.value();
    let tail = extrapolated_tail(&terms, 5.0, 2.0, 8);
    Ok(NegativityResult::assemble(
        deficit,
        h,
        k,
        0.0,
        tail,
        Method::General,
    ))
}

/// `exp(i·θ)`.
pub(crate) fn unit(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::acceleration_period;
    use std::f64::consts::PI;

    fn cfg(h: f64, k: usize, n_max: usize) -> CavityConfig {
        CavityConfig::massless(h, k, n_max).unwrap()
    }

    #[test]
    fn empty_scenario_is_identity() {
        let s = Scenario::new(cfg(0.01, 1, 8), vec![]);
        assert_eq!(
            effective_transform(&s).unwrap(),
            PerturbativeTransform::identity(8)
        );
        let r = s.negativity().unwrap();
        assert_eq!(r.negativity, 0.5);
        assert_eq!(r.deficit_scaled, 0.0);
    }

    #[test]
    fn inertial_only_keeps_maximal_negativity() {
        let s = Scenario::new(
            cfg(0.05, 2, 16),
            vec![
                TrajectorySegment::Inertial { duration: 0.3 },
                TrajectorySegment::Inertial { duration: 7.1 },
            ],
        );
        assert_eq!(s.negativity().unwrap().negativity, 0.5);
    }

    #[test]
    fn full_period_acceleration_undoes_itself() {
        let c = cfg(0.3, 1, 32);
        let s = Scenario::one_way(c, acceleration_period(&c).unwrap());
        let t = effective_transform(&s).unwrap();
        let f = t.first_order().unwrap();
        let worst = f.alpha().iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(worst < 1e-12, "{worst}");
        assert!(f.beta().iter().all(|z| z.norm() < 1e-12));
        assert!(s.negativity().unwrap().deficit_scaled < 1e-25);
    }

    #[test]
    fn one_way_two_modes_by_hand() {
        let c = cfg(0.2, 1, 2);
        let tau = 0.37;
        let t = effective_transform(&Scenario::one_way(c, tau)).unwrap();
        let omega1 = crate::units::rindler_frequency(1, &c).unwrap();
        let p = unit(omega1 * tau);
        let b21 = 2.0 * 2f64.sqrt() / (27.0 * PI * PI);
        let got = t.beta1(2, 1).unwrap().norm();
        assert!((got - b21 * (p.powi(3) - 1.0).norm()).abs() < 1e-15);
    }

    #[test]
    fn kickstart_equals_boost_column_sum() {
        let s = Scenario::kickstart(cfg(0.01, 1, 4000), 0.42);
        let r = s.negativity().unwrap();
        // Q(1,1) = π²/240 + (6/π⁴)[(31/32)ζ(5) − (63/64)ζ(6)]
        let zeta5 = 1.036_927_755_143_37;
        let zeta6 = PI.powi(6) / 945.0;
        let q11 = PI * PI / 240.0 + 6.0 / PI.powi(4) * (31.0 / 32.0 * zeta5 - 63.0 / 64.0 * zeta6);
        assert!((r.deficit_scaled - q11).abs() < 1e-12, "{}", r.deficit_scaled);
        assert!((r.deficit_scaled - 0.041313).abs() < 1e-6);
    }

    #[test]
    fn kickstart_requires_final_acceleration() {
        let mut s = Scenario::new(cfg(0.01, 1, 8), vec![TrajectorySegment::Inertial { duration: 1.0 }]);
        s.kickstart = true;
        assert!(matches!(s.negativity(), Err(Error::Argument(_))));
    }

    #[test]
    fn deficit_is_h_independent() {
        let a = Scenario::alpha_centauri(cfg(0.01, 2, 64), 0.8, 0.3);
        // same phases at a different h: rescale τ̄ so Ω̃₁τ̄ is unchanged
        let c2 = cfg(0.02, 2, 64);
        let w1 = crate::units::rindler_frequency(1, &a.cfg).unwrap();
        let w2 = crate::units::rindler_frequency(1, &c2).unwrap();
        let b = Scenario::alpha_centauri(c2, 0.8 * w1 / w2, 0.3);
        let (ra, rb) = (a.negativity().unwrap(), b.negativity().unwrap());
        assert!((ra.deficit_scaled - rb.deficit_scaled).abs() < 1e-13);
        assert!((ra.negativity - (0.5 - 1e-4 * ra.deficit_scaled)).abs() < 1e-16);
    }

    #[test]
    fn errors() {
        let t = PerturbativeTransform::identity(6);
        assert!(negativity_general(&t, 4, 0.1).is_err());
        assert!(negativity_general(&t, 0, 0.1).is_err());
        let bad = Scenario::one_way(CavityConfig { h: 2.0, ..cfg(0.1, 1, 8) }, 1.0);
        assert!(matches!(bad.negativity(), Err(Error::Domain(_))));
        let neg = Scenario::one_way(cfg(0.1, 1, 8), -1.0);
        assert!(matches!(neg.negativity(), Err(Error::Domain(_))));
    }

    #[test]
    fn zero_durations_are_legal() {
        let s = Scenario::round_trip(cfg(0.01, 1, 16), 0.0, 0.0, 0.0);
        assert!(s.negativity().unwrap().deficit_scaled < 1e-30);
    }

    #[test]
    fn log_negativity_values() {
        let mut r = NegativityResult::assemble(0.0, 0.1, 1, 0.0, 0.0, Method::General);
        assert!((log_negativity(&r) - 1.5f64.ln()).abs() < 1e-16);
        assert!((log_negativity(&r) - 0.405465).abs() < 1e-6);
        r.negativity = 0.0;
        assert_eq!(log_negativity(&r), 0.0);
        r.negativity = 0.49;
        assert!((log_negativity(&r) - 0.398776).abs() < 1e-6);
    }

    #[test]
    fn massive_scenarios_flag_phase_rule() {
        let c = CavityConfig::new(1.0, 5.0, 0.001, 1, 64).unwrap();
        let r = Scenario::one_way(c, 0.7).negativity().unwrap();
        assert!(r.approximate_phases);
        let r = Scenario::new(c, vec![TrajectorySegment::Inertial { duration: 1.0 }])
            .negativity()
            .unwrap();
        assert!(!r.approximate_phases);
    }
}
