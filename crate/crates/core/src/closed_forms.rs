//! Analytic order-h² negativity for the massless travel scenarios, built on
//! the polylogarithm `Li₆` on the unit circle, plus the large-mass formula
//! for a single accelerated segment.
//!
//! The central object is
//!
//! ```text
//! Q(n, z) = (4n²/π⁴) Re(Li₆(z) − Li₆(z²)/64)
//!         + (6n/π⁴) Σ_{r ≥ ⌊n/2⌋} Re(z^{1+2r}) (1/(1+2r)⁵ − n/(1+2r)⁶)
//!         = Σ_r a_{n,r} Re(z^{1+2r}).
//! ```
//!
//! Both expressions are implemented separately; each closed form is
//! evaluated through both and the gap is reported.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scenario::{unit, Method, NegativityResult};
use crate::series::{power_tail, terms_for_tolerance, CompensatedSum};
use crate::units::{frequency_gap, CavityConfig, rindler_frequency};

/// Truncation control for the series in this module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    /// Hard cap on retained terms.
    pub r_max: usize,
    /// Target bound on the neglected tail.
    pub tolerance: f64,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            r_max: 100_000,
            tolerance: 1e-14,
        }
    }
}

const UNIT_TOL: f64 = 1e-12;

fn pi4() -> f64 {
    PI.powi(4)
}

fn check_disc(z: Complex64) -> Result<()> {
    let r = z.norm();
    if !(r <= 1.0 + UNIT_TOL) {
        return Err(Error::domain(format!("|z| = {r} lies outside the unit disc")));
    }
    Ok(())
}

/// `Li₆(z) = Σ_{m≥1} z^m/m⁶` for `|z| ≤ 1`, with its tail bound.
pub fn polylog6_with(z: Complex64, ctrl: SeriesControl) -> Result<(Complex64, f64)> {
    check_disc(z)?;
    let terms = terms_for_tolerance(1.0, 6.0, 1.0, ctrl.tolerance).min(ctrl.r_max.max(1));
    let (mut re, mut im) = (CompensatedSum::new(), CompensatedSum::new());
    let mut power = Complex64::new(1.0, 0.0);
    for m in 1..=terms {
        power *= z;
        let w = (m as f64).powi(-6);
        re.add(power.re * w);
        im.add(power.im * w);
    }
    let tail = power_tail(terms as f64, 6.0, 1.0);
    Ok((Complex64::new(re.value(), im.value()), tail))
}

pub fn polylog6(z: Complex64) -> Result<Complex64> {
    polylog6_with(z, SeriesControl::default()).map(|(v, _)| v)
}

/// `Q(n, z)` through the polylogarithm expression, with its tail bound.
pub fn q_function_with(n: usize, z: Complex64, ctrl: SeriesControl) -> Result<(f64, f64)> {
    if n == 0 {
        return Err(Error::domain("Q(n, z) needs n >= 1"));
    }
    check_disc(z)?;
    let nf = n as f64;
    let (li1, t1) = polylog6_with(z, ctrl)?;
    let (li2, t2) = polylog6_with(z * z, ctrl)?;
    let head = 4.0 * nf * nf / pi4() * (li1 - li2 / 64.0).re;

    let scale = 6.0 * nf / pi4();
    let r_start = n / 2;
    let q_needed = terms_for_tolerance(scale, 5.0, 2.0, ctrl.tolerance);
    let r_end = (r_start + q_needed / 2 + 1).min(r_start + ctrl.r_max);
    let z2 = z * z;
    let mut power = z.powu(2 * r_start as u32 + 1);
    let mut sum = CompensatedSum::new();
    for r in r_start..=r_end {
        let q = (2 * r + 1) as f64;
        sum.add(power.re * (q.powi(-5) - nf * q.powi(-6)));
        power *= z2;
    }
    let tail = 4.0 * nf * nf / pi4() * (t1 + t2 / 64.0)
        + scale * power_tail((2 * r_end + 1) as f64, 5.0, 2.0);
    Ok((head + scale * sum.value(), tail))
}

/// `Q(n, z)` for `|z| ≤ 1` (the scenarios only need the unit circle).
pub fn q_function(n: usize, z: Complex64) -> Result<f64> {
    q_function_with(n, z, SeriesControl::default()).map(|(v, _)| v)
}

/// Share of `Q(n, 1)` carried by the residual sum term.
pub fn q_sum_term_share(n: usize) -> Result<f64> {
    let one = Complex64::new(1.0, 0.0);
    let q = q_function(n, one)?;
    let nf = n as f64;
    let (li1, _) = polylog6_with(one, SeriesControl::default())?;
    let head = 4.0 * nf * nf / pi4() * (li1.re - li1.re / 64.0);
    Ok((q - head) / q)
}

/// Series coefficients `a_{n,r}`, `r = 0 … r_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct QCoefficients {
    pub n: usize,
    pub a: Vec<f64>,
    pub r_max: usize,
}

/// `a_{n,r} = (4n²/π⁴)/(1+2r)⁶ + [r ≥ ⌊n/2⌋]·(6n/π⁴)·(1/(1+2r)⁵ − n/(1+2r)⁶)`.
pub fn q_coefficients(n: usize, r_max: usize) -> Result<QCoefficients> {
    if n == 0 {
        return Err(Error::domain("a_{n,r} needs n >= 1"));
    }
    if r_max < n {
        return Err(Error::argument(format!("r_max = {r_max} must be >= n = {n}")));
    }
    let nf = n as f64;
    let a = (0..=r_max)
        .map(|r| {
            let q = (2 * r + 1) as f64;
            let mut v = 4.0 * nf * nf / pi4() / q.powi(6);
            if r >= n / 2 {
                v += 6.0 * nf / pi4() * (q.powi(-5) - nf * q.powi(-6));
            }
            v
        })
        .collect();
    Ok(QCoefficients { n, a, r_max })
}

impl QCoefficients {
    /// Coefficients truncated so the neglected tail is below `ctrl.tolerance`.
    pub fn for_tolerance(n: usize, ctrl: SeriesControl) -> Result<Self> {
        let scale = 6.0 * n as f64 / pi4();
        let q = terms_for_tolerance(scale, 5.0, 2.0, ctrl.tolerance);
        let r_max = (q / 2 + 1).max(n).min(ctrl.r_max.max(n));
        q_coefficients(n, r_max)
    }

    /// Bound on `Σ_{r > r_max} a_{n,r}`.
    pub fn tail_bound(&self) -> f64 {
        let nf = self.n as f64;
        let last = (2 * self.r_max + 1) as f64;
        4.0 * nf * nf / pi4() * power_tail(last, 6.0, 2.0)
            + 6.0 * nf / pi4() * power_tail(last, 5.0, 2.0)
    }

    pub fn sum(&self) -> f64 {
        self.a.iter().copied().collect::<CompensatedSum>().value()
    }

    /// `Σ_r a_{n,r}·weight(1 + 2r)`.
    pub fn weighted_sum(&self, mut weight: impl FnMut(u32) -> f64) -> f64 {
        self.a
            .iter()
            .enumerate()
            .map(|(r, a)| a * weight(2 * r as u32 + 1))
            .collect::<CompensatedSum>()
            .value()
    }

    /// `Σ_r a_{n,r} Re(z^{1+2r})`.
    pub fn eval(&self, z: Complex64) -> f64 {
        self.weighted_sum(|q| z.powu(q).re)
    }
}

/// Phase factors of the three travel scenarios:
/// `p = exp(iΩ̃₁τ̄)`, `p′ = exp(iπτ̄′/δ)`, `p″ = exp(iπτ̄″/δ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseTuple {
    pub p: Complex64,
    pub p_coast: Complex64,
    pub p_rest: Complex64,
}

impl PhaseTuple {
    /// From the plot coordinates `u = Ω̃₁τ̄`, `v = πτ̄′/δ`, `w = πτ̄″/δ`.
    pub fn from_angles(u: f64, v: f64, w: f64) -> Self {
        PhaseTuple {
            p: unit(u),
            p_coast: unit(v),
            p_rest: unit(w),
        }
    }

    /// From proper-time durations of the massless scenarios.
    pub fn from_durations(cfg: &CavityConfig, tau: f64, coast: f64, rest: f64) -> Result<Self> {
        let omega1 = rindler_frequency(1, cfg)?;
        Ok(Self::from_angles(
            omega1 * tau,
            PI * coast / cfg.delta,
            PI * rest / cfg.delta,
        ))
    }

    pub fn is_unit(&self) -> bool {
        [self.p, self.p_coast, self.p_rest]
            .iter()
            .all(|z| (z.norm() - 1.0).abs() <= UNIT_TOL)
    }
}

fn check_phases(phases: &PhaseTuple) -> Result<()> {
    if phases.is_unit() {
        Ok(())
    } else {
        Err(Error::domain("phase factors must have unit modulus"))
    }
}

/// `|w^q − 1|²` for unit `w`, as `2 − 2 Re(w^q)`.
fn gap_sq(w: Complex64, q: u32) -> f64 {
    (w.powu(q) - 1.0).norm_sqr()
}

fn finish(
    deficit: f64,
    other_form: Option<f64>,
    k: usize,
    h: f64,
    tail: f64,
) -> NegativityResult {
    let mut r = NegativityResult::assemble(deficit, h, k, 0.0, tail, Method::ClosedForm);
    r.form_gap = other_form.map(|o| (o - deficit).abs());
    r
}

/// One accelerated segment:
/// `(½ − N₁)/h² = Σ_r a_kr |p^{1+2r} − 1|² = 2[Q(k,1) − Q(k,p)]`.
pub fn negativity_one_way(k: usize, h: f64, phases: &PhaseTuple) -> Result<NegativityResult> {
    negativity_one_way_with(k, h, phases, SeriesControl::default())
}

pub fn negativity_one_way_with(
    k: usize,
    h: f64,
    phases: &PhaseTuple,
    ctrl: SeriesControl,
) -> Result<NegativityResult> {
    check_phases(phases)?;
    let p = phases.p;
    let coeffs = QCoefficients::for_tolerance(k, ctrl)?;
    let a_form = coeffs.weighted_sum(|q| gap_sq(p, q));
    let (q1, t1) = q_function_with(k, Complex64::new(1.0, 0.0), ctrl)?;
    let (qp, tp) = q_function_with(k, p, ctrl)?;
    let q_form = 2.0 * (q1 - qp);
    let tail = (2.0 * (t1 + tp)).max(4.0 * coeffs.tail_bound());
    Ok(finish(q_form, Some(a_form), k, h, tail))
}

/// Out, coast, brake:
/// `Σ_r a_kr |p^q − 1|²|(pp′)^q − 1|²
///  = 2[2Q(k,1) − 2Q(k,p) + Q(k,p′) − 2Q(k,pp′) + Q(k,p²p′)]`.
pub fn negativity_two_way(k: usize, h: f64, phases: &PhaseTuple) -> Result<NegativityResult> {
    negativity_two_way_with(k, h, phases, SeriesControl::default())
}

pub fn negativity_two_way_with(
    k: usize,
    h: f64,
    phases: &PhaseTuple,
    ctrl: SeriesControl,
) -> Result<NegativityResult> {
    check_phases(phases)?;
    let p = phases.p;
    let pp = p * phases.p_coast;
    let coeffs = QCoefficients::for_tolerance(k, ctrl)?;
    let a_form = coeffs.weighted_sum(|q| gap_sq(p, q) * gap_sq(pp, q));
    let terms = [
        (2.0, Complex64::new(1.0, 0.0)),
        (-2.0, p),
        (1.0, phases.p_coast),
        (-2.0, pp),
        (1.0, p * pp),
    ];
    let mut q_form = 0.0;
    let mut q_tail = 0.0;
    for (weight, z) in terms {
        let (v, t) = q_function_with(k, z, ctrl)?;
        q_form += 2.0 * weight * v;
        q_tail += 2.0 * weight.abs() * t;
    }
    let tail = q_tail.max(16.0 * coeffs.tail_bound());
    Ok(finish(q_form, Some(a_form), k, h, tail))
}

/// Round trip: `Σ_r a_kr |p^q − 1|²|(pp′)^q − 1|²|(p²p′p″)^q − 1|²`.
pub fn negativity_round_trip(k: usize, h: f64, phases: &PhaseTuple) -> Result<NegativityResult> {
    negativity_round_trip_with(k, h, phases, SeriesControl::default())
}

pub fn negativity_round_trip_with(
    k: usize,
    h: f64,
    phases: &PhaseTuple,
    ctrl: SeriesControl,
) -> Result<NegativityResult> {
    check_phases(phases)?;
    let p = phases.p;
    let pp = p * phases.p_coast;
    let ppp = p * pp * phases.p_rest;
    let coeffs = QCoefficients::for_tolerance(k, ctrl)?;
    let a_form = coeffs.weighted_sum(|q| gap_sq(p, q) * gap_sq(pp, q) * gap_sq(ppp, q));
    Ok(finish(a_form, None, k, h, 64.0 * coeffs.tail_bound()))
}

/// Kickstart: `(½ − N)/h² = Q(k, 1)`.
pub fn negativity_kickstart(k: usize, h: f64) -> Result<NegativityResult> {
    let ctrl = SeriesControl::default();
    let (q1, t1) = q_function_with(k, Complex64::new(1.0, 0.0), ctrl)?;
    let coeffs = QCoefficients::for_tolerance(k, ctrl)?;
    Ok(finish(q1, Some(coeffs.sum()), k, h, t1.max(coeffs.tail_bound())))
}

/// Two-mode truncation of `Q(1, z)`: `a₁₀ Re z + ½ a₁₁ Re z³`.
pub fn q_two_by_two(z: Complex64) -> Result<f64> {
    let c = q_coefficients(1, 1)?;
    q_two_by_two_from(z, c.a[0], c.a[1])
}

/// [`q_two_by_two`] with explicit `(a₁₀, a₁₁)`.
pub fn q_two_by_two_from(z: Complex64, a10: f64, a11: f64) -> Result<f64> {
    check_disc(z)?;
    Ok(a10 * z.re + 0.5 * a11 * z.powu(3).re)
}

/// Result of the large-mass single-segment formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassiveLimitResult {
    pub result: NegativityResult,
    /// `(½ − N₁)/(h²M⁴)`.
    pub mass_scaled_deficit: f64,
    /// `k/M ≤ 0.01`, where the `k ≪ M` reduction is trusted.
    pub k_small_ok: bool,
}

/// Approximate period `4Mδ/π` of the large-mass waveform in `τ̄`.
pub fn massive_limit_period(mass: f64, delta: f64) -> f64 {
    4.0 * mass * delta / PI
}

/// Large-mass, `k ≪ M` negativity after one accelerated segment of
/// duration `tau_bar`:
///
/// ```text
/// (½ − N₁)/h² = M⁴ (256k²/π⁸) Σ_{n ≡ k+1 (mod 2)} n²/(k²−n²)⁶
///               × {1 − cos[(√(M²+π²k²) − √(M²+π²n²)) τ̄/δ]}
/// ```
pub fn negativity_massive_limit(
    k: usize,
    h: f64,
    mass: f64,
    tau_bar: f64,
    delta: f64,
    n_max: usize,
) -> Result<MassiveLimitResult> {
    if k == 0 {
        return Err(Error::domain("k must be >= 1"));
    }
    if !(mass > 0.0 && mass.is_finite()) {
        return Err(Error::domain(
            "massive limit needs M > 0; use the massless closed forms for M = 0",
        ));
    }
    if !(delta > 0.0) {
        return Err(Error::domain("delta must be > 0"));
    }
    if n_max <= k {
        return Err(Error::argument(format!("n_max = {n_max} must exceed k = {k}")));
    }
    let kf = k as f64;
    let pre = 256.0 * kf * kf / PI.powi(8);
    let mut sum = CompensatedSum::new();
    let start = if k % 2 == 0 { 1 } else { 2 };
    let mut last = start;
    for n in (start..=n_max).step_by(2) {
        let nf = n as f64;
        let weight = nf * nf / (kf * kf - nf * nf).powi(6);
        let phase = frequency_gap(k, n, mass, delta) * tau_bar;
        // 1 − cos x = 2 sin²(x/2)
        let s = (0.5 * phase).sin();
        sum.add(weight * 2.0 * s * s);
        last = n;
    }
    let mass_scaled = pre * sum.value();
    let tail = 2.0 * pre * power_tail(last as f64, 10.0, 2.0);
    let m4 = mass.powi(4);
    let mut result =
        NegativityResult::assemble(m4 * mass_scaled, h, k, mass, m4 * tail, Method::MassiveLimit);
    result.approximate_phases = false;
    Ok(MassiveLimitResult {
        result,
        mass_scaled_deficit: mass_scaled,
        k_small_ok: kf / mass <= 0.01,
    })
}
