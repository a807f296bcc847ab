//! Named invariant checks with measured residuals and thresholds.
//!
//! `Fast` runs in well under a second; `Full` uses `n_max = 2000`, doubling
//! convergence, 64-point grids and the massive boosts at `M ∈ {0, 10, 10³}`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::closed_forms::{
    massive_limit_period, negativity_kickstart, negativity_massive_limit, negativity_one_way,
    negativity_round_trip, negativity_two_way, q_coefficients, q_function, q_sum_term_share,
    q_two_by_two_from, PhaseTuple,
};
use crate::error::Result;
use crate::scenario::{NegativityResult, Scenario};
use crate::transform::{
    boost_columns, check_identities, compose, inverse, massive_boost_transform,
    massless_boost_transform, phase_rotation, BoostKind, PerturbativeTransform,
};
use crate::units::{acceleration_period, rindler_frequency, CavityConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Fast,
    Full,
}

impl Level {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "fast" => Some(Level::Fast),
            "full" => Some(Level::Full),
            _ => None,
        }
    }
}

/// Fault injection for testing the checks themselves.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct VerifyOptions {
    /// Multiplies `a₁₁` before the 2×2 bound check.
    pub corrupt_a11: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub threshold: f64,
    pub passed: bool,
}

impl Check {
    fn at_most(name: impl Into<String>, residual: f64, threshold: f64) -> Self {
        Check {
            name: name.into(),
            residual,
            threshold,
            passed: residual <= threshold,
        }
    }

    fn at_least(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        Check {
            name: name.into(),
            residual: value,
            threshold,
            passed: value >= threshold,
        }
    }

    fn failed(name: impl Into<String>, err: crate::Error) -> Self {
        Check {
            name: format!("{} ({err})", name.into()),
            residual: f64::NAN,
            threshold: f64::NAN,
            passed: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub level: Level,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{}  {:<58} residual {:>11.3e}  threshold {:>9.2e}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.residual,
                c.threshold
            )?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

struct Params {
    n_max: usize,
    points: usize,
    ks: Vec<usize>,
}

/// Runs every check for the level; never stops at the first failure.
pub fn run_verification(level: Level, options: &VerifyOptions) -> Report {
    let p = match level {
        Level::Fast => Params {
            n_max: 500,
            points: 16,
            ks: vec![1, 2],
        },
        Level::Full => Params {
            n_max: 2000,
            points: 64,
            ks: vec![1, 2, 3, 4],
        },
    };
    let mut checks = Vec::new();
    let mut push = |name: &str, r: Result<Vec<Check>>| match r {
        Ok(cs) => checks.extend(cs),
        Err(e) => checks.push(Check::failed(name, e)),
    };

    push("massless diagonal identity", massless_diagonal(p.n_max));
    push("boost structure", boost_structure());
    push("massive M = 0 limit", massive_zero_limit());
    for scenario in ["one-way", "two-way", "round-trip", "kickstart"] {
        push(scenario, pipeline_vs_closed(scenario, &p));
    }
    push("one-way extremum", one_way_extremum());
    push("zero loci", zero_loci(if level == Level::Full { 101 } else { 21 }));
    push("stated bounds", stated_bounds(options));
    push("periodicity", periodicity(p.points));
    if level == Level::Full {
        push("doubling", doubling(p.n_max));
        for mass in [0.0, 10.0, 1e3] {
            push("massive diagonal identity", massive_diagonal(mass, p.n_max));
        }
        push("large-mass period", large_mass_period());
    }
    Report { level, checks }
}

fn massless_diagonal(n_max: usize) -> Result<Vec<Check>> {
    let cols: Vec<usize> = (1..=8).collect();
    let t = boost_columns(BoostKind::Massless, n_max, &cols, false)?;
    let id = check_identities(&t);
    let rel = id
        .diagonal
        .iter()
        .map(|d| (d.pair_sum - PI * PI * (d.n * d.n) as f64 / 120.0).abs() / d.expected)
        .fold(0.0, f64::max);
    Ok(vec![
        Check::at_most(
            format!("massless Σ'(|α|²−|β|²) = π²n²/120, n ≤ 8, n_max {n_max}"),
            rel,
            1e-6,
        ),
        Check::at_most("massless order-2 identity vs α⁽²⁾ diagonal", id.order2_diag_residual.unwrap(), 1e-6),
    ])
}

fn first_order_gap(a: &PerturbativeTransform, b: &PerturbativeTransform) -> f64 {
    let n = a.n_max();
    let mut gap: f64 = 0.0;
    for col in 1..=n {
        for m in 1..=n {
            let da = a.alpha1(m, col).unwrap_or_default() - b.alpha1(m, col).unwrap_or_default();
            let db = a.beta1(m, col).unwrap_or_default() - b.beta1(m, col).unwrap_or_default();
            gap = gap.max(da.norm()).max(db.norm());
        }
    }
    gap
}

fn boost_structure() -> Result<Vec<Check>> {
    let n = 64;
    let boost = massless_boost_transform(n)?;
    let id = check_identities(&boost);
    let massive = massive_boost_transform(n, 10.0)?;
    let round = compose(&inverse(&massive)?, &massive)?;
    let unit = PerturbativeTransform::identity(n);
    let freqs: Vec<f64> = (1..=n).map(|j| PI * j as f64 * 1.1).collect();
    let phase = phase_rotation(0.37, &freqs, n)?;
    let left = compose(&compose(&boost, &phase)?, &massive)?;
    let right = compose(&boost, &compose(&phase, &massive)?)?;
    let assoc = first_order_gap(&left, &right).max(
        left.alpha2_diag()
            .unwrap()
            .iter()
            .zip(right.alpha2_diag().unwrap())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max),
    );
    Ok(vec![
        Check::at_most("order-1 identity, massless boost n_max 64", id.order1_residual, 1e-15),
        Check::at_most("inverse ∘ boost = 1 at order h, M = 10", first_order_gap(&round, &unit), 1e-13),
        Check::at_most("composition is associative", assoc, 1e-12),
    ])
}

fn massive_zero_limit() -> Result<Vec<Check>> {
    let a = massless_boost_transform(200)?;
    let b = massive_boost_transform(200, 0.0)?;
    Ok(vec![Check::at_most(
        "massive boost at M = 0 equals massless, n_max 200",
        first_order_gap(&a, &b),
        1e-12,
    )])
}

/// Deterministic points in `[0, 2π)³` from the additive golden-ratio sequence.
pub fn phase_points(count: usize) -> Vec<[f64; 3]> {
    let g = [0.754_877_666_246_692_7, 0.569_840_290_998_053_3, 0.430_159_709_001_946_7];
    (0..count)
        .map(|i| {
            let x = i as f64 + 0.5;
            [0, 1, 2].map(|d| 2.0 * PI * (x * g[d]).fract())
        })
        .collect()
}

/// General pipeline at the durations that realise phase angles `(u, v, w)`.
pub fn general_at_phases(
    scenario: &str,
    k: usize,
    h: f64,
    n_max: usize,
    [u, v, w]: [f64; 3],
) -> Result<NegativityResult> {
    let cfg = CavityConfig::massless(h, k, n_max)?;
    let tau = u / rindler_frequency(1, &cfg)?;
    let (coast, rest) = (v / PI, w / PI);
    let s = match scenario {
        "one-way" => Scenario::one_way(cfg, tau),
        "two-way" => Scenario::alpha_centauri(cfg, tau, coast),
        "round-trip" => Scenario::round_trip(cfg, tau, coast, rest),
        _ => Scenario::kickstart(cfg, tau),
    };
    s.negativity()
}

/// Closed form for the same scenario names as [`general_at_phases`].
pub fn closed_at_phases(scenario: &str, k: usize, h: f64, [u, v, w]: [f64; 3]) -> Result<NegativityResult> {
    let phases = PhaseTuple::from_angles(u, v, w);
    match scenario {
        "one-way" => negativity_one_way(k, h, &phases),
        "two-way" => negativity_two_way(k, h, &phases),
        "round-trip" => negativity_round_trip(k, h, &phases),
        _ => negativity_kickstart(k, h),
    }
}

fn pipeline_vs_closed(scenario: &str, p: &Params) -> Result<Vec<Check>> {
    let mut worst: f64 = 0.0;
    for &k in &p.ks {
        for pt in phase_points(p.points) {
            let g = general_at_phases(scenario, k, 0.01, p.n_max, pt)?;
            let c = closed_at_phases(scenario, k, 0.01, pt)?;
            worst = worst.max((g.deficit_scaled - c.deficit_scaled).abs());
        }
    }
    Ok(vec![Check::at_most(
        format!(
            "{scenario}: pipeline vs closed form, {} points, k ≤ {}",
            p.points,
            p.ks.len()
        ),
        worst,
        1e-8,
    )])
}

fn one_way_extremum() -> Result<Vec<Check>> {
    let one = Complex64::new(1.0, 0.0);
    let q11 = q_function(1, one)?;
    let at = |u: f64| -> Result<f64> {
        Ok(negativity_one_way(1, 0.01, &PhaseTuple::from_angles(u, 0.0, 0.0))?.deficit_scaled)
    };
    let peak = (at(PI)? - 4.0 * q11).abs();
    let zeros = at(0.0)?.abs().max(at(2.0 * PI)?.abs());
    let mut asym: f64 = 0.0;
    let mut below: f64 = f64::NEG_INFINITY;
    for j in 1..200 {
        let x = PI * j as f64 / 200.0;
        let (l, r) = (at(PI - x)?, at(PI + x)?);
        asym = asym.max((l - r).abs());
        below = below.max(l - at(PI)?);
    }
    Ok(vec![
        Check::at_most("one-way peak at u = π equals 4Q(1,1)", peak, 1e-12),
        Check::at_most("one-way zeros at u = 0, 2π", zeros, 1e-12),
        Check::at_most("one-way symmetric about u = π", asym, 1e-12),
        Check::at_most("one-way peak is unique (max other − peak)", below.max(0.0), 0.0),
    ])
}

fn zero_loci(grid: usize) -> Result<Vec<Check>> {
    let mut on_zero: f64 = 0.0;
    let mut off_min = f64::INFINITY;
    let step = 2.0 * PI / (grid - 1) as f64;
    // Zero loci in index space: i ≡ 0 or i + j ≡ 0 (mod grid − 1).
    let period = grid - 1;
    for rest in [0.0, 2.0 * PI / 3.0, 4.0 * PI / 3.0] {
        for i in 0..grid {
            for j in 0..grid {
                let (u, v) = (step * i as f64, step * j as f64);
                let phases = PhaseTuple::from_angles(u, v, rest);
                let two = negativity_two_way(1, 0.01, &phases)?.deficit_scaled;
                let round = negativity_round_trip(1, 0.01, &phases)?.deficit_scaled;
                let zero_two = i % period == 0 || (i + j) % period == 0;
                if zero_two {
                    on_zero = on_zero.max(two.abs()).max(round.abs());
                } else {
                    off_min = off_min.min(two);
                    // round trip also vanishes where 2u + v + w ≡ 0
                    let third = (2.0 * u + v + rest).rem_euclid(2.0 * PI);
                    let dist = third.min(2.0 * PI - third);
                    if dist > 1e-6 {
                        off_min = off_min.min(round);
                    } else {
                        on_zero = on_zero.max(round.abs());
                    }
                }
            }
        }
    }
    Ok(vec![
        Check::at_most("two-way/round-trip vanish on their zero loci", on_zero, 1e-12),
        Check::at_least("two-way/round-trip positive off the loci", off_min, f64::MIN_POSITIVE),
    ])
}

fn stated_bounds(options: &VerifyOptions) -> Result<Vec<Check>> {
    let share1 = q_sum_term_share(1)?;
    let share_rest = (2..=8).map(q_sum_term_share).collect::<Result<Vec<_>>>()?;
    let c = q_coefficients(1, 1)?;
    let a11 = c.a[1] * options.corrupt_a11.unwrap_or(1.0);
    let one = Complex64::new(1.0, 0.0);
    let q11 = q_function(1, one)?;
    let q2_one = q_two_by_two_from(one, c.a[0], a11)?;
    let mut worst: f64 = 0.0;
    for j in 0..256 {
        let z = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / 256.0);
        let exact = 2.0 * (q11 - q_function(1, z)?);
        let approx = 2.0 * (q2_one - q_two_by_two_from(z, c.a[0], a11)?);
        worst = worst.max((exact - approx).abs());
    }
    let mut positive = f64::INFINITY;
    for n in 1..=16 {
        positive = positive.min(q_coefficients(n, 4000)?.a.iter().cloned().fold(f64::INFINITY, f64::min));
    }
    Ok(vec![
        Check::at_most("sum-term share of Q(1,1)", share1, 0.011),
        Check::at_most(
            "sum-term share of Q(n,1), n = 2..8",
            share_rest.into_iter().fold(0.0, f64::max),
            0.0025,
        ),
        Check::at_most("2x2 replacement error / 4Q(1,1)", worst / (4.0 * q11), 0.007),
        Check::at_least("deficit coefficients a_nr > 0, n ≤ 16", positive, f64::MIN_POSITIVE),
    ])
}

fn periodicity(points: usize) -> Result<Vec<Check>> {
    let mut worst: f64 = 0.0;
    for (i, pt) in phase_points(points).into_iter().enumerate() {
        let h = 0.02 + 0.05 * (i % 5) as f64;
        let k = 1 + i % 3;
        let cfg = CavityConfig::massless(h, k, 64)?;
        let period = acceleration_period(&cfg)?;
        let tau = pt[0] / rindler_frequency(1, &cfg)?;
        let coast = pt[1] / PI;
        let base = Scenario::alpha_centauri(cfg, tau, coast).negativity()?.negativity;
        let shifted_tau = Scenario::alpha_centauri(cfg, tau + period, coast).negativity()?.negativity;
        let shifted_coast = Scenario::alpha_centauri(cfg, tau, coast + 2.0).negativity()?.negativity;
        worst = worst
            .max((base - shifted_tau).abs())
            .max((base - shifted_coast).abs());
    }
    Ok(vec![Check::at_most(
        format!("negativity periodic in τ̄ and τ̄′, {points} points"),
        worst,
        1e-12,
    )])
}

fn doubling(n_max: usize) -> Result<Vec<Check>> {
    let mut worst: f64 = 0.0;
    for &k in &[1, 2, 3, 4] {
        for pt in phase_points(8) {
            let a = general_at_phases("round-trip", k, 0.01, n_max / 2, pt)?.deficit_scaled;
            let b = general_at_phases("round-trip", k, 0.01, n_max, pt)?.deficit_scaled;
            if b > 0.0 {
                worst = worst.max((a - b).abs() / b);
            }
        }
    }
    Ok(vec![Check::at_most(
        format!("deficit change from n_max {} to {n_max}", n_max / 2),
        worst,
        1e-8,
    )])
}

fn massive_diagonal(mass: f64, n_max: usize) -> Result<Vec<Check>> {
    let cols: Vec<usize> = (1..=8).collect();
    let t = boost_columns(BoostKind::Massive(mass), n_max, &cols, false)?;
    let id = check_identities(&t);
    let worst = id
        .diagonal
        .iter()
        .max_by(|a, b| {
            let ra = a.residual / (a.tail_estimate + a.roundoff);
            let rb = b.residual / (b.tail_estimate + b.roundoff);
            ra.total_cmp(&rb)
        })
        .unwrap();
    Ok(vec![Check {
        name: format!("massive order-2 diagonal identity, M = {mass}"),
        residual: worst.residual,
        threshold: worst.tail_estimate + worst.roundoff,
        passed: id.order2_within_tolerance().unwrap_or(false),
    }])
}

/// Normalised autocorrelation of the large-mass waveform: returns
/// `(lag, value)` of the strongest peak within ±2% of `4Mδ/π`, and the lag
/// of the first local maximum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodEstimate {
    pub expected: f64,
    pub peak_lag: f64,
    pub peak_value: f64,
    /// True when the window maximum is a genuine local maximum.
    pub interior: bool,
    pub first_peak_lag: f64,
}

pub fn large_mass_autocorrelation(k: usize, mass: f64, delta: f64) -> Result<PeriodEstimate> {
    let period = massive_limit_period(mass, delta);
    let per_period = 1000;
    let periods = 4;
    let n = per_period * periods;
    let dt = period / per_period as f64;
    let mut x = Vec::with_capacity(n);
    for i in 0..n {
        let r = negativity_massive_limit(k, 1e-6, mass, i as f64 * dt, delta, 400)?;
        x.push(r.mass_scaled_deficit);
    }
    let mean = x.iter().sum::<f64>() / n as f64;
    for v in &mut x {
        *v -= mean;
    }
    let corr = |lag: usize| -> f64 {
        let (a, b) = (&x[..n - lag], &x[lag..]);
        let dot: f64 = a.iter().zip(b).map(|(p, q)| p * q).sum();
        let na: f64 = a.iter().map(|p| p * p).sum();
        let nb: f64 = b.iter().map(|q| q * q).sum();
        dot / (na * nb).sqrt()
    };
    let lo = (0.98 * per_period as f64).floor() as usize;
    let hi = (1.02 * per_period as f64).ceil() as usize;
    let (best, value) = (lo..=hi)
        .map(|l| (l, corr(l)))
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    let interior = corr(best - 1) <= value && corr(best + 1) <= value && best > lo && best < hi;
    let mut first = 0;
    let mut prev = corr(1);
    for l in 2..2 * per_period {
        let c = corr(l);
        let next = corr(l + 1);
        if c > prev && c >= next && c > 0.5 {
            first = l;
            break;
        }
        prev = c;
    }
    Ok(PeriodEstimate {
        expected: period,
        peak_lag: best as f64 * dt,
        peak_value: value,
        interior,
        first_peak_lag: first as f64 * dt,
    })
}

fn large_mass_period() -> Result<Vec<Check>> {
    let e = large_mass_autocorrelation(1, 1e3, 1.0)?;
    Ok(vec![
        Check::at_most(
            "large-mass autocorrelation peak lag / (4Mδ/π) − 1",
            (e.peak_lag / e.expected - 1.0).abs(),
            0.02,
        ),
        Check {
            name: "large-mass autocorrelation at the period (local max)".into(),
            residual: e.peak_value,
            threshold: 0.99,
            passed: e.interior && e.peak_value >= 0.99,
        },
    ])
}
