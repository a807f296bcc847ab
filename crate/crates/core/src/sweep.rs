//! Parameter sweeps over the phase variables of the travel scenarios.
//!
//! Phase coordinates: `u = Ω̃₁τ̄` for the
//! accelerated segments, `v = πτ̄′/δ` for the coast and `w = πτ̄″/δ` for the
//! rest at the destination. For a massive field the accelerated segments
//! are evolved with the inertial spectrum, so there `u = πτ̄/δ`; the
//! large-mass presets are read against `u/(4M) = πτ̄/(4Mδ)`.
//!
//! Configuration is a flat `key = value` text; command-line overrides use
//! the same keys. Axes are written `name=start:stop:count`, where `start`
//! and `stop` accept `pi` (e.g. `2pi`, `pi/2`, `3*pi/4`).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::closed_forms::{
    negativity_kickstart, negativity_massive_limit, negativity_one_way_with,
    negativity_round_trip_with, negativity_two_way_with, PhaseTuple, SeriesControl,
};
use crate::error::{Error, Result};
use crate::scenario::{
    log_negativity, Direction, NegativityResult, Scenario, TrajectorySegment,
};
use crate::units::{rindler_frequency, CavityConfig};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "CAVITY_SWEEP_OUT_DIR";

const DEFAULT_N_MAX: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AxisName {
    U,
    V,
    W,
}

impl AxisName {
    fn index(self) -> usize {
        self as usize
    }

    fn parse(s: &str) -> Option<Self> {
        match s.trim() {
            "u" => Some(AxisName::U),
            "v" => Some(AxisName::V),
            "w" => Some(AxisName::W),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub name: AxisName,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Axis {
    pub fn values(&self) -> Vec<f64> {
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.stop
                } else {
                    self.start + step * i as f64
                }
            })
            .collect()
    }
}

/// Duration of a custom segment: a literal proper time or an axis variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DurationSpec {
    Value(f64),
    Axis(AxisName),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SegmentSpec {
    Accelerated(Direction, DurationSpec),
    Inertial(DurationSpec),
}

#[derive(Debug, Clone, PartialEq)]
pub enum ScenarioKind {
    OneWay,
    AlphaCentauri,
    RoundTrip,
    Kickstart,
    Custom(Vec<SegmentSpec>),
}

impl ScenarioKind {
    pub fn id(&self) -> &'static str {
        match self {
            ScenarioKind::OneWay => "one-way",
            ScenarioKind::AlphaCentauri => "alpha-centauri",
            ScenarioKind::RoundTrip => "round-trip",
            ScenarioKind::Kickstart => "kickstart",
            ScenarioKind::Custom(_) => "custom",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    ClosedForm,
    General,
    Both,
}

impl Mode {
    fn parse(s: &str) -> Option<Self> {
        match s {
            "closed-form" | "closed" => Some(Mode::ClosedForm),
            "general" => Some(Mode::General),
            "both" => Some(Mode::Both),
            _ => None,
        }
    }
}

/// A fully resolved sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    /// Used for the default output file name.
    pub name: String,
    pub scenario: ScenarioKind,
    pub axes: Vec<Axis>,
    pub ks: Vec<usize>,
    pub h: f64,
    pub mass: f64,
    pub delta: f64,
    /// `None` until set explicitly; general evaluation falls back to 512.
    pub n_max: Option<usize>,
    pub r_max: usize,
    pub mode: Mode,
    /// Values of `u, v, w` that are not swept.
    pub fixed_phases: [f64; 3],
    pub output: Option<PathBuf>,
    pub workers: Option<usize>,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            name: "sweep".into(),
            scenario: ScenarioKind::OneWay,
            axes: Vec::new(),
            ks: vec![1],
            h: 0.01,
            mass: 0.0,
            delta: 1.0,
            n_max: None,
            r_max: SeriesControl::default().r_max,
            mode: Mode::ClosedForm,
            fixed_phases: [0.0; 3],
            output: None,
            workers: None,
        }
    }
}

fn axis(name: AxisName, start: f64, stop: f64, count: usize) -> Axis {
    Axis {
        name,
        start,
        stop,
        count,
    }
}

const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

/// Presets: `fig2`, `fig3`, `fig4a`, `fig4b`, `fig4c`, `fig5a`, `fig5b`.
pub fn preset(name: &str) -> Result<SweepSpec> {
    let base = SweepSpec {
        name: name.to_string(),
        ..SweepSpec::default()
    };
    let uv = vec![
        axis(AxisName::U, 0.0, TWO_PI, 101),
        axis(AxisName::V, 0.0, TWO_PI, 101),
    ];
    let spec = match name {
        "fig2" => SweepSpec {
            axes: vec![axis(AxisName::U, 0.0, TWO_PI, 201)],
            ..base
        },
        "fig3" => SweepSpec {
            scenario: ScenarioKind::AlphaCentauri,
            axes: uv,
            ..base
        },
        "fig4a" | "fig4b" | "fig4c" => {
            // τ̄″ = 0, 2δ/3, 4δ/3
            let rest = match name {
                "fig4a" => 0.0,
                "fig4b" => 2.0 / 3.0,
                _ => 4.0 / 3.0,
            };
            SweepSpec {
                scenario: ScenarioKind::RoundTrip,
                axes: uv,
                fixed_phases: [0.0, 0.0, std::f64::consts::PI * rest],
                ..base
            }
        }
        "fig5a" | "fig5b" => {
            let mass = 1e3;
            let (ks, count) = if name == "fig5a" {
                (vec![1, 2, 3, 4], 2001)
            } else {
                (vec![30], 4001)
            };
            // u/(4M) ∈ [0, 2]
            SweepSpec {
                ks,
                mass,
                h: 1e-6,
                n_max: Some(400),
                axes: vec![axis(AxisName::U, 0.0, 8.0 * mass, count)],
                ..base
            }
        }
        other => {
            return Err(Error::config(
                "preset",
                format!("unknown preset `{other}` (fig2, fig3, fig4a/b/c, fig5a/b)"),
            ))
        }
    };
    Ok(spec)
}

/// Parses `1.5`, `pi`, `2pi`, `2*pi`, `pi/2`, `-3*pi/4`, …
pub fn parse_number(text: &str) -> Option<f64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.as_str()),
    };
    let mut value = 1.0;
    let mut first = true;
    let mut divide = false;
    let mut rest = body;
    loop {
        let end = rest.find(['*', '/']).unwrap_or(rest.len());
        let factor = parse_factor(&rest[..end])?;
        value = if first {
            factor
        } else if divide {
            value / factor
        } else {
            value * factor
        };
        first = false;
        if end == rest.len() {
            break;
        }
        divide = rest.as_bytes()[end] == b'/';
        rest = &rest[end + 1..];
    }
    value = if neg { -value } else { value };
    value.is_finite().then_some(value)
}

fn parse_factor(f: &str) -> Option<f64> {
    if f == "pi" {
        return Some(std::f64::consts::PI);
    }
    if let Some(coeff) = f.strip_suffix("pi") {
        return coeff.parse::<f64>().ok().map(|c| c * std::f64::consts::PI);
    }
    f.parse::<f64>().ok()
}

fn num(field: &str, value: &str) -> Result<f64> {
    parse_number(value).ok_or_else(|| Error::config(field, format!("not a number: `{value}`")))
}

fn count(field: &str, value: &str) -> Result<usize> {
    value
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::config(field, format!("not a non-negative integer: `{value}`")))
}

fn parse_axis(value: &str) -> Result<Axis> {
    let (name, range) = value
        .split_once('=')
        .ok_or_else(|| Error::config("axis", "expected name=start:stop:count"))?;
    let name = AxisName::parse(name)
        .ok_or_else(|| Error::config("axis", format!("unknown axis `{}` (u, v, w)", name.trim())))?;
    let parts: Vec<&str> = range.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::config("axis", "expected name=start:stop:count"));
    }
    Ok(Axis {
        name,
        start: num("axis", parts[0])?,
        stop: num("axis", parts[1])?,
        count: count("axis", parts[2])?,
    })
}

fn parse_duration(field: &str, s: &str) -> Result<DurationSpec> {
    match AxisName::parse(s) {
        Some(a) => Ok(DurationSpec::Axis(a)),
        None => num(field, s).map(DurationSpec::Value),
    }
}

/// Parses `accel+:1.2, coast:v, accel-:u`.
pub fn parse_segments(value: &str) -> Result<Vec<SegmentSpec>> {
    let mut out = Vec::new();
    for item in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (kind, dur) = item
            .split_once(':')
            .ok_or_else(|| Error::config("segments", format!("expected kind:duration in `{item}`")))?;
        let d = parse_duration("segments", dur)?;
        out.push(match kind.trim() {
            "accel+" | "accel" => SegmentSpec::Accelerated(Direction::Right, d),
            "accel-" => SegmentSpec::Accelerated(Direction::Left, d),
            "coast" | "rest" | "inertial" => SegmentSpec::Inertial(d),
            other => {
                return Err(Error::config(
                    "segments",
                    format!("unknown segment kind `{other}` (accel+, accel-, coast)"),
                ))
            }
        });
    }
    if out.is_empty() {
        return Err(Error::config("segments", "no segments given"));
    }
    Ok(out)
}

/// Parses a flat `key = value` configuration into ordered pairs.
pub fn parse_config(text: &str) -> Result<Vec<(String, String)>> {
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            Error::config(format!("line {}", i + 1), format!("expected key = value, got `{line}`"))
        })?;
        pairs.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(pairs)
}

impl SweepSpec {
    /// Resolves a spec from key/value pairs: a `preset` (last one wins) is
    /// applied first, then every other pair in order. Axes given here
    /// replace the preset's axes.
    pub fn from_pairs(pairs: &[(String, String)]) -> Result<Self> {
        let mut spec = match pairs.iter().rev().find(|(k, _)| k == "preset") {
            Some((_, name)) => preset(name)?,
            None => SweepSpec::default(),
        };
        let mut axes_reset = false;
        let mut scenario_name: Option<String> = None;
        let mut segments: Option<Vec<SegmentSpec>> = None;
        for (key, value) in pairs {
            let value = value.as_str();
            match key.as_str() {
                "preset" => {}
                "scenario" => scenario_name = Some(value.to_string()),
                "segments" => segments = Some(parse_segments(value)?),
                "k" => {
                    spec.ks = value
                        .split(',')
                        .map(|s| count("k", s))
                        .collect::<Result<Vec<_>>>()?;
                }
                "h" => spec.h = num("h", value)?,
                "M" | "mass" => spec.mass = num("M", value)?,
                "delta" => spec.delta = num("delta", value)?,
                "n_max" | "n-max" => spec.n_max = Some(count("n_max", value)?),
                "r_max" | "r-max" => spec.r_max = count("r_max", value)?,
                "mode" => {
                    spec.mode = Mode::parse(value).ok_or_else(|| {
                        Error::config("mode", format!("`{value}` (closed-form, general, both)"))
                    })?
                }
                "axis" => {
                    if !axes_reset {
                        spec.axes.clear();
                        axes_reset = true;
                    }
                    spec.axes.push(parse_axis(value)?);
                }
                "u" => spec.fixed_phases[0] = num("u", value)?,
                "v" => spec.fixed_phases[1] = num("v", value)?,
                "w" => spec.fixed_phases[2] = num("w", value)?,
                "out" => spec.output = Some(PathBuf::from(value)),
                "workers" => spec.workers = Some(count("workers", value)?),
                "name" => spec.name = value.to_string(),
                other => return Err(Error::config(other, "unknown key")),
            }
        }
        if let Some(name) = scenario_name {
            spec.scenario = match name.as_str() {
                "one-way" => ScenarioKind::OneWay,
                "alpha-centauri" | "two-way" => ScenarioKind::AlphaCentauri,
                "round-trip" => ScenarioKind::RoundTrip,
                "kickstart" => ScenarioKind::Kickstart,
                "custom" => ScenarioKind::Custom(segments.clone().ok_or_else(|| {
                    Error::config("segments", "custom scenario needs `segments`")
                })?),
                other => return Err(Error::config("scenario", format!("unknown scenario `{other}`"))),
            };
            if !pairs.iter().any(|(k, _)| k == "preset" || k == "name") {
                spec.name = spec.scenario.id().to_string();
            }
        } else if segments.is_some() {
            return Err(Error::config("segments", "only valid with scenario = custom"));
        }
        spec.validate()?;
        Ok(spec)
    }

    /// Checks ranges and combinations; numeric violations (`|h| ≥ 2`) are
    /// domain errors, everything else is a config error.
    pub fn validate(&self) -> Result<()> {
        if self.axes.len() > 3 {
            return Err(Error::config("axis", "at most three axes"));
        }
        for (i, a) in self.axes.iter().enumerate() {
            if a.count < 2 {
                return Err(Error::config("axis", format!("{:?} needs count >= 2", a.name)));
            }
            if !(a.start.is_finite() && a.stop.is_finite()) {
                return Err(Error::config("axis", "range must be finite"));
            }
            if self.axes[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::config("axis", format!("{:?} given twice", a.name)));
            }
        }
        if self.ks.is_empty() || self.ks.contains(&0) {
            return Err(Error::config("k", "mode indices must be >= 1"));
        }
        if !(self.h.abs() < 2.0) {
            return Err(Error::domain(format!("|h| must be < 2, got {}", self.h)));
        }
        if !(self.mass >= 0.0 && self.mass.is_finite()) {
            return Err(Error::config("M", "must be >= 0"));
        }
        if !(self.delta > 0.0 && self.delta.is_finite()) {
            return Err(Error::config("delta", "must be > 0"));
        }
        if self.mode == Mode::Both && self.n_max.is_none() {
            return Err(Error::config("n_max", "mode = both requires n_max"));
        }
        let kmax = *self.ks.iter().max().unwrap();
        if self.mode != Mode::ClosedForm && 2 * kmax > self.n_max_or_default() {
            return Err(Error::config("n_max", format!("must be >= 2k = {}", 2 * kmax)));
        }
        if self.mode != Mode::General {
            let massive = self.mass > 0.0;
            match (&self.scenario, massive) {
                (ScenarioKind::Custom(_), _) => {
                    return Err(Error::config("mode", "custom scenarios have no closed form"))
                }
                (ScenarioKind::OneWay, _) | (_, false) => {}
                (_, true) => {
                    return Err(Error::config(
                        "mode",
                        "massive closed form exists only for the one-way scenario",
                    ))
                }
            }
            if massive && self.n_max_or_default() <= kmax {
                return Err(Error::config("n_max", "must exceed k"));
            }
        }
        if self.workers == Some(0) {
            return Err(Error::config("workers", "must be >= 1"));
        }
        Ok(())
    }

    fn n_max_or_default(&self) -> usize {
        self.n_max.unwrap_or(DEFAULT_N_MAX)
    }

    /// Grid points `[u, v, w]` in lexicographic axis order.
    pub fn grid(&self) -> Vec<[f64; 3]> {
        let mut points = vec![self.fixed_phases];
        for a in &self.axes {
            let vals = a.values();
            points = points
                .into_iter()
                .flat_map(|p| {
                    vals.iter().map(move |&x| {
                        let mut q = p;
                        q[a.name.index()] = x;
                        q
                    })
                })
                .collect();
        }
        points
    }
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub scenario: &'static str,
    pub k: usize,
    pub h: f64,
    pub mass: f64,
    pub u: f64,
    pub v: f64,
    pub w: f64,
    pub deficit_scaled: f64,
    pub negativity: f64,
    pub log_negativity: f64,
    pub method: &'static str,
    pub truncation_tail: f64,
    /// `(closed, general)` in `both` mode.
    pub comparison: Option<(f64, f64)>,
}

impl SweepRow {
    pub fn abs_diff(&self) -> Option<f64> {
        self.comparison.map(|(c, g)| (c - g).abs())
    }
}

fn durations(spec: &SweepSpec, cfg: &CavityConfig, p: [f64; 3]) -> Result<(f64, f64, f64)> {
    let accel_time = |u: f64| -> Result<f64> {
        if cfg.is_massless() {
            Ok(u / rindler_frequency(1, cfg)?)
        } else {
            Ok(u * cfg.delta / std::f64::consts::PI)
        }
    };
    let inertial_time = |x: f64| x * spec.delta / std::f64::consts::PI;
    Ok((accel_time(p[0])?, inertial_time(p[1]), inertial_time(p[2])))
}

fn resolve(d: DurationSpec, times: (f64, f64, f64)) -> f64 {
    match d {
        DurationSpec::Value(x) => x,
        DurationSpec::Axis(AxisName::U) => times.0,
        DurationSpec::Axis(AxisName::V) => times.1,
        DurationSpec::Axis(AxisName::W) => times.2,
    }
}

fn general(spec: &SweepSpec, k: usize, p: [f64; 3]) -> Result<NegativityResult> {
    let cfg = CavityConfig::new(spec.delta, spec.mass, spec.h, k, spec.n_max_or_default())?;
    let t = durations(spec, &cfg, p)?;
    let scenario = match &spec.scenario {
        ScenarioKind::OneWay => Scenario::one_way(cfg, t.0),
        ScenarioKind::AlphaCentauri => Scenario::alpha_centauri(cfg, t.0, t.1),
        ScenarioKind::RoundTrip => Scenario::round_trip(cfg, t.0, t.1, t.2),
        ScenarioKind::Kickstart => Scenario::kickstart(cfg, t.0),
        ScenarioKind::Custom(segs) => Scenario::new(
            cfg,
            segs.iter()
                .map(|s| match *s {
                    SegmentSpec::Accelerated(direction, d) => TrajectorySegment::Accelerated {
                        direction,
                        duration: resolve(d, t),
                    },
                    SegmentSpec::Inertial(d) => TrajectorySegment::Inertial {
                        duration: resolve(d, t),
                    },
                })
                .collect(),
        ),
    };
    scenario.negativity()
}

fn closed(spec: &SweepSpec, k: usize, p: [f64; 3]) -> Result<NegativityResult> {
    if spec.mass > 0.0 {
        let tau = p[0] * spec.delta / std::f64::consts::PI;
        let r = negativity_massive_limit(
            k,
            spec.h,
            spec.mass,
            tau,
            spec.delta,
            spec.n_max_or_default(),
        )?;
        return Ok(r.result);
    }
    let ctrl = SeriesControl {
        r_max: spec.r_max,
        ..SeriesControl::default()
    };
    let phases = PhaseTuple::from_angles(p[0], p[1], p[2]);
    match spec.scenario {
        ScenarioKind::OneWay => negativity_one_way_with(k, spec.h, &phases, ctrl),
        ScenarioKind::AlphaCentauri => negativity_two_way_with(k, spec.h, &phases, ctrl),
        ScenarioKind::RoundTrip => negativity_round_trip_with(k, spec.h, &phases, ctrl),
        ScenarioKind::Kickstart => negativity_kickstart(k, spec.h),
        ScenarioKind::Custom(_) => Err(Error::config("mode", "custom scenarios have no closed form")),
    }
}

fn row(spec: &SweepSpec, k: usize, p: [f64; 3]) -> Result<SweepRow> {
    let (primary, comparison, method) = match spec.mode {
        Mode::ClosedForm => {
            let c = closed(spec, k, p)?;
            (c, None, c.method.as_str())
        }
        Mode::General => {
            let g = general(spec, k, p)?;
            (g, None, g.method.as_str())
        }
        Mode::Both => {
            let c = closed(spec, k, p)?;
            let g = general(spec, k, p)?;
            let merged = NegativityResult {
                truncation_tail: c.truncation_tail + g.truncation_tail,
                ..c
            };
            (merged, Some((c.deficit_scaled, g.deficit_scaled)), "both")
        }
    };
    Ok(SweepRow {
        scenario: spec.scenario.id(),
        k,
        h: spec.h,
        mass: spec.mass,
        u: p[0],
        v: p[1],
        w: p[2],
        deficit_scaled: primary.deficit_scaled,
        negativity: primary.negativity,
        log_negativity: log_negativity(&primary),
        method,
        truncation_tail: primary.truncation_tail,
        comparison,
    })
}

/// Evaluates every grid point; rows are ordered by `k`, then
/// lexicographically over the axes, independent of the worker count.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let grid = spec.grid();
    let jobs: Vec<(usize, [f64; 3])> = spec
        .ks
        .iter()
        .flat_map(|&k| grid.iter().map(move |&p| (k, p)))
        .collect();
    let work = || -> Result<Vec<SweepRow>> {
        jobs.par_iter().map(|&(k, p)| row(spec, k, p)).collect()
    };
    match spec.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::config("workers", e.to_string()))?
            .install(work),
        None => work(),
    }
}

/// Shortest round-trip decimal; exponent form outside `[1e-5, 1e16)`.
pub fn format_number(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || (1e-5..1e16).contains(&a) || !x.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

pub const CSV_COLUMNS: [&str; 12] = [
    "scenario",
    "k",
    "h",
    "M",
    "u",
    "v",
    "w",
    "deficit_scaled",
    "negativity",
    "log_negativity",
    "method",
    "truncation_tail",
];

/// CSV text: header, then one row per grid point; `\n` line endings.
pub fn to_csv(rows: &[SweepRow], mode: Mode) -> String {
    let mut out = CSV_COLUMNS.join(",");
    if mode == Mode::Both {
        out.push_str(",deficit_closed,deficit_general,abs_diff");
    }
    out.push('\n');
    for r in rows {
        let _ = write!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            r.scenario,
            r.k,
            format_number(r.h),
            format_number(r.mass),
            format_number(r.u),
            format_number(r.v),
            format_number(r.w),
            format_number(r.deficit_scaled),
            format_number(r.negativity),
            format_number(r.log_negativity),
            r.method,
            format_number(r.truncation_tail),
        );
        if let Some((c, g)) = r.comparison {
            let _ = write!(
                out,
                ",{},{},{}",
                format_number(c),
                format_number(g),
                format_number((c - g).abs())
            );
        }
        out.push('\n');
    }
    out
}

/// Where the sweep writes: `out` if set, otherwise `<name>.csv` in
/// `$CAVITY_SWEEP_OUT_DIR` (or the working directory). `-` means stdout.
pub fn output_path(spec: &SweepSpec) -> PathBuf {
    match &spec.output {
        Some(p) => p.clone(),
        None => {
            let dir = std::env::var_os(OUT_DIR_ENV)
                .map(PathBuf::from)
                .unwrap_or_else(|| PathBuf::from("."));
            dir.join(format!("{}.csv", spec.name))
        }
    }
}

pub fn write_csv(path: &Path, csv: &str) -> Result<()> {
    std::fs::write(path, csv).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Summary statistics of a one-axis sweep, handy for checking presets.
pub fn column_by_u(rows: &[SweepRow]) -> BTreeMap<usize, Vec<(f64, f64)>> {
    let mut map: BTreeMap<usize, Vec<(f64, f64)>> = BTreeMap::new();
    for r in rows {
        map.entry(r.k).or_default().push((r.u, r.deficit_scaled));
    }
    map
}
