//! Perturbative Bogoliubov transforms between cavity mode bases.
//!
//! A transform relates out-modes to in-modes by
//! `Ū_m = Σ_n (α_mn U_n + β_mn U*_n)` and is stored order by order in the
//! small acceleration parameter `h`:
//!
//! ```text
//! α = diag(z_1, z_2, …) + h α⁽¹⁾ + h² diag(α⁽²⁾) + …
//! β =                     h β⁽¹⁾ + …
//! ```
//!
//! All coefficients are per unit `h`. Matrices are indexed
//! `[row = out-mode m, column = in-mode n]` with 1-based mode numbers in the
//! public API.
//!
//! First-order blocks may be stored for a subset of in-mode columns. Column
//! `n` of a composite depends only on column `n` of its factors, so
//! column-restricted transforms compose cheaply at large truncations.

use std::f64::consts::PI;
use std::fmt::Write as _;

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::{extrapolated_tail, power_tail, CompensatedSum};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// First-order coefficient blocks `α⁽¹⁾`, `β⁽¹⁾` for selected in-mode columns.
#[derive(Debug, Clone, PartialEq)]
pub struct FirstOrder {
    columns: Vec<usize>,
    alpha: Array2<Complex64>,
    beta: Array2<Complex64>,
}

impl FirstOrder {
    fn zeros(n_max: usize, columns: Vec<usize>) -> Self {
        let shape = (n_max, columns.len());
        FirstOrder {
            columns,
            alpha: Array2::zeros(shape),
            beta: Array2::zeros(shape),
        }
    }

    fn slot(&self, n: usize) -> Option<usize> {
        self.columns.binary_search(&n).ok()
    }

    /// Stored in-mode columns, increasing, 1-based.
    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    pub fn alpha(&self) -> &Array2<Complex64> {
        &self.alpha
    }

    pub fn beta(&self) -> &Array2<Complex64> {
        &self.beta
    }
}

/// A Bogoliubov pair `(α, β)` expanded in `h`.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbativeTransform {
    order0: Vec<Complex64>,
    /// `None` means `α⁽¹⁾ = β⁽¹⁾ = 0` in every column.
    first: Option<FirstOrder>,
    alpha2_diag: Option<Vec<Complex64>>,
}

fn validate_columns(n_max: usize, columns: &[usize]) -> Result<Vec<usize>> {
    let mut cols = columns.to_vec();
    cols.sort_unstable();
    cols.dedup();
    if cols.is_empty() {
        return Err(Error::argument("column selection is empty"));
    }
    if cols[0] == 0 || *cols.last().unwrap() > n_max {
        return Err(Error::argument(format!(
            "columns must lie in 1..={n_max}, got {columns:?}"
        )));
    }
    Ok(cols)
}

fn check_n_max(n_max: usize) -> Result<()> {
    if n_max < 2 {
        Err(Error::argument(format!("n_max must be >= 2, got {n_max}")))
    } else {
        Ok(())
    }
}

impl PerturbativeTransform {
    pub fn identity(n_max: usize) -> Self {
        PerturbativeTransform {
            order0: vec![ONE; n_max],
            first: None,
            alpha2_diag: Some(vec![ZERO; n_max]),
        }
    }

    pub fn n_max(&self) -> usize {
        self.order0.len()
    }

    /// Unit-modulus order-0 phases `z_n`, index `n - 1`.
    pub fn order0(&self) -> &[Complex64] {
        &self.order0
    }

    pub fn first_order(&self) -> Option<&FirstOrder> {
        self.first.as_ref()
    }

    /// Second-order diagonal of `α`, index `n - 1`, when known.
    pub fn alpha2_diag(&self) -> Option<&[Complex64]> {
        self.alpha2_diag.as_deref()
    }

    /// True when every in-mode column of the first-order blocks is known.
    pub fn is_full(&self) -> bool {
        self.first
            .as_ref()
            .is_none_or(|f| f.columns.len() == self.n_max())
    }

    /// Whether column `n` of the first-order blocks is available.
    pub fn has_column(&self, n: usize) -> bool {
        n >= 1
            && n <= self.n_max()
            && self.first.as_ref().is_none_or(|f| f.slot(n).is_some())
    }

    fn entry(&self, m: usize, n: usize, beta: bool) -> Option<Complex64> {
        if m == 0 || n == 0 || m > self.n_max() || n > self.n_max() {
            return None;
        }
        match &self.first {
            None => Some(ZERO),
            Some(f) => f.slot(n).map(|j| {
                if beta {
                    f.beta[[m - 1, j]]
                } else {
                    f.alpha[[m - 1, j]]
                }
            }),
        }
    }

    /// `α⁽¹⁾_mn`, or `None` if column `n` is not stored.
    pub fn alpha1(&self, m: usize, n: usize) -> Option<Complex64> {
        self.entry(m, n, false)
    }

    /// `β⁽¹⁾_mn`, or `None` if column `n` is not stored.
    pub fn beta1(&self, m: usize, n: usize) -> Option<Complex64> {
        self.entry(m, n, true)
    }

    /// Iterates `(m, α⁽¹⁾_mn, β⁽¹⁾_mn)` down column `n`.
    pub fn column(&self, n: usize) -> Option<Vec<(usize, Complex64, Complex64)>> {
        if !self.has_column(n) {
            return None;
        }
        let rows = 1..=self.n_max();
        Some(match &self.first {
            None => rows.map(|m| (m, ZERO, ZERO)).collect(),
            Some(f) => {
                let j = f.slot(n).unwrap();
                rows.map(|m| (m, f.alpha[[m - 1, j]], f.beta[[m - 1, j]]))
                    .collect()
            }
        })
    }

    /// Multiplies the first-order blocks by `factor`; `-1` turns a boost at
    /// `h` into one at `-h`. The second-order diagonal is left unchanged,
    /// so only `factor = ±1` is meaningful for it.
    pub fn scale_first_order(mut self, factor: f64) -> Self {
        if let Some(f) = &mut self.first {
            f.alpha.mapv_inplace(|x| x * factor);
            f.beta.mapv_inplace(|x| x * factor);
        }
        self
    }

    /// Keeps only the listed first-order columns.
    pub fn restrict_columns(&self, columns: &[usize]) -> Result<Self> {
        let cols = validate_columns(self.n_max(), columns)?;
        let Some(f) = &self.first else {
            return Ok(self.clone());
        };
        let mut out = FirstOrder::zeros(self.n_max(), cols.clone());
        for (j, &n) in cols.iter().enumerate() {
            let src = f.slot(n).ok_or_else(|| {
                Error::argument(format!("column {n} is not stored in this transform"))
            })?;
            out.alpha.column_mut(j).assign(&f.alpha.column(src));
            out.beta.column_mut(j).assign(&f.beta.column(src));
        }
        Ok(PerturbativeTransform {
            order0: self.order0.clone(),
            first: Some(out),
            alpha2_diag: self.alpha2_diag.clone(),
        })
    }
}

/// Closed-form first-order entries `(α⁽¹⁾_mn, β⁽¹⁾_mn)` of a boost from
/// inertial to Rindler modes, for `m ≠ n`.
trait BoostEntries: Sync {
    fn entry(&self, m: usize, n: usize) -> (f64, f64);
    fn alpha2(&self, n: usize) -> f64;
}

struct MasslessBoost;

impl BoostEntries for MasslessBoost {
    fn entry(&self, m: usize, n: usize) -> (f64, f64) {
        if m == n || (m + n) % 2 == 0 {
            return (0.0, 0.0);
        }
        let (mf, nf) = (m as f64, n as f64);
        let root = (mf * nf).sqrt();
        let pi2 = PI * PI;
        let alpha = -2.0 * root / (pi2 * (mf - nf).powi(3));
        let beta = 2.0 * root / (pi2 * (mf + nf).powi(3));
        (alpha, beta)
    }

    fn alpha2(&self, n: usize) -> f64 {
        -PI * PI * (n * n) as f64 / 240.0
    }
}

struct MassiveBoost {
    mass: f64,
}

impl BoostEntries for MassiveBoost {
    fn entry(&self, m: usize, n: usize) -> (f64, f64) {
        if m == n || (m + n) % 2 == 0 {
            return (0.0, 0.0);
        }
        let (mf, nf) = (m as f64, n as f64);
        let pi2 = PI * PI;
        let m2 = self.mass * self.mass;
        // (M² + π²n²)^{1/4}
        let qm = self.mass.hypot(PI * mf).sqrt();
        let qn = self.mass.hypot(PI * nf).sqrt();
        let denom = PI.powi(4) * (mf * mf - nf * nf).powi(3);
        // parity factor (−1 + (−1)^{m−n}) = −2
        let pre = 2.0 * mf * nf * -2.0 / denom;
        let sum = pre * (pi2 * (nf * nf + 3.0 * mf * mf) + 4.0 * m2) * qn / qm;
        let diff = pre * (pi2 * (mf * mf + 3.0 * nf * nf) + 4.0 * m2) * qm / qn;
        ((sum + diff) / 2.0, (sum - diff) / 2.0)
    }

    fn alpha2(&self, n: usize) -> f64 {
        let nf = n as f64;
        let m2 = self.mass * self.mass;
        let pi2 = PI * PI;
        -(pi2 * nf * nf / 240.0
            + m2 / 120.0
            + m2 * (m2 - 5.0) / (240.0 * pi2 * nf * nf)
            + m2 * (m2 - 24.0) / (96.0 * pi2 * pi2 * nf.powi(4)))
    }
}

fn build_boost(
    coeffs: &dyn BoostEntries,
    n_max: usize,
    columns: Vec<usize>,
    inverse: bool,
) -> PerturbativeTransform {
    let mut first = FirstOrder::zeros(n_max, columns);
    for (j, &n) in first.columns.clone().iter().enumerate() {
        for m in 1..=n_max {
            // inverse coefficients (α†, −βᵀ); entries are real
            let (a, b) = if inverse {
                let (a, b) = coeffs.entry(n, m);
                (a, -b)
            } else {
                coeffs.entry(m, n)
            };
            first.alpha[[m - 1, j]] = Complex64::new(a, 0.0);
            first.beta[[m - 1, j]] = Complex64::new(b, 0.0);
        }
    }
    let alpha2 = (1..=n_max)
        .map(|n| Complex64::new(coeffs.alpha2(n), 0.0))
        .collect();
    PerturbativeTransform {
        order0: vec![ONE; n_max],
        first: Some(first),
        alpha2_diag: Some(alpha2),
    }
}

/// Which boost family a builder evaluates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoostKind {
    Massless,
    /// Massive field with dimensionless mass `M ≥ 0`.
    Massive(f64),
}

/// Boost from inertial to Rindler modes (or its inverse) restricted to the
/// given in-mode columns.
pub fn boost_columns(
    kind: BoostKind,
    n_max: usize,
    columns: &[usize],
    inverse: bool,
) -> Result<PerturbativeTransform> {
    check_n_max(n_max)?;
    let cols = validate_columns(n_max, columns)?;
    Ok(match kind {
        BoostKind::Massless => build_boost(&MasslessBoost, n_max, cols, inverse),
        BoostKind::Massive(mass) => {
            if !(mass >= 0.0 && mass.is_finite()) {
                return Err(Error::domain(format!("M must be >= 0, got {mass}")));
            }
            build_boost(&MassiveBoost { mass }, n_max, cols, inverse)
        }
    })
}

/// `Σ_{m > n_max} (½|α⁽¹⁾_mk|² + |β⁽¹⁾_mk|²)` for column `k` of a single
/// boost (the inverse has the same magnitudes). Rows up to `4·n_max` are
/// summed; the rest is bounded from the last term with `m⁻⁵` decay.
pub fn boost_column_tail(kind: BoostKind, k: usize, n_max: usize) -> f64 {
    let massless = MasslessBoost;
    let massive;
    let coeffs: &dyn BoostEntries = match kind {
        BoostKind::Massless => &massless,
        BoostKind::Massive(mass) => {
            massive = MassiveBoost { mass };
            &massive
        }
    };
    let first = if (n_max + 1 + k) % 2 == 1 { n_max + 1 } else { n_max + 2 };
    let mut sum = CompensatedSum::new();
    let mut last = (first as f64, 0.0);
    for m in (first..=4 * n_max.max(1)).step_by(2) {
        let (a, b) = coeffs.entry(m, k);
        let t = 0.5 * a * a + b * b;
        sum.add(t);
        last = (m as f64, t);
    }
    let (m, t) = last;
    sum.value() + t * m.powi(5) * power_tail(m, 5.0, 2.0)
}

/// Massless inertial→Rindler boost, all columns, per unit `h`.
pub fn massless_boost_transform(n_max: usize) -> Result<PerturbativeTransform> {
    check_n_max(n_max)?;
    let all: Vec<usize> = (1..=n_max).collect();
    boost_columns(BoostKind::Massless, n_max, &all, false)
}

/// Massive inertial→Rindler boost, all columns, per unit `h`.
///
/// The first-order blocks are recovered from the sum and difference
/// combinations `α ± β` of the uniform asymptotic expansion.
pub fn massive_boost_transform(n_max: usize, mass: f64) -> Result<PerturbativeTransform> {
    check_n_max(n_max)?;
    let all: Vec<usize> = (1..=n_max).collect();
    boost_columns(BoostKind::Massive(mass), n_max, &all, false)
}

/// Free evolution for proper time `tau`: `z_n = exp(i·freq_n·tau)` and no
/// mode mixing.
pub fn phase_rotation(tau: f64, frequencies: &[f64], n_max: usize) -> Result<PerturbativeTransform> {
    if frequencies.len() < n_max {
        return Err(Error::argument(format!(
            "need {n_max} frequencies, got {}",
            frequencies.len()
        )));
    }
    let order0 = frequencies[..n_max]
        .iter()
        .map(|&w| Complex64::from_polar(1.0, w * tau))
        .collect();
    Ok(PerturbativeTransform {
        order0,
        first: None,
        alpha2_diag: Some(vec![ZERO; n_max]),
    })
}

/// Applies `first`, then `second`.
///
/// With `Ū = A U + B U*` the chain rule is `A = A₂A₁ + B₂B₁*`,
/// `B = A₂B₁ + B₂A₁*`, kept to first order off the diagonal and second
/// order on the diagonal of `α`.
pub fn compose(
    second: &PerturbativeTransform,
    first: &PerturbativeTransform,
) -> Result<PerturbativeTransform> {
    let n_max = first.n_max();
    if second.n_max() != n_max {
        return Err(Error::argument(format!(
            "cannot compose transforms with n_max {} and {}",
            second.n_max(),
            n_max
        )));
    }
    let z1 = &first.order0;
    let z2 = &second.order0;
    let order0: Vec<Complex64> = z1.iter().zip(z2).map(|(a, b)| a * b).collect();

    let columns: Option<Vec<usize>> = match (&second.first, &first.first) {
        (None, None) => None,
        (Some(s), None) => Some(s.columns.clone()),
        (None, Some(f)) => Some(f.columns.clone()),
        (Some(s), Some(f)) => {
            let shared: Vec<usize> = f
                .columns
                .iter()
                .copied()
                .filter(|n| s.slot(*n).is_some())
                .collect();
            if shared.is_empty() {
                return Err(Error::argument("transforms share no stored columns"));
            }
            Some(shared)
        }
    };

    let first_block = columns.map(|cols| {
        let mut out = FirstOrder::zeros(n_max, cols);
        for (j, &n) in out.columns.clone().iter().enumerate() {
            if let Some(f) = &first.first {
                let src = f.slot(n).unwrap();
                for m in 0..n_max {
                    out.alpha[[m, j]] += z2[m] * f.alpha[[m, src]];
                    out.beta[[m, j]] += z2[m] * f.beta[[m, src]];
                }
            }
            if let Some(s) = &second.first {
                let src = s.slot(n).unwrap();
                let zn = z1[n - 1];
                let zn_conj = zn.conj();
                for m in 0..n_max {
                    out.alpha[[m, j]] += s.alpha[[m, src]] * zn;
                    out.beta[[m, j]] += s.beta[[m, src]] * zn_conj;
                }
            }
        }
        out
    });

    // Σ_m α₂[n,m] α₁[m,n] needs full rows of the second factor and full
    // columns of the first.
    let alpha2_diag = match (&second.alpha2_diag, &first.alpha2_diag) {
        (Some(a2s), Some(a2f)) if second.is_full() && first.is_full() => {
            let mut diag: Vec<Complex64> = (0..n_max)
                .map(|i| z2[i] * a2f[i] + a2s[i] * z1[i])
                .collect();
            if let (Some(s), Some(f)) = (&second.first, &first.first) {
                for (i, d) in diag.iter_mut().enumerate() {
                    let mut acc = ZERO;
                    for m in 0..n_max {
                        acc += s.alpha[[i, m]] * f.alpha[[m, i]];
                        acc += s.beta[[i, m]] * f.beta[[m, i]].conj();
                    }
                    *d += acc;
                }
            }
            Some(diag)
        }
        _ => None,
    };

    Ok(PerturbativeTransform {
        order0,
        first: first_block,
        alpha2_diag,
    })
}

/// Inverse transform `(α†, −βᵀ)`. Requires every first-order column.
pub fn inverse(t: &PerturbativeTransform) -> Result<PerturbativeTransform> {
    let n_max = t.n_max();
    let first = match &t.first {
        None => None,
        Some(f) => {
            if f.columns.len() != n_max {
                return Err(Error::argument(
                    "inverse needs all first-order columns; build the inverse boost directly",
                ));
            }
            let mut out = FirstOrder::zeros(n_max, f.columns.clone());
            for m in 0..n_max {
                for n in 0..n_max {
                    out.alpha[[m, n]] = f.alpha[[n, m]].conj();
                    out.beta[[m, n]] = -f.beta[[n, m]];
                }
            }
            Some(out)
        }
    };
    Ok(PerturbativeTransform {
        order0: t.order0.iter().map(|z| z.conj()).collect(),
        first,
        alpha2_diag: t
            .alpha2_diag
            .as_ref()
            .map(|d| d.iter().map(|z| z.conj()).collect()),
    })
}

/// Order-h² diagonal identity for one in-mode `n`:
/// `Σ_m (|α⁽¹⁾_mn|² − |β⁽¹⁾_mn|²) + 2 Re(z̄_n α⁽²⁾_nn) = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagonalIdentity {
    pub n: usize,
    /// Truncated `Σ_m (|α⁽¹⁾_mn|² − |β⁽¹⁾_mn|²)`.
    pub pair_sum: f64,
    /// `−2 Re(z̄_n α⁽²⁾_nn)`, the value the sum should reach.
    pub expected: f64,
    pub residual: f64,
    /// Estimated contribution of rows beyond `n_max`.
    pub tail_estimate: f64,
    /// Rounding allowance for the compensated sum.
    pub roundoff: f64,
}

impl DiagonalIdentity {
    pub fn within_tolerance(&self) -> bool {
        self.residual <= self.tail_estimate + self.roundoff
    }
}

/// Deviations from the Bogoliubov identities `αα† − ββ† = 1`,
/// `αβᵀ − βαᵀ = 0` (and `α†α − βᵀβ* = 1` on the diagonal), per order.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityResidual {
    pub order0_residual: f64,
    /// Over pairs `(m, n)` whose columns are both stored.
    pub order1_residual: f64,
    /// `None` when `α⁽²⁾` is unavailable.
    pub order2_diag_residual: Option<f64>,
    pub truncation: usize,
    /// Largest per-column tail estimate among the checked columns.
    pub tail_estimate: f64,
    pub diagonal: Vec<DiagonalIdentity>,
}

impl IdentityResidual {
    /// Order-2 check against tail plus rounding, column by column.
    pub fn order2_within_tolerance(&self) -> Option<bool> {
        self.order2_diag_residual?;
        Some(self.diagonal.iter().all(DiagonalIdentity::within_tolerance))
    }
}

/// Measures identity residuals order by order.
///
/// The order-2 diagonal check is made for stored columns `n ≤ n_max/2`,
/// whose sums have room to converge.
pub fn check_identities(t: &PerturbativeTransform) -> IdentityResidual {
    let n_max = t.n_max();
    let order0_residual = t
        .order0
        .iter()
        .map(|z| (z.norm_sqr() - 1.0).abs())
        .fold(0.0, f64::max);

    let cols: Vec<usize> = match &t.first {
        None => (1..=n_max).collect(),
        Some(f) => f.columns.clone(),
    };

    let mut order1_residual: f64 = 0.0;
    if let Some(f) = &t.first {
        for (jn, &n) in f.columns.iter().enumerate() {
            for (jm, &m) in f.columns.iter().enumerate() {
                let (zm, zn) = (t.order0[m - 1], t.order0[n - 1]);
                let a_mn = f.alpha[[m - 1, jn]];
                let a_nm = f.alpha[[n - 1, jm]];
                let b_mn = f.beta[[m - 1, jn]];
                let b_nm = f.beta[[n - 1, jm]];
                let r1 = zm * a_nm.conj() + a_mn * zn.conj();
                let r2 = zm * b_nm - b_mn * zn;
                order1_residual = order1_residual.max(r1.norm()).max(r2.norm());
            }
        }
    }

    let mut diagonal = Vec::new();
    if let Some(a2) = &t.alpha2_diag {
        for &n in cols.iter().filter(|&&n| 2 * n <= n_max) {
            let column = t.column(n).unwrap();
            let mut sum = CompensatedSum::new();
            let mut magnitude = 0.0;
            let mut terms = Vec::new();
            for &(m, a, b) in column.iter().filter(|(m, _, _)| *m != n) {
                let (a2m, b2m) = (a.norm_sqr(), b.norm_sqr());
                sum.add(a2m - b2m);
                magnitude += a2m + b2m;
                if a2m + b2m > 0.0 {
                    terms.push((m as f64, a2m + b2m));
                }
            }
            let expected = -2.0 * (t.order0[n - 1].conj() * a2[n - 1]).re;
            let pair_sum = sum.value();
            let tail_estimate = extrapolated_tail(&terms, 5.0, 2.0, 8);
            let roundoff = 16.0 * f64::EPSILON * (magnitude + expected.abs());
            diagonal.push(DiagonalIdentity {
                n,
                pair_sum,
                expected,
                residual: (pair_sum - expected).abs(),
                tail_estimate,
                roundoff,
            });
        }
    }

    let order2_diag_residual = t
        .alpha2_diag
        .as_ref()
        .map(|_| diagonal.iter().map(|d| d.residual).fold(0.0, f64::max));
    let tail_estimate = diagonal.iter().map(|d| d.tail_estimate).fold(0.0, f64::max);

    IdentityResidual {
        order0_residual,
        order1_residual,
        order2_diag_residual,
        truncation: n_max,
        tail_estimate,
        diagonal,
    }
}

const DUMP_MAGIC: &str = "perturbative-transform v1";

fn push_complex(out: &mut String, z: Complex64) {
    let _ = write!(out, " {:.16e} {:.16e}", z.re, z.im);
}

/// Text dump for cross-language diffing: dimensions, then each order block
/// in row-major order, 17 significant digits.
pub fn write_dump(t: &PerturbativeTransform) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{DUMP_MAGIC}");
    let _ = writeln!(out, "n_max {}", t.n_max());
    out.push_str("order0");
    for &z in &t.order0 {
        push_complex(&mut out, z);
    }
    out.push('\n');
    match &t.first {
        None => out.push_str("first_order none\n"),
        Some(f) => {
            out.push_str("columns");
            for c in &f.columns {
                let _ = write!(out, " {c}");
            }
            out.push('\n');
            for (name, block) in [("alpha1", &f.alpha), ("beta1", &f.beta)] {
                let _ = writeln!(out, "{name} {} {}", block.nrows(), block.ncols());
                for row in block.rows() {
                    for &z in row {
                        push_complex(&mut out, z);
                    }
                    out.push('\n');
                }
            }
        }
    }
    match &t.alpha2_diag {
        None => out.push_str("alpha2_diag none\n"),
        Some(d) => {
            out.push_str("alpha2_diag");
            for &z in d {
                push_complex(&mut out, z);
            }
            out.push('\n');
        }
    }
    out
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::config("transform dump", msg)
}

fn parse_complex_list(tokens: &[&str]) -> Result<Vec<Complex64>> {
    if tokens.len() % 2 != 0 {
        return Err(parse_err("odd number of real components"));
    }
    tokens
        .chunks(2)
        .map(|p| {
            let re = p[0].parse::<f64>().map_err(|e| parse_err(e.to_string()))?;
            let im = p[1].parse::<f64>().map_err(|e| parse_err(e.to_string()))?;
            Ok(Complex64::new(re, im))
        })
        .collect()
}

/// Parses the output of [`write_dump`].
pub fn read_dump(text: &str) -> Result<PerturbativeTransform> {
    let mut lines = text.lines();
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| parse_err(format!("missing {what}")))
    };
    if next("header")?.trim() != DUMP_MAGIC {
        return Err(parse_err("unknown header"));
    }
    let n_line = next("n_max")?;
    let n_max: usize = n_line
        .strip_prefix("n_max ")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| parse_err("bad n_max line"))?;

    let tokens: Vec<&str> = next("order0")?.split_whitespace().collect();
    if tokens.first() != Some(&"order0") {
        return Err(parse_err("expected order0"));
    }
    let order0 = parse_complex_list(&tokens[1..])?;
    if order0.len() != n_max {
        return Err(parse_err("order0 length mismatch"));
    }

    let line = next("first-order section")?;
    let first = if line.trim() == "first_order none" {
        None
    } else {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.first() != Some(&"columns") {
            return Err(parse_err("expected columns"));
        }
        let columns = tokens[1..]
            .iter()
            .map(|t| t.parse::<usize>().map_err(|e| parse_err(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let mut block = FirstOrder::zeros(n_max, validate_columns(n_max, &columns)?);
        for name in ["alpha1", "beta1"] {
            let header = next(name)?;
            let expect = format!("{name} {} {}", n_max, block.columns.len());
            if header.trim() != expect {
                return Err(parse_err(format!("expected `{expect}`")));
            }
            for m in 0..n_max {
                let row = parse_complex_list(
                    &next("matrix row")?.split_whitespace().collect::<Vec<_>>(),
                )?;
                if row.len() != block.columns.len() {
                    return Err(parse_err("row length mismatch"));
                }
                let target = if name == "alpha1" {
                    &mut block.alpha
                } else {
                    &mut block.beta
                };
                for (j, z) in row.into_iter().enumerate() {
                    target[[m, j]] = z;
                }
            }
        }
        Some(block)
    };

    let line = next("alpha2_diag")?;
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.first() != Some(&"alpha2_diag") {
        return Err(parse_err("expected alpha2_diag"));
    }
    let alpha2_diag = if tokens.get(1) == Some(&"none") {
        None
    } else {
        let d = parse_complex_list(&tokens[1..])?;
        if d.len() != n_max {
            return Err(parse_err("alpha2_diag length mismatch"));
        }
        Some(d)
    };
    Ok(PerturbativeTransform {
        order0,
        first,
        alpha2_diag,
    })
}
