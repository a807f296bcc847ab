//! Tail bounds and summation helpers for truncated series.

/// Upper bound on `Σ_{j ≥ 1} (N + j·stride)^{-p}` by integral comparison,
/// valid for `p > 1` and `N ≥ 1`.
pub fn power_tail(last_index: f64, exponent: f64, stride: f64) -> f64 {
    debug_assert!(exponent > 1.0 && last_index >= 1.0);
    last_index.powf(1.0 - exponent) / ((exponent - 1.0) * stride)
}

/// Smallest `N` such that `power_tail(N, p, stride) ≤ tol / scale`.
pub fn terms_for_tolerance(scale: f64, exponent: f64, stride: f64, tol: f64) -> usize {
    let target = tol / scale.abs().max(f64::MIN_POSITIVE);
    let n = (target * (exponent - 1.0) * stride).powf(1.0 / (1.0 - exponent));
    n.ceil().max(1.0) as usize
}

/// Estimate of the neglected tail of a series whose terms decay like
/// `m^{-p}`, extrapolated from the last few retained terms.
///
/// `terms` is `(index, |term|)` in increasing index order. The largest
/// `|term|·(m/N)^p` over the final `window` entries is used as the
/// representative size at `N`, so an accidentally small last term does not
/// hide the tail.
pub fn extrapolated_tail(terms: &[(f64, f64)], exponent: f64, stride: f64, window: usize) -> f64 {
    let Some(&(last, _)) = terms.last() else {
        return 0.0;
    };
    let start = terms.len().saturating_sub(window);
    let rep = terms[start..]
        .iter()
        .map(|&(m, t)| t * (m / last).powf(exponent))
        .fold(0.0, f64::max);
    rep * last.powf(exponent) * power_tail(last, exponent, stride)
}

/// Neumaier-compensated sum.
#[derive(Debug, Default, Clone, Copy)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = CompensatedSum::new();
        for x in iter {
            s.add(x);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_tail_bounds_zeta_tail() {
        // Σ_{m>100} m^-6 versus the integral bound from 100
        let exact: f64 = (101..200_000).map(|m| (m as f64).powi(-6)).sum();
        let bound = power_tail(100.0, 6.0, 1.0);
        assert!(exact <= bound);
        assert!(exact > 0.9 * bound);
    }

    #[test]
    fn odd_stride_tail() {
        let exact: f64 = (0..100_000).map(|j| (101.0 + 2.0 * j as f64).powi(-5)).sum();
        let bound = power_tail(99.0, 5.0, 2.0);
        assert!(exact <= bound && exact > 0.9 * bound);
    }

    #[test]
    fn terms_for_tolerance_meets_target() {
        let n = terms_for_tolerance(1.0, 6.0, 1.0, 1e-14);
        assert!(power_tail(n as f64, 6.0, 1.0) <= 1e-14);
        assert!(power_tail((n - 1) as f64, 6.0, 1.0) > 1e-14 * 0.99);
    }

    #[test]
    fn extrapolated_tail_of_pure_power() {
        let terms: Vec<(f64, f64)> = (1..=50).map(|m| (m as f64, (m as f64).powi(-4))).collect();
        let est = extrapolated_tail(&terms, 4.0, 1.0, 4);
        assert!((est - power_tail(50.0, 4.0, 1.0)).abs() < 1e-18);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let s: CompensatedSum = [1.0, 1e-16, 1e-16, -1.0].into_iter().collect();
        assert!((s.value() - 2e-16).abs() < 1e-30);
    }
}
