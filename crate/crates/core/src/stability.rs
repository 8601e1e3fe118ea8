//! Von Neumann amplification factors for linear advection and stability
//! maps over the (θ, β) plane, with β = R sin(k dx).

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Modes with |g| up to this bound count as stable.
pub const STABILITY_TOLERANCE: f64 = 1e-12;

/// Fourier mode parametrised by β = R sin(k dx).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourierMode {
    pub beta: f64,
}

impl FourierMode {
    pub fn new(beta: f64) -> Self {
        Self { beta }
    }

    pub fn from_wavenumber(courant: f64, k: f64, dx: f64) -> Self {
        Self {
            beta: courant * (k * dx).sin(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplificationResult {
    pub g: Complex64,
    pub modulus: f64,
}

impl AmplificationResult {
    fn new(g: Complex64) -> Self {
        Self { g, modulus: g.norm() }
    }

    pub fn is_stable(&self) -> bool {
        self.modulus <= 1.0 + STABILITY_TOLERANCE
    }
}

/// GA θ-ICN: `g = 1 - 2β² + i(-2β + 4θ₁β³)`.
pub fn g_ga(theta1: f64, beta: f64) -> AmplificationResult {
    let b2 = beta * beta;
    AmplificationResult::new(Complex64::new(
        1.0 - 2.0 * b2,
        -2.0 * beta + 4.0 * theta1 * b2 * beta,
    ))
}

/// One θ-ICN step: `g = 1 - 4θβ² + i(-2β + 8θ²β³)`.
pub fn g_theta_step(theta: f64, beta: f64) -> AmplificationResult {
    let b2 = beta * beta;
    AmplificationResult::new(Complex64::new(
        1.0 - 4.0 * theta * b2,
        -2.0 * beta + 8.0 * theta * theta * b2 * beta,
    ))
}

/// AA θ-ICN over one odd/even pair of steps: `g_o · g_e`, θ_e = 1 − θ_o.
pub fn g_aa_composed(theta_odd: f64, beta: f64) -> AmplificationResult {
    let odd = g_theta_step(theta_odd, beta).g;
    let even = g_theta_step(1.0 - theta_odd, beta).g;
    AmplificationResult::new(odd * even)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StabilityVariant {
    Ga,
    Aa,
}

impl StabilityVariant {
    pub fn amplification(self, theta: f64, beta: f64) -> AmplificationResult {
        match self {
            StabilityVariant::Ga => g_ga(theta, beta),
            StabilityVariant::Aa => g_aa_composed(theta, beta),
        }
    }
}

/// Inclusive sampling range for one map axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisRange {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl AxisRange {
    pub fn new(min: f64, max: f64, points: usize) -> Result<Self> {
        if !(min.is_finite() && max.is_finite()) || min > max {
            return Err(Error::InvalidRange(format!("[{min}, {max}]")));
        }
        if points < 2 {
            return Err(Error::InvalidRange(format!(
                "need at least 2 points per axis, got {points}"
            )));
        }
        Ok(Self { min, max, points })
    }

    /// Evenly spaced samples. The lower half is the exact mirror of the
    /// upper half about the midpoint, so a range symmetric about ½ yields
    /// bitwise complementary pairs (θ, 1 − θ).
    pub fn samples(&self) -> Vec<f64> {
        let last = self.points - 1;
        let span = self.max - self.min;
        let upper = |i: usize| self.max - span * (last - i) as f64 / last as f64;
        (0..self.points)
            .map(|i| {
                if 2 * i >= last {
                    upper(i)
                } else {
                    (self.min + self.max) - upper(last - i)
                }
            })
            .collect()
    }
}

pub const DEFAULT_THETA_RANGE: (f64, f64) = (0.0, 1.0);
pub const DEFAULT_BETA_RANGE: (f64, f64) = (0.0, 1.2);
pub const DEFAULT_RESOLUTION: usize = 241;

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityMap {
    pub variant: StabilityVariant,
    pub theta_axis: Vec<f64>,
    pub beta_axis: Vec<f64>,
    /// `modulus[i][j]` is |g| at `theta_axis[i]`, `beta_axis[j]`.
    pub modulus: Vec<Vec<f64>>,
    pub stable_mask: Vec<Vec<bool>>,
}

impl StabilityMap {
    pub fn at(&self, theta_index: usize, beta_index: usize) -> f64 {
        self.modulus[theta_index][beta_index]
    }
}

/// Evaluates |g| on the tensor grid of the two axes. For AA the two-step
/// modulus is reported.
pub fn scan_region(variant: StabilityVariant, theta: AxisRange, beta: AxisRange) -> StabilityMap {
    let theta_axis = theta.samples();
    let beta_axis = beta.samples();
    let modulus: Vec<Vec<f64>> = theta_axis
        .iter()
        .map(|&t| {
            beta_axis
                .iter()
                .map(|&b| variant.amplification(t, b).modulus)
                .collect()
        })
        .collect();
    let stable_mask = modulus
        .iter()
        .map(|row| {
            row.iter()
                .map(|&m| m <= 1.0 + STABILITY_TOLERANCE)
                .collect()
        })
        .collect();
    StabilityMap {
        variant,
        theta_axis,
        beta_axis,
        modulus,
        stable_mask,
    }
}

/// The 241 × 241 map over θ ∈ [0, 1], β ∈ [0, 1.2].
pub fn default_scan(variant: StabilityVariant) -> StabilityMap {
    let theta = AxisRange::new(DEFAULT_THETA_RANGE.0, DEFAULT_THETA_RANGE.1, DEFAULT_RESOLUTION)
        .expect("default theta range");
    let beta = AxisRange::new(DEFAULT_BETA_RANGE.0, DEFAULT_BETA_RANGE.1, DEFAULT_RESOLUTION)
        .expect("default beta range");
    scan_region(variant, theta, beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_mode_is_neutral() {
        for t in [0.0, 0.3, 0.5, 0.8, 1.0] {
            for r in [g_ga(t, 0.0), g_theta_step(t, 0.0), g_aa_composed(t, 0.0)] {
                assert_eq!(r.g, Complex64::new(1.0, 0.0));
                assert_eq!(r.modulus, 1.0);
            }
        }
    }

    #[test]
    fn ga_examples() {
        let r = g_ga(0.5, 1.0);
        assert_eq!(r.g, Complex64::new(-1.0, 0.0));
        assert_eq!(r.modulus, 1.0);

        let r = g_ga(0.4, 0.6);
        assert!((r.g.re - 0.28).abs() < 1e-15);
        assert!((r.g.im - (-0.8544)).abs() < 1e-15);
        assert!((r.modulus - 0.28f64.hypot(0.8544)).abs() < 1e-15);
        assert!((r.modulus - 0.899).abs() < 5e-4);
    }

    #[test]
    fn theta_step_examples() {
        let r = g_theta_step(0.4, 0.6);
        assert!((r.g.re - 0.424).abs() < 1e-15);
        assert!((r.g.im - (-0.92352)).abs() < 1e-15);
        assert!((r.modulus - 1.0162).abs() < 5e-5);
    }

    #[test]
    fn aa_example_inside_quoted_band() {
        let m = g_aa_composed(0.4, 0.6).modulus;
        let expected = g_theta_step(0.4, 0.6).modulus * g_theta_step(0.6, 0.6).modulus;
        assert!((m - expected).abs() < 1e-15);
        assert!((m - 0.603).abs() < 5e-4, "{m}");
        assert!(m < g_ga(0.4, 0.6).modulus);
    }

    #[test]
    fn icn_column_boundary() {
        // |g|² = 1 - 4β⁴(1 - β²) at θ = ½
        for i in 0..=120 {
            let beta = i as f64 * 0.01;
            let m2 = g_ga(0.5, beta).modulus.powi(2);
            let closed = 1.0 - 4.0 * beta.powi(4) * (1.0 - beta * beta);
            assert!((m2 - closed).abs() < 1e-13);
        }
        assert!(g_ga(0.5, 1.0 - 1e-9).is_stable());
        assert!(!g_ga(0.5, 1.0 + 1e-9).is_stable());
    }

    #[test]
    fn axis_samples() {
        let a = AxisRange::new(0.0, 1.0, 5).unwrap().samples();
        assert_eq!(a, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        let d = AxisRange::new(0.0, 1.0, 241).unwrap().samples();
        for i in 0..241 {
            assert_eq!(d[i] + d[240 - i], 1.0);
            assert_eq!(1.0 - d[i], d[240 - i]);
            assert!((d[i] - i as f64 / 240.0).abs() < 1e-15);
        }
        let flat = AxisRange::new(0.0, 0.0, 3).unwrap().samples();
        assert_eq!(flat, vec![0.0; 3]);
    }

    #[test]
    fn axis_validation() {
        assert!(AxisRange::new(1.0, 0.0, 10).is_err());
        assert!(AxisRange::new(0.0, 1.0, 1).is_err());
        assert!(AxisRange::new(f64::NAN, 1.0, 10).is_err());
    }

    #[test]
    fn default_maps() {
        let ga = default_scan(StabilityVariant::Ga);
        assert_eq!(ga.modulus.len(), 241);
        assert!(ga.modulus.iter().all(|r| r.len() == 241));
        for (i, row) in ga.modulus.iter().enumerate() {
            assert_eq!(row[0], 1.0);
            assert!(ga.stable_mask[i][0]);
        }
        // θ₁ = ½ column
        let mid = 120;
        assert_eq!(ga.theta_axis[mid], 0.5);
        for (j, &b) in ga.beta_axis.iter().enumerate() {
            if (b - 1.0).abs() > 1e-9 {
                assert_eq!(ga.stable_mask[mid][j], b < 1.0, "beta {b}");
            }
        }

        let aa = default_scan(StabilityVariant::Aa);
        for i in 0..241 {
            assert_eq!(aa.modulus[i], aa.modulus[240 - i]);
        }
    }

    #[test]
    fn scan_is_lipschitz_on_default_grid() {
        for v in [StabilityVariant::Ga, StabilityVariant::Aa] {
            let m = default_scan(v);
            let h = (1.0f64 / 240.0).max(1.2 / 240.0);
            for i in 0..241 {
                for j in 0..241 {
                    if i + 1 < 241 {
                        assert!((m.at(i + 1, j) - m.at(i, j)).abs() <= 150.0 * h);
                    }
                    if j + 1 < 241 {
                        assert!((m.at(i, j + 1) - m.at(i, j)).abs() <= 150.0 * h);
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn aa_symmetric_in_theta(theta in 0.0f64..1.0, beta in -1.5f64..1.5) {
            let a = g_aa_composed(theta, beta);
            let b = g_aa_composed(1.0 - theta, beta);
            prop_assert!((a.modulus - b.modulus).abs() <= 1e-15 * a.modulus.max(1.0));
        }

        #[test]
        fn ga_and_theta_step_coincide_at_half(beta in -2.0f64..2.0) {
            let a = g_ga(0.5, beta);
            let b = g_theta_step(0.5, beta);
            prop_assert!((a.g - b.g).norm() <= 1e-15 * a.modulus.max(1.0));
        }

        #[test]
        fn modulus_is_norm(theta in 0.0f64..1.0, beta in -2.0f64..2.0) {
            let r = g_ga(theta, beta);
            let direct = (r.g.re * r.g.re + r.g.im * r.g.im).sqrt();
            prop_assert!((r.modulus - direct).abs() <= 4.0 * f64::EPSILON * direct.max(1.0));
        }
    }
}
