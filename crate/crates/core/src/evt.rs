//! Extreme-value analysis of the maximum per-beam SINR.
//!
//! Under the interference approximation, a user's SINR at a beam is a fixed
//! monotone transform of an exponential beam gain, giving the closed-form
//! law [`SinrModel::cdf`]. That law lies in the Gumbel domain of attraction
//! (its growth function is quadratic with vanishing derivative at the upper
//! support endpoint), so the maximum over `K` users converges to a Gumbel
//! law with position [`GumbelParams::a`] and scale [`GumbelParams::b`], and
//! the `n`-th largest SINRs follow the classical upper-extreme laws. From
//! those come a numeric upper and lower bound on system throughput and a
//! closed-form upper bound via the Gumbel mean.

use crate::numerics::{integrate, integrate_segments, QuadratureError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Euler-Mascheroni constant, the mean of the standard Gumbel law.
pub const EULER_MASCHERONI: f64 = 0.577_215_664_901_532_86;

const LN2: f64 = std::f64::consts::LN_2;

#[derive(Debug, Error)]
pub enum EvtError {
    #[error("invalid SINR model: {0}")]
    InvalidModel(String),
    #[error("need at least {need} users for this operation, got {got}")]
    TooFewUsers { got: u64, need: u64 },
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

/// Parameters of the approximate per-user SINR law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SinrModel {
    /// Fading parameter m (per-entry channel variance 1/m).
    pub m: f64,
    /// Number of transmit beams N.
    pub n_beams: usize,
    /// Linear average SNR.
    pub rho: f64,
    /// Interference constant of the frame.
    pub delta_hat_sq: f64,
}

impl SinrModel {
    pub fn new(m: f64, n_beams: usize, rho: f64, delta_hat_sq: f64) -> Result<Self, EvtError> {
        if !(m > 0.0) || !(rho > 0.0) {
            return Err(EvtError::InvalidModel(format!(
                "m and rho must be positive, got m={m}, rho={rho}"
            )));
        }
        if n_beams < 1 {
            return Err(EvtError::InvalidModel("need at least one beam".into()));
        }
        if !(delta_hat_sq >= 0.0) {
            return Err(EvtError::InvalidModel(format!(
                "delta_hat_sq must be non-negative, got {delta_hat_sq}"
            )));
        }
        Ok(Self {
            m,
            n_beams,
            rho,
            delta_hat_sq,
        })
    }

    /// Supremum of the SINR support: `1/delta_hat_sq`, or infinity for an
    /// interference-free model.
    pub fn support_sup(&self) -> f64 {
        if self.delta_hat_sq == 0.0 {
            f64::INFINITY
        } else {
            1.0 / self.delta_hat_sq
        }
    }

    fn rate(&self) -> f64 {
        self.m * self.n_beams as f64 / self.rho
    }

    /// Exponent `m N g / (rho (1 - delta_hat_sq g))`.
    fn exponent(&self, gamma: f64) -> f64 {
        self.rate() * gamma / (1.0 - self.delta_hat_sq * gamma)
    }

    /// Density of the per-user SINR, zero outside `[0, support_sup)`.
    pub fn pdf(&self, gamma: f64) -> f64 {
        if gamma < 0.0 || gamma >= self.support_sup() {
            return 0.0;
        }
        let shrink = 1.0 - self.delta_hat_sq * gamma;
        self.rate() / (shrink * shrink) * (-self.exponent(gamma)).exp()
    }

    /// Distribution function of the per-user SINR.
    pub fn cdf(&self, gamma: f64) -> f64 {
        if gamma <= 0.0 {
            return 0.0;
        }
        if gamma >= self.support_sup() {
            return 1.0;
        }
        -(-self.exponent(gamma)).exp_m1()
    }

    /// Growth function `(1 - F)/f = rho (1 - delta_hat_sq g)^2 / (m N)`.
    /// Its derivative vanishes at the support endpoint, which places the
    /// SINR law in the Gumbel domain of attraction.
    pub fn growth(&self, gamma: f64) -> f64 {
        let shrink = 1.0 - self.delta_hat_sq * gamma;
        shrink * shrink / self.rate()
    }
}

/// Position and scale of the limiting Gumbel law of the maximum SINR.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GumbelParams {
    /// Position: the `1 - 1/K` quantile of the per-user law.
    pub a: f64,
    /// Scale: the growth function evaluated at `a`.
    pub b: f64,
}

/// Gumbel norming constants for the maximum over `K` users.
pub fn gumbel_params(model: &SinrModel, users: u64) -> Result<GumbelParams, EvtError> {
    if users < 2 {
        return Err(EvtError::TooFewUsers {
            got: users,
            need: 2,
        });
    }
    let ln_k = (users as f64).ln();
    let mn = model.m * model.n_beams as f64;
    let denom = mn + model.rho * model.delta_hat_sq * ln_k;
    Ok(GumbelParams {
        a: model.rho * ln_k / denom,
        b: model.rho * mn / (denom * denom),
    })
}

/// Limiting CDF of the `n`-th upper extreme (`n = 1` is the maximum) at
/// `gamma`, in the original SINR coordinates.
pub fn extreme_cdf(params: &GumbelParams, n: usize, gamma: f64) -> f64 {
    assert!(n >= 1, "extreme order must be at least 1");
    let u = (gamma - params.a) / params.b;
    if u < -30.0 {
        return 0.0;
    }
    let e = (-u).exp();
    let mut sum = 0.0;
    let mut term = 1.0; // e^{-l u} / l! at l = 0
    for l in 0..n {
        if l > 0 {
            term *= e / l as f64;
        }
        sum += term;
    }
    (-e).exp() * sum
}

/// Limiting density of the `n`-th upper extreme at `gamma`, including the
/// `1/b` scaling into SINR coordinates.
pub fn extreme_pdf(params: &GumbelParams, n: usize, gamma: f64) -> f64 {
    assert!(n >= 1, "extreme order must be at least 1");
    let u = (gamma - params.a) / params.b;
    let log_density = -(n as f64) * u - (-u).exp() - ln_factorial(n - 1) - params.b.ln();
    log_density.exp()
}

fn ln_factorial(n: usize) -> f64 {
    (1..=n).map(|k| (k as f64).ln()).sum()
}

/// Kullback-Leibler inefficiency of the Gumbel limit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KlReport {
    pub users: u64,
    /// Divergence in bits of the exact max law from its Gumbel limit.
    pub divergence: f64,
}

/// KL divergence (bits) between the exact density of the maximum of `K`
/// per-user SINRs, `K f F^{K-1}`, and the limiting Gumbel density, integrated
/// over the support of the exact density.
pub fn kl_divergence(model: &SinrModel, users: u64) -> Result<KlReport, EvtError> {
    let params = gumbel_params(model, users)?;
    let k = users as f64;
    let ln_rate = model.rate().ln();
    let ln_b = params.b.ln();
    let model = *model;

    let integrand = move |gamma: f64| -> f64 {
        if gamma <= 0.0 || gamma >= model.support_sup() {
            return 0.0;
        }
        let shrink = 1.0 - model.delta_hat_sq * gamma;
        let w = model.exponent(gamma);
        // ln of K f F^{K-1}, all in log space to survive large K.
        let ln_f_single = ln_rate - 2.0 * shrink.ln() - w;
        let ln_cdf = (-(-w).exp_m1()).ln();
        let ln_f = k.ln() + ln_f_single + (k - 1.0) * ln_cdf;
        if !ln_f.is_finite() || ln_f < -700.0 {
            return 0.0;
        }
        let u = -(gamma - params.a) / params.b;
        let ln_g = -ln_b + u - u.exp();
        ln_f.exp() * (ln_f - ln_g) / LN2
    };

    // The exact max density is concentrated around the Gumbel position;
    // seed the quadrature with breakpoints at a few scale units.
    let sup = if model.delta_hat_sq == 0.0 {
        params.a + 80.0 * params.b
    } else {
        model.support_sup()
    };
    let mut points = vec![0.0];
    for k_scale in [-12.0, -8.0, -4.0, -2.0, 0.0, 2.0, 4.0, 8.0, 16.0, 32.0] {
        let p = params.a + k_scale * params.b;
        if p > points[points.len() - 1] + 1e-12 && p < sup - 1e-12 {
            points.push(p);
        }
    }
    points.push(sup);
    let divergence = integrate_segments(integrand, &points, 1e-9)?;
    Ok(KlReport { users, divergence })
}

/// Expectation of `f(gamma)` against the `n`-th upper extreme law restricted
/// to `gamma >= 0`, computed through the substitution `u = exp(-(g-a)/b)`:
/// the integral becomes `(1/(n-1)!) * int_0^U f(a - b ln u) u^{n-1} e^{-u} du`
/// with `U = exp(a/b)`, capped where `e^{-u}` has long underflowed.
fn extreme_expectation<F: Fn(f64) -> f64>(
    params: &GumbelParams,
    n: usize,
    f: F,
    abs_tol: f64,
) -> Result<f64, QuadratureError> {
    let upper = (params.a / params.b).exp().min(750.0);
    let (a, b) = (params.a, params.b);
    let ln_norm = ln_factorial(n - 1);
    // Normalized gamma kernel, kept in log form so large n stays O(1).
    integrate(
        move |u| {
            let kernel = ((n as f64 - 1.0) * u.ln() - u - ln_norm).exp();
            f(a - b * u.ln()) * kernel
        },
        0.0,
        upper,
        abs_tol,
    )
}

/// Numeric upper bound on system throughput: every one of the `N` beams
/// carries the maximum-SINR user, whose rate is averaged against the Gumbel
/// limit over the positive axis.
pub fn throughput_upper_numeric(model: &SinrModel, users: u64) -> Result<f64, EvtError> {
    let params = gumbel_params(model, users)?;
    let value = extreme_expectation(&params, 1, |g| (1.0 + g).log2(), 1e-9)?;
    Ok(model.n_beams as f64 * value)
}

/// Numeric lower bound: the `N` scheduled users carry the `N` distinct upper
/// extremes of the `K` SINRs.
pub fn throughput_lower_numeric(model: &SinrModel, users: u64) -> Result<f64, EvtError> {
    let need = model.n_beams as u64 + 1;
    if users < need {
        return Err(EvtError::TooFewUsers { got: users, need });
    }
    let params = gumbel_params(model, users)?;
    let per_term_tol = 1e-9 / model.n_beams as f64;
    let mut total = 0.0;
    for n in 1..=model.n_beams {
        total += extreme_expectation(&params, n, |g| (1.0 + g).log2(), per_term_tol)?;
    }
    Ok(total)
}

/// Closed-form reformulation of the upper bound through the Gumbel mean
/// `a + b * EULER_MASCHERONI` and Jensen's inequality.
pub fn throughput_closed_form(model: &SinrModel, users: u64) -> Result<f64, EvtError> {
    if users < 2 {
        return Err(EvtError::TooFewUsers {
            got: users,
            need: 2,
        });
    }
    let ln_k = (users as f64).ln();
    let mn = model.m * model.n_beams as f64;
    let rho = model.rho;
    let dsq = model.delta_hat_sq;
    let denom = mn + rho * dsq * ln_k;
    let mean =
        (rho * mn * (EULER_MASCHERONI + ln_k) + rho * rho * dsq * ln_k * ln_k) / (denom * denom);
    Ok(model.n_beams as f64 * (1.0 + mean).log2())
}

/// The three throughput bounds side by side. The numeric lower bound needs
/// `K >= N + 1` distinct extremes and is absent below that.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThroughputBounds {
    pub upper_numeric: f64,
    pub lower_numeric: Option<f64>,
    pub upper_closed_form: f64,
}

pub fn throughput_bounds(model: &SinrModel, users: u64) -> Result<ThroughputBounds, EvtError> {
    let upper_numeric = throughput_upper_numeric(model, users)?;
    let lower_numeric = if users >= model.n_beams as u64 + 1 {
        Some(throughput_lower_numeric(model, users)?)
    } else {
        None
    };
    Ok(ThroughputBounds {
        upper_numeric,
        lower_numeric,
        upper_closed_form: throughput_closed_form(model, users)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference_model() -> SinrModel {
        SinrModel::new(0.5, 7, 1.0, 4.0 / 3.0).unwrap()
    }

    #[test]
    fn pdf_cdf_anchors() {
        let model = SinrModel::new(0.5, 7, 1.0, 1.3333).unwrap();
        assert_eq!(model.cdf(0.0), 0.0);
        assert!((model.pdf(0.0) - 3.5).abs() < 1e-12, "pdf(0) = mN/rho");
        let c = model.cdf(0.3);
        assert!((c - 0.8262).abs() < 2e-4, "cdf(0.3) = {c}");
    }

    #[test]
    fn pdf_integrates_to_one() {
        for model in [
            reference_model(),
            SinrModel::new(3.0, 9, 2.0, 2.0).unwrap(),
            SinrModel::new(0.5, 4, 1.0, 0.0).unwrap(),
        ] {
            let total = integrate(move |g| model.pdf(g), 0.0, model.support_sup(), 1e-10).unwrap();
            assert!((total - 1.0).abs() < 1e-8, "integral = {total}");
        }
    }

    #[test]
    fn cdf_derivative_matches_pdf() {
        let model = reference_model();
        let h = 1e-6;
        for i in 1..14 {
            let g = i as f64 * 0.05; // interior of [0, 0.75)
            if g + h >= model.support_sup() {
                break;
            }
            let numeric = (model.cdf(g + h) - model.cdf(g - h)) / (2.0 * h);
            assert!(
                (numeric - model.pdf(g)).abs() < 1e-6 * model.pdf(g).max(1.0),
                "at {g}: derivative {numeric} vs pdf {}",
                model.pdf(g)
            );
        }
    }

    #[test]
    fn growth_function_anchors() {
        let model = reference_model();
        assert!((model.growth(0.0) - model.rho / 3.5).abs() < 1e-15);
        // Flat for the interference-free law.
        let free = SinrModel::new(2.0, 3, 1.5, 0.0).unwrap();
        let g0 = free.growth(0.0);
        for i in 0..20 {
            assert!((free.growth(i as f64 * 0.5) - g0).abs() < 1e-15);
        }
    }

    #[test]
    fn von_mises_derivative_vanishes_at_support_end() {
        let model = reference_model();
        let sup = model.support_sup();
        let mut last = f64::INFINITY;
        for exp10 in 2..=6 {
            let eps = 10f64.powi(-exp10);
            let g = sup - eps;
            let h = eps / 2.0;
            let deriv = ((model.growth(g + h) - model.growth(g - h)) / (2.0 * h)).abs();
            assert!(deriv < last, "derivative must decay: {deriv} !< {last}");
            last = deriv;
        }
        assert!(last < 1e-5, "derivative near the endpoint: {last}");
    }

    #[test]
    fn gumbel_position_matches_bisection_oracle() {
        let model = reference_model();
        for users in [8u64, 64, 1024] {
            let params = gumbel_params(&model, users).unwrap();
            // Independent root solve of 1 - F(a) = 1/K.
            let target = 1.0 - 1.0 / users as f64;
            let (mut lo, mut hi) = (0.0, model.support_sup() - 1e-15);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if model.cdf(mid) < target {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let a_oracle = 0.5 * (lo + hi);
            assert!(
                (params.a - a_oracle).abs() < 1e-10,
                "formula {} vs bisection {a_oracle}",
                params.a
            );
            // Scale equals (1 - F(a)) / f(a).
            let b_oracle = (1.0 - model.cdf(a_oracle)) / model.pdf(a_oracle);
            assert!((params.b - b_oracle).abs() < 1e-9);
            // Anchor identity.
            assert!((1.0 - model.cdf(params.a) - 1.0 / users as f64).abs() < 1e-10);
        }
    }

    #[test]
    fn gumbel_values_for_reference_case() {
        let model = SinrModel::new(0.5, 7, 1.0, 1.3333).unwrap();
        let params = gumbel_params(&model, 64).unwrap();
        assert!((params.a - 0.459797).abs() < 1e-6, "a = {}", params.a);
        assert!((params.b - 0.0427806).abs() < 1e-7, "b = {}", params.b);
    }

    #[test]
    fn gumbel_position_approaches_support_sup() {
        let model = reference_model();
        let mut last = 0.0;
        for users in [4u64, 16, 64, 256, 1024, 4096] {
            let a = gumbel_params(&model, users).unwrap().a;
            assert!(a > last && a < model.support_sup());
            last = a;
        }
    }

    #[test]
    fn interference_free_norming_is_exponential() {
        let model = SinrModel::new(2.0, 4, 1.5, 0.0).unwrap();
        let params = gumbel_params(&model, 128).unwrap();
        let mn = 8.0;
        assert!((params.a - 1.5 * (128f64).ln() / mn).abs() < 1e-12);
        assert!((params.b - 1.5 / mn).abs() < 1e-12);
    }

    #[test]
    fn first_extreme_is_the_gumbel_law() {
        let params = GumbelParams { a: 0.46, b: 0.043 };
        for i in -5..15 {
            let g = 0.46 + 0.043 * i as f64;
            let u = (g - params.a) / params.b;
            let want = (-(-u).exp()).exp();
            assert!((extreme_cdf(&params, 1, g) - want).abs() < 1e-14);
        }
    }

    #[test]
    fn extreme_pdfs_normalize() {
        let params = GumbelParams { a: 0.46, b: 0.043 };
        for n in 1..=7 {
            let total = integrate(
                move |g| extreme_pdf(&params, n, g),
                f64::NEG_INFINITY,
                f64::INFINITY,
                1e-10,
            )
            .unwrap();
            assert!((total - 1.0).abs() < 1e-8, "n={n}: integral = {total}");
        }
    }

    #[test]
    fn deeper_extremes_are_stochastically_smaller() {
        let params = GumbelParams { a: 0.46, b: 0.043 };
        for i in -8..20 {
            let g = 0.46 + 0.02 * i as f64;
            let c2 = extreme_cdf(&params, 2, g);
            let c3 = extreme_cdf(&params, 3, g);
            assert!(
                c3 >= c2 - 1e-14,
                "cdf must grow with extreme order at {g}: {c3} < {c2}"
            );
        }
    }

    #[test]
    fn kl_reference_values() {
        // Frozen against two independent quadrature routes (gamma-domain
        // with breakpoints, and the quantile substitution).
        let m_half = SinrModel::new(0.5, 7, 1.0, 4.0 / 3.0).unwrap();
        let v8 = kl_divergence(&m_half, 8).unwrap().divergence;
        assert!((v8 - 0.14046).abs() < 5e-4, "KL(8, m=0.5) = {v8}");
        let m_three = SinrModel::new(3.0, 7, 1.0, 4.0 / 3.0).unwrap();
        let v8m3 = kl_divergence(&m_three, 8).unwrap().divergence;
        assert!((v8m3 - 0.025448).abs() < 5e-4, "KL(8, m=3) = {v8m3}");
        let v32 = kl_divergence(&m_half, 32).unwrap().divergence;
        assert!((v32 - 0.123414).abs() < 1e-3, "KL(32, m=0.5) = {v32}");
    }

    #[test]
    fn kl_is_nonnegative_and_decreasing_in_users() {
        let model = reference_model();
        let mut last = f64::INFINITY;
        for users in [8u64, 16, 32, 64] {
            let v = kl_divergence(&model, users).unwrap().divergence;
            assert!(v >= -1e-9, "KL must be non-negative, got {v}");
            assert!(v < last, "KL must decrease in K: {v} !< {last}");
            last = v;
        }
    }

    #[test]
    fn upper_bound_reference_value() {
        let model = reference_model();
        let upper = throughput_upper_numeric(&model, 64).unwrap();
        assert!((upper - 3.98300).abs() < 2e-4, "upper = {upper}");
        assert!(upper >= 3.93);
        let closed = throughput_closed_form(&model, 64).unwrap();
        assert!(upper <= closed + 1e-9);
    }

    #[test]
    fn dropping_the_rate_factor_recovers_the_beam_count() {
        let model = reference_model();
        let params = gumbel_params(&model, 64).unwrap();
        let mass = extreme_expectation(&params, 1, |_| 1.0, 1e-10).unwrap();
        let n = model.n_beams as f64;
        assert!((n * mass - n).abs() < 1e-6, "N * mass = {}", n * mass);
    }

    #[test]
    fn upper_bound_against_brute_force_at_two_users() {
        // Interference-free, one beam, two users: the exact mean rate is the
        // average of log2(1 + rho * max of two exponentials). The Gumbel
        // approximation is loose at K = 2; the check is correspondingly
        // loose.
        let model = SinrModel::new(4.0, 1, 1.0, 0.0).unwrap();
        let upper = throughput_upper_numeric(&model, 2).unwrap();
        let mut stream = crate::numerics::derive_stream(77, 0);
        let n = 1_000_000;
        let mut sum = 0.0;
        for _ in 0..n {
            let z1 = -(1.0 - stream.uniform()).ln() / 4.0;
            let z2 = -(1.0 - stream.uniform()).ln() / 4.0;
            sum += (1.0 + z1.max(z2)).log2();
        }
        let brute = sum / n as f64;
        assert!(
            (upper - brute).abs() < 0.1,
            "gumbel {upper} vs brute force {brute}"
        );
    }

    #[test]
    fn lower_bound_ordering() {
        let model = reference_model();
        let upper = throughput_upper_numeric(&model, 64).unwrap();
        let lower = throughput_lower_numeric(&model, 64).unwrap();
        assert!(lower <= upper + 1e-9, "lower {lower} vs upper {upper}");
        assert!(lower > 0.0);
        // One beam: the lower bound degenerates to the upper bound.
        let single = SinrModel::new(0.5, 1, 1.0, 0.5).unwrap();
        let u1 = throughput_upper_numeric(&single, 16).unwrap();
        let l1 = throughput_lower_numeric(&single, 16).unwrap();
        assert!((u1 - l1).abs() < 1e-9);
        // Too few users for N distinct extremes.
        assert!(matches!(
            throughput_lower_numeric(&model, 7),
            Err(EvtError::TooFewUsers { .. })
        ));
    }

    #[test]
    fn closed_form_reference_values() {
        let m7 = SinrModel::new(0.5, 7, 1.0, 1.3333).unwrap();
        let v7 = throughput_closed_form(&m7, 64).unwrap();
        assert!((v7 - 3.99).abs() < 0.01, "N=7: {v7}");
        let m9 = SinrModel::new(0.5, 9, 1.0, 2.0).unwrap();
        let v9 = throughput_closed_form(&m9, 64).unwrap();
        assert!((v7 - v9 - 0.19).abs() < 0.01, "difference: {}", v7 - v9);
        let m13 = SinrModel::new(0.5, 13, 10f64.powf(0.5), 2.2499).unwrap();
        let v13 = throughput_closed_form(&m13, 128).unwrap();
        assert!((v13 - 6.06).abs() < 0.02, "N=13: {v13}");
    }

    #[test]
    fn closed_form_equals_gumbel_mean_identity() {
        // Algebraic reformulation check: the closed form must equal
        // N log2(1 + a + b * EULER_MASCHERONI) to rounding accuracy. This
        // pins the hard-coded Euler-Mascheroni constant: perturbing it by
        // 1e-3 moves the identity by ~3e-4, far above this tolerance.
        for (m, n, rho, dsq, users) in [
            (0.5, 7usize, 1.0, 4.0 / 3.0, 64u64),
            (3.0, 16, 10.0, 3.0, 512),
            (1.0, 4, 10f64.powf(0.5), 1.0, 32),
        ] {
            let model = SinrModel::new(m, n, rho, dsq).unwrap();
            let params = gumbel_params(&model, users).unwrap();
            let identity = n as f64 * (1.0 + params.a + params.b * EULER_MASCHERONI).log2();
            let closed = throughput_closed_form(&model, users).unwrap();
            assert!(
                (closed - identity).abs() < 1e-12,
                "closed {closed} vs identity {identity}"
            );
        }
    }

    #[test]
    fn bounds_struct_drops_lower_when_users_are_scarce() {
        let model = SinrModel::new(0.5, 16, 1.0, 3.0).unwrap();
        let bounds = throughput_bounds(&model, 16).unwrap();
        assert!(bounds.lower_numeric.is_none());
        let bounds = throughput_bounds(&model, 17).unwrap();
        assert!(bounds.lower_numeric.is_some());
    }

    #[test]
    fn model_validation() {
        assert!(SinrModel::new(0.0, 7, 1.0, 1.0).is_err());
        assert!(SinrModel::new(0.5, 0, 1.0, 1.0).is_err());
        assert!(SinrModel::new(0.5, 7, -1.0, 1.0).is_err());
        assert!(SinrModel::new(0.5, 7, 1.0, -0.5).is_err());
        let model = reference_model();
        assert!(matches!(
            gumbel_params(&model, 1),
            Err(EvtError::TooFewUsers { .. })
        ));
    }
}
