//! Boosted rotations and their contraction to the triangular gauge matrices.
//!
//! Conjugating the y-rotation `R(θ)` by a z-boost gives
//!
//! ```text
//! [[cos(θ/2),          -e^{η} sin(θ/2)],
//!  [e^{-η} sin(θ/2),    cos(θ/2)       ]]
//! ```
//!
//! Holding the upper-right entry at `γ` forces `sin(θ/2) = γe^{-η}`, the
//! lower-left entry becomes `γe^{-2η}`, and the matrix tends to `T(γ)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mat2::{c, Mat2, C64, EXACT_TOL};
use crate::minkowski::GroupElement;
use crate::report::{Check, Report};

pub const DEFAULT_EXCURSION_ETA: f64 = 20.0;
pub const DEFAULT_EXCURSION_TOL: f64 = 1e-8;

/// `B(η)·R(θ)·B(-η)`, evaluated in closed form.
pub fn boosted_rotation(theta: f64, eta: f64) -> Mat2 {
    boosted_rotation_phased(theta, eta, 0.0)
}

/// The boosted rotation turned by `Z(φ)`: `Z(φ)·B(η)R(θ)B(-η)·Z(φ)†`.
pub fn boosted_rotation_phased(theta: f64, eta: f64, phi: f64) -> Mat2 {
    let (s, co) = (0.5 * theta).sin_cos();
    let upper = C64::from_polar(eta.exp() * s, -phi);
    let lower = C64::from_polar((-eta).exp() * s, phi);
    Mat2::new(c(co, 0.0), -upper, lower, c(co, 0.0))
}

/// Rotation angle that keeps the upper-right entry at `γ`: `2·asin(γe^{-η})`.
pub fn contraction_angle(gamma: f64, eta: f64) -> Result<f64> {
    let value = gamma * (-eta).exp();
    if value.is_nan() || value.abs() > 1.0 {
        return Err(Error::Domain { eta, value });
    }
    Ok(2.0 * value.asin())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContractionSample {
    pub eta: f64,
    pub theta: f64,
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContractionTrace {
    pub gamma: f64,
    pub phi: f64,
    pub samples: Vec<ContractionSample>,
}

impl ContractionTrace {
    /// Least-squares slope of `ln(deviation)` against `η`.
    ///
    /// `None` when fewer than two samples have a positive deviation (e.g. `γ = 0`).
    pub fn fitted_exponent(&self) -> Option<f64> {
        let pts: Vec<(f64, f64)> = self
            .samples
            .iter()
            .filter(|s| s.deviation > 0.0)
            .map(|s| (s.eta, s.deviation.ln()))
            .collect();
        if pts.len() < 2 {
            return None;
        }
        let n = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        if sxx == 0.0 {
            return None;
        }
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        Some(sxy / sxx)
    }

    /// Successive `deviation(η_{k+1}) / deviation(η_k)` ratios.
    pub fn ratios(&self) -> Vec<f64> {
        self.samples
            .windows(2)
            .map(|w| w[1].deviation / w[0].deviation)
            .collect()
    }
}

/// Distance of the phased boosted rotation from `T(γe^{-iφ})` along the
/// constant-`γ` curve, for each rapidity in `etas`.
pub fn contraction_trace(gamma: f64, phi: f64, etas: &[f64]) -> Result<ContractionTrace> {
    let target = *GroupElement::gauge(gamma, phi).undotted();
    let samples = etas
        .iter()
        .map(|&eta| {
            let theta = contraction_angle(gamma, eta)?;
            let deviation = boosted_rotation_phased(theta, eta, phi).max_abs_diff(&target);
            Ok(ContractionSample {
                eta,
                theta,
                deviation,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ContractionTrace {
        gamma,
        phi,
        samples,
    })
}

/// `steps` evenly spaced rapidities from `lo` to `hi` inclusive.
pub fn eta_range(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![lo],
        n => (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExcursionResult {
    pub input: Mat2,
    /// `e^{-η}·B(η) h B(η)` with the vanishing entry dropped; light-like up to `O(e^{-2η})`.
    pub light_cone: Mat2,
    /// Back at finite momentum along the light cone; the (2,2) entry is zero.
    pub output: Mat2,
    pub eta_used: f64,
    /// Size of the discarded entry, in units of the growing one's scale.
    pub dropped_norm: f64,
}

impl ExcursionResult {
    /// `|A0 - Az|` of the output read as a four-vector, i.e. its (2,2) entry.
    pub fn lorentz_condition_residual(&self) -> f64 {
        self.output.get(1, 1).norm()
    }
}

/// Takes a Hermitian four-vector matrix to the infinite-momentum frame with
/// `B(η)`, drops the entry that shrinks as `e^{-η}` there, and returns along
/// the light cone with `B(-η)`.
///
/// For a four-potential the result has `A0 = Az`.
pub fn wigner_excursion(h: &Mat2, eta: f64, tol: f64) -> Result<ExcursionResult> {
    let deviation = h.hermitian_deviation();
    if deviation.is_nan() || deviation > 1e-9 * h.max_abs().max(1.0) {
        return Err(Error::NotHermitian { deviation });
    }
    let boost = *GroupElement::boost_z(eta).undotted();
    let back = *GroupElement::boost_z(-eta).undotted();
    let mut boosted = boost * *h * boost;
    let dropped_norm = boosted.get(1, 1).norm() * (-eta).exp();
    if dropped_norm.is_nan() || dropped_norm > tol {
        return Err(Error::InsufficientBoost {
            dropped: dropped_norm,
            tol,
        });
    }
    boosted.m[1][1] = c(0.0, 0.0);
    Ok(ExcursionResult {
        input: *h,
        light_cone: boosted * (-eta).exp(),
        output: back * boosted * back,
        eta_used: eta,
        dropped_norm,
    })
}

/// The contraction suite: conjugation conventions, unimodularity, the
/// `e^{-2η}` decay law and the massless-limit excursion.
pub fn verify_contraction() -> Report {
    let mut checks = Vec::new();
    let thetas: Vec<f64> = (0..10).map(|k| PI * k as f64 / 9.0).collect();
    let etas: Vec<f64> = (0..10).map(|k| 5.0 * k as f64 / 9.0).collect();
    let grid: Vec<(f64, f64)> = thetas
        .iter()
        .flat_map(|&t| etas.iter().map(move |&e| (t, e)))
        .collect();
    let worst = |f: &dyn Fn(f64, f64) -> f64| grid.iter().map(|&(t, e)| f(t, e)).fold(0.0, f64::max);

    checks.push(Check::at_most(
        "boosted rotation = B(η) R(θ) B(-η) on θ∈[0,π], η∈[0,5]",
        "boosted rotation matrix with e^{η} sin(θ/2) upper-right",
        worst(&|t, e| {
            let g = GroupElement::boost_z(e) * GroupElement::rot_y(t) * GroupElement::boost_z(-e);
            boosted_rotation(t, e).max_abs_diff(g.undotted())
        }),
        EXACT_TOL,
    ));
    for phi in [PI / 3.0, 2.0] {
        checks.push(Check::at_most(
            format!("phased boosted rotation = Z(φ) M Z(φ)† at φ={phi:.4}"),
            "phase e^{∓iφ} on the off-diagonal entries",
            worst(&|t, e| {
                let z = GroupElement::rot_z(phi);
                let m = z.undotted().congruence(&boosted_rotation(t, e));
                boosted_rotation_phased(t, e, phi).max_abs_diff(&m)
            }),
            EXACT_TOL,
        ));
    }
    checks.push(Check::at_most(
        "det(boosted rotation) = 1",
        "unimodularity survives conjugation",
        worst(&|t, e| (boosted_rotation_phased(t, e, 0.7).det() - 1.0).norm()),
        EXACT_TOL,
    ));

    let law_etas = eta_range(3.0, 8.0, 6);
    for gamma in [0.5, 1.0, 2.0] {
        for (phi, phi_label) in [(0.0, "0"), (PI / 3.0, "π/3")] {
            let trace = contraction_trace(gamma, phi, &law_etas).expect("γe^{-3} < 1");
            let slope = trace.fitted_exponent().unwrap_or(f64::NAN);
            checks.push(Check::at_most(
                format!("|log-slope + 2| for γ={gamma}, φ={phi_label}, η∈[3,8] (slope {slope:.5})"),
                "lower-left entry e^{-2η}γ vanishes",
                (slope + 2.0).abs(),
                0.1,
            ));
        }
    }
    let far = contraction_trace(1.5, 0.9, &[18.0]).expect("in domain");
    checks.push(Check::at_most(
        "boosted rotation reaches T(γe^{-iφ}) at η=18",
        "large-η limit gives the triangular matrices",
        far.samples[0].deviation,
        1e-12,
    ));

    let potential = crate::minkowski::FourVector::new(1.0, 0.5, 0.3, 0.4).to_matrix();
    match wigner_excursion(&potential, DEFAULT_EXCURSION_ETA, DEFAULT_EXCURSION_TOL) {
        Ok(ex) => {
            checks.push(Check::at_most(
                "excursion of (A0,Az,Ax,Ay)=(1,0.5,0.3,0.4): A0 = Az",
                "Lorentz condition after the excursion",
                ex.lorentz_condition_residual(),
                DEFAULT_EXCURSION_TOL,
            ));
            checks.push(Check::at_most(
                "excursion light-cone matrix has det ≈ 0",
                "mass hyperbola meets the light cone at infinite momentum",
                ex.light_cone.det().norm(),
                DEFAULT_EXCURSION_TOL,
            ));
            checks.push(Check::at_most(
                "excursion keeps A0+Az and Ax, Ay",
                "net result [[A0+Az, Ax-iAy], [Ax+iAy, 0]]",
                ex.output.max_abs_diff(&Mat2::new(c(1.5, 0.0), c(0.3, -0.4), c(0.3, 0.4), c(0.0, 0.0))),
                EXACT_TOL,
            ));
        }
        Err(e) => checks.push(Check::at_most(
            format!("excursion failed: {e}"),
            "Lorentz condition after the excursion",
            f64::INFINITY,
            DEFAULT_EXCURSION_TOL,
        )),
    }
    let insufficient = matches!(
        wigner_excursion(&potential, 1.0, DEFAULT_EXCURSION_TOL),
        Err(Error::InsufficientBoost { .. })
    );
    checks.push(Check::at_most(
        "excursion with η=1 reports an insufficient boost",
        "dropped entry must be negligible",
        if insufficient { 0.0 } else { 1.0 },
        0.0,
    ));

    Report::new("contraction", checks)
}
