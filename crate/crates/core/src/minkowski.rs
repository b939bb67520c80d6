//! Four-vectors as Hermitian 2×2 matrices and the congruence action of SL(2,C).
//!
//! Coordinates are always ordered `(t, z, x, y)`. A four-vector is encoded as
//!
//! ```text
//! X = [[t + z, x - iy],
//!      [x + iy, t - z]]        det X = t² - z² - x² - y²
//! ```
//!
//! and a group element `G` maps it to `G X G†`.

use std::ops::Mul;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mat2::{self, c, generator, mat_exp, Flavor, GeneratorId, Mat2, C64, I, ONE, ZERO};
use crate::report::{Check, Report};

/// Hermiticity tolerance for [`from_matrix`], relative to `max(1, max|m_ij|)`.
pub const HERMITIAN_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FourVector {
    pub t: f64,
    pub z: f64,
    pub x: f64,
    pub y: f64,
}

impl FourVector {
    pub const fn new(t: f64, z: f64, x: f64, y: f64) -> Self {
        Self { t, z, x, y }
    }

    /// `t² - z² - x² - y²`.
    pub fn interval(&self) -> f64 {
        self.t * self.t - self.z * self.z - self.x * self.x - self.y * self.y
    }

    /// Sum of squared components; the natural scale for round-off in [`interval`](Self::interval).
    pub fn euclidean_sq(&self) -> f64 {
        self.t * self.t + self.z * self.z + self.x * self.x + self.y * self.y
    }

    pub fn to_matrix(&self) -> Mat2 {
        to_matrix(self)
    }

    pub fn components(&self) -> [f64; 4] {
        [self.t, self.z, self.x, self.y]
    }

    pub fn is_finite(&self) -> bool {
        self.components().iter().all(|v| v.is_finite())
    }

    pub fn max_abs_diff(&self, other: &FourVector) -> f64 {
        self.components()
            .iter()
            .zip(other.components())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

pub fn to_matrix(v: &FourVector) -> Mat2 {
    Mat2::new(
        c(v.t + v.z, 0.0),
        c(v.x, -v.y),
        c(v.x, v.y),
        c(v.t - v.z, 0.0),
    )
}

/// Inverse of [`to_matrix`]. Rejects matrices that are not Hermitian.
pub fn from_matrix(m: &Mat2) -> Result<FourVector> {
    let deviation = m.hermitian_deviation();
    if deviation.is_nan() || deviation > HERMITIAN_TOL * m.max_abs().max(1.0) {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(from_matrix_unchecked(m))
}

/// Reads the coordinates off the Hermitian part of `m`.
pub(crate) fn from_matrix_unchecked(m: &Mat2) -> FourVector {
    let (a, b, cc, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    FourVector {
        t: 0.5 * (a.re + d.re),
        z: 0.5 * (a.re - d.re),
        x: 0.5 * (b.re + cc.re),
        y: 0.5 * (cc.im - b.im),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FourMomentum {
    pub p0: f64,
    pub pz: f64,
    pub px: f64,
    pub py: f64,
}

impl FourMomentum {
    pub const fn new(p0: f64, pz: f64, px: f64, py: f64) -> Self {
        Self { p0, pz, px, py }
    }

    /// `p0² - pz² - px² - py²`; negative for imaginary mass.
    pub fn mass_squared(&self) -> f64 {
        self.as_vector().interval()
    }

    pub fn as_vector(&self) -> FourVector {
        FourVector::new(self.p0, self.pz, self.px, self.py)
    }

    pub fn to_matrix(&self) -> Mat2 {
        to_matrix(&self.as_vector())
    }

    pub fn classify(&self, tol: f64) -> MassClass {
        classify(self, tol)
    }
}

impl From<FourVector> for FourMomentum {
    fn from(v: FourVector) -> Self {
        Self::new(v.t, v.z, v.x, v.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MassClass {
    Massive,
    Massless,
    ImaginaryMass,
}

impl MassClass {
    pub const ALL: [MassClass; 3] = [MassClass::Massive, MassClass::Massless, MassClass::ImaginaryMass];

    /// Scale-aware zero test for the determinant: `1e-9 · max(1, p0²)`.
    pub fn default_tolerance(p: &FourMomentum) -> f64 {
        1e-9 * (p.p0 * p.p0).max(1.0)
    }

    pub fn name(self) -> &'static str {
        match self {
            MassClass::Massive => "Massive",
            MassClass::Massless => "Massless",
            MassClass::ImaginaryMass => "ImaginaryMass",
        }
    }
}

/// Sign of `det P`, with `|det P| <= tol` counted as light-like.
pub fn classify(p: &FourMomentum, tol: f64) -> MassClass {
    let det = p.mass_squared();
    if det > tol {
        MassClass::Massive
    } else if det < -tol {
        MassClass::ImaginaryMass
    } else {
        MassClass::Massless
    }
}

/// Momentum of a particle of mass `m` boosted along z with rapidity `eta`.
pub fn boost_momentum(m: f64, eta: f64) -> FourMomentum {
    FourMomentum::new(m * eta.cosh(), m * eta.sinh(), 0.0, 0.0)
}

/// Rapidity from `e^η = (pz + sqrt(pz² + m²)) / m`.
pub fn rapidity(pz: f64, m: f64) -> f64 {
    ((pz + pz.hypot(m)) / m).ln()
}

/// One parameterized factor of a group element.
///
/// Serialized as `{"kind": "boost_z", "param": 0.5}`; `gauge` also takes `phi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Transform {
    RotX {
        #[serde(rename = "param")]
        theta: f64,
    },
    RotY {
        #[serde(rename = "param")]
        theta: f64,
    },
    RotZ {
        #[serde(rename = "param")]
        phi: f64,
    },
    BoostX {
        #[serde(rename = "param")]
        lambda: f64,
    },
    BoostY {
        #[serde(rename = "param")]
        lambda: f64,
    },
    BoostZ {
        #[serde(rename = "param")]
        eta: f64,
    },
    /// Triangular matrix `T(γ e^{-iφ})`.
    Gauge {
        #[serde(rename = "param")]
        gamma: f64,
        #[serde(default)]
        phi: f64,
    },
}

impl Transform {
    pub fn element(&self) -> GroupElement {
        match *self {
            Transform::RotX { theta } => GroupElement::rot_x(theta),
            Transform::RotY { theta } => GroupElement::rot_y(theta),
            Transform::RotZ { phi } => GroupElement::rot_z(phi),
            Transform::BoostX { lambda } => GroupElement::boost_x(lambda),
            Transform::BoostY { lambda } => GroupElement::boost_y(lambda),
            Transform::BoostZ { eta } => GroupElement::boost_z(eta),
            Transform::Gauge { gamma, phi } => GroupElement::gauge(gamma, phi),
        }
    }

    pub fn is_finite(&self) -> bool {
        match *self {
            Transform::Gauge { gamma, phi } => gamma.is_finite() && phi.is_finite(),
            Transform::RotX { theta: p }
            | Transform::RotY { theta: p }
            | Transform::RotZ { phi: p }
            | Transform::BoostX { lambda: p }
            | Transform::BoostY { lambda: p }
            | Transform::BoostZ { eta: p } => p.is_finite(),
        }
    }
}

/// An SL(2,C) element carried in both spinor flavors.
///
/// The dotted matrix is always `(G†)⁻¹`: equal to `G` for rotations, the
/// inverse boost for boosts, and `Ṫ` for the triangular gauge matrix `T`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupElement {
    undotted: Mat2,
    dotted: Mat2,
    /// Factors in matrix-product order; empty for the identity and for
    /// elements built from a bare matrix.
    provenance: Vec<Transform>,
}

fn half_angles(angle: f64) -> (f64, f64) {
    let h = 0.5 * angle;
    (h.cos(), h.sin())
}

fn half_rapidities(rapidity: f64) -> (f64, f64) {
    let h = 0.5 * rapidity;
    (h.cosh(), h.sinh())
}

impl GroupElement {
    pub fn identity() -> Self {
        Self {
            undotted: Mat2::identity(),
            dotted: Mat2::identity(),
            provenance: Vec::new(),
        }
    }

    fn single(undotted: Mat2, dotted: Mat2, t: Transform) -> Self {
        Self {
            undotted,
            dotted,
            provenance: vec![t],
        }
    }

    /// Wraps an arbitrary unimodular matrix; the dotted partner is `(G†)⁻¹`.
    pub fn from_undotted(g: Mat2) -> Self {
        let dotted = g.dagger().adjugate() * g.det().conj().inv();
        Self {
            undotted: g,
            dotted,
            provenance: Vec::new(),
        }
    }

    /// Rotation about z: `diag(e^{-iφ/2}, e^{iφ/2})` in both flavors.
    pub fn rot_z(phi: f64) -> Self {
        let m = Mat2::diag((-I * (0.5 * phi)).exp(), (I * (0.5 * phi)).exp());
        Self::single(m, m, Transform::RotZ { phi })
    }

    /// Rotation about y: `[[cos, -sin], [sin, cos]]` of θ/2.
    pub fn rot_y(theta: f64) -> Self {
        let (co, si) = half_angles(theta);
        let m = Mat2::real(co, -si, si, co);
        Self::single(m, m, Transform::RotY { theta })
    }

    /// Rotation about x, `exp(-iθ J1) = [[cos, -i sin], [-i sin, cos]]`.
    pub fn rot_x(theta: f64) -> Self {
        let (co, si) = half_angles(theta);
        let m = Mat2::new(c(co, 0.0), c(0.0, -si), c(0.0, -si), c(co, 0.0));
        Self::single(m, m, Transform::RotX { theta })
    }

    /// Boost along z, `diag(e^{η/2}, e^{-η/2})`; dotted flavor boosts the other way.
    pub fn boost_z(eta: f64) -> Self {
        let (a, b) = ((0.5 * eta).exp(), (-0.5 * eta).exp());
        Self::single(
            Mat2::real(a, 0.0, 0.0, b),
            Mat2::real(b, 0.0, 0.0, a),
            Transform::BoostZ { eta },
        )
    }

    pub fn boost_x(lambda: f64) -> Self {
        let (ch, sh) = half_rapidities(lambda);
        Self::single(
            Mat2::real(ch, sh, sh, ch),
            Mat2::real(ch, -sh, -sh, ch),
            Transform::BoostX { lambda },
        )
    }

    pub fn boost_y(lambda: f64) -> Self {
        let (ch, sh) = half_rapidities(lambda);
        Self::single(
            Mat2::new(c(ch, 0.0), c(0.0, -sh), c(0.0, sh), c(ch, 0.0)),
            Mat2::new(c(ch, 0.0), c(0.0, sh), c(0.0, -sh), c(ch, 0.0)),
            Transform::BoostY { lambda },
        )
    }

    /// `T(γe^{-iφ}) = [[1, -γe^{-iφ}], [0, 1]]` with dotted `[[1, 0], [γe^{iφ}, 1]]`.
    pub fn gauge(gamma: f64, phi: f64) -> Self {
        let z = C64::from_polar(gamma, -phi);
        Self::single(
            Mat2::new(ONE, -z, ZERO, ONE),
            Mat2::new(ONE, ZERO, z.conj(), ONE),
            Transform::Gauge { gamma, phi },
        )
    }

    pub fn undotted(&self) -> &Mat2 {
        &self.undotted
    }

    pub fn dotted(&self) -> &Mat2 {
        &self.dotted
    }

    pub fn matrix(&self, flavor: Flavor) -> &Mat2 {
        match flavor {
            Flavor::Undotted => &self.undotted,
            Flavor::Dotted => &self.dotted,
        }
    }

    pub fn provenance(&self) -> &[Transform] {
        &self.provenance
    }

    pub fn inverse(&self) -> Self {
        // Both matrices are unimodular, so the adjugate is the inverse.
        Self {
            undotted: self.undotted.adjugate(),
            dotted: self.dotted.adjugate(),
            provenance: Vec::new(),
        }
    }

    /// Largest of `|det - 1|` over both flavors.
    pub fn unimodularity_deviation(&self) -> f64 {
        (self.undotted.det() - ONE)
            .norm()
            .max((self.dotted.det() - ONE).norm())
    }

    /// Distance of the dotted matrix from `(G†)⁻¹`.
    pub fn flavor_pairing_deviation(&self) -> f64 {
        (self.dotted * self.undotted.dagger()).max_abs_diff(&Mat2::identity())
    }

    /// `G X G†` on the undotted matrix.
    pub fn act(&self, v: &FourVector) -> FourVector {
        lorentz_transform(self, v)
    }
}

impl Mul for &GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: &GroupElement) -> GroupElement {
        GroupElement {
            undotted: self.undotted * rhs.undotted,
            dotted: self.dotted * rhs.dotted,
            provenance: self.provenance.iter().chain(&rhs.provenance).copied().collect(),
        }
    }
}

impl Mul for GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: GroupElement) -> GroupElement {
        &self * &rhs
    }
}

impl From<Transform> for GroupElement {
    fn from(t: Transform) -> Self {
        t.element()
    }
}

/// `X' = G X G†` read back as a four-vector.
pub fn lorentz_transform(g: &GroupElement, v: &FourVector) -> FourVector {
    from_matrix_unchecked(&g.undotted.congruence(&to_matrix(v)))
}

/// A random product of one to four factors, each parameter uniform in `[-2, 2]`.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R) -> GroupElement {
    let factors = rng.gen_range(1..=4);
    (0..factors).fold(GroupElement::identity(), |acc, _| {
        let p = rng.gen_range(-2.0..=2.0);
        let t = match rng.gen_range(0..7) {
            0 => Transform::RotX { theta: p },
            1 => Transform::RotY { theta: p },
            2 => Transform::RotZ { phi: p },
            3 => Transform::BoostX { lambda: p },
            4 => Transform::BoostY { lambda: p },
            5 => Transform::BoostZ { eta: p },
            _ => Transform::Gauge {
                gamma: p,
                phi: rng.gen_range(-2.0..=2.0),
            },
        };
        acc * t.element()
    })
}

pub fn random_vector<R: Rng + ?Sized>(rng: &mut R, bound: f64) -> FourVector {
    let mut draw = || rng.gen_range(-bound..=bound);
    FourVector::new(draw(), draw(), draw(), draw())
}

/// Relative interval change, scaled by the Euclidean size of input and output.
pub fn interval_deviation(g: &GroupElement, v: &FourVector) -> f64 {
    let w = lorentz_transform(g, v);
    let scale = v.euclidean_sq().max(w.euclidean_sq()).max(1.0);
    (w.interval() - v.interval()).abs() / scale
}

/// Interval invariance over `count` seeded random element/vector pairs.
pub fn verify_interval_invariance(seed: u64, count: usize) -> Check {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let worst = (0..count)
        .map(|_| {
            let g = random_element(&mut rng);
            let v = random_vector(&mut rng, 10.0);
            interval_deviation(&g, &v)
        })
        .fold(0.0, f64::max);
    Check::at_most(
        format!("interval t²-z²-x²-y² preserved ({count} random pairs, seed {seed})"),
        "X' = G X G† is a Lorentz transformation",
        worst,
        1e-9,
    )
}

/// A row of the closed-form transformation table together with the
/// exponent that should reproduce it.
struct TableRow {
    label: &'static str,
    generator: GeneratorId,
    /// The closed form equals `exp(sign · (-i) · p · generator)`.
    sign: f64,
    closed_form: fn(f64, Flavor) -> Mat2,
}

fn table_rows() -> [TableRow; 6] {
    fn pick(e: GroupElement, flavor: Flavor) -> Mat2 {
        *e.matrix(flavor)
    }
    [
        TableRow {
            label: "J3 rotation Z(φ)",
            generator: GeneratorId::J3,
            sign: 1.0,
            closed_form: |p, f| pick(GroupElement::rot_z(p), f),
        },
        TableRow {
            label: "K3 boost B(η)",
            generator: GeneratorId::K3,
            sign: 1.0,
            closed_form: |p, f| pick(GroupElement::boost_z(p), f),
        },
        TableRow {
            // The tabulated J1 matrix carries +i sin(θ/2) off the diagonal,
            // i.e. it is exp(+iθ J1).
            label: "J1 rotation [[cos, i sin], [i sin, cos]]",
            generator: GeneratorId::J1,
            sign: -1.0,
            closed_form: |p, _| {
                let (co, si) = half_angles(p);
                Mat2::new(c(co, 0.0), c(0.0, si), c(0.0, si), c(co, 0.0))
            },
        },
        TableRow {
            label: "K1 boost S(λ)",
            generator: GeneratorId::K1,
            sign: 1.0,
            closed_form: |p, f| pick(GroupElement::boost_x(p), f),
        },
        TableRow {
            label: "J2 rotation R(θ)",
            generator: GeneratorId::J2,
            sign: 1.0,
            closed_form: |p, f| pick(GroupElement::rot_y(p), f),
        },
        TableRow {
            label: "K2 boost",
            generator: GeneratorId::K2,
            sign: 1.0,
            closed_form: |p, f| pick(GroupElement::boost_y(p), f),
        },
    ]
}

/// Ten evenly spaced parameter values in `[-3, 3]`.
pub fn parameter_grid() -> impl Iterator<Item = f64> {
    (0..10).map(|k| -3.0 + 6.0 * k as f64 / 9.0)
}

/// Exponentials of the generators against the closed-form table, both flavors.
pub fn verify_exponential_map() -> Report {
    let mut checks = Vec::new();
    for flavor in Flavor::BOTH {
        for row in table_rows() {
            let gen = generator(row.generator, flavor);
            let worst = parameter_grid()
                .map(|p| {
                    let e = mat_exp(&(gen * (-I * (row.sign * p))));
                    e.max_abs_diff(&(row.closed_form)(p, flavor))
                })
                .fold(0.0, f64::max);
            let flavor_name = match flavor {
                Flavor::Undotted => "undotted",
                Flavor::Dotted => "dotted",
            };
            checks.push(Check::at_most(
                format!("exp map {flavor_name} {}", row.label),
                "two-by-two transformation table: rotations same, boosts inverse in dotted flavor",
                worst,
                mat2::COMPOSED_TOL,
            ));
        }
    }
    Report::new("exponential-map", checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn to_matrix_examples() {
        assert_eq!(FourVector::new(1.0, 0.0, 0.0, 0.0).to_matrix(), Mat2::identity());
        assert_eq!(
            FourVector::new(0.0, 0.0, 1.0, 0.0).to_matrix(),
            Mat2::real(0.0, 1.0, 1.0, 0.0)
        );
        assert_eq!(
            FourVector::new(2.0, 1.0, 0.5, -0.5).to_matrix(),
            Mat2::new(c(3.0, 0.0), c(0.5, 0.5), c(0.5, -0.5), c(1.0, 0.0))
        );
    }

    #[test]
    fn from_matrix_examples() {
        assert_eq!(
            from_matrix(&Mat2::identity()).unwrap(),
            FourVector::new(1.0, 0.0, 0.0, 0.0)
        );
        assert_eq!(
            from_matrix(&Mat2::real(2.0, 0.0, 0.0, 0.0)).unwrap(),
            FourVector::new(1.0, 1.0, 0.0, 0.0)
        );
        let bad = Mat2::real(1.0, 1.0, 0.0, 1.0);
        assert!(matches!(from_matrix(&bad), Err(Error::NotHermitian { .. })));
        let imaginary_diag = Mat2::new(c(1.0, 0.1), ZERO, ZERO, ONE);
        assert!(from_matrix(&imaginary_diag).is_err());
    }

    #[test]
    fn determinant_is_interval() {
        let v = FourVector::new(2.0, 1.0, 0.5, -0.5);
        assert!((v.to_matrix().det().re - v.interval()).abs() < 1e-12);
        assert_eq!(v.interval(), 4.0 - 1.0 - 0.25 - 0.25);
    }

    #[test]
    fn classify_examples() {
        let tol = 1e-9;
        assert_eq!(FourMomentum::new(1.0, 0.0, 0.0, 0.0).classify(tol), MassClass::Massive);
        assert_eq!(FourMomentum::new(0.5, 0.5, 0.0, 0.0).classify(tol), MassClass::Massless);
        assert_eq!(
            FourMomentum::new(0.0, 1.0, 0.0, 0.0).classify(tol),
            MassClass::ImaginaryMass
        );
    }

    #[test]
    fn boost_momentum_examples() {
        assert_eq!(boost_momentum(1.0, 0.0), FourMomentum::new(1.0, 0.0, 0.0, 0.0));
        let p = boost_momentum(1.0, 2f64.ln());
        assert!((p.p0 - 1.25).abs() < 1e-15 && (p.pz - 0.75).abs() < 1e-15);
        let p = boost_momentum(2.0, 1.0);
        assert_eq!(p, FourMomentum::new(2.0 * 1f64.cosh(), 2.0 * 1f64.sinh(), 0.0, 0.0));
        for eta in [-3.0, -0.2, 0.0, 0.7, 5.0] {
            let p = boost_momentum(1.5, eta);
            assert!((rapidity(p.pz, 1.5) - eta).abs() < 1e-10);
        }
    }

    #[test]
    fn transform_examples() {
        let v = FourVector::new(0.3, -1.0, 2.0, 0.5);
        assert!(GroupElement::identity().act(&v).max_abs_diff(&v) < 1e-15);
        let w = GroupElement::rot_z(FRAC_PI_2).act(&FourVector::new(0.0, 0.0, 1.0, 0.0));
        assert!(w.max_abs_diff(&FourVector::new(0.0, 0.0, 0.0, 1.0)) < 1e-15);
        let full = GroupElement::rot_z(2.0 * PI).act(&v);
        assert!(full.max_abs_diff(&v) < 1e-12);
    }

    #[test]
    fn dotted_is_inverse_dagger_for_every_table_matrix() {
        for e in [
            GroupElement::rot_x(0.7),
            GroupElement::rot_y(-1.1),
            GroupElement::rot_z(2.3),
            GroupElement::boost_x(0.4),
            GroupElement::boost_y(-1.7),
            GroupElement::boost_z(1.2),
            GroupElement::gauge(1.5, 0.3),
        ] {
            assert!(e.flavor_pairing_deviation() < 1e-14, "{:?}", e.provenance());
            assert!(e.unimodularity_deviation() < 1e-14);
            let rebuilt = GroupElement::from_undotted(*e.undotted());
            assert!(rebuilt.dotted().max_abs_diff(e.dotted()) < 1e-14);
        }
    }

    #[test]
    fn composition_keeps_provenance_order() {
        let g = GroupElement::rot_z(0.1) * GroupElement::boost_z(0.2);
        assert_eq!(
            g.provenance(),
            &[Transform::RotZ { phi: 0.1 }, Transform::BoostZ { eta: 0.2 }]
        );
        assert!((&g * &g.inverse()).undotted().max_abs_diff(&Mat2::identity()) < 1e-14);
    }

    #[test]
    fn exponential_map_report_is_clean() {
        let r = verify_exponential_map();
        assert_eq!(r.checks.len(), 12);
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn interval_sweep_passes() {
        assert!(verify_interval_invariance(7, 200).passed());
    }
}
