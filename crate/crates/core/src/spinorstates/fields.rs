use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use super::state::{MultiSpinorState, Spinor};
use crate::error::{Error, Result};
use crate::mat2::{generator, Flavor, GeneratorId, Mat2, C64, I, ONE};
use crate::minkowski::{FourVector, GroupElement};
use Spinor::{UDot, VDot, U, V};

fn p(coef: C64, labels: &[Spinor]) -> MultiSpinorState {
    MultiSpinorState::term(coef, labels)
}

fn one(labels: &[Spinor]) -> MultiSpinorState {
    p(ONE, labels)
}

/// `1/(2i) = −i/2`.
const HALF_OVER_I: C64 = C64::new(0.0, -0.5);

/// The symmetric and antisymmetric two-spinor combinations.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinCombinations {
    /// `uu, (uv+vu)/√2, vv` for `S_z = 1, 0, −1`.
    pub triplet: [MultiSpinorState; 3],
    pub triplet_dot: [MultiSpinorState; 3],
    /// `(uv − vu)/√2`.
    pub s: MultiSpinorState,
    /// `(u̇v̇ − v̇u̇)/√2`.
    pub s_dot: MultiSpinorState,
    /// `(S + Ṡ)/√2`, even under dot conjugation.
    pub s_plus: MultiSpinorState,
    /// `(S − Ṡ)/√2`, odd under dot conjugation.
    pub s_minus: MultiSpinorState,
}

/// Triplet and singlet built from the ordered pair `(a, b)` of up/down spinors.
fn triplet_singlet(a: Spinor, b: Spinor) -> ([MultiSpinorState; 3], MultiSpinorState) {
    let (ab, ba) = (one(&[a, b]), one(&[b, a]));
    (
        [
            one(&[a, a]),
            (ab.clone() + ba.clone()) * FRAC_1_SQRT_2,
            one(&[b, b]),
        ],
        (ab - ba) * FRAC_1_SQRT_2,
    )
}

pub fn spin_combinations() -> SpinCombinations {
    let (triplet, s) = triplet_singlet(U, V);
    let (triplet_dot, s_dot) = triplet_singlet(UDot, VDot);
    SpinCombinations {
        triplet,
        triplet_dot,
        s_plus: (s.clone() + s_dot.clone()) * FRAC_1_SQRT_2,
        s_minus: (s.clone() - s_dot.clone()) * FRAC_1_SQRT_2,
        s,
        s_dot,
    }
}

/// The sixteen bilinears, four rows of `(uu, sym, vv, antisym)` for the
/// orderings `(u,v)`, `(u̇,v̇)`, `(u,u̇ | v,v̇)` and `(u̇,u | v̇,v)`.
pub fn bilinear_states() -> Vec<(String, MultiSpinorState)> {
    let rows: [([Spinor; 2], [Spinor; 2]); 4] = [
        ([U, U], [V, V]),
        ([UDot, UDot], [VDot, VDot]),
        ([U, UDot], [V, VDot]),
        ([UDot, U], [VDot, V]),
    ];
    let name = |l: &[Spinor]| l.iter().map(|s| s.to_string()).collect::<String>();
    let mut out = Vec::with_capacity(16);
    for (up, down) in rows {
        let cross = one(&[up[0], down[1]]);
        let cross_rev = one(&[down[0], up[1]]);
        let tag = format!("{}{}", name(&[up[0], down[1]]), name(&[down[0], up[1]]));
        out.push((name(&up), one(&up)));
        out.push((format!("sym({tag})"), (cross.clone() + cross_rev.clone()) * FRAC_1_SQRT_2));
        out.push((name(&down), one(&down)));
        out.push((format!("anti({tag})"), (cross - cross_rev) * FRAC_1_SQRT_2));
    }
    out
}

/// `y x − x y` for an undotted `x` and a dotted `y`.
fn wedge(x: Spinor, y: Spinor) -> MultiSpinorState {
    one(&[y, x]) - one(&[x, y])
}

/// Arrays of states transforming like a four-vector matrix and its parity image.
#[derive(Debug, Clone, PartialEq)]
pub struct FourVectorStates {
    pub v: [[MultiSpinorState; 2]; 2],
    pub v_dot: [[MultiSpinorState; 2]; 2],
}

/// `V = [[v̇u − uv̇, v̇v − vv̇], [uu̇ − u̇u, vu̇ − u̇v]]` and `V̇` its entrywise
/// dot conjugate, which equals `[[V₂₂, −V₁₂], [−V₂₁, V₁₁]]`.
pub fn four_vector_states() -> FourVectorStates {
    let v = [
        [wedge(U, VDot), wedge(V, VDot)],
        [-wedge(U, UDot), -wedge(V, UDot)],
    ];
    let v_dot = [
        [v[0][0].dot_conjugate(), v[0][1].dot_conjugate()],
        [v[1][0].dot_conjugate(), v[1][1].dot_conjugate()],
    ];
    FourVectorStates { v, v_dot }
}

/// `Σ_ab X_ab · V_ba`: the state carried by a coordinate matrix `X`.
pub fn pair_with(x: &Mat2, v: &[[MultiSpinorState; 2]; 2]) -> MultiSpinorState {
    let mut out = MultiSpinorState::zero(2);
    for a in 0..2 {
        for b in 0..2 {
            out = out + v[b][a].clone() * x.get(a, b);
        }
    }
    out
}

fn unit(a: usize, b: usize) -> Mat2 {
    let mut m = Mat2::zero();
    m.m[a][b] = ONE;
    m
}

/// Worst coefficient mismatch between `g` acting on the states and the
/// congruence `M X M†` acting on coordinates, over the four matrix units `X`.
///
/// `V` pairs with the undotted matrix of `g` and `V̇` with the dotted one.
pub fn four_vector_covariance_deviation(g: &GroupElement) -> f64 {
    let states = four_vector_states();
    let mut worst: f64 = 0.0;
    for (arr, m) in [(&states.v, g.undotted()), (&states.v_dot, g.dotted())] {
        for a in 0..2 {
            for b in 0..2 {
                let x = unit(a, b);
                let lhs = super::state::apply_element(g, &pair_with(&x, arr));
                let rhs = pair_with(&m.congruence(&x), arr);
                worst = worst.max(lhs.max_abs_diff(&rhs));
            }
        }
    }
    worst
}

/// An electromagnetic four-potential `(A₀, A_z, A_x, A_y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FourPotential {
    pub a0: f64,
    pub az: f64,
    pub ax: f64,
    pub ay: f64,
}

impl FourPotential {
    pub const fn new(a0: f64, az: f64, ax: f64, ay: f64) -> Self {
        Self { a0, az, ax, ay }
    }

    pub fn as_vector(&self) -> FourVector {
        FourVector::new(self.a0, self.az, self.ax, self.ay)
    }

    /// `[[A₀+A_z, A_x−iA_y], [A_x+iA_y, A₀−A_z]]`.
    pub fn to_matrix(&self) -> Mat2 {
        self.as_vector().to_matrix()
    }

    pub fn is_finite(&self) -> bool {
        self.as_vector().is_finite()
    }

    /// `|A₀ − A_z|`.
    pub fn lorentz_residual(&self) -> f64 {
        (self.a0 - self.az).abs()
    }

    fn scale(&self) -> f64 {
        [self.a0, self.az, self.ax, self.ay]
            .iter()
            .fold(1.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.as_vector().max_abs_diff(&other.as_vector())
    }
}

impl From<FourVector> for FourPotential {
    fn from(v: FourVector) -> Self {
        Self::new(v.t, v.z, v.x, v.y)
    }
}

/// Relative tolerance for the Lorentz condition `A₀ = A_z`.
pub const LORENTZ_TOL: f64 = 1e-9;

/// `A₀ + A_z` shifted by `−2γ(A_x cos φ + A_y sin φ)`; `A₀ − A_z`, `A_x` and
/// `A_y` untouched.
pub fn gauge_transform_potential(a: &FourPotential, gamma: f64, phi: f64) -> FourPotential {
    let half = gamma * (a.ax * phi.cos() + a.ay * phi.sin());
    FourPotential {
        a0: a.a0 - half,
        az: a.az - half,
        ax: a.ax,
        ay: a.ay,
    }
}

/// `T(γ) A T(γ)†` for a potential satisfying `A₀ = A_z`.
pub fn gauge_transform_matrix(a: &FourPotential, gamma: f64) -> Result<Mat2> {
    gauge_transform_matrix_phased(a, gamma, 0.0)
}

/// `T(γe^{−iφ}) A T(γe^{−iφ})†` for a potential satisfying `A₀ = A_z`.
pub fn gauge_transform_matrix_phased(a: &FourPotential, gamma: f64, phi: f64) -> Result<Mat2> {
    let residual = a.lorentz_residual();
    if residual > LORENTZ_TOL * a.scale() {
        return Err(Error::LorentzConditionViolated { residual });
    }
    Ok(GroupElement::gauge(gamma, phi)
        .undotted()
        .congruence(&a.to_matrix()))
}

/// The electric-like `f` and magnetic-like `g` components of an antisymmetric
/// tensor, each ordered `(z, x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldTensor {
    pub f: [f64; 3],
    pub g: [f64; 3],
}

impl FieldTensor {
    /// Rows and columns in `(t, z, x, y)` order.
    pub fn to_matrix4(&self) -> [[f64; 4]; 4] {
        let [fz, fx, fy] = self.f;
        let [gz, gx, gy] = self.g;
        [
            [0.0, -fz, -fx, -fy],
            [fz, 0.0, -gy, gx],
            [fx, gy, 0.0, -gz],
            [fy, -gx, gz, 0.0],
        ]
    }
}

/// Spinor bilinears for the six tensor components.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldTensorStates {
    pub fz: MultiSpinorState,
    pub fx: MultiSpinorState,
    pub fy: MultiSpinorState,
    pub gz: MultiSpinorState,
    pub gx: MultiSpinorState,
    pub gy: MultiSpinorState,
}

impl FieldTensorStates {
    pub fn named(&self) -> [(&'static str, &MultiSpinorState); 6] {
        [
            ("f_z", &self.fz),
            ("f_x", &self.fx),
            ("f_y", &self.fy),
            ("g_z", &self.gz),
            ("g_x", &self.gx),
            ("g_y", &self.gy),
        ]
    }
}

pub fn field_tensor_states() -> FieldTensorStates {
    let uv_sym = one(&[U, V]) + one(&[V, U]);
    let uv_sym_dot = one(&[UDot, VDot]) + one(&[VDot, UDot]);
    let (uu, vv) = (one(&[U, U]), one(&[V, V]));
    let (uu_d, vv_d) = (one(&[UDot, UDot]), one(&[VDot, VDot]));
    let sum = uu.clone() + vv.clone();
    let diff = uu - vv;
    let sum_d = uu_d.clone() + vv_d.clone();
    let diff_d = uu_d - vv_d;
    FieldTensorStates {
        fz: (uv_sym.clone() - uv_sym_dot.clone()) * 0.5,
        gz: (uv_sym + uv_sym_dot) * HALF_OVER_I,
        fx: (sum.clone() - sum_d.clone()) * 0.5,
        fy: (diff.clone() - diff_d.clone()) * HALF_OVER_I,
        gx: (sum + sum_d) * HALF_OVER_I,
        gy: (diff + diff_d) * -0.5,
    }
}

/// Transverse fields kept in the massless limit, built from `uu` and `v̇v̇`.
#[derive(Debug, Clone, PartialEq)]
pub struct MasslessFields {
    pub ex: MultiSpinorState,
    pub ey: MultiSpinorState,
    pub bx: MultiSpinorState,
    pub by: MultiSpinorState,
}

pub fn massless_limit_fields() -> MasslessFields {
    let (uu, vv_d) = (one(&[U, U]), one(&[VDot, VDot]));
    let diff = uu.clone() - vv_d.clone();
    let sum = uu + vv_d;
    MasslessFields {
        ex: diff.clone() * 0.5,
        ey: sum.clone() * HALF_OVER_I,
        bx: sum * HALF_OVER_I,
        by: diff * -0.5,
    }
}

/// Circular combinations `E± = E_x ± iE_y`, `B± = B_x ± iB_y`.
#[derive(Debug, Clone, PartialEq)]
pub struct HelicityStates {
    pub e_plus: MultiSpinorState,
    pub e_minus: MultiSpinorState,
    pub b_plus: MultiSpinorState,
    pub b_minus: MultiSpinorState,
}

/// `E₊ = 1·uu`, `E₋ = −1·v̇v̇`, `B₊ = −i·uu`, `B₋ = −i·v̇v̇`.
pub const HELICITY_CONSTANTS: [(&str, C64, [Spinor; 2]); 4] = [
    ("E+", C64::new(1.0, 0.0), [U, U]),
    ("E-", C64::new(-1.0, 0.0), [VDot, VDot]),
    ("B+", C64::new(0.0, -1.0), [U, U]),
    ("B-", C64::new(0.0, -1.0), [VDot, VDot]),
];

impl HelicityStates {
    pub fn named(&self) -> [(&'static str, &MultiSpinorState); 4] {
        [
            ("E+", &self.e_plus),
            ("E-", &self.e_minus),
            ("B+", &self.b_plus),
            ("B-", &self.b_minus),
        ]
    }
}

pub fn helicity_states() -> HelicityStates {
    let f = massless_limit_fields();
    HelicityStates {
        e_plus: f.ex.clone() + f.ey.clone() * I,
        e_minus: f.ex - f.ey * I,
        b_plus: f.bx.clone() + f.by.clone() * I,
        b_minus: f.bx - f.by * I,
    }
}

/// Outcome of the `N₁|s⟩ = N₂|s⟩ = 0` test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeinbergResult {
    pub passes: bool,
    pub residual_n1: f64,
    pub residual_n2: f64,
}

impl WeinbergResult {
    pub fn residual(&self) -> f64 {
        self.residual_n1.max(self.residual_n2)
    }
}

/// Applies `N₁` and `N₂` (dotted factors by `Ṅ₁`, `Ṅ₂`) as derivations and
/// reports the norms of the images.
pub fn weinberg_condition(s: &MultiSpinorState, tol: f64) -> WeinbergResult {
    let residual = |id| {
        s.derive(&generator(id, Flavor::Undotted), &generator(id, Flavor::Dotted))
            .norm()
    };
    let residual_n1 = residual(GeneratorId::N1);
    let residual_n2 = residual(GeneratorId::N2);
    WeinbergResult {
        passes: residual_n1 <= tol && residual_n2 <= tol,
        residual_n1,
        residual_n2,
    }
}

/// The spinor left fixed by the gauge matrix of `flavor`: `u` or `v̇`.
pub fn neutrino_polarization(flavor: Flavor) -> Spinor {
    match flavor {
        Flavor::Undotted => U,
        Flavor::Dotted => VDot,
    }
}

/// The coefficient `k` with `s = k · labels`, if `s` is a single product.
pub fn proportionality(s: &MultiSpinorState, labels: &[Spinor]) -> Option<C64> {
    let k = s.coefficient(labels);
    (s.len() == 1 && k != C64::default()).then_some(k)
}
