//! Complex 2×2 matrices and the Lorentz generators.
//!
//! Generators are stored with exact half-integer entries so that the
//! commutator tables can be checked without trigonometric round-off:
//!
//! ```text
//! J_i = σ_i / 2        K_i = i σ_i / 2        (undotted)
//! J_i = σ_i / 2        K̇_i = -i σ_i / 2       (dotted)
//! N1 = J2 - K1         N2 = J1 + K2           (flavor's own K)
//! ```

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::report::{Check, Report};

pub type C64 = Complex64;

pub const I: C64 = C64::new(0.0, 1.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const ZERO: C64 = C64::new(0.0, 0.0);

/// Exact-entry identities (generators, commutators).
pub const EXACT_TOL: f64 = 1e-12;
/// Checks that go through exponentials or several products.
pub const COMPOSED_TOL: f64 = 1e-10;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// A 2×2 complex matrix, row-major.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mat2 {
    pub m: [[C64; 2]; 2],
}

impl Mat2 {
    pub const fn new(a11: C64, a12: C64, a21: C64, a22: C64) -> Self {
        Self {
            m: [[a11, a12], [a21, a22]],
        }
    }

    pub fn real(a11: f64, a12: f64, a21: f64, a22: f64) -> Self {
        Self::new(c(a11, 0.0), c(a12, 0.0), c(a21, 0.0), c(a22, 0.0))
    }

    pub const fn identity() -> Self {
        Self::new(ONE, ZERO, ZERO, ONE)
    }

    pub const fn zero() -> Self {
        Self::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub fn diag(a: C64, b: C64) -> Self {
        Self::new(a, ZERO, ZERO, b)
    }

    /// Pauli matrix σ_k for k in 1..=3.
    pub fn pauli(k: usize) -> Self {
        match k {
            1 => Self::real(0.0, 1.0, 1.0, 0.0),
            2 => Self::new(ZERO, -I, I, ZERO),
            3 => Self::real(1.0, 0.0, 0.0, -1.0),
            _ => panic!("Pauli index must be 1, 2 or 3, got {k}"),
        }
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.m[row][col]
    }

    pub fn det(&self) -> C64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> C64 {
        self.m[0][0] + self.m[1][1]
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let m = &self.m;
        Self::new(m[0][0].conj(), m[1][0].conj(), m[0][1].conj(), m[1][1].conj())
    }

    pub fn transpose(&self) -> Self {
        let m = &self.m;
        Self::new(m[0][0], m[1][0], m[0][1], m[1][1])
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    /// Adjugate: `adj(M)·M = det(M)·1`. Equals the inverse on SL(2,C).
    pub fn adjugate(&self) -> Self {
        let m = &self.m;
        Self::new(m[1][1], -m[0][1], -m[1][0], m[0][0])
    }

    /// Inverse, or `None` for a singular matrix.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d == ZERO {
            return None;
        }
        Some(self.adjugate() * d.inv())
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        let m = &self.m;
        Self::new(f(m[0][0]), f(m[0][1]), f(m[1][0]), f(m[1][1]))
    }

    pub fn entries(&self) -> [C64; 4] {
        [self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]]
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Max-abs entry norm of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn hermitian_deviation(&self) -> f64 {
        self.max_abs_diff(&self.dagger())
    }

    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// `self · v` for a column two-vector.
    pub fn apply(&self, v: [C64; 2]) -> [C64; 2] {
        [
            self.m[0][0] * v[0] + self.m[0][1] * v[1],
            self.m[1][0] * v[0] + self.m[1][1] * v[1],
        ]
    }

    /// Congruence `self · x · self†`.
    pub fn congruence(&self, x: &Mat2) -> Mat2 {
        *self * *x * self.dagger()
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            m[0][0], m[0][1], m[1][0], m[1][1]
        )
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        let (a, b) = (&self.m, &rhs.m);
        Mat2::new(a[0][0] + b[0][0], a[0][1] + b[0][1], a[1][0] + b[1][0], a[1][1] + b[1][1])
    }
}

impl AddAssign for Mat2 {
    fn add_assign(&mut self, rhs: Mat2) {
        *self = *self + rhs;
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        self + (-rhs)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.map(|z| -z)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let (a, b) = (&self.m, &rhs.m);
        Mat2::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}

impl Mul<C64> for Mat2 {
    type Output = Mat2;
    fn mul(self, s: C64) -> Mat2 {
        self.map(|z| z * s)
    }
}

impl Mul<Mat2> for C64 {
    type Output = Mat2;
    fn mul(self, m: Mat2) -> Mat2 {
        m * self
    }
}

impl Mul<f64> for Mat2 {
    type Output = Mat2;
    fn mul(self, s: f64) -> Mat2 {
        self.map(|z| z * s)
    }
}

impl Mul<Mat2> for f64 {
    type Output = Mat2;
    fn mul(self, m: Mat2) -> Mat2 {
        m * self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeneratorId {
    J1,
    J2,
    J3,
    K1,
    K2,
    K3,
    N1,
    N2,
}

impl GeneratorId {
    pub const ROTATIONS: [GeneratorId; 3] = [GeneratorId::J1, GeneratorId::J2, GeneratorId::J3];
    pub const BOOSTS: [GeneratorId; 3] = [GeneratorId::K1, GeneratorId::K2, GeneratorId::K3];

    /// Label with a dot over boost and N generators in the dotted flavor.
    pub fn label(self, flavor: Flavor) -> String {
        let (letter, index) = match self {
            GeneratorId::J1 => ("J", 1),
            GeneratorId::J2 => ("J", 2),
            GeneratorId::J3 => ("J", 3),
            GeneratorId::K1 => ("K", 1),
            GeneratorId::K2 => ("K", 2),
            GeneratorId::K3 => ("K", 3),
            GeneratorId::N1 => ("N", 1),
            GeneratorId::N2 => ("N", 2),
        };
        let dot = if flavor == Flavor::Dotted && letter != "J" {
            "\u{307}"
        } else {
            ""
        };
        format!("{letter}{dot}{index}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flavor {
    Undotted,
    Dotted,
}

impl Flavor {
    pub const BOTH: [Flavor; 2] = [Flavor::Undotted, Flavor::Dotted];

    /// Sign carried by the boost generators: +1 undotted, -1 dotted.
    pub fn boost_sign(self) -> f64 {
        match self {
            Flavor::Undotted => 1.0,
            Flavor::Dotted => -1.0,
        }
    }
}

/// The exact generator matrix.
pub fn generator(id: GeneratorId, flavor: Flavor) -> Mat2 {
    use GeneratorId::*;
    let half = 0.5;
    match id {
        J1 | J2 | J3 => {
            let k = id as usize + 1;
            Mat2::pauli(k) * half
        }
        K1 | K2 | K3 => {
            let k = id as usize - 2;
            Mat2::pauli(k) * (I * half * flavor.boost_sign())
        }
        N1 => generator(J2, flavor) - generator(K1, flavor),
        N2 => generator(J1, flavor) + generator(K2, flavor),
    }
}

/// `ab - ba`.
pub fn commutator(a: &Mat2, b: &Mat2) -> Mat2 {
    *a * *b - *b * *a
}

/// Matrix exponential.
///
/// Writes `m = τ·1 + B` with `τ = tr(m)/2` and `B` traceless. Since
/// `B² = -det(B)·1`, `exp(B) = cosh(s)·1 + sinh(s)/s·B` with `s² = -det(B)`;
/// both functions are even in `s`, so the branch of the square root is irrelevant.
pub fn mat_exp(m: &Mat2) -> Mat2 {
    let tau = m.trace() * 0.5;
    let b = *m - Mat2::identity() * tau;
    let s = (-b.det()).sqrt();
    let (ch, shc) = cosh_sinhc(s);
    (Mat2::identity() * ch + b * shc) * tau.exp()
}

/// `(cosh s, sinh(s)/s)`, with a series near zero.
fn cosh_sinhc(s: C64) -> (C64, C64) {
    if s.norm() < 1e-2 {
        let s2 = s * s;
        // Horner forms of the Taylor series through s^8.
        let ch = ONE + s2 / 2.0 * (ONE + s2 / 12.0 * (ONE + s2 / 30.0 * (ONE + s2 / 56.0)));
        let shc = ONE + s2 / 6.0 * (ONE + s2 / 20.0 * (ONE + s2 / 42.0 * (ONE + s2 / 72.0)));
        (ch, shc)
    } else {
        (s.cosh(), s.sinh() / s)
    }
}

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

struct Relation {
    lhs: (GeneratorId, GeneratorId),
    /// Right-hand side as `coefficient · generator` terms.
    rhs: Vec<(C64, GeneratorId)>,
    anchor: &'static str,
}

fn relation_name(rel: &Relation, flavor: Flavor) -> String {
    let (a, b) = rel.lhs;
    let rhs = if rel.rhs.is_empty() {
        "0".to_string()
    } else {
        rel.rhs
            .iter()
            .map(|(coef, g)| {
                let l = g.label(flavor);
                match (coef.re, coef.im) {
                    (r, i) if r == 0.0 && i == 1.0 => format!("i·{l}"),
                    (r, i) if r == 0.0 && i == -1.0 => format!("-i·{l}"),
                    _ => format!("({coef})·{l}"),
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    };
    format!("[{},{}] = {}", a.label(flavor), b.label(flavor), rhs)
}

/// `(a, b, c, sign, anchor)` for `[a_i, b_j] = sign · i ε_ijk · c_k`.
type Family<'a> = (&'a [GeneratorId; 3], &'a [GeneratorId; 3], &'a [GeneratorId; 3], f64, &'a str);

fn lorentz_relations() -> Vec<Relation> {
    use GeneratorId::*;
    let mut out = Vec::new();
    let families: [Family; 3] = [
        (
            &GeneratorId::ROTATIONS,
            &GeneratorId::ROTATIONS,
            &GeneratorId::ROTATIONS,
            1.0,
            "rotation algebra [J_i, J_j] = i eps_ijk J_k",
        ),
        (
            &GeneratorId::ROTATIONS,
            &GeneratorId::BOOSTS,
            &GeneratorId::BOOSTS,
            1.0,
            "Lorentz algebra [J_i, K_j] = i eps_ijk K_k (index k on the right)",
        ),
        (
            &GeneratorId::BOOSTS,
            &GeneratorId::BOOSTS,
            &GeneratorId::ROTATIONS,
            -1.0,
            "Lorentz algebra [K_i, K_j] = -i eps_ijk J_k (J on the right; a K on the right does not hold)",
        ),
    ];
    for (left, right, result, sign, anchor) in families {
        for i in 0..3 {
            for j in 0..3 {
                let rhs = (0..3)
                    .filter(|&k| levi_civita(i, j, k) != 0.0)
                    .map(|k| (I * (sign * levi_civita(i, j, k)), result[k]))
                    .collect();
                out.push(Relation {
                    lhs: (left[i], right[j]),
                    rhs,
                    anchor,
                });
            }
        }
    }
    let e2 = "E(2)-like algebra of the massless little group \
              (signs follow the N matrices; the printed table has +i/-i interchanged)";
    out.push(Relation { lhs: (N1, N2), rhs: vec![], anchor: e2 });
    out.push(Relation { lhs: (J3, N1), rhs: vec![(-I, N2)], anchor: e2 });
    out.push(Relation { lhs: (J3, N2), rhs: vec![(I, N1)], anchor: e2 });
    let o21 = "O(2,1) algebra of the imaginary-mass little group";
    out.push(Relation { lhs: (J3, K1), rhs: vec![(I, K2)], anchor: o21 });
    out.push(Relation { lhs: (J3, K2), rhs: vec![(-I, K1)], anchor: o21 });
    out.push(Relation { lhs: (K1, K2), rhs: vec![(-I, J3)], anchor: o21 });
    out
}

/// Checks every commutation relation of the Lorentz algebra, the E(2)-like
/// massless little-group algebra and the O(2,1) algebra, in both flavors.
pub fn verify_algebra_tables() -> Report {
    let relations = lorentz_relations();
    let mut checks = Vec::with_capacity(2 * relations.len());
    for flavor in Flavor::BOTH {
        for rel in &relations {
            let (a, b) = rel.lhs;
            let lhs = commutator(&generator(a, flavor), &generator(b, flavor));
            let rhs = rel
                .rhs
                .iter()
                .fold(Mat2::zero(), |acc, &(coef, g)| acc + generator(g, flavor) * coef);
            let prefix = match flavor {
                Flavor::Undotted => "undotted",
                Flavor::Dotted => "dotted",
            };
            checks.push(Check::at_most(
                format!("{prefix} {}", relation_name(rel, flavor)),
                rel.anchor,
                lhs.max_abs_diff(&rhs),
                EXACT_TOL,
            ));
        }
    }
    Report::new("algebra", checks)
}
