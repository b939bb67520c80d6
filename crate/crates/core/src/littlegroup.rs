//! Wigner's little groups: the transformations that leave a standard
//! four-momentum matrix invariant, `W P W† = P`.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::mat2::{generator, mat_exp, Flavor, GeneratorId, Mat2, COMPOSED_TOL, EXACT_TOL, I};
use crate::minkowski::{GroupElement, MassClass};
use crate::report::{Check, Report};

/// `P₊ = 1`, `P₀ = diag(1, 0)`, `P₋ = diag(1, -1)`.
pub fn standard_momentum(class: MassClass) -> Mat2 {
    match class {
        MassClass::Massive => Mat2::identity(),
        MassClass::Massless => Mat2::real(1.0, 0.0, 0.0, 0.0),
        MassClass::ImaginaryMass => Mat2::real(1.0, 0.0, 0.0, -1.0),
    }
}

/// Space inversion of a momentum matrix: diagonal swapped, off-diagonal negated.
///
/// The dotted matrix `(G†)⁻¹` stabilizes `parity_image(P)` exactly when `G`
/// stabilizes `P`, so this is the momentum used for the dotted-flavor check.
pub fn parity_image(p: &Mat2) -> Mat2 {
    p.adjugate()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LittleGroupElement {
    pub element: GroupElement,
    pub class: MassClass,
    /// θ, γ or λ depending on the class.
    pub param: f64,
    pub phi: f64,
}

/// Representative of the little group of `class`.
///
/// - massive: `Z(φ)·R(θ)`
/// - massless: `T(γe^{-iφ})`, dotted `Ṫ(γe^{-iφ})`
/// - imaginary mass: `Z(φ)·S(λ)`
pub fn little_group_element(class: MassClass, param: f64, phi: f64) -> LittleGroupElement {
    let element = match class {
        MassClass::Massive => GroupElement::rot_z(phi) * GroupElement::rot_y(param),
        MassClass::Massless => GroupElement::gauge(param, phi),
        MassClass::ImaginaryMass => GroupElement::rot_z(phi) * GroupElement::boost_x(param),
    };
    LittleGroupElement {
        element,
        class,
        param,
        phi,
    }
}

/// `max|G P G† - P|` with the undotted matrix.
pub fn wigner_deviation(g: &GroupElement, p: &Mat2) -> f64 {
    g.undotted().congruence(p).max_abs_diff(p)
}

/// The dotted-flavor counterpart: `max|Ġ P̃ Ġ† - P̃|` with `P̃` the parity image.
pub fn dotted_wigner_deviation(g: &GroupElement, p: &Mat2) -> f64 {
    let q = parity_image(p);
    g.dotted().congruence(&q).max_abs_diff(&q)
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
        .collect()
}

pub const GRID_POINTS: usize = 10;

fn angle_grid() -> Vec<f64> {
    linspace(0.0, TAU, GRID_POINTS)
}

/// Main-parameter grid for a class: θ ∈ [0, 2π], γ ∈ [-5, 5], λ ∈ [-4, 4].
pub fn parameter_grid(class: MassClass) -> Vec<f64> {
    match class {
        MassClass::Massive => angle_grid(),
        MassClass::Massless => linspace(-5.0, 5.0, GRID_POINTS),
        MassClass::ImaginaryMass => linspace(-4.0, 4.0, GRID_POINTS),
    }
}

fn worst<T>(items: impl IntoIterator<Item = T>, f: impl Fn(T) -> f64) -> f64 {
    items.into_iter().map(f).fold(0.0, f64::max)
}

fn grid_elements(class: MassClass) -> Vec<LittleGroupElement> {
    let params = parameter_grid(class);
    let phis = angle_grid();
    params
        .iter()
        .flat_map(|&p| phis.iter().map(move |&phi| little_group_element(class, p, phi)))
        .collect()
}

fn class_label(class: MassClass) -> &'static str {
    match class {
        MassClass::Massive => "massive P₊",
        MassClass::Massless => "massless P₀",
        MassClass::ImaginaryMass => "imaginary-mass P₋",
    }
}

/// Wigner conditions for every class over the parameter grid, plus the
/// structural facts of each little group.
pub fn verify_little_groups() -> Report {
    let anchor = "Wigner condition W P W† = P";
    let mut checks = Vec::new();

    for class in MassClass::ALL {
        let p = standard_momentum(class);
        let elements = grid_elements(class);
        checks.push(Check::at_most(
            format!("{} worst case, undotted ({} grid points)", class_label(class), elements.len()),
            anchor,
            worst(&elements, |e| wigner_deviation(&e.element, &p)),
            COMPOSED_TOL,
        ));
        checks.push(Check::at_most(
            format!("{} worst case, dotted against parity image", class_label(class)),
            "dotted flavor (G†)⁻¹ fixes the space-inverted momentum",
            worst(&elements, |e| dotted_wigner_deviation(&e.element, &p)),
            COMPOSED_TOL,
        ));
        checks.push(Check::at_most(
            format!("Z(φ) fixes {}", class_label(class)),
            "rotations about z leave every standard momentum invariant",
            worst(angle_grid(), |phi| wigner_deviation(&GroupElement::rot_z(phi), &p)),
            EXACT_TOL,
        ));
    }

    let p_plus = standard_momentum(MassClass::Massive);
    let p_minus = standard_momentum(MassClass::ImaginaryMass);
    checks.push(Check::at_most(
        "R(θ) alone fixes P₊",
        anchor,
        worst(angle_grid(), |t| wigner_deviation(&GroupElement::rot_y(t), &p_plus)),
        COMPOSED_TOL,
    ));
    checks.push(Check::at_most(
        "S(λ) alone fixes P₋",
        anchor,
        worst(parameter_grid(MassClass::ImaginaryMass), |l| {
            wigner_deviation(&GroupElement::boost_x(l), &p_minus)
        }),
        COMPOSED_TOL,
    ));
    checks.push(Check::at_least(
        "B(η=1) does not fix P₊",
        "boosts change the rest momentum",
        wigner_deviation(&GroupElement::boost_z(1.0), &p_plus),
        0.1,
    ));
    checks.push(Check::at_most(
        "massive representatives have |entries| <= 1",
        "massive little group is a rotation group",
        worst(grid_elements(MassClass::Massive), |e| {
            (e.element.undotted().max_abs() - 1.0).max(0.0)
        }),
        EXACT_TOL,
    ));

    for flavor in Flavor::BOTH {
        let n1 = generator(GeneratorId::N1, flavor);
        let n2 = generator(GeneratorId::N2, flavor);
        let dev = worst(grid_elements(MassClass::Massless), |e| {
            let (s, c) = e.phi.sin_cos();
            let exp = mat_exp(&((n1 * c - n2 * s) * (-I * e.param)));
            exp.max_abs_diff(e.element.matrix(flavor))
        });
        let name = match flavor {
            Flavor::Undotted => "exp(-iγ(cosφ N1 - sinφ N2)) = T(γe^{-iφ})",
            Flavor::Dotted => "exp(-iγ(cosφ Ṅ1 - sinφ Ṅ2)) = Ṫ(γe^{-iφ})",
        };
        checks.push(Check::at_most(
            name,
            "T is generated by N1 and N2",
            dev,
            COMPOSED_TOL,
        ));
    }

    let pairs: Vec<(f64, f64)> = [(0.3, 1.1), (-2.0, 0.7), (4.0, -5.5), (1.0, 1.0)].into();
    checks.push(Check::at_most(
        "R(a)R(b) = R(a+b)",
        "one-parameter subgroup",
        worst(&pairs, |&(a, b)| {
            (GroupElement::rot_y(a) * GroupElement::rot_y(b))
                .undotted()
                .max_abs_diff(GroupElement::rot_y(a + b).undotted())
        }),
        EXACT_TOL,
    ));
    checks.push(Check::at_most(
        "T(a)T(b) = T(a+b)",
        "one-parameter subgroup",
        worst(&pairs, |&(a, b)| {
            (GroupElement::gauge(a, 0.0) * GroupElement::gauge(b, 0.0))
                .undotted()
                .max_abs_diff(GroupElement::gauge(a + b, 0.0).undotted())
        }),
        EXACT_TOL,
    ));
    checks.push(Check::at_most(
        "S(a)S(b) = S(a+b)",
        "one-parameter subgroup",
        worst(&pairs, |&(a, b)| {
            (GroupElement::boost_x(a) * GroupElement::boost_x(b))
                .undotted()
                .max_abs_diff(GroupElement::boost_x(a + b).undotted())
        }),
        EXACT_TOL,
    ));
    checks.push(Check::at_most(
        "T(a e^{-iφ}) and T(b e^{-iψ}) commute",
        "[N1, N2] = 0",
        worst(&pairs, |&(a, b)| {
            let x = *GroupElement::gauge(a, 0.4).undotted();
            let y = *GroupElement::gauge(b, -1.3).undotted();
            (x * y).max_abs_diff(&(y * x))
        }),
        EXACT_TOL,
    ));

    Report::new("littlegroup", checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn standard_momenta() {
        assert_eq!(standard_momentum(MassClass::Massive), Mat2::identity());
        assert_eq!(standard_momentum(MassClass::Massless), Mat2::real(1.0, 0.0, 0.0, 0.0));
        assert_eq!(
            standard_momentum(MassClass::ImaginaryMass),
            Mat2::real(1.0, 0.0, 0.0, -1.0)
        );
        let dets: Vec<f64> = MassClass::ALL
            .iter()
            .map(|&c| standard_momentum(c).det().re)
            .collect();
        assert_eq!(dets, [1.0, 0.0, -1.0]);
    }

    #[test]
    fn massless_examples() {
        let e = little_group_element(MassClass::Massless, 0.0, 0.0).element;
        assert_eq!(*e.undotted(), Mat2::identity());
        assert_eq!(*e.dotted(), Mat2::identity());

        let e = little_group_element(MassClass::Massless, 2.0, 0.0).element;
        assert_eq!(*e.undotted(), Mat2::real(1.0, -2.0, 0.0, 1.0));
        assert_eq!(*e.dotted(), Mat2::real(1.0, 0.0, 2.0, 1.0));
    }

    #[test]
    fn massive_at_pi() {
        let e = little_group_element(MassClass::Massive, PI, 0.0).element;
        assert!(e.undotted().max_abs_diff(&Mat2::real(0.0, -1.0, 1.0, 0.0)) < 1e-15);
    }

    #[test]
    fn deviation_examples() {
        for class in MassClass::ALL {
            let p = standard_momentum(class);
            assert!(wigner_deviation(&GroupElement::rot_z(1.234), &p) < EXACT_TOL);
        }
        let p0 = standard_momentum(MassClass::Massless);
        assert!(wigner_deviation(&GroupElement::gauge(5.0, 0.0), &p0) < EXACT_TOL);

        let b = wigner_deviation(&GroupElement::boost_z(1.0), &Mat2::identity());
        let expected = std::f64::consts::E - 1.0;
        assert!((b - expected).abs() < 1e-14);
        assert!((expected - 2.0 * 0.5f64.sinh() * 0.5f64.exp()).abs() < 1e-14);
    }

    #[test]
    fn dotted_massless_check_uses_lower_light_cone() {
        let p0 = standard_momentum(MassClass::Massless);
        assert_eq!(parity_image(&p0), Mat2::real(0.0, 0.0, 0.0, 1.0));
        let t = GroupElement::gauge(3.0, 0.8);
        assert!(dotted_wigner_deviation(&t, &p0) < EXACT_TOL);
        // Ṫ does not fix P₀ itself.
        assert!(t.dotted().congruence(&p0).max_abs_diff(&p0) > 1.0);
    }

    #[test]
    fn report_is_clean() {
        let r = verify_little_groups();
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}
