use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fields::*;
use super::state::{apply_element, MultiSpinorState, Spinor};
use crate::mat2::{Flavor, C64, COMPOSED_TOL, EXACT_TOL};
use crate::minkowski::{random_element, GroupElement};
use crate::report::{Check, Report};

fn worst<T>(items: impl IntoIterator<Item = T>, f: impl FnMut(T) -> f64) -> f64 {
    items.into_iter().map(f).fold(0.0, f64::max)
}

fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect()
}

/// The seven one-parameter subgroups with their labels.
type Subgroup = (&'static str, fn(f64) -> GroupElement);

fn subgroups() -> [Subgroup; 7] {
    [
        ("R_x", GroupElement::rot_x),
        ("R_y", GroupElement::rot_y),
        ("Z", GroupElement::rot_z),
        ("S_x", GroupElement::boost_x),
        ("S_y", GroupElement::boost_y),
        ("B", GroupElement::boost_z),
        ("T", |g| GroupElement::gauge(g, 0.0)),
    ]
}

/// Worst `‖g·s − s‖` over a set of elements.
fn invariance(elements: &[GroupElement], s: &MultiSpinorState) -> f64 {
    worst(elements, |g| apply_element(g, s).max_abs_diff(s))
}

fn massless_little_group(gamma: f64, phi: f64, angle: f64) -> GroupElement {
    GroupElement::gauge(gamma, phi) * GroupElement::rot_z(angle)
}

/// Spinor-state checks: scalars, parity, four-vector covariance, field and
/// helicity states, Weinberg states and gauge transformations of the potential.
pub fn verify_spinors(seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    let params = grid(-2.0, 2.0, 9);
    let combos = spin_combinations();

    for (label, make) in subgroups() {
        let elements: Vec<_> = params.iter().map(|&t| make(t)).collect();
        checks.push(Check::at_most(
            format!("{label} leaves S and Ṡ invariant"),
            "antisymmetric spinor pairs are Lorentz scalars",
            invariance(&elements, &combos.s).max(invariance(&elements, &combos.s_dot)),
            COMPOSED_TOL,
        ));
    }

    let parity_anchor = "dot conjugation is space inversion";
    checks.push(Check::at_most(
        "dot conjugation fixes S₊",
        parity_anchor,
        combos.s_plus.dot_conjugate().max_abs_diff(&combos.s_plus),
        0.0,
    ));
    checks.push(Check::at_most(
        "dot conjugation negates S₋",
        parity_anchor,
        combos.s_minus.dot_conjugate().max_abs_diff(&-combos.s_minus.clone()),
        0.0,
    ));
    let fields = field_tensor_states();
    for (name, s) in fields.named() {
        let odd = name.starts_with('f');
        let target = if odd { -s.clone() } else { s.clone() };
        checks.push(Check::at_most(
            format!(
                "dot conjugation {} {name}",
                if odd { "negates" } else { "fixes" }
            ),
            "f is a vector and g a pseudo-vector under parity",
            s.dot_conjugate().max_abs_diff(&target),
            0.0,
        ));
    }
    let one = |l: &[Spinor]| MultiSpinorState::term(C64::new(1.0, 0.0), l);
    use Spinor::*;
    for (from, to) in [([U, U], [UDot, UDot]), ([VDot, VDot], [V, V])] {
        checks.push(Check::at_most(
            format!("dot conjugation maps {} to {}", one(&from), one(&to)),
            "parity exchanges the surviving helicity spinors",
            one(&from).dot_conjugate().max_abs_diff(&one(&to)),
            0.0,
        ));
    }

    let fv = four_vector_states();
    let rearranged = [
        [fv.v[1][1].clone(), -fv.v[0][1].clone()],
        [-fv.v[1][0].clone(), fv.v[0][0].clone()],
    ];
    checks.push(Check::at_most(
        "V̇ is the parity rearrangement of V",
        "diagonal entries swap, off-diagonal entries flip sign",
        worst(0..4, |k| fv.v_dot[k / 2][k % 2].max_abs_diff(&rearranged[k / 2][k % 2])),
        0.0,
    ));
    let cov_anchor = "spinor four-vector transforms like G X G†";
    for (label, make) in subgroups() {
        let elements: Vec<_> = params.iter().map(|&t| make(t)).collect();
        checks.push(Check::at_most(
            format!("four-vector states covariant under {label}"),
            cov_anchor,
            worst(&elements, four_vector_covariance_deviation),
            COMPOSED_TOL,
        ));
    }
    let randoms: Vec<_> = (0..50).map(|_| random_element(&mut rng)).collect();
    checks.push(Check::at_most(
        "four-vector states covariant under 50 random elements",
        cov_anchor,
        worst(&randoms, four_vector_covariance_deviation),
        COMPOSED_TOL,
    ));

    let gauges: Vec<_> = grid(-2.0, 2.0, 9)
        .into_iter()
        .flat_map(|g| grid(0.0, 2.0 * PI, 7).into_iter().map(move |p| GroupElement::gauge(g, p)))
        .collect();
    let massless = massless_limit_fields();
    let helicity = helicity_states();
    let gauge_anchor = "u and v̇ are fixed by T and Ṫ";
    for (name, s) in [
        ("E_x", &massless.ex),
        ("E_y", &massless.ey),
        ("B_x", &massless.bx),
        ("B_y", &massless.by),
    ]
    .into_iter()
    .chain(helicity.named())
    {
        checks.push(Check::at_most(
            format!("{name} gauge invariant"),
            gauge_anchor,
            invariance(&gauges, s),
            EXACT_TOL,
        ));
    }
    checks.push(Check::at_most(
        "B_x = E_y",
        "massless transverse fields",
        massless.bx.max_abs_diff(&massless.ey),
        0.0,
    ));
    checks.push(Check::at_most(
        "B_y = -E_x",
        "massless transverse fields",
        massless.by.max_abs_diff(&-massless.ex.clone()),
        0.0,
    ));
    for ((name, s), (_, k, labels)) in helicity.named().into_iter().zip(HELICITY_CONSTANTS) {
        checks.push(Check::at_most(
            format!("{name} = ({k})·{}", one(&labels)),
            "helicity states are uu and v̇v̇",
            s.max_abs_diff(&MultiSpinorState::term(k, &labels)),
            EXACT_TOL,
        ));
    }
    let angles = grid(0.0, 2.0 * PI, 13);
    for (name, s, sign) in [("E+", &helicity.e_plus, -1.0), ("E-", &helicity.e_minus, 1.0)] {
        checks.push(Check::at_most(
            format!("Z(φ) multiplies {name} by e^{{{}iφ}}", if sign < 0.0 { "-" } else { "" }),
            "helicity phase under rotation about the momentum",
            worst(&angles, |&phi| {
                apply_element(&GroupElement::rot_z(phi), s)
                    .max_abs_diff(&(s.clone() * C64::from_polar(1.0, sign * phi)))
            }),
            EXACT_TOL,
        ));
    }

    let z_and_b: Vec<_> = angles
        .iter()
        .map(|&p| GroupElement::rot_z(p))
        .chain(grid(-3.0, 3.0, 13).into_iter().map(GroupElement::boost_z))
        .collect();
    for (name, s) in [("f_z", &fields.fz), ("g_z", &fields.gz)] {
        checks.push(Check::at_most(
            format!("Z(φ) and B(η) fix {name}"),
            "longitudinal components are invariant under z rotations and boosts",
            invariance(&z_and_b, s),
            COMPOSED_TOL,
        ));
    }

    let weinberg_anchor = "N₁|state⟩ = N₂|state⟩ = 0";
    for labels in [&[U, U][..], &[VDot, VDot], &[U, U, U, U], &[VDot; 4]] {
        checks.push(Check::at_most(
            format!("{} satisfies the Weinberg condition", one(labels)),
            weinberg_anchor,
            weinberg_condition(&one(labels), EXACT_TOL).residual(),
            EXACT_TOL,
        ));
    }
    for labels in [&[U, V][..], &[UDot, UDot], &[V, V]] {
        checks.push(Check::at_least(
            format!("{} violates the Weinberg condition", one(labels)),
            weinberg_anchor,
            weinberg_condition(&one(labels), EXACT_TOL).residual(),
            0.5,
        ));
    }
    for flavor in Flavor::BOTH {
        let s = neutrino_polarization(flavor);
        let state = one(&[s]);
        checks.push(Check::at_most(
            format!("{flavor:?} neutrino spinor {s} is gauge invariant and Weinberg"),
            "undotted neutrino u, dotted neutrino v̇",
            invariance(&gauges, &state).max(weinberg_condition(&state, 0.0).residual()),
            EXACT_TOL,
        ));
    }
    let closure = worst(0..40, |_| {
        let rank = rng.gen_range(1..=4);
        let mut s = MultiSpinorState::zero(rank);
        for _ in 0..3 {
            let labels: Vec<_> = (0..rank).map(|_| if rng.gen() { U } else { VDot }).collect();
            let k = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            s = s + MultiSpinorState::term(k, &labels);
        }
        let g = massless_little_group(
            rng.gen_range(-3.0..3.0),
            rng.gen_range(0.0..2.0 * PI),
            rng.gen_range(0.0..2.0 * PI),
        );
        weinberg_condition(&apply_element(&g, &s), 0.0).residual()
    });
    checks.push(Check::at_most(
        "Weinberg states stay Weinberg under the massless little group (40 samples)",
        "N₁, N₂ commute and Z normalizes them",
        closure,
        COMPOSED_TOL,
    ));

    let pot_anchor = "T(γe^{-iφ}) is a gauge transformation on A";
    let potentials: Vec<_> = (0..40)
        .map(|_| {
            let a0 = rng.gen_range(-3.0..3.0);
            FourPotential::new(a0, a0, rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0))
        })
        .collect();
    let shifts: Vec<(f64, f64, f64)> = (0..40)
        .map(|_| {
            (
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(0.0..2.0 * PI),
            )
        })
        .collect();
    let cases = || potentials.iter().zip(&shifts);
    checks.push(Check::at_most(
        "gauge transformation leaves A_x and A_y unchanged",
        pot_anchor,
        worst(cases(), |(a, &(g, _, phi))| {
            let b = gauge_transform_potential(a, g, phi);
            (b.ax - a.ax).abs().max((b.ay - a.ay).abs())
        }),
        0.0,
    ));
    checks.push(Check::at_most(
        "A₀+A_z shifts by -2γ(A_x cosφ + A_y sinφ)",
        pot_anchor,
        worst(cases(), |(a, &(g, _, phi))| {
            let b = gauge_transform_potential(a, g, phi);
            let shift = -2.0 * g * (a.ax * phi.cos() + a.ay * phi.sin());
            ((b.a0 + b.az) - (a.a0 + a.az) - shift).abs()
                + ((b.a0 - b.az) - (a.a0 - a.az)).abs()
        }),
        EXACT_TOL,
    ));
    checks.push(Check::at_most(
        "gauge transformation additive in γ",
        pot_anchor,
        worst(cases(), |(a, &(g1, g2, phi))| {
            let twice = gauge_transform_potential(&gauge_transform_potential(a, g1, phi), g2, phi);
            twice.max_abs_diff(&gauge_transform_potential(a, g1 + g2, phi))
        }),
        EXACT_TOL,
    ));
    checks.push(Check::at_most(
        "T A T† agrees with the component formula",
        pot_anchor,
        worst(cases(), |(a, &(g, _, phi))| {
            gauge_transform_matrix_phased(a, g, phi)
                .map(|m| m.max_abs_diff(&gauge_transform_potential(a, g, phi).to_matrix()))
                .unwrap_or(f64::NAN)
        }),
        EXACT_TOL,
    ));
    checks.push(Check::at_least(
        "T A T† rejects potentials with A₀ ≠ A_z",
        "the Lorentz condition A₀ = A_z",
        f64::from(u8::from(
            gauge_transform_matrix(&FourPotential::new(1.0, 0.5, 0.2, 0.0), 1.0).is_err(),
        )),
        1.0,
    ));

    Report::new("spinors", checks)
}
