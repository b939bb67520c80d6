//! Acceptance criteria, each evaluated at its stated tolerance.
//!
//! Prints one PASS/FAIL line per criterion and exits non-zero if any fails.

#![allow(clippy::needless_range_loop)]

use std::f64::consts::PI;
use std::process::{Command, ExitCode};

use sl2c::contraction::{contraction_trace, eta_range, wigner_excursion};
use sl2c::littlegroup::{standard_momentum, wigner_deviation};
use sl2c::mat2::{verify_algebra_tables, C64};
use sl2c::minkowski::{verify_exponential_map, verify_interval_invariance};
use sl2c::spinorstates::{
    apply_element, basis_state, field_tensor_states, gauge_transform_matrix_phased,
    gauge_transform_potential, helicity_states, massless_limit_fields, spin_combinations,
    weinberg_condition, FourPotential, MultiSpinorState, Spinor,
};
use sl2c::suites::DEFAULT_SEED;
use sl2c::{GroupElement, MassClass};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect()
}

fn worst<T>(items: impl IntoIterator<Item = T>, f: impl FnMut(T) -> f64) -> f64 {
    items.into_iter().map(f).fold(0.0, f64::max)
}

fn st(labels: &[Spinor]) -> MultiSpinorState {
    basis_state(labels).unwrap()
}

fn lie_algebra() -> Outcome {
    let r = verify_algebra_tables();
    let dev = worst(&r.checks, |c| c.deviation);
    outcome(
        r.all_passed() && r.checks.len() == 66 && dev <= 1e-12,
        format!("{} relations, max deviation {dev:e} (tol 1e-12)", r.checks.len()),
    )
}

fn exponential_map() -> Outcome {
    let r = verify_exponential_map();
    let dev = worst(&r.checks, |c| c.deviation);
    outcome(
        r.all_passed() && dev <= 1e-10,
        format!("{} closed forms on a 10-point grid, max deviation {dev:e} (tol 1e-10)", r.checks.len()),
    )
}

fn interval() -> Outcome {
    let c = verify_interval_invariance(DEFAULT_SEED, 1000);
    outcome(
        c.passed() && c.tolerance <= 1e-9,
        format!("1000 pairs, max relative deviation {:e} (tol 1e-9)", c.deviation),
    )
}

fn wigner() -> Outcome {
    let p_plus = standard_momentum(MassClass::Massive);
    let p_zero = standard_momentum(MassClass::Massless);
    let p_minus = standard_momentum(MassClass::ImaginaryMass);
    let angles = grid(0.0, 2.0 * PI, 10);
    let mut dev = 0.0f64;
    for &a in &angles {
        dev = dev
            .max(wigner_deviation(&GroupElement::rot_y(a), &p_plus))
            .max(wigner_deviation(&GroupElement::rot_z(a), &p_plus))
            .max(wigner_deviation(&GroupElement::rot_z(a), &p_minus));
        for g in grid(-5.0, 5.0, 10) {
            dev = dev.max(wigner_deviation(&GroupElement::gauge(g, a), &p_zero));
        }
    }
    for l in grid(-4.0, 4.0, 10) {
        dev = dev.max(wigner_deviation(&GroupElement::boost_x(l), &p_minus));
    }
    let boost = wigner_deviation(&GroupElement::boost_z(1.0), &p_plus);
    outcome(
        dev <= 1e-10 && boost > 0.1,
        format!("max deviation {dev:e} (tol 1e-10); B(1) on P₊ moves it by {boost:.4} (> 0.1)"),
    )
}

fn contraction() -> Outcome {
    let etas = eta_range(3.0, 8.0, 11);
    let mut slopes = Vec::new();
    for gamma in [0.5, 1.0, 2.0] {
        for phi in [0.0, PI / 3.0] {
            let k = contraction_trace(gamma, phi, &etas)
                .ok()
                .and_then(|t| t.fitted_exponent())
                .unwrap_or(f64::NAN);
            slopes.push(k);
        }
    }
    let dev = worst(&slopes, |k| (k + 2.0).abs());
    outcome(
        dev <= 0.1,
        format!("slopes {slopes:.4?}, max |slope + 2| = {dev:e} (tol 0.1)"),
    )
}

fn gauge_sector() -> Outcome {
    let mut fixed = true;
    let (mut shift_dev, mut path_dev) = (0.0f64, 0.0f64);
    for a0 in grid(-2.0, 2.0, 5) {
        for ax in grid(-1.5, 2.5, 5) {
            for ay in grid(-3.0, 1.0, 5) {
                let a = FourPotential::new(a0, a0, ax, ay);
                for gamma in grid(-2.0, 2.0, 5) {
                    for phi in grid(0.0, 2.0 * PI, 7) {
                        let b = gauge_transform_potential(&a, gamma, phi);
                        fixed &= b.ax.to_bits() == a.ax.to_bits() && b.ay.to_bits() == a.ay.to_bits();
                        let shift = -2.0 * gamma * (ax * phi.cos() + ay * phi.sin());
                        shift_dev = shift_dev.max(((b.a0 + b.az) - (a.a0 + a.az) - shift).abs());
                        let m = gauge_transform_matrix_phased(&a, gamma, phi)
                            .map(|m| m.max_abs_diff(&b.to_matrix()))
                            .unwrap_or(f64::NAN);
                        path_dev = path_dev.max(m);
                    }
                }
            }
        }
    }
    outcome(
        fixed && shift_dev <= 1e-12 && path_dev <= 1e-12,
        format!(
            "A_x, A_y bit-identical: {fixed}; shift deviation {shift_dev:e}, matrix vs components {path_dev:e} (tol 1e-12)"
        ),
    )
}

fn field_invariance() -> Outcome {
    let f = massless_limit_fields();
    let h = helicity_states();
    let states = [&f.ex, &f.ey, &f.bx, &f.by, &h.e_plus, &h.e_minus, &h.b_plus, &h.b_minus];
    let mut dev = 0.0f64;
    for gamma in grid(-3.0, 3.0, 13) {
        for phi in grid(0.0, 2.0 * PI, 9) {
            let g = GroupElement::gauge(gamma, phi);
            for s in states {
                dev = dev.max(apply_element(&g, s).max_abs_diff(s));
            }
        }
    }
    let bx_ey = f.bx.max_abs_diff(&f.ey);
    let by_ex = f.by.max_abs_diff(&-f.ex.clone());
    outcome(
        dev <= 1e-12 && bx_ey == 0.0 && by_ex == 0.0,
        format!("gauge deviation {dev:e} (tol 1e-12); |B_x - E_y| = {bx_ey}, |B_y + E_x| = {by_ex}"),
    )
}

fn helicity() -> Outcome {
    let uu = st(&[Spinor::U, Spinor::U]);
    let vv = st(&[Spinor::VDot, Spinor::VDot]);
    let dev = worst(grid(-2.0 * PI, 2.0 * PI, 25), |phi| {
        let z = GroupElement::rot_z(phi);
        let a = apply_element(&z, &uu).max_abs_diff(&(uu.clone() * C64::from_polar(1.0, -phi)));
        let b = apply_element(&z, &vv).max_abs_diff(&(vv.clone() * C64::from_polar(1.0, phi)));
        a.max(b)
    });
    outcome(dev <= 1e-12, format!("phase deviation {dev:e} (tol 1e-12)"))
}

fn weinberg() -> Outcome {
    use Spinor::*;
    let good = worst([&[U, U][..], &[VDot, VDot], &[U; 4], &[VDot; 4]], |l| {
        weinberg_condition(&st(l), 1e-14).residual()
    });
    let bad = [&[U, V][..], &[UDot, UDot], &[V, V]]
        .map(|l| weinberg_condition(&st(l), 1e-14).residual())
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    outcome(
        good <= 1e-14 && bad >= 0.5,
        format!("passing residual {good:e} (tol 1e-14); smallest failing residual {bad} (>= 0.5)"),
    )
}

fn parity() -> Outcome {
    use Spinor::*;
    let sc = spin_combinations();
    let f = field_tensor_states();
    let mut dev = sc.s_plus.dot_conjugate().max_abs_diff(&sc.s_plus);
    dev = dev.max(sc.s_minus.dot_conjugate().max_abs_diff(&-sc.s_minus.clone()));
    for s in [&f.fx, &f.fy, &f.fz] {
        dev = dev.max(s.dot_conjugate().max_abs_diff(&-s.clone()));
    }
    for s in [&f.gx, &f.gy, &f.gz] {
        dev = dev.max(s.dot_conjugate().max_abs_diff(s));
    }
    for (a, b) in [([U, U], [UDot, UDot]), ([VDot, VDot], [V, V])] {
        dev = dev.max(st(&a).dot_conjugate().max_abs_diff(&st(&b)));
        dev = dev.max(st(&b).dot_conjugate().max_abs_diff(&st(&a)));
    }
    outcome(dev == 0.0, format!("max coefficient deviation {dev} (exact)"))
}

fn excursion() -> Outcome {
    let mut residual = 0.0f64;
    let mut det = 0.0f64;
    let mut ok = true;
    for (a0, az, ax, ay) in [
        (1.0, 0.2, 0.3, -0.4),
        (2.5, -1.5, 0.7, 0.1),
        (-0.3, 0.9, -2.0, 1.2),
        (4.0, 3.0, 0.0, 0.0),
    ] {
        let h = FourPotential::new(a0, az, ax, ay).to_matrix();
        match wigner_excursion(&h, 20.0, 1e-8) {
            Ok(r) => {
                let out = sl2c::minkowski::from_matrix(&r.output);
                ok &= out.is_ok();
                let v = out.map(|v| (v.t - v.z).abs()).unwrap_or(f64::NAN);
                residual = residual.max(v);
                det = det.max(r.light_cone.det().norm() / r.light_cone.max_abs().powi(2).max(1.0));
            }
            Err(_) => ok = false,
        }
    }
    outcome(
        ok && residual <= 1e-8 && det <= 1e-8,
        format!("|A₀ - A_z| = {residual:e} (tol 1e-8); light-cone |det| = {det:e}"),
    )
}

fn cli_report() -> Outcome {
    let o = Command::new(env!("CARGO_BIN_EXE_sl2c"))
        .args(["verify", "all", "--json"])
        .output()
        .expect("binary runs");
    let code = o.status.code();
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(&o.stdout) else {
        return outcome(false, "stdout is not JSON");
    };
    let checks = v["checks"].as_array().cloned().unwrap_or_default();
    let named = checks
        .iter()
        .filter(|c| {
            c["name"].as_str().is_some_and(|s| !s.is_empty())
                && c["paper_anchor"].as_str().is_some_and(|s| !s.is_empty())
        })
        .count();
    outcome(
        code == Some(0) && checks.len() >= 60 && named == checks.len(),
        format!("exit {code:?}, {} checks, {named} with name and anchor", checks.len()),
    )
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 12] = [
        ("Lie-algebra table", lie_algebra),
        ("exponential map", exponential_map),
        ("interval invariance", interval),
        ("Wigner conditions", wigner),
        ("contraction law", contraction),
        ("gauge sector", gauge_sector),
        ("field invariance", field_invariance),
        ("helicity phases", helicity),
        ("Weinberg states", weinberg),
        ("parity", parity),
        ("excursion", excursion),
        ("CLI report", cli_report),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.passed {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {} ({})",
            k + 1,
            if o.passed { "PASS" } else { "FAIL" },
            name,
            o.detail
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
