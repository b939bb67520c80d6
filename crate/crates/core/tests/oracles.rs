//! Independent reference computations compared against the library.

#![allow(clippy::needless_range_loop)]

use std::f64::consts::PI;

use num_complex::Complex64 as C;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sl2c::contraction::{boosted_rotation, contraction_trace, eta_range, wigner_excursion};
use sl2c::mat2::{generator, mat_exp, Flavor, GeneratorId, Mat2};
use sl2c::minkowski::random_element;
use sl2c::spinorstates::{apply_element, MultiSpinorState, Spinor};
use sl2c::{FourVector, GroupElement};

type M = [[C; 2]; 2];

fn mm(a: &M, b: &M) -> M {
    let mut r = [[C::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    r
}

/// Taylor series with scaling and squaring, all on plain arrays.
fn taylor_exp(a: &M) -> M {
    let norm: f64 = a.iter().flatten().map(|z| z.norm()).sum();
    let mut s = 0;
    while norm / f64::from(1u32 << s) > 0.25 {
        s += 1;
    }
    let scale = 1.0 / f64::from(1u32 << s);
    let x = a.map(|row| row.map(|z| z * scale));
    let one = C::new(1.0, 0.0);
    let zero = C::new(0.0, 0.0);
    let mut sum = [[one, zero], [zero, one]];
    let mut term = sum;
    for k in 1..30 {
        term = mm(&term, &x).map(|row| row.map(|z| z / k as f64));
        for i in 0..2 {
            for j in 0..2 {
                sum[i][j] += term[i][j];
            }
        }
    }
    for _ in 0..s {
        sum = mm(&sum, &sum);
    }
    sum
}

#[test]
fn exp_matches_taylor_reference() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let a: M = [[(); 2]; 2].map(|r| r.map(|_| C::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0))));
        let got = mat_exp(&Mat2 { m: a });
        let want = taylor_exp(&a);
        let scale = want.iter().flatten().map(|z| z.norm()).fold(1.0, f64::max);
        for i in 0..2 {
            for j in 0..2 {
                assert!((got.m[i][j] - want[i][j]).norm() <= 1e-11 * scale, "{a:?}");
            }
        }
    }
}

#[test]
fn exp_of_generators_matches_taylor() {
    for flavor in Flavor::BOTH {
        for id in GeneratorId::ROTATIONS.into_iter().chain(GeneratorId::BOOSTS) {
            for p in [-2.5, -0.3, 0.0, 1e-5, 0.9, 3.0] {
                let a = generator(id, flavor) * C::new(0.0, -p);
                let got = mat_exp(&a);
                let want = taylor_exp(&a.m);
                for i in 0..2 {
                    for j in 0..2 {
                        assert!((got.m[i][j] - want[i][j]).norm() < 1e-12);
                    }
                }
            }
        }
    }
}

/// `Λ_ab = ½ tr(σ_a G σ_b G†)` in `(t, z, x, y)` order.
fn lorentz_4x4(g: &Mat2) -> [[f64; 4]; 4] {
    let sigma = [Mat2::identity(), Mat2::pauli(3), Mat2::pauli(1), Mat2::pauli(2)];
    let mut l = [[0.0; 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            l[a][b] = 0.5 * (sigma[a] * *g * sigma[b] * g.dagger()).trace().re;
        }
    }
    l
}

fn apply4(l: &[[f64; 4]; 4], v: &FourVector) -> [f64; 4] {
    let c = v.components();
    let mut out = [0.0; 4];
    for a in 0..4 {
        out[a] = (0..4).map(|b| l[a][b] * c[b]).sum();
    }
    out
}

fn max_diff(a: [f64; 4], b: [f64; 4]) -> f64 {
    (0..4).map(|k| (a[k] - b[k]).abs()).fold(0.0, f64::max)
}

#[test]
fn action_matches_trace_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let g = random_element(&mut rng);
        let v = FourVector::new(
            rng.gen_range(-5.0..5.0),
            rng.gen_range(-5.0..5.0),
            rng.gen_range(-5.0..5.0),
            rng.gen_range(-5.0..5.0),
        );
        let got = g.act(&v).components();
        let want = apply4(&lorentz_4x4(g.undotted()), &v);
        let scale = want.iter().fold(1.0_f64, |m, x| m.max(x.abs()));
        assert!(max_diff(got, want) <= 1e-12 * scale);
    }
}

#[test]
fn boost_z_is_the_textbook_boost() {
    for eta in [-2.0, -0.4, 0.0, 0.7, 3.0] {
        let (ch, sh) = (f64::cosh(eta), f64::sinh(eta));
        let v = FourVector::new(1.3, -0.2, 0.5, 0.9);
        let want = [ch * v.t + sh * v.z, sh * v.t + ch * v.z, v.x, v.y];
        assert!(max_diff(GroupElement::boost_z(eta).act(&v).components(), want) < 1e-12);
    }
    let w = GroupElement::boost_z(2f64.ln()).act(&FourVector::new(1.0, 0.0, 0.0, 0.0));
    assert!(max_diff(w.components(), [1.25, 0.75, 0.0, 0.0]) < 1e-15);
}

#[test]
fn rotations_are_3x3_rotations() {
    for a in [-1.0, 0.3, 2.0, PI] {
        let (s, c) = f64::sin_cos(a);
        let v = FourVector::new(0.4, 1.0, -2.0, 0.5);
        let z = [v.t, v.z, c * v.x - s * v.y, s * v.x + c * v.y];
        assert!(max_diff(GroupElement::rot_z(a).act(&v).components(), z) < 1e-12);
        let y = [v.t, c * v.z - s * v.x, s * v.z + c * v.x, v.y];
        assert!(max_diff(GroupElement::rot_y(a).act(&v).components(), y) < 1e-12);
        let x = [v.t, c * v.z + s * v.y, v.x, c * v.y - s * v.z];
        assert!(max_diff(GroupElement::rot_x(a).act(&v).components(), x) < 1e-12);
    }
}

#[test]
fn contraction_deviation_closed_form() {
    // Lower-left entry γe^{-2η}; diagonal 1 - cos(θ/2) = 1 - sqrt(1 - γ²e^{-2η}).
    for gamma in [0.5, 1.0, 2.0] {
        for phi in [0.0, PI / 3.0] {
            let trace = contraction_trace(gamma, phi, &eta_range(3.0, 8.0, 11)).unwrap();
            for s in &trace.samples {
                let k = gamma * (-2.0 * s.eta).exp();
                let diag = k * gamma / (1.0 + (1.0 - k * gamma).sqrt());
                let want = k.max(diag);
                assert!((s.deviation - want).abs() <= 1e-9 * want, "{s:?}");
            }
        }
    }
    let m = boosted_rotation(0.4, 1.5);
    let (s, c) = f64::sin_cos(0.2);
    let want = [[c, -1.5f64.exp() * s], [(-1.5f64).exp() * s, c]];
    for i in 0..2 {
        for j in 0..2 {
            assert!((m.m[i][j] - want[i][j]).norm() < 1e-14);
        }
    }
}

#[test]
fn excursion_zeroes_the_shrinking_entry() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let (a, d) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let b = C::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let h = Mat2::new(C::new(a, 0.0), b, b.conj(), C::new(d, 0.0));
        let r = wigner_excursion(&h, 20.0, 1e-8).unwrap();
        let want = Mat2::new(C::new(a, 0.0), b, b.conj(), C::new(0.0, 0.0));
        assert!(r.output.max_abs_diff(&want) < 1e-12);
        assert!(r.light_cone.det().norm() < 1e-16);
    }
}

/// Kronecker-product action on rank-2 undotted states.
#[test]
fn rank_two_action_is_kronecker_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let basis = [Spinor::U, Spinor::V];
    for _ in 0..50 {
        let g = random_element(&mut rng);
        let m = g.undotted();
        let coeffs: [[C; 2]; 2] =
            [[(); 2]; 2].map(|r| r.map(|_| C::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))));
        let mut s = MultiSpinorState::zero(2);
        for i in 0..2 {
            for j in 0..2 {
                s = s + MultiSpinorState::term(coeffs[i][j], &[basis[i], basis[j]]);
            }
        }
        let out = apply_element(&g, &s);
        for a in 0..2 {
            for b in 0..2 {
                let mut want = C::new(0.0, 0.0);
                for i in 0..2 {
                    for j in 0..2 {
                        want += m.m[a][i] * m.m[b][j] * coeffs[i][j];
                    }
                }
                assert!((out.coefficient(&[basis[a], basis[b]]) - want).norm() < 1e-12);
            }
        }
    }
}
