//! Adaptive 1D quadrature and the numerical Fourier-transform oracle.
//!
//! All 3D integrals in this crate reduce analytically to 1D radial
//! integrals (the angular dependence of every integrand is a monomial of
//! degree at most two), so a globally adaptive Gauss-Kronrod rule on the
//! radial axis is the only numerical integration primitive needed.

use num_complex::Complex64;

use crate::orbitals::{radial_factor, DilationParams, OrbitalId};
use crate::{Error, Result};

// 15-point Kronrod abscissae on [-1,1] (positive half) and weights, with
// the embedded 7-point Gauss weights. Standard QUADPACK values.
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

/// Gauss-Kronrod 7-15 rule on [a, b]: returns (integral, error estimate).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (i, &x) in XGK.iter().take(7).enumerate() {
        let lo = f(center - half * x);
        let hi = f(center + half * x);
        kronrod += WGK[i] * (lo + hi);
        if i % 2 == 1 {
            gauss += WG[i / 2] * (lo + hi);
        }
    }
    let value = kronrod * half;
    let err = ((kronrod - gauss) * half).abs();
    (value, err)
}

/// Globally adaptive integration of `f` over [a, b] to absolute tolerance
/// `tol`, bisecting the interval with the largest error estimate first.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    struct Seg {
        a: f64,
        b: f64,
        value: f64,
        err: f64,
    }
    let (value, err) = gk15(&f, a, b);
    let mut segs = vec![Seg { a, b, value, err }];
    for _ in 0..2000 {
        let total_err: f64 = segs.iter().map(|s| s.err).sum();
        if total_err <= tol {
            return Ok(segs.iter().map(|s| s.value).sum());
        }
        let worst = segs
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .map(|(i, _)| i)
            .expect("non-empty segment list");
        let Seg { a, b, .. } = segs.swap_remove(worst);
        let m = 0.5 * (a + b);
        for (lo, hi) in [(a, m), (m, b)] {
            let (value, err) = gk15(&f, lo, hi);
            segs.push(Seg {
                a: lo,
                b: hi,
                value,
                err,
            });
        }
    }
    let achieved: f64 = segs.iter().map(|s| s.err).sum();
    Err(Error::Quadrature {
        requested: tol,
        achieved,
    })
}

/// Integral of `f` over [0, ∞) via the substitution k = t/(1-t).
/// Requires `f` to decay at least like k^-2 at infinity.
pub fn integrate_to_inf<F: Fn(f64) -> f64>(f: F, tol: f64) -> Result<f64> {
    integrate(
        |t| {
            let om = 1.0 - t;
            f(t / om) / (om * om)
        },
        0.0,
        1.0,
        tol,
    )
}

/// Spherical Bessel functions j0, j1, j2. The closed forms suffer severe
/// cancellation for small arguments, so below |x| = 1 the power series
/// j_l(x) = x^l Σ_n (-x²/2)^n / (n! (2l+2n+1)!!) is summed instead.
pub fn spherical_bessel(l: u32, x: f64) -> f64 {
    debug_assert!(l <= 2);
    let x2 = x * x;
    if x.abs() < 1.0 {
        let mut term = match l {
            0 => 1.0,
            1 => x / 3.0,
            _ => x2 / 15.0,
        };
        let mut sum = term;
        for n in 0..25u32 {
            term *= -x2 / 2.0 / ((n + 1) as f64 * (2 * l + 2 * n + 3) as f64);
            sum += term;
            if term.abs() < 1e-18 {
                break;
            }
        }
        sum
    } else {
        let (s, c) = (x.sin(), x.cos());
        match l {
            0 => s / x,
            1 => s / x2 - c / x,
            _ => (3.0 / (x2 * x) - 1.0 / x) * s - 3.0 * c / x2,
        }
    }
}

/// Radius beyond which every orbital product is negligible.
fn radial_cutoff(p: &DilationParams) -> f64 {
    // slowest decay rate of any product is min(z)/2 + min(z)/2
    let zmin = p.z1.min(p.z2).min(p.z3);
    (120.0 / zmin).min(4000.0)
}

/// Numerical Fourier transform of the product `phi_a * phi_b`, computed by
/// expanding the product in real angular monomials and integrating the
/// radial factors against spherical Bessel kernels.
///
/// This route never touches the closed-form transform table, which makes it
/// an independent oracle for `orbitals::fourier_product`.
pub fn fourier_product_numeric(
    a: OrbitalId,
    b: OrbitalId,
    params: &DilationParams,
    k: [f64; 3],
) -> Result<Complex64> {
    let tol = 1e-12;
    let kn = (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]).sqrt();
    let rmax = radial_cutoff(params);
    let four_pi = 4.0 * std::f64::consts::PI;

    let ra = move |r: f64| radial_factor(a, params, r);
    let rb = move |r: f64| radial_factor(b, params, r);

    match (a.axis(), b.axis()) {
        (None, None) => {
            // f = Ra(r) Rb(r):  FT = 4π ∫ Ra Rb j0(kr) r² dr
            let v = integrate(
                |r| ra(r) * rb(r) * spherical_bessel(0, kn * r) * r * r,
                0.0,
                rmax,
                tol,
            )?;
            Ok(Complex64::new(four_pi * v, 0.0))
        }
        (None, Some(j)) | (Some(j), None) => {
            // f = x_j Rs(r) g(r):  FT = -4πi (k_j/k) ∫ Rs g r j1(kr) r² dr
            if kn == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            let v = integrate(
                |r| ra(r) * rb(r) * r * spherical_bessel(1, kn * r) * r * r,
                0.0,
                rmax,
                tol,
            )?;
            Ok(Complex64::new(0.0, -four_pi * (k[j] / kn) * v))
        }
        (Some(ja), Some(jb)) if ja == jb => {
            // f = x_j² g_a g_b: monopole + quadrupole parts
            let iso = integrate(
                |r| ra(r) * rb(r) * r * r / 3.0 * spherical_bessel(0, kn * r) * r * r,
                0.0,
                rmax,
                tol,
            )?;
            let quad = integrate(
                |r| ra(r) * rb(r) * r * r * spherical_bessel(2, kn * r) * r * r,
                0.0,
                rmax,
                tol,
            )?;
            let ang = if kn == 0.0 {
                0.0
            } else {
                k[ja] * k[ja] / (kn * kn) - 1.0 / 3.0
            };
            Ok(Complex64::new(four_pi * (iso - ang * quad), 0.0))
        }
        (Some(ja), Some(jb)) => {
            // f = x_j x_l g_a g_b, pure quadrupole
            if kn == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            let quad = integrate(
                |r| ra(r) * rb(r) * r * r * spherical_bessel(2, kn * r) * r * r,
                0.0,
                rmax,
                tol,
            )?;
            Ok(Complex64::new(
                -four_pi * (k[ja] * k[jb] / (kn * kn)) * quad,
                0.0,
            ))
        }
    }
}

/// Overlap ⟨phi_a, phi_b⟩ by radial quadrature; used to verify
/// orthonormality of the basis.
pub fn overlap_numeric(a: OrbitalId, b: OrbitalId, params: &DilationParams) -> Result<f64> {
    Ok(fourier_product_numeric(a, b, params, [0.0; 3])?.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn integrates_smooth_functions() {
        let v = integrate(|x| x.sin(), 0.0, PI, 1e-13).unwrap();
        assert_relative_eq!(v, 2.0, epsilon = 1e-12);
        let v = integrate(|x| (-x * x).exp(), -8.0, 8.0, 1e-13).unwrap();
        assert_relative_eq!(v, PI.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn integrates_to_infinity() {
        // ∫0^∞ dk/(1+k²)² = π/4
        let v = integrate_to_inf(|k| 1.0 / (1.0 + k * k).powi(2), 1e-13).unwrap();
        assert_relative_eq!(v, PI / 4.0, epsilon = 1e-12);
    }

    #[test]
    fn bessel_branches_agree_at_crossover() {
        // both branches are accurate near |x| = 1; they must agree there
        for l in 0..=2 {
            let below = spherical_bessel(l, 1.0 - 1e-9);
            let above = spherical_bessel(l, 1.0 + 1e-9);
            assert_relative_eq!(below, above, max_relative = 1e-8);
        }
        // spot values against high-precision references
        assert_relative_eq!(spherical_bessel(0, 0.5), 0.958851077208406, max_relative = 1e-14);
        assert_relative_eq!(spherical_bessel(1, 0.5), 0.162537030636066, max_relative = 1e-13);
        assert_relative_eq!(spherical_bessel(2, 0.5), 0.016371106607992, max_relative = 1e-12);
    }

    #[test]
    fn two_s_norm_at_tabulated_parameters() {
        // ∫ |phi_2s|² = 1 at the lithium ground-state parameters
        let p = DilationParams::new(2.6937, 1.5334, 1.0).unwrap();
        let n = overlap_numeric(OrbitalId::TwoS, OrbitalId::TwoS, &p).unwrap();
        assert!((n - 1.0).abs() < 1e-10, "norm was {n}");
    }

    #[test]
    fn basis_is_orthonormal_by_quadrature() {
        // including a strongly asymmetric parameter set
        for (z1, z2, z3) in [(3.7, 2.4, 1.9), (9.7101, 7.1469, 5.7177), (1.1, 8.5, 0.4)] {
            let p = DilationParams::new(z1, z2, z3).unwrap();
            for a in OrbitalId::ALL {
                for b in OrbitalId::ALL {
                    let s = overlap_numeric(a, b, &p).unwrap();
                    let expect = if a == b { 1.0 } else { 0.0 };
                    assert!(
                        (s - expect).abs() < 1e-10,
                        "<{a},{b}> = {s} at ({z1},{z2},{z3}), expected {expect}"
                    );
                }
            }
        }
    }

    /// The closed-form transform of every product class against the
    /// independent Bessel-transform route, across parameters and wave
    /// vectors (including the tabulated |k| = 1 spot check).
    #[test]
    fn closed_form_transforms_match_numeric_oracle() {
        use crate::orbitals::fourier_product;
        let param_sets = [(3.0, 3.0, 3.0), (2.6937, 1.5334, 1.0458), (5.2, 1.7, 3.9)];
        let kvecs = [
            [1.0, 0.0, 0.0],
            [0.0, 0.57735026918962, 0.81649658092772], // |k| = 1
            [0.3, -0.9, 1.7],
            [2.5, 2.5, -2.5],
            [0.05, 0.0, -0.02],
        ];
        for (z1, z2, z3) in param_sets {
            let p = DilationParams::new(z1, z2, z3).unwrap();
            for a in OrbitalId::ALL {
                for b in OrbitalId::ALL {
                    for k in kvecs {
                        let closed = fourier_product(a, b, &p, k).unwrap();
                        let numeric = fourier_product_numeric(a, b, &p, k).unwrap();
                        let scale = closed.norm().max(1e-6);
                        assert!(
                            (closed - numeric).norm() <= 1e-8 * scale,
                            "FT[{a}*{b}] at k={k:?}, params ({z1},{z2},{z3}): \
                             closed {closed} vs numeric {numeric}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn reports_nonconvergence_instead_of_wrong_answers() {
        // an essentially non-integrable oscillation cannot meet 1e-14
        let result = integrate(|x| (1.0 / x).sin(), 1e-6, 1.0, 1e-14);
        match result {
            Err(crate::Error::Quadrature { requested, achieved }) => {
                assert_eq!(requested, 1e-14);
                assert!(achieved > requested);
            }
            other => panic!("expected quadrature error, got {other:?}"),
        }
    }
}
