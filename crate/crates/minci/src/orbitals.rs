//! The five-orbital Slater basis {1s, 2s, 2p1, 2p2, 2p3} with per-shell
//! screening parameters, and the closed-form Fourier transforms of all
//! pointwise orbital products.
//!
//! The orbitals are normalized and mutually orthogonal for every admissible
//! parameter vector, and reduce to the hydrogen eigenfunctions of
//! `-1/2 Δ - Z/|x|` when all three parameters equal `Z`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::{Error, Result};

/// Screening (dilation) parameters of the radial orbitals: `z1` scales the
/// 1s shell, `z2` the 2s shell and `z3` the 2p shell. All entries are
/// strictly positive inverse lengths in atomic units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DilationParams {
    pub z1: f64,
    pub z2: f64,
    pub z3: f64,
}

impl DilationParams {
    pub fn new(z1: f64, z2: f64, z3: f64) -> Result<Self> {
        for (name, v) in [("z1", z1), ("z2", z2), ("z3", z3)] {
            if v.is_nan() || v <= 0.0 || v.is_infinite() {
                return Err(Error::Domain(format!(
                    "dilation parameter {name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(Self { z1, z2, z3 })
    }

    /// All three shells screened by the same charge; this is the
    /// first-order perturbation-theory (PT) choice.
    pub fn uniform(z: f64) -> Result<Self> {
        Self::new(z, z, z)
    }

    /// Uniformly scaled copy. Scaling commutes with the dilation group that
    /// underlies the virial theorem.
    pub fn scaled(&self, lambda: f64) -> Self {
        Self {
            z1: lambda * self.z1,
            z2: lambda * self.z2,
            z3: lambda * self.z3,
        }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.z1, self.z2, self.z3]
    }

    pub fn from_array(a: [f64; 3]) -> Result<Self> {
        Self::new(a[0], a[1], a[2])
    }
}

/// One of the five spatial basis orbitals.
///
/// The conventional one-based indices are `1 = 1s`, `2 = 2s`, `3 = 2p3`,
/// `4 = 2p1`, `5 = 2p2`; the p orbitals are the real Cartesian ones,
/// `2p_i ∝ x_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OrbitalId {
    OneS,
    TwoS,
    TwoP1,
    TwoP2,
    TwoP3,
}

impl OrbitalId {
    pub const ALL: [OrbitalId; 5] = [
        OrbitalId::OneS,
        OrbitalId::TwoS,
        OrbitalId::TwoP1,
        OrbitalId::TwoP2,
        OrbitalId::TwoP3,
    ];

    /// Conventional table index 1..=5 (note the p ordering: 3 is `2p3`).
    pub fn index(self) -> usize {
        match self {
            OrbitalId::OneS => 1,
            OrbitalId::TwoS => 2,
            OrbitalId::TwoP3 => 3,
            OrbitalId::TwoP1 => 4,
            OrbitalId::TwoP2 => 5,
        }
    }

    pub fn from_index(i: usize) -> Result<Self> {
        Ok(match i {
            1 => OrbitalId::OneS,
            2 => OrbitalId::TwoS,
            3 => OrbitalId::TwoP3,
            4 => OrbitalId::TwoP1,
            5 => OrbitalId::TwoP2,
            _ => return Err(Error::Domain(format!("orbital index {i} out of 1..=5"))),
        })
    }

    /// Cartesian axis (0,1,2) for p orbitals, `None` for s orbitals.
    pub fn axis(self) -> Option<usize> {
        match self {
            OrbitalId::TwoP1 => Some(0),
            OrbitalId::TwoP2 => Some(1),
            OrbitalId::TwoP3 => Some(2),
            _ => None,
        }
    }

    pub fn is_s(self) -> bool {
        self.axis().is_none()
    }

    /// Spatial parity under x -> -x.
    pub fn parity(self) -> i32 {
        if self.is_s() {
            1
        } else {
            -1
        }
    }

    /// Angular momentum quantum number l.
    pub fn l(self) -> u32 {
        if self.is_s() {
            0
        } else {
            1
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OrbitalId::OneS => "1s",
            OrbitalId::TwoS => "2s",
            OrbitalId::TwoP1 => "2p1",
            OrbitalId::TwoP2 => "2p2",
            OrbitalId::TwoP3 => "2p3",
        }
    }
}

impl std::fmt::Display for OrbitalId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Recurring denominator of the 2s normalization, `4 z1^2 - 2 z1 z2 + z2^2`.
/// Positive for all positive parameters.
pub(crate) fn d2s(p: &DilationParams) -> f64 {
    4.0 * p.z1 * p.z1 - 2.0 * p.z1 * p.z2 + p.z2 * p.z2
}

/// Radial factor of an orbital: `phi(x) = R(r)` for s orbitals and
/// `phi(x) = x_i g(r)` for `2p_i`, in which case this returns `g`.
pub(crate) fn radial_factor(id: OrbitalId, p: &DilationParams, r: f64) -> f64 {
    match id {
        OrbitalId::OneS => p.z1.powf(1.5) / PI.sqrt() * (-p.z1 * r).exp(),
        OrbitalId::TwoS => {
            let norm = (3.0 * p.z2.powi(5) / (8.0 * PI * d2s(p))).sqrt();
            norm * (1.0 - (2.0 * p.z1 + p.z2) * r / 6.0) * (-p.z2 * r / 2.0).exp()
        }
        _ => p.z3.powf(2.5) / (32.0 * PI).sqrt() * (-p.z3 * r / 2.0).exp(),
    }
}

/// Value of the normalized orbital at a point in 3-space.
pub fn evaluate_orbital(id: OrbitalId, params: &DilationParams, x: [f64; 3]) -> Result<f64> {
    DilationParams::new(params.z1, params.z2, params.z3)?;
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain("orbital argument must be finite".into()));
    }
    let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    let g = radial_factor(id, params, r);
    Ok(match id.axis() {
        None => g,
        Some(ax) => x[ax] * g,
    })
}

/// Angular structure of the Fourier transform of one orbital product,
/// with the radial parts evaluated at `k = |k|`:
///
/// * `Scalar(s)`:          FT = s
/// * `PpSame{iso, aniso}`: FT = iso + aniso * k_j^2
/// * `Sp{g}`:              FT = i * g * k_j
/// * `PpDiff{h}`:          FT = h * k_j * k_l
#[derive(Debug, Clone, Copy)]
pub(crate) enum FtParts {
    Scalar(f64),
    PpSame { axis: usize, iso: f64, aniso: f64 },
    Sp { axis: usize, g: f64 },
    PpDiff { axes: (usize, usize), h: f64 },
}

/// Closed-form Fourier transform pieces for the product `a * b` at radial
/// frequency `k`. Every pair of the five orbitals falls into one of seven
/// product classes; index permutations within a class share one formula.
pub(crate) fn product_ft_parts(a: OrbitalId, b: OrbitalId, p: &DilationParams, k: f64) -> FtParts {
    use OrbitalId::*;
    let k2 = k * k;
    let d2 = d2s(p);
    // order the pair so that s orbitals come first, 1s before 2s
    let (a, b) = if a.index() <= b.index() { (a, b) } else { (b, a) };
    match (a, b) {
        (OneS, OneS) => {
            let den = 4.0 * p.z1 * p.z1 + k2;
            FtParts::Scalar(16.0 * p.z1.powi(4) / (den * den))
        }
        (TwoS, TwoS) => {
            let den = p.z2 * p.z2 + k2;
            let t1 = 2.0 * (p.z1 + 2.0 * p.z2) / den.powi(2);
            let t2 = p.z2 * (2.0 * p.z1 + p.z2) * (2.0 * p.z1 + 5.0 * p.z2) / den.powi(3);
            let t3 = 2.0 * p.z2.powi(3) * (2.0 * p.z1 + p.z2).powi(2) / den.powi(4);
            FtParts::Scalar(p.z2.powi(5) / d2 * (t1 - t2 + t3))
        }
        (OneS, TwoS) => {
            let s = p.z1 + p.z2 / 2.0;
            let den = s * s + k2;
            let t1 = 4.0 * (2.0 * p.z1 + p.z2) / (3.0 * den.powi(2));
            let t2 = (2.0 * p.z1 + p.z2).powi(3) / (3.0 * den.powi(3));
            FtParts::Scalar(6.0f64.sqrt() * p.z1.powf(1.5) * p.z2.powf(2.5) / d2.sqrt() * (t1 - t2))
        }
        (OneS, pj) => {
            let s = p.z1 + p.z3 / 2.0;
            let den = s * s + k2;
            let g = -2.0 * 2.0f64.sqrt() * p.z1.powf(1.5) * p.z3.powf(2.5) * (2.0 * p.z1 + p.z3)
                / den.powi(3);
            FtParts::Sp {
                axis: pj.axis().expect("p orbital"),
                g,
            }
        }
        (TwoS, pj) => {
            let s = (p.z2 + p.z3) / 2.0;
            let den = s * s + k2;
            let t1 = 8.0 * (p.z2 + p.z3).powi(2) * (2.0 * p.z1 + p.z2) / den.powi(4);
            let t2 = (32.0 * p.z1 + 64.0 * p.z2 + 48.0 * p.z3) / (3.0 * den.powi(3));
            let g = 3.0f64.sqrt() * p.z2.powf(2.5) * p.z3.powf(2.5) / (16.0 * d2.sqrt()) * (t1 - t2);
            FtParts::Sp {
                axis: pj.axis().expect("p orbital"),
                g,
            }
        }
        (pa, pb) => {
            let (ja, jb) = (pa.axis().expect("p orbital"), pb.axis().expect("p orbital"));
            let den = p.z3 * p.z3 + k2;
            if ja == jb {
                FtParts::PpSame {
                    axis: ja,
                    iso: p.z3.powi(6) / den.powi(3),
                    aniso: -6.0 * p.z3.powi(6) / den.powi(4),
                }
            } else {
                FtParts::PpDiff {
                    axes: (ja.min(jb), ja.max(jb)),
                    h: -6.0 * p.z3.powi(6) / den.powi(4),
                }
            }
        }
    }
}

/// Fourier transform of the pointwise product `phi_a * phi_b` at wave
/// vector `k`, with the convention `FT[f](k) = ∫ exp(-i k·x) f(x) dx`.
///
/// Real products obey the conjugate symmetry `FT(-k) = conj(FT(k))`.
pub fn fourier_product(
    a: OrbitalId,
    b: OrbitalId,
    params: &DilationParams,
    k: [f64; 3],
) -> Result<Complex64> {
    DilationParams::new(params.z1, params.z2, params.z3)?;
    let kn = (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]).sqrt();
    Ok(match product_ft_parts(a, b, params, kn) {
        FtParts::Scalar(s) => Complex64::new(s, 0.0),
        FtParts::PpSame { axis, iso, aniso } => Complex64::new(iso + aniso * k[axis] * k[axis], 0.0),
        FtParts::Sp { axis, g } => Complex64::new(0.0, g * k[axis]),
        FtParts::PpDiff { axes, h } => Complex64::new(h * k[axes.0] * k[axes.1], 0.0),
    })
}
