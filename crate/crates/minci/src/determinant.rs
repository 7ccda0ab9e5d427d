//! Brute-force oracle over the explicit Slater-determinant basis.
//!
//! The model space of the N-electron atom is spanned by the C(8, N-2)
//! determinants with a doubly occupied 1s shell and the remaining
//! electrons distributed over the eight outer spin-orbitals. This module
//! assembles the full Hamiltonian with the Slater-Condon rules, lifts the
//! one-electron angular momentum, spin and parity operators to the
//! N-electron space, diagonalizes everything, and labels each eigenspace
//! with its term symbol. None of it reuses the symbolic block data, which
//! is exactly what makes it a useful cross-check.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::blocks::SymmetryLabel;
use crate::integrals::IntegralSet;
use crate::orbitals::OrbitalId;
use crate::{Error, Result};

/// Spin projection of a single electron.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    Up,
    Down,
}

/// One of the ten spin-orbitals of the model basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpinOrbital {
    pub orbital: OrbitalId,
    pub spin: Spin,
}

impl SpinOrbital {
    /// Global canonical index 0..=9: orbital table index first, spin-up
    /// before spin-down.
    pub fn global_index(self) -> usize {
        (self.orbital.index() - 1) * 2 + matches!(self.spin, Spin::Down) as usize
    }

    pub fn from_global_index(g: usize) -> Result<Self> {
        if g >= 10 {
            return Err(Error::Domain(format!("spin-orbital index {g} out of 0..=9")));
        }
        Ok(Self {
            orbital: OrbitalId::from_index(g / 2 + 1)?,
            spin: if g % 2 == 0 { Spin::Up } else { Spin::Down },
        })
    }
}

/// A Slater determinant over the ten spin-orbitals, stored as an occupancy
/// bitmask in canonical order. The sign convention is fixed by always
/// keeping the creation order canonical (ascending global index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Determinant {
    mask: u16,
}

impl Determinant {
    pub fn from_mask(mask: u16) -> Self {
        debug_assert_eq!(mask >> 10, 0);
        Self { mask }
    }

    /// Build from spin-orbitals in any order; returns the canonical
    /// determinant and the sign of the permutation that sorts the input.
    pub fn from_spin_orbitals(orbs: &[SpinOrbital]) -> Result<(Self, i32)> {
        let mut idx: Vec<usize> = orbs.iter().map(|o| o.global_index()).collect();
        let mut sign = 1;
        // bubble sort, counting transpositions
        for i in 0..idx.len() {
            for j in (i + 1..idx.len()).rev() {
                if idx[j] < idx[j - 1] {
                    idx.swap(j, j - 1);
                    sign = -sign;
                }
            }
        }
        let mut mask = 0u16;
        for g in idx {
            if mask & (1 << g) != 0 {
                return Err(Error::Domain("repeated spin-orbital in determinant".into()));
            }
            mask |= 1 << g;
        }
        Ok((Self { mask }, sign))
    }

    pub fn mask(self) -> u16 {
        self.mask
    }

    pub fn electron_count(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn contains(self, g: usize) -> bool {
        self.mask & (1 << g) != 0
    }

    /// Occupied global indices in canonical ascending order.
    pub fn occupied(self) -> Vec<usize> {
        (0..10).filter(|&g| self.contains(g)).collect()
    }

    pub fn spin_orbitals(self) -> Vec<SpinOrbital> {
        self.occupied()
            .into_iter()
            .map(|g| SpinOrbital::from_global_index(g).expect("index < 10"))
            .collect()
    }

    /// Position of an occupied index within the canonical ordering.
    fn position(self, g: usize) -> usize {
        (self.mask & ((1 << g) - 1)).count_ones() as usize
    }

    /// Number of p-shell electrons; the determinant is a parity eigenstate
    /// with eigenvalue (-1)^(this count).
    pub fn p_electron_count(self) -> usize {
        (4..10).filter(|&g| self.contains(g)).count()
    }
}

impl std::fmt::Display for Determinant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "|")?;
        for (i, g) in self.occupied().into_iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", g / 2 + 1, if g % 2 == 1 { "b" } else { "" })?;
        }
        write!(f, ">")
    }
}

/// All determinants of the N-electron model space: 1s doubly occupied and
/// N-2 electrons over the outer eight spin-orbitals. The dimension is
/// C(8, N-2), i.e. 8, 28, 56, 70, 56, 28, 8, 1 for N = 3..=10.
pub fn enumerate_space(n: usize) -> Result<Vec<Determinant>> {
    if !(3..=10).contains(&n) {
        return Err(Error::Domain(format!("electron count {n} outside 3..=10")));
    }
    let outer = n - 2;
    let mut dets = Vec::new();
    for bits in 0u16..256 {
        if bits.count_ones() as usize == outer {
            dets.push(Determinant::from_mask(0b11 | (bits << 2)));
        }
    }
    Ok(dets)
}

fn spin_of(g: usize) -> Spin {
    if g % 2 == 0 {
        Spin::Up
    } else {
        Spin::Down
    }
}

fn orb_of(g: usize) -> OrbitalId {
    OrbitalId::from_index(g / 2 + 1).expect("index < 10")
}

/// Hamiltonian matrix element between two determinants by the
/// Slater-Condon rules, with integral lookups routed through the
/// canonicalization of the integrals module.
pub fn slater_condon_h(d1: Determinant, d2: Determinant, ints: &IntegralSet) -> f64 {
    debug_assert_eq!(d1.electron_count(), d2.electron_count());
    let diff1: Vec<usize> = d1.occupied().into_iter().filter(|&g| !d2.contains(g)).collect();
    match diff1.len() {
        0 => {
            let occ = d1.occupied();
            let mut e = 0.0;
            for (i, &a) in occ.iter().enumerate() {
                e += ints.one_body(orb_of(a), orb_of(a));
                for &b in occ.iter().take(i) {
                    e += ints.two_body(orb_of(a), orb_of(a), orb_of(b), orb_of(b));
                    if spin_of(a) == spin_of(b) {
                        e -= ints.two_body(orb_of(a), orb_of(b), orb_of(b), orb_of(a));
                    }
                }
            }
            e
        }
        1 => {
            let a = diff1[0];
            let b = d2
                .occupied()
                .into_iter()
                .find(|&g| !d1.contains(g))
                .expect("one orbital differs");
            if spin_of(a) != spin_of(b) {
                return 0.0;
            }
            let sign = if (d1.position(a) + d2.position(b)) % 2 == 0 {
                1.0
            } else {
                -1.0
            };
            let (oa, ob) = (orb_of(a), orb_of(b));
            let mut e = ints.one_body(oa, ob);
            for &c in d1.occupied().iter().filter(|&&g| g != a) {
                let oc = orb_of(c);
                e += ints.two_body(oa, ob, oc, oc);
                if spin_of(c) == spin_of(a) {
                    e -= ints.two_body(oa, oc, oc, ob);
                }
            }
            sign * e
        }
        2 => {
            let (a1, a2) = (diff1[0], diff1[1]);
            let diff2: Vec<usize> =
                d2.occupied().into_iter().filter(|&g| !d1.contains(g)).collect();
            let (b1, b2) = (diff2[0], diff2[1]);
            let sign = if (d1.position(a1) + d1.position(a2) + d2.position(b1) + d2.position(b2))
                % 2
                == 0
            {
                1.0
            } else {
                -1.0
            };
            let mut e = 0.0;
            if spin_of(a1) == spin_of(b1) && spin_of(a2) == spin_of(b2) {
                e += ints.two_body(orb_of(a1), orb_of(b1), orb_of(a2), orb_of(b2));
            }
            if spin_of(a1) == spin_of(b2) && spin_of(a2) == spin_of(b1) {
                e -= ints.two_body(orb_of(a1), orb_of(b2), orb_of(a2), orb_of(b1));
            }
            sign * e
        }
        _ => 0.0,
    }
}

/// Full Hamiltonian over the determinant basis.
pub fn hamiltonian_matrix(dets: &[Determinant], ints: &IntegralSet) -> DMatrix<f64> {
    let n = dets.len();
    let mut h = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = slater_condon_h(dets[i], dets[j], ints);
            h[(i, j)] = v;
            h[(j, i)] = v;
        }
    }
    h
}

/// Operators lifted to the N-electron space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorTag {
    LSquared,
    SSquared,
    L3,
    S3,
    Parity,
}

/// Dense operator matrix over the determinant basis. Symmetric for L², S²
/// and parity; hermitian with imaginary entries for angular momentum
/// components in the real p basis.
pub struct OperatorMatrix {
    pub tag: OperatorTag,
    pub matrix: DMatrix<Complex64>,
}

/// Action of a one-electron operator on a spin-orbital, as a list of
/// (coefficient, target) pairs.
type OneBodyAction = fn(SpinOrbital) -> Vec<(Complex64, SpinOrbital)>;

/// Orbital part of angular momentum: `l_i p_j = i ε_ijk p_k`, zero on s
/// orbitals. The global sign is a fixed convention; only L² and the
/// commutation relations matter downstream.
fn l_action(component: usize) -> OneBodyAction {
    match component {
        0 => |so| l_component(0, so),
        1 => |so| l_component(1, so),
        _ => |so| l_component(2, so),
    }
}

fn l_component(i: usize, so: SpinOrbital) -> Vec<(Complex64, SpinOrbital)> {
    let Some(j) = so.orbital.axis() else {
        return vec![];
    };
    let mut out = Vec::new();
    for k in 0..3 {
        let eps = levi_civita(i, j, k);
        if eps != 0 {
            let target = [OrbitalId::TwoP1, OrbitalId::TwoP2, OrbitalId::TwoP3][k];
            out.push((
                Complex64::new(0.0, eps as f64),
                SpinOrbital {
                    orbital: target,
                    spin: so.spin,
                },
            ));
        }
    }
    out
}

fn levi_civita(i: usize, j: usize, k: usize) -> i32 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// Spin operators: multiplication by the Pauli matrices over the two spin
/// components, divided by two.
fn s_action(component: usize) -> OneBodyAction {
    match component {
        0 => |so: SpinOrbital| {
            vec![(
                Complex64::new(0.5, 0.0),
                SpinOrbital {
                    orbital: so.orbital,
                    spin: flip(so.spin),
                },
            )]
        },
        1 => |so: SpinOrbital| {
            let sign = match so.spin {
                Spin::Up => 0.5,
                Spin::Down => -0.5,
            };
            vec![(
                Complex64::new(0.0, sign),
                SpinOrbital {
                    orbital: so.orbital,
                    spin: flip(so.spin),
                },
            )]
        },
        _ => |so: SpinOrbital| {
            let sign = match so.spin {
                Spin::Up => 0.5,
                Spin::Down => -0.5,
            };
            vec![(Complex64::new(sign, 0.0), so)]
        },
    }
}

fn flip(s: Spin) -> Spin {
    match s {
        Spin::Up => Spin::Down,
        Spin::Down => Spin::Up,
    }
}

/// Matrix of `Σ_j A(j)` over the determinant basis for a one-electron
/// operator A: each occupied spin-orbital is replaced by its image, with
/// the reordering sign tracked.
fn lift_one_body(dets: &[Determinant], action: OneBodyAction) -> DMatrix<Complex64> {
    let n = dets.len();
    let index: std::collections::HashMap<u16, usize> =
        dets.iter().enumerate().map(|(i, d)| (d.mask(), i)).collect();
    let mut m = DMatrix::zeros(n, n);
    for (col, det) in dets.iter().enumerate() {
        for g in det.occupied() {
            let so = SpinOrbital::from_global_index(g).expect("occupied");
            for (coeff, target) in action(so) {
                let tg = target.global_index();
                if tg == g {
                    if let Some(&row) = index.get(&det.mask()) {
                        m[(row, col)] += coeff;
                    }
                    continue;
                }
                if det.contains(tg) {
                    continue; // Pauli blocked
                }
                let new_mask = (det.mask() & !(1 << g)) | (1 << tg);
                let (lo, hi) = (g.min(tg), g.max(tg));
                let between = (det.mask() & !(1 << g) & (((1 << hi) - 1) & !((1u16 << (lo + 1)) - 1)))
                    .count_ones();
                let sign = if between % 2 == 0 { 1.0 } else { -1.0 };
                if let Some(&row) = index.get(&new_mask) {
                    m[(row, col)] += coeff * sign;
                }
            }
        }
    }
    m
}

/// Build the matrix of a symmetry operator over the N-electron model space.
pub fn build_operator(tag: OperatorTag, n: usize) -> Result<OperatorMatrix> {
    let dets = enumerate_space(n)?;
    let matrix = match tag {
        OperatorTag::L3 => lift_one_body(&dets, l_action(2)),
        OperatorTag::S3 => lift_one_body(&dets, s_action(2)),
        OperatorTag::LSquared => {
            let mut sq = DMatrix::zeros(dets.len(), dets.len());
            for c in 0..3 {
                let li = lift_one_body(&dets, l_action(c));
                sq += &li * &li;
            }
            sq
        }
        OperatorTag::SSquared => {
            let mut sq = DMatrix::zeros(dets.len(), dets.len());
            for c in 0..3 {
                let si = lift_one_body(&dets, s_action(c));
                sq += &si * &si;
            }
            sq
        }
        OperatorTag::Parity => {
            let mut m = DMatrix::zeros(dets.len(), dets.len());
            for (i, d) in dets.iter().enumerate() {
                let p = if d.p_electron_count() % 2 == 0 { 1.0 } else { -1.0 };
                m[(i, i)] = Complex64::new(p, 0.0);
            }
            m
        }
    };
    Ok(OperatorMatrix { tag, matrix })
}

/// Real part of an operator matrix, verifying that the imaginary part is
/// numerically zero (true for L², S² and parity in the real orbital basis).
pub(crate) fn real_part_checked(m: &DMatrix<Complex64>) -> Result<DMatrix<f64>> {
    let max_im = m.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if max_im > 1e-10 {
        return Err(Error::Consistency(format!(
            "operator expected to be real has imaginary part {max_im:.3e}"
        )));
    }
    Ok(m.map(|z| z.re))
}

/// One labeled eigenvalue of the full Hamiltonian.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledLevel {
    pub label: SymmetryLabel,
    pub energy: f64,
    pub degeneracy: usize,
}

fn sorted_symmetric_eigen(m: &DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let eig = m.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let vals: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vecs = DMatrix::from_columns(
        &order.iter().map(|&i| eig.eigenvectors.column(i).into_owned()).collect::<Vec<_>>(),
    );
    (vals, vecs)
}

/// Split the columns of `basis` into groups on which `op` is constant, by
/// diagonalizing the projected operator. Returns (eigenvalue, sub-basis)
/// pairs, with eigenvalues grouped to tolerance `tol`.
fn split_by_operator(
    basis: &DMatrix<f64>,
    op: &DMatrix<f64>,
    tol: f64,
) -> Vec<(f64, DMatrix<f64>)> {
    let projected = basis.transpose() * op * basis;
    let sym = (&projected + projected.transpose()) * 0.5;
    let (vals, vecs) = sorted_symmetric_eigen(&sym);
    let rotated = basis * vecs;
    let mut groups: Vec<(f64, Vec<DVector<f64>>)> = Vec::new();
    for (i, &v) in vals.iter().enumerate() {
        let col = rotated.column(i).into_owned();
        match groups.last_mut() {
            Some((gv, cols)) if (v - *gv).abs() <= tol => cols.push(col),
            _ => groups.push((v, vec![col])),
        }
    }
    groups
        .into_iter()
        .map(|(v, cols)| (v, DMatrix::from_columns(&cols)))
        .collect()
}

fn round_quantum(x: f64, kind: &str) -> Result<f64> {
    let r = x.round();
    if (x - r).abs() > 1e-6 {
        return Err(Error::Consistency(format!(
            "{kind} expectation {x} is {:.2e} away from the integer lattice",
            (x - r).abs()
        )));
    }
    Ok(r)
}

/// Diagonalize the Hamiltonian on the model space and label every
/// eigenvalue with its (L, S, parity) term symbol and degeneracy. The
/// degeneracy of each level must equal (2S+1)(2L+1); anything else is a
/// consistency error.
pub fn labeled_spectrum(n: usize, ints: &IntegralSet) -> Result<Vec<LabeledLevel>> {
    let dets = enumerate_space(n)?;
    let h = hamiltonian_matrix(&dets, ints);
    let l2 = real_part_checked(&build_operator(OperatorTag::LSquared, n)?.matrix)?;
    let s2 = real_part_checked(&build_operator(OperatorTag::SSquared, n)?.matrix)?;
    let parity = real_part_checked(&build_operator(OperatorTag::Parity, n)?.matrix)?;

    let dim = dets.len();
    let identity = DMatrix::<f64>::identity(dim, dim);
    let mut levels = Vec::new();

    for (l2_val, l_basis) in split_by_operator(&identity, &l2, 0.5) {
        // L from L(L+1)
        let l = round_quantum((-1.0 + (1.0 + 4.0 * l2_val).sqrt()) / 2.0, "L")?;
        if (l2_val - l * (l + 1.0)).abs() > 1e-6 {
            return Err(Error::Consistency(format!(
                "L² eigenvalue {l2_val} not of the form L(L+1)"
            )));
        }
        for (s2_val, s_basis) in split_by_operator(&l_basis, &s2, 0.25) {
            // 2S from S(S+1)
            let two_s = round_quantum(-1.0 + (1.0 + 4.0 * s2_val).sqrt(), "2S")?;
            let s = two_s / 2.0;
            if (s2_val - s * (s + 1.0)).abs() > 1e-6 {
                return Err(Error::Consistency(format!(
                    "S² eigenvalue {s2_val} not of the form S(S+1)"
                )));
            }
            for (p_val, p_basis) in split_by_operator(&s_basis, &parity, 0.5) {
                let p = round_quantum(p_val, "parity")?;
                if p.abs() != 1.0 {
                    return Err(Error::Consistency(format!("parity eigenvalue {p_val} not ±1")));
                }
                let label = SymmetryLabel::new(l as u32, two_s as u32, p as i8);

                let h_sub = p_basis.transpose() * &h * &p_basis;
                let h_sym = (&h_sub + h_sub.transpose()) * 0.5;
                let (evals, _) = sorted_symmetric_eigen(&h_sym);
                let scale = 1.0 + evals.iter().map(|e| e.abs()).fold(0.0, f64::max);
                let mut i = 0;
                while i < evals.len() {
                    let mut j = i + 1;
                    while j < evals.len() && (evals[j] - evals[i]).abs() < 1e-8 * scale {
                        j += 1;
                    }
                    let count = j - i;
                    if count != label.degeneracy() {
                        return Err(Error::Consistency(format!(
                            "level {} at {:.8} has degeneracy {count}, expected {}",
                            label.ascii(),
                            evals[i],
                            label.degeneracy()
                        )));
                    }
                    let mean = evals[i..j].iter().sum::<f64>() / count as f64;
                    levels.push(LabeledLevel {
                        label,
                        energy: mean,
                        degeneracy: count,
                    });
                    i = j;
                }
            }
        }
    }
    levels.sort_by(|a, b| a.energy.total_cmp(&b.energy));
    Ok(levels)
}
