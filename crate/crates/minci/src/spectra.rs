//! Per-atom spectra, spectral gaps, ionization energies and isoelectronic
//! scans, with comparisons against the embedded reference dataset.

use rayon::prelude::*;
use serde::Serialize;

use crate::blocks::{blocks_for, ground_label, Root, SymmetryLabel};
use crate::integrals::pt_integrals;
use crate::optimize::{optimize_small_atom, optimize_subspace, ActiveParams, OptimizationResult};
use crate::orbitals::DilationParams;
use crate::reference::{atom_name, reference, ReferenceLevel};
use crate::{blocks, Error, Result};

/// One optimized energy level of an atom or ion.
#[derive(Debug, Clone, Serialize)]
pub struct EnergyLevel {
    pub term: SymmetryLabel,
    pub root: Root,
    /// Optimized model energy (hartree).
    pub energy_ci: f64,
    /// Minimizing screening parameters (state-specific: upper roots share
    /// the minimizer of the lower root of their block).
    pub params_star: DilationParams,
    pub active: ActiveParams,
    pub mixing_c: Option<f64>,
    /// Gap to the atom's ground level; 0 for the ground level itself.
    pub gap: f64,
    /// Same root evaluated at uniform screening (the PT limit).
    pub energy_pt: f64,
    /// Matching reference row, present for neutral atoms.
    pub reference: Option<ReferenceLevel>,
}

/// Complete spectrum of one (N, Z) system, ascending in energy.
#[derive(Debug, Clone, Serialize)]
pub struct AtomSpectrum {
    pub n: usize,
    pub z: f64,
    pub levels: Vec<EnergyLevel>,
}

impl AtomSpectrum {
    pub fn ground(&self) -> &EnergyLevel {
        &self.levels[0]
    }
}

fn is_neutral(n: usize, z: f64) -> bool {
    (z - n as f64).abs() < 1e-12
}

fn levels_from_result(
    n: usize,
    z: f64,
    result: &OptimizationResult,
    pt_energies: &[f64],
) -> Vec<EnergyLevel> {
    let neutral = is_neutral(n, z);
    result
        .levels
        .iter()
        .enumerate()
        .map(|(i, pair)| EnergyLevel {
            term: result.label,
            root: pair.root,
            energy_ci: pair.energy,
            params_star: result.params_star,
            active: result.active,
            mixing_c: pair.mixing_c,
            gap: 0.0,
            energy_pt: pt_energies[i],
            reference: if neutral {
                reference()
                    .level(n, &result.label.ascii(), matches!(pair.root, Root::Upper))
                    .cloned()
            } else {
                None
            },
        })
        .collect()
}

/// Optimize one block and attach the PT energies of its roots.
fn solve_one_block(n: usize, z: f64, block: &blocks::SymmetryBlock) -> Result<Vec<EnergyLevel>> {
    let result = optimize_subspace(n, z, block)?;
    let pt = pt_integrals(z)?;
    let pt_energies: Vec<f64> = blocks::solve_block(&blocks::evaluate_block(block, &pt))
        .into_iter()
        .map(|p| p.energy)
        .collect();
    Ok(levels_from_result(n, z, &result, &pt_energies))
}

/// Full spectrum of the N-electron system with nuclear charge Z: every
/// symmetry subspace optimized independently (in parallel), all roots
/// collected and sorted, gaps measured from the ground level.
pub fn atom_spectrum(n: usize, z: f64) -> Result<AtomSpectrum> {
    if !(1..=10).contains(&n) {
        return Err(Error::Domain(format!("electron count {n} outside 1..=10")));
    }
    let mut levels: Vec<EnergyLevel> = if n <= 2 {
        let r = optimize_small_atom(n, z)?;
        let pt_energy = if n == 1 {
            -z * z / 2.0
        } else {
            // 1s² determinant evaluated at the bare parameter z1 = Z
            z * z - 2.0 * z * z + 5.0 / 8.0 * z
        };
        levels_from_result(n, z, &r, &[pt_energy])
    } else {
        let blocks = blocks_for(n)?;
        let per_block: Vec<Result<Vec<EnergyLevel>>> = blocks
            .par_iter()
            .map(|b| solve_one_block(n, z, b))
            .collect();
        let mut all = Vec::new();
        for r in per_block {
            all.extend(r?);
        }
        all
    };
    levels.sort_by(|a, b| a.energy_ci.total_cmp(&b.energy_ci));
    let ground = levels[0].energy_ci;
    for level in &mut levels {
        level.gap = level.energy_ci - ground;
    }
    Ok(AtomSpectrum { n, z, levels })
}

/// Ground-state energy E1(N, Z); E1(0, Z) = 0 by convention.
pub fn ground_energy(n: usize, z: f64) -> Result<f64> {
    if n == 0 {
        return Ok(0.0);
    }
    Ok(atom_spectrum(n, z)?.ground().energy_ci)
}

/// First ionization energy I(N, Z) = E1(N-1, Z) - E1(N, Z): the energy
/// needed to remove one electron at fixed nuclear charge.
pub fn ionization_energy(n: usize, z: f64) -> Result<f64> {
    if !(1..=10).contains(&n) {
        return Err(Error::Domain(format!("electron count {n} outside 1..=10")));
    }
    Ok(ground_energy(n - 1, z)? - ground_energy(n, z)?)
}

/// One point of an isoelectronic scan.
#[derive(Debug, Clone, Serialize)]
pub struct ScanPoint {
    pub z: f64,
    pub e_first: f64,
    pub e_second: f64,
    /// E(first) - E(second).
    pub diff: f64,
}

/// Energies of two terms of the N-electron sequence along a list of
/// nuclear charges, with their difference. Both terms must exist for the
/// atom; the lowest root of each term's block is used.
pub fn isoelectronic_scan(
    n: usize,
    z_list: &[f64],
    terms: (SymmetryLabel, SymmetryLabel),
) -> Result<Vec<ScanPoint>> {
    let blocks = blocks_for(n)?;
    let find = |label: SymmetryLabel| {
        blocks
            .iter()
            .find(|b| b.label == label)
            .ok_or_else(|| Error::Usage(format!("atom N={n} has no term {}", label.ascii())))
    };
    let first = find(terms.0)?;
    let second = find(terms.1)?;
    z_list
        .par_iter()
        .map(|&z| {
            let e_first = optimize_subspace(n, z, first)?.energy();
            let e_second = optimize_subspace(n, z, second)?.energy();
            Ok(ScanPoint {
                z,
                e_first,
                e_second,
                diff: e_first - e_second,
            })
        })
        .collect()
}

/// Optimized energy of a single term along a list of nuclear charges.
pub fn term_scan(n: usize, z_list: &[f64], term: SymmetryLabel) -> Result<Vec<(f64, f64)>> {
    let blocks = blocks_for(n)?;
    let block = blocks
        .iter()
        .find(|b| b.label == term)
        .ok_or_else(|| Error::Usage(format!("atom N={n} has no term {}", term.ascii())))?;
    z_list
        .par_iter()
        .map(|&z| Ok((z, optimize_subspace(n, z, block)?.energy())))
        .collect()
}

/// Ratio of the first spectral gap to the ground-state energy magnitude
/// of the neutral N-electron atom. Fails for single-level atoms.
pub fn gap_ratio(n: usize) -> Result<f64> {
    let spectrum = atom_spectrum(n, n as f64)?;
    if spectrum.levels.len() < 2 {
        return Err(Error::Domain(format!(
            "atom with {n} electrons has a single level, no gap ratio"
        )));
    }
    Ok(spectrum.levels[1].gap / spectrum.ground().energy_ci.abs())
}

/// Ground-state accuracy entry of the error report.
#[derive(Debug, Clone, Serialize)]
pub struct GroundErrorRow {
    pub atom: &'static str,
    pub n: usize,
    pub e_ci: f64,
    pub e_pt: f64,
    pub e_exp: f64,
    /// 100 (1 - E_CI/E_exp).
    pub ci_percent: f64,
    pub pt_percent: f64,
    /// Tabulated reference percentages.
    pub ref_ci_percent: f64,
    pub ref_pt_percent: f64,
}

/// Per-level gap comparison entry of the error report.
#[derive(Debug, Clone, Serialize)]
pub struct GapRow {
    pub atom: &'static str,
    pub term: String,
    pub upper: bool,
    pub gap_ci: f64,
    pub gap_exp: Option<f64>,
    pub gap_mdhf: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorReport {
    pub ground: Vec<GroundErrorRow>,
    pub gaps: Vec<GapRow>,
}

/// Percentage errors of the computed ground energies against experiment,
/// and computed gaps against the experimental and benchmark columns of
/// the reference dataset.
pub fn error_report() -> Result<ErrorReport> {
    let data = reference();
    let mut ground = Vec::new();
    let mut gaps = Vec::new();
    for n in 3..=10usize {
        let atom = atom_name(n)?;
        let spectrum = atom_spectrum(n, n as f64)?;
        let g = spectrum.ground();
        let e_exp = g
            .reference
            .as_ref()
            .and_then(|r| r.e_exp)
            .ok_or_else(|| Error::Consistency(format!("no experimental ground energy for {atom}")))?;
        ground.push(GroundErrorRow {
            atom,
            n,
            e_ci: g.energy_ci,
            e_pt: g.energy_pt,
            e_exp,
            ci_percent: 100.0 * (1.0 - g.energy_ci / e_exp),
            pt_percent: 100.0 * (1.0 - g.energy_pt / e_exp),
            ref_ci_percent: data.ground_error_percent.ci[atom],
            ref_pt_percent: data.ground_error_percent.pt[atom],
        });
        for level in &spectrum.levels[1..] {
            let reference = level.reference.as_ref();
            gaps.push(GapRow {
                atom,
                term: level.term.ascii(),
                upper: matches!(level.root, Root::Upper),
                gap_ci: level.gap,
                gap_exp: reference.and_then(|r| r.de_exp),
                gap_mdhf: reference.and_then(|r| r.de_mdhf),
            });
        }
    }
    Ok(ErrorReport { ground, gaps })
}

/// Ground term symbols for H..Ne, re-exported for convenience.
pub fn expected_ground_term(n: usize) -> Result<SymmetryLabel> {
    ground_label(n)
}
