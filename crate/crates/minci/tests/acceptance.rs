//! Acceptance suite: one test per shipping criterion, each printing a
//! PASS line with the measured margins (run with `--nocapture` to see
//! them). Tolerances are fixed here and nowhere else.

use std::sync::OnceLock;
use std::time::Instant;

use minci::blocks::{blocks_for, evaluate_block, solve_block, Root, SymmetryLabel};
use minci::determinant::{build_operator, enumerate_space, hamiltonian_matrix, OperatorTag};
use minci::integrals::{compute_integrals, pt_integrals, pt_rational, IntegralSymbol};
use minci::optimize::{optimize_subspace, optimize_subspace_from, virial_split};
use minci::orbitals::DilationParams;
use minci::reference::{atom_name, reference};
use minci::spectra::{atom_spectrum, ionization_energy, isoelectronic_scan, AtomSpectrum};
use minci::verify::blocks_against_determinant;

use num_complex::Complex64;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Full neutral-atom sweep H..Ne, computed once, plus its wall time.
fn sweep() -> &'static (Vec<AtomSpectrum>, f64) {
    static SWEEP: OnceLock<(Vec<AtomSpectrum>, f64)> = OnceLock::new();
    SWEEP.get_or_init(|| {
        let start = Instant::now();
        let spectra = (1..=10)
            .map(|n| atom_spectrum(n, n as f64).expect("neutral atom solves"))
            .collect();
        (spectra, start.elapsed().as_secs_f64())
    })
}

fn spectrum(n: usize) -> &'static AtomSpectrum {
    &sweep().0[n - 1]
}

fn find_level(n: usize, term: &str, upper: bool) -> &'static minci::spectra::EnergyLevel {
    spectrum(n)
        .levels
        .iter()
        .find(|l| l.term.ascii() == term && (l.root == Root::Upper) == upper)
        .unwrap_or_else(|| panic!("level {term} (upper={upper}) missing for N={n}"))
}

#[test]
fn criterion_01_reference_table_reproduction() {
    let data = reference();
    let mut max_de = (0.0f64, String::new());
    let mut max_dgap = 0.0f64;
    let mut max_dz = 0.0f64;
    let mut max_dc = 0.0f64;
    let mut rows = 0;
    for r in &data.levels {
        let n = minci::reference::atom_number(&r.atom).unwrap();
        let level = find_level(n, &r.term, r.upper);
        rows += 1;

        let de = (level.energy_ci - r.e_ci).abs();
        assert!(de <= 5e-4, "{} {} E_CI: {} vs {}", r.atom, r.term, level.energy_ci, r.e_ci);
        if de > max_de.0 {
            max_de = (de, format!("{} {}", r.atom, r.term));
        }

        let ref_gap = r.de_ci.unwrap_or(0.0);
        let dgap = (level.gap - ref_gap).abs();
        assert!(dgap <= 5e-4, "{} {} gap: {} vs {}", r.atom, r.term, level.gap, ref_gap);
        max_dgap = max_dgap.max(dgap);

        let dz1 = (level.params_star.z1 - r.z1).abs();
        assert!(dz1 <= 5e-3, "{} {} z1: {} vs {}", r.atom, r.term, level.params_star.z1, r.z1);
        max_dz = max_dz.max(dz1);
        if let Some(z2) = r.z2 {
            assert!(level.active.z2, "{} {} should use z2", r.atom, r.term);
            let d = (level.params_star.z2 - z2).abs();
            assert!(d <= 5e-3, "{} {} z2: {} vs {z2}", r.atom, r.term, level.params_star.z2);
            max_dz = max_dz.max(d);
        } else {
            assert!(!level.active.z2, "{} {} should not use z2", r.atom, r.term);
        }
        if let Some(z3) = r.z3 {
            assert!(level.active.z3, "{} {} should use z3", r.atom, r.term);
            let d = (level.params_star.z3 - z3).abs();
            assert!(d <= 5e-3, "{} {} z3: {} vs {z3}", r.atom, r.term, level.params_star.z3);
            max_dz = max_dz.max(d);
        } else {
            assert!(!level.active.z3, "{} {} should not use z3", r.atom, r.term);
        }

        if let Some(c) = r.c {
            let got = level.mixing_c.expect("2x2 level carries c");
            let d = (got - c).abs();
            assert!(d <= 5e-3, "{} {} c: {got} vs {c}", r.atom, r.term);
            max_dc = max_dc.max(d);
        }
    }
    let elapsed = sweep().1;
    assert!(elapsed < 60.0, "full sweep took {elapsed:.1}s, budget 60s");
    println!(
        "PASS criterion 1: {rows} levels within 5e-4 (worst E dev {:.1e} at {}), \
         gaps within 5e-4 (worst {max_dgap:.1e}), Z within 5e-3 (worst {max_dz:.1e}), \
         c within 5e-3 (worst {max_dc:.1e}); sweep {elapsed:.2}s",
        max_de.0, max_de.1
    );
}

#[test]
fn criterion_02_pt_column_reproduction() {
    let data = reference();
    let mut worst = 0.0f64;
    for r in &data.levels {
        let n = minci::reference::atom_number(&r.atom).unwrap();
        let ints = pt_integrals(n as f64).unwrap();
        let block = blocks_for(n)
            .unwrap()
            .into_iter()
            .find(|b| b.label.ascii() == r.term)
            .unwrap();
        let roots = solve_block(&evaluate_block(&block, &ints));
        let e_pt = roots[r.upper as usize].energy;
        let dev = (e_pt - r.e_pt).abs();
        assert!(dev <= 1e-4, "{} {} (upper={}) E_PT: {e_pt} vs {}", r.atom, r.term, r.upper, r.e_pt);
        worst = worst.max(dev);
    }
    println!(
        "PASS criterion 2: all {} PT energies within 1e-4 (worst {worst:.1e}; C 1S checked as -34.1838)",
        data.levels.len()
    );
}

#[test]
fn criterion_03_integral_exactness() {
    // the PT column as exact rationals, written out independently here
    let expected: [(IntegralSymbol, i64, i64, u32); 14] = [
        (IntegralSymbol::H1s, -1, 2, 2),
        (IntegralSymbol::H2s, -1, 8, 2),
        (IntegralSymbol::H2p, -1, 8, 2),
        (IntegralSymbol::J1s1s, 5, 8, 1),
        (IntegralSymbol::J1s2s, 17, 81, 1),
        (IntegralSymbol::K1s2s, 16, 729, 1),
        (IntegralSymbol::J2s2s, 77, 512, 1),
        (IntegralSymbol::J1s2p, 59, 243, 1),
        (IntegralSymbol::K1s2p, 112, 6561, 1),
        (IntegralSymbol::J2s2p, 83, 512, 1),
        (IntegralSymbol::K2s2p, 15, 512, 1),
        (IntegralSymbol::J2p2p, 501, 2560, 1),
        (IntegralSymbol::J2p2pCross, 447, 2560, 1),
        (IntegralSymbol::K2p2p, 27, 2560, 1),
    ];
    for (sym, num, den, pow) in expected {
        let (q, p) = pt_rational(sym);
        assert_eq!(q, Rational64::new(num, den), "{sym} rational");
        assert_eq!(p, pow, "{sym} power of Z");
    }

    // closed forms against the quadrature oracle at 20 random parameter sets
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let p = DilationParams::new(
            rng.gen_range(1.0..10.0),
            rng.gen_range(1.0..10.0),
            rng.gen_range(1.0..10.0),
        )
        .unwrap();
        let ints = compute_integrals(4.0, &p).unwrap();
        for sym in IntegralSymbol::ALL {
            let Some([a, b, c, d]) = sym.representative() else {
                continue;
            };
            let oracle = minci::integrals::quadrature_integral(a, b, c, d, &p).unwrap();
            let rel = (ints.get(sym) - oracle).abs() / oracle.abs().max(1e-300);
            assert!(rel <= 1e-8, "{sym} at {p:?}: rel dev {rel:.2e}");
            worst = worst.max(rel);
        }
    }
    println!(
        "PASS criterion 3: 14 PT rationals exact; closed forms within 1e-8 of quadrature \
         over 20 random parameter sets (worst rel dev {worst:.1e})"
    );
}

#[test]
fn criterion_04_oracle_equivalence() {
    let expected_dims = [8usize, 28, 56, 70, 56, 28, 8, 1];
    for (i, n) in (3..=10).enumerate() {
        assert_eq!(enumerate_space(n).unwrap().len(), expected_dims[i], "N={n} dimension");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for n in 3..=10 {
        let blocks = blocks_for(n).unwrap();
        for _ in 0..5 {
            let z = rng.gen_range(3.0..12.0);
            let p = DilationParams::new(
                rng.gen_range(1.0..9.0),
                rng.gen_range(1.0..9.0),
                rng.gen_range(1.0..9.0),
            )
            .unwrap();
            let ints = compute_integrals(z, &p).unwrap();
            blocks_against_determinant(n, &blocks, &ints)
                .unwrap_or_else(|e| panic!("N={n}: {e}"));
        }
    }
    println!(
        "PASS criterion 4: dimensions 8,28,56,70,56,28,8,1; block eigenvalues equal \
         determinant spectra with (2S+1)(2L+1) degeneracies at 5 random parameter sets per atom (1e-10)"
    );
}

#[test]
fn criterion_05_symmetry() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let mut worst = 0.0f64;
    for n in 3..=10 {
        let p = DilationParams::new(
            rng.gen_range(1.0..9.0),
            rng.gen_range(1.0..9.0),
            rng.gen_range(1.0..9.0),
        )
        .unwrap();
        let ints = compute_integrals(n as f64 + 0.5, &p).unwrap();
        let dets = enumerate_space(n).unwrap();
        let h = hamiltonian_matrix(&dets, &ints).map(|v| Complex64::new(v, 0.0));
        for tag in [OperatorTag::LSquared, OperatorTag::SSquared, OperatorTag::Parity] {
            let op = build_operator(tag, n).unwrap().matrix;
            let comm = &h * &op - &op * &h;
            let norm = comm.iter().map(|z| z.norm()).fold(0.0, f64::max);
            assert!(norm < 1e-10, "N={n} [H,{tag:?}] = {norm:.2e}");
            worst = worst.max(norm);
        }
        // quantum-number rounding to the exact lattice happens inside
        // labeled_spectrum and errors beyond 1e-6
        minci::determinant::labeled_spectrum(n, &ints).expect("quantum numbers on lattice");
    }
    println!(
        "PASS criterion 5: commutators vanish to 1e-10 (worst {worst:.1e}); \
         all eigenspace quantum numbers round within 1e-6"
    );
}

#[test]
fn criterion_06_virial_theorem() {
    // -2 at every optimized lowest-in-subspace state
    let mut worst = 0.0f64;
    for n in 3..=10 {
        for block in blocks_for(n).unwrap() {
            let r = optimize_subspace(n, n as f64, &block).unwrap();
            let (t, v) = virial_split(&block, n as f64, &r.params_star).unwrap();
            let dev = (v / t + 2.0).abs();
            assert!(dev < 1e-6, "N={n} {}: V/T = {}", block.label, v / t);
            worst = worst.max(dev);
        }
    }
    // tabulated ratios at uniform screening for the eight ground states
    let data = reference();
    let mut worst_pt = 0.0f64;
    for n in 3..=10usize {
        let atom = atom_name(n).unwrap();
        let label = minci::blocks::ground_label(n).unwrap();
        let block = blocks_for(n)
            .unwrap()
            .into_iter()
            .find(|b| b.label == label)
            .unwrap();
        let p = DilationParams::uniform(n as f64).unwrap();
        let (t, v) = virial_split(&block, n as f64, &p).unwrap();
        let dev = (v / t - data.virial_pt[atom]).abs();
        assert!(dev < 1e-3, "{atom}: V/T at uniform screening = {}, ref {}", v / t, data.virial_pt[atom]);
        worst_pt = worst_pt.max(dev);
    }
    println!(
        "PASS criterion 6: V/T = -2 within 1e-6 at all 38 optimized states (worst dev {worst:.1e}); \
         8 uniform-screening ratios within 1e-3 (worst dev {worst_pt:.1e})"
    );
}

#[test]
fn criterion_07_ground_terms() {
    let expected = ["2S", "1S", "2S", "1S", "2Po", "3P", "4So", "3P", "2Po", "1S"];
    for n in 1..=10usize {
        let got = spectrum(n).ground().term;
        assert_eq!(got.ascii(), expected[n - 1], "N={n}");
        assert_eq!(got, SymmetryLabel::parse(expected[n - 1]).unwrap());
    }
    println!("PASS criterion 7: ground terms 2S 1S 2S 1S 2Po 3P 4So 3P 2Po 1S for H..Ne");
}

/// KNOWN RED. Eight of the nine tabulated ionization energies reproduce
/// within 5e-4, but the published fluorine entry (0.3958) does not: the
/// model value is 0.34230. The published entry is unattainable for this
/// model: the parameters (8.7083, 6.5576, 5.4785) give the 8-electron ion
/// at Z=9 an energy of -98.40804 (stationary to 2e-7, V/T = -2 to 1e-8,
/// global over 60 random starts, and reproduced by the determinant basis
/// on quadrature-computed integrals — see the companion test). A
/// variational minimum cannot exceed an evaluated objective value, so
/// E1(8,9) <= -98.40804 < -98.3545, the value the published entry implies.
#[test]
fn criterion_08_ionization_energies() {
    let data = reference();
    let mut ion = Vec::new();
    for n in 1..=10usize {
        ion.push(ionization_energy(n, n as f64).unwrap());
    }
    // landscape first: these claims all hold
    let minima: Vec<usize> = (2..=9)
        .filter(|&i| ion[i - 1] < ion[i - 2] && ion[i - 1] < ion[i])
        .collect();
    let maxima: Vec<usize> = (2..=9)
        .filter(|&i| ion[i - 1] > ion[i - 2] && ion[i - 1] > ion[i])
        .collect();
    assert_eq!(minima, vec![3, 5, 8], "interior minima at Li, B, O");
    assert_eq!(maxima, vec![2, 4, 7], "interior maxima at He, Be, N");
    assert!(ion[0] < ion[1], "hydrogen is a left-endpoint minimum");
    let global_min = ion.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1)).unwrap().0 + 1;
    let global_max = ion.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1)).unwrap().0 + 1;
    assert_eq!(global_min, 3, "lithium is the global minimum");
    assert_eq!(global_max, 2, "helium is the global maximum");

    let mut worst = 0.0f64;
    for n in 2..=10usize {
        let reference_value = data.ionization.ci[atom_name(n).unwrap()];
        let dev = (ion[n - 1] - reference_value).abs();
        assert!(
            dev <= 5e-4,
            "N={n}: computed I = {:.6} vs published {reference_value} (dev {dev:.2e}); \
             the computed value is oracle-verified — see companion_08 and the dataset comments",
            ion[n - 1]
        );
        worst = worst.max(dev);
    }
    println!(
        "PASS criterion 8: nine ionization energies within 5e-4 (worst {worst:.1e}); \
         minima H/Li/B/O, maxima He/Be/N, global min Li, global max He"
    );
}

/// Pins the model's own fluorine ionization energy through a maximally
/// independent route: the 8-electron ion ground energy is recomputed in
/// the determinant basis with every two-body integral taken from the
/// radial quadrature oracle instead of the closed forms.
#[test]
fn companion_08_fluorine_ionization_independent_verification() {
    use minci::determinant::labeled_spectrum;
    use minci::integrals::{quadrature_integral, IntegralSet};

    // model value through the production path
    let i_f = ionization_energy(9, 9.0).unwrap();
    assert!((i_f - 0.342299).abs() < 5e-6, "I(F) = {i_f}");

    // ion ground state once more with quadrature-backed integrals
    let params = DilationParams::new(8.708309, 6.557588, 5.478474).unwrap();
    let closed = compute_integrals(9.0, &params).unwrap();
    let ints = IntegralSet::with_values(9.0, params, |sym| match sym.representative() {
        Some([a, b, c, d]) => quadrature_integral(a, b, c, d, &params).unwrap(),
        None => closed.get(sym),
    });
    let levels = labeled_spectrum(8, &ints).unwrap();
    assert_eq!(levels[0].label.ascii(), "3P");
    assert!(
        (levels[0].energy - (-98.408043)).abs() < 1e-5,
        "independent E1(8,9) = {}",
        levels[0].energy
    );
    // the published list entry implies E1(8,9) = -98.3545, above this
    // explicitly evaluated upper bound on the model minimum
    assert!(levels[0].energy < -98.3545 - 5e-2);
    println!(
        "PASS companion 8: E1(8,9) = {:.6} reproduced with quadrature-backed integrals \
         in the determinant basis; model I(F) = {i_f:.6}",
        levels[0].energy
    );
}

/// KNOWN RED. The model's level crossing of the carbon sequence sits
/// between Z=23 and Z=24 (diff(23) = +5.14e-4, diff(24) = -1.73e-3), one
/// unit above the published location. Both energies at Z=23 are stationary
/// to 3e-7, survive a brute local grid scan and 40-start global search,
/// and their integrals agree with the quadrature oracle to 1e-9 at the
/// optimized parameters, so the published location is off by one in the
/// model as defined.
#[test]
fn criterion_09_carbon_level_crossing() {
    let a = SymmetryLabel::parse("3So").unwrap();
    let b = SymmetryLabel::parse("1Do").unwrap();
    let pts = isoelectronic_scan(6, &[6.0, 22.0, 23.0], (a, b)).unwrap();
    assert!(pts[0].diff > 0.0, "at Z=6 the 3So level lies above 1Do");
    assert!(pts[1].diff > 0.0, "no crossing yet at Z=22: {:+.6}", pts[1].diff);
    assert!(
        pts[2].diff < 0.0,
        "stated crossing by Z=23 does not occur: diff(23) = {:+.6} (the model crosses \
         between 23 and 24 — see companion_09)",
        pts[2].diff
    );
    println!(
        "PASS criterion 9: E(3So)-E(1Do) flips sign between Z=22 ({:+.5}) and Z=23 ({:+.5})",
        pts[1].diff, pts[2].diff
    );
}

/// Pins the crossing the model actually has: a sign change between Z=23
/// and Z=24, approached monotonically from Z=6.
#[test]
fn companion_09_crossing_location_independent_verification() {
    let a = SymmetryLabel::parse("3So").unwrap();
    let b = SymmetryLabel::parse("1Do").unwrap();
    let zs: Vec<f64> = vec![6.0, 10.0, 14.0, 18.0, 22.0, 23.0, 24.0, 28.0];
    let pts = isoelectronic_scan(6, &zs, (a, b)).unwrap();
    // the difference decreases monotonically and crosses zero once
    for w in pts.windows(2) {
        assert!(w[1].diff < w[0].diff, "diff not decreasing at Z={}", w[1].z);
    }
    assert!(pts[5].diff > 0.0, "still positive at Z=23: {:+.6}", pts[5].diff);
    assert!(pts[6].diff < 0.0, "negative by Z=24: {:+.6}", pts[6].diff);
    assert!((pts[5].diff - 5.14e-4).abs() < 5e-5, "diff(23) = {:+.6}", pts[5].diff);
    println!(
        "PASS companion 9: crossing between Z=23 ({:+.5}) and Z=24 ({:+.5}), monotone approach",
        pts[5].diff, pts[6].diff
    );
}

#[test]
fn criterion_10_bounds_and_percentage_errors() {
    let data = reference();
    // upper-bound chain: E_CI <= E_PT for every tabulated level, and
    // E_exp <= E_CI where an unambiguous experimental value exists
    let mut checked = 0;
    for r in &data.levels {
        let n = minci::reference::atom_number(&r.atom).unwrap();
        let level = find_level(n, &r.term, r.upper);
        assert!(
            level.energy_ci <= level.energy_pt,
            "{} {}: E_CI {} above E_PT {}",
            r.atom,
            r.term,
            level.energy_ci,
            level.energy_pt
        );
        // approximately assigned values would be exempt if they violated
        // the ordering; none do, so all 37 experimental rows get checked
        if let Some(e_exp) = r.e_exp {
            assert!(
                e_exp <= level.energy_ci,
                "{} {}: chain {e_exp} <= {} violated (assigned: {})",
                r.atom,
                r.term,
                level.energy_ci,
                r.exp_assigned
            );
            checked += 1;
        }
    }
    // ground-state percentage errors against the tabulated columns
    let report = minci::spectra::error_report().unwrap();
    let mut worst = 0.0f64;
    for row in &report.ground {
        let d_ci = (row.ci_percent - row.ref_ci_percent).abs();
        let d_pt = (row.pt_percent - row.ref_pt_percent).abs();
        assert!(d_ci <= 0.1, "{}: CI error {}% vs {}%", row.atom, row.ci_percent, row.ref_ci_percent);
        assert!(d_pt <= 0.1, "{}: PT error {}% vs {}%", row.atom, row.pt_percent, row.ref_pt_percent);
        worst = worst.max(d_ci).max(d_pt);
        if row.atom == "F" {
            assert!(
                (row.ci_percent - data.fluorine_methods.ci_percent).abs() <= 0.01,
                "fluorine CI error {}% vs {}%",
                row.ci_percent,
                data.fluorine_methods.ci_percent
            );
        }
    }
    println!(
        "PASS criterion 10: E_CI <= E_PT on all 45 levels, E_exp <= E_CI on {checked} \
         experimental rows; 16 percentage errors within 0.1pp (worst {worst:.2}pp); \
         fluorine 1.06% +/- 0.01"
    );
}

#[test]
fn criterion_11_property_suite() {
    // c+ c- = -1 and interlacing for every 2x2 block at its optimum
    let mut pairs = 0;
    for n in 3..=10 {
        for block in blocks_for(n).unwrap() {
            if block.dimension() != 2 {
                continue;
            }
            let r = optimize_subspace(n, n as f64, &block).unwrap();
            let ints = compute_integrals(n as f64, &r.params_star).unwrap();
            let m = evaluate_block(&block, &ints);
            assert!(m.h12 != 0.0);
            let c_lo = r.levels[0].mixing_c.unwrap();
            let c_hi = r.levels[1].mixing_c.unwrap();
            assert!(
                (c_lo * c_hi + 1.0).abs() < 1e-10,
                "N={n} {}: c+c- = {}",
                block.label,
                c_lo * c_hi
            );
            assert!(r.levels[0].energy <= m.h11.min(m.h22) && m.h11.max(m.h22) <= r.levels[1].energy);
            pairs += 1;
        }
    }
    // multi-start consistency for every neutral ground-state block
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for n in 3..=10usize {
        let z = n as f64;
        let label = minci::blocks::ground_label(n).unwrap();
        let block = blocks_for(n).unwrap().into_iter().find(|b| b.label == label).unwrap();
        let reference_energy = optimize_subspace(n, z, &block).unwrap().energy();
        for _ in 0..10 {
            let start = DilationParams::new(
                rng.gen_range(0.5 * z..1.2 * z),
                rng.gen_range(0.5 * z..1.2 * z),
                rng.gen_range(0.5 * z..1.2 * z),
            )
            .unwrap();
            let r = optimize_subspace_from(n, z, &block, &start).unwrap();
            assert!(
                (r.energy() - reference_energy).abs() < 1e-7,
                "N={n} from {start:?}: {} vs {reference_energy}",
                r.energy()
            );
        }
    }
    println!(
        "PASS criterion 11: c+c- = -1 and interlacing on {pairs} 2x2 blocks; \
         8 ground blocks x 10 random starts agree within 1e-7"
    );
}
