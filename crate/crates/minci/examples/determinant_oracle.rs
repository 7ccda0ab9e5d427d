//! Cross-check the symbolic block data against a brute-force
//! diagonalization over the explicit determinant basis, at arbitrary
//! screening parameters.
//!
//!     cargo run --release --example determinant_oracle [atom]

use minci::blocks::{blocks_for, evaluate_block, solve_block};
use minci::determinant::{enumerate_space, labeled_spectrum};
use minci::integrals::compute_integrals;
use minci::orbitals::DilationParams;
use minci::reference::{atom_name, atom_number};

fn main() -> Result<(), minci::Error> {
    let atom = std::env::args().nth(1).unwrap_or_else(|| "N".into());
    let n = atom_number(&atom)?;
    if n < 3 {
        return Err(minci::Error::Usage("pick an atom with 3..=10 electrons".into()));
    }
    let z = n as f64;
    // deliberately unoptimized, asymmetric parameters
    let params = DilationParams::new(0.83 * z, 0.59 * z, 0.47 * z)?;
    let ints = compute_integrals(z, &params)?;

    let dets = enumerate_space(n)?;
    println!(
        "{}: {} determinants with a filled 1s shell at params ({:.3}, {:.3}, {:.3})",
        atom_name(n)?,
        dets.len(),
        params.z1,
        params.z2,
        params.z3
    );
    println!("first few: {} {} {}", dets[0], dets[1], dets[2]);

    // block route: analytic 1x1/2x2 eigenvalues
    let mut expected = Vec::new();
    for b in blocks_for(n)? {
        for root in solve_block(&evaluate_block(&b, &ints)) {
            expected.push((b.label.ascii(), root.energy, b.label.degeneracy()));
        }
    }
    expected.sort_by(|a, b| a.1.total_cmp(&b.1));

    // determinant route: diagonalize and label eigenspaces
    let levels = labeled_spectrum(n, &ints)?;

    println!("\n{:<6} {:>16} {:>16} {:>11} {:>4}", "term", "block route", "determinant", "dev", "deg");
    for (lv, (term, energy, deg)) in levels.iter().zip(&expected) {
        assert_eq!(&lv.label.ascii(), term);
        assert_eq!(lv.degeneracy, *deg);
        println!(
            "{:<6} {:>16.10} {:>16.10} {:>11.1e} {:>4}",
            term,
            energy,
            lv.energy,
            (lv.energy - energy).abs(),
            lv.degeneracy
        );
    }
    let total: usize = levels.iter().map(|l| l.degeneracy).sum();
    println!("\ndegeneracies sum to {total} = dim of the model space");
    Ok(())
}
