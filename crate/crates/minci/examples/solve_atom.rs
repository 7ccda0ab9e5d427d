//! Solve a single atom from first principles, walking the full pipeline:
//! symmetry blocks -> closed-form integrals -> variational screening
//! parameters -> spectrum.
//!
//!     cargo run --release --example solve_atom [atom]

use minci::blocks::blocks_for;
use minci::optimize::optimize_subspace;
use minci::reference::{atom_name, atom_number};
use minci::spectra::atom_spectrum;

fn main() -> Result<(), minci::Error> {
    let atom = std::env::args().nth(1).unwrap_or_else(|| "C".into());
    let n = atom_number(&atom)?;
    let z = n as f64;

    // the spectrum in one call
    let spectrum = atom_spectrum(n, z)?;
    println!("{} (N={n}, Z={z}): {} levels", atom_name(n)?, spectrum.levels.len());
    println!(
        "{:<5} {:>12} {:>8} {:>8} {:>8} {:>9} {:>9}",
        "term", "E [Ha]", "Z1", "Z2", "Z3", "c", "gap"
    );
    for level in &spectrum.levels {
        let fmt_opt = |active: bool, v: f64| {
            if active {
                format!("{v:8.4}")
            } else {
                " ".repeat(8)
            }
        };
        println!(
            "{:<5} {:>12.4} {:>8.4} {} {} {:>9} {:>9.4}",
            level.term.ascii(),
            level.energy_ci,
            level.params_star.z1,
            fmt_opt(level.active.z2, level.params_star.z2),
            fmt_opt(level.active.z3, level.params_star.z3),
            level.mixing_c.map(|c| format!("{c:9.4}")).unwrap_or_default(),
            level.gap,
        );
    }

    // or piece by piece, for one symmetry subspace
    if n >= 3 {
        let block = &blocks_for(n)?[0];
        let result = optimize_subspace(n, z, block)?;
        println!(
            "\n{} block, dimension {}: E = {:.6} after {} iterations (gradient {:.1e})",
            block.label.ascii(),
            block.dimension(),
            result.energy(),
            result.iterations,
            result.grad_norm,
        );
        println!("<H>11 = {}", block.diagonal[0].render());
    }
    Ok(())
}
