//! Recompute every tabulated energy level of Li..Ne and report the
//! deviation from the embedded reference dataset.
//!
//!     cargo run --release --example reproduce_reference_tables

use std::time::Instant;

use minci::blocks::Root;
use minci::reference::{atom_name, reference};
use minci::spectra::atom_spectrum;

fn main() -> Result<(), minci::Error> {
    let start = Instant::now();
    let data = reference();

    let mut worst_e: f64 = 0.0;
    let mut worst_z: f64 = 0.0;
    let mut rows = 0;

    for n in 3..=10usize {
        println!("--- {} ---", atom_name(n)?);
        let spectrum = atom_spectrum(n, n as f64)?;
        for r in data.levels_for(n) {
            let level = spectrum
                .levels
                .iter()
                .find(|l| l.term.ascii() == r.term && (l.root == Root::Upper) == r.upper)
                .expect("tabulated level present");
            let de = level.energy_ci - r.e_ci;
            let dz1 = level.params_star.z1 - r.z1;
            println!(
                "{:<4}{} E = {:>10.4} (dev {:+.1e})   Z1 dev {:+.1e}",
                r.term,
                if r.upper { "*" } else { " " },
                level.energy_ci,
                de,
                dz1,
            );
            worst_e = worst_e.max(de.abs());
            worst_z = worst_z.max(dz1.abs());
            rows += 1;
        }
    }

    println!(
        "\n{rows} levels recomputed in {:.2}s; worst energy deviation {worst_e:.1e} Ha, \
         worst Z1 deviation {worst_z:.1e}",
        start.elapsed().as_secs_f64()
    );
    Ok(())
}
