//! First ionization energies I(N, N) across the neutral sequence, with
//! the characteristic zig-zag landscape.
//!
//!     cargo run --release --example ionization_curve

use minci::reference::{atom_name, reference};
use minci::spectra::ionization_energy;

fn main() -> Result<(), minci::Error> {
    let data = reference();
    println!("{:>4} {:>10} {:>10}  landscape", "atom", "I [Ha]", "I_exp");
    let mut values = Vec::new();
    for n in 1..=10usize {
        values.push(ionization_energy(n, n as f64)?);
    }
    for n in 1..=10usize {
        let atom = atom_name(n)?;
        let i = values[n - 1];
        let marker = if n > 1 && n < 10 {
            if i < values[n - 2] && i < values[n] {
                "local minimum"
            } else if i > values[n - 2] && i > values[n] {
                "local maximum"
            } else {
                ""
            }
        } else {
            ""
        };
        let exp = data
            .ionization
            .exp
            .get(atom)
            .map(|v| format!("{v:10.4}"))
            .unwrap_or_else(|| " ".repeat(10));
        let bar = "#".repeat((i * 40.0) as usize);
        println!("{atom:>4} {i:>10.4} {exp}  {bar} {marker}");
    }
    Ok(())
}
