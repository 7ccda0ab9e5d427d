//! Level crossing along the carbon isoelectronic sequence: the 3So-1Do
//! energy difference is nonlinear in Z because each level carries its own
//! minimizing screening parameters, and it changes sign.
//!
//!     cargo run --release --example level_crossing

use minci::blocks::SymmetryLabel;
use minci::spectra::isoelectronic_scan;

fn main() -> Result<(), minci::Error> {
    let terms = (SymmetryLabel::parse("3So")?, SymmetryLabel::parse("1Do")?);
    let zs: Vec<f64> = (6..=28).map(f64::from).collect();
    let points = isoelectronic_scan(6, &zs, terms)?;

    println!("{:>4} {:>16} {:>16} {:>12}", "Z", "E(3So)", "E(1Do)", "diff");
    let mut crossing = None;
    for pair in points.windows(2) {
        let p = &pair[0];
        println!("{:>4} {:>16.6} {:>16.6} {:>+12.6}", p.z, p.e_first, p.e_second, p.diff);
        if p.diff > 0.0 && pair[1].diff < 0.0 {
            // linear interpolation of the crossing point
            crossing = Some(p.z + p.diff / (p.diff - pair[1].diff));
        }
    }
    let last = points.last().expect("nonempty scan");
    println!("{:>4} {:>16.6} {:>16.6} {:>+12.6}", last.z, last.e_first, last.e_second, last.diff);

    match crossing {
        Some(zc) => println!("\nsign change bracketed; interpolated crossing at Z ≈ {zc:.2}"),
        None => println!("\nno crossing inside the scanned range"),
    }
    Ok(())
}
