//! The fourteen canonical integrals three ways: closed form, exact
//! rationals at uniform screening, and the independent radial-quadrature
//! oracle.
//!
//!     cargo run --release --example closed_form_integrals

use minci::integrals::{
    compute_integrals, pt_integrals, pt_rational, quadrature_integral, IntegralSymbol,
};
use minci::orbitals::DilationParams;

fn main() -> Result<(), minci::Error> {
    // lithium ground-state screening parameters
    let z = 3.0;
    let params = DilationParams::new(2.6937, 1.5334, 1.0458)?;
    let ints = compute_integrals(z, &params)?;

    println!("closed forms vs quadrature oracle at Z1={}, Z2={}, Z3={}:", params.z1, params.z2, params.z3);
    for sym in IntegralSymbol::ALL {
        match sym.representative() {
            Some([a, b, c, d]) => {
                let oracle = quadrature_integral(a, b, c, d, &params)?;
                let rel = (ints.get(sym) - oracle).abs() / oracle;
                println!("{:8} = {:>14.10}   oracle {:>14.10}   rel dev {:.1e}", sym.notation(), ints.get(sym), oracle, rel);
            }
            None => println!("{:8} = {:>14.10}   (one-body)", sym.notation(), ints.get(sym)),
        }
    }

    println!("\nuniform screening at Z = {z}: exact rationals");
    let pt = pt_integrals(z)?;
    for sym in IntegralSymbol::ALL {
        let (q, pow) = pt_rational(sym);
        println!(
            "{:8} = {} · Z{} = {:.10}",
            sym.notation(),
            q,
            if pow == 2 { "²" } else { " " },
            pt.get(sym)
        );
    }
    Ok(())
}
