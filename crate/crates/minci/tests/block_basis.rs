//! The basis strings attached to each symmetry block are real data: parsed
//! back into vectors over the determinant basis, they must be normalized,
//! reproduce the symbolic matrix elements entry by entry, and be joint
//! eigenvectors of L², S², L3, S3 and parity with the block's quantum
//! numbers (in the S3-maximal, L3 = 0 slice).

use minci::blocks::{blocks_for, evaluate_block};
use minci::determinant::{
    build_operator, enumerate_space, hamiltonian_matrix, Determinant, OperatorTag, Spin,
    SpinOrbital,
};
use minci::integrals::compute_integrals;
use minci::orbitals::{DilationParams, OrbitalId};

use nalgebra::{Complex, DVector};

/// Parse one ket like `|1 1b 2>` into (determinant, permutation sign).
fn parse_ket(s: &str) -> (Determinant, i32) {
    let inner = s
        .strip_prefix('|')
        .and_then(|s| s.strip_suffix('>'))
        .unwrap_or_else(|| panic!("malformed ket '{s}'"));
    let orbs: Vec<SpinOrbital> = inner
        .split_whitespace()
        .map(|tok| {
            let (digit, down) = match tok.strip_suffix('b') {
                Some(d) => (d, true),
                None => (tok, false),
            };
            let index: usize = digit.parse().unwrap_or_else(|_| panic!("bad token '{tok}'"));
            SpinOrbital {
                orbital: OrbitalId::from_index(index).expect("orbital index"),
                spin: if down { Spin::Down } else { Spin::Up },
            }
        })
        .collect();
    Determinant::from_spin_orbitals(&orbs).expect("distinct spin-orbitals")
}

/// Parse a basis string into a normalized vector over `dets`.
///
/// Grammar: either a bare ket, or `(1/sqrtN)(c1|..> ± c2|..> ± ...)` with
/// optional integer multipliers, or `(1/2)(...)`.
fn parse_basis(s: &str, dets: &[Determinant]) -> DVector<f64> {
    let index_of = |d: Determinant| {
        dets.iter()
            .position(|x| x.mask() == d.mask())
            .unwrap_or_else(|| panic!("{d} outside the model space"))
    };
    let mut v = DVector::zeros(dets.len());

    let body = if let Some(rest) = s.strip_prefix('(') {
        // split "(prefix)(sum)" at the first closing paren
        let close = rest.find(')').expect("closing paren");
        let prefix = &rest[..close];
        let sum = rest[close + 1..]
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .expect("parenthesized sum");
        let norm: f64 = match prefix {
            "1/2" => 0.5,
            p => {
                let n: f64 = p.strip_prefix("1/sqrt").expect("sqrt prefix").parse().unwrap();
                1.0 / n.sqrt()
            }
        };
        let mut sign = 1.0;
        for piece in sum.split_inclusive(['+', '-']) {
            let (term, next_sign) = match piece.strip_suffix('+') {
                Some(t) => (t, 1.0),
                None => match piece.strip_suffix('-') {
                    Some(t) => (t, -1.0),
                    None => (piece, 0.0),
                },
            };
            let term = term.trim();
            if !term.is_empty() {
                let (coeff, ket) = match term.find('|') {
                    Some(0) => (1.0, term),
                    Some(i) => (term[..i].parse::<f64>().expect("multiplier"), &term[i..]),
                    None => panic!("no ket in '{term}'"),
                };
                let (det, perm) = parse_ket(ket);
                v[index_of(det)] += sign * coeff * norm * perm as f64;
            }
            sign = next_sign;
        }
        return v;
    } else {
        s
    };
    let (det, perm) = parse_ket(body);
    v[index_of(det)] = perm as f64;
    v
}

#[test]
fn basis_strings_reproduce_matrix_elements_and_quantum_numbers() {
    let params = DilationParams::new(4.3, 2.9, 2.1).unwrap();
    for n in 3..=10usize {
        let ints = compute_integrals(n as f64 + 0.7, &params).unwrap();
        let dets = enumerate_space(n).unwrap();
        let h = hamiltonian_matrix(&dets, &ints);
        let ops: Vec<(OperatorTag, _)> = [
            OperatorTag::LSquared,
            OperatorTag::SSquared,
            OperatorTag::L3,
            OperatorTag::S3,
            OperatorTag::Parity,
        ]
        .into_iter()
        .map(|t| (t, build_operator(t, n).unwrap().matrix))
        .collect();

        for block in blocks_for(n).unwrap() {
            let vectors: Vec<DVector<f64>> =
                block.basis.iter().map(|s| parse_basis(s, &dets)).collect();
            let m = evaluate_block(&block, &ints);

            for (i, vi) in vectors.iter().enumerate() {
                assert!((vi.norm() - 1.0).abs() < 1e-12, "N={n} {} psi{}", block.label, i + 1);

                // symbolic diagonal and cross entries
                let hii = (vi.transpose() * &h * vi)[(0, 0)];
                let expect = if i == 0 { m.h11 } else { m.h22 };
                assert!(
                    (hii - expect).abs() < 1e-10 * (1.0 + expect.abs()),
                    "N={n} {} <H>{i}{i}: {hii} vs {expect}",
                    block.label
                );

                // joint eigenvector of the symmetry family, maximal S3, L3 = 0
                let vc = vi.map(|x| Complex::new(x, 0.0));
                let expectations: Vec<f64> = ops
                    .iter()
                    .map(|(_, op)| {
                        let val = (vc.adjoint() * op * &vc)[(0, 0)];
                        assert!(val.im.abs() < 1e-12);
                        val.re
                    })
                    .collect();
                let label = block.label;
                let s = label.two_s as f64 / 2.0;
                let want = [
                    label.l_squared(),
                    label.s_squared(),
                    0.0,
                    s,
                    label.parity as f64,
                ];
                for ((got, want), (tag, op)) in
                    expectations.iter().zip(want).zip(&ops)
                {
                    assert!(
                        (got - want).abs() < 1e-10,
                        "N={n} {} psi{}: <{tag:?}> = {got}, want {want}",
                        block.label,
                        i + 1
                    );
                    // expectation alone is not enough; require eigenvector
                    let residual = (op * &vc - vc.scale(want)).norm();
                    assert!(
                        residual < 1e-10,
                        "N={n} {} psi{}: {tag:?} residual {residual}",
                        block.label,
                        i + 1
                    );
                }
            }

            if block.dimension() == 2 {
                let cross = (vectors[0].transpose() * &h * &vectors[1])[(0, 0)];
                let expect = m.h12;
                assert!(
                    (cross - expect).abs() < 1e-10 * (1.0 + expect.abs()),
                    "N={n} {} cross: {cross} vs {expect}",
                    block.label
                );
                assert!(vectors[0].dot(&vectors[1]).abs() < 1e-12);
            }
        }
    }
}
