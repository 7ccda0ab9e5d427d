//! Symmetry-adapted Hamiltonian blocks for the atoms with 3 to 10
//! electrons.
//!
//! Restricted to maximal S3 and L3 = 0, the projected Hamiltonian decouples
//! into 1x1 and 2x2 blocks, one per (L, S, parity) symmetry subspace. The
//! matrix elements are linear combinations of the fourteen canonical
//! integrals with small integer coefficients (cross terms pick up √2 or √3
//! factors from the normalization of the basis combinations). The
//! coefficients are stored as static data and independently re-derived by
//! the determinant oracle in [`crate::determinant`], so a transcription
//! slip cannot survive the test suite.

use num_rational::Rational64;
use serde::Serialize;

use crate::integrals::{IntegralSet, IntegralSymbol};
use crate::{Error, Result};

/// Spin/angular-momentum/parity labels of a symmetry subspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SymmetryLabel {
    /// Total orbital angular momentum quantum number L.
    pub l: u32,
    /// Twice the total spin (2S), so half-integral spins stay integral.
    pub two_s: u32,
    /// Spatial parity, +1 or -1.
    pub parity: i8,
}

impl SymmetryLabel {
    pub fn new(l: u32, two_s: u32, parity: i8) -> Self {
        debug_assert!(parity == 1 || parity == -1);
        Self { l, two_s, parity }
    }

    fn letter(self) -> char {
        match self.l {
            0 => 'S',
            1 => 'P',
            2 => 'D',
            3 => 'F',
            _ => 'X',
        }
    }

    /// Term symbol with the degree sign for odd parity, e.g. `2P°`.
    pub fn term(self) -> String {
        let odd = if self.parity < 0 { "°" } else { "" };
        format!("{}{}{}", self.two_s + 1, self.letter(), odd)
    }

    /// ASCII form used on the command line, e.g. `2Po`.
    pub fn ascii(self) -> String {
        let odd = if self.parity < 0 { "o" } else { "" };
        format!("{}{}{}", self.two_s + 1, self.letter(), odd)
    }

    /// Parse the ASCII form: multiplicity digits, then S/P/D, then an
    /// optional `o` marking odd parity.
    pub fn parse(s: &str) -> Result<Self> {
        let err =
            || Error::Usage(format!("cannot parse term symbol '{s}' (expected e.g. 2S, 3Po, 1D)"));
        let letter_pos = s.find(|c: char| c.is_ascii_alphabetic()).ok_or_else(err)?;
        let (mult, rest) = s.split_at(letter_pos);
        let mult: u32 = mult.parse().map_err(|_| err())?;
        if mult == 0 {
            return Err(err());
        }
        let mut chars = rest.chars();
        let l = match chars.next() {
            Some('S' | 's') => 0,
            Some('P' | 'p') => 1,
            Some('D' | 'd') => 2,
            _ => return Err(err()),
        };
        let parity = match chars.next() {
            None => 1,
            Some('o' | 'O') if chars.next().is_none() => -1,
            _ => return Err(err()),
        };
        Ok(Self::new(l, mult - 1, parity))
    }

    /// Dimension of the full term: (2S+1)(2L+1).
    pub fn degeneracy(self) -> usize {
        ((self.two_s + 1) * (2 * self.l + 1)) as usize
    }

    /// Eigenvalue L(L+1) of the total angular momentum squared.
    pub fn l_squared(self) -> f64 {
        (self.l * (self.l + 1)) as f64
    }

    /// Eigenvalue S(S+1) of the total spin squared.
    pub fn s_squared(self) -> f64 {
        let s = self.two_s as f64 / 2.0;
        s * (s + 1.0)
    }
}

impl std::fmt::Display for SymmetryLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.ascii())
    }
}

/// Optional radical factor on a coefficient; only cross terms carry one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Radical {
    One,
    Sqrt2,
    Sqrt3,
}

impl Radical {
    pub fn value(self) -> f64 {
        match self {
            Radical::One => 1.0,
            Radical::Sqrt2 => std::f64::consts::SQRT_2,
            Radical::Sqrt3 => 1.732_050_807_568_877_2,
        }
    }
}

/// A matrix element as an exact linear combination of integral symbols.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicEnergy {
    pub terms: Vec<(Rational64, Radical, IntegralSymbol)>,
}

impl SymbolicEnergy {
    fn from_ints(terms: &[(i64, IntegralSymbol)]) -> Self {
        Self {
            terms: terms
                .iter()
                .map(|&(c, s)| (Rational64::from_integer(c), Radical::One, s))
                .collect(),
        }
    }

    fn single(c: i64, radical: Radical, sym: IntegralSymbol) -> Self {
        Self {
            terms: vec![(Rational64::from_integer(c), radical, sym)],
        }
    }

    pub fn eval(&self, ints: &IntegralSet) -> f64 {
        self.terms
            .iter()
            .map(|&(c, rad, sym)| {
                (*c.numer() as f64 / *c.denom() as f64) * rad.value() * ints.get(sym)
            })
            .sum()
    }

    /// Text rendering in the conventional notation, e.g.
    /// `2(1|1) + (2|2) + (11|11) + 2(11|22) - (12|21)`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, (c, rad, sym)) in self.terms.iter().enumerate() {
            let coeff = *c.numer();
            debug_assert_eq!(*c.denom(), 1);
            let mag = coeff.abs();
            if i == 0 {
                if coeff < 0 {
                    out.push('-');
                }
            } else if coeff < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let rad_str = match rad {
                Radical::One => "",
                Radical::Sqrt2 => "sqrt2 ",
                Radical::Sqrt3 => "sqrt3 ",
            };
            if mag != 1 {
                out.push_str(&format!("{mag}{rad_str}{}", sym.notation()));
            } else {
                out.push_str(&format!("{rad_str}{}", sym.notation()));
            }
        }
        out
    }
}

/// One invariant block of the projected Hamiltonian for one atom.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryBlock {
    /// Electron count of the atom this block belongs to.
    pub n: usize,
    pub label: SymmetryLabel,
    /// Diagonal matrix elements, one per basis state (1 or 2).
    pub diagonal: Vec<SymbolicEnergy>,
    /// Off-diagonal element of a 2x2 block.
    pub cross: Option<SymbolicEnergy>,
    /// Human-readable determinant combinations spanning the block, in the
    /// S3-maximal, L3 = 0 slice. A `b` suffix marks a spin-down orbital.
    pub basis: Vec<&'static str>,
}

impl SymmetryBlock {
    pub fn dimension(&self) -> usize {
        self.diagonal.len()
    }

    fn touches(&self, pred: impl Fn(IntegralSymbol) -> bool + Copy) -> bool {
        self.diagonal
            .iter()
            .chain(self.cross.iter())
            .any(|e| e.terms.iter().any(|&(_, _, s)| pred(s)))
    }

    /// Whether the 2s screening parameter enters any matrix element.
    pub fn uses_2s(&self) -> bool {
        use IntegralSymbol::*;
        self.touches(|s| matches!(s, H2s | J1s2s | K1s2s | J2s2s | J2s2p | K2s2p))
    }

    /// Whether the 2p screening parameter enters any matrix element.
    pub fn uses_2p(&self) -> bool {
        use IntegralSymbol::*;
        self.touches(|s| {
            matches!(s, H2p | J1s2p | K1s2p | J2s2p | K2s2p | J2p2p | J2p2pCross | K2p2p)
        })
    }
}

/// Numeric 1x1 or 2x2 symmetric block matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockMatrix {
    pub dim: usize,
    pub h11: f64,
    pub h22: f64,
    pub h12: f64,
}

impl BlockMatrix {
    pub fn one(h11: f64) -> Self {
        Self {
            dim: 1,
            h11,
            h22: 0.0,
            h12: 0.0,
        }
    }

    pub fn two(h11: f64, h22: f64, h12: f64) -> Self {
        Self {
            dim: 2,
            h11,
            h22,
            h12,
        }
    }
}

/// Which root of a 2x2 block an eigenpair describes. 1x1 blocks only have
/// a lower root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Root {
    Lower,
    Upper,
}

/// An eigenvalue of a block with its normalized eigenvector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlockEigenpair {
    pub energy: f64,
    /// Normalized coefficients over the block basis; `[1, 0]` for 1x1.
    pub coefficients: [f64; 2],
    /// Mixing coefficient c of the second basis state relative to the
    /// first: the state is (Ψ1 + c Ψ2)/sqrt(1+c²). `None` for 1x1 blocks
    /// and for the pure-Ψ2 state of a decoupled 2x2.
    pub mixing_c: Option<f64>,
    pub root: Root,
}

/// Evaluate a block against a set of integrals.
pub fn evaluate_block(block: &SymmetryBlock, ints: &IntegralSet) -> BlockMatrix {
    match block.dimension() {
        1 => BlockMatrix::one(block.diagonal[0].eval(ints)),
        _ => BlockMatrix::two(
            block.diagonal[0].eval(ints),
            block.diagonal[1].eval(ints),
            block
                .cross
                .as_ref()
                .expect("2x2 block has a cross term")
                .eval(ints),
        ),
    }
}

/// Analytic eigenvalues and eigenvectors, ascending in energy.
///
/// For a 2x2 the roots are `(h11+h22)/2 ± sqrt(((h11-h22)/2)² + h12²)` and
/// the mixing coefficients `c± = ((h22-h11)/2 ± sqrt(...))/h12` satisfy
/// `c+ c- = -1`. For `h12 = 0` the basis states are returned ordered by
/// diagonal value, with c = 0 for the pure-Ψ1 state.
pub fn solve_block(m: &BlockMatrix) -> Vec<BlockEigenpair> {
    if m.dim == 1 {
        return vec![BlockEigenpair {
            energy: m.h11,
            coefficients: [1.0, 0.0],
            mixing_c: None,
            root: Root::Lower,
        }];
    }
    if m.h12 == 0.0 {
        let psi1 = BlockEigenpair {
            energy: m.h11,
            coefficients: [1.0, 0.0],
            mixing_c: Some(0.0),
            root: if m.h11 <= m.h22 { Root::Lower } else { Root::Upper },
        };
        let psi2 = BlockEigenpair {
            energy: m.h22,
            coefficients: [0.0, 1.0],
            mixing_c: None,
            root: if m.h11 <= m.h22 { Root::Upper } else { Root::Lower },
        };
        return if m.h11 <= m.h22 {
            vec![psi1, psi2]
        } else {
            vec![psi2, psi1]
        };
    }
    let mean = 0.5 * (m.h11 + m.h22);
    let half_gap = 0.5 * (m.h22 - m.h11);
    let disc = (half_gap * half_gap + m.h12 * m.h12).sqrt();
    // c± = (half_gap ± disc)/h12; evaluate the larger-magnitude root
    // directly and the other through c+ c- = -1, which avoids the
    // cancellation in half_gap ∓ disc for small h12
    let c_big = (half_gap + half_gap.signum() * disc) / m.h12;
    let (c_lo, c_hi) = if half_gap >= 0.0 {
        (-1.0 / c_big, c_big)
    } else {
        (c_big, -1.0 / c_big)
    };
    let make = |sign: f64, c: f64, root: Root| {
        let norm = (1.0 + c * c).sqrt();
        BlockEigenpair {
            energy: mean + sign * disc,
            coefficients: [1.0 / norm, c / norm],
            mixing_c: Some(c),
            root,
        }
    };
    vec![make(-1.0, c_lo, Root::Lower), make(1.0, c_hi, Root::Upper)]
}

/// All symmetry blocks of the N-electron atom, N in 3..=10, exactly as
/// they appear in the block decomposition of the projected Hamiltonian.
pub fn blocks_for(n: usize) -> Result<Vec<SymmetryBlock>> {
    use IntegralSymbol::*;
    use Radical::*;

    let lab = SymmetryLabel::new;
    let diag = SymbolicEnergy::from_ints;
    let one = |n: usize,
               label: SymmetryLabel,
               terms: &[(i64, IntegralSymbol)],
               basis: &'static str| SymmetryBlock {
        n,
        label,
        diagonal: vec![diag(terms)],
        cross: None,
        basis: vec![basis],
    };
    let two = |n: usize,
               label: SymmetryLabel,
               d1: &[(i64, IntegralSymbol)],
               d2: &[(i64, IntegralSymbol)],
               cross: (i64, Radical),
               basis: [&'static str; 2]| SymmetryBlock {
        n,
        label,
        diagonal: vec![diag(d1), diag(d2)],
        cross: Some(SymbolicEnergy::single(cross.0, cross.1, K2s2p)),
        basis: basis.to_vec(),
    };

    let blocks = match n {
        3 => vec![
            one(
                3,
                lab(0, 1, 1),
                &[(2, H1s), (1, H2s), (1, J1s1s), (2, J1s2s), (-1, K1s2s)],
                "|1 1b 2>",
            ),
            one(
                3,
                lab(1, 1, -1),
                &[(2, H1s), (1, H2p), (1, J1s1s), (2, J1s2p), (-1, K1s2p)],
                "|1 1b 3>",
            ),
        ],
        4 => vec![
            two(
                4,
                lab(0, 0, 1),
                &[(2, H1s), (2, H2s), (1, J1s1s), (4, J1s2s), (-2, K1s2s), (1, J2s2s)],
                &[(2, H1s), (2, H2p), (1, J1s1s), (4, J1s2p), (-2, K1s2p), (1, J2p2p), (2, K2p2p)],
                (1, Sqrt3),
                ["|1 1b 2 2b>", "(1/sqrt3)(|1 1b 3 3b> + |1 1b 4 4b> + |1 1b 5 5b>)"],
            ),
            one(
                4,
                lab(1, 0, -1),
                &[
                    (2, H1s), (1, H2s), (1, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (2, J1s2p), (-1, K1s2p), (1, J2s2p), (1, K2s2p),
                ],
                "(1/sqrt2)(|1 1b 2 3b> - |1 1b 2b 3>)",
            ),
            one(
                4,
                lab(1, 2, -1),
                &[
                    (2, H1s), (1, H2s), (1, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (2, J1s2p), (-1, K1s2p), (1, J2s2p), (-1, K2s2p),
                ],
                "|1 1b 2 3>",
            ),
            one(
                4,
                lab(1, 2, 1),
                &[
                    (2, H1s), (2, H2p), (1, J1s1s), (4, J1s2p), (-2, K1s2p),
                    (1, J2p2pCross), (-1, K2p2p),
                ],
                "|1 1b 4 5>",
            ),
            one(
                4,
                lab(2, 0, 1),
                &[
                    (2, H1s), (2, H2p), (1, J1s1s), (4, J1s2p), (-2, K1s2p),
                    (1, J2p2p), (-1, K2p2p),
                ],
                "(1/sqrt6)(2|1 1b 3 3b> - |1 1b 4 4b> - |1 1b 5 5b>)",
            ),
        ],
        5 => vec![
            one(
                5,
                lab(0, 1, 1),
                &[
                    (2, H1s), (1, H2s), (2, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (4, J1s2p), (-2, K1s2p), (2, J2s2p), (-1, K2s2p), (1, J2p2p), (2, K2p2p),
                ],
                "(1/sqrt3)(|1 1b 2 3 3b> + |1 1b 2 4 4b> + |1 1b 2 5 5b>)",
            ),
            one(
                5,
                lab(0, 3, -1),
                &[
                    (2, H1s), (3, H2p), (1, J1s1s), (6, J1s2p), (-3, K1s2p),
                    (3, J2p2pCross), (-3, K2p2p),
                ],
                "|1 1b 3 4 5>",
            ),
            two(
                5,
                lab(1, 1, -1),
                &[
                    (2, H1s), (2, H2s), (1, H2p), (1, J1s1s), (4, J1s2s), (-2, K1s2s),
                    (2, J1s2p), (-1, K1s2p), (1, J2s2s), (2, J2s2p), (-1, K2s2p),
                ],
                &[
                    (2, H1s), (3, H2p), (1, J1s1s), (6, J1s2p), (-3, K1s2p),
                    (1, J2p2p), (2, J2p2pCross),
                ],
                (1, Sqrt2),
                ["|1 1b 2 2b 3>", "(1/sqrt2)(|1 1b 3 4 4b> + |1 1b 3 5 5b>)"],
            ),
            one(
                5,
                lab(1, 1, 1),
                &[
                    (2, H1s), (1, H2s), (2, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (4, J1s2p), (-2, K1s2p), (2, J2s2p), (1, K2s2p),
                    (1, J2p2pCross), (-1, K2p2p),
                ],
                "(1/sqrt6)(2|1 1b 2b 4 5> - |1 1b 2 4b 5> - |1 1b 2 4 5b>)",
            ),
            one(
                5,
                lab(1, 3, 1),
                &[
                    (2, H1s), (1, H2s), (2, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (4, J1s2p), (-2, K1s2p), (2, J2s2p), (-2, K2s2p),
                    (1, J2p2pCross), (-1, K2p2p),
                ],
                "|1 1b 2 4 5>",
            ),
            one(
                5,
                lab(2, 1, 1),
                &[
                    (2, H1s), (1, H2s), (2, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (4, J1s2p), (-2, K1s2p), (2, J2s2p), (-1, K2s2p),
                    (1, J2p2p), (-1, K2p2p),
                ],
                "(1/sqrt6)(2|1 1b 2 3 3b> - |1 1b 2 4 4b> - |1 1b 2 5 5b>)",
            ),
            one(
                5,
                lab(2, 1, -1),
                &[
                    (2, H1s), (3, H2p), (1, J1s1s), (6, J1s2p), (-3, K1s2p),
                    (3, J2p2pCross),
                ],
                "(1/sqrt6)(2|1 1b 3b 4 5> - |1 1b 3 4b 5> - |1 1b 3 4 5b>)",
            ),
        ],
        6 => vec![
            two(
                6,
                lab(0, 0, 1),
                &[
                    (2, H1s), (2, H2s), (2, H2p), (1, J1s1s), (4, J1s2s), (-2, K1s2s),
                    (4, J1s2p), (-2, K1s2p), (1, J2s2s), (4, J2s2p), (-2, K2s2p),
                    (1, J2p2p), (2, K2p2p),
                ],
                &[
                    (2, H1s), (4, H2p), (1, J1s1s), (8, J1s2p), (-4, K1s2p),
                    (2, J2p2p), (4, J2p2pCross),
                ],
                (2, One),
                [
                    "(1/sqrt3)(|1 1b 2 2b 3 3b> + |1 1b 2 2b 4 4b> + |1 1b 2 2b 5 5b>)",
                    "(1/sqrt3)(|1 1b 3 3b 4 4b> + |1 1b 3 3b 5 5b> + |1 1b 4 4b 5 5b>)",
                ],
            ),
            one(
                6,
                lab(0, 2, -1),
                &[
                    (2, H1s), (1, H2s), (3, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (6, J1s2p), (-3, K1s2p), (3, J2s2p), (1, K2s2p),
                    (3, J2p2pCross), (-3, K2p2p),
                ],
                "(1/sqrt12)(3|1 1b 2b 3 4 5> - |1 1b 2 3b 4 5> - |1 1b 2 3 4b 5> - |1 1b 2 3 4 5b>)",
            ),
            one(
                6,
                lab(0, 4, -1),
                &[
                    (2, H1s), (1, H2s), (3, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (6, J1s2p), (-3, K1s2p), (3, J2s2p), (-3, K2s2p),
                    (3, J2p2pCross), (-3, K2p2p),
                ],
                "|1 1b 2 3 4 5>",
            ),
            one(
                6,
                lab(1, 0, -1),
                &[
                    (2, H1s), (1, H2s), (3, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (6, J1s2p), (-3, K1s2p), (3, J2s2p),
                    (1, J2p2p), (2, J2p2pCross),
                ],
                "(1/2)(|1 1b 2 3b 4 4b> - |1 1b 2b 3 4 4b> + |1 1b 2 3b 5 5b> - |1 1b 2b 3 5 5b>)",
            ),
            two(
                6,
                lab(1, 2, 1),
                &[
                    (2, H1s), (2, H2s), (2, H2p), (1, J1s1s), (4, J1s2s), (-2, K1s2s),
                    (4, J1s2p), (-2, K1s2p), (1, J2s2s), (4, J2s2p), (-2, K2s2p),
                    (1, J2p2pCross), (-1, K2p2p),
                ],
                &[
                    (2, H1s), (4, H2p), (1, J1s1s), (8, J1s2p), (-4, K1s2p),
                    (1, J2p2p), (5, J2p2pCross), (-3, K2p2p),
                ],
                (1, One),
                ["|1 1b 2 2b 4 5>", "|1 1b 3 3b 4 5>"],
            ),
            one(
                6,
                lab(1, 2, -1),
                &[
                    (2, H1s), (1, H2s), (3, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (6, J1s2p), (-3, K1s2p), (3, J2s2p), (-2, K2s2p),
                    (1, J2p2p), (2, J2p2pCross),
                ],
                "(1/sqrt2)(|1 1b 2 3 4 4b> + |1 1b 2 3 5 5b>)",
            ),
            two(
                6,
                lab(2, 0, 1),
                &[
                    (2, H1s), (2, H2s), (2, H2p), (1, J1s1s), (4, J1s2s), (-2, K1s2s),
                    (4, J1s2p), (-2, K1s2p), (1, J2s2s), (4, J2s2p), (-2, K2s2p),
                    (1, J2p2p), (-1, K2p2p),
                ],
                &[
                    (2, H1s), (4, H2p), (1, J1s1s), (8, J1s2p), (-4, K1s2p),
                    (2, J2p2p), (4, J2p2pCross), (-3, K2p2p),
                ],
                (-1, One),
                [
                    "(1/sqrt6)(2|1 1b 2 2b 3 3b> - |1 1b 2 2b 4 4b> - |1 1b 2 2b 5 5b>)",
                    "(1/sqrt6)(2|1 1b 4 4b 5 5b> - |1 1b 3 3b 4 4b> - |1 1b 3 3b 5 5b>)",
                ],
            ),
            one(
                6,
                lab(2, 0, -1),
                &[
                    (2, H1s), (1, H2s), (3, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (6, J1s2p), (-3, K1s2p), (3, J2s2p), (3, J2p2pCross),
                ],
                "(1/sqrt12)(2|1 1b 2 3 4b 5b> - |1 1b 2 3b 4 5b> - |1 1b 2 3b 4b 5> + 2|1 1b 2b 3b 4 5> - |1 1b 2b 3 4 5b> - |1 1b 2b 3 4b 5>)",
            ),
            one(
                6,
                lab(2, 2, -1),
                &[
                    (2, H1s), (1, H2s), (3, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (6, J1s2p), (-3, K1s2p), (3, J2s2p), (-2, K2s2p), (3, J2p2pCross),
                ],
                "(1/sqrt6)(2|1 1b 2 3b 4 5> - |1 1b 2 3 4 5b> - |1 1b 2 3 4b 5>)",
            ),
        ],
        7 => vec![
            one(
                7,
                lab(0, 1, 1),
                &[
                    (2, H1s), (1, H2s), (4, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (8, J1s2p), (-4, K1s2p), (4, J2s2p), (-2, K2s2p),
                    (2, J2p2p), (4, J2p2pCross),
                ],
                "(1/sqrt3)(|1 1b 2 3 3b 4 4b> + |1 1b 2 3 3b 5 5b> + |1 1b 2 4 4b 5 5b>)",
            ),
            one(
                7,
                lab(0, 3, -1),
                &[
                    (2, H1s), (2, H2s), (3, H2p), (1, J1s1s), (4, J1s2s), (-2, K1s2s),
                    (6, J1s2p), (-3, K1s2p), (1, J2s2s), (6, J2s2p), (-3, K2s2p),
                    (3, J2p2pCross), (-3, K2p2p),
                ],
                "|1 1b 2 2b 3 4 5>",
            ),
            two(
                7,
                lab(1, 1, -1),
                &[
                    (2, H1s), (2, H2s), (3, H2p), (1, J1s1s), (4, J1s2s), (-2, K1s2s),
                    (6, J1s2p), (-3, K1s2p), (1, J2s2s), (6, J2s2p), (-3, K2s2p),
                    (1, J2p2p), (2, J2p2pCross),
                ],
                &[
                    (2, H1s), (5, H2p), (1, J1s1s), (10, J1s2p), (-5, K1s2p),
                    (2, J2p2p), (8, J2p2pCross), (-4, K2p2p),
                ],
                (1, Sqrt2),
                [
                    "(1/sqrt2)(|1 1b 2 2b 3 4 4b> + |1 1b 2 2b 3 5 5b>)",
                    "|1 1b 3 4 4b 5 5b>",
                ],
            ),
            one(
                7,
                lab(1, 1, 1),
                &[
                    (2, H1s), (1, H2s), (4, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (8, J1s2p), (-4, K1s2p), (4, J2s2p),
                    (1, J2p2p), (5, J2p2pCross), (-3, K2p2p),
                ],
                "(1/sqrt6)(2|1 1b 2b 3 3b 4 5> - |1 1b 2 3 3b 4b 5> - |1 1b 2 3 3b 4 5b>)",
            ),
            one(
                7,
                lab(1, 3, 1),
                &[
                    (2, H1s), (1, H2s), (4, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (8, J1s2p), (-4, K1s2p), (4, J2s2p), (-3, K2s2p),
                    (1, J2p2p), (5, J2p2pCross), (-3, K2p2p),
                ],
                "|1 1b 2 3 3b 4 5>",
            ),
            one(
                7,
                lab(2, 1, -1),
                &[
                    (2, H1s), (2, H2s), (3, H2p), (1, J1s1s), (4, J1s2s), (-2, K1s2s),
                    (6, J1s2p), (-3, K1s2p), (1, J2s2s), (6, J2s2p), (-3, K2s2p),
                    (3, J2p2pCross),
                ],
                "(1/sqrt6)(2|1 1b 2 2b 3b 4 5> - |1 1b 2 2b 3 4 5b> - |1 1b 2 2b 3 4b 5>)",
            ),
            one(
                7,
                lab(2, 1, 1),
                &[
                    (2, H1s), (1, H2s), (4, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (8, J1s2p), (-4, K1s2p), (4, J2s2p), (-2, K2s2p),
                    (2, J2p2p), (4, J2p2pCross), (-3, K2p2p),
                ],
                "(1/sqrt6)(2|1 1b 2 4 4b 5 5b> - |1 1b 2 3 3b 4 4b> - |1 1b 2 3 3b 5 5b>)",
            ),
        ],
        8 => vec![
            two(
                8,
                lab(0, 0, 1),
                &[
                    (2, H1s), (2, H2s), (4, H2p), (1, J1s1s), (4, J1s2s), (-2, K1s2s),
                    (8, J1s2p), (-4, K1s2p), (1, J2s2s), (8, J2s2p), (-4, K2s2p),
                    (2, J2p2p), (4, J2p2pCross),
                ],
                &[
                    (2, H1s), (6, H2p), (1, J1s1s), (12, J1s2p), (-6, K1s2p),
                    (3, J2p2p), (12, J2p2pCross), (-6, K2p2p),
                ],
                (1, Sqrt3),
                [
                    "(1/sqrt3)(|1 1b 2 2b 3 3b 4 4b> + |1 1b 2 2b 3 3b 5 5b> + |1 1b 2 2b 4 4b 5 5b>)",
                    "|1 1b 3 3b 4 4b 5 5b>",
                ],
            ),
            one(
                8,
                lab(1, 0, -1),
                &[
                    (2, H1s), (1, H2s), (5, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (10, J1s2p), (-5, K1s2p), (5, J2s2p), (-1, K2s2p),
                    (2, J2p2p), (8, J2p2pCross), (-4, K2p2p),
                ],
                "(1/sqrt2)(|1 1b 2 3b 4 4b 5 5b> - |1 1b 2b 3 4 4b 5 5b>)",
            ),
            one(
                8,
                lab(1, 2, -1),
                &[
                    (2, H1s), (1, H2s), (5, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (10, J1s2p), (-5, K1s2p), (5, J2s2p), (-3, K2s2p),
                    (2, J2p2p), (8, J2p2pCross), (-4, K2p2p),
                ],
                "|1 1b 2 3 4 4b 5 5b>",
            ),
            one(
                8,
                lab(1, 2, 1),
                &[
                    (2, H1s), (2, H2s), (4, H2p), (1, J1s1s), (4, J1s2s), (-2, K1s2s),
                    (8, J1s2p), (-4, K1s2p), (1, J2s2s), (8, J2s2p), (-4, K2s2p),
                    (1, J2p2p), (5, J2p2pCross), (-3, K2p2p),
                ],
                "|1 1b 2 2b 3 3b 4 5>",
            ),
            one(
                8,
                lab(2, 0, 1),
                &[
                    (2, H1s), (2, H2s), (4, H2p), (1, J1s1s), (4, J1s2s), (-2, K1s2s),
                    (8, J1s2p), (-4, K1s2p), (1, J2s2s), (8, J2s2p), (-4, K2s2p),
                    (2, J2p2p), (4, J2p2pCross), (-3, K2p2p),
                ],
                "(1/sqrt6)(2|1 1b 2 2b 4 4b 5 5b> - |1 1b 2 2b 3 3b 4 4b> - |1 1b 2 2b 3 3b 5 5b>)",
            ),
        ],
        9 => vec![
            one(
                9,
                lab(0, 1, 1),
                &[
                    (2, H1s), (1, H2s), (6, H2p), (1, J1s1s), (2, J1s2s), (-1, K1s2s),
                    (12, J1s2p), (-6, K1s2p), (6, J2s2p), (-3, K2s2p),
                    (3, J2p2p), (12, J2p2pCross), (-6, K2p2p),
                ],
                "|1 1b 2 3 3b 4 4b 5 5b>",
            ),
            one(
                9,
                lab(1, 1, -1),
                &[
                    (2, H1s), (2, H2s), (5, H2p), (1, J1s1s), (4, J1s2s), (-2, K1s2s),
                    (10, J1s2p), (-5, K1s2p), (1, J2s2s), (10, J2s2p), (-5, K2s2p),
                    (2, J2p2p), (8, J2p2pCross), (-4, K2p2p),
                ],
                "|1 1b 2 2b 3 4 4b 5 5b>",
            ),
        ],
        10 => vec![one(
            10,
            lab(0, 0, 1),
            &[
                (2, H1s), (2, H2s), (6, H2p), (1, J1s1s), (4, J1s2s), (-2, K1s2s),
                (12, J1s2p), (-6, K1s2p), (1, J2s2s), (12, J2s2p), (-6, K2s2p),
                (3, J2p2p), (12, J2p2pCross), (-6, K2p2p),
            ],
            "|1 1b 2 2b 3 3b 4 4b 5 5b>",
        )],
        _ => {
            return Err(Error::Domain(format!(
                "symmetry blocks are tabulated for 3..=10 electrons, got {n}"
            )))
        }
    };
    Ok(blocks)
}

/// Ground-state symmetry label of the neutral N-electron atom, N in 1..=10.
pub fn ground_label(n: usize) -> Result<SymmetryLabel> {
    Ok(match n {
        1 | 3 => SymmetryLabel::new(0, 1, 1),      // 2S
        2 | 4 | 10 => SymmetryLabel::new(0, 0, 1), // 1S
        5 | 9 => SymmetryLabel::new(1, 1, -1),     // 2Po
        6 | 8 => SymmetryLabel::new(1, 2, 1),      // 3P
        7 => SymmetryLabel::new(0, 3, -1),         // 4So
        _ => return Err(Error::Domain(format!("no atom with {n} electrons"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrals::{compute_integrals, pt_integrals};
    use crate::orbitals::DilationParams;
    use approx::assert_relative_eq;
    use nalgebra::Matrix2;
    use proptest::prelude::*;

    #[test]
    fn block_counts_and_dimensions() {
        // (N, #blocks, #levels, #2x2 blocks)
        let expected = [
            (3, 2, 2, 0),
            (4, 5, 6, 1),
            (5, 7, 8, 1),
            (6, 9, 12, 3),
            (7, 7, 8, 1),
            (8, 5, 6, 1),
            (9, 2, 2, 0),
            (10, 1, 1, 0),
        ];
        for (n, nblocks, nlevels, ntwo) in expected {
            let blocks = blocks_for(n).unwrap();
            assert_eq!(blocks.len(), nblocks, "N={n} block count");
            let levels: usize = blocks.iter().map(|b| b.dimension()).sum();
            assert_eq!(levels, nlevels, "N={n} level count");
            let twos = blocks.iter().filter(|b| b.dimension() == 2).count();
            assert_eq!(twos, ntwo, "N={n} 2x2 count");
            for b in &blocks {
                assert!(b.dimension() <= 2);
                assert_eq!(b.basis.len(), b.dimension());
            }
        }
        assert!(blocks_for(2).is_err());
        assert!(blocks_for(11).is_err());
    }

    #[test]
    fn unused_2s_parameter_matches_tabulated_blanks() {
        // exactly these blocks have no 2s dependence
        let no_2s: [(usize, &str); 5] = [(3, "2Po"), (4, "1D"), (4, "3P"), (5, "4So"), (5, "2Do")];
        for n in 3..=10 {
            for b in blocks_for(n).unwrap() {
                let expected = !no_2s.contains(&(n, b.label.ascii().as_str()));
                assert_eq!(b.uses_2s(), expected, "N={n} {}", b.label);
                // only the lithium ground block has no 2p dependence
                assert_eq!(b.uses_2p(), !(n == 3 && b.label.ascii() == "2S"));
            }
        }
    }

    #[test]
    fn lithium_ground_block_at_uniform_screening() {
        let ints = pt_integrals(3.0).unwrap();
        let blocks = blocks_for(3).unwrap();
        let m = evaluate_block(&blocks[0], &ints);
        // exact rational value -6859/972
        assert_relative_eq!(m.h11, -6859.0 / 972.0, epsilon = 1e-12);
        assert_relative_eq!(m.h11, -7.0566, epsilon = 5e-5);
    }

    #[test]
    fn beryllium_1d_at_uniform_screening() {
        let ints = pt_integrals(4.0).unwrap();
        let block = blocks_for(4)
            .unwrap()
            .into_iter()
            .find(|b| b.label.ascii() == "1D")
            .unwrap();
        let m = evaluate_block(&block, &ints);
        assert_relative_eq!(m.h11, -13.0112, epsilon = 5e-5);
    }

    #[test]
    fn zeroed_integrals_give_zero_matrix() {
        let ints = crate::integrals::IntegralSet::with_values(
            1.0,
            DilationParams::uniform(1.0).unwrap(),
            |_| 0.0,
        );
        for n in 3..=10 {
            for b in blocks_for(n).unwrap() {
                let m = evaluate_block(&b, &ints);
                assert_eq!((m.h11, m.h22, m.h12), (0.0, 0.0, 0.0));
            }
        }
    }

    #[test]
    fn solve_diagonal_two_by_two() {
        let m = BlockMatrix::two(1.5, -0.5, 0.0);
        let roots = solve_block(&m);
        assert_eq!(roots[0].energy, -0.5);
        assert_eq!(roots[1].energy, 1.5);
        assert_eq!(roots[0].coefficients, [0.0, 1.0]);
        assert_eq!(roots[1].mixing_c, Some(0.0));
    }

    #[test]
    fn beryllium_ground_matches_reference_row() {
        let p = DilationParams::new(3.7052, 2.3669, 1.9944).unwrap();
        let ints = compute_integrals(4.0, &p).unwrap();
        let block = blocks_for(4).unwrap().remove(0);
        let roots = solve_block(&evaluate_block(&block, &ints));
        assert_relative_eq!(roots[0].energy, -14.5795, epsilon = 1e-4);
        assert_relative_eq!(roots[0].mixing_c.unwrap(), -0.3597, epsilon = 1e-4);
        assert_relative_eq!(roots[1].energy, -14.1439, epsilon = 1e-4);
        assert_relative_eq!(roots[1].mixing_c.unwrap(), 2.7802, epsilon = 1e-4);
    }

    #[test]
    fn render_matches_conventional_notation() {
        let blocks = blocks_for(3).unwrap();
        assert_eq!(
            blocks[0].diagonal[0].render(),
            "2(1|1) + (2|2) + (11|11) + 2(11|22) - (12|21)"
        );
        let be = blocks_for(4).unwrap();
        assert_eq!(be[0].cross.as_ref().unwrap().render(), "sqrt3 (23|32)");
    }

    proptest! {
        /// Analytic 2x2 solution against a dense symmetric eigensolver,
        /// plus the exact orthogonality relation c+ c- = -1 and eigenvalue
        /// interlacing.
        #[test]
        fn analytic_two_by_two_matches_dense_solver(
            h11 in -50.0..50.0f64,
            h22 in -50.0..50.0f64,
            h12 in (-20.0..20.0f64).prop_filter("nonzero", |v| v.abs() > 1e-9),
        ) {
            let roots = solve_block(&BlockMatrix::two(h11, h22, h12));
            let dense = Matrix2::new(h11, h12, h12, h22).symmetric_eigen();
            let mut ev: Vec<f64> = dense.eigenvalues.iter().copied().collect();
            ev.sort_by(f64::total_cmp);
            let scale = 1.0 + h11.abs().max(h22.abs()).max(h12.abs());
            prop_assert!((roots[0].energy - ev[0]).abs() < 1e-12 * scale);
            prop_assert!((roots[1].energy - ev[1]).abs() < 1e-12 * scale);

            let c_lo = roots[0].mixing_c.unwrap();
            let c_hi = roots[1].mixing_c.unwrap();
            prop_assert!((c_lo * c_hi + 1.0).abs() < 1e-9 * (1.0 + c_lo.abs() * c_hi.abs()));

            // interlacing
            prop_assert!(roots[0].energy <= h11.min(h22) + 1e-12 * scale);
            prop_assert!(roots[1].energy >= h11.max(h22) - 1e-12 * scale);

            // eigenvector residual
            for r in &roots {
                let [a, b] = r.coefficients;
                let r1 = h11 * a + h12 * b - r.energy * a;
                let r2 = h12 * a + h22 * b - r.energy * b;
                prop_assert!(r1.abs() < 1e-10 * scale && r2.abs() < 1e-10 * scale);
            }
        }
    }

    #[test]
    fn term_symbol_round_trip() {
        for n in 3..=10 {
            for b in blocks_for(n).unwrap() {
                let ascii = b.label.ascii();
                assert_eq!(SymmetryLabel::parse(&ascii).unwrap(), b.label);
            }
        }
        assert_eq!(SymmetryLabel::parse("4So").unwrap(), SymmetryLabel::new(0, 3, -1));
        assert_eq!(SymmetryLabel::new(1, 1, -1).term(), "2P°");
        assert!(SymmetryLabel::parse("Q5").is_err());
        assert!(SymmetryLabel::parse("2Z").is_err());
    }
}
