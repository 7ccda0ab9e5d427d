//! Minimal configuration-interaction models for the atoms and ions with one
//! to ten electrons.
//!
//! The model projects the electronic Schrödinger equation onto the span of
//! all Slater determinants built from a filled 1s shell plus 2s/2p orbitals
//! with variational per-shell screening parameters. Everything is available
//! in closed form: orbital products have explicit Fourier transforms, the
//! fourteen independent electron integrals have rational closed forms, and
//! the Hamiltonian decouples into 1x1 and 2x2 symmetry blocks that are
//! solved analytically. Only the final minimization over the (at most
//! three) screening parameters is numerical.
//!
//! Two independent oracles guard the transcription-heavy parts:
//!
//! * [`integrals::quadrature_integral`] recomputes any two-body integral by
//!   adaptive radial quadrature in Fourier space;
//! * [`determinant`] rebuilds the full Hamiltonian with Slater-Condon rules
//!   over the explicit determinant basis, diagonalizes it, and labels every
//!   eigenspace with its term symbol.
//!
//! See the crate examples for end-to-end usage; the `minci` binary exposes
//! the same functionality on the command line.
//!
//! ```
//! let lithium = minci::spectra::atom_spectrum(3, 3.0)?;
//! assert_eq!(lithium.ground().term.ascii(), "2S");
//! assert!((lithium.ground().energy_ci - (-7.4139)).abs() < 1e-4);
//! # Ok::<(), minci::Error>(())
//! ```

pub mod blocks;
pub mod cli;
pub mod determinant;
pub mod integrals;
pub mod optimize;
pub mod orbitals;
pub mod quadrature;
pub mod reference;
pub mod spectra;
pub mod verify;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Conversion factor from hartree to electronvolt (CODATA 2018).
pub const HARTREE_TO_EV: f64 = 27.211_386_245_988;
