use thiserror::Error;

/// Errors produced by the solver library.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument was outside its mathematical domain (non-positive
    /// screening parameter, electron count out of range, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An adaptive quadrature failed to reach the requested tolerance.
    #[error("quadrature did not converge: requested {requested:.3e}, achieved {achieved:.3e}")]
    Quadrature { requested: f64, achieved: f64 },

    /// The parameter optimizer ran out of iterations.
    #[error("optimization did not converge after {iterations} iterations (best energy {best:.9})")]
    Convergence { iterations: usize, best: f64 },

    /// The optimizer was driven onto the parameter box boundary, which
    /// signals an unbound state rather than a numerical problem.
    #[error("optimizer hit the {param} boundary at {value:.6}")]
    Boundary { param: &'static str, value: f64 },

    /// An internal consistency check failed (quantum numbers off lattice,
    /// mismatched degeneracies, ...). Always indicates a bug.
    #[error("consistency error: {0}")]
    Consistency(String),

    /// Bad command-line usage (unknown atom, malformed term symbol, ...).
    #[error("{0}")]
    Usage(String),
}
