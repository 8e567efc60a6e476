use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MajorantError {
    #[error("index window [{start}, {end}] exceeds the supported index range")]
    IndexOverflow { start: i128, end: i128 },

    #[error("window width {width} exceeds the cap of {cap}")]
    WindowTooWide { width: usize, cap: usize },

    #[error("order j must be at least 1")]
    ZeroOrder,

    #[error(
        "norm quadrature disagreement: direct {direct:e}, grid {grid:e} (relative {relative:e} > {tol:e})"
    )]
    QuadratureMismatch {
        direct: f64,
        grid: f64,
        relative: f64,
        tol: f64,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),

    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),

    #[error("bisection failed: {0}")]
    BisectionFailed(String),
}

pub type Result<T, E = MajorantError> = std::result::Result<T, E>;
