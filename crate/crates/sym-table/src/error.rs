use poly_core::PolyError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("unsupported genus {0}")]
    UnsupportedGenus(usize),
    #[error("numerator degree {found} in X exceeds the bound {bound} for genus {genus}")]
    DegreeBound { genus: usize, found: i32, bound: i32 },
    #[error("polynomial involves {var}, which lies beyond genus {genus}")]
    VariableBeyondGenus { genus: usize, var: &'static str },
    #[error("malformed table JSON: {0}")]
    Json(String),
}
