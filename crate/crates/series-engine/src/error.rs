use hecke_oracle::OracleError;
use poly_core::PolyError;
use sym_table::SymError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SeriesError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("denominator series does not start at 1")]
    NonUnitDenominator,
    #[error("inconsistent series / wrong degree bound")]
    InconsistentSeries,
    #[error("interpolated coefficient fails its check at p = {0}")]
    InterpolationMismatch(i128),
}
