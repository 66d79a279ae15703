use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("estimated {estimate} cosets exceeds the budget of {budget}; raise the budget to proceed")]
    BudgetExceeded { estimate: u128, budget: u128 },
    #[error("coset count estimate overflows; enumeration blocked")]
    BudgetUnknown,
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("invalid elementary divisor chain: {0}")]
    InvalidChain(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
}
