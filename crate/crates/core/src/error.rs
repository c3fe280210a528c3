use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("not an even vector: coordinate {index} is odd")]
    NotEven { index: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inconsistent plan: {0}")]
    InconsistentPlan(String),
    #[error("enumeration budget exceeded: {required} required, budget {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p is not a primitive root modulo r (p={p}, r={r})")]
    NotPrimitiveRoot { p: u64, r: u64 },
    #[error("Φ_r reducible mod p (p={p}, r={r})")]
    ReducibleCyclotomic { p: u64, r: u64 },
    #[error("field was not built from a cyclotomic polynomial")]
    NotCyclotomic,
    #[error("k-th powers do not generate the field additively; g(k,q) is undefined")]
    WaringUndefined,
}

pub type Result<T> = std::result::Result<T, Error>;
