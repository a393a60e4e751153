use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exponent s must be at least 1")]
    ZeroExponent,
    #[error("q^2 = {p}^(2*{s}) does not fit the 64-bit arithmetic word")]
    Overflow { p: u64, s: u32 },
    #[error("element does not belong to Z_{q} + uZ_{q}")]
    MismatchedParams { q: u64 },
    #[error("divisor is not monic")]
    NotMonic,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("residue polynomial is reducible over F_{p}")]
    Reducible { p: u64 },
    #[error("polynomial is divisible by x")]
    DivisibleByX,
    #[error("gcd({n}, {p}) != 1: only lengths coprime to the characteristic are supported")]
    LengthNotCoprime { n: u64, p: u64 },
    #[error("length must be positive")]
    ZeroLength,
    #[error("enumeration guard exceeded: {what} = {value} > {limit}")]
    GuardExceeded {
        what: &'static str,
        value: u64,
        limit: u64,
    },
    #[error("budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("metric {0} is only defined for Z4 + uZ4")]
    UnsupportedMetric(&'static str),
    #[error("operation requires ideal closure; code is a module span")]
    ModuleSpanMode,
    #[error("distance undefined for the zero code")]
    ZeroCode,
    #[error("component ideal of factor {l} is not in the (i)-(iv) census")]
    IdealNotInCensus { l: usize },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no primitive polynomial of degree {m} found over F_{p}")]
    NoPrimitive { p: u64, m: usize },
}
