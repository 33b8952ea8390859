//! Error type shared by every module.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside an operation's documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A primorial product does not fit the supported 64-bit width.
    #[error("primorial overflow: product of primes in [{base_prime}, {top_prime}] exceeds 64 bits; largest supported top prime for this base is {max_top_prime}")]
    PrimorialOverflow {
        top_prime: u64,
        base_prime: u64,
        max_top_prime: u64,
    },

    /// A pattern modulus exceeds the configured memory cap.
    #[error("resource limit: pattern requires {required_bits} bits, cap is {cap_bits} bits")]
    ResourceLimit { required_bits: u64, cap_bits: u64 },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
