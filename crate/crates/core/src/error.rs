use alloc::string::String;

/// Errors raised by the algebraic core.
///
/// `Domain` covers inputs outside an operation's mathematical domain,
/// `Config` covers session-level mismatches (wrong prime, wrong ambient
/// field, budgets), and `Invariant` signals a broken internal invariant.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("group of order {order} exceeds the enumeration budget {budget}")]
    Budget { order: u128, budget: u128 },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! domain {
    ($($arg:tt)*) => { $crate::Error::Domain(alloc::format!($($arg)*)) };
}

macro_rules! config {
    ($($arg:tt)*) => { $crate::Error::Config(alloc::format!($($arg)*)) };
}

macro_rules! invariant {
    ($($arg:tt)*) => { $crate::Error::Invariant(alloc::format!($($arg)*)) };
}

pub(crate) use {config, domain, invariant};
