use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("element {element:?} does not belong to a group with factors {factors:?}")]
    ElementMismatch { element: Vec<u32>, factors: Vec<u32> },

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("invalid modulus {0}")]
    InvalidModulus(u32),

    #[error("group order {order} exceeds the configured bound {bound}")]
    BoundExceeded { order: usize, bound: usize },

    #[error("table of {entries} entries exceeds the dense storage bound")]
    TableTooLarge { entries: u128 },

    #[error("cochain is not normalized: nonzero value at {0}")]
    NotNormalized(String),

    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("map is not bijective")]
    NotBijective,

    #[error("invalid G-set: {0}")]
    InvalidGSet(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl Error {
    /// Stable variant name for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidGroup(_) => "invalid_group",
            Error::ElementMismatch { .. } => "element_mismatch",
            Error::NotSubgroup(_) => "not_subgroup",
            Error::ModulusMismatch { .. } => "modulus_mismatch",
            Error::InvalidModulus(_) => "invalid_modulus",
            Error::BoundExceeded { .. } => "bound_exceeded",
            Error::TableTooLarge { .. } => "table_too_large",
            Error::NotNormalized(_) => "not_normalized",
            Error::NotHomomorphism(_) => "not_homomorphism",
            Error::NotBijective => "not_bijective",
            Error::InvalidGSet(_) => "invalid_gset",
            Error::Precondition(_) => "precondition",
            Error::Parse(_) => "parse",
        }
    }
}
