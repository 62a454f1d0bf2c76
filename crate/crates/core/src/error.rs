use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed descriptor `{text}`: {reason}")]
    Descriptor { text: String, reason: String },

    #[error("invariant factor {0} must be at least 2")]
    FactorTooSmall(u64),

    #[error("ring modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),

    #[error("invariant factor {factor} does not divide {modulus}")]
    FactorNotDividing { factor: u32, modulus: u32 },

    #[error("element {0:?} is out of range for the module")]
    ElementOutOfRange(Vec<u32>),

    #[error("submodules belong to different ambient modules")]
    MixedAmbient,

    #[error("module order {order} exceeds the size guard of {limit}")]
    OrderGuard { order: u64, limit: u64 },

    #[error("submodule lattice exceeds the size guard of {limit} members")]
    LatticeGuard { limit: usize },

    #[error("{kind} graphs require the ring over itself, got module {module} over {ring}")]
    NotRegular {
        kind: String,
        module: String,
        ring: String,
    },

    #[error("unknown export format `{0}` (expected dot or json)")]
    UnknownFormat(String),

    #[error("unknown graph kind `{0}`")]
    UnknownGraphKind(String),

    #[error("malformed family `{text}`: {reason}")]
    Family { text: String, reason: String },

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
}

impl Error {
    /// True for errors raised by the order or lattice size guards.
    pub fn is_size_guard(&self) -> bool {
        matches!(self, Error::OrderGuard { .. } | Error::LatticeGuard { .. })
    }
}
