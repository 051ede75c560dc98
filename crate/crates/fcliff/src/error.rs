use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("incompatible register widths: {0} vs {1}")]
    WidthMismatch(usize, usize),

    #[error("index {index} out of range for width {width}")]
    IndexOutOfRange { index: usize, width: usize },

    #[error("register width {0} exceeds the supported maximum {1}")]
    WidthTooLarge(usize, usize),

    #[error("operator is not a Hermitian-normalized string")]
    NonHermitian,

    #[error("generator string must carry phase zero")]
    GeneratorPhase,

    #[error("CNOT control and target must differ")]
    DegenerateCnot,

    #[error("dense oracle refuses {0} modes (limit {1})")]
    OracleTooLarge(usize, usize),

    #[error("coefficient contains unbound symbol `{0}`")]
    UnboundSymbol(String),

    #[error("neither dichotomy identity holds for A[O,A]A; generator outside the supported family")]
    AlphaDichotomy,

    #[error("tapering: {0}")]
    Tapering(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
