use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not an odd prime")]
    BadCharacteristic(u32),
    #[error("extension degree must be at least 1, got {0}")]
    BadDegree(i64),
    #[error("field of order {0} is too large for table arithmetic")]
    FieldTooLarge(u64),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("invalid size: {0}")]
    BadSize(String),
    #[error("t^p - t = c has no solution in the field for coordinate {coord}; extend k")]
    ExtendField { coord: usize },
    #[error("the bilinear form of sl({m}|{n}) is degenerate when p divides m - n")]
    DegenerateForm { m: usize, n: usize },
    #[error("the p-power map is only defined on even elements")]
    OddPPower,
    #[error("weight is not in Lambda_chi: coordinate {coord} fails mu^p - mu = chi^p")]
    NotInLambdaChi { coord: usize },
    #[error("p-character mismatch")]
    ChiMismatch,
    #[error("module relation violated: {0}")]
    Relation(String),
    #[error("the p-character must vanish on the positive even root vectors")]
    ChiNotNormalized,
    #[error("seed eigenspace of dimension {dim} exceeds the enumeration cap {cap}")]
    CapExceeded { dim: usize, cap: usize },
    #[error("no invertible intertwiner found among sampled combinations")]
    IsoUndecided,
    #[error("quotient by the computed radical is not simple")]
    HeadNotSimple,
    #[error("wrong algebra part: {0}")]
    WrongPart(String),
    #[error("module carries no parity grading")]
    NoParity,
    #[error("weight is not integral")]
    NonIntegral,
    #[error("configuration error: {0}")]
    Config(String),
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
