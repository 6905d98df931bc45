use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("classical limit is singular: denominator vanishes at s = 1 in {0}")]
    ClassicalPole(String),

    #[error("cannot parse scalar `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("singular system: {0}")]
    Singular(String),

    #[error("module is not semisimple: {0}")]
    NotSemisimple(String),

    #[error("label twoJ = {two_j} exceeds the configured cutoff {max_two_j}")]
    Cutoff { two_j: u32, max_two_j: u32 },

    #[error("braiding convention inconsistent: {0}")]
    BraidingConvention(String),

    #[error("L-operator and Clebsch-Gordan constructions are not proportional: {0}")]
    Proportionality(String),

    #[error("tensor action paths disagree: {0}")]
    PathDisagreement(String),

    #[error("embedding not of Sudbery form: {residual}")]
    NotSudberyForm { residual: String },

    #[error("functional has no action on the irrep twoJ = {two_j}")]
    UnsupportedEvaluation { two_j: u32 },

    #[error("usage: {0}")]
    Usage(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
