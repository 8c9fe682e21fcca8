use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {n} exceeds context maximum {max}")]
    DegreeExceeded { n: usize, max: usize },
    #[error("invalid base q: {0}")]
    InvalidBase(String),
    #[error("denominator vanishes at k={k} (parameter {param})")]
    DenominatorVanishes { k: usize, param: String },
    #[error("vanishing factor {0}")]
    VanishingFactor(String),
    #[error("series does not terminate: no q^-n numerator and no explicit index")]
    NonTerminating,
    #[error("operands refer to different q contexts")]
    MixedContexts,
    #[error("unknown family id `{0}`")]
    UnknownFamily(String),
    #[error("no closed-form row for `{0}`")]
    UnknownRow(String),
    #[error("no closed-form connection from `{src}` to `{tgt}`")]
    UnknownPair { src: String, tgt: String },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("binding error: {0}")]
    Binding(String),
    #[error("degenerate leading coefficient at degree {n}")]
    DegenerateLeadingCoefficient { n: usize },
    #[error("variable mismatch: {0}")]
    VariableMismatch(String),
    #[error("family `{0}` has no coefficient expansion")]
    NotExpansionCapable(String),
    #[error("input set is not monic: A_0({n}) != 1")]
    NonMonic { n: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("zero denominator in literal")]
    ZeroDenominator,
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("rejection sampling exceeded {0} retries")]
    SamplingExhausted(usize),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DegreeExceeded { .. } => "DegreeExceeded",
            Error::InvalidBase(_) => "InvalidBase",
            Error::DenominatorVanishes { .. } => "DenominatorVanishes",
            Error::VanishingFactor(_) => "VanishingFactor",
            Error::NonTerminating => "NonTerminating",
            Error::MixedContexts => "MixedContexts",
            Error::UnknownFamily(_) => "UnknownFamily",
            Error::UnknownRow(_) => "UnknownRow",
            Error::UnknownPair { .. } => "UnknownPair",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::Binding(_) => "Binding",
            Error::DegenerateLeadingCoefficient { .. } => "DegenerateLeadingCoefficient",
            Error::VariableMismatch(_) => "VariableMismatch",
            Error::NotExpansionCapable(_) => "NotExpansionCapable",
            Error::NonMonic { .. } => "NonMonic",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::Parse { .. } => "Parse",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::UnknownSuite(_) => "UnknownSuite",
            Error::SamplingExhausted(_) => "SamplingExhausted",
        }
    }

    // parameter choices that a sampler should simply redraw
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            Error::DenominatorVanishes { .. }
                | Error::VanishingFactor(_)
                | Error::DegenerateLeadingCoefficient { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
