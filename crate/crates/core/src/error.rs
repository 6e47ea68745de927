use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("q must be at least 2, got {0}")]
    BadQ(u64),
    #[error("q = {0} is too large to square")]
    Overflow(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("invalid Dynkin type {series}{rank}")]
    BadType { series: char, rank: u32 },
    #[error("cannot parse Dynkin type {0:?}")]
    Parse(String),
    #[error("no twisted local index for {ty} with twist {twist}")]
    UnsupportedTwist { ty: String, twist: u32 },
    #[error("unknown node {0:?}")]
    UnknownNode(String),
    #[error("generator {0:?} is not a diagram automorphism")]
    NotAutomorphism(String),
    #[error("generator {0:?} has the wrong length")]
    BadPermutation(String),
    #[error("generators do not satisfy the declared relations: {0}")]
    BadStructure(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteError {
    #[error("isogeny {isogeny} is not available for {ty} ({form})")]
    UnsupportedIsogeny {
        ty: String,
        form: String,
        isogeny: String,
    },
    #[error("form {form} is not available for {ty}")]
    UnsupportedForm { ty: String, form: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CaseError {
    #[error("unknown case id {0:?}")]
    UnknownCase(String),
    #[error("rank {n} is out of range for case {case}")]
    RankOutOfRange { case: &'static str, n: u32 },
    #[error("case {0} is not quasi-split")]
    NotQuasiSplit(&'static str),
    #[error("label {label} is not in X for case {case}")]
    NotInX { case: &'static str, label: String },
    #[error("case {case} does not exist for q = {q}")]
    Unavailable { case: &'static str, q: u64 },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EndoError {
    #[error("unsupported extension shape {0}")]
    UnsupportedShape(String),
    #[error(transparent)]
    Case(#[from] CaseError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransferError {
    #[error("unknown sign rule {0:?}")]
    UnknownRule(String),
    #[error("classical_dpp needs k, h not both zero")]
    ZeroPair,
    #[error("unknown case kind {0:?}")]
    UnknownKind(String),
    #[error(transparent)]
    Case(#[from] CaseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DepthError {
    #[error("vertex {0:?} may not lie in the parabolic subset")]
    VertexInParabolic(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
