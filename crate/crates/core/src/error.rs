use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),

    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),

    #[error("presentation has no vertices")]
    EmptyQuiver,

    #[error("relation {relation}: term `{term}` is not a composable path")]
    NonComposable { relation: usize, term: String },

    #[error("relation {relation}: term `{term}` has length {len} < 2")]
    ShortRelation { relation: usize, term: String, len: usize },

    #[error("relation {relation}: terms do not share source and target")]
    MixedEndpoints { relation: usize },

    #[error("relation {relation} has no nonzero terms")]
    EmptyRelation { relation: usize },

    #[error("path enumeration exceeded the length cap {cap}: presentation is not finite dimensional at some vertex pair")]
    NotFiniteDimensional { cap: usize },

    #[error("strongly-locally-finite axiom violated: {0}")]
    SlfViolation(String),

    #[error("truncation level {n} is below the minimum {min} for family {family}")]
    TruncationTooSmall { family: String, n: usize, min: usize },

    #[error("representations live over different algebras")]
    AlgebraMismatch,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("relation {0} does not act as zero on the representation")]
    RelationViolated(usize),

    #[error("not a module map: fails to commute with arrow `{0}`")]
    NotIntertwiner(String),

    #[error("undetermined: {0}")]
    Undetermined(String),

    #[error("algebra is not self-injective: P({0}) is not injective")]
    NotSelfInjective(String),

    #[error("injective I({vertex}) has no projective resolution of length <= {cap}")]
    InfiniteProjectiveDimension { vertex: String, cap: usize },

    #[error("complex of modules has no perfect resolution within {0} steps")]
    ResolutionCap(usize),

    #[error("differential squares to a nonzero map at degree {0}")]
    NotAComplex(i64),

    #[error("weight ({0}, {1}) is not the highest weight of a finite-dimensional module")]
    NonDominantWeight(String, String),

    #[error("character is not a non-negative sum of irreducible characters: {0}")]
    NegativeMultiplicity(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
