use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("basis mismatch between operands")]
    BasisMismatch,
    #[error("nothing to combine")]
    NoOperands,
    #[error("a graded basis needs at least one generator")]
    EmptyBasis,
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("{names} generator names but {parities} parities")]
    ParityCount { names: usize, parities: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("the empty word is not admitted here")]
    EmptyWord,
    #[error("word of length {len} is shorter than the arity {arity}")]
    TooShort { len: usize, arity: usize },
    #[error("not a rational number: `{0}`")]
    BadScalar(String),
    #[error("Zinbiel axiom fails at basis triple {0:?}")]
    ZinbielAxiom([usize; 3]),
    #[error("cochain is not anticyclic (first bad word {0})")]
    NotAnticyclic(String),
    #[error("[B,B] does not vanish; not a Leibniz structure")]
    NotLeibniz,
    #[error("{{mu,mu}} does not vanish")]
    NotAStructure,
    #[error("operands live on different symplectic planes")]
    PlaneMismatch,
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("expected dimension {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("target must be a free Zinbiel algebra")]
    TargetNotFree,
    #[error("expected a bar cochain of arity {expected}, got {got}")]
    WrongArity { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
