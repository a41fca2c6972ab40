use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error("line {line}: unknown generator label `{label}`")]
    UnknownLabel { line: usize, label: String },

    #[error("line {line}: duplicate generator `{label}`")]
    DuplicateGenerator { line: usize, label: String },

    #[error("line {line}: relation {operand}*{operand}={result} violates idempotency (x*x must equal x)")]
    IdempotencyViolation {
        line: usize,
        operand: String,
        result: String,
    },

    #[error("expected exactly one knot block, found {found}")]
    BlockCount { found: usize },

    #[error("unknown catalog knot `{name}`; available: {}", available.join(", "))]
    UnknownKnot { name: String, available: Vec<String> },

    #[error("exhaustive order search limited to {max} generators, got {count}")]
    TooManyGenerators { count: usize, max: usize },

    #[error("generator index {0} is not part of the chain")]
    GeneratorNotInChain(usize),

    #[error("coloring matrix is {rows}x{cols}, determinant needs a square matrix")]
    NonSquare { rows: usize, cols: usize },

    #[error("coloring assigns {got} values but the presentation has {expected} generators")]
    MissingAssignment { expected: usize, got: usize },

    #[error("modulus must be at least {min}, got {got}")]
    BadModulus { got: u64, min: u64 },

    #[error("unknown output format `{0}` (expected text, markdown or json)")]
    UnknownFormat(String),

    #[error("solver disagreement on {knot}: exhaustive search found {exhaustive} chains, backtracking found {backtracking}")]
    SolverDisagreement {
        knot: String,
        exhaustive: usize,
        backtracking: usize,
    },
}

impl Error {
    /// Errors caused by bad user input, as opposed to internal invariant failures.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::SolverDisagreement { .. })
    }
}
