use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the analysis pipeline can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: String,
        input: String,
        reason: String,
    },
    #[error("field parameter d = {0} is not a positive squarefree integer")]
    BadFieldParameter(u64),
    #[error("element {0} has a nonzero imaginary part")]
    NonRealInput(String),
    #[error("polynomial has a coefficient with nonzero imaginary part")]
    NonRealCoefficients,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("characteristic polynomial has {missing} real root(s) outside the scalar field")]
    ScalarFieldTooSmall { missing: usize },
    #[error("eigenvalue certificate rejected: {0}")]
    BadEigenvalueCertificate(String),
    #[error("malformed relator word {word}: {reason}")]
    MalformedWord { word: usize, reason: String },
    #[error("Jacobi identity fails for basis triple ({i}, {j}, {k}); residual {residual}")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        residual: String,
    },
    #[error("bracket index out of range or not ordered: i={i}, j={j}, k={k}")]
    BadBracket { i: usize, j: usize, k: usize },
    #[error("generator {generator}: not an automorphism on basis pair ({i}, {j}); residual {residual}")]
    NotAutomorphism {
        generator: String,
        i: usize,
        j: usize,
        residual: String,
    },
    #[error("generator {0}: adjoint matrix is singular")]
    SingularGenerator(String),
    #[error("generator {generator} does not preserve {space}")]
    NotInvariant { generator: String, space: String },
    #[error("Levi lifting system is inconsistent at derived-series step {0}")]
    LiftFailure(usize),
    #[error("subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("algebra is not semisimple (Killing form degenerate)")]
    NotSemisimple,
    #[error("a rank-one simple factor is present; b1_semisimple_quotient must be supplied")]
    MissingB1Input,
    #[error("no presentation and no b1_manifold_override supplied")]
    NoB1Data,
    #[error("generator {0} has no abelianization_image")]
    MissingAbelianizationImages(String),
    #[error("generator {0} has a symbolic adjoint matrix but the induced action is nontrivial")]
    MissingAdjointMatrix(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("{0} is a perfect square")]
    PerfectSquareInput(u64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::MissingB1Input
            | Error::NoB1Data
            | Error::MissingAbelianizationImages(_)
            | Error::MissingAdjointMatrix(_) => 3,
            _ => 1,
        }
    }
}
