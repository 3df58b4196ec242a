use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything constructors and decision procedures can reject, always with
/// the offending names so callers can report them verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("no value assigned for element `{0}`")]
    MissingAssignment(String),

    #[error("map is not monotone: `{y0}` <= `{y1}` but `{fy0}` !<= `{fy1}`")]
    NotMonotone {
        y0: String,
        y1: String,
        fy0: String,
        fy1: String,
    },

    #[error("order is not antisymmetric: `{0}` and `{1}` are comparable both ways")]
    NotAntisymmetric(String, String),

    #[error("poset is not complete: subset {{{subset}}} has no {bound}")]
    NotComplete { subset: String, bound: String },

    #[error("`{y}^{x}` is not an implication: residuation fails at `{z}`")]
    NotHeyting { x: String, y: String, z: String },

    #[error("structure value `{value}` at point `{point}` is not exponentiable in the base")]
    NotExponentiable { point: String, value: String },

    #[error("objects live over different base posets")]
    BaseMismatch,

    #[error("domain/codomain mismatch: expected `{expected}`, found `{found}`")]
    EndpointMismatch { expected: String, found: String },

    #[error("not a lax morphism: a(`{point}`) = `{lhs}` !<= `{rhs}` = b(f(`{point}`))")]
    LaxTriangle {
        point: String,
        lhs: String,
        rhs: String,
    },

    #[error("maps do not form a parallel pair")]
    NotParallel,

    #[error("maps do not form a cospan")]
    NotCospan,

    #[error("{0}")]
    Precondition(String),

    #[error("generator gave up after {retries} retries while sampling {what}")]
    RetriesExhausted { what: String, retries: usize },
}
