use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse word {input:?}: unexpected {found:?} at position {position}")]
    WordParse {
        input: String,
        position: usize,
        found: char,
    },

    #[error("operation is undefined on the empty word")]
    EmptyWord,

    #[error("word {0} uses a single generator")]
    SingleGenerator(String),

    #[error("images ({0}, {1}) do not form a basis of F(A,B)")]
    NotABasis(String, String),

    #[error("automorphism ({0}, {1}) could not be inverted")]
    NotInvertible(String, String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("diagram has no curve named {0:?}")]
    UnknownCurve(String),

    #[error("curve step refers to band {band} of handle {handle}, which does not exist")]
    UnlabeledBand { handle: char, band: usize },

    #[error("curve step refers to annulus arc {0}, which does not exist")]
    UnknownArc(usize),

    #[error("cannot parse {kind} {input:?}")]
    Syntax { kind: &'static str, input: String },

    #[error("parity violation on curve {curve}: {detail}")]
    ParityViolation { curve: &'static str, detail: String },

    #[error("loop edge at {vertex} on curve {curve}")]
    LoopEdge { curve: &'static str, vertex: String },

    #[error("beta must consist only of B+B- edges")]
    BetaShape,

    #[error("beta word {0} is not a proper power")]
    BetaNotProperPower(String),

    #[error("alpha word {0} is neither primitive nor a proper power")]
    AlphaNotPrimitiveOrPower(String),

    #[error("both words of the pair must be nontrivial")]
    TrivialWord,

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("orbit closure unstable at length bound {0}")]
    UnstableClosure(usize),
}

impl Error {
    /// Short stable identifier, printed by the command line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::WordParse { .. } => "WordParse",
            Error::EmptyWord => "EmptyWord",
            Error::SingleGenerator(_) => "SingleGenerator",
            Error::NotABasis(..) => "NotABasis",
            Error::NotInvertible(..) => "NotInvertible",
            Error::InvalidParams(_) => "InvalidParams",
            Error::UnknownCurve(_) => "UnknownCurve",
            Error::UnlabeledBand { .. } => "UnlabeledBand",
            Error::UnknownArc(_) => "UnknownArc",
            Error::Syntax { .. } => "Syntax",
            Error::ParityViolation { .. } => "ParityViolation",
            Error::LoopEdge { .. } => "LoopEdge",
            Error::BetaShape => "BetaShape",
            Error::BetaNotProperPower(_) => "BetaNotProperPower",
            Error::AlphaNotPrimitiveOrPower(_) => "AlphaNotPrimitiveOrPower",
            Error::TrivialWord => "TrivialWord",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::UnstableClosure(_) => "UnstableClosure",
        }
    }
}
