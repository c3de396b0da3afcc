use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("no image given for generator x{generator} (only {available} images)")]
    MissingImage { generator: u32, available: usize },

    #[error("generator x{generator} is outside rank {rank}")]
    Rank { generator: u32, rank: usize },

    #[error("({image_a}, {image_b}) is not a basis of F_2")]
    NotABasis { image_a: String, image_b: String },

    #[error("quad {0} does not define a local representation")]
    InvalidQuad(String),

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("cores {index} and {next} ({from} -> {to}) are not joined by an edge")]
    MissingEdge {
        index: usize,
        next: usize,
        from: String,
        to: String,
    },

    #[error("vertex {0} is not in the graph")]
    UnknownVertex(String),

    #[error("strand mismatch: expected {expected}, found {found}")]
    StrandMismatch { expected: usize, found: usize },

    #[error("braid generator index {index} out of range for {strands} strands")]
    BraidIndex { index: i64, strands: usize },

    #[error("representation needs {needed} cores, {given} given")]
    CoreCount { needed: usize, given: usize },

    #[error("hom count refused: {candidates} candidate tuples exceed budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },

    #[error("integer overflow during Smith normal form")]
    Overflow,

    #[error("invalid group table: {0}")]
    GroupTable(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(what: &'static str, input: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        what,
        input: input.to_string(),
        reason: reason.into(),
    }
}
