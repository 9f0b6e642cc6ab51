use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid braid letter {0:?}")]
    BraidLetter(String),
    #[error("braid letter 0 is not a generator")]
    ZeroLetter,
    #[error("invalid polynomial term {0}")]
    Polynomial(String),
    #[error("invalid fixture line {line}: {msg}")]
    Fixture { line: usize, msg: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KnotError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("edge labeling is not admissible: {0}")]
    Inadmissible(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("complex is malformed: {0}")]
    Complex(String),
    #[error("the empty diagram has no HOMFLY-PT polynomial")]
    EmptyDiagram,
    #[error("grading is not integral: {0}")]
    Grading(String),
    #[error("crossing {0} is out of range")]
    CrossingIndex(usize),
}
