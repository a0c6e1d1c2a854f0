use thiserror::Error;

use crate::patterns::PatternWitness;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("letter {letter} is outside the alphabet 1..={n}")]
    LetterOutOfRange { letter: usize, n: usize },
    #[error("letter {0} does not occur in the word")]
    MissingLetter(usize),
    #[error("{0:?} is not a reduced pattern")]
    NotReduced(Vec<usize>),
    #[error("the word does not 12-represent the graph")]
    NotRepresentant,
    #[error("the word contains the pattern {0}")]
    ContainsPattern(String),
    #[error("vertex count {0} is unsupported (expected 1..=64)")]
    VertexCount(usize),
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("forbidden pattern {} at {:?}", .0.pattern, .0.vertices)]
    Forbidden(PatternWitness),
    #[error("intervals {first:?} and {second:?} are nested")]
    Nested { first: (usize, Side), second: (usize, Side) },
    #[error("intervals #{0} and #{1} are nested")]
    NestedIntervals(usize, usize),
    #[error("model is not unit: {0}")]
    NotUnit(String),
    #[error("coincident endpoints: {0}")]
    Coincident(String),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("outside the search budget: {0}")]
    Budget(String),
}

/// Which one-sided interval of a pointed interval is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `[l, p]`
    Left,
    /// `[p, r]`
    Right,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
