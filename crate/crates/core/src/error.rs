use thiserror::Error;

/// Errors raised by the divide-to-shadow pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),
    #[error("dangling slot {vertex}.{slot}")]
    DanglingSlot { vertex: String, slot: usize },
    #[error("invalid divide: {0}")]
    Invalid(String),
    #[error("map is not planar: V - E + F = {euler}, expected {expected}")]
    NonPlanar { euler: i64, expected: i64 },
    #[error("divide is not admissible: {0}")]
    NotAdmissible(String),
    #[error("inside regions are not two-colorable")]
    NotTwoColorable,
    #[error("doubled curve cannot be oriented consistently: {0}")]
    NonOrientable(String),
    #[error("not a free divide with one free endpoint: {0}")]
    NotFreeDivide(String),
    #[error("edge selection is ambiguous: {0}")]
    Ambiguous(String),
    #[error("free divide satisfies neither case of the fiberedness criterion")]
    NeitherCase,
    #[error("no deformation of the free endpoint yields an LF-structure")]
    NoValidDeformation,
    #[error("region {0} is missing doubling provenance")]
    MissingProvenance(usize),
    #[error("region {0} is not internal")]
    NotInternal(usize),
    #[error("no LF-structure: condition ({condition}) fails: {detail}")]
    NoLfStructure {
        condition: &'static str,
        detail: String,
    },
    #[error("surface is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("polynomial degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
