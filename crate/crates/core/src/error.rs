use std::fmt;

use crate::election::CandidateId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// One or more well-formedness violations found while building an election.
    #[error("invalid election: {}", list(.0))]
    Invalid(Vec<Violation>),
    #[error("at least two candidates are required, found {m}")]
    TooFewCandidates { m: usize },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: unsupported profile: {message}")]
    UnsupportedProfile { line: usize, message: String },
    #[error("line {line}: inconsistent metadata: {message}")]
    InconsistentMetadata { line: usize, message: String },
    #[error("seed ({0}, {1}) is not an edge of the graph")]
    SeedNotEdge(CandidateId, CandidateId),
    #[error("order is not a permutation of 0..{m}")]
    NotAPermutation { m: usize },
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(CandidateId, CandidateId),
    #[error("instance has {m} candidates, brute force cap is {cap}")]
    InstanceTooLarge { m: usize, cap: usize },
}

impl Error {
    /// Source line the error refers to, when it came from a text document.
    ///
    /// For [`Error::Invalid`] this is the line of the first located violation.
    pub fn line(&self) -> Option<usize> {
        match self {
            Error::Syntax { line, .. }
            | Error::UnsupportedProfile { line, .. }
            | Error::InconsistentMetadata { line, .. } => Some(*line),
            Error::Invalid(violations) => violations.iter().find_map(|v| v.line),
            _ => None,
        }
    }

    pub(crate) fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }
}

fn list(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    /// 1-based line in the source document, if the election was parsed from text.
    pub line: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    EmptyCandidateSet,
    EmptyCandidateName { position: usize },
    /// Names may not contain the native format's separators (`,` `>`) or line breaks.
    ReservedCharacter { name: String },
    DuplicateCandidateName { name: String },
    UnknownCandidate { vote: usize, name: String },
    IncompleteRanking {
        vote: usize,
        missing: Vec<String>,
        repeated: Vec<String>,
    },
    ZeroMultiplicity { vote: usize },
    VoteCountOverflow,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(line) = self.line {
            write!(f, "line {line}: ")?;
        }
        match &self.kind {
            ViolationKind::EmptyCandidateSet => write!(f, "no candidates"),
            ViolationKind::EmptyCandidateName { position } => {
                write!(f, "candidate #{position} has an empty name")
            }
            ViolationKind::ReservedCharacter { name } => {
                write!(f, "candidate name {name:?} contains a reserved character")
            }
            ViolationKind::DuplicateCandidateName { name } => {
                write!(f, "duplicate candidate name {name:?}")
            }
            ViolationKind::UnknownCandidate { vote, name } => {
                write!(f, "vote {vote} names unknown candidate {name:?}")
            }
            ViolationKind::IncompleteRanking {
                vote,
                missing,
                repeated,
            } => {
                write!(f, "vote {vote} is not a complete strict ranking")?;
                if !missing.is_empty() {
                    write!(f, " (missing: {})", missing.join(", "))?;
                }
                if !repeated.is_empty() {
                    write!(f, " (repeated: {})", repeated.join(", "))?;
                }
                Ok(())
            }
            ViolationKind::ZeroMultiplicity { vote } => {
                write!(f, "vote {vote} has multiplicity zero")
            }
            ViolationKind::VoteCountOverflow => write!(f, "total vote count overflows"),
        }
    }
}
