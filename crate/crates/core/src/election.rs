//! Candidates, votes and elections.
//!
//! Candidates are addressed by dense ids `0..m`; names only matter at I/O
//! boundaries. Votes are stored once per distinct input line together with a
//! positive multiplicity, so `n` can be large without expanding duplicates.

use std::collections::HashMap;

use crate::error::{Error, Result, Violation, ViolationKind};

/// Dense candidate index in `0..m`.
pub type CandidateId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Candidate {
    pub id: CandidateId,
    pub name: String,
}

/// A complete strict ranking, most preferred first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vote(Vec<CandidateId>);

impl Vote {
    pub fn ranking(&self) -> &[CandidateId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// First and second choice of this vote.
    pub fn top_two(&self) -> Result<(CandidateId, CandidateId)> {
        match self.0.as_slice() {
            [first, second, ..] => Ok((*first, *second)),
            _ => Err(Error::TooFewCandidates { m: self.0.len() }),
        }
    }
}

/// Free function form of [`Vote::top_two`].
pub fn top_two(vote: &Vote) -> Result<(CandidateId, CandidateId)> {
    vote.top_two()
}

/// Unvalidated election input, rankings given by candidate name.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawElection {
    pub candidates: Vec<String>,
    pub header_line: Option<usize>,
    pub votes: Vec<RawVote>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawVote {
    pub ranking: Vec<String>,
    pub multiplicity: u64,
    pub line: Option<usize>,
}

impl RawVote {
    pub fn new<S: Into<String>>(ranking: impl IntoIterator<Item = S>, multiplicity: u64) -> Self {
        RawVote {
            ranking: ranking.into_iter().map(Into::into).collect(),
            multiplicity,
            line: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Election {
    candidates: Vec<Candidate>,
    votes: Vec<(Vote, u64)>,
    n: u64,
}

impl Election {
    /// Builds an election from names and id-based rankings.
    pub fn from_ids<S: AsRef<str>>(names: &[S], votes: Vec<(Vec<CandidateId>, u64)>) -> Result<Self> {
        let raw = RawElection {
            candidates: names.iter().map(|s| s.as_ref().to_owned()).collect(),
            header_line: None,
            votes: Vec::new(),
        };
        let candidates = validate_candidates(&raw)?;
        let m = candidates.len();
        let mut violations = Vec::new();
        let mut checked = Vec::with_capacity(votes.len());
        for (index, (ranking, multiplicity)) in votes.into_iter().enumerate() {
            let mut unknown = false;
            for &id in &ranking {
                if id >= m {
                    unknown = true;
                    violations.push(located(
                        ViolationKind::UnknownCandidate {
                            vote: index,
                            name: id.to_string(),
                        },
                        None,
                    ));
                }
            }
            if !unknown {
                check_permutation(&ranking, &candidates, index, None, &mut violations);
            }
            if multiplicity == 0 {
                violations.push(located(ViolationKind::ZeroMultiplicity { vote: index }, None));
            }
            checked.push((Vote(ranking), multiplicity));
        }
        finish(candidates, checked, violations)
    }

    pub fn m(&self) -> usize {
        self.candidates.len()
    }

    /// Total number of votes, counting multiplicities.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn candidates(&self) -> &[Candidate] {
        &self.candidates
    }

    pub fn names(&self) -> Vec<&str> {
        self.candidates.iter().map(|c| c.name.as_str()).collect()
    }

    pub fn name(&self, id: CandidateId) -> &str {
        &self.candidates[id].name
    }

    pub fn id_of(&self, name: &str) -> Option<CandidateId> {
        self.candidates.iter().position(|c| c.name == name.trim())
    }

    /// Vote list in input order, one entry per distinct input line.
    pub fn votes(&self) -> &[(Vote, u64)] {
        &self.votes
    }
}

/// Validates raw input, reporting every violation found rather than the first.
pub fn validate_election(raw: &RawElection) -> Result<Election> {
    let candidates = validate_candidates(raw)?;
    let index: HashMap<&str, CandidateId> = candidates
        .iter()
        .map(|c| (c.name.as_str(), c.id))
        .collect();

    let mut violations = Vec::new();
    let mut votes = Vec::with_capacity(raw.votes.len());
    for (vote_index, raw_vote) in raw.votes.iter().enumerate() {
        let mut ranking = Vec::with_capacity(raw_vote.ranking.len());
        let mut unknown = false;
        for name in &raw_vote.ranking {
            match index.get(name.trim()) {
                Some(&id) => ranking.push(id),
                None => {
                    unknown = true;
                    violations.push(located(
                        ViolationKind::UnknownCandidate {
                            vote: vote_index,
                            name: name.trim().to_owned(),
                        },
                        raw_vote.line,
                    ));
                }
            }
        }
        if !unknown {
            check_permutation(&ranking, &candidates, vote_index, raw_vote.line, &mut violations);
        }
        if raw_vote.multiplicity == 0 {
            violations.push(located(
                ViolationKind::ZeroMultiplicity { vote: vote_index },
                raw_vote.line,
            ));
        }
        votes.push((Vote(ranking), raw_vote.multiplicity));
    }
    finish(candidates, votes, violations)
}

fn located(kind: ViolationKind, line: Option<usize>) -> Violation {
    Violation { kind, line }
}

fn validate_candidates(raw: &RawElection) -> Result<Vec<Candidate>> {
    let line = raw.header_line;
    if raw.candidates.is_empty() {
        return Err(Error::Invalid(vec![located(ViolationKind::EmptyCandidateSet, line)]));
    }
    let mut violations = Vec::new();
    let mut seen: HashMap<&str, usize> = HashMap::new();
    for (position, name) in raw.candidates.iter().enumerate() {
        let name = name.trim();
        if name.is_empty() {
            violations.push(located(ViolationKind::EmptyCandidateName { position }, line));
            continue;
        }
        if name.contains([',', '>', '\n', '\r']) {
            violations.push(located(
                ViolationKind::ReservedCharacter {
                    name: name.to_owned(),
                },
                line,
            ));
        }
        let count = seen.entry(name).or_default();
        *count += 1;
        if *count == 2 {
            violations.push(located(
                ViolationKind::DuplicateCandidateName {
                    name: name.to_owned(),
                },
                line,
            ));
        }
    }
    if !violations.is_empty() {
        return Err(Error::Invalid(violations));
    }
    Ok(raw
        .candidates
        .iter()
        .enumerate()
        .map(|(id, name)| Candidate {
            id,
            name: name.trim().to_owned(),
        })
        .collect())
}

fn check_permutation(
    ranking: &[CandidateId],
    candidates: &[Candidate],
    vote: usize,
    line: Option<usize>,
    violations: &mut Vec<Violation>,
) {
    let mut seen = vec![0usize; candidates.len()];
    for &id in ranking {
        seen[id] += 1;
    }
    let missing: Vec<String> = seen
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c == 0)
        .map(|(id, _)| candidates[id].name.clone())
        .collect();
    let repeated: Vec<String> = seen
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 1)
        .map(|(id, _)| candidates[id].name.clone())
        .collect();
    if !missing.is_empty() || !repeated.is_empty() {
        violations.push(located(
            ViolationKind::IncompleteRanking {
                vote,
                missing,
                repeated,
            },
            line,
        ));
    }
}

fn finish(
    candidates: Vec<Candidate>,
    votes: Vec<(Vote, u64)>,
    mut violations: Vec<Violation>,
) -> Result<Election> {
    let n = votes
        .iter()
        .try_fold(0u64, |acc, &(_, k)| acc.checked_add(k));
    if n.is_none() {
        violations.push(located(ViolationKind::VoteCountOverflow, None));
    }
    if !violations.is_empty() {
        return Err(Error::Invalid(violations));
    }
    Ok(Election {
        candidates,
        votes,
        n: n.unwrap_or_default(),
    })
}
