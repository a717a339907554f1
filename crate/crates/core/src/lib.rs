//! Recognition of linked preference domains.
//!
//! An election is *linked* when its candidates can be ordered so that the
//! first two are connected and every later candidate is connected to at
//! least two earlier ones, where `a` and `b` are connected if some vote ranks
//! `a` first and `b` second and another ranks `b` first and `a` second.
//!
//! ```
//! use linked_domain::{parse_native, recognize_election, Mode};
//!
//! let e = parse_native(
//!     "candidates: a, b, c\n\
//!      1: a > b > c\n1: b > a > c\n1: a > c > b\n1: c > a > b\n\
//!      1: b > c > a\n1: c > b > a\n",
//! )
//! .unwrap();
//! let result = recognize_election(&e, Mode::Strong).unwrap();
//! assert_eq!(result.witness().unwrap().as_slice(), &[0, 1, 2]);
//! ```

pub mod connectivity;
pub mod election;
pub mod error;
pub mod generate;
pub mod oracle;
pub mod profile_io;
pub mod recognition;

pub use connectivity::{build_graph, export_dot, top_pair_set, ConnectivityGraph, Mode};
pub use election::{top_two, validate_election, Candidate, CandidateId, Election, RawElection, RawVote, Vote};
pub use error::{Error, Result, Violation, ViolationKind};
pub use profile_io::{parse_native, parse_preflib_soc, write_native};
#[cfg(feature = "parallel")]
pub use recognition::recognize_parallel;
pub use recognition::{
    greedy_closure, recognize, recognize_election, verify_certificate, verify_witness, Certificate,
    ClosureState, LinkedOrder, RecognitionResult, Verdict,
};
