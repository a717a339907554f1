//! Reading and writing preference profiles.
//!
//! Two formats are supported:
//!
//! * the native line format
//!
//!   ```text
//!   # comment
//!   candidates: a, b, c
//!   2: a > b > c
//!   1: c > a > b
//!   ```
//!
//! * PrefLib strict complete orders (`.soc`), with `# KEY: value` metadata
//!   lines followed by `<count>: <id>,<id>,...` data lines using 1-based ids.
//!
//! Blank lines are ignored in both. Every error carries a 1-based line number.

use std::collections::BTreeMap;

use crate::election::{validate_election, Election, RawElection, RawVote};
use crate::error::{Error, Result};

const HEADER: &str = "candidates:";

/// Largest alternative count a PrefLib file may declare.
pub const MAX_ALTERNATIVES: usize = 1 << 16;

/// 1-based column of `offset` (a byte offset into `line`).
fn column(line: &str, offset: usize) -> usize {
    line.get(..offset).map_or(1, |p| p.chars().count() + 1)
}

/// Byte offset of `part` inside `line`; `part` must be a subslice of `line`.
fn offset_in(line: &str, part: &str) -> usize {
    (part.as_ptr() as usize).saturating_sub(line.as_ptr() as usize)
}

fn decode(bytes: &[u8]) -> Result<&str> {
    std::str::from_utf8(bytes).map_err(|e| {
        let valid = &bytes[..e.valid_up_to()];
        let line = valid.iter().filter(|&&b| b == b'\n').count() + 1;
        let line_start = valid.iter().rposition(|&b| b == b'\n').map_or(0, |p| p + 1);
        let prefix = std::str::from_utf8(&valid[line_start..]).unwrap_or_default();
        Error::syntax(line, prefix.chars().count() + 1, "invalid UTF-8")
    })
}

/// Gives document-level violations (such as a vote total overflow) a line.
fn locate(err: Error, fallback: usize) -> Error {
    match err {
        Error::Invalid(mut violations) => {
            for v in &mut violations {
                v.line.get_or_insert(fallback);
            }
            Error::Invalid(violations)
        }
        other => other,
    }
}

/// Splits `<count>: <rest>` and parses the positive count.
fn split_count<'a>(line_no: usize, line: &'a str) -> Result<(u64, &'a str)> {
    let Some((count, rest)) = line.split_once(':') else {
        return Err(Error::syntax(
            line_no,
            1,
            "expected `<count>: <ranking>`",
        ));
    };
    let trimmed = count.trim();
    let col = column(line, offset_in(line, trimmed));
    if trimmed.is_empty() || !trimmed.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::syntax(line_no, col, "vote count must be a positive integer"));
    }
    let count: u64 = trimmed
        .parse()
        .map_err(|_| Error::syntax(line_no, col, "vote count is too large"))?;
    if count == 0 {
        return Err(Error::syntax(line_no, col, "vote count must be positive"));
    }
    Ok((count, rest))
}

/// Splits `text` on `sep`, requiring every piece to be non-empty after trimming.
fn split_names<'a>(
    line_no: usize,
    line: &'a str,
    text: &'a str,
    sep: char,
) -> Result<Vec<String>> {
    text.split(sep)
        .map(|piece| {
            let name = piece.trim();
            if name.is_empty() {
                Err(Error::syntax(
                    line_no,
                    column(line, offset_in(line, piece)),
                    "expected a candidate name",
                ))
            } else {
                Ok(name.to_owned())
            }
        })
        .collect()
}

/// Parses the native profile format.
pub fn parse_native(text: &str) -> Result<Election> {
    let mut raw = RawElection::default();
    let mut header_seen = false;
    let mut last_line = 0;

    for (index, line) in text.lines().enumerate() {
        let line_no = index + 1;
        last_line = line_no;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix(HEADER) {
            if header_seen {
                return Err(Error::syntax(
                    line_no,
                    column(line, offset_in(line, trimmed)),
                    "duplicate `candidates:` line",
                ));
            }
            if !raw.votes.is_empty() {
                return Err(Error::syntax(
                    line_no,
                    column(line, offset_in(line, trimmed)),
                    "`candidates:` must precede every ranking line",
                ));
            }
            header_seen = true;
            raw.header_line = Some(line_no);
            raw.candidates = split_names(line_no, line, rest, ',')?;
            continue;
        }
        if !header_seen {
            return Err(Error::syntax(
                line_no,
                column(line, offset_in(line, trimmed)),
                "ranking line before the `candidates:` line",
            ));
        }
        let (multiplicity, ranking) = split_count(line_no, line)?;
        raw.votes.push(RawVote {
            ranking: split_names(line_no, line, ranking, '>')?,
            multiplicity,
            line: Some(line_no),
        });
    }

    if !header_seen {
        return Err(Error::syntax(last_line.max(1), 1, "missing `candidates:` line"));
    }
    validate_election(&raw).map_err(|e| locate(e, last_line.max(1)))
}

pub fn parse_native_bytes(bytes: &[u8]) -> Result<Election> {
    parse_native(decode(bytes)?)
}

/// Parses a PrefLib strict-complete-order profile.
///
/// Recognized metadata: `NUMBER ALTERNATIVES`, `ALTERNATIVE NAME <i>`,
/// `NUMBER VOTERS`, `NUMBER UNIQUE ORDERS` and `DATA TYPE`. Other keys are
/// ignored. Alternatives without a name are named by their 1-based number.
pub fn parse_preflib_soc(text: &str) -> Result<Election> {
    let mut declared: Option<(usize, usize)> = None; // (count, line)
    let mut names: BTreeMap<usize, (String, usize)> = BTreeMap::new();
    let mut voters: Option<(u64, usize)> = None;
    let mut unique: Option<(usize, usize)> = None;
    let mut data: Vec<(u64, Vec<usize>, usize)> = Vec::new();
    let mut last_line = 0;

    for (index, line) in text.lines().enumerate() {
        let line_no = index + 1;
        last_line = line_no;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(meta) = trimmed.strip_prefix('#') {
            let Some((key, value)) = meta.split_once(':') else {
                continue;
            };
            let key = key.trim().to_ascii_uppercase();
            let value_col = column(line, offset_in(line, value.trim()));
            let number = |what: &str| -> Result<u64> {
                value.trim().parse::<u64>().map_err(|_| {
                    Error::syntax(line_no, value_col, format!("{what} must be a non-negative integer"))
                })
            };
            if key == "NUMBER ALTERNATIVES" {
                declared = Some((number("NUMBER ALTERNATIVES")? as usize, line_no));
            } else if key == "NUMBER VOTERS" {
                voters = Some((number("NUMBER VOTERS")?, line_no));
            } else if key == "NUMBER UNIQUE ORDERS" {
                unique = Some((number("NUMBER UNIQUE ORDERS")? as usize, line_no));
            } else if key == "DATA TYPE" {
                let kind = value.trim().to_ascii_lowercase();
                if kind != "soc" {
                    return Err(Error::UnsupportedProfile {
                        line: line_no,
                        message: format!("data type {kind:?}; only strict complete orders (soc) are supported"),
                    });
                }
            } else if let Some(id) = key.strip_prefix("ALTERNATIVE NAME") {
                let id_text = id.trim();
                let id: usize = id_text.parse().map_err(|_| {
                    Error::syntax(line_no, 1, "ALTERNATIVE NAME needs a numeric index")
                })?;
                if names
                    .insert(id, (value.trim().to_owned(), line_no))
                    .is_some()
                {
                    return Err(Error::InconsistentMetadata {
                        line: line_no,
                        message: format!("alternative {id} is named twice"),
                    });
                }
            }
            continue;
        }

        let (count, order) = split_count(line_no, line)?;
        if let Some(pos) = order.find(['{', '}']) {
            return Err(Error::UnsupportedProfile {
                line: line_no,
                message: format!(
                    "tie at column {}; only strict orders are supported",
                    column(line, offset_in(line, order) + pos)
                ),
            });
        }
        let ids = order
            .split(',')
            .map(|piece| {
                let t = piece.trim();
                t.parse::<usize>().map_err(|_| {
                    Error::syntax(
                        line_no,
                        column(line, offset_in(line, piece)),
                        "expected an alternative number",
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?;
        data.push((count, ids, line_no));
    }

    let m = match declared {
        Some((m, _)) => m,
        None => {
            let from_names = names.keys().next_back().copied().unwrap_or(0);
            let from_data = data
                .iter()
                .flat_map(|(_, ids, _)| ids.iter().copied())
                .max()
                .unwrap_or(0);
            from_names.max(from_data)
        }
    };
    let declared_line = declared.map_or(1, |(_, line)| line);
    if m > MAX_ALTERNATIVES {
        return Err(Error::UnsupportedProfile {
            line: declared_line,
            message: format!("{m} alternatives exceeds the limit of {MAX_ALTERNATIVES}"),
        });
    }
    if m == 0 {
        return Err(Error::InconsistentMetadata {
            line: declared_line.min(last_line.max(1)),
            message: "profile declares no alternatives".into(),
        });
    }
    for (&id, &(_, line)) in &names {
        if id == 0 || id > m {
            return Err(Error::InconsistentMetadata {
                line,
                message: format!("alternative {id} is outside 1..={m}"),
            });
        }
    }

    let mut candidates: Vec<String> = (1..=m).map(|i| i.to_string()).collect();
    for (&id, (name, _)) in &names {
        candidates[id - 1] = name.clone();
    }

    let mut raw = RawElection {
        candidates,
        header_line: Some(declared_line),
        votes: Vec::with_capacity(data.len()),
    };
    let mut total: u64 = 0;
    for (count, ids, line) in &data {
        if let Some(&bad) = ids.iter().find(|&&id| id == 0 || id > m) {
            return Err(Error::InconsistentMetadata {
                line: *line,
                message: format!("alternative {bad} is outside 1..={m}"),
            });
        }
        if ids.len() < m {
            return Err(Error::UnsupportedProfile {
                line: *line,
                message: format!("incomplete order ranks {} of {m} alternatives", ids.len()),
            });
        }
        total = total.saturating_add(*count);
        raw.votes.push(RawVote {
            ranking: ids.iter().map(|&id| raw.candidates[id - 1].clone()).collect(),
            multiplicity: *count,
            line: Some(*line),
        });
    }
    if let Some((expected, line)) = voters {
        if expected != total {
            return Err(Error::InconsistentMetadata {
                line,
                message: format!("declares {expected} voters, data has {total}"),
            });
        }
    }
    if let Some((expected, line)) = unique {
        if expected != data.len() {
            return Err(Error::InconsistentMetadata {
                line,
                message: format!("declares {expected} unique orders, data has {}", data.len()),
            });
        }
    }
    validate_election(&raw).map_err(|e| locate(e, last_line.max(1)))
}

pub fn parse_preflib_soc_bytes(bytes: &[u8]) -> Result<Election> {
    parse_preflib_soc(decode(bytes)?)
}

/// Serializes to the native format. Candidates appear in id order and votes in
/// list order, so `parse_native(&write_native(e)) == e`.
pub fn write_native(e: &Election) -> String {
    let names = e.names();
    let mut out = format!("{HEADER} {}\n", names.join(", "));
    for (vote, multiplicity) in e.votes() {
        let ranking: Vec<&str> = vote.ranking().iter().map(|&id| names[id]).collect();
        out.push_str(&format!("{multiplicity}: {}\n", ranking.join(" > ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::ViolationKind;
    use proptest::prelude::*;

    #[test]
    fn native_minimal() {
        let e = parse_native("candidates: a, b\n1: a > b\n1: b > a").unwrap();
        assert_eq!((e.m(), e.n()), (2, 2));
        assert_eq!(e.names(), ["a", "b"]);
    }

    #[test]
    fn native_multiplicity() {
        let e = parse_native("candidates: a, b\n3: a > b").unwrap();
        assert_eq!((e.m(), e.n()), (2, 3));
        assert_eq!(e.votes().len(), 1);
        assert_eq!(e.votes()[0].1, 3);
    }

    #[test]
    fn native_missing_header() {
        let err = parse_native("1: a > b").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 1, column: 1, .. }), "{err:?}");
        let err = parse_native("# only a comment\n\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, .. }), "{err:?}");
        assert!(matches!(parse_native(""), Err(Error::Syntax { line: 1, .. })));
    }

    #[test]
    fn native_comments_and_whitespace() {
        let text = "# header\n  candidates:a ,b,  c  \n\n2 :  c>b > a\n# trailing\n";
        let e = parse_native(text).unwrap();
        assert_eq!(e.names(), ["a", "b", "c"]);
        assert_eq!(e.votes()[0].0.ranking(), &[2, 1, 0]);
        assert_eq!(e.n(), 2);
    }

    #[test]
    fn native_syntax_errors_are_located() {
        let cases = [
            ("candidates: a, b\ncandidates: a, b", 2, 1),
            ("candidates: a, b\nx: a > b", 2, 1),
            ("candidates: a, b\n0: a > b", 2, 1),
            ("candidates: a, b\n1 a > b", 2, 1),
            ("candidates: a, b\n1: a >", 2, 7),
            ("candidates: a,,b", 1, 15),
            ("candidates: a, b\n99999999999999999999999: a > b", 2, 1),
        ];
        for (text, line, col) in cases {
            match parse_native(text) {
                Err(Error::Syntax { line: l, column: c, .. }) => {
                    assert_eq!((l, c), (line, col), "{text:?}")
                }
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn native_validation_errors_carry_lines() {
        let err = parse_native("candidates: a, b, c\n1: a > b > c\n1: a > b").unwrap_err();
        assert_eq!(err.line(), Some(3));
        let Error::Invalid(v) = err else { unreachable!() };
        assert!(matches!(v[0].kind, ViolationKind::IncompleteRanking { vote: 1, .. }));

        let err = parse_native("candidates: a, a\n").unwrap_err();
        assert_eq!(err.line(), Some(1));
        let err = parse_native("candidates: a, b\n1: a > z").unwrap_err();
        assert_eq!(err.line(), Some(2));
    }

    #[test]
    fn invalid_utf8_is_located() {
        let err = parse_native_bytes(b"candidates: a, b\n1: a \xff> b\n").unwrap_err();
        assert_eq!(err, Error::syntax(2, 6, "invalid UTF-8"));
    }

    #[test]
    fn soc_minimal() {
        let e = parse_preflib_soc("# NUMBER ALTERNATIVES: 2\n1: 1,2\n1: 2,1").unwrap();
        assert_eq!((e.m(), e.n()), (2, 2));
        assert_eq!(e.votes()[1].0.ranking(), &[1, 0]);
    }

    #[test]
    fn soc_multiplicity_and_names() {
        let text = "# FILE NAME: x.soc\n# DATA TYPE: soc\n# NUMBER ALTERNATIVES: 3\n\
                    # ALTERNATIVE NAME 1: Kiwi\n# ALTERNATIVE NAME 3: Fig\n\
                    # NUMBER VOTERS: 2\n# NUMBER UNIQUE ORDERS: 1\n2: 1,2,3\n";
        let e = parse_preflib_soc(text).unwrap();
        assert_eq!(e.names(), ["Kiwi", "2", "Fig"]);
        assert_eq!(e.votes().len(), 1);
        assert_eq!(e.votes()[0].1, 2);
        assert_eq!(e.votes()[0].0.ranking(), &[0, 1, 2]);
    }

    #[test]
    fn soc_rejects_ties_and_incomplete() {
        let err = parse_preflib_soc("# NUMBER ALTERNATIVES: 3\n1: {1,2},3").unwrap_err();
        assert!(matches!(err, Error::UnsupportedProfile { line: 2, .. }), "{err:?}");
        let err = parse_preflib_soc("# NUMBER ALTERNATIVES: 3\n1: 1,2").unwrap_err();
        assert!(matches!(err, Error::UnsupportedProfile { line: 2, .. }), "{err:?}");
        let err = parse_preflib_soc("# DATA TYPE: toc\n1: 1,2").unwrap_err();
        assert!(matches!(err, Error::UnsupportedProfile { line: 1, .. }), "{err:?}");
    }

    #[test]
    fn soc_metadata_mismatches() {
        let err = parse_preflib_soc("# NUMBER ALTERNATIVES: 2\n1: 1,2,3").unwrap_err();
        assert!(matches!(err, Error::InconsistentMetadata { line: 2, .. }), "{err:?}");
        let err = parse_preflib_soc("# NUMBER ALTERNATIVES: 2\n# ALTERNATIVE NAME 3: x\n1: 1,2")
            .unwrap_err();
        assert!(matches!(err, Error::InconsistentMetadata { line: 2, .. }), "{err:?}");
        let err = parse_preflib_soc("# NUMBER ALTERNATIVES: 2\n# NUMBER VOTERS: 5\n1: 1,2")
            .unwrap_err();
        assert!(matches!(err, Error::InconsistentMetadata { line: 2, .. }), "{err:?}");
        let err = parse_preflib_soc("# NUMBER ALTERNATIVES: 0\n").unwrap_err();
        assert!(matches!(err, Error::InconsistentMetadata { line: 1, .. }), "{err:?}");
    }

    #[test]
    fn soc_repeated_alternative_fails_validation() {
        let err = parse_preflib_soc("# NUMBER ALTERNATIVES: 2\n1: 1,1").unwrap_err();
        assert_eq!(err.line(), Some(2));
        assert!(matches!(err, Error::Invalid(_)));
    }

    #[test]
    fn soc_absurd_alternative_count() {
        let err = parse_preflib_soc("# NUMBER ALTERNATIVES: 18446744073709551615
").unwrap_err();
        assert!(matches!(err, Error::UnsupportedProfile { line: 1, .. }), "{err:?}");
        let err = parse_preflib_soc("1: 1,99999999999
").unwrap_err();
        assert!(matches!(err, Error::UnsupportedProfile { line: 1, .. }), "{err:?}");
    }

    #[test]
    fn soc_count_inferred_without_declaration() {
        let e = parse_preflib_soc("1: 3,1,2\n").unwrap();
        assert_eq!(e.m(), 3);
    }

    #[test]
    fn soc_ignores_unknown_keys() {
        let e = parse_preflib_soc("# TITLE: whatever: here\n# NUMBER ALTERNATIVES: 2\n1: 2,1").unwrap();
        assert_eq!(e.n(), 1);
    }

    #[test]
    fn write_examples() {
        let e = Election::from_ids(&["a", "b"], vec![(vec![0, 1], 1), (vec![1, 0], 1)]).unwrap();
        assert_eq!(write_native(&e), "candidates: a, b\n1: a > b\n1: b > a\n");
        let empty = Election::from_ids(&["a", "b"], vec![]).unwrap();
        assert_eq!(write_native(&empty), "candidates: a, b\n");
    }

    fn arb_election() -> impl Strategy<Value = Election> {
        (1usize..7).prop_flat_map(|m| {
            let names = prop::collection::hash_set("[A-Za-z][A-Za-z0-9 _.-]{0,6}[A-Za-z0-9]", m);
            let vote = (Just((0..m).collect::<Vec<_>>()).prop_shuffle(), 1u64..1000);
            (names, prop::collection::vec(vote, 0..8)).prop_map(|(names, votes)| {
                let names: Vec<String> = names.into_iter().collect();
                Election::from_ids(&names, votes).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn native_round_trip(e in arb_election()) {
            prop_assert_eq!(parse_native(&write_native(&e)).unwrap(), e);
        }

        #[test]
        fn parsers_never_panic(bytes in prop::collection::vec(any::<u8>(), 0..200)) {
            if let Err(err) = parse_native_bytes(&bytes) {
                prop_assert!(err.line().is_some(), "{err:?}");
            }
            if let Err(err) = parse_preflib_soc_bytes(&bytes) {
                prop_assert!(err.line().is_some(), "{err:?}");
            }
        }

        #[test]
        fn parsers_never_panic_on_near_miss_text(
            text in "(candidates:|#|[0-9]{1,3}:|[ ,>{}a-c1-3]|\n){0,40}"
        ) {
            if let Err(err) = parse_native(&text) {
                prop_assert!(err.line().is_some(), "{err:?}");
            }
            if let Err(err) = parse_preflib_soc(&text) {
                prop_assert!(err.line().is_some(), "{err:?}");
            }
        }
    }
}
