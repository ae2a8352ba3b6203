//! Parsing, serialization, and diffing of OEIS b-files.
//!
//! A b-file is plain text with one `index value` pair per line, indices
//! strictly increasing. Comment lines start with `#`; blank lines are
//! ignored.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::OeisError;

/// A canonical OEIS sequence id: `A` followed by six digits.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeqId(String);

impl SeqId {
    /// Accepts `A000108`, `a108`, or `108` and canonicalizes.
    pub fn new(raw: &str) -> Result<Self, OeisError> {
        let digits = raw.strip_prefix(['A', 'a']).unwrap_or(raw);
        if digits.is_empty() || digits.len() > 6 || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(OeisError::InvalidId(raw.to_string()));
        }
        Ok(SeqId(format!("A{digits:0>6}")))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Conventional b-file name, e.g. `b000108.txt`.
    pub fn bfile_name(&self) -> String {
        format!("b{}.txt", &self.0[1..])
    }

    /// URL of the b-file under `base`, e.g. `https://oeis.org/A000108/b000108.txt`.
    pub fn bfile_url(&self, base: &str) -> String {
        format!("{}/{}/{}", base.trim_end_matches('/'), self.0, self.bfile_name())
    }
}

impl FromStr for SeqId {
    type Err = OeisError;
    fn from_str(s: &str) -> Result<Self, OeisError> {
        SeqId::new(s)
    }
}

impl fmt::Display for SeqId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A parsed b-file: ordered `(index, value)` entries for one sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub id: SeqId,
    pub entries: Vec<(i64, BigUint)>,
}

impl BFile {
    /// Parses b-file text. Values must be nonnegative integers and indices
    /// strictly increasing; violations report the 1-based line number.
    pub fn parse(id: SeqId, text: &str) -> Result<Self, OeisError> {
        let mut entries: Vec<(i64, BigUint)> = Vec::new();
        for (line_no, line) in text.lines().enumerate() {
            let line_no = line_no + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let (Some(idx), Some(val), None) = (tokens.next(), tokens.next(), tokens.next())
            else {
                return Err(OeisError::Parse {
                    line: line_no,
                    reason: format!("expected `index value`, got {line:?}"),
                });
            };
            let index: i64 = idx.parse().map_err(|_| OeisError::Parse {
                line: line_no,
                reason: format!("bad index {idx:?}"),
            })?;
            let value: BigUint = val.parse().map_err(|_| OeisError::Parse {
                line: line_no,
                reason: format!("bad value {val:?}"),
            })?;
            if let Some((last, _)) = entries.last() {
                if index <= *last {
                    return Err(OeisError::Parse {
                        line: line_no,
                        reason: format!("index {index} does not increase past {last}"),
                    });
                }
            }
            entries.push((index, value));
        }
        Ok(BFile { id, entries })
    }

    /// Renders back to b-file text. `parse(serialize(f)) == f`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (index, value) in &self.entries {
            out.push_str(&format!("{index} {value}\n"));
        }
        out
    }

    pub fn first_index(&self) -> Option<i64> {
        self.entries.first().map(|(i, _)| *i)
    }

    pub fn last_index(&self) -> Option<i64> {
        self.entries.last().map(|(i, _)| *i)
    }
}

/// First divergence between a local sequence and a remote b-file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: i64,
    pub local: BigUint,
    pub remote: BigUint,
}

/// Outcome of comparing a locally computed range against a b-file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffReport {
    pub id: SeqId,
    pub compared: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl DiffReport {
    pub fn is_clean(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_mismatch {
            None => write!(f, "{}: {} entries compared, clean", self.id, self.compared),
            Some(m) => write!(
                f,
                "{}: mismatch at index {} (local {}, remote {})",
                self.id, m.index, m.local, m.remote
            ),
        }
    }
}

/// Compares local values indexed from `local_start` against the remote
/// entries, over the overlap of the two index ranges.
///
/// Reports the first divergent index, or a clean pass with the number of
/// entries compared. Non-overlapping ranges are an error, not a clean pass.
pub fn compare(
    local_start: i64,
    local: &[BigUint],
    remote: &BFile,
) -> Result<DiffReport, OeisError> {
    if local.is_empty() {
        return Err(OeisError::EmptyInput("local sequence is empty"));
    }
    let (Some(remote_start), Some(remote_end)) = (remote.first_index(), remote.last_index())
    else {
        return Err(OeisError::EmptyInput("remote b-file has no entries"));
    };
    let local_end = local_start + local.len() as i64 - 1;
    if local_end < remote_start || remote_end < local_start {
        return Err(OeisError::DisjointRanges {
            local_start,
            local_end,
            remote_start,
            remote_end,
        });
    }
    let mut compared = 0;
    let mut first_mismatch = None;
    for (index, value) in &remote.entries {
        if *index < local_start || *index > local_end {
            continue;
        }
        compared += 1;
        let ours = &local[(index - local_start) as usize];
        if ours != value {
            first_mismatch = Some(Mismatch {
                index: *index,
                local: ours.clone(),
                remote: value.clone(),
            });
            break;
        }
    }
    Ok(DiffReport { id: remote.id.clone(), compared, first_mismatch })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> SeqId {
        SeqId::new(s).unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn id_normalization() {
        assert_eq!(id("A000108").as_str(), "A000108");
        assert_eq!(id("a108").as_str(), "A000108");
        assert_eq!(id("36991").as_str(), "A036991");
        assert_eq!(id("A036991").bfile_name(), "b036991.txt");
        assert_eq!(
            id("A036991").bfile_url("https://oeis.org"),
            "https://oeis.org/A036991/b036991.txt"
        );
        assert!(SeqId::new("").is_err());
        assert!(SeqId::new("A12345678").is_err());
        assert!(SeqId::new("B000108").is_err());
        assert!(SeqId::new("A00x108").is_err());
    }

    #[test]
    fn parse_skips_comments_and_blanks() {
        let f = BFile::parse(id("A000225"), "# head\n\n0 0\n1 1\n2 3\n").unwrap();
        assert_eq!(f.entries, vec![(0, big(0)), (1, big(1)), (2, big(3))]);
        let single = BFile::parse(id("A000225"), "5 31").unwrap();
        assert_eq!(single.entries, vec![(5, big(31))]);
    }

    #[test]
    fn parse_rejects_bad_lines() {
        let repeat = BFile::parse(id("A000225"), "1 1\n1 2\n");
        assert!(matches!(repeat, Err(OeisError::Parse { line: 2, .. })), "{repeat:?}");
        let junk = BFile::parse(id("A000225"), "1 1\ntwo 3\n");
        assert!(matches!(junk, Err(OeisError::Parse { line: 2, .. })));
        let negative_value = BFile::parse(id("A000225"), "1 -1\n");
        assert!(matches!(negative_value, Err(OeisError::Parse { line: 1, .. })));
        let extra = BFile::parse(id("A000225"), "1 1 1\n");
        assert!(matches!(extra, Err(OeisError::Parse { line: 1, .. })));
    }

    #[test]
    fn compare_reports_first_divergence() {
        let remote = BFile::parse(id("A001405"), "0 1\n1 1\n2 2\n3 3\n4 6\n5 10\n").unwrap();
        let local: Vec<BigUint> = [1u64, 1, 2, 3, 6, 10].map(big).to_vec();
        let clean = compare(0, &local, &remote).unwrap();
        assert!(clean.is_clean());
        assert_eq!(clean.compared, 6);

        let mut corrupted = local.clone();
        corrupted[3] = big(4);
        let diff = compare(0, &corrupted, &remote).unwrap();
        assert_eq!(
            diff.first_mismatch,
            Some(Mismatch { index: 3, local: big(4), remote: big(3) })
        );
        assert_eq!(diff.compared, 4);
    }

    #[test]
    fn compare_handles_offsets_and_disjoint_ranges() {
        let remote = BFile::parse(id("A000225"), "3 7\n4 15\n5 31\n").unwrap();
        let local: Vec<BigUint> = [1u64, 3, 7, 15].map(big).to_vec();
        // local indices 1..=4 overlap remote 3..=5 on {3, 4}
        let diff = compare(1, &local, &remote).unwrap();
        assert!(diff.is_clean());
        assert_eq!(diff.compared, 2);

        assert!(matches!(
            compare(10, &local, &remote),
            Err(OeisError::DisjointRanges { .. })
        ));
    }

    #[test]
    fn mismatch_position_is_symmetric() {
        let a: Vec<BigUint> = [1u64, 2, 3, 4, 5].map(big).to_vec();
        let b: Vec<BigUint> = [1u64, 2, 9, 4, 5].map(big).to_vec();
        let as_file = |vals: &[BigUint]| BFile {
            id: id("A000001"),
            entries: vals.iter().cloned().enumerate().map(|(i, v)| (i as i64, v)).collect(),
        };
        let d1 = compare(0, &a, &as_file(&b)).unwrap();
        let d2 = compare(0, &b, &as_file(&a)).unwrap();
        assert_eq!(d1.first_mismatch.unwrap().index, 2);
        assert_eq!(d2.first_mismatch.unwrap().index, 2);
    }
}
