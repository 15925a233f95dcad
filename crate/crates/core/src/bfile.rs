//! OEIS b-files: one `index value` pair per line.
//!
//! Lines starting with `#` and blank lines are skipped. Indices must be
//! strictly increasing.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BFile {
    entries: Vec<(i64, BigInt)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("b-file line {line}: {message}")]
pub struct BFileError {
    /// 1-based.
    pub line: usize,
    pub message: String,
}

impl BFile {
    pub fn new() -> Self {
        BFile::default()
    }

    /// Appends an entry; its index must exceed the last one.
    pub fn push(&mut self, index: i64, value: BigInt) {
        assert!(
            self.entries.last().is_none_or(|&(last, _)| last < index),
            "b-file indices must increase"
        );
        self.entries.push((index, value));
    }

    pub fn entries(&self) -> &[(i64, BigInt)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn parse(text: &str) -> Result<BFile, BFileError> {
        let mut out = BFile::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| BFileError {
                line: i + 1,
                message,
            };
            let mut fields = line.split_whitespace();
            let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(err(format!("expected \"index value\", got {line:?}")));
            };
            let index: i64 = index
                .parse()
                .map_err(|_| err(format!("bad index {index:?}")))?;
            let value = BigInt::from_str(value).map_err(|_| err(format!("bad value {value:?}")))?;
            if let Some(&(last, _)) = out.entries.last() {
                if index <= last {
                    return Err(err(format!("index {index} does not follow {last}")));
                }
            }
            out.entries.push((index, value));
        }
        Ok(out)
    }

    /// Exactly `index value` per line, no header.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, v) in &self.entries {
            writeln!(out, "{i} {v}").unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rules() {
        let b =
            BFile::parse("# A061775\n\n1 1\n2 2\n  3   3  \n# trailing\n4 -12345678901234567890\n")
                .unwrap();
        assert_eq!(b.len(), 4);
        assert_eq!(b.entries()[2], (3, BigInt::from(3)));
        assert_eq!(b.entries()[3].1.to_string(), "-12345678901234567890");
    }

    #[test]
    fn rejects_malformed_lines() {
        let line = |text: &str| BFile::parse(text).unwrap_err().line;
        assert_eq!(line("1 1\n2\n"), 2);
        assert_eq!(line("1 1 1\n"), 1);
        assert_eq!(line("x 1\n"), 1);
        assert_eq!(line("1 y\n"), 1);
        assert_eq!(line("1 1\n# c\n1 2\n"), 3);
        assert_eq!(line("2 1\n1 2\n"), 2);
    }

    #[test]
    fn text_roundtrip() {
        let mut b = BFile::new();
        for i in 1..=5 {
            b.push(i, BigInt::from(i * i));
        }
        assert_eq!(b.to_text(), "1 1\n2 4\n3 9\n4 16\n5 25\n");
        assert_eq!(BFile::parse(&b.to_text()).unwrap(), b);
    }
}
