//! Interval representations with integer endpoints.
//!
//! Text format: the first significant line is `n`, followed by `n` lines
//! `a b` (closed interval, `a <= b`). Ids are assigned 1..n in file order.
//! `#` comments and blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A family of closed integer intervals, one per vertex id 1..n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalRep {
    intervals: Vec<(i64, i64)>,
}

impl IntervalRep {
    pub fn new(intervals: Vec<(i64, i64)>) -> Result<Self> {
        for (i, &(a, b)) in intervals.iter().enumerate() {
            if a > b {
                return Err(Error::Argument(format!(
                    "interval {} has left endpoint {a} greater than right endpoint {b}",
                    i + 1
                )));
            }
        }
        if intervals.is_empty() {
            return Err(Error::Argument("need at least one interval".into()));
        }
        Ok(IntervalRep { intervals })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut count: Option<usize> = None;
        let mut intervals: Vec<(i64, i64)> = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            last_line = lineno;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match count {
                None => {
                    let n: usize = line
                        .parse()
                        .map_err(|_| Error::parse(lineno, "malformed interval count"))?;
                    if n == 0 {
                        return Err(Error::parse(lineno, "interval count must be positive"));
                    }
                    count = Some(n);
                }
                Some(n) => {
                    if intervals.len() == n {
                        return Err(Error::parse(
                            lineno,
                            format!("unexpected extra line after {n} intervals"),
                        ));
                    }
                    let mut it = line.split_whitespace();
                    let a: i64 = parse_endpoint(it.next(), lineno)?;
                    let b: i64 = parse_endpoint(it.next(), lineno)?;
                    if it.next().is_some() {
                        return Err(Error::parse(lineno, "expected exactly `a b`"));
                    }
                    if a > b {
                        return Err(Error::parse(
                            lineno,
                            format!("left endpoint {a} exceeds right endpoint {b}"),
                        ));
                    }
                    intervals.push((a, b));
                }
            }
        }
        let n = count.ok_or_else(|| Error::parse(last_line + 1, "missing interval count"))?;
        if intervals.len() != n {
            return Err(Error::parse(
                last_line + 1,
                format!("expected {n} intervals, found {}", intervals.len()),
            ));
        }
        Ok(IntervalRep { intervals })
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.intervals.len());
        for &(a, b) in &self.intervals {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Endpoints of the interval with the given 1-based id.
    pub fn get(&self, id: u32) -> (i64, i64) {
        self.intervals[id as usize - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, i64, i64)> + '_ {
        self.intervals
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| (i as u32 + 1, a, b))
    }
}

fn parse_endpoint(tok: Option<&str>, line: usize) -> Result<i64> {
    tok.ok_or_else(|| Error::parse(line, "missing endpoint"))?
        .parse()
        .map_err(|_| Error::parse(line, "malformed endpoint"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_single_interval() {
        let rep = IntervalRep::parse("1\n0 3").unwrap();
        assert_eq!(rep.len(), 1);
        assert_eq!(rep.get(1), (0, 3));
    }

    #[test]
    fn parse_counterexample_instance() {
        let rep = IntervalRep::parse("6\n0 3\n1 4\n2 6\n7 9\n5 10\n8 11").unwrap();
        assert_eq!(rep.len(), 6);
        assert_eq!(rep.get(5), (5, 10));
    }

    #[test]
    fn reversed_endpoints_rejected() {
        let err = IntervalRep::parse("2\n5 4\n0 1").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn count_mismatch_rejected() {
        assert!(IntervalRep::parse("2\n0 1").is_err());
        assert!(IntervalRep::parse("1\n0 1\n2 3").is_err());
    }

    #[test]
    fn serialize_roundtrip() {
        let rep = IntervalRep::new(vec![(0, 3), (-2, 5)]).unwrap();
        assert_eq!(IntervalRep::parse(&rep.serialize()).unwrap(), rep);
    }
}
