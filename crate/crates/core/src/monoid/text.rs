//! The plain-text table format:
//!
//! ```text
//! monoid 3 zero=0
//! 0 1 2
//! 1 2 2
//! 2 2 2
//! ```

use super::FiniteCommMonoid;
use crate::error::{Error, Result};

/// Parses `rows` lines of `cols` whitespace-separated 0-based indices below
/// `bound`.
pub fn parse_table<'a>(
    lines: &mut impl Iterator<Item = &'a str>,
    rows: usize,
    cols: usize,
    bound: usize,
) -> Result<Vec<u32>> {
    let mut out = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {rows} table rows, found {r}")))?;
        let row: Vec<u32> = line
            .split_whitespace()
            .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad index {t:?}"))))
            .collect::<Result<_>>()?;
        if row.len() != cols {
            return Err(Error::Parse(format!("row {r} has {} entries, expected {cols}", row.len())));
        }
        if let Some(v) = row.iter().find(|&&v| v as usize >= bound) {
            return Err(Error::Parse(format!("index {v} out of range in row {r}")));
        }
        out.extend(row);
    }
    Ok(out)
}

/// Non-empty lines with `#` comments removed.
pub fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
}

/// Parses the header `monoid n zero=i`.
pub fn parse_header(line: &str) -> Result<(usize, usize)> {
    let mut parts = line.split_whitespace();
    if parts.next() != Some("monoid") {
        return Err(Error::Parse(format!("expected `monoid n zero=i`, got {line:?}")));
    }
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("missing monoid order".into()))?;
    let zero: usize = parts
        .next()
        .and_then(|t| t.strip_prefix("zero="))
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("missing `zero=i`".into()))?;
    if parts.next().is_some() {
        return Err(Error::Parse("trailing tokens in monoid header".into()));
    }
    Ok((n, zero))
}

pub fn parse_monoid(text: &str) -> Result<FiniteCommMonoid> {
    let mut lines = content_lines(text);
    let m = parse_monoid_from(&mut lines)?;
    if lines.next().is_some() {
        return Err(Error::Parse("trailing lines after monoid table".into()));
    }
    Ok(m)
}

/// Parses one monoid block and leaves the iterator after it.
pub fn parse_monoid_from<'a>(lines: &mut impl Iterator<Item = &'a str>) -> Result<FiniteCommMonoid> {
    let header = lines.next().ok_or_else(|| Error::Parse("empty monoid file".into()))?;
    let (n, zero) = parse_header(header)?;
    let table = parse_table(lines, n, n, n)?;
    FiniteCommMonoid::new(n, table, zero)
}

pub fn format_monoid(m: &FiniteCommMonoid) -> String {
    let n = m.order();
    let mut out = format!("monoid {n} zero={}\n", m.zero());
    for x in 0..n {
        let row: Vec<String> = (0..n).map(|y| m.add(x, y).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for m in [
            FiniteCommMonoid::chain(3),
            FiniteCommMonoid::adjoin_absorbing(&FiniteCommMonoid::cyclic_group(3)),
            FiniteCommMonoid::trivial(),
        ] {
            let text = format_monoid(&m);
            assert_eq!(parse_monoid(&text).unwrap(), m);
        }
    }

    #[test]
    fn exact_text() {
        assert_eq!(format_monoid(&FiniteCommMonoid::chain(2)), "monoid 2 zero=0\n0 1\n1 1\n");
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_monoid("").is_err());
        assert!(parse_monoid("monoid 2\n0 1\n1 1\n").is_err());
        assert!(parse_monoid("monoid 2 zero=0\n0 1\n").is_err());
        assert!(parse_monoid("monoid 2 zero=0\n0 1\n1 2\n").is_err());
        assert!(matches!(parse_monoid("monoid 2 zero=0\n0 1\n1 0 1\n"), Err(Error::Parse(_))));
        // well formed text, not a monoid
        assert!(matches!(
            parse_monoid("monoid 2 zero=1\n0 1\n1 1\n"),
            Err(Error::InvalidMonoid(_))
        ));
    }
}
