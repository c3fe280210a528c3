use std::ops::RangeInclusive;

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Norm {
    One,
    Lee,
}

impl From<Norm> for lee_waring::NormKind {
    fn from(n: Norm) -> Self {
        match n {
            Norm::One => lee_waring::NormKind::One,
            Norm::Lee => lee_waring::NormKind::Lee,
        }
    }
}

/// `a..b` (inclusive) or a single value `a`; both endpoints at least 1.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let endpoint = |t: &str| -> Result<u64, String> {
        let v: u64 = t
            .trim()
            .parse()
            .map_err(|_| format!("`{t}` is not a nonnegative integer"))?;
        if v == 0 {
            return Err("range endpoints must be at least 1".into());
        }
        Ok(v)
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (endpoint(a)?, endpoint(b.trim_start_matches('='))?),
        None => {
            let v = endpoint(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

/// A parsed vector literal, before reduction modulo m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VecLiteral(pub Vec<i64>);

/// Comma-separated integers; negative entries are allowed and reduced later.
pub fn parse_vector(s: &str) -> Result<VecLiteral, String> {
    if s.trim().is_empty() {
        return Err("empty vector literal".into());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("`{t}` is not an integer"))
        })
        .collect::<Result<_, _>>()
        .map(VecLiteral)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..4"), Ok(2..=4));
        assert_eq!(parse_range("2..=4"), Ok(2..=4));
        assert_eq!(parse_range("7"), Ok(7..=7));
        assert!(parse_range("0..3").is_err());
        assert!(parse_range("4..2").is_err());
        assert!(parse_range("a..b").is_err());
        assert!(parse_range("").is_err());
    }

    #[test]
    fn vectors() {
        assert_eq!(parse_vector("0,2"), Ok(VecLiteral(vec![0, 2])));
        assert_eq!(parse_vector(" 1, -1 ,7"), Ok(VecLiteral(vec![1, -1, 7])));
        assert!(parse_vector("1,,2").is_err());
        assert!(parse_vector("").is_err());
        assert!(parse_vector("x").is_err());
    }
}
