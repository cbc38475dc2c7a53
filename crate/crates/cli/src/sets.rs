//! Marked-set literals: comma-separated point labels, optionally in braces.

use trace_divisors::m0n::{normalize, MarkedSet};

use crate::{CliError, CliResult};

/// Parses `"1,2,5"` or `"{1,2,5}"` into raw point labels. Whitespace around
/// labels is allowed; empty entries are not.
pub fn parse_points(text: &str) -> CliResult<Vec<u32>> {
    let t = text.trim();
    let inner = match (t.strip_prefix('{'), t.ends_with('}')) {
        (Some(rest), true) => &rest[..rest.len() - 1],
        (None, false) => t,
        _ => return Err(CliError::usage(format!("unbalanced braces in `{text}`"))),
    };
    if inner.trim().is_empty() {
        return Err(CliError::usage("empty marked set"));
    }
    inner
        .split(',')
        .map(|p| {
            let p = p.trim();
            if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
                return Err(CliError::usage(format!(
                    "bad point label `{p}` in `{text}`"
                )));
            }
            p.parse::<u32>()
                .map_err(|_| CliError::usage(format!("point label `{p}` out of range")))
        })
        .collect()
}

/// Parses and normalizes a marked set over `b` points. Repeated labels are
/// rejected.
pub fn parse_marked_set(b: u32, text: &str) -> CliResult<MarkedSet> {
    let points = parse_points(text)?;
    let mut sorted = points.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != points.len() {
        return Err(CliError::usage(format!("repeated point in `{text}`")));
    }
    Ok(normalize(b, points)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        assert_eq!(parse_points("1,2").unwrap(), vec![1, 2]);
        assert_eq!(parse_points("{ 4, 5 }").unwrap(), vec![4, 5]);
        for bad in [
            "",
            "{}",
            "1,,2",
            "{1,2",
            "1,2}",
            "a",
            "-1",
            "1.5",
            "99999999999",
        ] {
            assert!(parse_points(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn normalized() {
        assert_eq!(parse_marked_set(6, "1,2").unwrap().to_string(), "{3,4,5,6}");
        assert!(parse_marked_set(6, "1,1,2").is_err());
        assert!(parse_marked_set(6, "1").is_err());
        assert!(parse_marked_set(6, "1,7").is_err());
        assert!(parse_marked_set(3, "1,2").is_err());
    }
}
