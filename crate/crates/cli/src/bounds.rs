use std::io::Write;

use powergraph_core::numth::BoundCheck;
use powergraph_core::scan::{check_range, scan_unchecked, ScanSummary};
use rayon::prelude::*;

use crate::{BoundsArgs, Failure, Outcome};

const SHARD: u64 = 10_000;

pub fn parse_range(text: &str) -> Result<(u64, u64), Failure> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| Failure(format!("expected a range A..B, got {text:?}")))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| Failure(format!("not a nonnegative integer in range {text:?}: {s:?}")))
    };
    let (a, b) = (parse(a)?, parse(b)?);
    check_range(a, b)?;
    Ok((a, b))
}

pub fn run(args: &BoundsArgs) -> Outcome {
    let (a, b) = parse_range(&args.range)?;
    let check: BoundCheck = args.check.parse()?;

    // shard, scan in parallel, then merge in input order
    let starts: Vec<u64> = (a..=b).step_by(SHARD as usize).collect();
    let shards: Vec<ScanSummary> = starts
        .par_iter()
        .map(|&lo| scan_unchecked(lo, (lo + SHARD - 1).min(b), check, args.all))
        .collect::<Result<_, _>>()?;
    let mut summary = ScanSummary::default();
    for shard in shards {
        summary.merge(shard);
    }

    let rows = render_csv(check, &summary)?;
    let line = format!(
        "{}: n = {a}..{b}, checked {}, applicable {}, failures {}, equality cases {}",
        check.name(),
        summary.checked,
        summary.applicable,
        summary.failures,
        summary.equalities
    );
    match &args.csv {
        Some(path) => {
            crate::verify::write(path, &rows)?;
            println!("{line}");
        }
        None => {
            std::io::stdout().write_all(rows.as_bytes())?;
            eprintln!("{line}");
        }
    }
    Ok(summary.failures == 0)
}

/// Columns `n,check,applicable,holds,equality,lhs,rhs`; lhs and rhs as
/// exact fractions.
fn render_csv(check: BoundCheck, summary: &ScanSummary) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "check", "applicable", "holds", "equality", "lhs", "rhs"])?;
    for r in &summary.rows {
        w.write_record([
            r.n.to_string(),
            check.name().to_string(),
            r.applicable.to_string(),
            r.holds.to_string(),
            r.equality.to_string(),
            r.lhs.to_string(),
            r.rhs.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| Failure(e.to_string()))?;
    Ok(String::from_utf8(bytes)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("2..100").ok(), Some((2, 100)));
        assert_eq!(parse_range(" 5 .. 5 ").ok(), Some((5, 5)));
        assert!(parse_range("1..10").is_err());
        assert!(parse_range("10..2").is_err());
        assert!(parse_range("2..1000001").is_err());
        assert!(parse_range("2-10").is_err());
        assert!(parse_range("a..10").is_err());
    }
}
