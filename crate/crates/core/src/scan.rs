//! Range scans of the number-theoretic bounds.

use crate::error::{Error, Result};
use crate::numth::{factorize, BoundCheck, BoundReport};

/// Largest `n` accepted by [`scan_range`].
pub const SCAN_MAX: u64 = 1_000_000;

/// Tallies of a range scan plus the rows worth reporting.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub checked: u64,
    pub applicable: u64,
    pub failures: u64,
    pub equalities: u64,
    /// Inapplicable, failing or equality rows, in increasing `n`.
    pub rows: Vec<BoundReport>,
}

impl ScanSummary {
    pub fn record(&mut self, report: BoundReport, keep_all: bool) {
        self.checked += 1;
        if report.applicable {
            self.applicable += 1;
        }
        if report.is_failure() {
            self.failures += 1;
        }
        if report.applicable && report.equality {
            self.equalities += 1;
        }
        if keep_all || !report.applicable || report.is_failure() || report.equality {
            self.rows.push(report);
        }
    }

    /// Append another summary covering a later range.
    pub fn merge(&mut self, other: ScanSummary) {
        self.checked += other.checked;
        self.applicable += other.applicable;
        self.failures += other.failures;
        self.equalities += other.equalities;
        self.rows.extend(other.rows);
    }
}

/// Validate `2 <= a <= b <= 10^6`.
pub fn check_range(a: u64, b: u64) -> Result<()> {
    if a < 2 || a > b || b > SCAN_MAX {
        return Err(Error::InvalidParameter(format!(
            "range must satisfy 2 <= a <= b <= {SCAN_MAX}, got {a}..{b}"
        )));
    }
    Ok(())
}

/// Run `check` for every `n` in `a..=b`, single-threaded.
pub fn scan_range(a: u64, b: u64, check: BoundCheck, keep_all: bool) -> Result<ScanSummary> {
    check_range(a, b)?;
    scan_unchecked(a, b, check, keep_all)
}

/// As [`scan_range`] without the range cap; callers shard a validated range.
pub fn scan_unchecked(a: u64, b: u64, check: BoundCheck, keep_all: bool) -> Result<ScanSummary> {
    let mut summary = ScanSummary::default();
    for n in a..=b {
        summary.record(check.run(&factorize(n)?)?, keep_all);
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_lower_equalities() {
        let s = scan_range(2, 100, BoundCheck::PhiLower, false).unwrap();
        let eq: Vec<u64> = s.rows.iter().filter(|r| r.equality).map(|r| r.n).collect();
        let expected: Vec<u64> = (2..=100u64)
            .filter(|&n| {
                let mut m = n;
                while m % 2 == 0 {
                    m /= 2;
                }
                while m % 3 == 0 {
                    m /= 3;
                }
                m == 1 && n % 2 == 0
            })
            .collect();
        assert_eq!(eq, expected);
        assert_eq!(s.failures, 0);
    }

    #[test]
    fn eq7_inapplicable_rows() {
        let s = scan_range(2, 60, BoundCheck::Eq7, false).unwrap();
        let skipped: Vec<u64> = s.rows.iter().filter(|r| !r.applicable).map(|r| r.n).collect();
        for n in [6, 30, 60] {
            assert!(skipped.contains(&n), "{n} in {skipped:?}");
        }
        assert_eq!(s.failures, 0);
    }

    #[test]
    fn eq8_small_range() {
        let s = scan_range(2, 1000, BoundCheck::Eq8, false).unwrap();
        assert_eq!(s.failures, 0);
        assert_eq!(s.checked, 999);
    }

    #[test]
    fn merge_is_concatenation() {
        let whole = scan_range(2, 300, BoundCheck::Eq7, true).unwrap();
        let mut left = scan_range(2, 150, BoundCheck::Eq7, true).unwrap();
        left.merge(scan_range(151, 300, BoundCheck::Eq7, true).unwrap());
        assert_eq!(whole, left);
    }

    #[test]
    fn range_validation() {
        assert!(scan_range(1, 10, BoundCheck::Eq8, false).is_err());
        assert!(scan_range(10, 9, BoundCheck::Eq8, false).is_err());
        assert!(scan_range(2, SCAN_MAX + 1, BoundCheck::Eq8, false).is_err());
    }
}
