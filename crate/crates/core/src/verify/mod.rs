//! Catalog-level verification of the extremal edge-count results.
//!
//! For each group `G` of order `n` the harness compares `|E(G)|` and
//! `|E->(G)|` with the cyclic group's counts, runs the elementary
//! inequalities, the divisor-sum corollary and the bijection search, and
//! collects everything into a [`VerificationReport`].

mod matching;
mod report;

pub use matching::order_divisibility_bijection;
pub use report::render_text;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::numth::{
    self, cyclic_degree, cyclic_edge_counts, divisor_order_sum, divisor_totient_square_sum,
    factorize, totient, BoundReport, Factorization,
};
use crate::pgraph::{build_power_graph, inequality_suite, EdgeCounts, InequalitySuite};

/// How one count compares with the cyclic group's count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Cyclic group attaining the cyclic count.
    CyclicMax,
    /// Noncyclic group strictly below the cyclic count.
    Below,
    /// Anything else: a noncyclic group at or above the cyclic count, or a
    /// cyclic group off it.
    Violation,
}

impl Verdict {
    fn of(count: u64, cyclic_count: u64, is_cyclic: bool) -> Self {
        match (is_cyclic, count.cmp(&cyclic_count)) {
            (true, std::cmp::Ordering::Equal) => Verdict::CyclicMax,
            (false, std::cmp::Ordering::Less) => Verdict::Below,
            _ => Verdict::Violation,
        }
    }

    pub fn passed(self) -> bool {
        self != Verdict::Violation
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CyclicMax => "cyclic-max",
            Verdict::Below => "below",
            Verdict::Violation => "VIOLATION",
        }
    }
}

/// Everything checked for one catalog group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub descriptor: String,
    pub is_cyclic: bool,
    pub counts: EdgeCounts,
    /// Verdict on the undirected count.
    pub verdict: Verdict,
    pub directed_verdict: Verdict,
    pub inequalities: InequalitySuite,
    pub final_corollary: BoundReport,
    pub bijection_exists: bool,
    pub edge_equality_implies_cyclic: bool,
}

impl GroupReport {
    /// All per-group checks passed.
    pub fn passed(&self) -> bool {
        self.verdict.passed()
            && self.directed_verdict.passed()
            && self.inequalities.all_consistent()
            && final_corollary_consistent(&self.final_corollary, self.is_cyclic)
            && self.edge_equality_implies_cyclic
            // equal counts plus a bijection force cyclicity
            && !(self.bijection_exists && self.verdict == Verdict::Violation)
    }
}

/// The result of running the checks over a catalog of one order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub cyclic_counts: EdgeCounts,
    pub entries: Vec<GroupReport>,
    pub max_undirected: u64,
    /// First descriptor in catalog order attaining `max_undirected`.
    pub argmax: String,
    /// Every noncyclic group is strictly below the cyclic count and the
    /// cyclic group attains the maximum.
    pub all_pass: bool,
    /// Same for the directed counts.
    pub directed_all_pass: bool,
    /// `all_pass`, `directed_all_pass` and every per-group check.
    pub suite_pass: bool,
}

impl VerificationReport {
    /// Assemble from per-group reports in catalog order.
    pub fn assemble(n: usize, cyclic_counts: EdgeCounts, entries: Vec<GroupReport>) -> Result<Self> {
        let (argmax, max_undirected) = entries
            .iter()
            .fold(None::<(&str, u64)>, |best, e| match best {
                Some((_, m)) if m >= e.counts.undirected => best,
                _ => Some((e.descriptor.as_str(), e.counts.undirected)),
            })
            .ok_or_else(|| Error::Catalog(format!("empty catalog for order {n}")))?;
        let argmax = argmax.to_string();
        let has_cyclic = entries.iter().any(|e| e.is_cyclic);
        let all_pass = has_cyclic
            && entries.iter().all(|e| e.verdict.passed())
            && max_undirected == cyclic_counts.undirected;
        let directed_all_pass = has_cyclic && entries.iter().all(|e| e.directed_verdict.passed());
        let suite_pass = all_pass && directed_all_pass && entries.iter().all(GroupReport::passed);
        Ok(VerificationReport {
            n,
            cyclic_counts,
            entries,
            max_undirected,
            argmax,
            all_pass,
            directed_all_pass,
            suite_pass,
        })
    }

    pub fn entry(&self, descriptor: &str) -> Option<&GroupReport> {
        self.entries.iter().find(|e| e.descriptor == descriptor)
    }
}

/// Counts of `Z_n` from the closed forms.
pub fn cyclic_reference(n: usize) -> Result<EdgeCounts> {
    cyclic_edge_counts(&factorize(n as u64)?)
}

/// Run every per-group check for one group against the cyclic counts.
pub fn verify_group(descriptor: &str, group: &FiniteGroup, cyclic: EdgeCounts) -> GroupReport {
    let counts = build_power_graph(group).edge_counts();
    let is_cyclic = group.is_cyclic();
    GroupReport {
        descriptor: descriptor.to_string(),
        is_cyclic,
        counts,
        verdict: Verdict::of(counts.undirected, cyclic.undirected, is_cyclic),
        directed_verdict: Verdict::of(counts.directed, cyclic.directed, is_cyclic),
        inequalities: inequality_suite(group),
        final_corollary: final_corollary_check(group),
        bijection_exists: order_divisibility_bijection(group).is_some(),
        edge_equality_implies_cyclic: counts.undirected != cyclic.undirected || is_cyclic,
    }
}

/// Check that `|E(G)| <= |E(Z_n)|` with equality iff `G` is cyclic, and the
/// same for directed counts, over every group in the catalog.
pub fn verify_main_theorem(n: usize, catalog: &Catalog) -> Result<VerificationReport> {
    if catalog.n != n {
        return Err(Error::Catalog(format!("catalog is for order {}, not {n}", catalog.n)));
    }
    for e in &catalog.entries {
        if e.group.order() != n {
            return Err(Error::OrderMismatch {
                descriptor: e.descriptor.clone(),
                expected: n,
                found: e.group.order(),
            });
        }
    }
    if !catalog.groups().any(FiniteGroup::is_cyclic) {
        return Err(Error::Catalog(format!("catalog for order {n} has no cyclic group")));
    }
    let cyclic = cyclic_reference(n)?;
    let entries = catalog
        .entries
        .iter()
        .map(|e| verify_group(&e.descriptor, &e.group, cyclic))
        .collect();
    VerificationReport::assemble(n, cyclic, entries)
}

/// `|E(G)| = |E(Z_n)|` implies that `G` has an element of order `n`.
pub fn edge_equality_implies_cyclic(group: &FiniteGroup) -> bool {
    let cyclic = cyclic_reference(group.order()).expect("group order is positive");
    let counts = crate::pgraph::edge_counts_via_orders(group);
    counts.undirected != cyclic.undirected || group.is_cyclic()
}

/// `sum_{d|n} (2d - phi(d)) phi(d) >= sum_g (2 o(g) - phi(o(g)))`.
/// The left side is `2 S(n) - sum phi(d)^2`; the right side is an element
/// scan.
pub fn final_corollary_check(group: &FiniteGroup) -> BoundReport {
    let n = group.order() as u64;
    let f = factorize(n).expect("group order is positive");
    let s = divisor_order_sum(&f).expect("n <= 512");
    let sq = divisor_totient_square_sum(&f).expect("n <= 512");
    let lhs = 2 * s - sq;
    let rhs: u64 = group
        .element_orders()
        .iter()
        .map(|&o| 2 * o as u64 - numth::phi(o as u64).expect("order is positive"))
        .sum();
    BoundReport::from_integers(n, lhs, rhs)
}

/// The corollary holds, with equality exactly for cyclic groups.
pub fn final_corollary_consistent(report: &BoundReport, is_cyclic: bool) -> bool {
    report.holds && report.equality == is_cyclic
}

/// For `n > 1` not a power of 2, with `p` the largest and `q` the smallest
/// prime factor: `2|E(Z_n)| >= 2n^2/p - n/p - 1` when `phi(n) <= n/q`, and
/// `2|E(Z_n)| > (n - 1)(n/q + 1)` otherwise. The left side is the degree
/// sum over `Z_n`.
pub fn avez_consequence_check(n: u64) -> Result<BoundReport> {
    let f = factorize(n)?;
    if f.is_one() {
        return Err(Error::UndefinedAtOne { what: "the degree-sum bound" });
    }
    if f.is_power_of_two() {
        return Err(Error::InvalidParameter(format!("{n} is a power of 2")));
    }
    let p = f.greatest_prime().expect("n > 1");
    let q = f.least_prime().expect("n > 1");
    let lhs = degree_sum(&f)?;
    let big = |x: u64| BigRational::from_integer(BigInt::from(x));
    let n_r = big(n);
    if totient(&f)? * q <= n {
        let rhs = big(2) * &n_r * &n_r / big(p) - &n_r / big(p) - big(1);
        Ok(BoundReport::new(n, big(lhs), rhs))
    } else {
        let rhs = (&n_r - big(1)) * (&n_r / big(q) + big(1));
        Ok(BoundReport::new_strict(n, big(lhs), rhs))
    }
}

/// `sum_{z in Z_n} deg(z) = sum_{e|n} phi(e) deg_e`.
fn degree_sum(f: &Factorization) -> Result<u64> {
    f.divisors_with_totient()
        .into_iter()
        .try_fold(0u64, |acc, (e, phi_e)| {
            let d = cyclic_degree(f, e)?;
            numth::checked_add(acc, numth::checked_mul(phi_e, d, "degree sum")?, "degree sum")
        })
}

/// `deg(z) >= e - 1 + phi(e)(n/e - 1)` for `z` of order `e` in `Z_n`, with
/// equality exactly when `gcd(e, n/e) = 1` (reported in `equality`).
pub fn degree_lower_bound(f: &Factorization, e: u64) -> Result<BoundReport> {
    let n = f.n();
    let deg = cyclic_degree(f, e)?;
    let phi_e = numth::phi(e)?;
    let bound = e - 1 + phi_e * (n / e - 1);
    Ok(BoundReport::from_integers(n, deg, bound))
}
