//! Exact-rational lower bounds on `S(n) = sum_{d | n} phi(d) d` and on
//! `phi(n)`.
//!
//! Verdicts are decided on [`BigRational`] values only.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{divisor_order_sum, totient, Factorization};
use crate::error::{Error, Result};

/// Outcome of one inequality `lhs >= rhs` (or `lhs > rhs` when `strict`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: u64,
    #[serde(serialize_with = "ratio_string")]
    pub lhs: BigRational,
    #[serde(serialize_with = "ratio_string")]
    pub rhs: BigRational,
    /// `lhs >= rhs`, or `lhs > rhs` for a strict bound. For an inapplicable
    /// bound this is still filled in, as information only.
    pub holds: bool,
    pub equality: bool,
    /// False when `n` falls in a family the bound excludes.
    pub applicable: bool,
    pub strict: bool,
}

impl BoundReport {
    pub fn new(n: u64, lhs: BigRational, rhs: BigRational) -> Self {
        let holds = lhs >= rhs;
        let equality = lhs == rhs;
        BoundReport {
            n,
            lhs,
            rhs,
            holds,
            equality,
            applicable: true,
            strict: false,
        }
    }

    pub fn new_strict(n: u64, lhs: BigRational, rhs: BigRational) -> Self {
        let holds = lhs > rhs;
        BoundReport {
            n,
            lhs,
            rhs,
            holds,
            equality: false,
            applicable: true,
            strict: true,
        }
    }

    pub fn from_integers(n: u64, lhs: impl Into<BigInt>, rhs: impl Into<BigInt>) -> Self {
        Self::new(n, int(lhs), int(rhs))
    }

    fn inapplicable(mut self) -> Self {
        self.applicable = false;
        self
    }

    /// `lhs / rhs`; `None` when `rhs` is zero.
    pub fn ratio(&self) -> Option<BigRational> {
        (!self.rhs.is_zero()).then(|| &self.lhs / &self.rhs)
    }

    /// A bound is violated only if it applies and does not hold.
    pub fn is_failure(&self) -> bool {
        self.applicable && !self.holds
    }
}

pub(crate) fn ratio_string<S: Serializer>(value: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

fn frac(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn require_above_one(f: &Factorization, what: &'static str) -> Result<()> {
    if f.is_one() {
        Err(Error::UndefinedAtOne { what })
    } else {
        Ok(())
    }
}

/// True when the distinct primes of `n` are exactly `{2}`, `{2,3}`,
/// `{2,3,5}` or `{2,3,5,7}`. Decided on the prime list, not on `n`.
pub fn is_forbidden_odd_form(f: &Factorization) -> bool {
    let primes: Vec<u64> = f.distinct_primes().collect();
    matches!(
        primes.as_slice(),
        [2] | [2, 3] | [2, 3, 5] | [2, 3, 5, 7]
    )
}

/// `R(n) = prod (p_h + 1)/p_h * n^2 / p`.
fn r_bound(f: &Factorization, p: u64) -> BigRational {
    let n = BigInt::from(f.n());
    let product = f
        .distinct_primes()
        .fold(BigRational::one(), |acc, ph| acc * frac(ph + 1, ph));
    product * BigRational::new(&n * &n, BigInt::from(p))
}

/// `Q(n) = (q + 1)/q * n^2 / p`.
fn q_bound(f: &Factorization, q: u64, p: u64) -> BigRational {
    let n = BigInt::from(f.n());
    frac(q + 1, q) * BigRational::new(&n * &n, BigInt::from(p))
}

/// `S(n) >= prod (p_h + 1)/p_h * n^2/p`, excluded for the forbidden
/// 2,3,5,7-families.
pub fn check_bound_odd(f: &Factorization) -> Result<BoundReport> {
    require_above_one(f, "check_bound_odd")?;
    let p = f.greatest_prime().expect("n > 1");
    let lhs = int(divisor_order_sum(f)?);
    let report = BoundReport::new(f.n(), lhs, r_bound(f, p));
    Ok(if is_forbidden_odd_form(f) {
        report.inapplicable()
    } else {
        report
    })
}

/// `S(n) >= (q + 1)/q * n^2/p`, excluded for powers of two.
pub fn check_bound(f: &Factorization) -> Result<BoundReport> {
    require_above_one(f, "check_bound")?;
    let q = f.least_prime().expect("n > 1");
    let p = f.greatest_prime().expect("n > 1");
    let lhs = int(divisor_order_sum(f)?);
    let report = BoundReport::new(f.n(), lhs, q_bound(f, q, p));
    Ok(if f.is_power_of_two() {
        report.inapplicable()
    } else {
        report
    })
}

/// `phi(n) >= n/p`, with equality exactly for `n = 2^a 3^b`, `a >= 1`.
pub fn totient_lower_bound(f: &Factorization) -> Result<BoundReport> {
    require_above_one(f, "totient_lower_bound")?;
    let p = f.greatest_prime().expect("n > 1");
    Ok(BoundReport::new(f.n(), int(totient(f)?), frac(f.n(), p)))
}

/// The exponent-free relaxations `T`, `U` and the exact ratios `S/R`, `S/Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRatios {
    /// `p * prod p_h^2 / (p_h + 1)^2`
    pub t: BigRational,
    /// `p q / (q + 1) * prod p_h / (p_h + 1)`
    pub u: BigRational,
    pub s_over_r: BigRational,
    pub s_over_q: BigRational,
}

pub fn bound_ratios(f: &Factorization) -> Result<BoundRatios> {
    require_above_one(f, "bound_ratios")?;
    let q = f.least_prime().expect("n > 1");
    let p = f.greatest_prime().expect("n > 1");
    let t = f
        .distinct_primes()
        .fold(int(p), |acc, ph| acc * frac(ph * ph, (ph + 1) * (ph + 1)));
    let u = f
        .distinct_primes()
        .fold(frac(p * q, q + 1), |acc, ph| acc * frac(ph, ph + 1));
    let s = int(divisor_order_sum(f)?);
    let s_over_r = &s / r_bound(f, p);
    let s_over_q = &s / q_bound(f, q, p);
    Ok(BoundRatios {
        t,
        u,
        s_over_r,
        s_over_q,
    })
}

/// Which bound a range scan evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundCheck {
    /// `S(n) >= prod (p_h+1)/p_h * n^2/p`
    Eq7,
    /// `S(n) >= (q+1)/q * n^2/p`
    Eq8,
    /// `phi(n) >= n/p`
    PhiLower,
}

impl BoundCheck {
    pub fn name(self) -> &'static str {
        match self {
            BoundCheck::Eq7 => "eq7",
            BoundCheck::Eq8 => "eq8",
            BoundCheck::PhiLower => "phi-lower",
        }
    }

    pub fn run(self, f: &Factorization) -> Result<BoundReport> {
        match self {
            BoundCheck::Eq7 => check_bound_odd(f),
            BoundCheck::Eq8 => check_bound(f),
            BoundCheck::PhiLower => totient_lower_bound(f),
        }
    }
}

impl std::str::FromStr for BoundCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eq7" => Ok(BoundCheck::Eq7),
            "eq8" => Ok(BoundCheck::Eq8),
            "phi-lower" => Ok(BoundCheck::PhiLower),
            other => Err(Error::InvalidParameter(format!(
                "unknown check {other:?} (expected eq7, eq8 or phi-lower)"
            ))),
        }
    }
}
