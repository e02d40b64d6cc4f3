//! Exact integer number theory on 64-bit inputs.
//!
//! Every quantity here is computed with checked arithmetic; an overflow is
//! reported as [`Error::Overflow`] and never wraps. The two divisor sums are
//! computed twice, once by walking the divisor lattice and once by the
//! per-prime closed-form product, and the two results must agree.

mod bounds;

pub use bounds::{
    bound_ratios, check_bound, check_bound_odd, is_forbidden_odd_form, totient_lower_bound,
    BoundCheck, BoundRatios, BoundReport,
};

use crate::error::{Error, Result};
use crate::pgraph::EdgeCounts;

/// Prime-exponent decomposition `n = p_1^a_1 * ... * p_k^a_k` with
/// `p_1 < ... < p_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Factor `n` by trial division up to `sqrt(n)`.
    pub fn of(n: u64) -> Result<Self> {
        factorize(n)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Number of distinct prime divisors.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn distinct_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Least prime divisor `q`; `None` for `n = 1`.
    pub fn least_prime(&self) -> Option<u64> {
        self.factors.first().map(|&(p, _)| p)
    }

    /// Greatest prime divisor `p`; `None` for `n = 1`.
    pub fn greatest_prime(&self) -> Option<u64> {
        self.factors.last().map(|&(p, _)| p)
    }

    /// Exponent of the least prime.
    pub fn least_exponent(&self) -> Option<u32> {
        self.factors.first().map(|&(_, a)| a)
    }

    /// Exponent of the greatest prime.
    pub fn greatest_exponent(&self) -> Option<u32> {
        self.factors.last().map(|&(_, a)| a)
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn is_power_of_two(&self) -> bool {
        matches!(self.factors.as_slice(), [(2, _)])
    }

    /// Factorization of `n / q^beta`, the cofactor left after removing the
    /// full power of the least prime.
    pub fn without_least_prime(&self) -> Factorization {
        match self.factors.split_first() {
            None => self.clone(),
            Some((&(q, beta), rest)) => Factorization {
                n: self.n / q.pow(beta),
                factors: rest.to_vec(),
            },
        }
    }

    /// All divisors `d` of `n` paired with `phi(d)`, in increasing order of `d`.
    pub fn divisors_with_totient(&self) -> Vec<(u64, u64)> {
        let mut out = vec![(1u64, 1u64)];
        for &(p, a) in &self.factors {
            let len = out.len();
            let mut pk = 1u64;
            for k in 1..=a {
                // d * p^k divides n, and phi(d * p^k) <= d * p^k, so neither overflows
                let phi_pk = if k == 1 { p - 1 } else { pk * (p - 1) };
                pk *= p;
                for i in 0..len {
                    let (d, phi) = out[i];
                    out.push((d * pk, phi * phi_pk));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn divisors(&self) -> Vec<u64> {
        self.divisors_with_totient()
            .into_iter()
            .map(|(d, _)| d)
            .collect()
    }

    pub fn divides(&self, d: u64) -> bool {
        d != 0 && self.n.is_multiple_of(d)
    }
}

/// Factor `n` by trial division. Rejects `n = 0`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut push = |p: u64, rest: &mut u64| {
        let mut a = 0u32;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            a += 1;
        }
        if a > 0 {
            factors.push((p, a));
        }
    };
    push(2, &mut rest);
    push(3, &mut rest);
    // 6k +- 1 wheel
    let mut p = 5u64;
    while p.checked_mul(p).is_some_and(|sq| sq <= rest) {
        push(p, &mut rest);
        push(p + 2, &mut rest);
        p += 6;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub(crate) fn checked_mul(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

pub(crate) fn checked_add(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

/// Euler's totient from the factorization: `prod p^(a-1) (p-1)`.
pub fn totient(f: &Factorization) -> Result<u64> {
    f.factors.iter().try_fold(1u64, |acc, &(p, a)| {
        let pk = p.checked_pow(a - 1).ok_or(Error::Overflow("totient"))?;
        checked_mul(acc, checked_mul(pk, p - 1, "totient")?, "totient")
    })
}

/// Convenience wrapper: factor, then take the totient.
pub fn phi(n: u64) -> Result<u64> {
    totient(&factorize(n)?)
}

/// `S(n) = sum_{d | n} phi(d) d`, which is also the sum of element orders in
/// the cyclic group of order `n`.
///
/// Computed by divisor enumeration and by the closed form
/// `prod (p^(2a+1) + 1) / (p + 1)`; the two must agree.
pub fn divisor_order_sum(f: &Factorization) -> Result<u64> {
    let what = "divisor order sum";
    let by_divisors = f
        .divisors_with_totient()
        .into_iter()
        .try_fold(0u64, |acc, (d, phi)| {
            checked_add(acc, checked_mul(d, phi, what)?, what)
        })?;
    let closed = closed_form_product(f, what, |p, a| {
        let top = pow128(p, 2 * a + 1)?.checked_add(1)?;
        Some(top / (p as u128 + 1))
    })?;
    assert_eq!(
        by_divisors, closed,
        "divisor order sum paths disagree for n = {}",
        f.n
    );
    Ok(closed)
}

/// `sum_{d | n} phi(d)^2`, dual-path like [`divisor_order_sum`] with closed
/// form `prod (p^(2a) (p - 1) + 2) / (p + 1)`.
pub fn divisor_totient_square_sum(f: &Factorization) -> Result<u64> {
    let what = "divisor totient square sum";
    let by_divisors = f
        .divisors_with_totient()
        .into_iter()
        .try_fold(0u64, |acc, (_, phi)| {
            checked_add(acc, checked_mul(phi, phi, what)?, what)
        })?;
    let closed = closed_form_product(f, what, |p, a| {
        let top = pow128(p, 2 * a)?
            .checked_mul(p as u128 - 1)?
            .checked_add(2)?;
        Some(top / (p as u128 + 1))
    })?;
    assert_eq!(
        by_divisors, closed,
        "divisor totient square sum paths disagree for n = {}",
        f.n
    );
    Ok(closed)
}

fn pow128(p: u64, e: u32) -> Option<u128> {
    (p as u128).checked_pow(e)
}

fn closed_form_product(
    f: &Factorization,
    what: &'static str,
    factor: impl Fn(u64, u32) -> Option<u128>,
) -> Result<u64> {
    f.factors.iter().try_fold(1u64, |acc, &(p, a)| {
        let term = factor(p, a).ok_or(Error::Overflow(what))?;
        let term = u64::try_from(term).map_err(|_| Error::Overflow(what))?;
        checked_mul(acc, term, what)
    })
}

/// Directed, bidirectional and undirected edge counts of the power graph of
/// the cyclic group of order `n`, from the divisor sums alone.
pub fn cyclic_edge_counts(f: &Factorization) -> Result<EdgeCounts> {
    let s = divisor_order_sum(f)?;
    let sq = divisor_totient_square_sum(f)?;
    let directed = s - f.n;
    let twice_bidi = sq - f.n;
    debug_assert_eq!(twice_bidi % 2, 0);
    let bidirectional = twice_bidi / 2;
    Ok(EdgeCounts {
        directed,
        bidirectional,
        undirected: directed - bidirectional,
    })
}

/// Degree of an element of order `e` in the power graph of `Z_n`:
/// `e - 1 - phi(e) + sum_{d | n/e} phi(d e)`.
pub fn cyclic_degree(f: &Factorization, e: u64) -> Result<u64> {
    if !f.divides(e) {
        return Err(Error::NotADivisor {
            divisor: e,
            n: f.n,
        });
    }
    let what = "cyclic degree";
    let cofactor = factorize(f.n / e)?;
    let mut in_degree = 0u64;
    for d in cofactor.divisors() {
        in_degree = checked_add(in_degree, phi(d * e)?, what)?;
    }
    // in_degree includes the phi(e) generators of <z> itself, so it is >= phi(e)
    Ok(e - 1 + (in_degree - phi(e)?))
}

/// `w(r) = 2r - phi(r) - 1`, the per-element contribution to `2|E(G)|`.
pub fn monotone_weight(r: u64) -> Result<u64> {
    let phi_r = phi(r)?;
    Ok(checked_mul(2, r, "monotone weight")? - phi_r - 1)
}
