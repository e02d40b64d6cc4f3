//! Edge counts of direct and cyclic-by-cyclic semidirect products.
//!
//! Every function takes concrete groups and derives the factor counts
//! itself, so callers cannot feed in inconsistent numbers. Product elements
//! `(u, v)` live at index `u |V| + v`, for both products.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, SemidirectSpec};
use crate::pgraph::{build_power_graph, edge_counts_via_orders, EdgeCounts, PowerGraph};

/// The candidate edge sets `D` (directed) and `B` (bidirectional) built from
/// the factors' power graphs, alongside the real edge sets of `U x V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupersetSets {
    /// Ordered pairs.
    pub d: BTreeSet<(usize, usize)>,
    /// Unordered pairs as `(min, max)`.
    pub b: BTreeSet<(usize, usize)>,
    pub product_directed: BTreeSet<(usize, usize)>,
    pub product_bidirectional: BTreeSet<(usize, usize)>,
}

impl SupersetSets {
    pub fn directed_contained(&self) -> bool {
        self.product_directed.is_subset(&self.d)
    }

    pub fn bidirectional_contained(&self) -> bool {
        self.product_bidirectional.is_subset(&self.b)
    }

    pub fn directed_equal(&self) -> bool {
        self.product_directed == self.d
    }

    pub fn bidirectional_equal(&self) -> bool {
        self.product_bidirectional == self.b
    }
}

/// Pairs `((u, v), (u', v'))`, not both equal, where each coordinate either
/// stays put or follows an edge of its factor's graph.
fn candidate_pairs(
    nu: usize,
    nv: usize,
    u_step: impl Fn(usize, usize) -> bool,
    v_step: impl Fn(usize, usize) -> bool,
) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for u in 0..nu {
        for u2 in (0..nu).filter(|&u2| u2 == u || u_step(u, u2)) {
            for v in 0..nv {
                for v2 in (0..nv).filter(|&v2| v2 == v || v_step(v, v2)) {
                    if u2 != u || v2 != v {
                        out.insert((u * nv + v, u2 * nv + v2));
                    }
                }
            }
        }
    }
    out
}

fn canonical(pairs: BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
    pairs
        .into_iter()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect()
}

fn superset_sets_from(
    pu: &PowerGraph,
    pv: &PowerGraph,
    product: &PowerGraph,
) -> SupersetSets {
    let (nu, nv) = (pu.order(), pv.order());
    let d = candidate_pairs(nu, nv, |a, b| pu.has_directed(a, b), |a, b| pv.has_directed(a, b));
    let b = canonical(candidate_pairs(
        nu,
        nv,
        |a, b| pu.is_bidirectional(a, b),
        |a, b| pv.is_bidirectional(a, b),
    ));
    SupersetSets {
        d,
        b,
        product_directed: product.directed_edges().into_iter().collect(),
        product_bidirectional: product.bidirectional_edges().into_iter().collect(),
    }
}

/// `D`, `B` and the edge sets of `U x V`.
pub fn superset_sets(u: &FiniteGroup, v: &FiniteGroup) -> Result<SupersetSets> {
    let product = FiniteGroup::direct_product(u, v)?;
    Ok(superset_sets_from(
        &build_power_graph(u),
        &build_power_graph(v),
        &build_power_graph(&product),
    ))
}

fn require_coprime(u: &FiniteGroup, v: &FiniteGroup) -> Result<()> {
    if u.order().gcd(&v.order()) == 1 {
        Ok(())
    } else {
        Err(Error::NotCoprime {
            left: u.order(),
            right: v.order(),
        })
    }
}

/// `|E->(U)| |E->(V)| + |E->(U)| |V| + |U| |E->(V)|` for coprime orders.
pub fn product_directed_count(u: &FiniteGroup, v: &FiniteGroup) -> Result<u64> {
    require_coprime(u, v)?;
    let (eu, ev) = (edge_counts_via_orders(u), edge_counts_via_orders(v));
    let (nu, nv) = (u.order() as u64, v.order() as u64);
    Ok(eu.directed * ev.directed + eu.directed * nv + nu * ev.directed)
}

/// `2 |E<->(U)| |E<->(V)| + |E<->(U)| |V| + |U| |E<->(V)|` for coprime orders.
pub fn product_bidirectional_count(u: &FiniteGroup, v: &FiniteGroup) -> Result<u64> {
    require_coprime(u, v)?;
    let (eu, ev) = (edge_counts_via_orders(u), edge_counts_via_orders(v));
    let (nu, nv) = (u.order() as u64, v.order() as u64);
    Ok(2 * eu.bidirectional * ev.bidirectional + eu.bidirectional * nv + nu * ev.bidirectional)
}

/// Counts of `U x V` read off the explicitly built power graph.
pub fn product_counts_brute(u: &FiniteGroup, v: &FiniteGroup) -> Result<EdgeCounts> {
    let product = FiniteGroup::direct_product(u, v)?;
    Ok(build_power_graph(&product).edge_counts())
}

/// `|E(U x V)| - |E(U x V')|` from factor counts:
/// `(|E->(U)| - 2|E<->(U)|)(|E->(V)| - |E->(V')|) + (2|E<->(U)| + |U|)(|E(V)| - |E(V')|)`.
pub fn product_edge_difference(
    u: &FiniteGroup,
    v: &FiniteGroup,
    v_alt: &FiniteGroup,
) -> Result<i64> {
    if v.order() != v_alt.order() {
        return Err(Error::InvalidParameter(format!(
            "V and V' must have equal orders, got {} and {}",
            v.order(),
            v_alt.order()
        )));
    }
    require_coprime(u, v)?;
    let eu = edge_counts_via_orders(u);
    let ev = edge_counts_via_orders(v);
    let ev_alt = edge_counts_via_orders(v_alt);
    let s = |x: u64| x as i64;
    Ok((s(eu.directed) - 2 * s(eu.bidirectional)) * (s(ev.directed) - s(ev_alt.directed))
        + (2 * s(eu.bidirectional) + u.order() as i64) * (s(ev.undirected) - s(ev_alt.undirected)))
}

/// `|E(U x V)| - |E(U x V')|` by building both products.
pub fn product_edge_difference_brute(
    u: &FiniteGroup,
    v: &FiniteGroup,
    v_alt: &FiniteGroup,
) -> Result<i64> {
    let a = product_counts_brute(u, v)?.undirected as i64;
    let b = product_counts_brute(u, v_alt)?.undirected as i64;
    Ok(a - b)
}

/// `(u v)^{*c} = u^t v^c` with `t = 1 + r + ... + r^(c-1)`, in additive
/// notation `(t u mod m, c v mod k)`.
pub fn star_power(spec: &SemidirectSpec, u: u64, v: u64, c: u64) -> (u64, u64) {
    let (m, k, r) = (spec.m(), spec.k(), spec.r());
    let (u, v) = (u % m, v % k);
    // the twist r^(i v) has period dividing k in i
    let r_v = crate::group::pow_mod(r, v, m);
    let partial = |len: u64| {
        let mut t = 0u64;
        let mut term = 1u64;
        for _ in 0..len {
            t = (t + term) % m;
            term = term * r_v % m;
        }
        t
    };
    let full = partial(k);
    let t = ((c / k) % m * full + partial(c % k)) % m;
    (t * u % m, (c % k) * v % k)
}

/// Whether every undirected edge of `Z_m ⋊ Z_k` is also an edge of
/// `Z_m x Z_k` under the shared `(u, v)` labelling.
pub fn semidirect_containment_check(spec: &SemidirectSpec) -> Result<bool> {
    let twisted = build_power_graph(&FiniteGroup::semidirect_cyclic(spec)?);
    let direct = build_power_graph(&FiniteGroup::semidirect_cyclic(&spec.direct())?);
    let direct_edges: BTreeSet<_> = direct.undirected_edges().into_iter().collect();
    Ok(twisted
        .undirected_edges()
        .iter()
        .all(|e| direct_edges.contains(e)))
}

/// Whether the directed and bidirectional edges of `Z_m ⋊ Z_k` lie in the
/// `D` and `B` sets built from the cyclic factors.
pub fn semidirect_superset_check(spec: &SemidirectSpec) -> Result<bool> {
    let pu = build_power_graph(&FiniteGroup::cyclic(spec.m() as usize)?);
    let pv = build_power_graph(&FiniteGroup::cyclic(spec.k() as usize)?);
    let twisted = build_power_graph(&FiniteGroup::semidirect_cyclic(spec)?);
    let sets = superset_sets_from(&pu, &pv, &twisted);
    Ok(sets.directed_contained() && sets.bidirectional_contained())
}

/// For coprime `m, k`: the order of each `(u, v)` in the semidirect product
/// divides its order in the direct product.
pub fn order_divisibility_check(spec: &SemidirectSpec) -> Result<bool> {
    if !spec.is_coprime() {
        return Err(Error::NotCoprime {
            left: spec.m() as usize,
            right: spec.k() as usize,
        });
    }
    let twisted = FiniteGroup::semidirect_cyclic(spec)?;
    let direct = FiniteGroup::semidirect_cyclic(&spec.direct())?;
    Ok((0..twisted.order())
        .all(|x| direct.element_order(x) % twisted.element_order(x) == 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    fn spec(m: u64, k: u64, r: u64) -> SemidirectSpec {
        SemidirectSpec::new(m, k, r).unwrap()
    }

    #[test]
    fn klein_superset_is_strict() {
        let sets = superset_sets(&z(2), &z(2)).unwrap();
        assert!(sets.directed_contained() && sets.bidirectional_contained());
        assert!(!sets.directed_equal());
        // (u,v) -> (u,e) with u, v of order 2 is in D but not an edge
        assert!(sets.d.contains(&(3, 2)));
        assert!(!sets.product_directed.contains(&(3, 2)));
    }

    #[test]
    fn coprime_superset_is_equal() {
        let sets = superset_sets(&z(2), &z(3)).unwrap();
        assert!(sets.directed_equal());
        assert!(sets.bidirectional_equal());
    }

    #[test]
    fn trivial_factor_superset() {
        let v = FiniteGroup::dihedral(4).unwrap();
        let sets = superset_sets(&z(1), &v).unwrap();
        let direct: BTreeSet<_> = build_power_graph(&v).directed_edges().into_iter().collect();
        assert_eq!(sets.d, direct);
    }

    #[test]
    fn product_count_examples() {
        assert_eq!(product_directed_count(&z(2), &z(3)).unwrap(), 15);
        assert_eq!(product_bidirectional_count(&z(2), &z(3)).unwrap(), 2);
        let brute = product_counts_brute(&z(2), &z(3)).unwrap();
        assert_eq!((brute.directed, brute.bidirectional), (15, 2));

        let v = FiniteGroup::alternating(4).unwrap();
        let ev = edge_counts_via_orders(&v);
        assert_eq!(product_directed_count(&z(1), &v).unwrap(), ev.directed);
        assert_eq!(product_bidirectional_count(&z(1), &v).unwrap(), ev.bidirectional);
        assert!(matches!(
            product_directed_count(&z(2), &z(4)),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn edge_difference_examples() {
        let klein = FiniteGroup::abelian(&[2, 2]).unwrap();
        assert_eq!(product_edge_difference(&z(3), &z(4), &z(4)).unwrap(), 0);
        let formula = product_edge_difference(&z(5), &z(4), &klein).unwrap();
        let brute = product_edge_difference_brute(&z(5), &z(4), &klein).unwrap();
        assert_eq!(formula, brute);
        assert!(formula > 0);
        assert!(product_edge_difference(&z(5), &z(4), &z(3)).is_err());
        assert!(product_edge_difference(&z(2), &z(4), &klein).is_err());
    }

    #[test]
    fn star_power_examples() {
        let s = spec(3, 2, 2);
        assert_eq!(star_power(&s, 1, 1, 2), (0, 0));
        assert_eq!(star_power(&s, 2, 1, 0), (0, 0));
        let d = spec(7, 3, 1);
        for c in 0..30 {
            assert_eq!(star_power(&d, 3, 2, c), ((3 * c) % 7, (2 * c) % 3));
        }
    }

    #[test]
    fn star_power_matches_group_powers() {
        let s = spec(9, 6, 2);
        let g = FiniteGroup::semidirect_cyclic(&s).unwrap();
        for x in 0..g.order() {
            let (u, v) = s.pair(x);
            let mut acc = 0;
            for c in 0..=2 * g.order() as u64 {
                let (tu, cv) = star_power(&s, u, v, c);
                assert_eq!(s.index(tu, cv), acc, "x = {x}, c = {c}");
                acc = g.mul(acc, x);
            }
        }
    }

    #[test]
    fn semidirect_checks() {
        assert!(semidirect_containment_check(&spec(3, 2, 2)).unwrap());
        assert!(semidirect_containment_check(&spec(5, 4, 1)).unwrap());
        assert!(order_divisibility_check(&spec(7, 3, 2)).unwrap());
        assert!(order_divisibility_check(&spec(4, 2, 3)).is_err());
        assert!(semidirect_superset_check(&spec(4, 4, 3)).unwrap());
    }

    #[test]
    fn s3_edges_inside_z6() {
        let s3 = FiniteGroup::semidirect_cyclic(&spec(3, 2, 2)).unwrap();
        let z6 = FiniteGroup::semidirect_cyclic(&spec(3, 2, 1)).unwrap();
        assert_eq!(build_power_graph(&s3).edge_counts().undirected, 6);
        assert_eq!(build_power_graph(&z6).edge_counts().undirected, 13);
    }
}
