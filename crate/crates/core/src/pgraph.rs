//! Directed and undirected power graphs of concrete groups.
//!
//! [`build_power_graph`] enumerates edges explicitly from the cyclic
//! subgroups `<g>`; [`edge_counts_via_orders`] gets the same three numbers
//! from element orders alone. The two are meant to be compared.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::numth;

/// Sizes of the directed edge set, the bidirectional edge set, and the
/// undirected edge set of a power graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeCounts {
    pub directed: u64,
    pub bidirectional: u64,
    pub undirected: u64,
}

impl EdgeCounts {
    /// `undirected = directed - bidirectional`, `2 bidirectional <= directed`
    /// and, for a group of order `n >= 1`, `undirected >= n - 1`.
    pub fn is_consistent(&self, order: u64) -> bool {
        self.directed.checked_sub(self.bidirectional) == Some(self.undirected)
            && 2 * self.bidirectional <= self.directed
            && self.undirected + 1 >= order
    }
}

/// Dense square bit matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    fn count(&self) -> u64 {
        self.bits.iter().map(|w| w.count_ones() as u64).sum()
    }

    fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) {
                    t.set(j, i);
                }
            }
        }
        t
    }
}

/// Power graph of a finite group with an explicit directed adjacency
/// matrix; the bidirectional and undirected edge sets are derived from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerGraph {
    order: usize,
    // out[g][h] iff h in <g> and h != g
    out: BitMatrix,
    // transpose of `out`
    into: BitMatrix,
}

/// Directed edges `(g, h)` for every `h` in `<g> - {g}`.
pub fn build_power_graph(group: &FiniteGroup) -> PowerGraph {
    let n = group.order();
    let mut out = BitMatrix::new(n);
    for g in 0..n {
        for h in group.cyclic_subgroup(g) {
            if h != g {
                out.set(g, h);
            }
        }
    }
    let into = out.transpose();
    PowerGraph { order: n, out, into }
}

impl PowerGraph {
    pub fn order(&self) -> usize {
        self.order
    }

    /// `h` is a power of `g` other than `g` itself.
    pub fn has_directed(&self, g: usize, h: usize) -> bool {
        self.out.get(g, h)
    }

    pub fn is_bidirectional(&self, g: usize, h: usize) -> bool {
        self.out.get(g, h) && self.out.get(h, g)
    }

    pub fn is_adjacent(&self, g: usize, h: usize) -> bool {
        self.out.get(g, h) || self.out.get(h, g)
    }

    pub fn directed_edges(&self) -> Vec<(usize, usize)> {
        let n = self.order;
        (0..n)
            .flat_map(|g| (0..n).map(move |h| (g, h)))
            .filter(|&(g, h)| self.has_directed(g, h))
            .collect()
    }

    /// Canonical `(min, max)` pairs, sorted.
    pub fn bidirectional_edges(&self) -> Vec<(usize, usize)> {
        self.pairs(|g, h| self.is_bidirectional(g, h))
    }

    /// Canonical `(min, max)` pairs, sorted.
    pub fn undirected_edges(&self) -> Vec<(usize, usize)> {
        self.pairs(|g, h| self.is_adjacent(g, h))
    }

    fn pairs(&self, keep: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
        let n = self.order;
        (0..n)
            .flat_map(|g| (g + 1..n).map(move |h| (g, h)))
            .filter(|&(g, h)| keep(g, h))
            .collect()
    }

    pub fn edge_counts(&self) -> EdgeCounts {
        let directed = self.out.count();
        let mut bidirectional = 0u64;
        for g in 0..self.order {
            let both: u64 = self
                .out
                .row(g)
                .iter()
                .zip(self.into.row(g))
                .map(|(a, b)| (a & b).count_ones() as u64)
                .sum();
            bidirectional += both;
        }
        // every bidirectional pair was seen from both ends
        bidirectional /= 2;
        EdgeCounts {
            directed,
            bidirectional,
            undirected: directed - bidirectional,
        }
    }

    /// Undirected degree of `g`.
    pub fn vertex_degree(&self, g: usize) -> Result<usize> {
        if g >= self.order {
            return Err(Error::InvalidElement {
                element: g,
                order: self.order,
            });
        }
        Ok(self
            .out
            .row(g)
            .iter()
            .zip(self.into.row(g))
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum())
    }

    /// One undirected edge per line as `"u v"` with `u < v`, sorted.
    pub fn edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.undirected_edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

fn totients_up_to(n: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for p in 2..=n {
        if phi[p] == p as u64 {
            for m in (p..=n).step_by(p) {
                phi[m] -= phi[m] / p as u64;
            }
        }
    }
    phi
}

/// Edge counts from element orders:
/// directed `= sum (o(g) - 1)`, bidirectional `= sum (phi(o(g)) - 1) / 2`.
pub fn edge_counts_via_orders(group: &FiniteGroup) -> EdgeCounts {
    let phi = totients_up_to(group.order());
    let mut directed = 0u64;
    let mut twice_bidi = 0u64;
    for &o in group.element_orders() {
        directed += o as u64 - 1;
        twice_bidi += phi[o] - 1;
    }
    let bidirectional = twice_bidi / 2;
    EdgeCounts {
        directed,
        bidirectional,
        undirected: directed - bidirectional,
    }
}

/// Whether the power graph of the subgroup `subset` is exactly the induced
/// subgraph of the power graph of `group` on those vertices, for both the
/// directed and undirected graphs.
pub fn induced_subgraph_check(group: &FiniteGroup, subset: &[usize]) -> Result<bool> {
    let (sub, embedding) = group.subgroup(subset)?;
    let whole = build_power_graph(group);
    let part = build_power_graph(&sub);
    let k = sub.order();
    for a in 0..k {
        for b in 0..k {
            let (ga, gb) = (embedding[a], embedding[b]);
            if part.has_directed(a, b) != whole.has_directed(ga, gb)
                || part.is_adjacent(a, b) != whole.is_adjacent(ga, gb)
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `smaller <= larger`, plus whether equality was expected from the group
/// structure alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InequalityVerdict {
    pub smaller: u64,
    pub larger: u64,
    pub holds: bool,
    pub equality: bool,
    pub structural_equality: bool,
}

impl InequalityVerdict {
    fn new(smaller: u64, larger: u64, structural_equality: bool) -> Self {
        InequalityVerdict {
            smaller,
            larger,
            holds: smaller <= larger,
            equality: smaller == larger,
            structural_equality,
        }
    }

    /// Holds, and equality occurs exactly when the structure says it should.
    pub fn is_consistent(&self) -> bool {
        self.holds && self.equality == self.structural_equality
    }
}

/// The three elementary edge-count inequalities for one group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InequalitySuite {
    /// `|G| <= |E| + 1`; equality iff elementary abelian 2-group.
    pub vertices_vs_edges: InequalityVerdict,
    /// `|E| <= |directed E|`; equality iff elementary abelian 2-group.
    pub undirected_vs_directed: InequalityVerdict,
    /// `2 |bidirectional E| <= |directed E| - |G| + 1`; equality iff every
    /// nonidentity element has prime order.
    pub bidirectional_vs_directed: InequalityVerdict,
}

impl InequalitySuite {
    pub fn all_consistent(&self) -> bool {
        self.vertices_vs_edges.is_consistent()
            && self.undirected_vs_directed.is_consistent()
            && self.bidirectional_vs_directed.is_consistent()
    }
}

/// Edge counts are taken from the explicit graph; the equality classes are
/// decided by scanning element orders.
pub fn inequality_suite(group: &FiniteGroup) -> InequalitySuite {
    let counts = build_power_graph(group).edge_counts();
    let n = group.order() as u64;
    let elementary = group.is_elementary_abelian_2_group();
    InequalitySuite {
        vertices_vs_edges: InequalityVerdict::new(n, counts.undirected + 1, elementary),
        undirected_vs_directed: InequalityVerdict::new(
            counts.undirected,
            counts.directed,
            elementary,
        ),
        // |directed E| >= n - 1 always, so this does not underflow
        bidirectional_vs_directed: InequalityVerdict::new(
            2 * counts.bidirectional,
            counts.directed + 1 - n,
            group.is_epo(),
        ),
    }
}

/// Degree of a vertex in the cyclic group's power graph, via the closed form.
pub fn cyclic_vertex_degree(n: u64, element_order: u64) -> Result<u64> {
    numth::cyclic_degree(&numth::factorize(n)?, element_order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(d: u64, b: u64, u: u64) -> EdgeCounts {
        EdgeCounts {
            directed: d,
            bidirectional: b,
            undirected: u,
        }
    }

    // Definition-level oracle: h is a positive power of g.
    fn brute_directed(g: &FiniteGroup) -> Vec<(usize, usize)> {
        let n = g.order();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let mut x = a;
                let mut hit = false;
                for _ in 0..n {
                    x = g.mul(x, a);
                    if x == b && b != a {
                        hit = true;
                    }
                }
                if hit {
                    out.push((a, b));
                }
            }
        }
        out
    }

    #[test]
    fn trivial_group_has_no_edges() {
        let pg = build_power_graph(&FiniteGroup::cyclic(1).unwrap());
        assert_eq!(pg.edge_counts(), EdgeCounts::default());
        assert!(pg.undirected_edges().is_empty());
    }

    #[test]
    fn z4_is_complete() {
        let pg = build_power_graph(&FiniteGroup::cyclic(4).unwrap());
        assert_eq!(pg.edge_counts().undirected, 6);
    }

    #[test]
    fn s3_counts() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let pg = build_power_graph(&s3);
        assert_eq!(pg.edge_counts(), counts(7, 1, 6));
        assert_eq!(edge_counts_via_orders(&s3), counts(7, 1, 6));
    }

    #[test]
    fn z6_and_klein_counts() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(build_power_graph(&z6).edge_counts(), counts(15, 2, 13));
        assert_eq!(edge_counts_via_orders(&z6), counts(15, 2, 13));
        let klein = FiniteGroup::abelian(&[2, 2]).unwrap();
        assert_eq!(edge_counts_via_orders(&klein), counts(3, 0, 3));
    }

    #[test]
    fn explicit_edges_match_definition() {
        for g in [
            FiniteGroup::dicyclic(3).unwrap(),
            FiniteGroup::dihedral(6).unwrap(),
            FiniteGroup::abelian(&[2, 4]).unwrap(),
            FiniteGroup::alternating(4).unwrap(),
        ] {
            let pg = build_power_graph(&g);
            assert_eq!(pg.directed_edges(), brute_directed(&g));
            assert!(pg.edge_counts().is_consistent(g.order() as u64));
        }
    }

    #[test]
    fn degrees() {
        let z12 = FiniteGroup::cyclic(12).unwrap();
        let pg = build_power_graph(&z12);
        assert_eq!(pg.vertex_degree(0).unwrap(), 11);
        assert_eq!(pg.vertex_degree(1).unwrap(), 11);
        // 3 has order 4 in Z_12
        assert_eq!(pg.vertex_degree(3).unwrap(), 7);
        assert_eq!(cyclic_vertex_degree(12, 4).unwrap(), 7);
        assert!(pg.vertex_degree(12).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let s4 = FiniteGroup::symmetric(4).unwrap();
        for g in 0..s4.order() {
            assert!(induced_subgraph_check(&s4, &s4.cyclic_subgroup(g)).unwrap());
        }
        // point stabilizer of 3 is a copy of S_3
        let labels = s4.labels().unwrap();
        let stab: Vec<usize> = (0..24).filter(|&g| !labels[g].contains('3')).collect();
        assert_eq!(stab.len(), 6);
        assert!(induced_subgraph_check(&s4, &stab).unwrap());

        let m27 = FiniteGroup::modular_group(3, 3).unwrap();
        assert!(induced_subgraph_check(&m27, &m27.center()).unwrap());
        let three_cycle = (0..24).find(|&g| s4.element_order(g) == 3).unwrap();
        assert!(matches!(
            induced_subgraph_check(&s4, &[0, three_cycle]),
            Err(Error::NotSubgroup(_))
        ));
    }

    #[test]
    fn inequality_examples() {
        let e8 = inequality_suite(&FiniteGroup::abelian(&[2, 2, 2]).unwrap());
        assert!(e8.vertices_vs_edges.equality && e8.undirected_vs_directed.equality);
        assert!(e8.all_consistent());

        let s3 = inequality_suite(&FiniteGroup::symmetric(3).unwrap());
        assert_eq!(
            (s3.bidirectional_vs_directed.smaller, s3.bidirectional_vs_directed.larger),
            (2, 2)
        );
        assert!(s3.bidirectional_vs_directed.equality);
        assert!(s3.all_consistent());

        let z6 = inequality_suite(&FiniteGroup::cyclic(6).unwrap());
        assert!(!z6.vertices_vs_edges.equality);
        assert!(!z6.undirected_vs_directed.equality);
        assert!(!z6.bidirectional_vs_directed.equality);
        assert!(z6.all_consistent());
    }

    #[test]
    fn edge_list_format() {
        let pg = build_power_graph(&FiniteGroup::cyclic(3).unwrap());
        assert_eq!(pg.edge_list(), "0 1\n0 2\n1 2\n");
    }
}
