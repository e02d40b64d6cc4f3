#![allow(dead_code)]

use std::collections::BTreeMap;

use powergraph_core::catalog::{complete, families, COMPLETE_MAX_ORDER};
use powergraph_core::{EdgeCounts, FiniteGroup};

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `phi(n)` by counting residues coprime to `n`.
pub fn phi_brute(n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    (1..n).filter(|&k| gcd(k, n) == 1).count() as u64
}

/// `<g>` by repeated multiplication.
pub fn powers(g: &FiniteGroup, x: usize) -> Vec<usize> {
    let mut out = vec![x];
    let mut cur = g.mul(x, x);
    while cur != x {
        out.push(cur);
        cur = g.mul(cur, x);
    }
    out
}

/// Edge counts straight from the definition: `x -> y` iff `y` is a power
/// of `x` other than `x`; bidirectional iff both directions hold.
#[allow(clippy::needless_range_loop)]
pub fn brute_counts(g: &FiniteGroup) -> EdgeCounts {
    let n = g.order();
    let mut adj = vec![vec![false; n]; n];
    for (x, row) in adj.iter_mut().enumerate() {
        for y in powers(g, x) {
            if y != x {
                row[y] = true;
            }
        }
    }
    let mut directed = 0;
    let mut bidirectional = 0;
    let mut undirected = 0;
    for x in 0..n {
        for y in 0..n {
            directed += u64::from(adj[x][y]);
            if x < y {
                bidirectional += (adj[x][y] && adj[y][x]) as u64;
                undirected += (adj[x][y] || adj[y][x]) as u64;
            }
        }
    }
    EdgeCounts {
        directed,
        bidirectional,
        undirected,
    }
}

/// Built-in groups of every order `1..=max`: the complete list when there
/// is one, plus the families, without repeated descriptors.
pub fn catalog_up_to(max: usize) -> Vec<(usize, String, FiniteGroup)> {
    let mut out = Vec::new();
    for n in 1..=max {
        let mut by_name = BTreeMap::new();
        if n <= COMPLETE_MAX_ORDER {
            for e in complete(n).unwrap() {
                by_name.insert(e.descriptor, e.group);
            }
        }
        for e in families(n).unwrap() {
            by_name.entry(e.descriptor).or_insert(e.group);
        }
        out.extend(by_name.into_iter().map(|(d, g)| (n, d, g)));
    }
    out
}
