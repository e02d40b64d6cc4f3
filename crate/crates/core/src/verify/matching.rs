//! Order-divisibility bijections `G -> Z_n`.

use crate::group::FiniteGroup;
use crate::numth::factorize;

/// A bijection `lambda: G -> Z_n` with `o(g) | o(lambda(g))` for every `g`,
/// or `None` if there is none. `lambda(g)` is a residue mod `n`.
///
/// Elements of equal order are interchangeable, so the matching is solved
/// as a flow between order classes of `G` and divisor classes of `Z_n`,
/// then expanded back to elements.
pub fn order_divisibility_bijection(group: &FiniteGroup) -> Option<Vec<u64>> {
    let n = group.order();
    let f = factorize(n as u64).expect("group order is positive");
    let divisors = f.divisors_with_totient();

    let mut class_size = vec![0u64; divisors.len()];
    for &o in group.element_orders() {
        let i = divisors.iter().position(|&(d, _)| d == o as u64)?;
        class_size[i] += 1;
    }
    let flow = class_flow(&divisors, &class_size)?;

    // residues of Z_n grouped by order: o(z) = n / gcd(z, n)
    let mut targets: Vec<Vec<u64>> = vec![Vec::new(); divisors.len()];
    for z in 0..n as u64 {
        let o = n as u64 / num_integer::gcd(z, n as u64);
        let j = divisors.iter().position(|&(d, _)| d == o).expect("order divides n");
        targets[j].push(z);
    }

    let mut lambda = vec![0u64; n];
    let mut remaining = flow;
    for (g, &o) in group.element_orders().iter().enumerate() {
        let i = divisors.iter().position(|&(d, _)| d == o as u64).expect("checked above");
        let j = (0..divisors.len()).find(|&j| remaining[i][j] > 0).expect("flow covers class");
        remaining[i][j] -= 1;
        lambda[g] = targets[j].pop().expect("flow respects capacity");
    }
    Some(lambda)
}

/// Max flow from order classes (capacity = class size) to divisor classes
/// (capacity = phi(d)) along `o | d`; `None` unless it saturates.
fn class_flow(divisors: &[(u64, u64)], class_size: &[u64]) -> Option<Vec<Vec<u64>>> {
    let k = divisors.len();
    let compatible = |i: usize, j: usize| divisors[j].0.is_multiple_of(divisors[i].0);
    let mut flow = vec![vec![0u64; k]; k];
    let mut left = class_size.to_vec();
    let mut right: Vec<u64> = divisors.iter().map(|&(_, phi)| phi).collect();

    // augment one unit at a time; n <= 512 so this is cheap
    while let Some(path) = augmenting_path(k, &left, &right, &flow, compatible) {
        let (start, end) = (path[0], *path.last().expect("nonempty path"));
        left[start] -= 1;
        right[end] -= 1;
        // path alternates left, right, left, right, ...
        for w in path.windows(2).enumerate() {
            let (step, pair) = w;
            if step % 2 == 0 {
                flow[pair[0]][pair[1]] += 1;
            } else {
                flow[pair[1]][pair[0]] -= 1;
            }
        }
    }
    left.iter().all(|&x| x == 0).then_some(flow)
}

/// BFS from left classes with spare supply to right classes with spare
/// capacity, moving forward along compatible pairs and backward along pairs
/// carrying flow. Returns the alternating sequence of class indices.
fn augmenting_path(
    k: usize,
    left: &[u64],
    right: &[u64],
    flow: &[Vec<u64>],
    compatible: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    use std::collections::VecDeque;
    // node ids: left i -> i, right j -> k + j
    let mut parent: Vec<Option<usize>> = vec![None; 2 * k];
    let mut visited = vec![false; 2 * k];
    let mut queue = VecDeque::new();
    for i in (0..k).filter(|&i| left[i] > 0) {
        visited[i] = true;
        queue.push_back(i);
    }
    while let Some(node) = queue.pop_front() {
        if node < k {
            for j in (0..k).filter(|&j| compatible(node, j)) {
                if !visited[k + j] {
                    visited[k + j] = true;
                    parent[k + j] = Some(node);
                    if right[j] > 0 {
                        let mut path = vec![k + j];
                        let mut cur = k + j;
                        while let Some(p) = parent[cur] {
                            path.push(p);
                            cur = p;
                        }
                        path.reverse();
                        return Some(path.into_iter().map(|x| x % k).collect());
                    }
                    queue.push_back(k + j);
                }
            }
        } else {
            let j = node - k;
            for i in (0..k).filter(|&i| flow[i][j] > 0) {
                if !visited[i] {
                    visited[i] = true;
                    parent[i] = Some(node);
                    queue.push_back(i);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Element-level bipartite matching (Kuhn), as an independent oracle.
    fn kuhn_exists(group: &FiniteGroup) -> bool {
        let n = group.order();
        let z_order = |z: usize| n / num_integer::gcd(z, n);
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|g| (0..n).filter(|&z| z_order(z) % group.element_order(g) == 0).collect())
            .collect();
        let mut owner: Vec<Option<usize>> = vec![None; n];
        fn try_assign(
            g: usize,
            adj: &[Vec<usize>],
            seen: &mut [bool],
            owner: &mut [Option<usize>],
        ) -> bool {
            for &z in &adj[g] {
                if !seen[z] {
                    seen[z] = true;
                    if owner[z].is_none_or(|h| try_assign(h, adj, seen, owner)) {
                        owner[z] = Some(g);
                        return true;
                    }
                }
            }
            false
        }
        (0..n).all(|g| try_assign(g, &adj, &mut vec![false; n], &mut owner))
    }

    fn check(group: &FiniteGroup) -> bool {
        let n = group.order() as u64;
        match order_divisibility_bijection(group) {
            Some(lambda) => {
                let mut sorted = lambda.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, (0..n).collect::<Vec<_>>());
                for (g, &z) in lambda.iter().enumerate() {
                    let oz = n / num_integer::gcd(z, n);
                    assert_eq!(oz % group.element_order(g) as u64, 0);
                }
                true
            }
            None => false,
        }
    }

    #[test]
    fn examples() {
        assert!(check(&FiniteGroup::cyclic(12).unwrap()));
        assert!(check(&FiniteGroup::dicyclic(2).unwrap()));
        // the order-2 elements may go to order-4 residues
        assert!(check(&FiniteGroup::abelian(&[2, 2]).unwrap()));
        assert!(check(&FiniteGroup::cyclic(1).unwrap()));
    }

    #[test]
    fn class_flow_detects_hall_violation() {
        let divisors = crate::numth::factorize(4).unwrap().divisors_with_totient();
        assert!(class_flow(&divisors, &[1, 3, 0]).is_some());
        // three elements of order 4, but Z_4 has two
        assert!(class_flow(&divisors, &[1, 0, 3]).is_none());
        let divisors = crate::numth::factorize(12).unwrap().divisors_with_totient();
        // seven elements of order 4 against six residues of order 4 or 12
        assert!(class_flow(&divisors, &[1, 0, 0, 7, 4, 0]).is_none());
        assert!(class_flow(&divisors, &[1, 3, 2, 2, 4, 0]).is_some());
    }

    #[test]
    fn agrees_with_element_matching() {
        let groups = [
            FiniteGroup::dihedral(3).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::dihedral(5).unwrap(),
            FiniteGroup::alternating(4).unwrap(),
            FiniteGroup::symmetric(4).unwrap(),
            FiniteGroup::dicyclic(3).unwrap(),
            FiniteGroup::abelian(&[3, 3]).unwrap(),
            FiniteGroup::abelian(&[2, 6]).unwrap(),
            FiniteGroup::modular_group(3, 3).unwrap(),
            FiniteGroup::semidirect_cyclic(&crate::SemidirectSpec::new(7, 3, 2).unwrap()).unwrap(),
        ];
        for g in &groups {
            assert_eq!(check(g), kuhn_exists(g), "order {}", g.order());
        }
    }
}
