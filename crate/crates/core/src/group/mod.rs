//! Finite groups stored as validated Cayley tables.
//!
//! Every [`FiniteGroup`] has its identity at index 0 and has passed the full
//! validation in [`FiniteGroup::from_cayley_table`]: closure, Latin square,
//! two-sided identity, and associativity.

mod cayley;
mod families;

pub use cayley::{parse_cayley_table, CayleyTable};
pub use families::SemidirectSpec;
pub(crate) use families::{modular_spec, pow_mod};

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Largest group order accepted by any constructor.
pub const MAX_ORDER: usize = 512;

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    // row-major, table[a * order + b] = a * b
    table: Vec<u16>,
    orders: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validate a square multiplication table and build the group.
    ///
    /// The identity may sit at any index; if it is not at 0 the two labels
    /// are swapped so that it is, and the original indices are kept as
    /// element labels.
    pub fn from_cayley_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidParameter("empty Cayley table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::TooLarge {
                order: n,
                cap: MAX_ORDER,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
            for (j, &value) in row.iter().enumerate() {
                if value >= n {
                    return Err(Error::EntryOutOfRange {
                        row: i,
                        col: j,
                        value,
                        order: n,
                    });
                }
                table.push(value as u16);
            }
        }
        Self::from_flat(n, table, None)
    }

    /// Build from a multiplication closure over `0..n`. Used by the family
    /// constructors; the result goes through the same validation.
    pub(crate) fn from_fn(
        n: usize,
        labels: Option<Vec<String>>,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("group order must be positive".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::TooLarge {
                order: n,
                cap: MAX_ORDER,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let c = mul(a, b);
                if c >= n {
                    return Err(Error::EntryOutOfRange {
                        row: a,
                        col: b,
                        value: c,
                        order: n,
                    });
                }
                table.push(c as u16);
            }
        }
        Self::from_flat(n, table, labels)
    }

    fn from_flat(n: usize, mut table: Vec<u16>, mut labels: Option<Vec<String>>) -> Result<Self> {
        check_latin(n, &table)?;
        let e = find_identity(n, &table).ok_or(Error::MissingIdentity)?;
        check_associative(n, &table, e)?;
        if e != 0 {
            table = swap_labels(n, &table, e);
            let mut names = labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
            names.swap(0, e);
            labels = Some(names);
        }
        let orders = element_orders(n, &table);
        Ok(FiniteGroup {
            order: n,
            table,
            orders,
            labels,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn contains(&self, g: usize) -> bool {
        g < self.order
    }

    pub(crate) fn check_element(&self, g: usize) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                element: g,
                order: self.order,
            })
        }
    }

    /// `g^c` for `c >= 0`.
    pub fn pow(&self, g: usize, c: u64) -> usize {
        let c = c % self.orders[g] as u64;
        (0..c).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.pow(g, self.orders[g] as u64 - 1)
    }

    /// Order of `g`, found by repeated multiplication at construction time.
    ///
    /// Panics if `g` is not an element.
    pub fn element_order(&self, g: usize) -> usize {
        self.orders[g]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.orders
    }

    /// Powers `g, g^2, ..., g^o(g) = e`, i.e. the elements of `<g>`.
    pub fn cyclic_subgroup(&self, g: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.orders[g]);
        let mut x = g;
        out.push(x);
        while x != 0 {
            x = self.mul(x, g);
            out.push(x);
        }
        out
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&g| (0..self.order).all(|h| self.mul(g, h) == self.mul(h, g)))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.order
    }

    /// Cyclic iff some element has order `|G|`.
    pub fn is_cyclic(&self) -> bool {
        self.orders.contains(&self.order)
    }

    /// Every non-identity element has order 2.
    pub fn is_elementary_abelian_2_group(&self) -> bool {
        self.orders[1..].iter().all(|&o| o == 2)
    }

    /// Every non-identity element has prime order.
    pub fn is_epo(&self) -> bool {
        self.orders[1..].iter().all(|&o| is_prime(o))
    }

    /// Multiset of element orders as `order -> count`.
    pub fn order_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for &o in &self.orders {
            *profile.entry(o).or_insert(0) += 1;
        }
        profile
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(names) => names[g].clone(),
            None => g.to_string(),
        }
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Result<Vec<usize>> {
        for &g in gens {
            self.check_element(g)?;
        }
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        Ok((0..self.order).filter(|&g| seen[g]).collect())
    }

    /// A nonempty subset of a finite group is a subgroup iff it is closed
    /// under multiplication.
    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        if subset.is_empty() || subset.iter().any(|&g| !self.contains(g)) {
            return false;
        }
        let mut member = vec![false; self.order];
        for &g in subset {
            member[g] = true;
        }
        subset
            .iter()
            .all(|&a| subset.iter().all(|&b| member[self.mul(a, b)]))
    }

    /// The subgroup on `subset` as a group in its own right, with the
    /// embedding `local index -> index in self` (sorted, identity first).
    pub fn subgroup(&self, subset: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if let Some(&g) = subset.iter().find(|&&g| !self.contains(g)) {
            return Err(Error::InvalidElement {
                element: g,
                order: self.order,
            });
        }
        let mut elems = subset.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if !self.is_subgroup(&elems) {
            return Err(Error::NotSubgroup(
                "subset is not closed under multiplication".into(),
            ));
        }
        let mut local = vec![usize::MAX; self.order];
        for (i, &g) in elems.iter().enumerate() {
            local[g] = i;
        }
        let labels = elems.iter().map(|&g| self.label(g)).collect();
        let sub = FiniteGroup::from_fn(elems.len(), Some(labels), |a, b| {
            local[self.mul(elems[a], elems[b])]
        })?;
        Ok((sub, elems))
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|row| row.iter().map(|&x| x as usize).collect())
            .collect()
    }

    /// Serialize in the Cayley file format read by [`parse_cayley_table`].
    pub fn to_cayley_string(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for row in self.table.chunks(self.order) {
            let mut first = true;
            for x in row {
                if !first {
                    out.push(' ');
                }
                first = false;
                write!(out, "{x}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn check_latin(n: usize, table: &[u16]) -> Result<()> {
    let mut seen = vec![usize::MAX; n];
    for i in 0..n {
        for j in 0..n {
            let v = table[i * n + j] as usize;
            if seen[v] == i {
                return Err(Error::NotLatin(format!("row {i} repeats {v}")));
            }
            seen[v] = i;
        }
    }
    seen.fill(usize::MAX);
    for j in 0..n {
        for i in 0..n {
            let v = table[i * n + j] as usize;
            if seen[v] == j {
                return Err(Error::NotLatin(format!("column {j} repeats {v}")));
            }
            seen[v] = j;
        }
    }
    Ok(())
}

fn find_identity(n: usize, table: &[u16]) -> Option<usize> {
    (0..n).find(|&e| {
        (0..n).all(|j| table[e * n + j] as usize == j && table[j * n + e] as usize == j)
    })
}

/// Exact associativity test for a loop with identity `e`.
///
/// The set of elements `s` with `(x s) y = x (s y)` for all `x, y` is closed
/// under multiplication. So it suffices to test this for a set of generators
/// whose left-normed products cover the table, which costs
/// `O(|gens| n^2)` instead of `O(n^3)`.
fn check_associative(n: usize, table: &[u16], e: usize) -> Result<()> {
    let mul = |a: usize, b: usize| table[a * n + b] as usize;
    let mut gens: Vec<usize> = Vec::new();
    let mut reached = vec![false; n];
    reached[e] = true;
    while let Some(g) = (0..n).find(|&g| !reached[g]) {
        gens.push(g);
        reached.fill(false);
        reached[e] = true;
        let mut stack = gens.clone();
        for &s in &gens {
            reached[s] = true;
        }
        while let Some(x) = stack.pop() {
            for &s in &gens {
                let y = mul(x, s);
                if !reached[y] {
                    reached[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    for &s in &gens {
        for x in 0..n {
            let xs = mul(x, s);
            for y in 0..n {
                if mul(xs, y) != mul(x, mul(s, y)) {
                    return Err(Error::NotAssociative { a: x, b: s, c: y });
                }
            }
        }
    }
    Ok(())
}

fn swap_labels(n: usize, table: &[u16], e: usize) -> Vec<u16> {
    let sigma = |x: usize| {
        if x == 0 {
            e
        } else if x == e {
            0
        } else {
            x
        }
    };
    let mut out = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            out[sigma(i) * n + sigma(j)] = sigma(table[i * n + j] as usize) as u16;
        }
    }
    out
}

fn element_orders(n: usize, table: &[u16]) -> Vec<usize> {
    (0..n)
        .map(|g| {
            let mut x = g;
            let mut o = 1;
            while x != 0 {
                x = table[x * n + g] as usize;
                o += 1;
            }
            o
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_associative(g: &FiniteGroup) -> bool {
        let n = g.order();
        (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))))
        })
    }

    // A loop of order 5 in which every element is its own inverse; no group
    // of order 5 has that property.
    const NON_ASSOCIATIVE_LOOP: [[usize; 5]; 5] = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ];

    fn rows<const N: usize>(t: [[usize; N]; N]) -> Vec<Vec<usize>> {
        t.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn trivial_and_z2() {
        let g = FiniteGroup::from_cayley_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.is_cyclic());
        let z2 = FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.element_order(1), 2);
    }

    #[test]
    fn rejects_non_associative_loop() {
        let err = FiniteGroup::from_cayley_table(&rows(NON_ASSOCIATIVE_LOOP)).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }), "{err:?}");
    }

    #[test]
    fn distinct_errors() {
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[vec![0, 1], vec![0, 1]]),
            Err(Error::NotLatin(_))
        ));
        // Z_2 with its identity at index 1
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[vec![1, 0], vec![0, 1]]).map(|_| ()),
            Ok(())
        ));
        assert!(FiniteGroup::from_cayley_table(&rows([[1, 2, 0], [2, 0, 1], [0, 1, 2]])).is_ok());
        assert!(matches!(
            FiniteGroup::from_cayley_table(&rows([[1, 0, 2], [0, 2, 1], [2, 1, 0]])),
            Err(Error::MissingIdentity)
        ));
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1]]),
            Err(Error::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[vec![0, 2], vec![1, 0]]),
            Err(Error::EntryOutOfRange { .. })
        ));
        assert!(FiniteGroup::from_cayley_table(&[]).is_err());
    }

    #[test]
    fn identity_is_relabelled_to_zero() {
        // Z_3 with identity at index 2
        let g = FiniteGroup::from_cayley_table(&rows([[1, 2, 0], [2, 0, 1], [0, 1, 2]])).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 0), 1);
        assert_eq!(g.labels().unwrap(), &["2", "1", "0"]);
        assert_eq!(g.element_order(0), 1);
        assert!(brute_associative(&g));
    }

    #[test]
    fn fast_associativity_matches_brute_force_on_loops() {
        // Every isotope of Z_n normalised to a loop; most are not groups.
        for n in 3..=7usize {
            for shift in 0..n {
                let rows: Vec<Vec<usize>> = (0..n)
                    .map(|i| (0..n).map(|j| (i * shift + j + i * i * j) % n).collect())
                    .collect();
                let latin = check_latin(n, &flat(&rows)).is_ok();
                let Some(e) = latin.then(|| find_identity(n, &flat(&rows))).flatten() else {
                    continue;
                };
                let fast = check_associative(n, &flat(&rows), e).is_ok();
                let brute = (0..n).all(|a| {
                    (0..n).all(|b| {
                        (0..n).all(|c| rows[rows[a][b]][c] == rows[a][rows[b][c]])
                    })
                });
                assert_eq!(fast, brute, "n = {n}, shift = {shift}");
            }
        }
        assert!(check_associative(5, &flat(&rows(NON_ASSOCIATIVE_LOOP)), 0).is_err());
    }

    fn flat(rows: &[Vec<usize>]) -> Vec<u16> {
        rows.iter().flatten().map(|&x| x as u16).collect()
    }

    #[test]
    fn subgroup_queries() {
        let g = FiniteGroup::cyclic(12).unwrap();
        assert_eq!(g.cyclic_subgroup(3), vec![3, 6, 9, 0]);
        assert_eq!(g.generated_subgroup(&[4]).unwrap(), vec![0, 4, 8]);
        assert!(g.is_subgroup(&[0, 6]));
        assert!(!g.is_subgroup(&[0, 5]));
        let (sub, emb) = g.subgroup(&[0, 3, 6, 9]).unwrap();
        assert!(sub.is_cyclic());
        assert_eq!(emb, vec![0, 3, 6, 9]);
        assert!(matches!(g.subgroup(&[0, 5]), Err(Error::NotSubgroup(_))));
        assert!(g.generated_subgroup(&[12]).is_err());
    }

    #[test]
    fn element_order_queries() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(z6.element_order(0), 1);
        assert_eq!(z6.element_orders().iter().sum::<usize>(), 21);
        assert_eq!(FiniteGroup::symmetric(3).unwrap().center().len(), 1);
        assert_eq!(z6.inverse(1), 5);
        assert_eq!(z6.pow(1, 8), 2);
    }

    #[test]
    fn cayley_string_round_trips() {
        let g = FiniteGroup::dihedral(4).unwrap();
        let parsed = parse_cayley_table(&g.to_cayley_string()).unwrap();
        let back = FiniteGroup::from_cayley_table(&parsed.rows).unwrap();
        assert_eq!(back.table_rows(), g.table_rows());
    }
}
