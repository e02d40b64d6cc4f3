//! Group catalogs for a fixed order.
//!
//! Every catalog contains the cyclic group and is iterated in a fixed
//! order: built-in groups sorted by descriptor string, then file groups
//! sorted by file name.
//!
//! Descriptors:
//!
//! | descriptor           | group                                              |
//! |----------------------|----------------------------------------------------|
//! | `Z12`                | cyclic group                                       |
//! | `Z2xZ6`              | abelian, invariant factors in increasing order     |
//! | `D6`                 | dihedral group of order 12                         |
//! | `Q8`, `Dic3`         | dicyclic groups (`Q8 = Dic2`)                      |
//! | `A4`, `A5`, `S4`, `S5` | alternating and symmetric groups                 |
//! | `M27`                | modular p-group `M_{p^a}` for odd `p`              |
//! | `Z9:Z3(r=4)`         | `Z_m ⋊ Z_k` with `u -> u^r`                        |
//! | `D3xZ2`, `Q8xZ3`     | a nonabelian family group times an abelian group   |
//! | `file:k4.cayley`     | group loaded from a Cayley table file              |

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::group::{modular_spec, pow_mod, FiniteGroup, SemidirectSpec, MAX_ORDER};
use crate::numth::factorize;

/// Largest order with a built-in complete list of isomorphism classes.
pub const COMPLETE_MAX_ORDER: usize = 15;

/// Which built-in groups to include.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogSource {
    /// Only `Z_n`.
    Cyclic,
    /// The constructor families listed in the module docs.
    Families,
    /// Every isomorphism class of order `n`; only for `n <= 15`.
    Complete,
}

/// Order, built-in source and extra Cayley table files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogSpec {
    pub n: usize,
    pub source: CatalogSource,
    pub files: Vec<PathBuf>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub descriptor: String,
    pub group: FiniteGroup,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub n: usize,
    pub entries: Vec<CatalogEntry>,
}

impl CatalogSpec {
    pub fn new(n: usize, source: CatalogSource) -> Self {
        CatalogSpec {
            n,
            source,
            files: Vec::new(),
        }
    }

    pub fn with_files(mut self, files: impl IntoIterator<Item = PathBuf>) -> Self {
        self.files.extend(files);
        self
    }

    /// Load every file and return all failures, including wrong orders, in
    /// file-name order.
    pub fn file_errors(&self) -> Vec<Error> {
        let mut files = self.files.clone();
        files.sort_by(|a, b| a.file_name().cmp(&b.file_name()).then_with(|| a.cmp(b)));
        files
            .iter()
            .filter_map(|path| match load_cayley_file(path) {
                Err(e) => Some(e),
                Ok(g) if g.order() != self.n => Some(Error::OrderMismatch {
                    descriptor: format!("file:{}", display_name(path)),
                    expected: self.n,
                    found: g.order(),
                }),
                Ok(_) => None,
            })
            .collect()
    }

    /// Construct every group. Any file that fails to load, or any group of
    /// the wrong order, aborts resolution.
    pub fn resolve(&self) -> Result<Catalog> {
        let n = self.n;
        if n == 0 {
            return Err(Error::Zero);
        }
        if n > MAX_ORDER {
            return Err(Error::TooLarge {
                order: n,
                cap: MAX_ORDER,
            });
        }
        let mut entries = match self.source {
            CatalogSource::Cyclic => vec![entry(format!("Z{n}"), FiniteGroup::cyclic(n)?)],
            CatalogSource::Families => families(n)?,
            CatalogSource::Complete => complete(n)?,
        };
        entries.sort_by(|a, b| a.descriptor.cmp(&b.descriptor));

        let mut files = self.files.clone();
        files.sort_by(|a, b| a.file_name().cmp(&b.file_name()).then_with(|| a.cmp(b)));
        for path in &files {
            let group = load_cayley_file(path)?;
            let descriptor = format!("file:{}", display_name(path));
            if group.order() != n {
                return Err(Error::OrderMismatch {
                    descriptor,
                    expected: n,
                    found: group.order(),
                });
            }
            entries.push(entry(descriptor, group));
        }
        Catalog::new(n, entries)
    }
}

impl Catalog {
    /// Check that every entry has order `n`.
    pub fn new(n: usize, entries: Vec<CatalogEntry>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|e| e.group.order() != n) {
            return Err(Error::OrderMismatch {
                descriptor: bad.descriptor.clone(),
                expected: n,
                found: bad.group.order(),
            });
        }
        Ok(Catalog { n, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn descriptors(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.descriptor.as_str()).collect()
    }

    pub fn groups(&self) -> impl Iterator<Item = &FiniteGroup> {
        self.entries.iter().map(|e| &e.group)
    }
}

fn entry(descriptor: String, group: FiniteGroup) -> CatalogEntry {
    CatalogEntry { descriptor, group }
}

fn display_name(path: &Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Read and validate a Cayley table file; errors carry the path.
pub fn load_cayley_file(path: &Path) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    FiniteGroup::from_cayley_str(&text).map_err(|e| Error::File {
        path: path.display().to_string(),
        source: Box::new(e),
    })
}

/// Invariant-factor lists `d_1 | d_2 | ... ` of every abelian group of
/// order `n`, cyclic (`[n]`, or `[]` for `n = 1`) first.
pub fn abelian_invariant_factors(n: usize) -> Result<Vec<Vec<usize>>> {
    let f = factorize(n as u64)?;
    // per prime, every partition of its exponent
    let mut lists: Vec<Vec<usize>> = vec![Vec::new()];
    for &(p, a) in f.factors() {
        let mut next = Vec::new();
        for partition in partitions(a) {
            // partition is decreasing; pad so the largest parts align with
            // the largest invariant factors
            for list in &lists {
                let len = list.len().max(partition.len());
                let mut merged = vec![1usize; len];
                for (i, &x) in list.iter().rev().enumerate() {
                    merged[len - 1 - i] *= x;
                }
                for (i, &e) in partition.iter().enumerate() {
                    merged[len - 1 - i] *= (p as usize).pow(e);
                }
                next.push(merged);
            }
        }
        lists = next;
    }
    lists.sort_by_key(|l| (l.len(), l.clone()));
    Ok(lists)
}

fn partitions(a: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(a, a, &mut Vec::new(), &mut out);
    out
}

fn abelian_descriptor(factors: &[usize]) -> String {
    if factors.is_empty() {
        return "Z1".into();
    }
    factors
        .iter()
        .map(|d| format!("Z{d}"))
        .collect::<Vec<_>>()
        .join("x")
}

fn abelian_entries(n: usize) -> Result<Vec<CatalogEntry>> {
    abelian_invariant_factors(n)?
        .into_iter()
        .map(|fs| {
            let group = if fs.len() <= 1 {
                FiniteGroup::cyclic(n)?
            } else {
                FiniteGroup::abelian(&fs)?
            };
            Ok(entry(abelian_descriptor(&fs), group))
        })
        .collect()
}

/// Named nonabelian groups of order exactly `n` (no direct products).
fn nonabelian_named(n: usize) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    if n.is_multiple_of(2) && n / 2 >= 3 {
        out.push(entry(format!("D{}", n / 2), FiniteGroup::dihedral(n / 2)?));
    }
    if n.is_multiple_of(4) && n / 4 >= 2 {
        let name = if n == 8 { "Q8".to_string() } else { format!("Dic{}", n / 4) };
        out.push(entry(name, FiniteGroup::dicyclic(n / 4)?));
    }
    for k in [4, 5] {
        let alt = (1..=k).product::<usize>() / 2;
        if n == alt {
            out.push(entry(format!("A{k}"), FiniteGroup::alternating(k)?));
        }
        if n == 2 * alt {
            out.push(entry(format!("S{k}"), FiniteGroup::symmetric(k)?));
        }
    }
    let f = factorize(n as u64)?;
    if let [(p, alpha)] = f.factors() {
        if *p >= 3 && *alpha >= 3 {
            out.push(entry(format!("M{n}"), FiniteGroup::modular_group(*p as usize, *alpha)?));
        }
    }
    out.extend(twisted_semidirect(n)?);
    Ok(out)
}

/// The cyclic subgroup of units generated by `r` modulo `m`.
fn unit_subgroup(r: u64, m: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut x = 1 % m;
    loop {
        if !out.insert(x) {
            return out;
        }
        x = x * r % m;
    }
}

/// Nontrivial `Z_m ⋊ Z_k` of order `n`, one per (m, k, <r>) and skipping
/// the parameters that reproduce a dihedral, dicyclic or modular group.
fn twisted_semidirect(n: usize) -> Result<Vec<CatalogEntry>> {
    let n64 = n as u64;
    let mut out = Vec::new();
    for m in 2..n64 {
        if !n64.is_multiple_of(m) {
            continue;
        }
        let k = n64 / m;
        if k < 2 {
            continue;
        }
        let mut seen = BTreeSet::new();
        if k == 2 {
            seen.insert(unit_subgroup(m - 1, m));
        }
        if k == 4 && m % 2 == 1 {
            seen.insert(unit_subgroup(m - 1, m));
        }
        if let [(p, alpha)] = factorize(n64)?.factors() {
            if *p >= 3 && *alpha >= 3 && k == *p {
                let spec = modular_spec(*p, *alpha)?;
                seen.insert(unit_subgroup(spec.r(), m));
            }
        }
        for r in 2..m {
            if num_integer::gcd(r, m) != 1 || pow_mod(r, k, m) != 1 {
                continue;
            }
            if !seen.insert(unit_subgroup(r, m)) {
                continue;
            }
            let spec = SemidirectSpec::new(m, k, r)?;
            out.push(entry(
                format!("Z{m}:Z{k}(r={r})"),
                FiniteGroup::semidirect_cyclic(&spec)?,
            ));
        }
    }
    Ok(out)
}

/// The family catalog for order `n`.
pub fn families(n: usize) -> Result<Vec<CatalogEntry>> {
    let mut out = abelian_entries(n)?;
    out.extend(nonabelian_named(n)?);
    // nonabelian groups of a proper divisor order times each abelian cofactor
    for h in 6..n {
        if !n.is_multiple_of(h) {
            continue;
        }
        let named: Vec<CatalogEntry> = nonabelian_named(h)?
            .into_iter()
            .filter(|e| !e.descriptor.contains(':'))
            .collect();
        if named.is_empty() {
            continue;
        }
        for (fs, ab) in abelian_invariant_factors(n / h)?.into_iter().zip(abelian_entries(n / h)?) {
            for base in &named {
                out.push(entry(
                    format!("{}x{}", base.descriptor, abelian_descriptor(&fs)),
                    FiniteGroup::direct_product(&base.group, &ab.group)?,
                ));
            }
        }
    }
    let mut seen = BTreeSet::new();
    out.retain(|e| seen.insert(e.descriptor.clone()));
    Ok(out)
}

/// Every isomorphism class of order `n <= 15`.
pub fn complete(n: usize) -> Result<Vec<CatalogEntry>> {
    if n > COMPLETE_MAX_ORDER {
        return Err(Error::Catalog(format!(
            "complete catalogs are built in only for orders up to {COMPLETE_MAX_ORDER}, got {n}"
        )));
    }
    let mut out = abelian_entries(n)?;
    match n {
        6 | 10 | 14 => out.push(entry(format!("D{}", n / 2), FiniteGroup::dihedral(n / 2)?)),
        8 => {
            out.push(entry("D4".into(), FiniteGroup::dihedral(4)?));
            out.push(entry("Q8".into(), FiniteGroup::dicyclic(2)?));
        }
        12 => {
            out.push(entry("D6".into(), FiniteGroup::dihedral(6)?));
            out.push(entry("A4".into(), FiniteGroup::alternating(4)?));
            out.push(entry("Dic3".into(), FiniteGroup::dicyclic(3)?));
        }
        _ => {}
    }
    Ok(out)
}
