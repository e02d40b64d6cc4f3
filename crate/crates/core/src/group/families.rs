use num_integer::Integer;

use super::{is_prime, FiniteGroup, MAX_ORDER};
use crate::error::{Error, Result};

/// Parameters of `Z_m ⋊ Z_k` where the generator of `Z_k` acts on `Z_m` by
/// `u -> u^r` (multiplication by `r` in additive notation).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemidirectSpec {
    m: u64,
    k: u64,
    r: u64,
}

impl SemidirectSpec {
    /// Requires `1 <= r < m`, `gcd(r, m) = 1` and `r^k = 1 (mod m)`.
    pub fn new(m: u64, k: u64, r: u64) -> Result<Self> {
        let invalid = |reason| Err(Error::InvalidSemidirect { m, k, r, reason });
        if m < 2 {
            return invalid("the normal factor must have order at least 2");
        }
        if k < 1 {
            return invalid("the acting factor must have order at least 1");
        }
        if r == 0 || r >= m {
            return invalid("r must lie in 1..m");
        }
        if r.gcd(&m) != 1 {
            return invalid("r must be a unit mod m");
        }
        if pow_mod(r, k, m) != 1 {
            return invalid("r^k must be 1 mod m");
        }
        Ok(SemidirectSpec { m, k, r })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn order(&self) -> u64 {
        self.m * self.k
    }

    pub fn is_coprime(&self) -> bool {
        self.m.gcd(&self.k) == 1
    }

    /// The same pair of factors with the trivial action.
    pub fn direct(&self) -> SemidirectSpec {
        SemidirectSpec {
            m: self.m,
            k: self.k,
            r: 1,
        }
    }

    /// Index of the pair `(u, v)` in the constructed group.
    pub fn index(&self, u: u64, v: u64) -> usize {
        ((u % self.m) * self.k + v % self.k) as usize
    }

    pub fn pair(&self, index: usize) -> (u64, u64) {
        let i = index as u64;
        (i / self.k, i % self.k)
    }

    /// `(u, v) * (u', v') = (u + r^v u', v + v')`.
    pub fn mul(&self, (u, v): (u64, u64), (u2, v2): (u64, u64)) -> (u64, u64) {
        let twist = pow_mod(self.r, v, self.m);
        ((u + twist * u2) % self.m, (v + v2) % self.k)
    }

    /// Every valid spec with `m k <= max_order`, ordered by `(m, k, r)`.
    pub fn all_up_to(max_order: u64) -> Vec<SemidirectSpec> {
        let mut out = Vec::new();
        for m in 2..=max_order {
            for k in 1..=max_order / m {
                for r in 1..m {
                    if let Ok(spec) = SemidirectSpec::new(m, k, r) {
                        out.push(spec);
                    }
                }
            }
        }
        out
    }
}

pub(crate) fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

fn check_cap(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        Err(Error::TooLarge {
            order,
            cap: MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

fn checked_order(parts: &[usize]) -> Result<usize> {
    let order = parts
        .iter()
        .try_fold(1usize, |acc, &p| acc.checked_mul(p))
        .ok_or(Error::TooLarge {
            order: usize::MAX,
            cap: MAX_ORDER,
        })?;
    check_cap(order)?;
    Ok(order)
}

impl FiniteGroup {
    /// `Z_n`, with element `i` the residue `i`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("cyclic group order must be positive".into()));
        }
        check_cap(n)?;
        FiniteGroup::from_fn(n, None, |a, b| (a + b) % n)
    }

    /// Direct product of cyclic groups of the given orders; `[]` gives the
    /// trivial group.
    pub fn abelian(orders: &[usize]) -> Result<Self> {
        if orders.contains(&0) {
            return Err(Error::InvalidParameter("cyclic factor order must be positive".into()));
        }
        checked_order(orders)?;
        orders
            .iter()
            .try_fold(FiniteGroup::cyclic(1)?, |acc, &n| {
                FiniteGroup::direct_product(&acc, &FiniteGroup::cyclic(n)?)
            })
    }

    /// `U x V`, with `(u, v)` at index `u |V| + v`.
    pub fn direct_product(u: &FiniteGroup, v: &FiniteGroup) -> Result<Self> {
        let nv = v.order();
        let order = checked_order(&[u.order(), nv])?;
        FiniteGroup::from_fn(order, None, |a, b| {
            u.mul(a / nv, b / nv) * nv + v.mul(a % nv, b % nv)
        })
    }

    /// Dihedral group of order `2n`: rotations `r^i` at `i`, reflections
    /// `r^i s` at `n + i`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("dihedral(n) needs n >= 3, got {n}")));
        }
        let order = checked_order(&[2, n])?;
        let labels = (0..order)
            .map(|x| match (x % n, x / n) {
                (0, 0) => "e".to_string(),
                (i, 0) => format!("r{i}"),
                (0, _) => "s".to_string(),
                (i, _) => format!("r{i}s"),
            })
            .collect();
        // s r = r^-1 s
        FiniteGroup::from_fn(order, Some(labels), |a, b| {
            let (i, j) = (a % n, a / n);
            let (k, l) = (b % n, b / n);
            let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
            ((j + l) % 2) * n + rot
        })
    }

    /// Dicyclic group of order `4m`: `<a, x | a^2m = 1, x^2 = a^m, x^-1 a x = a^-1>`.
    /// `dicyclic(2)` is the quaternion group.
    pub fn dicyclic(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParameter(format!("dicyclic(m) needs m >= 2, got {m}")));
        }
        let order = checked_order(&[4, m])?;
        let h = 2 * m;
        let labels = (0..order)
            .map(|x| match (x % h, x / h) {
                (0, 0) => "e".to_string(),
                (i, 0) => format!("a{i}"),
                (0, _) => "x".to_string(),
                (i, _) => format!("a{i}x"),
            })
            .collect();
        FiniteGroup::from_fn(order, Some(labels), |a, b| {
            let (i, j) = (a % h, a / h);
            let (k, l) = (b % h, b / h);
            match (j, l) {
                (0, 0) => (i + k) % h,
                (0, _) => h + (i + k) % h,
                (_, 0) => h + (i + h - k) % h,
                _ => (i + h - k + m) % h,
            }
        })
    }

    /// Symmetric group on `k <= 5` points; product is composition with the
    /// right factor applied first.
    pub fn symmetric(k: usize) -> Result<Self> {
        Self::permutation_group(k, false)
    }

    /// Alternating group on `k <= 5` points.
    pub fn alternating(k: usize) -> Result<Self> {
        Self::permutation_group(k, true)
    }

    fn permutation_group(k: usize, even_only: bool) -> Result<Self> {
        if !(1..=5).contains(&k) {
            return Err(Error::InvalidParameter(format!(
                "permutation groups are available on 1..=5 points, got {k}"
            )));
        }
        let perms: Vec<Vec<usize>> = permutations(k)
            .into_iter()
            .filter(|p| !even_only || is_even(p))
            .collect();
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed set");
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        FiniteGroup::from_fn(perms.len(), Some(labels), |a, b| {
            let composed: Vec<usize> = (0..k).map(|x| perms[a][perms[b][x]]).collect();
            index(&composed)
        })
    }

    /// `Z_m ⋊ Z_k` with `(u, v)` at index `u k + v`.
    pub fn semidirect_cyclic(spec: &SemidirectSpec) -> Result<Self> {
        let order = usize::try_from(spec.order()).map_err(|_| Error::TooLarge {
            order: usize::MAX,
            cap: MAX_ORDER,
        })?;
        check_cap(order)?;
        let labels = (0..order)
            .map(|x| {
                let (u, v) = spec.pair(x);
                format!("({u},{v})")
            })
            .collect();
        FiniteGroup::from_fn(order, Some(labels), |a, b| {
            let (u, v) = spec.mul(spec.pair(a), spec.pair(b));
            spec.index(u, v)
        })
    }

    /// The nonabelian group `M_{p^a} = Z_{p^(a-1)} ⋊ Z_p` with
    /// `b^-1 a b = a^(1 + p^(a-2))`, for an odd prime `p` and `a >= 3`.
    pub fn modular_group(p: usize, alpha: u32) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::InvalidParameter(format!("modular_group needs an odd prime, got {p}")));
        }
        if alpha < 3 {
            return Err(Error::InvalidParameter(format!("modular_group needs alpha >= 3, got {alpha}")));
        }
        let order = p
            .checked_pow(alpha)
            .ok_or(Error::TooLarge {
                order: usize::MAX,
                cap: MAX_ORDER,
            })?;
        check_cap(order)?;
        let spec = modular_spec(p as u64, alpha)?;
        FiniteGroup::semidirect_cyclic(&spec)
    }
}

/// The semidirect parameters realizing `M_{p^alpha}`.
pub(crate) fn modular_spec(p: u64, alpha: u32) -> Result<SemidirectSpec> {
    SemidirectSpec::new(p.pow(alpha - 1), p, 1 + p.pow(alpha - 2))
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    // lexicographic, so the identity comes first
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (1..k).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..k).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            first = false;
            out.push_str(&x.to_string());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn profile(pairs: &[(usize, usize)]) -> BTreeMap<usize, usize> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn dihedral_three_is_s3() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(d3.order(), 6);
        assert_eq!(d3.order_profile(), profile(&[(1, 1), (2, 3), (3, 2)]));
        assert_eq!(FiniteGroup::symmetric(3).unwrap().order_profile(), d3.order_profile());
    }

    #[test]
    fn quaternion_profile() {
        let q8 = FiniteGroup::dicyclic(2).unwrap();
        assert_eq!(q8.order_profile(), profile(&[(1, 1), (2, 1), (4, 6)]));
        assert!(!q8.is_abelian());
    }

    #[test]
    fn cyclic_generator() {
        for n in [1usize, 2, 9, 100] {
            let g = FiniteGroup::cyclic(n).unwrap();
            assert_eq!(g.element_order(1 % n), n);
        }
    }

    #[test]
    fn direct_products() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let z6 = FiniteGroup::direct_product(&z2, &z3).unwrap();
        assert_eq!(z6.order_profile(), FiniteGroup::cyclic(6).unwrap().order_profile());
        let klein = FiniteGroup::direct_product(&z2, &z2).unwrap();
        assert!(klein.is_elementary_abelian_2_group());
        let big = FiniteGroup::direct_product(&z6, &FiniteGroup::dihedral(5).unwrap()).unwrap();
        assert_eq!(big.order(), 60);
        assert!(FiniteGroup::direct_product(
            &FiniteGroup::cyclic(32).unwrap(),
            &FiniteGroup::cyclic(32).unwrap()
        )
        .is_err());
    }

    #[test]
    fn abelian_list() {
        assert_eq!(FiniteGroup::abelian(&[]).unwrap().order(), 1);
        let g = FiniteGroup::abelian(&[2, 2, 2]).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_elementary_abelian_2_group());
        assert!(FiniteGroup::abelian(&[2, 0]).is_err());
    }

    #[test]
    fn semidirect_examples() {
        let s3 = FiniteGroup::semidirect_cyclic(&SemidirectSpec::new(3, 2, 2).unwrap()).unwrap();
        assert_eq!(s3.order_profile(), FiniteGroup::symmetric(3).unwrap().order_profile());
        let direct = FiniteGroup::semidirect_cyclic(&SemidirectSpec::new(5, 4, 1).unwrap()).unwrap();
        assert!(direct.is_cyclic());
        assert!(matches!(
            SemidirectSpec::new(3, 3, 2),
            Err(Error::InvalidSemidirect { .. })
        ));
        assert!(SemidirectSpec::new(6, 2, 2).is_err());
        assert!(SemidirectSpec::new(1, 2, 0).is_err());
    }

    #[test]
    fn modular_group_27() {
        let m27 = FiniteGroup::modular_group(3, 3).unwrap();
        assert_eq!(m27.order(), 27);
        assert!(!m27.is_abelian());
        assert_eq!(m27.center().len(), 3);
        let spec = modular_spec(3, 3).unwrap();
        assert_eq!(pow_mod(spec.r(), 3, 9), 1);
        assert!(FiniteGroup::modular_group(2, 4).is_err());
        assert!(FiniteGroup::modular_group(3, 2).is_err());
        assert!(FiniteGroup::modular_group(5, 4).is_err());
    }

    #[test]
    fn modular_centers_have_order_p_to_alpha_minus_two() {
        for (p, a) in [(3usize, 3u32), (3, 4), (3, 5), (5, 3), (7, 3)] {
            let g = FiniteGroup::modular_group(p, a).unwrap();
            assert_eq!(g.center().len(), p.pow(a - 2), "p = {p}, alpha = {a}");
        }
    }

    #[test]
    fn permutation_groups() {
        assert_eq!(FiniteGroup::symmetric(4).unwrap().order(), 24);
        assert_eq!(FiniteGroup::symmetric(5).unwrap().order(), 120);
        let a4 = FiniteGroup::alternating(4).unwrap();
        assert_eq!(a4.order_profile(), profile(&[(1, 1), (2, 3), (3, 8)]));
        assert_eq!(FiniteGroup::alternating(5).unwrap().order(), 60);
        assert!(FiniteGroup::symmetric(6).is_err());
        assert_eq!(FiniteGroup::symmetric(3).unwrap().label(0), "()");
    }

    #[test]
    fn constructor_bounds() {
        assert!(FiniteGroup::dihedral(2).is_err());
        assert!(FiniteGroup::dicyclic(1).is_err());
        assert!(FiniteGroup::cyclic(0).is_err());
        assert!(FiniteGroup::cyclic(513).is_err());
        assert!(FiniteGroup::cyclic(512).is_ok());
    }

    #[test]
    fn enumerated_specs_are_valid() {
        let specs = SemidirectSpec::all_up_to(30);
        assert!(specs.iter().all(|s| s.order() <= 30));
        assert!(specs.contains(&SemidirectSpec::new(7, 3, 2).unwrap()));
        assert!(specs.contains(&SemidirectSpec::new(3, 2, 2).unwrap()));
    }
}
