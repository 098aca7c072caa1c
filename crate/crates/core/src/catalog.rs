//! Built-in catalog of small groups.
//!
//! Every order in [`COMPLETE_ORDERS`] lists all isomorphism types; order 16
//! is a partial list available only with heavy orders enabled.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::group::{gcd, FiniteGroup, GroupMap};

/// Orders whose catalog lists every isomorphism type, with the number of
/// types.
pub const COMPLETE_ORDERS: &[(usize, usize)] = &[
    (1, 1),
    (2, 1),
    (3, 1),
    (4, 2),
    (5, 1),
    (6, 2),
    (7, 1),
    (8, 5),
    (9, 2),
    (10, 2),
    (11, 1),
    (12, 5),
    (13, 1),
    (14, 2),
    (15, 1),
    (27, 5),
];

const BY_ORDER: &[(usize, &[&str])] = &[
    (1, &["C1"]),
    (2, &["C2"]),
    (3, &["C3"]),
    (4, &["C4", "C2^2"]),
    (5, &["C5"]),
    (6, &["C6", "D3"]),
    (7, &["C7"]),
    (8, &["C8", "C4xC2", "C2^3", "D4", "Q8"]),
    (9, &["C9", "C3^2"]),
    (10, &["C10", "D5"]),
    (11, &["C11"]),
    (12, &["C12", "C6xC2", "A4", "D6", "Dic3"]),
    (13, &["C13"]),
    (14, &["C14", "D7"]),
    (15, &["C15"]),
    (16, &["C16", "C4^2", "C8xC2", "C4xC2^2", "C2^4", "D8", "Q16"]),
    (27, &["C27", "C9xC3", "C3^3", "Heisenberg-27", "C9:C3"]),
];

/// A named catalog group.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub group: Arc<FiniteGroup>,
}

impl CatalogEntry {
    pub fn order(&self) -> usize {
        self.group.order()
    }
}

/// Whether `order` is listed with every isomorphism type.
pub fn is_complete(order: usize) -> bool {
    COMPLETE_ORDERS.iter().any(|&(n, _)| n == order)
}

pub fn expected_count(order: usize) -> Option<usize> {
    COMPLETE_ORDERS.iter().find(|&&(n, _)| n == order).map(|&(_, c)| c)
}

/// Orders for which [`catalog`] answers.
pub fn supported_orders(enable_heavy: bool) -> Vec<usize> {
    BY_ORDER
        .iter()
        .map(|&(n, _)| n)
        .filter(|&n| enable_heavy || is_complete(n))
        .collect()
}

/// All catalog groups of the given order.
pub fn catalog(order: usize) -> Result<Vec<CatalogEntry>> {
    catalog_with(order, false)
}

/// As [`catalog`], optionally admitting the partial order-16 list.
pub fn catalog_with(order: usize, enable_heavy: bool) -> Result<Vec<CatalogEntry>> {
    let names = BY_ORDER
        .iter()
        .find(|&&(n, _)| n == order)
        .map(|&(_, names)| names)
        .ok_or(Error::UnsupportedOrder(order))?;
    if !is_complete(order) && !enable_heavy {
        return Err(Error::UnsupportedOrder(order));
    }
    names
        .iter()
        .map(|&name| {
            Ok(CatalogEntry {
                name: name.to_string(),
                group: shared(name)?,
            })
        })
        .collect()
}

/// Catalog lookup by name, e.g. `"Q8"`, `"D5"`, `"C4xC2"`, `"C3^3"`,
/// `"Heisenberg-27"`.
pub fn by_name(name: &str) -> Result<FiniteGroup> {
    Ok((*shared(name)?).clone())
}

/// Shared, cached instance of a named group.
pub fn shared(name: &str) -> Result<Arc<FiniteGroup>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<FiniteGroup>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().expect("catalog cache").get(name) {
        return Ok(g.clone());
    }
    let g = Arc::new(build(name)?);
    cache
        .lock()
        .expect("catalog cache")
        .entry(name.to_string())
        .or_insert(g.clone());
    Ok(g)
}

/// Catalog name of the isomorphism type of `g`, if its order is covered.
pub fn identify(g: &FiniteGroup) -> Option<String> {
    let entries = catalog_with(g.order(), true).ok()?;
    entries
        .into_iter()
        .find(|e| e.group.is_isomorphic(g))
        .map(|e| e.name)
}

fn build(name: &str) -> Result<FiniteGroup> {
    let unknown = || Error::UnknownName(name.to_string());
    match name {
        "A4" => return alternating4(),
        "S3" => return symmetric(3),
        "S4" => return symmetric(4),
        "Nonabelian-27-exp9" => return metacyclic_p3(3),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("Heisenberg-") {
        let n: usize = rest.parse().map_err(|_| unknown())?;
        let p = cube_root_prime(n).filter(|&p| p > 2).ok_or_else(unknown)?;
        return heisenberg(p);
    }
    if let Some((a, b)) = name.split_once(':') {
        // C_{p^2} ⋊ C_p acting by a ↦ a^{1+p}.
        let a = parse_cyclic(a).ok_or_else(unknown)?;
        let b = parse_cyclic(b).ok_or_else(unknown)?;
        if a == b * b && is_prime(b) && b > 2 {
            return metacyclic_p3(b);
        }
        return Err(unknown());
    }
    if name.contains('x') {
        let mut acc: Option<FiniteGroup> = None;
        for part in name.split('x') {
            let g = build(part)?;
            acc = Some(match acc {
                None => g,
                Some(a) => FiniteGroup::direct_product(&a, &g)?,
            });
        }
        return acc.ok_or_else(unknown);
    }
    if let Some((base, exp)) = name.split_once('^') {
        let k: usize = exp.parse().map_err(|_| unknown())?;
        if k == 0 {
            return Err(unknown());
        }
        let g = build(base)?;
        let mut acc = g.clone();
        for _ in 1..k {
            acc = FiniteGroup::direct_product(&acc, &g)?;
        }
        return Ok(acc);
    }
    if let Some(m) = name.strip_prefix("Dic") {
        let m: usize = m.parse().map_err(|_| unknown())?;
        return if m >= 1 { dicyclic(m) } else { Err(unknown()) };
    }
    if let Some(n) = parse_cyclic(name) {
        return cyclic(n);
    }
    let (head, num) = name.split_at(1);
    let k: usize = num.parse().map_err(|_| unknown())?;
    match head {
        "D" if k >= 1 => dihedral(k),
        "Q" if k >= 8 && k.is_power_of_two() => dicyclic(k / 4),
        "S" if (1..=5).contains(&k) => symmetric(k),
        _ => Err(unknown()),
    }
}

fn parse_cyclic(s: &str) -> Option<usize> {
    s.strip_prefix('C')?.parse().ok().filter(|&n| n >= 1)
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn cube_root_prime(n: usize) -> Option<usize> {
    (2..=n).take_while(|p| p * p * p <= n).find(|p| p * p * p == n && is_prime(*p))
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    FiniteGroup::from_fn(n, |a, b| (a + b) % n)
}

/// Dihedral group of order `2m`: `r^i s^j` stored at `2i + j`.
pub fn dihedral(m: usize) -> Result<FiniteGroup> {
    FiniteGroup::from_fn(2 * m, |x, y| {
        let (i, j) = (x / 2, x % 2);
        let (k, l) = (y / 2, y % 2);
        let r = if j == 0 { i + k } else { i + m - k };
        (r % m) * 2 + (j ^ l)
    })
}

/// Dicyclic group of order `4m`: `⟨a, x | a^{2m}, x² = a^m, x a x⁻¹ = a⁻¹⟩`,
/// with `a^i x^j` stored at `2i + j`. `m = 2^k` gives generalized quaternion.
pub fn dicyclic(m: usize) -> Result<FiniteGroup> {
    let n = 2 * m;
    FiniteGroup::from_fn(2 * n, |x, y| {
        let (i, j) = (x / 2, x % 2);
        let (k, l) = (y / 2, y % 2);
        if j == 0 {
            ((i + k) % n) * 2 + l
        } else if l == 0 {
            ((i + n - k) % n) * 2 + 1
        } else {
            ((i + n - k + m) % n) * 2
        }
    })
}

/// Symmetric group on `k` points, permutations in lexicographic order.
pub fn symmetric(k: usize) -> Result<FiniteGroup> {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut p: Vec<usize> = (0..k).collect();
    loop {
        perms.push(p.clone());
        // Next lexicographic permutation.
        let Some(i) = (1..k).rev().find(|&i| p[i - 1] < p[i]) else {
            break;
        };
        let j = (i..k).rev().find(|&j| p[j] > p[i - 1]).expect("successor");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    let index: HashMap<Vec<usize>, usize> =
        perms.iter().cloned().enumerate().map(|(i, q)| (q, i)).collect();
    FiniteGroup::from_fn(perms.len(), |a, b| {
        let c: Vec<usize> = (0..k).map(|x| perms[a][perms[b][x]]).collect();
        index[&c]
    })
}

/// `A ⋊ C_m` where the generator of `C_m` acts by `phi`.
pub fn cyclic_extension(a: &FiniteGroup, phi: &GroupMap, m: usize) -> Result<FiniteGroup> {
    let b = cyclic(m)?;
    let mut alpha = vec![GroupMap::identity(a.order())];
    for k in 1..m {
        alpha.push(phi.compose(&alpha[k - 1]));
    }
    FiniteGroup::semidirect_product(a, &b, &alpha)
}

fn alternating4() -> Result<FiniteGroup> {
    let v4 = FiniteGroup::direct_product(&cyclic(2)?, &cyclic(2)?)?;
    cyclic_extension(&v4, &GroupMap::new(vec![0, 2, 3, 1]), 3)
}

/// Nonabelian group of order `p³` and exponent `p` (odd `p`):
/// `(C_p × C_p) ⋊ C_p` with `(x, y) ↦ (x, x + y)`.
pub fn heisenberg(p: usize) -> Result<FiniteGroup> {
    let base = FiniteGroup::direct_product(&cyclic(p)?, &cyclic(p)?)?;
    let phi = GroupMap::new((0..p * p).map(|v| (v / p) * p + (v / p + v % p) % p).collect());
    cyclic_extension(&base, &phi, p)
}

/// Nonabelian group of order `p³` and exponent `p²`: `C_{p²} ⋊ C_p` with
/// `a ↦ a^{1+p}`.
pub fn metacyclic_p3(p: usize) -> Result<FiniteGroup> {
    let n = p * p;
    debug_assert_eq!(gcd(1 + p, n), 1);
    let phi = GroupMap::new((0..n).map(|a| a * (1 + p) % n).collect());
    cyclic_extension(&cyclic(n)?, &phi, p)
}
