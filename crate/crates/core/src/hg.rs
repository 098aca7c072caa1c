//! Hopf–Galois structures on an extension with Galois group `(G, ∘)`.
//!
//! A structure is identified with an operation `·` on the labels of `G` such
//! that `(G, ·, ∘)` is a skew brace. Its sub-Hopf algebras correspond to the
//! left ideals, so the correspondence is surjective exactly when every
//! subgroup of `(G, ∘)` is a left ideal.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_rational::Ratio;
use rayon::prelude::*;

use crate::brace::SkewBrace;
use crate::catalog::{self, CatalogEntry};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupMap, SubgroupSet};
use crate::perm::{self, RegularSubgroup};

/// Bounds for the exhaustive enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    pub max_order: usize,
    /// Admit elementary abelian groups of order 16 and 27.
    pub enable_heavy: bool,
    pub oracle_bound: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            max_order: 27,
            enable_heavy: false,
            oracle_bound: perm::DEFAULT_ORACLE_BOUND,
        }
    }
}

fn is_heavy(g: &FiniteGroup) -> bool {
    matches!(g.order(), 16 | 27) && g.is_abelian() && g.exponent() < 4
}

/// Errors unless `g` may be fed to the exhaustive enumerations.
pub fn check_bounds(g: &FiniteGroup, cfg: &EnumConfig) -> Result<()> {
    let n = g.order();
    if n > cfg.max_order {
        return Err(Error::OrderTooLarge {
            order: n,
            reason: format!("bound is {}", cfg.max_order),
        });
    }
    if is_heavy(g) && !cfg.enable_heavy {
        return Err(Error::OrderTooLarge {
            order: n,
            reason: "elementary abelian holomorph requires heavy orders to be enabled".into(),
        });
    }
    if !catalog::is_complete(n) {
        return Err(Error::CatalogIncompleteForOrder(n));
    }
    Ok(())
}

/// Operations in one isomorphism class of braces with a fixed circle group.
#[derive(Debug, Clone)]
pub struct BraceClass {
    /// Catalog name of the type `(G, ·)`.
    pub type_name: String,
    pub representative: SkewBrace,
    /// The `Aut(G,∘)`-orbit of the representative's operation, sorted.
    pub orbit: Vec<FiniteGroup>,
    pub automorphism_count: usize,
}

/// All operations `·` with `(G, ·, circ)` a skew brace, grouped into brace
/// isomorphism classes.
///
/// For each catalog type `N`, regular subgroups of `Hol(N)` isomorphic to
/// `circ` (at least one per `Aut(N)`-conjugacy class, hence per brace class)
/// are pulled back to the labels of `circ`; each new class is expanded
/// to its orbit under `Aut(circ)`, whose size is checked against
/// `|Aut(circ)| / |Aut(brace)|`. Classes are sorted by their least operation
/// table.
pub fn enumerate_classes(circ: &FiniteGroup, cfg: &EnumConfig) -> Result<Vec<BraceClass>> {
    check_bounds(circ, cfg)?;
    let entries = catalog::catalog(circ.order())?;
    let pulled: Vec<(String, Vec<FiniteGroup>)> = entries
        .par_iter()
        .map(|e| -> Result<(String, Vec<FiniteGroup>)> {
            let mut dots = Vec::new();
            for (_, iso) in perm::regular_subgroup_reps_of_type(&e.group, circ) {
                // iso: circ → (N, ∘_R); transport (N, ·) back along its inverse.
                dots.push(e.group.relabel(&iso.inverse())?);
            }
            Ok((e.name.clone(), dots))
        })
        .collect::<Result<_>>()?;

    let autos = circ.automorphisms();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut classes = Vec::new();
    for (type_name, dots) in pulled {
        for dot in dots {
            if seen.contains(dot.flat_table()) {
                continue;
            }
            let brace = SkewBrace::new(dot, circ.clone())?;
            let mut orbit: BTreeMap<Vec<u8>, FiniteGroup> = BTreeMap::new();
            for phi in autos {
                let moved = brace.transport_dot(phi)?;
                orbit.entry(moved.flat_table().to_vec()).or_insert(moved);
            }
            let automorphism_count = brace.automorphisms_within(autos).len();
            if orbit.len() * automorphism_count != autos.len() {
                return Err(Error::InternalInconsistency(format!(
                    "orbit of size {} with {} brace automorphisms under |Aut| = {}",
                    orbit.len(),
                    automorphism_count,
                    autos.len()
                )));
            }
            seen.extend(orbit.keys().cloned());
            let orbit: Vec<FiniteGroup> = orbit.into_values().collect();
            let representative = SkewBrace::new(orbit[0].clone(), circ.clone())?;
            classes.push(BraceClass {
                type_name: type_name.clone(),
                automorphism_count: representative.automorphisms_within(autos).len(),
                representative,
                orbit,
            });
        }
    }
    classes.sort_by(|a, b| a.orbit[0].flat_table().cmp(b.orbit[0].flat_table()));
    Ok(classes)
}

/// Every operation `·` making `(G, ·, circ)` a skew brace, sorted by table.
pub fn enumerate_operations(circ: &FiniteGroup, cfg: &EnumConfig) -> Result<Vec<SkewBrace>> {
    let classes = enumerate_classes(circ, cfg)?;
    let mut out: Vec<SkewBrace> = classes
        .into_iter()
        .flat_map(|c| c.orbit)
        .map(|dot| SkewBrace::new(dot, circ.clone()))
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| a.dot().flat_table().cmp(b.dot().flat_table()));
    Ok(out)
}

/// Per-structure analysis record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HgsReport {
    pub operation: FiniteGroup,
    pub type_name: String,
    pub is_bi_skew: bool,
    /// Subgroups of `(G, ∘)` whose fixed fields lie in the image: the left
    /// ideals.
    pub image: Vec<SubgroupSet>,
    pub is_surjective: bool,
    pub gc_ratio: Ratio<u64>,
    pub grouplikes: SubgroupSet,
    pub iso_class_id: usize,
    pub orbit_size: usize,
}

/// Name of the isomorphism type of `g`, or `unknown-order-n-#hash` when the
/// catalog does not cover it.
pub fn type_name(g: &FiniteGroup) -> String {
    catalog::identify(g).unwrap_or_else(|| format!("unknown-order-{}-#{:016x}", g.order(), table_hash(g)))
}

/// FNV-1a over the flat table.
pub fn table_hash(g: &FiniteGroup) -> u64 {
    g.flat_table().iter().fold(0xcbf2_9ce4_8422_2325u64, |h, &b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

fn report_with(b: &SkewBrace, type_name: String, iso_class_id: usize, orbit_size: usize) -> HgsReport {
    let image = b.left_ideals();
    let subgroups = b.circ().subgroups();
    debug_assert!(image.iter().all(|s| subgroups.binary_search(s).is_ok()));
    let is_surjective = image.len() == subgroups.len();
    HgsReport {
        operation: b.dot().clone(),
        type_name,
        is_bi_skew: b.is_bi_skew(),
        gc_ratio: Ratio::new(image.len() as u64, subgroups.len() as u64),
        is_surjective,
        image,
        grouplikes: b.fix(),
        iso_class_id,
        orbit_size,
    }
}

/// Analysis of a single structure; `iso_class_id` is 0 outside an
/// enumeration.
pub fn analyze(b: &SkewBrace) -> HgsReport {
    let orbit = b.circ().automorphisms().len() / b.automorphism_count();
    report_with(b, type_name(b.dot()), 0, orbit)
}

/// Reports for every structure on `circ`, sorted by operation table.
pub fn enumerate_reports(circ: &FiniteGroup, cfg: &EnumConfig) -> Result<Vec<HgsReport>> {
    let classes = enumerate_classes(circ, cfg)?;
    let mut jobs = Vec::new();
    for (id, c) in classes.iter().enumerate() {
        for dot in &c.orbit {
            jobs.push((id, c, dot));
        }
    }
    let mut reports: Vec<HgsReport> = jobs
        .par_iter()
        .map(|&(id, c, dot)| {
            let b = SkewBrace::new(dot.clone(), circ.clone())?;
            Ok(report_with(&b, c.type_name.clone(), id, c.orbit.len()))
        })
        .collect::<Result<_>>()?;
    reports.sort_by(|a, b| a.operation.flat_table().cmp(b.operation.flat_table()));
    Ok(reports)
}

/// Correspondence ratios of a bi-skew brace and of its swap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSkewPairReport {
    pub ratio_fwd: Ratio<u64>,
    pub ratio_swapped: Ratio<u64>,
    pub quotient: Ratio<u64>,
    pub left_ideal_count: usize,
    /// Subgroup counts of `(G, ·)` and `(G, ∘)`.
    pub subgroup_counts: (usize, usize),
}

pub fn biskew_pair_report(b: &SkewBrace) -> Result<BiSkewPairReport> {
    if !b.is_bi_skew() {
        return Err(Error::NotBiSkew);
    }
    let swapped = b.swap()?;
    let fwd = b.left_ideals();
    let back = swapped.left_ideals();
    if fwd != back {
        return Err(Error::InternalInconsistency(
            "left ideals of a bi-skew brace and its swap differ".into(),
        ));
    }
    let (sd, sc) = (b.dot().subgroups().len() as u64, b.circ().subgroups().len() as u64);
    let ratio_fwd = Ratio::new(fwd.len() as u64, sc);
    let ratio_swapped = Ratio::new(back.len() as u64, sd);
    let quotient = ratio_fwd / ratio_swapped;
    if quotient != Ratio::new(sd, sc) {
        return Err(Error::InternalInconsistency("ratio quotient differs from subgroup-count quotient".into()));
    }
    Ok(BiSkewPairReport {
        ratio_fwd,
        ratio_swapped,
        quotient,
        left_ideal_count: fwd.len(),
        subgroup_counts: (sd as usize, sc as usize),
    })
}

/// Number of structures on `circ` of type `n`.
pub fn e_count(circ: &FiniteGroup, n: &FiniteGroup, cfg: &EnumConfig) -> Result<usize> {
    Ok(enumerate_classes(circ, cfg)?
        .iter()
        .filter(|c| c.representative.dot().is_isomorphic(n))
        .map(|c| c.orbit.len())
        .sum())
}

/// Number of operations `∘` on `n` with `(N, ·, ∘)` a brace and `(N, ∘) ≅
/// circ`, counted as regular subgroups of `Hol(N)`.
pub fn f_count(circ: &FiniteGroup, n: &FiniteGroup, cfg: &EnumConfig) -> Result<usize> {
    check_bounds(n, cfg)?;
    if circ.order() != n.order() {
        return Ok(0);
    }
    Ok(perm::regular_subgroups_in_holomorph(n)
        .iter()
        .filter(|r| perm::transport_operation(r).map(|g| g.is_isomorphic(circ)).unwrap_or(false))
        .count())
}

/// Whether `e(G,N)·|Aut(N)| = f(G,N)·|Aut(G)|`.
pub fn byott_check(circ: &FiniteGroup, n: &FiniteGroup, cfg: &EnumConfig) -> Result<bool> {
    let e = e_count(circ, n, cfg)?;
    let f = f_count(circ, n, cfg)?;
    Ok(e * n.automorphisms().len() == f * circ.automorphisms().len())
}

/// One `(G, N)` pair of a Byott census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ByottRow {
    pub circ: String,
    pub dot: String,
    pub e: usize,
    pub f: usize,
    pub aut_circ: usize,
    pub aut_dot: usize,
}

impl ByottRow {
    pub fn holds(&self) -> bool {
        self.e * self.aut_dot == self.f * self.aut_circ
    }
}

/// `e` and `f` for every pair of catalog groups of the given order, each
/// enumeration and each holomorph search run once.
pub fn byott_census(order: usize, cfg: &EnumConfig) -> Result<Vec<ByottRow>> {
    let entries: Vec<CatalogEntry> = catalog::catalog(order)?;
    for e in &entries {
        check_bounds(&e.group, cfg)?;
    }
    let classes: Vec<Vec<BraceClass>> = entries
        .par_iter()
        .map(|e| enumerate_classes(&e.group, cfg))
        .collect::<Result<_>>()?;
    let transported: Vec<Vec<FiniteGroup>> = entries
        .par_iter()
        .map(|e| {
            perm::regular_subgroups_in_holomorph(&e.group)
                .iter()
                .map(perm::transport_operation)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for (gi, g) in entries.iter().enumerate() {
        for (ni, n) in entries.iter().enumerate() {
            let e = classes[gi]
                .iter()
                .filter(|c| c.representative.dot().is_isomorphic(&n.group))
                .map(|c| c.orbit.len())
                .sum();
            let f = transported[ni].iter().filter(|t| t.is_isomorphic(&g.group)).count();
            rows.push(ByottRow {
                circ: g.name.clone(),
                dot: n.name.clone(),
                e,
                f,
                aut_circ: g.group.automorphisms().len(),
                aut_dot: n.group.automorphisms().len(),
            });
        }
    }
    Ok(rows)
}

/// Whether every structure on `circ` has a surjective correspondence.
pub fn all_surjective(circ: &FiniteGroup, cfg: &EnumConfig) -> Result<bool> {
    let subgroup_count = circ.subgroups().len();
    Ok(enumerate_operations(circ, cfg)?
        .par_iter()
        .all(|b| b.left_ideals().len() == subgroup_count))
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `circ` is cyclic and no prime divisor `p` of its order divides `q − 1`
/// for a prime divisor `q`.
pub fn childs_criterion(circ: &FiniteGroup) -> bool {
    let primes = prime_divisors(circ.order());
    circ.is_cyclic()
        && primes
            .iter()
            .all(|&p| primes.iter().all(|&q| (q - 1) % p != 0))
}

/// Least `m` such that `n` has more characteristic subgroups of order `m`
/// than `circ` has subgroups of order `m`.
///
/// When a witness exists and enumeration is within bounds, the absence of
/// structures of type `n` is checked.
pub fn kohl_obstruction(circ: &FiniteGroup, n: &FiniteGroup, cfg: &EnumConfig) -> Result<Option<usize>> {
    if circ.order() != n.order() {
        return Err(Error::BadParameters("groups of different orders".into()));
    }
    let order = circ.order();
    let chars = n.distinguished_subgroups().characteristic;
    let witness = (1..=order).filter(|m| order % m == 0).find(|&m| {
        let c = chars.iter().filter(|s| s.len() == m).count();
        let s = circ.subgroups().iter().filter(|s| s.len() == m).count();
        c > s
    });
    if witness.is_some() && check_bounds(circ, cfg).is_ok() {
        let e = e_count(circ, n, cfg)?;
        if e != 0 {
            return Err(Error::InternalInconsistency(format!(
                "obstruction at order {} but {e} structures exist",
                witness.unwrap_or_default()
            )));
        }
    }
    Ok(witness)
}

/// For a bi-skew brace, surjectivity (all subgroups of `(G,∘)` are left
/// ideals) against "every `γ(σ)` is a power automorphism of `(G,∘)`".
pub fn surjective_iff_power_auto(b: &SkewBrace) -> Result<bool> {
    if !b.is_bi_skew() {
        return Err(Error::NotBiSkew);
    }
    let surjective = b.left_ideals().len() == b.circ().subgroups().len();
    let mut power = true;
    for m in b.gamma().maps() {
        if !b.circ().is_power_automorphism(m)? {
            power = false;
            break;
        }
    }
    if surjective != power {
        return Err(Error::InternalInconsistency(format!(
            "surjective = {surjective} but all-power-automorphisms = {power}"
        )));
    }
    Ok(surjective)
}

/// Operations from the `Perm(G)` oracle: regular subgroups normalized by
/// `λ(G)`, each mapped to `a · b = ν(ν⁻¹(b)ν⁻¹(a))`. Sorted by table.
pub fn oracle_operations(circ: &FiniteGroup, bound: usize) -> Result<Vec<FiniteGroup>> {
    let regs: Vec<RegularSubgroup> = perm::regular_subgroups_normalized_by(circ, bound)?;
    let mut set: BTreeMap<Vec<u8>, FiniteGroup> = BTreeMap::new();
    for r in &regs {
        let g = perm::operation_from_regular_subgroup(r, circ)?;
        set.insert(g.flat_table().to_vec(), g);
    }
    if set.len() != regs.len() {
        return Err(Error::InternalInconsistency("oracle map is not injective".into()));
    }
    Ok(set.into_values().collect())
}

/// Whether the enumeration and the `Perm(G)` oracle agree table for table.
pub fn bijection_check(circ: &FiniteGroup, cfg: &EnumConfig) -> Result<bool> {
    let via_hol: BTreeSet<Vec<u8>> = enumerate_operations(circ, cfg)?
        .iter()
        .map(|b| b.dot().flat_table().to_vec())
        .collect();
    let via_oracle: BTreeSet<Vec<u8>> = oracle_operations(circ, cfg.oracle_bound)?
        .iter()
        .map(|g| g.flat_table().to_vec())
        .collect();
    Ok(via_hol == via_oracle)
}

/// Identity map helper for callers building actions.
pub fn identity_action(n: usize, m: usize) -> Vec<GroupMap> {
    vec![GroupMap::identity(n); m]
}
