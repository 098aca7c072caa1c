//! Permutations of group elements, the holomorph, and regular subgroups.
//!
//! Two enumerators live here. The holomorph route finds regular subgroups of
//! `Hol(N) = {τ ↦ a·φ(τ)}`, which parametrize the operations `∘` making
//! `(N, ·, ∘)` a skew brace. The oracle route searches the full symmetric
//! group for regular subgroups normalized by `λ(G)`, and is only run for
//! small orders.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupMap};
use crate::hom::{self, Target};

/// Default bound on `|G|` for [`regular_subgroups_normalized_by`].
pub const DEFAULT_ORACLE_BOUND: usize = 8;

/// A permutation of `0..n` stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Box<[u8]>);

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", &self.0)
    }
}

impl Perm {
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Malformed(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Perm(images.iter().map(|&x| x as u8).collect()))
    }

    pub fn identity(n: usize) -> Self {
        Perm((0..n).map(|x| x as u8).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (a, &b) in self.0.iter().enumerate() {
            inv[b as usize] = a as u8;
        }
        Perm(inv.into_boxed_slice())
    }

    /// `self ∘ p ∘ self⁻¹`.
    pub fn conjugate(&self, p: &Perm) -> Perm {
        self.compose(&p.compose(&self.inverse()))
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            out.push(len);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycle_lengths()
            .into_iter()
            .fold(1, crate::group::lcm)
    }

    /// All cycles have the same length, so every nontrivial power is
    /// fixed-point-free.
    pub fn is_semiregular(&self) -> bool {
        let lens = self.cycle_lengths();
        lens.iter().all(|&l| l == lens[0])
    }
}

/// Left regular representation `λ(σ)[τ] = στ`.
pub fn left_regular(g: &FiniteGroup, s: usize) -> Perm {
    Perm((0..g.order()).map(|t| g.mul(s, t) as u8).collect())
}

/// Right regular representation `ρ(σ)[τ] = τσ⁻¹`.
pub fn right_regular(g: &FiniteGroup, s: usize) -> Perm {
    let si = g.inv(s);
    Perm((0..g.order()).map(|t| g.mul(t, si) as u8).collect())
}

/// A regular permutation group, stored sorted by image array; since the
/// first image is distinct across elements, position `x` holds the unique
/// element sending `0` to `x`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegularSubgroup {
    elements: Vec<Perm>,
}

impl fmt::Debug for RegularSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.elements).finish()
    }
}

impl RegularSubgroup {
    /// Validates closure, inverses and regularity.
    pub fn new(elements: Vec<Perm>) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::NotRegular("empty".into()));
        }
        let mut by_point: Vec<Option<Perm>> = vec![None; n];
        for p in elements {
            if p.degree() != n {
                return Err(Error::NotRegular("degree differs from size".into()));
            }
            let slot = &mut by_point[p.apply(0)];
            if slot.is_some() {
                return Err(Error::NotRegular(format!("two elements send 0 to {}", p.apply(0))));
            }
            *slot = Some(p);
        }
        let elements: Vec<Perm> = by_point.into_iter().map(|p| p.expect("filled")).collect();
        let set: HashSet<&Perm> = elements.iter().collect();
        if !set.contains(&Perm::identity(n)) {
            return Err(Error::NotRegular("identity missing".into()));
        }
        for a in &elements {
            if !set.contains(&a.inverse()) {
                return Err(Error::NotRegular("not closed under inverses".into()));
            }
            for b in &elements {
                if !set.contains(&a.compose(b)) {
                    return Err(Error::NotRegular("not closed under composition".into()));
                }
            }
        }
        Ok(RegularSubgroup { elements })
    }

    fn from_by_point(by_point: Vec<Option<Perm>>) -> Self {
        RegularSubgroup {
            elements: by_point.into_iter().map(|p| p.expect("regular")).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements sorted by image array (equivalently by image of `0`).
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    /// The unique element `η` with `η[0] = x`.
    pub fn at(&self, x: usize) -> &Perm {
        &self.elements[x]
    }

    pub fn is_normalized_by(&self, perms: &[Perm]) -> bool {
        let set: HashSet<&Perm> = self.elements.iter().collect();
        perms
            .iter()
            .all(|c| self.elements.iter().all(|p| set.contains(&c.conjugate(p))))
    }

    /// `λ(G)` as a regular subgroup.
    pub fn left_regular(g: &FiniteGroup) -> Self {
        let mut els: Vec<Perm> = (0..g.order()).map(|s| left_regular(g, s)).collect();
        els.sort();
        RegularSubgroup { elements: els }
    }

    /// `ρ(G)` as a regular subgroup.
    pub fn right_regular(g: &FiniteGroup) -> Self {
        let mut els: Vec<Perm> = (0..g.order()).map(|s| right_regular(g, s)).collect();
        els.sort();
        RegularSubgroup { elements: els }
    }
}

/// The holomorph of `n` as the permutations `τ ↦ a·φ(τ)`, sorted by image
/// array.
pub fn holomorph(n: &FiniteGroup) -> Vec<Perm> {
    let autos = n.automorphisms();
    let mut out: Vec<Perm> = Vec::with_capacity(n.order() * autos.len());
    for a in 0..n.order() {
        for phi in autos {
            out.push(Perm((0..n.order()).map(|t| n.mul(a, phi.apply(t)) as u8).collect()));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The group `(N, ∘)` obtained by transporting the structure of `r` along
/// `η ↦ η[0]`: `a ∘ b = (η_a ∘ η_b)[0] = η_a[b]`.
pub fn transport_operation(r: &RegularSubgroup) -> Result<FiniteGroup> {
    FiniteGroup::from_fn(r.order(), |a, b| r.at(a).apply(b))
}

/// The operation attached to a regular subgroup normalized by `λ(G)`:
/// `a · b = ν(ν⁻¹(b) ∘ ν⁻¹(a))` with `ν(η) = η[0]`.
pub fn operation_from_regular_subgroup(r: &RegularSubgroup, g: &FiniteGroup) -> Result<FiniteGroup> {
    if r.order() != g.order() {
        return Err(Error::NotRegular("order differs from the group".into()));
    }
    let lambda: Vec<Perm> = g.generators().iter().map(|&s| left_regular(g, s)).collect();
    if !r.is_normalized_by(&lambda) {
        return Err(Error::NotNormalized);
    }
    FiniteGroup::from_fn(r.order(), |a, b| r.at(b).apply(a))
}

/// Grows partial semiregular groups one generator at a time.
struct RegularSearch<'a> {
    n: usize,
    /// Candidate generators indexed by the point they send `0` to.
    candidates: Vec<Vec<&'a Perm>>,
    /// Extra permutations the subgroup must be normalized by.
    normalizers: Vec<Perm>,
    seen: HashSet<Vec<Perm>>,
    found: BTreeSet<RegularSubgroup>,
}

impl<'a> RegularSearch<'a> {
    fn new(n: usize, pool: &'a [Perm], normalizers: Vec<Perm>) -> Self {
        let mut candidates = vec![Vec::new(); n];
        for p in pool {
            if p.apply(0) != 0 {
                candidates[p.apply(0)].push(p);
            }
        }
        RegularSearch {
            n,
            candidates,
            normalizers,
            seen: HashSet::new(),
            found: BTreeSet::new(),
        }
    }

    fn run(mut self) -> Vec<RegularSubgroup> {
        let mut start = vec![None; self.n];
        start[0] = Some(Perm::identity(self.n));
        self.grow(&start, &[]);
        self.found.into_iter().collect()
    }

    fn grow(&mut self, by_point: &[Option<Perm>], gens: &[Perm]) {
        let Some(g) = by_point.iter().position(|p| p.is_none()) else {
            self.found
                .insert(RegularSubgroup::from_by_point(by_point.to_vec()));
            return;
        };
        let candidates = std::mem::take(&mut self.candidates[g]);
        for c in &candidates {
            let mut next_gens = gens.to_vec();
            next_gens.push((*c).clone());
            let Some(closed) = close(by_point, &next_gens, &self.normalizers) else {
                continue;
            };
            let key: Vec<Perm> = closed.iter().flatten().cloned().collect();
            if !self.seen.insert(key) {
                continue;
            }
            self.grow(&closed, &next_gens);
        }
        self.candidates[g] = candidates;
    }
}

/// Closes `by_point ∪ gens` under composition and conjugation by
/// `normalizers`, failing when two elements send `0` to the same point.
fn close(
    by_point: &[Option<Perm>],
    gens: &[Perm],
    normalizers: &[Perm],
) -> Option<Vec<Option<Perm>>> {
    let mut out: Vec<Option<Perm>> = by_point.to_vec();
    let mut queue: Vec<Perm> = by_point.iter().flatten().cloned().collect();
    let insert = |p: Perm, out: &mut Vec<Option<Perm>>, queue: &mut Vec<Perm>| -> bool {
        match &out[p.apply(0)] {
            Some(q) => *q == p,
            None => {
                out[p.apply(0)] = Some(p.clone());
                queue.push(p);
                true
            }
        }
    };
    for g in gens {
        if !insert(g.clone(), &mut out, &mut queue) {
            return None;
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head].clone();
        head += 1;
        for g in gens {
            if !insert(x.compose(g), &mut out, &mut queue) {
                return None;
            }
        }
        for c in normalizers {
            if !insert(c.conjugate(&x), &mut out, &mut queue) {
                return None;
            }
        }
    }
    Some(out)
}

/// All regular subgroups of `Hol(N)`.
///
/// Backtracks by adding, for the least point not yet reached from `0`, each
/// holomorph element sending `0` there, closing, and pruning on collisions.
pub fn regular_subgroups_in_holomorph(n: &FiniteGroup) -> Vec<RegularSubgroup> {
    let hol = holomorph(n);
    RegularSearch::new(n.order(), &hol, Vec::new()).run()
}

/// Codomain for embeddings into a permutation group, keyed by the image of
/// `0` so that only regular images survive.
struct PermTarget {
    n: usize,
}

impl Target for PermTarget {
    type El = Perm;

    fn identity(&self) -> Perm {
        Perm::identity(self.n)
    }

    fn mul(&self, a: &Perm, b: &Perm) -> Perm {
        a.compose(b)
    }

    fn key(&self, a: &Perm) -> Option<usize> {
        Some(a.apply(0))
    }

    fn key_space(&self) -> usize {
        self.n
    }
}

/// Regular subgroups of `Hol(N)` isomorphic to `t`, each paired with the
/// isomorphism `t → (N, ∘_R)` given by `x ↦ h(x)[0]` for an embedding `h`.
///
/// Searches embeddings of `t` generator by generator rather than covering
/// points, so only the target's isomorphism type is explored.
pub fn regular_subgroups_of_type(
    n: &FiniteGroup,
    t: &FiniteGroup,
) -> Vec<(RegularSubgroup, GroupMap)> {
    if n.order() != t.order() {
        return Vec::new();
    }
    let hol = holomorph(n);
    regular_embeddings(n.order(), &hol, t, None)
}

/// Regular subgroups of `Hol(N)` isomorphic to `t`, at least one from each
/// conjugacy class under `Aut(N)`, paired as in [`regular_subgroups_of_type`].
///
/// The first generator of `t` is only sent to representatives of the
/// `Aut(N)`-conjugation orbits of candidate images.
pub fn regular_subgroup_reps_of_type(
    n: &FiniteGroup,
    t: &FiniteGroup,
) -> Vec<(RegularSubgroup, GroupMap)> {
    if n.order() != t.order() {
        return Vec::new();
    }
    let hol = holomorph(n);
    let autos: Vec<Perm> = n
        .automorphisms()
        .iter()
        .map(|phi| Perm(phi.images().iter().map(|&x| x as u8).collect()))
        .collect();
    regular_embeddings(n.order(), &hol, t, Some(&autos))
}

fn orbit_representatives(perms: Vec<Perm>, conjugators: &[Perm]) -> Vec<Perm> {
    let mut covered: HashSet<Perm> = HashSet::new();
    let mut reps = Vec::new();
    for p in perms {
        if covered.contains(&p) {
            continue;
        }
        for c in conjugators {
            covered.insert(c.conjugate(&p));
        }
        reps.push(p);
    }
    reps
}

fn regular_embeddings(
    degree: usize,
    hol: &[Perm],
    t: &FiniteGroup,
    first_up_to: Option<&[Perm]>,
) -> Vec<(RegularSubgroup, GroupMap)> {
    let orders: Vec<(usize, bool)> = hol.iter().map(|p| (p.order(), p.is_semiregular())).collect();
    let gens = t.generators();
    let mut candidates: Vec<Vec<Perm>> = gens
        .iter()
        .map(|&g| {
            hol.iter()
                .zip(&orders)
                .filter(|(_, &(o, semi))| semi && o == t.element_order(g))
                .map(|(p, _)| p.clone())
                .collect()
        })
        .collect();
    if let (Some(conjugators), Some(first)) = (first_up_to, candidates.first_mut()) {
        *first = orbit_representatives(std::mem::take(first), conjugators);
    }
    let target = PermTarget { n: degree };
    let mut found: BTreeMap<RegularSubgroup, GroupMap> = BTreeMap::new();
    hom::search(t, &gens, &candidates, &target, &mut |images| {
        let iso = GroupMap::new(images.iter().map(|p| p.apply(0)).collect());
        let mut by_point = vec![None; degree];
        for p in images {
            let x = p.apply(0);
            by_point[x] = Some(p);
        }
        found
            .entry(RegularSubgroup::from_by_point(by_point))
            .or_insert(iso);
        ControlFlow::Continue(())
    });
    found.into_iter().collect()
}

/// Every permutation of `0..n` in lexicographic order.
fn all_permutations(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut p: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Perm(p.clone().into_boxed_slice()));
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

/// Regular subgroups of `Sym(G)` normalized by `λ(G)`, for `|G| ≤ bound`.
///
/// Generators are drawn from the semiregular permutations; partial groups
/// are closed under composition and conjugation by `λ(G)`.
pub fn regular_subgroups_normalized_by(g: &FiniteGroup, bound: usize) -> Result<Vec<RegularSubgroup>> {
    let n = g.order();
    if n > bound {
        return Err(Error::OrderTooLargeForOracle { order: n, bound });
    }
    let pool: Vec<Perm> = all_permutations(n)
        .into_iter()
        .filter(|p| p.is_semiregular() && n % p.order() == 0)
        .collect();
    let lambda_gens: Vec<Perm> = g.generators().iter().map(|&s| left_regular(g, s)).collect();
    let found = RegularSearch::new(n, &pool, lambda_gens).run();
    let lambda_all: Vec<Perm> = (0..n).map(|s| left_regular(g, s)).collect();
    Ok(found
        .into_iter()
        .filter(|r| r.is_normalized_by(&lambda_all))
        .collect())
}
