//! Finite groups given by Cayley tables on `0..n` with identity `0`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;
use std::sync::OnceLock;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::hom::{self, TableTarget};

/// Largest supported group order (elements are stored as bytes).
pub const MAX_ORDER: usize = 255;

/// A validated finite group on the labels `0..n`, with `0` as identity.
pub struct FiniteGroup {
    n: usize,
    table: Vec<u8>,
    inverse: Vec<u8>,
    orders: Vec<usize>,
    subgroups: OnceLock<Vec<SubgroupSet>>,
    automorphisms: OnceLock<Vec<GroupMap>>,
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        FiniteGroup {
            n: self.n,
            table: self.table.clone(),
            inverse: self.inverse.clone(),
            orders: self.orders.clone(),
            subgroups: self.subgroups.clone(),
            automorphisms: self.automorphisms.clone(),
        }
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl std::hash::Hash for FiniteGroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.table.hash(state);
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.n)
            .field("table", &self.rows())
            .finish()
    }
}

/// A subgroup stored as its sorted element list plus a membership bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    elements: Vec<usize>,
    bits: Bits,
}

impl SubgroupSet {
    /// Builds the set from arbitrary elements; does not check closure.
    pub fn from_elements(elements: impl IntoIterator<Item = usize>) -> Self {
        let bits: Bits = elements.into_iter().collect();
        Self::from_bits(bits)
    }

    pub(crate) fn from_bits(bits: Bits) -> Self {
        SubgroupSet {
            elements: bits.iter().collect(),
            bits,
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < 256 && self.bits.contains(x)
    }

    pub fn is_subset(&self, other: &SubgroupSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn intersection(&self, other: &SubgroupSet) -> SubgroupSet {
        SubgroupSet::from_bits(self.bits.intersection(&other.bits))
    }
}

impl Ord for SubgroupSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.elements.cmp(&other.elements)
    }
}

impl PartialOrd for SubgroupSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.elements).finish()
    }
}

/// A map between groups given by the images of `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupMap {
    images: Vec<usize>,
}

impl fmt::Debug for GroupMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupMap{:?}", self.images)
    }
}

impl GroupMap {
    pub fn new(images: Vec<usize>) -> Self {
        GroupMap { images }
    }

    pub fn identity(n: usize) -> Self {
        GroupMap {
            images: (0..n).collect(),
        }
    }

    pub fn source_order(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GroupMap) -> GroupMap {
        GroupMap {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    /// Inverse of a bijection on `0..n`.
    pub fn inverse(&self) -> GroupMap {
        let mut inv = vec![0; self.images.len()];
        for (a, &b) in self.images.iter().enumerate() {
            inv[b] = a;
        }
        GroupMap { images: inv }
    }

    pub fn is_bijective(&self) -> bool {
        let n = self.images.len();
        let mut seen = vec![false; n];
        self.images.iter().all(|&b| b < n && !std::mem::replace(&mut seen[b], true))
    }

    pub fn is_homomorphism(&self, src: &FiniteGroup, dst: &FiniteGroup) -> bool {
        let n = src.order();
        if self.images.len() != n || self.images.iter().any(|&b| b >= dst.order()) {
            return false;
        }
        (0..n).all(|a| {
            (0..n).all(|b| self.images[src.mul(a, b)] == dst.mul(self.images[a], self.images[b]))
        })
    }

    pub fn is_automorphism_of(&self, g: &FiniteGroup) -> bool {
        self.is_bijective() && self.is_homomorphism(g, g)
    }

    /// Image of a subset, as a set.
    pub fn image_of(&self, s: &SubgroupSet) -> SubgroupSet {
        SubgroupSet::from_elements(s.elements().iter().map(|&x| self.images[x]))
    }
}

/// The centre, norm, characteristic and normal subgroups of a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishedSubgroups {
    pub center: SubgroupSet,
    pub norm: SubgroupSet,
    pub characteristic: Vec<SubgroupSet>,
    pub normal: Vec<SubgroupSet>,
}

impl FiniteGroup {
    /// Validates a Cayley table given row by row.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Malformed("empty table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLargeForTable(n));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Malformed(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            for (j, &x) in row.iter().enumerate() {
                if x >= n {
                    return Err(Error::Malformed(format!("entry ({i},{j}) = {x} out of range")));
                }
                flat.push(x as u8);
            }
        }
        Self::from_flat(n, flat)
    }

    /// Builds the table `f(a, b)` on `0..n` and validates it.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Malformed("empty table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLargeForTable(n));
        }
        let mut flat = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let x = f(a, b);
                if x >= n {
                    return Err(Error::Malformed(format!("entry ({a},{b}) = {x} out of range")));
                }
                flat.push(x as u8);
            }
        }
        Self::from_flat(n, flat)
    }

    pub(crate) fn from_flat(n: usize, table: Vec<u8>) -> Result<Self> {
        debug_assert_eq!(table.len(), n * n);
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        for a in 0..n {
            if at(0, a) != a || at(a, 0) != a {
                return Err(Error::NoIdentityAtZero(a));
            }
        }
        for a in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                if std::mem::replace(&mut row[at(a, b)], true) {
                    return Err(Error::NotLatinSquare { kind: "row", index: a });
                }
                if std::mem::replace(&mut col[at(b, a)], true) {
                    return Err(Error::NotLatinSquare { kind: "column", index: a });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let mut inverse = vec![0u8; n];
        for a in 0..n {
            let b = (0..n).find(|&b| at(a, b) == 0).expect("latin square");
            inverse[a] = b as u8;
        }
        let mut orders = vec![1usize; n];
        for (a, ord) in orders.iter_mut().enumerate() {
            let mut x = a;
            while x != 0 {
                x = at(x, a);
                *ord += 1;
            }
        }
        Ok(FiniteGroup {
            n,
            table,
            inverse,
            orders,
            subgroups: OnceLock::new(),
            automorphisms: OnceLock::new(),
        })
    }

    pub fn trivial() -> Self {
        Self::from_flat(1, vec![0]).expect("trivial group")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g a g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1, |acc, &o| lcm(acc, o))
    }

    pub fn flat_table(&self) -> &[u8] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&o| o == self.n)
    }

    /// The opposite group `a *op b = b * a`.
    pub fn opposite(&self) -> FiniteGroup {
        let n = self.n;
        let mut t = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                t[a * n + b] = self.table[b * n + a];
            }
        }
        FiniteGroup {
            n,
            table: t,
            inverse: self.inverse.clone(),
            orders: self.orders.clone(),
            subgroups: OnceLock::new(),
            automorphisms: OnceLock::new(),
        }
    }

    /// Counts of elements of each order, indexed by order.
    pub fn order_spectrum(&self) -> Vec<usize> {
        let mut spec = vec![0; self.n + 1];
        for &o in &self.orders {
            spec[o] += 1;
        }
        spec
    }

    /// Subgroup generated by `elems`.
    pub fn generated(&self, elems: impl IntoIterator<Item = usize>) -> SubgroupSet {
        let gens: Vec<usize> = elems.into_iter().filter(|&x| x != 0).collect();
        let mut bits = Bits::new();
        bits.insert(0);
        let mut members = vec![0usize];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &g in &gens {
                let y = self.mul(x, g);
                if bits.insert(y) {
                    members.push(y);
                }
            }
        }
        SubgroupSet::from_bits(bits)
    }

    /// Whether `s` is closed under the group law and contains `0`.
    pub fn is_subgroup(&self, s: &SubgroupSet) -> bool {
        s.contains(0)
            && s.elements().iter().all(|&a| s.elements().iter().all(|&b| s.contains(self.mul(a, b))))
    }

    pub fn is_normal(&self, s: &SubgroupSet) -> bool {
        (0..self.n).all(|g| s.elements().iter().all(|&a| s.contains(self.conj(g, a))))
    }

    pub fn normalizer(&self, s: &SubgroupSet) -> SubgroupSet {
        SubgroupSet::from_elements(
            (0..self.n).filter(|&g| s.elements().iter().all(|&a| s.contains(self.conj(g, a)))),
        )
    }

    pub fn center(&self) -> SubgroupSet {
        SubgroupSet::from_elements(
            (0..self.n).filter(|&a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a))),
        )
    }

    /// Intersection of the normalizers of all subgroups.
    pub fn norm(&self) -> SubgroupSet {
        self.subgroups()
            .iter()
            .fold(self.whole(), |acc, s| acc.intersection(&self.normalizer(s)))
    }

    pub fn whole(&self) -> SubgroupSet {
        SubgroupSet::from_elements(0..self.n)
    }

    pub fn identity_subgroup(&self) -> SubgroupSet {
        SubgroupSet::from_elements([0])
    }

    /// Every subgroup, sorted canonically.
    ///
    /// Seeds with the cyclic subgroups and closes under pairwise joins until
    /// no new subgroup appears.
    pub fn subgroups(&self) -> &[SubgroupSet] {
        self.subgroups.get_or_init(|| {
            let mut all: BTreeSet<SubgroupSet> = (0..self.n).map(|a| self.generated([a])).collect();
            let mut frontier: Vec<SubgroupSet> = all.iter().cloned().collect();
            while !frontier.is_empty() {
                let current: Vec<SubgroupSet> = all.iter().cloned().collect();
                let mut next = Vec::new();
                for f in &frontier {
                    for s in &current {
                        if f.is_subset(s) || s.is_subset(f) {
                            continue;
                        }
                        let j = self.generated(f.elements().iter().chain(s.elements()).copied());
                        if all.insert(j.clone()) {
                            next.push(j);
                        }
                    }
                }
                frontier = next;
            }
            all.into_iter().collect()
        })
    }

    /// Greedy generating set: repeatedly the least element outside the
    /// subgroup generated so far.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.identity_subgroup();
        while span.len() < self.n {
            let g = (0..self.n).find(|&x| !span.contains(x)).expect("proper span");
            gens.push(g);
            span = self.generated(gens.iter().copied());
        }
        gens
    }

    /// All automorphisms, in backtracking order over images of
    /// [`generators`](Self::generators).
    pub fn automorphisms(&self) -> &[GroupMap] {
        self.automorphisms.get_or_init(|| {
            let gens = self.generators();
            let candidates: Vec<Vec<usize>> = gens
                .iter()
                .map(|&g| (0..self.n).filter(|&h| self.orders[h] == self.orders[g]).collect())
                .collect();
            let target = TableTarget { group: self, injective: true };
            let mut out = Vec::new();
            hom::search(self, &gens, &candidates, &target, &mut |m| {
                out.push(GroupMap::new(m));
                ControlFlow::Continue(())
            });
            out
        })
    }

    /// Lexicographically first isomorphism `self -> other` in backtracking
    /// order, if any.
    pub fn isomorphism(&self, other: &FiniteGroup) -> Option<GroupMap> {
        if self.n != other.n || self.order_spectrum() != other.order_spectrum() {
            return None;
        }
        let gens = self.generators();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| (0..other.n).filter(|&h| other.orders[h] == self.orders[g]).collect())
            .collect();
        let target = TableTarget { group: other, injective: true };
        let mut found = None;
        hom::search(self, &gens, &candidates, &target, &mut |m| {
            found = Some(GroupMap::new(m));
            ControlFlow::Break(())
        });
        found
    }

    pub fn is_isomorphic(&self, other: &FiniteGroup) -> bool {
        self.isomorphism(other).is_some()
    }

    /// All homomorphisms `self -> target`.
    pub fn homomorphisms_to(&self, target: &FiniteGroup) -> Vec<GroupMap> {
        let gens = self.generators();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                (0..target.n)
                    .filter(|&h| self.orders[g] % target.orders[h] == 0)
                    .collect()
            })
            .collect();
        let t = TableTarget { group: target, injective: false };
        let mut out = Vec::new();
        hom::search(self, &gens, &candidates, &t, &mut |m| {
            out.push(GroupMap::new(m));
            ControlFlow::Continue(())
        });
        out
    }

    pub fn distinguished_subgroups(&self) -> DistinguishedSubgroups {
        let autos = self.automorphisms();
        let subs = self.subgroups();
        let characteristic = subs
            .iter()
            .filter(|s| autos.iter().all(|phi| phi.image_of(s) == **s))
            .cloned()
            .collect();
        let normal = subs.iter().filter(|s| self.is_normal(s)).cloned().collect();
        DistinguishedSubgroups {
            center: self.center(),
            norm: self.norm(),
            characteristic,
            normal,
        }
    }

    /// Whether `phi` maps every element into the cyclic subgroup it generates.
    ///
    /// Checks this and the equivalent "every subgroup is mapped to itself"
    /// condition; they must agree.
    pub fn is_power_automorphism(&self, phi: &GroupMap) -> Result<bool> {
        if !phi.is_automorphism_of(self) {
            return Err(Error::NotAutomorphism);
        }
        let by_elements = (0..self.n).all(|t| self.generated([t]).contains(phi.apply(t)));
        let by_subgroups = self.subgroups().iter().all(|s| phi.image_of(s) == *s);
        if by_elements != by_subgroups {
            return Err(Error::InternalInconsistency(
                "power-automorphism characterizations disagree".into(),
            ));
        }
        Ok(by_elements)
    }

    /// Quotient by a normal subgroup; cosets are labelled by increasing least
    /// element, so the coset of `0` is the identity.
    pub fn quotient(&self, normal: &SubgroupSet) -> Result<(FiniteGroup, GroupMap)> {
        if !self.is_subgroup(normal) || !self.is_normal(normal) {
            return Err(Error::NotNormal);
        }
        let cosets = self.left_cosets(normal);
        let mut label = vec![usize::MAX; self.n];
        for (i, c) in cosets.iter().enumerate() {
            for &x in c {
                label[x] = i;
            }
        }
        let m = cosets.len();
        let q = FiniteGroup::from_fn(m, |i, j| label[self.mul(cosets[i][0], cosets[j][0])])?;
        Ok((q, GroupMap::new(label)))
    }

    /// Left cosets `gS`, sorted by least element; each coset sorted.
    pub fn left_cosets(&self, s: &SubgroupSet) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for g in 0..self.n {
            if seen[g] {
                continue;
            }
            let mut c: Vec<usize> = s.elements().iter().map(|&h| self.mul(g, h)).collect();
            c.sort_unstable();
            for &x in &c {
                seen[x] = true;
            }
            out.push(c);
        }
        out
    }

    /// Restriction of the table to a subgroup, relabelled by position in the
    /// sorted element list.
    pub fn restrict(&self, s: &SubgroupSet) -> Result<FiniteGroup> {
        if !self.is_subgroup(s) {
            return Err(Error::Malformed("subset is not a subgroup".into()));
        }
        let els = s.elements();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &x) in els.iter().enumerate() {
            pos[x] = i;
        }
        FiniteGroup::from_fn(els.len(), |i, j| pos[self.mul(els[i], els[j])])
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
        let trivial: Vec<GroupMap> = (0..b.order()).map(|_| GroupMap::identity(a.order())).collect();
        Self::semidirect_product(a, b, &trivial)
    }

    /// `A ⋊_α B` on pairs `(a, b) ↦ a·|B| + b` with
    /// `(a,b)(c,d) = (a·α(b)(c), bd)`.
    ///
    /// `alpha[b]` is the automorphism of `A` attached to `b`.
    pub fn semidirect_product(
        a: &FiniteGroup,
        b: &FiniteGroup,
        alpha: &[GroupMap],
    ) -> Result<FiniteGroup> {
        check_action(a, b, alpha)?;
        let (na, nb) = (a.order(), b.order());
        if na * nb > MAX_ORDER {
            return Err(Error::OrderTooLargeForTable(na * nb));
        }
        FiniteGroup::from_fn(na * nb, |x, y| {
            let (a1, b1) = (x / nb, x % nb);
            let (a2, b2) = (y / nb, y % nb);
            a.mul(a1, alpha[b1].apply(a2)) * nb + b.mul(b1, b2)
        })
    }

    /// Table after relabelling every element `x` as `perm[x]`.
    pub fn relabel(&self, perm: &GroupMap) -> Result<FiniteGroup> {
        if perm.source_order() != self.n || !perm.is_bijective() || perm.apply(0) != 0 {
            return Err(Error::Malformed("relabelling must be a bijection fixing 0".into()));
        }
        let inv = perm.inverse();
        FiniteGroup::from_fn(self.n, |x, y| perm.apply(self.mul(inv.apply(x), inv.apply(y))))
    }
}

/// Checks that `alpha` is a homomorphism from `b` into `Aut(a)`.
pub(crate) fn check_action(a: &FiniteGroup, b: &FiniteGroup, alpha: &[GroupMap]) -> Result<()> {
    if alpha.len() != b.order() {
        return Err(Error::NotAHomomorphism(format!(
            "action has {} entries for a group of order {}",
            alpha.len(),
            b.order()
        )));
    }
    for (x, phi) in alpha.iter().enumerate() {
        if !phi.is_automorphism_of(a) {
            return Err(Error::NotAHomomorphism(format!("image of {x} is not an automorphism")));
        }
    }
    for x in 0..b.order() {
        for y in 0..b.order() {
            if alpha[b.mul(x, y)] != alpha[x].compose(&alpha[y]) {
                return Err(Error::NotAHomomorphism(format!("fails at ({x}, {y})")));
            }
        }
    }
    Ok(())
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
