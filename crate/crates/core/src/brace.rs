//! Skew braces `(G, ·, ∘)` on a shared labelled set.
//!
//! The brace law is `σ∘(τ·κ) = (σ∘τ)·σ⁻¹·(σ∘κ)` with `σ⁻¹` the inverse for
//! `·`. Equality of braces is equality of both tables; isomorphism is
//! handled separately.

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupMap, SubgroupSet};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewBrace {
    dot: FiniteGroup,
    circ: FiniteGroup,
}

/// `γ(σ)(τ) = σ⁻¹·(σ∘τ)` for every `σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaTable {
    maps: Vec<GroupMap>,
}

impl GammaTable {
    pub fn map(&self, sigma: usize) -> &GroupMap {
        &self.maps[sigma]
    }

    pub fn maps(&self) -> &[GroupMap] {
        &self.maps
    }

    #[inline]
    pub fn apply(&self, sigma: usize, tau: usize) -> usize {
        self.maps[sigma].apply(tau)
    }
}

impl SkewBrace {
    /// Validates the brace law on all triples.
    pub fn new(dot: FiniteGroup, circ: FiniteGroup) -> Result<Self> {
        if dot.order() != circ.order() {
            return Err(Error::IdentityMismatch);
        }
        let n = dot.order();
        for s in 0..n {
            let si = dot.inv(s);
            for t in 0..n {
                let st = circ.mul(s, t);
                let left = dot.mul(st, si);
                for k in 0..n {
                    if circ.mul(s, dot.mul(t, k)) != dot.mul(left, circ.mul(s, k)) {
                        return Err(Error::BraceLawViolated(s, t, k));
                    }
                }
            }
        }
        Ok(SkewBrace { dot, circ })
    }

    /// `(G, ∘, ∘)`.
    pub fn trivial(g: &FiniteGroup) -> Self {
        SkewBrace {
            dot: g.clone(),
            circ: g.clone(),
        }
    }

    /// `(G, ∘op, ∘)`.
    pub fn almost_trivial(g: &FiniteGroup) -> Self {
        SkewBrace {
            dot: g.opposite(),
            circ: g.clone(),
        }
    }

    pub fn dot(&self) -> &FiniteGroup {
        &self.dot
    }

    pub fn circ(&self) -> &FiniteGroup {
        &self.circ
    }

    pub fn order(&self) -> usize {
        self.dot.order()
    }

    pub fn into_parts(self) -> (FiniteGroup, FiniteGroup) {
        (self.dot, self.circ)
    }

    pub fn is_trivial(&self) -> bool {
        self.dot == self.circ
    }

    pub fn gamma(&self) -> GammaTable {
        let n = self.order();
        let maps: Vec<GroupMap> = (0..n)
            .map(|s| {
                let si = self.dot.inv(s);
                GroupMap::new((0..n).map(|t| self.dot.mul(si, self.circ.mul(s, t))).collect())
            })
            .collect();
        debug_assert!(maps.iter().all(|m| m.is_automorphism_of(&self.dot)));
        debug_assert!((0..n).all(|s| (0..n)
            .all(|t| maps[self.circ.mul(s, t)] == maps[s].compose(&maps[t]))));
        GammaTable { maps }
    }

    /// `(G, ·op, ∘)`.
    pub fn opposite(&self) -> SkewBrace {
        SkewBrace {
            dot: self.dot.opposite(),
            circ: self.circ.clone(),
        }
    }

    /// `(G, ∘, ·)`, which is a brace exactly when `self` is bi-skew.
    pub fn swap(&self) -> Result<SkewBrace> {
        SkewBrace::new(self.circ.clone(), self.dot.clone())
    }

    fn is_gamma_invariant(&self, gamma: &GammaTable, s: &SubgroupSet) -> bool {
        gamma
            .maps()
            .iter()
            .all(|m| s.elements().iter().all(|&t| s.contains(m.apply(t))))
    }

    /// Subgroups of `(G, ·)` invariant under every `γ(σ)`.
    pub fn left_ideals(&self) -> Vec<SubgroupSet> {
        let gamma = self.gamma();
        let out: Vec<SubgroupSet> = self
            .dot
            .subgroups()
            .iter()
            .filter(|s| self.is_gamma_invariant(&gamma, s))
            .cloned()
            .collect();
        debug_assert!(out.iter().all(|s| self.circ.is_subgroup(s)));
        out
    }

    /// Left ideals normal in `(G, ·)`.
    pub fn strong_left_ideals(&self) -> Vec<SubgroupSet> {
        self.left_ideals()
            .into_iter()
            .filter(|s| self.dot.is_normal(s))
            .collect()
    }

    /// Strong left ideals normal in `(G, ∘)`.
    pub fn ideals(&self) -> Vec<SubgroupSet> {
        self.strong_left_ideals()
            .into_iter()
            .filter(|s| self.circ.is_normal(s))
            .collect()
    }

    pub fn is_left_ideal(&self, s: &SubgroupSet) -> bool {
        self.dot.is_subgroup(s) && self.is_gamma_invariant(&self.gamma(), s)
    }

    pub fn is_ideal(&self, s: &SubgroupSet) -> bool {
        self.is_left_ideal(s) && self.dot.is_normal(s) && self.circ.is_normal(s)
    }

    /// Common fixed points of all `γ(σ)`.
    pub fn fix(&self) -> SubgroupSet {
        let gamma = self.gamma();
        SubgroupSet::from_elements(
            (0..self.order()).filter(|&t| gamma.maps().iter().all(|m| m.apply(t) == t)),
        )
    }

    /// Whether every `γ(σ)` is an automorphism of `(G, ∘)`.
    pub fn is_bi_skew(&self) -> bool {
        let gamma = self.gamma();
        let n = self.order();
        gamma.maps().iter().all(|m| {
            (0..n).all(|a| (0..n).all(|b| m.apply(self.circ.mul(a, b)) == self.circ.mul(m.apply(a), m.apply(b))))
        })
    }

    /// Bijections preserving both operations.
    ///
    /// Filters the smaller of `Aut(G,·)` and `Aut(G,∘)` for preservation of the
    /// other operation.
    pub fn automorphisms(&self) -> Vec<GroupMap> {
        let (base, other) = if self.dot.automorphisms().len() <= self.circ.automorphisms().len() {
            (&self.dot, &self.circ)
        } else {
            (&self.circ, &self.dot)
        };
        base.automorphisms()
            .iter()
            .filter(|phi| preserves(phi, other))
            .cloned()
            .collect()
    }

    /// Brace automorphisms among a precomputed automorphism list of `(G, ∘)`.
    pub fn automorphisms_within(&self, circ_autos: &[GroupMap]) -> Vec<GroupMap> {
        circ_autos
            .iter()
            .filter(|phi| preserves(phi, &self.dot))
            .cloned()
            .collect()
    }

    pub fn automorphism_count(&self) -> usize {
        self.automorphisms().len()
    }

    /// Some bijection preserving both operations, if any.
    pub fn isomorphism(&self, other: &SkewBrace) -> Option<GroupMap> {
        if self.order() != other.order() || !self.dot.is_isomorphic(&other.dot) {
            return None;
        }
        let f0 = self.circ.isomorphism(&other.circ)?;
        self.circ
            .automorphisms()
            .iter()
            .map(|phi| f0.compose(phi))
            .find(|f| (0..self.order()).all(|a| {
                (0..self.order()).all(|b| f.apply(self.dot.mul(a, b)) == other.dot.mul(f.apply(a), f.apply(b)))
            }))
    }

    /// The operation `σ ·' τ = φ(φ⁻¹(σ) · φ⁻¹(τ))` transported along a
    /// relabelling `φ`. When `φ ∈ Aut(G,∘)` the result is again a brace with
    /// the same circle group.
    pub fn transport_dot(&self, phi: &GroupMap) -> Result<FiniteGroup> {
        self.dot.relabel(phi)
    }

    /// Quotient by an ideal; both groups use the same coset labelling.
    pub fn quotient(&self, ideal: &SubgroupSet) -> Result<SkewBrace> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let (qd, pd) = self.dot.quotient(ideal)?;
        let (qc, pc) = self.circ.quotient(ideal)?;
        if pd != pc {
            return Err(Error::InternalInconsistency(
                "cosets of an ideal differ between the two operations".into(),
            ));
        }
        SkewBrace::new(qd, qc)
    }

    /// Restriction to a left ideal, relabelled by position.
    pub fn sub_brace(&self, left_ideal: &SubgroupSet) -> Result<SkewBrace> {
        if !self.is_left_ideal(left_ideal) {
            return Err(Error::NotALeftIdeal);
        }
        SkewBrace::new(self.dot.restrict(left_ideal)?, self.circ.restrict(left_ideal)?)
    }

    /// Some ideal whose sub-brace and quotient brace are both trivial; ideals
    /// are tried by increasing size.
    pub fn metatrivial_witness(&self) -> Option<SubgroupSet> {
        let mut ideals = self.ideals();
        ideals.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        ideals.into_iter().find(|i| {
            let sub = self.sub_brace(i).expect("ideal is a left ideal");
            let quo = self.quotient(i).expect("ideal");
            sub.is_trivial() && quo.is_trivial()
        })
    }

    /// Semidirect product `B1 ⋊_α B2` with `(G,·) = (G1,·)×(G2,·)` and
    /// `(G,∘) = (G1,∘)⋊_α(G2,∘)`; `alpha[b]` is a brace automorphism of `b1`.
    /// `None` gives the direct product. Pairs `(a, b)` sit at `a·|G2| + b`.
    pub fn product(b1: &SkewBrace, b2: &SkewBrace, alpha: Option<&[GroupMap]>) -> Result<SkewBrace> {
        let (n1, n2) = (b1.order(), b2.order());
        let trivial: Vec<GroupMap>;
        let alpha = match alpha {
            Some(a) => a,
            None => {
                trivial = vec![GroupMap::identity(n1); n2];
                &trivial
            }
        };
        if alpha.len() != n2 {
            return Err(Error::NotBraceAutomorphismAction("wrong number of maps".into()));
        }
        for (x, phi) in alpha.iter().enumerate() {
            if !phi.is_automorphism_of(&b1.circ) || !preserves(phi, &b1.dot) {
                return Err(Error::NotBraceAutomorphismAction(format!(
                    "image of {x} is not a brace automorphism"
                )));
            }
        }
        let dot = FiniteGroup::direct_product(&b1.dot, &b2.dot)?;
        let circ = FiniteGroup::semidirect_product(&b1.circ, &b2.circ, alpha)
            .map_err(|e| Error::NotBraceAutomorphismAction(e.to_string()))?;
        let out = SkewBrace::new(dot, circ)?;
        let first = SubgroupSet::from_elements((0..n1).map(|a| a * n2));
        let second = SubgroupSet::from_elements(0..n2);
        if !out.is_ideal(&first) {
            return Err(Error::InternalInconsistency("G1 x {0} is not an ideal".into()));
        }
        if !out.is_left_ideal(&second) || !out.dot.is_normal(&second) {
            return Err(Error::InternalInconsistency("{0} x G2 is not a strong left ideal".into()));
        }
        let acts_trivially = alpha.iter().all(|m| *m == GroupMap::identity(n1));
        if acts_trivially && !out.is_ideal(&second) {
            return Err(Error::InternalInconsistency("{0} x G2 is not an ideal".into()));
        }
        Ok(out)
    }
}

fn preserves(phi: &GroupMap, g: &FiniteGroup) -> bool {
    let n = g.order();
    (0..n).all(|a| (0..n).all(|b| phi.apply(g.mul(a, b)) == g.mul(phi.apply(a), phi.apply(b))))
}
