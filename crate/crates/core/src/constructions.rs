//! Explicit skew-brace constructions on a given circle group.

use crate::brace::SkewBrace;
use crate::catalog::cyclic;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupMap, SubgroupSet, MAX_ORDER};

/// The quotient `N(G)/Z(G)` of the norm by the centre, with the cosets it
/// is built from.
#[derive(Debug, Clone)]
pub struct NormModCenter {
    pub norm: SubgroupSet,
    pub center: SubgroupSet,
    pub quotient: FiniteGroup,
    /// `cosets[q]` lists the elements of `G` in coset `q`, sorted.
    pub cosets: Vec<Vec<usize>>,
}

impl NormModCenter {
    pub fn new(g: &FiniteGroup) -> Result<Self> {
        let norm = g.norm();
        let center = g.center();
        let n_group = g.restrict(&norm)?;
        let pos = |x: usize| norm.elements().binary_search(&x).expect("centre lies in the norm");
        let z_in_n = SubgroupSet::from_elements(center.elements().iter().map(|&z| pos(z)));
        let (quotient, proj) = n_group.quotient(&z_in_n)?;
        let mut cosets = vec![Vec::new(); quotient.order()];
        for (i, &x) in norm.elements().iter().enumerate() {
            cosets[proj.apply(i)].push(x);
        }
        Ok(NormModCenter {
            norm,
            center,
            quotient,
            cosets,
        })
    }

    pub fn least_representative(&self, q: usize) -> usize {
        self.cosets[q][0]
    }
}

/// Choice of coset representatives for [`psi_construction`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lift {
    Least,
    /// One element of `G` per element of `N(G)/Z(G)`.
    Custom(Vec<usize>),
}

/// `σ ·_ψ τ = σ∘r∘τ∘r̄` with `r` a representative of `ψ(σ) ∈ N(G)/Z(G)`.
///
/// The result is checked to be bi-skew, to have `γ(σ)` equal to conjugation
/// by `r̄`, to have every `γ(σ)` a power automorphism of `(G, ∘)`, and not to
/// depend on the choice of representatives.
pub fn psi_construction(
    g: &FiniteGroup,
    nmz: &NormModCenter,
    psi: &GroupMap,
    lift: &Lift,
) -> Result<SkewBrace> {
    let n = g.order();
    let q = &nmz.quotient;
    if psi.source_order() != n || psi.images().iter().any(|&x| x >= q.order()) {
        return Err(Error::NotIntoNormModCenter(format!(
            "expected {n} images below {}",
            q.order()
        )));
    }
    if !psi.is_homomorphism(g, q) {
        return Err(Error::NotAHomomorphism("ψ does not respect the group law".into()));
    }
    let reps: Vec<usize> = match lift {
        Lift::Least => (0..q.order()).map(|c| nmz.least_representative(c)).collect(),
        Lift::Custom(r) => {
            if r.len() != q.order() || r.iter().enumerate().any(|(c, x)| !nmz.cosets[c].contains(x)) {
                return Err(Error::NotIntoNormModCenter(
                    "lift does not pick one element per coset".into(),
                ));
            }
            r.clone()
        }
    };
    let rep = |s: usize| reps[psi.apply(s)];
    let dot = FiniteGroup::from_fn(n, |s, t| {
        let r = rep(s);
        g.mul(g.mul(g.mul(s, r), t), g.inv(r))
    })?;
    let brace = SkewBrace::new(dot, g.clone())?;
    let gamma = brace.gamma();
    for s in 0..n {
        let rbar = g.inv(rep(s));
        if (0..n).any(|t| gamma.apply(s, t) != g.conj(rbar, t)) {
            return Err(Error::InternalInconsistency(format!(
                "γ({s}) is not conjugation by the inverse of ψ({s})"
            )));
        }
    }
    check_bi_skew_power(&brace)?;
    if let Lift::Custom(_) = lift {
        let least = psi_construction(g, nmz, psi, &Lift::Least)?;
        if least != brace {
            return Err(Error::InternalInconsistency("ψ-construction depends on the lift".into()));
        }
    }
    Ok(brace)
}

/// One brace per homomorphism `G → N(G)/Z(G)`, in homomorphism search order.
pub fn all_psi_braces(g: &FiniteGroup) -> Result<Vec<(GroupMap, SkewBrace)>> {
    let nmz = NormModCenter::new(g)?;
    g.homomorphisms_to(&nmz.quotient)
        .into_iter()
        .map(|psi| {
            let b = psi_construction(g, &nmz, &psi, &Lift::Least)?;
            Ok((psi, b))
        })
        .collect()
}

fn check_bi_skew_power(brace: &SkewBrace) -> Result<()> {
    if !brace.is_bi_skew() {
        return Err(Error::InternalInconsistency("construction is not bi-skew".into()));
    }
    for m in brace.gamma().maps() {
        if !brace.circ().is_power_automorphism(m)? {
            return Err(Error::InternalInconsistency(
                "a gamma value is not a power automorphism".into(),
            ));
        }
    }
    Ok(())
}

/// `σ · τ = σ∘σ∘τ∘σ̄` on a group of nilpotency class at most two.
pub fn class2_construction(g: &FiniteGroup) -> Result<SkewBrace> {
    let n = g.order();
    let z = g.center();
    let class_two = (0..n).all(|a| {
        (0..n).all(|b| z.contains(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)))))
    });
    if !class_two {
        return Err(Error::NotClassTwo);
    }
    let dot = FiniteGroup::from_fn(n, |s, t| g.mul(g.mul(g.mul(s, s), t), g.inv(s)))?;
    let brace = SkewBrace::new(dot, g.clone())?;
    let gamma = brace.gamma();
    for s in 0..n {
        if (0..n).any(|t| gamma.apply(s, t) != g.conj(g.inv(s), t)) {
            return Err(Error::InternalInconsistency(format!("γ({s}) is not conjugation by {s}⁻¹")));
        }
    }
    if !brace.is_bi_skew() {
        return Err(Error::InternalInconsistency("class-two brace is not bi-skew".into()));
    }
    Ok(brace)
}

/// `(G,·) = A ⋊ C2` with `C2` inverting, `(G,∘) = A × C2`; `(a, b)` sits at
/// `2a + b`.
pub fn inversion_construction(a: &FiniteGroup) -> Result<SkewBrace> {
    if !a.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let c2 = cyclic(2)?;
    let inversion = GroupMap::new((0..a.order()).map(|x| a.inv(x)).collect());
    let circ = FiniteGroup::direct_product(a, &c2)?;
    let dot = FiniteGroup::semidirect_product(a, &c2, &[GroupMap::identity(a.order()), inversion])?;
    let brace = SkewBrace::new(dot, circ)?;
    check_bi_skew_power(&brace)?;
    Ok(brace)
}

/// `(G,∘) = A ⋊_α B`, `(G,·) = A × B`; `alpha[b]` is the automorphism of `A`
/// attached to `b`.
pub fn semidirect_to_brace(a: &FiniteGroup, b: &FiniteGroup, alpha: &[GroupMap]) -> Result<SkewBrace> {
    let circ = FiniteGroup::semidirect_product(a, b, alpha)?;
    let dot = FiniteGroup::direct_product(a, b)?;
    let brace = SkewBrace::new(dot, circ)?;
    let nb = b.order();
    let gamma = brace.gamma();
    for s in 0..brace.order() {
        let d = s % nb;
        for t in 0..brace.order() {
            let (x, y) = (t / nb, t % nb);
            if gamma.apply(s, t) != alpha[d].apply(x) * nb + y {
                return Err(Error::InternalInconsistency(format!(
                    "γ({s}) differs from (α(d)(a), b) at {t}"
                )));
            }
        }
    }
    Ok(brace)
}

/// Brace on `C_{p^r} × C_{p^s}` with
/// `(σ^i, τ^j)·(σ^a, τ^b) = (σ^{i+a}, τ^{j+b+ia})`; `(i, j)` sits at
/// `i·p^s + j`. The subgroup `C_{p^r} × {1}` is checked not to be a left
/// ideal.
pub fn cpr_cps_brace(p: usize, r: u32, s: u32) -> Result<SkewBrace> {
    let prime = p >= 2 && (2..p).all(|d| p % d != 0);
    if !prime || s < 1 || s > r {
        return Err(Error::BadParameters(format!("need p prime and 1 <= s <= r, got ({p}, {r}, {s})")));
    }
    let (big, small) = (
        p.checked_pow(r).ok_or_else(|| Error::BadParameters("p^r overflows".into()))?,
        p.checked_pow(s).ok_or_else(|| Error::BadParameters("p^s overflows".into()))?,
    );
    if big.saturating_mul(small) > MAX_ORDER {
        return Err(Error::BadParameters(format!("order {} is too large", big * small)));
    }
    let circ = FiniteGroup::direct_product(&cyclic(big)?, &cyclic(small)?)?;
    let dot = FiniteGroup::from_fn(big * small, |x, y| {
        let (i, j) = (x / small, x % small);
        let (a, b) = (y / small, y % small);
        ((i + a) % big) * small + (j + b + i * a) % small
    })?;
    let brace = SkewBrace::new(dot, circ)?;
    let first = SubgroupSet::from_elements((0..big).map(|i| i * small));
    if brace.is_left_ideal(&first) {
        return Err(Error::InternalInconsistency("C_{p^r} x {1} is a left ideal".into()));
    }
    Ok(brace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::by_name;

    #[test]
    fn trivial_psi_gives_trivial_brace() {
        let g = by_name("Q8").unwrap();
        let nmz = NormModCenter::new(&g).unwrap();
        let zero = GroupMap::new(vec![0; 8]);
        let b = psi_construction(&g, &nmz, &zero, &Lift::Least).unwrap();
        assert!(b.is_trivial());
    }

    #[test]
    fn psi_rejects_bad_maps() {
        let g = by_name("Q8").unwrap();
        let nmz = NormModCenter::new(&g).unwrap();
        let too_big = GroupMap::new(vec![0, 9, 0, 0, 0, 0, 0, 0]);
        assert!(matches!(
            psi_construction(&g, &nmz, &too_big, &Lift::Least),
            Err(Error::NotIntoNormModCenter(_))
        ));
        let not_hom = GroupMap::new(vec![0, 1, 0, 0, 0, 0, 0, 0]);
        assert!(matches!(
            psi_construction(&g, &nmz, &not_hom, &Lift::Least),
            Err(Error::NotAHomomorphism(_))
        ));
    }

    #[test]
    fn class2_on_abelian_is_trivial() {
        let g = by_name("C4xC2").unwrap();
        assert!(class2_construction(&g).unwrap().is_trivial());
    }

    #[test]
    fn class2_rejects_class_three() {
        // D8 (order 16) has class three.
        assert_eq!(class2_construction(&by_name("D8").unwrap()).unwrap_err(), Error::NotClassTwo);
    }

    #[test]
    fn inversion_small_cases() {
        let b = inversion_construction(&by_name("C1").unwrap()).unwrap();
        assert!(b.is_trivial() && b.order() == 2);
        let b = inversion_construction(&by_name("C2^2").unwrap()).unwrap();
        assert!(b.is_trivial());
        assert_eq!(inversion_construction(&by_name("D3").unwrap()).unwrap_err(), Error::NotAbelian);
    }

    #[test]
    fn cpr_cps_parameters() {
        assert!(matches!(cpr_cps_brace(4, 1, 1), Err(Error::BadParameters(_))));
        assert!(matches!(cpr_cps_brace(2, 1, 2), Err(Error::BadParameters(_))));
        assert!(matches!(cpr_cps_brace(2, 1, 0), Err(Error::BadParameters(_))));
        let b = cpr_cps_brace(2, 1, 1).unwrap();
        assert_eq!(b.order(), 4);
        assert!(b.dot().is_cyclic());
    }
}
