//! Named verification suites, each a list of pass/fail checks.

use std::collections::BTreeSet;

use num_rational::Ratio;

use crate::brace::SkewBrace;
use crate::catalog::{self, by_name};
use crate::constructions::{self, NormModCenter};
use crate::error::{Error, Result};
use crate::group::GroupMap;
use crate::hg::{self, EnumConfig};

pub const SUITES: [&str; 5] = ["axioms", "bijection", "byott", "paper-numbers", "childs"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First counterexample when failed, otherwise a short summary.
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    fn from_result(name: &str, r: Result<Option<String>>, ok: &str) -> Self {
        match r {
            Ok(None) => Check::new(name, true, ok),
            Ok(Some(counterexample)) => Check::new(name, false, counterexample),
            Err(e) => Check::new(name, false, format!("error: {e}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub enumeration: EnumConfig,
    /// Largest order for the axiom scan over enumerated braces.
    pub axioms_max: usize,
    /// Largest order compared against the permutation oracle.
    pub oracle_max: usize,
    pub byott_max: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            enumeration: EnumConfig::default(),
            axioms_max: 8,
            oracle_max: 6,
            byott_max: 12,
        }
    }
}

/// Runs one suite by name, or all of them for `"all"`.
pub fn run(name: &str, cfg: &SuiteConfig) -> Result<Vec<Check>> {
    match name {
        "axioms" => Ok(axioms(cfg)),
        "bijection" => Ok(bijection(cfg)),
        "byott" => Ok(byott(cfg)),
        "paper-numbers" => Ok(paper_numbers(cfg)),
        "childs" => Ok(childs(cfg)),
        "all" => {
            let mut out = Vec::new();
            for s in SUITES {
                out.extend(run(s, cfg)?);
            }
            Ok(out)
        }
        other => Err(Error::UnknownName(other.to_string())),
    }
}

fn catalog_upto(max: usize) -> Vec<catalog::CatalogEntry> {
    (1..=max)
        .filter_map(|n| catalog::catalog(n).ok())
        .flatten()
        .collect()
}

/// Braces from the explicit constructions, labeled.
pub fn constructed_braces() -> Result<Vec<(String, SkewBrace)>> {
    let mut out = Vec::new();
    for name in ["Q8", "D4", "C9:C3"] {
        for (psi, b) in constructions::all_psi_braces(&by_name(name)?)? {
            out.push((format!("psi {name} {:?}", psi.images()), b));
        }
    }
    for name in ["Q8", "D4", "Heisenberg-27", "C4xC2"] {
        out.push((format!("class2 {name}"), constructions::class2_construction(&by_name(name)?)?));
    }
    for name in ["C1", "C3", "C5", "C2^2", "C4xC2"] {
        out.push((format!("inversion {name}"), constructions::inversion_construction(&by_name(name)?)?));
    }
    let c3 = by_name("C3")?;
    let c2 = by_name("C2")?;
    let inv = GroupMap::new(vec![0, 2, 1]);
    out.push((
        "semidirect C3:C2".into(),
        constructions::semidirect_to_brace(&c3, &c2, &[GroupMap::identity(3), inv])?,
    ));
    for (p, r, s) in [(2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 1, 1), (3, 2, 1)] {
        out.push((format!("cpr_cps {p} {r} {s}"), constructions::cpr_cps_brace(p, r, s)?));
    }
    Ok(out)
}

/// The brace-level identities, checked on one brace. Returns the first
/// failure.
pub fn brace_identities(b: &SkewBrace) -> Result<Option<String>> {
    let n = b.order();
    let (dot, circ) = (b.dot(), b.circ());
    SkewBrace::new(dot.clone(), circ.clone())?;
    let gamma = b.gamma();
    for s in 0..n {
        for t in 0..n {
            let lhs = gamma.map(circ.mul(s, t));
            let rhs = gamma.map(s).compose(gamma.map(t));
            if *lhs != rhs {
                return Ok(Some(format!("gamma({s}∘{t}) != gamma({s})gamma({t})")));
            }
        }
        if !gamma.map(s).is_automorphism_of(dot) {
            return Ok(Some(format!("gamma({s}) is not an automorphism of the dot group")));
        }
    }
    let opp = b.opposite();
    let og = opp.gamma();
    for s in 0..n {
        for t in 0..n {
            let expect = dot.mul(dot.mul(s, gamma.apply(s, t)), dot.inv(s));
            if og.apply(s, t) != expect {
                return Ok(Some(format!("opposite gamma differs at ({s}, {t})")));
            }
        }
    }
    let strong: BTreeSet<_> = b.strong_left_ideals().into_iter().collect();
    let expect: BTreeSet<_> = b.left_ideals().into_iter().filter(|s| dot.is_normal(s)).collect();
    if strong != expect {
        return Ok(Some("strong left ideals differ from normal left ideals".into()));
    }
    if b.is_bi_skew() {
        if b.swap()?.left_ideals() != b.left_ideals() {
            return Ok(Some("bi-skew brace and its swap have different left ideals".into()));
        }
        hg::surjective_iff_power_auto(b)?;
    }
    Ok(None)
}

fn axioms(cfg: &SuiteConfig) -> Vec<Check> {
    let mut checks = Vec::new();
    let constructed = constructed_braces().and_then(|list| {
        for (label, b) in &list {
            if let Some(bad) = brace_identities(b)? {
                return Ok(Some(format!("{label}: {bad}")));
            }
        }
        Ok(None)
    });
    checks.push(Check::from_result("axioms: constructed braces", constructed, "all identities hold"));
    let enumerated = (|| {
        for e in catalog_upto(cfg.axioms_max) {
            for b in hg::enumerate_operations(&e.group, &cfg.enumeration)? {
                if let Some(bad) = brace_identities(&b)? {
                    return Ok(Some(format!("circ {}: {bad}", e.name)));
                }
            }
        }
        Ok(None)
    })();
    checks.push(Check::from_result(
        &format!("axioms: enumerated braces up to order {}", cfg.axioms_max),
        enumerated,
        "all identities hold",
    ));
    checks
}

fn bijection(cfg: &SuiteConfig) -> Vec<Check> {
    catalog_upto(cfg.oracle_max)
        .into_iter()
        .map(|e| {
            let r = hg::bijection_check(&e.group, &cfg.enumeration)
                .map(|same| (!same).then(|| format!("holomorph and oracle sets differ for {}", e.name)));
            Check::from_result(&format!("bijection: {}", e.name), r, "operation sets agree")
        })
        .collect()
}

fn byott(cfg: &SuiteConfig) -> Vec<Check> {
    (1..=cfg.byott_max)
        .filter(|&n| catalog::is_complete(n))
        .map(|n| {
            let r = hg::byott_census(n, &cfg.enumeration).map(|rows| {
                rows.iter().find(|r| !r.holds()).map(|r| {
                    format!(
                        "G={} N={}: e={} |Aut N|={} f={} |Aut G|={}",
                        r.circ, r.dot, r.e, r.aut_dot, r.f, r.aut_circ
                    )
                })
            });
            Check::from_result(&format!("byott: order {n}"), r, "e·|Aut N| = f·|Aut G| for all pairs")
        })
        .collect()
}

fn childs(cfg: &SuiteConfig) -> Vec<Check> {
    let mut groups = catalog_upto(12);
    groups.extend(catalog::catalog(15).unwrap_or_default());
    groups
        .into_iter()
        .map(|e| {
            let r = hg::all_surjective(&e.group, &cfg.enumeration).map(|all| {
                let crit = hg::childs_criterion(&e.group);
                (all != crit).then(|| format!("{}: all_surjective={all} criterion={crit}", e.name))
            });
            Check::from_result(&format!("childs: {}", e.name), r, "agree")
        })
        .collect()
}

/// Q8: 22 structures, 6 of cyclic type, 16 surjective, and the surjective
/// ones are exactly the ψ-construction braces.
pub fn q8_census(cfg: &EnumConfig) -> Result<Option<String>> {
    let q8 = by_name("Q8")?;
    let reports = hg::enumerate_reports(&q8, cfg)?;
    let cyclic = reports.iter().filter(|r| r.operation.is_cyclic()).count();
    let surjective: BTreeSet<Vec<u8>> = reports
        .iter()
        .filter(|r| r.is_surjective)
        .map(|r| r.operation.flat_table().to_vec())
        .collect();
    if (reports.len(), cyclic, surjective.len()) != (22, 6, 16) {
        return Ok(Some(format!(
            "total={} cyclic_type={} surjective={}",
            reports.len(),
            cyclic,
            surjective.len()
        )));
    }
    let psi: BTreeSet<Vec<u8>> = constructions::all_psi_braces(&q8)?
        .into_iter()
        .map(|(_, b)| b.dot().flat_table().to_vec())
        .collect();
    if psi != surjective {
        return Ok(Some(format!("{} psi braces, not the surjective set", psi.len())));
    }
    Ok(None)
}

/// Ratio pair of the inversion brace on `C5`.
pub fn d5_ratio_pair() -> Result<Option<String>> {
    let b = constructions::inversion_construction(&by_name("C5")?)?;
    let r = hg::biskew_pair_report(&b)?;
    let expect = (Ratio::from_integer(1), Ratio::new(4, 8), Ratio::from_integer(2));
    if (r.ratio_fwd, r.ratio_swapped, r.quotient) != expect || r.quotient != Ratio::new(5 + 3, 4) {
        return Ok(Some(format!("{r:?}")));
    }
    Ok(None)
}

/// The two order-27 examples.
pub fn p_cubed_examples() -> Result<Option<String>> {
    let g = by_name("C9:C3")?;
    let nmz = NormModCenter::new(&g)?;
    let norm = g.restrict(&nmz.norm)?;
    if !(norm.order() == 9 && norm.is_abelian() && norm.exponent() == 3) {
        return Ok(Some(format!("norm has order {} exponent {}", norm.order(), norm.exponent())));
    }
    if nmz.center.len() != 3 {
        return Ok(Some(format!("centre has order {}", nmz.center.len())));
    }
    let braces = constructions::all_psi_braces(&g)?;
    let distinct: BTreeSet<Vec<u8>> = braces.iter().map(|(_, b)| b.dot().flat_table().to_vec()).collect();
    if distinct.len() != 9 {
        return Ok(Some(format!("{} distinct psi braces", distinct.len())));
    }
    let subgroup_count = g.subgroups().len();
    if let Some((psi, _)) = braces.iter().find(|(_, b)| b.left_ideals().len() != subgroup_count) {
        return Ok(Some(format!("psi {:?} is not surjective", psi.images())));
    }
    let h = by_name("Heisenberg-27")?;
    let b = constructions::class2_construction(&h)?;
    let normal: Vec<_> = h.subgroups().iter().filter(|s| h.is_normal(s)).cloned().collect();
    if b.left_ideals() != normal {
        return Ok(Some("class-two image differs from the normal subgroups".into()));
    }
    if b.dot() == SkewBrace::almost_trivial(&h).dot() {
        return Ok(Some("class-two brace equals the almost trivial brace".into()));
    }
    Ok(None)
}

/// Structures on `C4`, `C8`, `C9`, `C27`: all surjective; types on `C8`
/// cyclic, dihedral or generalized quaternion, on `C9` and `C27` cyclic.
pub fn cyclic_prime_power(cfg: &EnumConfig) -> Result<Option<String>> {
    for (name, allowed) in [
        ("C4", &["C4", "C2^2"][..]),
        ("C8", &["C8", "D4", "Q8"][..]),
        ("C9", &["C9"][..]),
        ("C27", &["C27"][..]),
    ] {
        for r in hg::enumerate_reports(&by_name(name)?, cfg)? {
            if !r.is_surjective {
                return Ok(Some(format!("{name}: a structure of type {} is not surjective", r.type_name)));
            }
            if !allowed.contains(&r.type_name.as_str()) {
                return Ok(Some(format!("{name}: unexpected type {}", r.type_name)));
            }
        }
    }
    Ok(None)
}

/// Enumeration over `C8` has a bi-skew, surjective brace of type `Q8`.
/// Returns the number of `Q8`-type structures and how many are bi-skew.
pub fn c8_q8_witness(cfg: &EnumConfig) -> Result<(usize, usize, bool)> {
    let reports = hg::enumerate_reports(&by_name("C8")?, cfg)?;
    let q8: Vec<_> = reports.iter().filter(|r| r.type_name == "Q8").collect();
    let bi = q8.iter().filter(|r| r.is_bi_skew).count();
    let witness = q8.iter().any(|r| r.is_bi_skew && r.is_surjective);
    Ok((q8.len(), bi, witness))
}

fn paper_numbers(cfg: &SuiteConfig) -> Vec<Check> {
    let e = &cfg.enumeration;
    vec![
        Check::from_result("paper-numbers: Q8 census", q8_census(e), "22 / 6 / 16, surjective = psi braces"),
        Check::from_result("paper-numbers: D5 ratio pair", d5_ratio_pair(), "1, 4/8, quotient 2"),
        Check::from_result("paper-numbers: order-27 examples", p_cubed_examples(), "norm, centre, psi and class-two as expected"),
        Check::from_result("paper-numbers: cyclic prime powers", cyclic_prime_power(e), "all surjective with expected types"),
        Check::from_result(
            "paper-numbers: C8 with Q8 dot",
            c8_q8_witness(e).map(|(n, bi, ok)| (!ok).then(|| format!("{n} Q8-type structures, {bi} bi-skew, none surjective and bi-skew"))),
            "bi-skew surjective witness found",
        ),
    ]
}
