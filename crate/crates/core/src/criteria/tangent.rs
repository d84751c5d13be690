use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::degree_set::DegreeSet;
use super::hom::hom_dim_degree_zero;
use crate::algebra::{CoxRing, Family, Monomial, MultiDegree};
use crate::error::{invalid, precondition, Error, Result};
use crate::groebner::Ideal;
use crate::hilbert::DegreeBox;

/// `I_B + S_A`.
///
/// `I_B` is taken as `I` intersected with the monomial ideal spanned by the
/// degrees of `B`: the two agree in every degree, since that monomial ideal
/// is all of `S_D` for `D` in `B` and zero elsewhere.
pub fn truncation_ideal(ideal: &Ideal, b: &DegreeSet, a: &DegreeSet) -> Result<Ideal> {
    if !a.is_subset_of(b) {
        return invalid("the set A must be contained in B");
    }
    let ring = ideal.ring();
    let b_part = if b.generators().iter().any(|g| g.coords().iter().all(|&c| c == 0)) {
        ideal.clone()
    } else if b.is_empty() {
        Ideal::zero(ring.clone())
    } else {
        ideal.intersect(&b.monomial_ideal(ring)?)?
    };
    b_part.sum(&a.monomial_ideal(ring)?)
}

/// `r * dim X`.
pub fn slip_dim(ring: &CoxRing, r: u64) -> u64 {
    r * ring.dim_x() as u64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Excluded,
    Inconclusive,
    ExcludedConditional,
}

/// How sufficiency of `B \ A` is backed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateGrade {
    Builtin,
    Witness,
    UserAsserted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub criterion: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    pub dim: u64,
    pub threshold: u64,
    pub verdict: Verdict,
    pub certificate: CertificateGrade,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sufficiency: Option<WitnessCheck>,
}

/// Data `(E, F, G, k)` attached to one degree `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub e: MultiDegree,
    pub f: MultiDegree,
    pub g: MultiDegree,
    pub k: i64,
}

/// Families of witnesses, one per degree `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessFamily {
    /// On products with `A = {u_i >= 2}`:
    /// `E = sum_{j != i} max(a_j, r) e_j`, `F = e_i`, `G = sum max(r - a_j, 0) e_j`, `k = a_i`.
    FactorSquare { i: usize },
    /// On projective space: `E = e`, `F = 1`, `k = max(D - e, 0)`, `G = e + k - D`.
    ProjectiveShift { e: i64 },
    /// On Hirzebruch surfaces: `G = (d, 0)` with `d` the least value making
    /// `E = (d + u_1 - a u_2, 0)` nonzero, `F = (a, 1)`, `k = u_2`.
    HirzebruchFiber,
    /// Explicit witnesses per degree; degrees not listed have none.
    Table { entries: Vec<(MultiDegree, Witness)> },
}

impl WitnessFamily {
    pub fn witness(&self, ring: &CoxRing, r: u64, d: &MultiDegree) -> Option<Witness> {
        let p = ring.pic_rank();
        let c = d.coords();
        match self {
            WitnessFamily::FactorSquare { i } => {
                if *i >= p {
                    return None;
                }
                let r = r as i64;
                let mut e = vec![0; p];
                let mut g = vec![0; p];
                for j in 0..p {
                    if j != *i {
                        e[j] = c[j].max(r);
                        g[j] = (r - c[j]).max(0);
                    }
                }
                Some(Witness { e: MultiDegree::new(e), f: MultiDegree::unit(p, *i), g: MultiDegree::new(g), k: c[*i] })
            }
            WitnessFamily::ProjectiveShift { e } => {
                if p != 1 {
                    return None;
                }
                let k = (c[0] - e).max(0);
                Some(Witness {
                    e: MultiDegree::new(vec![*e]),
                    f: MultiDegree::new(vec![1]),
                    g: MultiDegree::new(vec![e + k - c[0]]),
                    k,
                })
            }
            WitnessFamily::HirzebruchFiber => {
                let Family::Hirzebruch { a } = ring.family() else { return None };
                let a = *a as i64;
                let dd = (1 - c[0] + a * c[1]).max(0);
                Some(Witness {
                    e: MultiDegree::new(vec![dd + c[0] - a * c[1], 0]),
                    f: MultiDegree::new(vec![a, 1]),
                    g: MultiDegree::new(vec![dd, 0]),
                    k: c[1],
                })
            }
            WitnessFamily::Table { entries } => entries.iter().find(|(k, _)| k == d).map(|(_, w)| w.clone()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SufficiencyStatus {
    Certified,
    CertifiedUpToL,
    Refuted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    pub status: SufficiencyStatus,
    #[serde(rename = "lBound")]
    pub l_bound: u32,
    pub window: DegreeBox,
    #[serde(rename = "degreesChecked")]
    pub degrees_checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

/// Degrees `D` with `dim S_D >= r`.
pub fn in_c(ring: &CoxRing, r: u64, d: &MultiDegree) -> bool {
    ring.dim_graded_piece(d).map(|n| n >= r).unwrap_or(false)
}

/// Whether every monomial of degree `target` is divisible by one of degree `f`.
fn multiplication_surjective(ring: &CoxRing, f: &MultiDegree, target: &MultiDegree) -> Result<bool> {
    let order = crate::algebra::MonomialOrder::grevlex(ring.nvars());
    let small: Vec<Monomial> = ring.monomials_of_degree(f, &order)?;
    let big = ring.monomials_of_degree(target, &order)?;
    Ok(big.iter().all(|m| small.iter().any(|s| s.divides(m))))
}

/// Checks the three conditions of the nonzerodivisor lemma for every `D` of
/// `C(r, X)` inside `window`, with witnesses drawn from `family`.
///
/// On products of projective spaces and on projective space the
/// multiplication maps are surjective for all `l` (a monomial of degree
/// `E + (l+1)F` always splits off a degree-`F` factor), so a clean pass is
/// `Certified`. On Hirzebruch surfaces surjectivity is checked for
/// `l <= l_bound` only.
pub fn sufficiency_witness_check(
    ring: &CoxRing,
    r: u64,
    set: &dyn Fn(&MultiDegree) -> bool,
    family: &WitnessFamily,
    window: &DegreeBox,
    l_bound: u32,
) -> Result<WitnessCheck> {
    let structural = !matches!(ring.family(), Family::Hirzebruch { .. });
    let mut checked = 0;
    let fail = |msg: String, checked: usize| {
        Ok(WitnessCheck {
            status: SufficiencyStatus::Refuted,
            l_bound,
            window: window.clone(),
            degrees_checked: checked,
            failure: Some(msg),
        })
    };
    for d in window.iter() {
        if !in_c(ring, r, &d) {
            continue;
        }
        checked += 1;
        let Some(w) = family.witness(ring, r, &d) else {
            return fail(format!("no witness for {d}"), checked);
        };
        if !ring.is_nef(&w.f) || !ring.is_nef(&w.g) {
            return Err(Error::Precondition(format!("witness for {d}: F = {} and G = {} must be nef", w.f, w.g)));
        }
        if w.k < 0 {
            return fail(format!("negative k at {d}"), checked);
        }
        let ef = w.e.checked_add(&w.f)?;
        if !(set(&w.e) && in_c(ring, r, &w.e)) {
            return fail(format!("E = {} is not in the set and C(r,X) at {d}", w.e), checked);
        }
        if !(set(&ef) && in_c(ring, r, &ef)) {
            return fail(format!("E + F = {ef} is not in the set and C(r,X) at {d}"), checked);
        }
        if w.e.checked_add(&w.f.scale(w.k))? != d.checked_add(&w.g)? {
            return fail(format!("E + kF differs from D + G at {d}"), checked);
        }
        if !structural {
            for l in 0..=l_bound as i64 {
                let src = w.e.checked_add(&w.f.scale(l))?;
                let tgt = src.checked_add(&w.f)?;
                if !multiplication_surjective(ring, &w.f, &tgt)? {
                    return fail(format!("multiplication S_F x S_{src} -> S_{tgt} is not onto at {d}"), checked);
                }
            }
        }
    }
    Ok(WitnessCheck {
        status: if structural { SufficiencyStatus::Certified } else { SufficiencyStatus::CertifiedUpToL },
        l_bound,
        window: window.clone(),
        degrees_checked: checked,
        failure: None,
    })
}

fn verdict(dim: u64, threshold: u64, conditional: bool) -> Verdict {
    if dim >= threshold {
        Verdict::Inconclusive
    } else if conditional {
        Verdict::ExcludedConditional
    } else {
        Verdict::Excluded
    }
}

/// `I + a_i^2` for the `i`-th factor (0-based) of a product of projective
/// spaces, compared with `r * dim X`.
pub fn tangent_criterion_factor(ideal: &Ideal, r: u64, i: usize) -> Result<CriterionReport> {
    let ring = ideal.ring();
    let d = match ring.family() {
        Family::ProductProjective { ns } => ns.len(),
        _ => return invalid("the factor criterion needs a product of projective spaces"),
    };
    if d < 2 {
        return invalid("the factor criterion needs at least two factors");
    }
    if i >= d {
        return invalid(format!("factor index {} out of range", i + 1));
    }
    let j = truncation_ideal(ideal, &DegreeSet::everything(d), &DegreeSet::coordinate_at_least(d, i, 2))?;
    let dim = hom_dim_degree_zero(&j)?;
    let threshold = slip_dim(ring, r);
    Ok(CriterionReport {
        criterion: "ts-factor".into(),
        i: Some(i + 1),
        dim,
        threshold,
        verdict: verdict(dim, threshold, false),
        certificate: CertificateGrade::Builtin,
        sufficiency: None,
    })
}

/// Certificate offered for the sufficiency of `B \ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sufficiency {
    /// Only for `B = N^d`, `A = {u_i >= 2}` on a product.
    BuiltinFactorSquare {
        i: usize,
    },
    Witness {
        family: WitnessFamily,
        window: DegreeBox,
        l_bound: u32,
    },
    UserAsserted,
}

fn is_factor_square(ring: &Arc<CoxRing>, a: &DegreeSet, b: &DegreeSet, i: usize) -> bool {
    let p = ring.pic_rank();
    matches!(ring.family(), Family::ProductProjective { ns } if ns.len() >= 2)
        && i < p
        && *b == DegreeSet::everything(p)
        && *a == DegreeSet::coordinate_at_least(p, i, 2)
}

pub fn tangent_criterion_custom(
    ideal: &Ideal,
    r: u64,
    a: &DegreeSet,
    b: &DegreeSet,
    sufficiency: &Sufficiency,
) -> Result<CriterionReport> {
    let ring = ideal.ring();
    let p = ring.pic_rank();
    if a.rank() != p || b.rank() != p {
        return Err(Error::DimensionMismatch { expected: p, found: a.rank().max(b.rank()) });
    }
    if !a.is_subset_of(b) {
        return invalid("the set A must be contained in B");
    }
    let (grade, check) = match sufficiency {
        Sufficiency::BuiltinFactorSquare { i } => {
            if !is_factor_square(ring, a, b, *i) {
                return invalid("the built-in certificate covers only B = N^d and A = {u_i >= 2} on products");
            }
            (CertificateGrade::Builtin, None)
        }
        Sufficiency::Witness { family, window, l_bound } => {
            let member = |d: &MultiDegree| b.contains(d) && !a.contains(d);
            let check = sufficiency_witness_check(ring, r, &member, family, window, *l_bound)?;
            if check.status == SufficiencyStatus::Refuted {
                return precondition(format!(
                    "sufficiency witness refuted: {}",
                    check.failure.clone().unwrap_or_default()
                ));
            }
            (CertificateGrade::Witness, Some(check))
        }
        Sufficiency::UserAsserted => (CertificateGrade::UserAsserted, None),
    };
    let j = truncation_ideal(ideal, b, a)?;
    let dim = hom_dim_degree_zero(&j)?;
    let threshold = slip_dim(ring, r);
    Ok(CriterionReport {
        criterion: "ts-custom".into(),
        i: None,
        dim,
        threshold,
        verdict: verdict(dim, threshold, grade == CertificateGrade::UserAsserted),
        certificate: grade,
        sufficiency: check,
    })
}
