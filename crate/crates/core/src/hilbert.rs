//! Hilbert functions of graded quotients and comparison with `min(dim S_D, r)`.

use serde::Serialize;

use crate::algebra::{CoxRing, Monomial, MonomialOrder, MultiDegree, Polynomial};
use crate::error::{invalid, Error, Result};
use crate::groebner::{normal_form_of, Ideal};

/// Degrees between `lower` and `upper`, inclusive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeBox {
    pub lower: MultiDegree,
    pub upper: MultiDegree,
}

impl DegreeBox {
    pub fn new(lower: MultiDegree, upper: MultiDegree) -> Result<Self> {
        if !lower.le(&upper)? {
            return invalid(format!("empty degree box {lower}..{upper}"));
        }
        Ok(DegreeBox { lower, upper })
    }

    /// The box `0..upper`.
    pub fn up_to(upper: MultiDegree) -> Result<Self> {
        DegreeBox::new(MultiDegree::zero(upper.rank()), upper)
    }

    pub fn contains(&self, d: &MultiDegree) -> bool {
        self.lower.le(d).unwrap_or(false) && d.le(&self.upper).unwrap_or(false)
    }

    /// Lexicographic iteration; the last coordinate moves fastest.
    pub fn iter(&self) -> impl Iterator<Item = MultiDegree> + '_ {
        let lo = self.lower.coords().to_vec();
        let hi = self.upper.coords().to_vec();
        let mut cur = Some(lo.clone());
        std::iter::from_fn(move || {
            let out = cur.clone()?;
            let mut next = out.clone();
            let mut i = next.len();
            loop {
                if i == 0 {
                    cur = None;
                    break;
                }
                i -= 1;
                if next[i] < hi[i] {
                    next[i] += 1;
                    cur = Some(next);
                    break;
                }
                next[i] = lo[i];
            }
            Some(MultiDegree::new(out))
        })
    }
}

/// `min(dim S_D, r)`, the Hilbert function of `r` general points.
pub fn h_target(ring: &CoxRing, r: u64, d: &MultiDegree) -> Result<u64> {
    Ok(ring.dim_graded_piece(d)?.min(r))
}

fn lead_monomials(ideal: &Ideal, order: &MonomialOrder) -> Result<Vec<Monomial>> {
    let gb = ideal.groebner_basis(order)?;
    Ok(gb.iter().map(|g| g.leading_monomial(order).expect("nonzero").clone()).collect())
}

/// Monomials of degree `d` outside the initial ideal, largest first.
pub fn standard_monomials(ideal: &Ideal, d: &MultiDegree, order: &MonomialOrder) -> Result<Vec<Monomial>> {
    let leads = lead_monomials(ideal, order)?;
    let mons = ideal.ring().monomials_of_degree(d, order)?;
    Ok(mons.into_iter().filter(|m| !leads.iter().any(|l| l.divides(m))).collect())
}

/// `dim (S/I)_D`, counted with grevlex standard monomials.
pub fn hf_quotient(ideal: &Ideal, d: &MultiDegree) -> Result<u64> {
    hf_quotient_with_order(ideal, d, &ideal.default_order())
}

pub fn hf_quotient_with_order(ideal: &Ideal, d: &MultiDegree, order: &MonomialOrder) -> Result<u64> {
    if ideal.is_zero() {
        return ideal.ring().dim_graded_piece(d);
    }
    Ok(standard_monomials(ideal, d, order)?.len() as u64)
}

/// `dim I_D`.
pub fn ideal_dim(ideal: &Ideal, d: &MultiDegree) -> Result<u64> {
    Ok(ideal.ring().dim_graded_piece(d)? - hf_quotient(ideal, d)?)
}

/// A basis of `I_D`: `m - NF(m)` for each degree-`D` monomial `m` of the
/// grevlex initial ideal, largest first.
pub fn ideal_piece_basis(ideal: &Ideal, d: &MultiDegree) -> Result<Vec<Polynomial>> {
    let order = ideal.default_order();
    let leads = lead_monomials(ideal, &order)?;
    let gb = ideal.gb();
    let mons = ideal.ring().monomials_of_degree(d, &order)?;
    Ok(mons
        .into_iter()
        .filter(|m| leads.iter().any(|l| l.divides(m)))
        .map(|m| {
            let p = Polynomial::monomial(m);
            &p - &normal_form_of(&p, &gb, &order)
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HfValue {
    pub degree: MultiDegree,
    pub hf: u64,
    pub target: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HfReport {
    pub ok: bool,
    pub window: DegreeBox,
    pub values: Vec<HfValue>,
    #[serde(rename = "firstFailure")]
    pub first_failure: Option<MultiDegree>,
}

/// Window used when none is given: from 0 up to `(r,...,r)` plus the
/// componentwise maximum of the generator degrees.
pub fn default_window(ideal: &Ideal, r: u64) -> Result<DegreeBox> {
    let p = ideal.ring().pic_rank();
    let mut top = MultiDegree::zero(p);
    for g in ideal.generators() {
        if let Some(d) = g.degree(ideal.ring())? {
            top = top.join(&d)?;
        }
    }
    let upper = top.checked_add(&MultiDegree::new(vec![r as i64; p]))?;
    DegreeBox::up_to(upper)
}

/// Compares the Hilbert function of `S/I` with `min(dim S_D, r)` on a window.
pub fn hf_matches_target(ideal: &Ideal, r: u64, window: Option<&DegreeBox>) -> Result<HfReport> {
    if r == 0 {
        return invalid("r must be positive");
    }
    let window = match window {
        Some(w) => w.clone(),
        None => default_window(ideal, r)?,
    };
    if window.lower.rank() != ideal.ring().pic_rank() {
        return Err(Error::DimensionMismatch { expected: ideal.ring().pic_rank(), found: window.lower.rank() });
    }
    let mut values = Vec::new();
    let mut first_failure = None;
    for d in window.iter() {
        let hf = hf_quotient(ideal, &d)?;
        let target = h_target(ideal.ring(), r, &d)?;
        if hf != target && first_failure.is_none() {
            first_failure = Some(d.clone());
        }
        values.push(HfValue { degree: d, hf, target });
    }
    Ok(HfReport { ok: first_failure.is_none(), window, values, first_failure })
}
