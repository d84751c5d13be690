use serde::Serialize;

use super::dual::perp;
use crate::algebra::{Family, MonomialOrder, MultiDegree, Polynomial};
use crate::error::{invalid, precondition, Result};
use crate::groebner::Ideal;
use crate::hilbert::{h_target, hf_quotient, ideal_dim, ideal_piece_basis};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ApolarityCheck {
    /// The pieces `W_k^perp` and `J_{b+1}` generate nothing extra on `[0, b+1]`.
    pub closure: bool,
    /// `H_{S/I} = h_{r,P^n}` on `[0, window]`.
    pub hilbert_function: bool,
    /// `I_k = J_k` for `b < k <= window`.
    pub agrees_above_b: bool,
    pub window: i64,
}

impl ApolarityCheck {
    pub fn ok(&self) -> bool {
        self.closure && self.hilbert_function && self.agrees_above_b
    }
}

#[derive(Clone, Debug)]
pub struct ApolarityLift {
    pub ideal: Ideal,
    pub a: i64,
    pub b: i64,
    /// Number of largest dual monomials added in each degree `a..=b`.
    pub added: Vec<usize>,
    pub check: ApolarityCheck,
}

/// Lifts a saturated ideal of `r` points in `P^n` to an ideal with the
/// Hilbert function of `r` general points and the same saturation.
///
/// In each degree `k` between `a` (first degree with `dim S_k >= r`) and `b`
/// (last degree with `H_{S/J}(k) != r`), `J^perp_k` is enlarged by the
/// largest dual monomials until it has dimension `r`; `I_k` is its
/// annihilator. Above `b` the ideal agrees with `J`.
pub fn apolarity_lift(j: &Ideal, r: u64, order: Option<&MonomialOrder>) -> Result<ApolarityLift> {
    let ring = j.ring();
    if !matches!(ring.family(), Family::Projective { .. }) {
        return invalid("the apolarity lift works on projective space");
    }
    if r == 0 {
        return invalid("r must be positive");
    }
    let lex = MonomialOrder::lex(ring.nvars());
    let order = order.unwrap_or(&lex);
    if !order.is_total_on(ring.nvars()) {
        return invalid("the order must mention every variable once");
    }
    if !j.is_saturated()? {
        return precondition("J is not saturated");
    }
    let deg = |k: i64| MultiDegree::new(vec![k]);
    let window = r as i64 + 1;
    let hf: Vec<u64> = (0..=window).map(|k| hf_quotient(j, &deg(k))).collect::<Result<_>>()?;
    if hf.windows(2).any(|w| w[0] > w[1]) {
        return precondition(format!("H_(S/J) is not nondecreasing: {hf:?}"));
    }
    if hf[window as usize - 2..].iter().any(|&h| h != r) {
        return precondition(format!("S/J does not have Hilbert polynomial {r}: {hf:?}"));
    }
    let b = (0..=window).rev().find(|&k| hf[k as usize] != r).unwrap_or(-1);
    if b + 1 >= r as i64 {
        return invalid(format!("b + 1 = {} must be smaller than r", b + 1));
    }
    let a = (0..=window).find(|&k| ring.dim_graded_piece(&deg(k)).is_ok_and(|d| d >= r)).unwrap_or(window);

    let mut gens: Vec<Polynomial> = Vec::new();
    let mut pieces: Vec<(i64, usize)> = Vec::new();
    let mut added = Vec::new();
    for k in a..=b {
        let mut w = perp(j, &deg(k), order)?;
        let mut count = 0;
        let monomials = w.monomials().to_vec();
        for m in &monomials {
            if w.dim() as u64 >= r {
                break;
            }
            w = w.with_monomial(m);
            count += 1;
        }
        added.push(count);
        let ann = w.annihilator();
        pieces.push((k, ann.len()));
        gens.extend(ann);
    }
    gens.extend(ideal_piece_basis(j, &deg(b + 1))?);
    let top = b + 1;
    for g in j.gb().iter() {
        if let Some(d) = g.degree(ring)? {
            if d.coords()[0] > top {
                gens.push(g.clone());
            }
        }
    }
    let ideal = Ideal::new(ring.clone(), gens)?;

    let mut closure = true;
    for k in 0..=top {
        let expected = if k < a {
            0
        } else if k <= b {
            pieces.iter().find(|(d, _)| *d == k).map_or(0, |p| p.1 as u64)
        } else {
            ideal_dim(j, &deg(k))?
        };
        if ideal_dim(&ideal, &deg(k))? != expected {
            closure = false;
        }
    }
    let mut hilbert_function = true;
    for k in 0..=window {
        if hf_quotient(&ideal, &deg(k))? != h_target(ring, r, &deg(k))? {
            hilbert_function = false;
        }
    }
    let mut agrees_above_b = j.contains_ideal(&ideal)?;
    for k in top..=window {
        if ideal_dim(&ideal, &deg(k))? != ideal_dim(j, &deg(k))? {
            agrees_above_b = false;
        }
    }
    Ok(ApolarityLift {
        ideal,
        a,
        b,
        added,
        check: ApolarityCheck { closure, hilbert_function, agrees_above_b, window },
    })
}
