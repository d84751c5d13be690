use std::sync::Arc;

use crate::algebra::{CoxRing, Monomial, MonomialOrder, MultiDegree, Polynomial};
use crate::error::{invalid, Result};
use crate::groebner::Ideal;
use crate::ringmaps::{segre_map, GradedRingMap};

/// The ideal on `P^1 x P^1` with saturation `(b0, a0^r)` and the companion
/// map from `P^{2r+1}` given by the monomials of degree `(1, r)`.
#[derive(Clone, Debug)]
pub struct P1P1Construction {
    pub r: u64,
    pub ideal: Ideal,
    pub saturation: Ideal,
    pub order: MonomialOrder,
    pub map: GradedRingMap,
}

/// Lex with `b0 > b1 > a0 > a1`.
pub fn p1p1_order() -> MonomialOrder {
    MonomialOrder::Lex(vec![2, 3, 0, 1])
}

/// `I_(a,b)`: the `(a+1)(b+1) - r` smallest monomials of `J_(a,b)` in
/// `p1p1_order`, or nothing when that count is not positive.
pub fn p1p1_piece(ring: &CoxRing, r: u64, a: i64, b: i64) -> Result<Vec<Monomial>> {
    let order = p1p1_order();
    let count = (a + 1) * (b + 1) - r as i64;
    if count <= 0 {
        return Ok(Vec::new());
    }
    let r32 = r as u32;
    let mut in_j: Vec<Monomial> = ring
        .monomials_of_degree(&MultiDegree::new(vec![a, b]), &order)?
        .into_iter()
        .filter(|m| m.exp(2) > 0 || m.exp(0) >= r32)
        .collect();
    in_j.reverse();
    in_j.truncate(count as usize);
    Ok(in_j)
}

pub fn construct_p1p1_ideal(r: u64) -> Result<P1P1Construction> {
    if r < 4 {
        return invalid("the construction is used for r >= 4");
    }
    let ring = Arc::new(CoxRing::product_projective(&[1, 1]));
    let n = ring.nvars();
    let order = p1p1_order();
    let saturation =
        Ideal::new(ring.clone(), vec![Polynomial::var(n, 2), Polynomial::monomial(Monomial::var(n, 0).pow(r as u32))])?;
    // Minimal generators live in degrees (a, b) with a <= r and b <= r + 1:
    // past a = r - 1 the pieces equal those of J, and for larger b every
    // piece is the previous one times b0 plus multiples of b1.
    let top = r as i64 + 1;
    let mut gens: Vec<Monomial> = Vec::new();
    for a in 0..=top {
        for b in 0..=top {
            gens.extend(p1p1_piece(&ring, r, a, b)?);
        }
    }
    let ideal = Ideal::from_monomials(ring.clone(), gens);
    let u = MultiDegree::new(vec![1, r as i64]);
    let map = segre_map(ring, &u, r, &order)?;
    Ok(P1P1Construction { r, ideal, saturation, order, map })
}
