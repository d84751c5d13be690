use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{CoxRing, Monomial, MonomialOrder, MultiDegree, Polynomial};
use crate::error::{invalid, precondition, Result};
use crate::groebner::Ideal;
use crate::hilbert::{h_target, hf_quotient, ideal_dim, ideal_piece_basis, DegreeBox};
use crate::linalg::RowReducer;

/// Which of the three cases defines a piece of the lifted ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Region {
    /// `h_{r,X}(D) = r`.
    A,
    /// `h_{r,X}(D) < r = h_{r,XxY}(D,E)`.
    B,
    /// `h_{r,XxY}(D,E) < r`.
    C,
}

/// Lift of an ideal on `X` with the Hilbert function of `r` general points
/// to one on `X x Y` restricting back to it.
///
/// Monomials of the product are compared first by their `Y` part and then by
/// their `X` part.
#[derive(Clone, Debug)]
pub struct ProductLiftPlan {
    source: Ideal,
    y: Arc<CoxRing>,
    product: Arc<CoxRing>,
    r: u64,
    x_order: MonomialOrder,
    y_order: MonomialOrder,
    order: MonomialOrder,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ProductLiftCheck {
    pub window: DegreeBox,
    /// The generated ideal has exactly the prescribed pieces.
    pub closure: bool,
    pub hilbert_function: bool,
    /// `J_(D,0) = (I_X)_D`.
    pub restriction: bool,
}

impl ProductLiftCheck {
    pub fn ok(&self) -> bool {
        self.closure && self.hilbert_function && self.restriction
    }
}

impl ProductLiftPlan {
    /// `window` bounds the degrees of `X` on which the Hilbert function of
    /// `I_X` is checked.
    pub fn new(
        source: Ideal,
        y: Arc<CoxRing>,
        r: u64,
        x_order: Option<MonomialOrder>,
        y_order: Option<MonomialOrder>,
        window: &DegreeBox,
    ) -> Result<Self> {
        let x = source.ring().clone();
        let product = Arc::new(x.product(&y)?);
        for d in window.iter() {
            if hf_quotient(&source, &d)? != h_target(&x, r, &d)? {
                return precondition(format!("S[X]/I_X does not have the Hilbert function of {r} points at {d}"));
            }
        }
        let x_order = x_order.unwrap_or_else(|| x.default_product_order());
        let y_order = y_order.unwrap_or_else(|| y.default_product_order());
        if !x_order.is_total_on(x.nvars()) || !y_order.is_total_on(y.nvars()) {
            return invalid("orders must mention every variable once");
        }
        let nx = x.nvars();
        let x_map: Vec<usize> = (0..nx).collect();
        let y_map: Vec<usize> = (nx..nx + y.nvars()).collect();
        let order = MonomialOrder::block(y_order.remap(&y_map), x_order.remap(&x_map));
        Ok(ProductLiftPlan { source, y, product, r, x_order, y_order, order })
    }

    pub fn product_ring(&self) -> &Arc<CoxRing> {
        &self.product
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn x_order(&self) -> &MonomialOrder {
        &self.x_order
    }

    pub fn y_order(&self) -> &MonomialOrder {
        &self.y_order
    }

    fn split(&self, d: &MultiDegree) -> (MultiDegree, MultiDegree) {
        let px = self.source.ring().pic_rank();
        let c = d.coords();
        (MultiDegree::new(c[..px].to_vec()), MultiDegree::new(c[px..].to_vec()))
    }

    pub fn region(&self, d: &MultiDegree) -> Result<Region> {
        let (dx, _) = self.split(d);
        Ok(if h_target(self.source.ring(), self.r, &dx)? == self.r {
            Region::A
        } else if h_target(&self.product, self.r, d)? == self.r {
            Region::B
        } else {
            Region::C
        })
    }

    /// A basis of `J_d`.
    pub fn piece(&self, d: &MultiDegree) -> Result<Vec<Polynomial>> {
        let (dx, dy) = self.split(d);
        let x = self.source.ring();
        let nx = x.nvars();
        let n = self.product.nvars();
        let x_vars: Vec<usize> = (0..nx).collect();
        let y_vars: Vec<usize> = (nx..n).collect();
        match self.region(d)? {
            Region::C => Ok(Vec::new()),
            Region::B => {
                let mut mons = self.product.monomials_of_degree(d, &self.order)?;
                mons.truncate(mons.len().saturating_sub(self.r as usize));
                Ok(mons.into_iter().map(Polynomial::monomial).collect())
            }
            Region::A => {
                let ys = self.y.monomials_of_degree(&dy, &self.y_order)?;
                let xs = x.monomials_of_degree(&dx, &self.x_order)?;
                let Some((smallest, rest)) = ys.split_last() else { return Ok(Vec::new()) };
                let mut out = Vec::new();
                for ym in rest {
                    let ym = ym.embed(&y_vars, n);
                    for xm in &xs {
                        out.push(Polynomial::monomial(ym.mul(&xm.embed(&x_vars, n))));
                    }
                }
                let low = Polynomial::monomial(smallest.embed(&y_vars, n));
                for g in ideal_piece_basis(&self.source, &dx)? {
                    out.push(&low * &g.rename(&x_vars, n));
                }
                Ok(out)
            }
        }
    }

    /// Generators harvested from the pieces in `window`: a piece contributes
    /// the elements not already spanned by variable multiples of lower pieces.
    pub fn generators(&self, window: &DegreeBox) -> Result<Vec<Polynomial>> {
        let n = self.product.nvars();
        let order = MonomialOrder::grevlex(n);
        let mut gens: Vec<Polynomial> = Vec::new();
        let mut bases: Vec<(MultiDegree, Vec<Polynomial>)> = Vec::new();
        for d in window.iter() {
            let piece = self.piece(&d)?;
            if piece.is_empty() {
                continue;
            }
            let monos = self.product.monomials_of_degree(&d, &order)?;
            let coords = |p: &Polynomial| -> Vec<(usize, crate::algebra::Rational)> {
                p.terms()
                    .iter()
                    .map(|(m, c)| (monos.binary_search_by(|b| order.compare(m, b)).expect("homogeneous"), c.clone()))
                    .collect()
            };
            let mut red = RowReducer::new();
            for v in 0..n {
                let vd = self.product.var_degree(v);
                let Ok(prev) = d.checked_sub(vd) else { continue };
                if let Some((_, basis)) = bases.iter().find(|(pd, _)| *pd == prev) {
                    let var = Monomial::var(n, v);
                    for g in basis {
                        red.insert(coords(&g.mul_monomial(&var)));
                    }
                }
            }
            for g in &piece {
                if red.insert(coords(g)) {
                    gens.push(g.clone());
                }
            }
            bases.push((d, piece));
        }
        Ok(gens)
    }

    pub fn ideal(&self, window: &DegreeBox) -> Result<Ideal> {
        Ideal::new(self.product.clone(), self.generators(window)?)
    }

    /// Checks the generated ideal against the prescribed pieces on `window`.
    pub fn check(&self, ideal: &Ideal, window: &DegreeBox) -> Result<ProductLiftCheck> {
        let mut closure = true;
        let mut hilbert_function = true;
        let mut restriction = true;
        let py = self.y.pic_rank();
        for d in window.iter() {
            let piece = self.piece(&d)?;
            let dim = ideal_dim(ideal, &d)?;
            if dim != piece.len() as u64 || !piece.iter().all(|g| ideal.contains(g).unwrap_or(false)) {
                closure = false;
            }
            if hf_quotient(ideal, &d)? != h_target(&self.product, self.r, &d)? {
                hilbert_function = false;
            }
            let (dx, dy) = self.split(&d);
            if dy == MultiDegree::zero(py) && dim != ideal_dim(&self.source, &dx)? {
                restriction = false;
            }
        }
        Ok(ProductLiftCheck { window: window.clone(), closure, hilbert_function, restriction })
    }
}
