//! Explicit ideal constructions: the apolarity lift on projective space,
//! the family on `P^1 x P^1`, and the lift from a factor to a product.

mod apolarity;
mod dual;
mod p1p1;
mod product_lift;

pub use apolarity::{apolarity_lift, ApolarityCheck, ApolarityLift};
pub use dual::{contract, dual_monomials, perp, DualSpaceBasis};
pub use p1p1::{construct_p1p1_ideal, p1p1_order, p1p1_piece, P1P1Construction};
pub use product_lift::{ProductLiftCheck, ProductLiftPlan, Region};
