//! Multigraded ideals in Cox rings of smooth projective toric varieties.
//!
//! The crate covers exact-rational polynomial arithmetic, Groebner bases for
//! ideals and submodules of free modules, Hilbert functions over multidegree
//! windows, lifting constructions between Cox rings, and the tangent-space
//! criteria used to decide whether an ideal of points lies off the component
//! of reduced point configurations.

pub mod algebra;
pub mod constructions;
pub mod criteria;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod ringmaps;

pub use algebra::{CoxRing, Family, Monomial, MonomialOrder, MultiDegree, Polynomial, Rational};
pub use error::{Error, Result};
pub use groebner::Ideal;
