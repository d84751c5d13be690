//! Groebner bases for ideals and submodules of free modules, and the ideal
//! operations built on them.

mod engine;
mod ideal;
mod module;

pub(crate) use engine::{Engine, Vector};
pub(crate) use ideal::eliminate_tail;
pub use ideal::{groebner_basis_of, minimalize_monomials, normal_form_of, Ideal};
pub use module::{ModuleElement, ModuleOrder, Submodule};

pub(crate) fn engine_reducers(v: Vec<Vector>) -> engine::Reducers {
    engine::Reducers::new(v)
}
