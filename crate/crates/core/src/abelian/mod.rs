//! Exact integer linear algebra: Smith normal forms with transformation
//! matrices, cokernels, induced maps between cokernels and `Ext(-, Z)`.

mod group;
mod hom;
mod iso;
pub mod json;
mod matrix;
mod smith;

pub use group::{
    cokernel, enumeration_cap, set_enumeration_cap, Cokernel, CyclicProduct, FinAbGroup, DEFAULT_ENUMERATION_CAP,
};
pub use hom::{conjugated_map, induced_map, induced_map_between, GroupHom};
pub use iso::{compatible_target_isos, isomorphisms, match_up_to_isomorphism, ArrowMatch};
pub use matrix::Matrix;
pub use smith::{smith_normal_form, unimodular_inverse, SmithDecomposition};
