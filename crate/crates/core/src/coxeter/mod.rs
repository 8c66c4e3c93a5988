//! Bipartite Coxeter transformations of simply-laced diagrams.

pub mod certify;
pub mod diagrams;
pub mod relation;
pub mod transform;

pub use certify::certify_coxeter_eigenvector;
pub use diagrams::{a_n, d_n, e_n, named_graph};
pub use relation::{paired_product, verify_spectra_relation, SpectraRelation, RESIDUAL_TOLERANCE};
pub use transform::{
    acampo_check, cartan_matrix, coxeter_element, coxeter_spectral_radius, coxeter_transform,
    coxeter_transform_ordered, eigenvalues_in_circle_or_positive, reflection, CoxeterTransform, PartOrder,
};
