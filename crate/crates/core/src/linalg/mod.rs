//! Exact matrices, graphs and certified spectra.

pub mod atlas;
pub mod graph;
pub mod matrix;
pub mod spectral;

pub use atlas::{connected_bipartite_graphs, tree_canonical, trees, TreeCatalog};
pub use graph::{BipartiteGraph, Graph};
pub use matrix::{IntMatrix, Matrix, RatMatrix, SymRatMatrix};
pub use spectral::{
    algebraic_multiplicity, certified_positive_eigenvector, is_eigenvalue, spectral_radius,
    EigenvectorCertificate,
};
