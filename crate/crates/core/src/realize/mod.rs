//! Constructive realization: symmetric matrices with a prescribed
//! spectrum, the positive integral blocks `Q_k`, bipartite graphs with a
//! given spectral radius, and trees with a given eigenvalue.

pub mod hoffman;
pub mod pipeline;
pub mod step_one;
pub mod trees;

pub use hoffman::{bipartite_double, certify_same_radius, equitable_blowup, hoffman_bipartite};
pub use pipeline::{
    block_qk, block_qk_by_powers, build_m, dickson_minpoly, find_realizing_k, integral, inverse_m, run_pipeline,
    PipelineTrace,
};
pub use step_one::{
    accept_q, accept_supplied_q, cayley_orthogonal_conjugate, cayley_seeds, find_symmetric_q, top_root, StepOne,
    StepOneConfig, StepOneSource,
};
pub use trees::find_tree_with_eigenvalue;
