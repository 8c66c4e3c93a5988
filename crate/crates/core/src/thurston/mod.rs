//! Thurston products of two multitwists and the end-to-end certificates
//! tying bi-Perron units to Coxeter radii and stretch factors.

pub mod certificate;
pub mod generate;
pub mod product;

pub use certificate::{
    biperron_target, realize_biperron, realize_conjugate_tree, realize_from_step_one, BiPerronTarget,
    RealizationCertificate, TreeRealization,
};
pub use generate::{epsilon_bound, generate_small_biperron, SmallBiPerron, SmallBiPerronBatch};
pub use product::{thurston_product, ThurstonOutcome, ThurstonProduct};
