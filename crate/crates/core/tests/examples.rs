mod classify {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/classify.rs"));
}

mod trace_fields {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/trace_fields.rs"));
}

mod realize_golden {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/realize_golden.rs"));
}

mod salem_pipeline {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/salem_pipeline.rs"));
}

mod coxeter_lehmer {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/coxeter_lehmer.rs"));
}

mod spectra_relation {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/spectra_relation.rs"));
}

mod acampo_trees {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/acampo_trees.rs"));
}

mod thurston_matrix {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/thurston_matrix.rs"));
}

mod tree_realize {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/tree_realize.rs"));
}

mod small_biperron {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/small_biperron.rs"));
}

mod certificate_cache {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/certificate_cache.rs"));
}

mod graph_atlas {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/graph_atlas.rs"));
}

#[test]
fn classify_runs() {
    classify::run_example().expect("classify example should run");
}

#[test]
fn trace_fields_runs() {
    trace_fields::run_example().expect("trace_fields example should run");
}

#[test]
fn realize_golden_runs() {
    realize_golden::run_example().expect("realize_golden example should run");
}

#[test]
fn salem_pipeline_runs() {
    salem_pipeline::run_example().expect("salem_pipeline example should run");
}

#[test]
fn coxeter_lehmer_runs() {
    coxeter_lehmer::run_example().expect("coxeter_lehmer example should run");
}

#[test]
fn spectra_relation_runs() {
    spectra_relation::run_example().expect("spectra_relation example should run");
}

#[test]
fn acampo_trees_runs() {
    acampo_trees::run_example().expect("acampo_trees example should run");
}

#[test]
fn thurston_matrix_runs() {
    thurston_matrix::run_example().expect("thurston_matrix example should run");
}

#[test]
fn tree_realize_runs() {
    tree_realize::run_example().expect("tree_realize example should run");
}

#[test]
fn small_biperron_runs() {
    small_biperron::run_example().expect("small_biperron example should run");
}

#[test]
fn certificate_cache_runs() {
    certificate_cache::run_example().expect("certificate_cache example should run");
}

#[test]
fn graph_atlas_runs() {
    graph_atlas::run_example().expect("graph_atlas example should run");
}
