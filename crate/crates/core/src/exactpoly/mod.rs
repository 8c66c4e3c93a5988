//! Exact arithmetic on integer polynomials and their roots.

pub mod algebraic;
pub mod complex;
pub mod factor;
pub mod interval;
pub mod numfield;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod sturm;
pub mod trace;

pub use interval::RatInterval;
pub use poly::IntPoly;
pub use resultant::{pair_product_polynomial, power_polynomial, resultant, resultant_eliminate};
pub use sturm::{isolate_real_roots, sturm_real_root_count, SturmSequence};
pub use factor::{factor, irreducible_factors, is_irreducible};
pub use trace::{trace_transform, trace_transform_squarefree, untrace_transform};
pub use algebraic::AlgebraicReal;
pub use complex::{isolate_roots, ComplexDisk, RootRegion};
pub use numfield::{FieldElem, NumberField};
