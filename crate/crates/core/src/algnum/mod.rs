//! Perron, bi-Perron and Salem classification, powers, and trace fields.

pub mod classify;
pub mod modulus;
pub mod powers;

pub use classify::{classify, Classification};
pub use modulus::{max_root_modulus, roots_in_circle_or_line};
pub use powers::{leading_power, minimal_poly_power, power_trace, trace_field_report, ParityCase, TraceFieldReport};
