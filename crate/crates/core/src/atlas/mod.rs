//! Zero atlases of the special polynomial families.

pub mod complex;
mod emit;
mod family;
mod roots;

pub use emit::{emit, render, significant_digits, to_csv, to_json, to_svg, RootFormat};
pub use family::{family_polynomial, is_triangular, WronskianFamilySpec};
pub use roots::{find_roots, RootSet, MAX_PRECISION};
