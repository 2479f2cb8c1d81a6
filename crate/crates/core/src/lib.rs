//! Cyclic Maya diagrams, rational solutions of odd dressing chains and of
//! the A_{2n} Painlevé systems, built from Hermite pseudo-Wronskians and
//! verified in exact arithmetic.

pub mod error;
pub mod exact;
pub mod maya;
pub mod cyclic;

pub use error::{Error, Result};
pub mod pseudo_wronskian;
pub mod report;
pub mod chain;
pub mod painleve;
pub mod atlas;
