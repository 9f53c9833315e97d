//! Exact computations with relations in small symmetric monoidal categories.
//!
//! Objects are finite sets or finite-dimensional rational vector spaces
//! (under direct sum or tensor product), morphisms are tables or exact
//! rational matrices, and every law is checked on an explicit finite
//! universe of objects, producing a [`report::Report`].

pub mod category;
pub mod error;
pub mod matrix;
pub mod monoidal;
pub mod report;
pub mod comonoid;
pub mod ccat;
pub mod relation;
pub mod products;
pub mod algebra;
pub mod quantization;
pub mod io;
pub mod cli;
