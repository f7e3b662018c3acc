//! Exact computations with finite-dimensional algebras.

pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod domdim;
pub mod error;
pub mod exactla;
pub mod homalg;
pub mod io;
pub mod modrep;
pub mod quiver;
pub mod report;
pub mod repro;

pub use error::{Error, Result};
