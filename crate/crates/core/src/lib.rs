//! Exact lattice-polytope toolkit for smooth toric Fano varieties.

pub mod constructions;
pub mod fibrelike;
pub mod io;
pub mod lattice_core;
pub mod mori;
pub mod polytope;
pub mod report;
pub mod symmetry;
pub mod toric;

pub use polytope::{Face, Facet, LatticeVector, Polytope, PolytopeError};
