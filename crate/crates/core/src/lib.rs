//! Qualitative spatial reasoning over the eleven RCC11 relations.

pub mod disk2d;
pub mod dyadic;
pub mod interval1d;
pub mod lattice;
pub mod netcsp;
pub mod relalg;
pub mod verify;
