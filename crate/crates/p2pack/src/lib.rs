//! DIMACS IO, seeded generators, corpus verification and the command-line
//! front end for [`p2pack_core`].

pub mod cli;
pub mod gen;
pub mod io;
pub mod verify;

pub use p2pack_core as core;
