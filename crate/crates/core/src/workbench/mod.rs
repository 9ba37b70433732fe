//! Serialization, instance generators and the command-line surface.

pub mod cli;
pub mod gen;
pub mod io;
pub mod rng;
pub mod verify;
