//! Exact combinatorics of level-2 Fock spaces, Kashiwara crystals, Lusztig symbols
//! and Heisenberg operators, applied to unipotent representations of finite unitary
//! groups and groups of type B/C.

pub mod error;
pub mod partition;
pub mod residue;
pub mod weight;
pub mod fock;
pub mod crystal;
pub mod symbol;
pub mod symfun;
pub mod linalg;
pub mod heisenberg;
pub mod groups;

pub use error::{Error, Result};
